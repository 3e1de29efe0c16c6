// Truncated integer power series with exact 128-bit coefficients, plus the
// two sparse passes the t-core generating function needs: multiplication by
// prod (1 - q^n) and division by it, both via the pentagonal number series.
#pragma once

#include <cstddef>
#include <vector>

#include "congdim/arith.hpp"

namespace congdim {

namespace detail {

// Nonconstant terms of prod_{n>=1} (1 - x^n) = 1 + sum_j (-1)^j
// (x^{j(3j-1)/2} + x^{j(3j+1)/2}), degrees <= order, ascending.
inline std::vector<std::pair<i64, int>> pentagonal_terms(i64 order) {
    std::vector<std::pair<i64, int>> terms;
    for (i64 j = 1;; ++j) {
        i64 g1 = j * (3 * j - 1) / 2;
        if (g1 > order) break;
        int sign = (j % 2 == 1) ? -1 : 1;
        terms.push_back({g1, sign});
        i64 g2 = j * (3 * j + 1) / 2;
        if (g2 <= order) terms.push_back({g2, sign});
    }
    return terms;
}

// c *= prod (1 - x^n), in place.
inline void multiply_by_euler(std::vector<i128>& c) {
    const i64 order = (i64)c.size() - 1;
    const auto pent = pentagonal_terms(order);
    for (i64 n = order; n >= 1; --n) {
        i128 acc = c[(std::size_t)n];
        for (const auto& [deg, sign] : pent) {
            if (deg > n) break;
            const i128 v = c[(std::size_t)(n - deg)];
            acc = sign > 0 ? checked_add128(acc, v) : checked_sub128(acc, v);
        }
        c[(std::size_t)n] = acc;
    }
}

// c /= prod (1 - x^n), in place. Inverse of the pass above: solves
// prod(1 - x^n) * a = c coefficient by coefficient.
inline void divide_by_euler(std::vector<i128>& c) {
    const i64 order = (i64)c.size() - 1;
    const auto pent = pentagonal_terms(order);
    for (i64 n = 1; n <= order; ++n) {
        i128 acc = c[(std::size_t)n];
        for (const auto& [deg, sign] : pent) {
            if (deg > n) break;
            const i128 v = c[(std::size_t)(n - deg)];
            acc = sign > 0 ? checked_sub128(acc, v) : checked_add128(acc, v);
        }
        c[(std::size_t)n] = acc;
    }
}

}  // namespace detail

class QSeries {
  public:
    QSeries() = default;
    explicit QSeries(i64 order) {
        if (order < 0) throw std::invalid_argument("QSeries: negative truncation order");
        coef_.assign((std::size_t)order + 1, 0);
    }

    static QSeries one(i64 order) {
        QSeries s(order);
        s.coef_[0] = 1;
        return s;
    }

    i64 order() const { return (i64)coef_.size() - 1; }

    i128 coeff(i64 n) const {
        if (n < 0 || n > order())
            throw std::out_of_range("QSeries: coefficient index " + std::to_string(n) +
                                    " outside truncation order " + std::to_string(order()));
        return coef_[(std::size_t)n];
    }

    i64 coeff_i64(i64 n) const {
        i128 v = coeff(n);
        if (v > INT64_MAX || v < INT64_MIN) overflow_fail("coeff_i64");
        return (i64)v;
    }

    const std::vector<i128>& coefficients() const { return coef_; }
    std::vector<i128>& coefficients() { return coef_; }

    // Dense exact product, truncated to the shorter order. Quadratic; meant
    // for small series and tests, not the big builds.
    QSeries mul(const QSeries& other) const {
        i64 n = std::min(order(), other.order());
        QSeries r(n);
        for (i64 i = 0; i <= n; ++i) {
            if (coef_[(std::size_t)i] == 0) continue;
            for (i64 j = 0; i + j <= n; ++j) {
                if (other.coef_[(std::size_t)j] == 0) continue;
                r.coef_[(std::size_t)(i + j)] = checked_add128(
                    r.coef_[(std::size_t)(i + j)],
                    checked_mul128(coef_[(std::size_t)i], other.coef_[(std::size_t)j]));
            }
        }
        return r;
    }

    // Exact multiplicative inverse; requires constant term +-1.
    QSeries inverse() const {
        if (coef_.empty() || (coef_[0] != 1 && coef_[0] != -1))
            throw std::domain_error("QSeries: inverse requires constant term +-1");
        const i64 n = order();
        QSeries r(n);
        r.coef_[0] = coef_[0];
        for (i64 m = 1; m <= n; ++m) {
            i128 acc = 0;
            for (i64 j = 1; j <= m; ++j)
                acc = checked_add128(
                    acc, checked_mul128(coef_[(std::size_t)j], r.coef_[(std::size_t)(m - j)]));
            r.coef_[(std::size_t)m] = checked_mul128(-coef_[0], acc);
        }
        return r;
    }

    bool operator==(const QSeries&) const = default;

  private:
    std::vector<i128> coef_;
};

}  // namespace congdim
