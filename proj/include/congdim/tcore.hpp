// t-core partitions three ways: hook numbers on Ferrers-Young diagrams
// (brute force), the generating function prod (1-q^{tn})^t / (1-q^n)
// (series), and the x^2 + 2y^2 + 2z^2 representation count that the 4-core
// identities compare against.
#pragma once

#include <algorithm>
#include <vector>

#include "congdim/qseries.hpp"
#include "congdim/quadforms.hpp"
#include "congdim/rational.hpp"

namespace congdim {

struct PartitionDiagram {
    std::vector<i64> rows;  // non-increasing, positive; empty = partition of 0

    static PartitionDiagram of(std::vector<i64> rows) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i] < 1)
                throw std::invalid_argument("PartitionDiagram: parts must be positive");
            if (i > 0 && rows[i] > rows[i - 1])
                throw std::invalid_argument("PartitionDiagram: parts must be non-increasing");
        }
        return PartitionDiagram{std::move(rows)};
    }

    i64 total() const {
        i64 n = 0;
        for (i64 r : rows) n = checked_add(n, r);
        return n;
    }
};

// Hook number of each node, row by row: arm + leg + 1, where the leg length
// comes from the column heights.
inline std::vector<i64> hook_numbers(const PartitionDiagram& d) {
    std::vector<i64> hooks;
    const auto& rows = d.rows;
    if (rows.empty()) return hooks;
    hooks.reserve((std::size_t)d.total());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (i64 j = 1; j <= rows[i]; ++j) {
            // column height = number of rows with length >= j; rows are sorted
            auto col = (i64)(std::partition_point(rows.begin(), rows.end(),
                                                  [j](i64 row) { return row >= j; }) -
                             rows.begin());
            hooks.push_back((rows[i] - j) + (col - (i64)i - 1) + 1);
        }
    }
    return hooks;
}

inline bool is_t_core(const PartitionDiagram& d, i64 t) {
    if (t < 1) throw std::invalid_argument("is_t_core: t must be >= 1");
    for (i64 h : hook_numbers(d))
        if (h % t == 0) return false;
    return true;
}

inline constexpr i64 kBruteForceLimit = 40;

// Count of t-core partitions of n by enumerating all partitions of n.
inline i64 c_t_bruteforce(i64 n, i64 t) {
    if (t < 1) throw std::invalid_argument("c_t_bruteforce: t must be >= 1");
    if (n < 0) throw std::invalid_argument("c_t_bruteforce: n must be >= 0");
    if (n > kBruteForceLimit)
        throw std::invalid_argument("c_t_bruteforce: n = " + std::to_string(n) +
                                    " exceeds the brute-force limit " +
                                    std::to_string(kBruteForceLimit));
    i64 count = 0;
    std::vector<i64> parts;
    auto rec = [&](auto&& self, i64 remaining, i64 max_part) -> void {
        if (remaining == 0) {
            if (is_t_core(PartitionDiagram{parts}, t)) ++count;
            return;
        }
        for (i64 part = std::min(max_part, remaining); part >= 1; --part) {
            parts.push_back(part);
            self(self, remaining - part, part);
            parts.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return count;
}

// Coefficients 0..order of prod_{n>=1} (1 - q^{tn})^t / (1 - q^n).
// The numerator is built as the t-th power of the pentagonal series in
// x = q^t (a shorter array), then scattered and divided by prod (1 - q^n).
inline QSeries t_core_series(i64 t, i64 order) {
    if (t < 1) throw std::invalid_argument("t_core_series: t must be >= 1");
    if (order < 0) throw std::invalid_argument("t_core_series: order must be >= 0");
    const i64 m = order / t;
    std::vector<i128> numer((std::size_t)m + 1, 0);
    numer[0] = 1;
    for (i64 i = 0; i < t; ++i) detail::multiply_by_euler(numer);
    QSeries out(order);
    auto& c = out.coefficients();
    for (i64 i = 0; i <= m; ++i) c[(std::size_t)(i * t)] = numer[(std::size_t)i];
    detail::divide_by_euler(out.coefficients());
    return out;
}

// Ordered triples (x, y, z) of odd positive integers with
// x^2 + 2y^2 + 2z^2 = 8n + 5.
inline i64 rep_count(i64 n) {
    if (n < 0) throw std::invalid_argument("rep_count: n must be >= 0");
    const i64 m = checked_add(checked_mul(8, n), 5);
    i64 count = 0;
    for (i64 x = 1; x * x <= m; x += 2) {
        const i64 rx = m - x * x;
        for (i64 y = 1; 2 * y * y <= rx; y += 2) {
            const i64 rem = rx - 2 * y * y;
            if (rem % 2 != 0) continue;
            i64 z;
            if (is_perfect_square(rem / 2, &z) && z % 2 == 1 && z > 0) ++count;
        }
    }
    return count;
}

// h(-32n - 20) / 2 for squarefree 8n + 5; equals c_4(n).
inline Rational ono_sze(i64 n) {
    if (n < 0) throw std::invalid_argument("ono_sze: n must be >= 0");
    const i64 m = checked_add(checked_mul(8, n), 5);
    if (!is_squarefree(m))
        throw std::invalid_argument("ono_sze: 8n+5 = " + std::to_string(m) +
                                    " is not squarefree; the identity does not apply");
    const i64 d = checked_neg(checked_add(checked_mul(32, n), 20));
    return Rational(class_number(Discriminant::of(d)), 2);
}

}  // namespace congdim
