// Local-representation-type counts with closed forms in terms of elliptic
// newspace dimensions and class numbers: the two Saito-Kurokawa families
// (Vb / VIc and the (P) part of VIb) and the Yoshida part of VIb. Everything
// is evaluated in exact rationals and asserted to land on non-negative
// integers.
#pragma once

#include "congdim/elliptic.hpp"
#include "congdim/quadforms.hpp"
#include "congdim/rational.hpp"

namespace congdim {

struct ReprTypeCounts {
    i64 k = 0;
    i64 p = 0;
    i64 s_Vb = 0;
    i64 s_VIc = 0;
    i64 s_P_VIb = 0;
    i64 s_Y_VIb = 0;
};

namespace detail {

inline i64 as_count(const Rational& v, const char* name, i64 k, i64 p) {
    if (!v.is_integer() || v < Rational(0))
        throw std::logic_error(std::string(name) + " = " + v.str() + " at k=" + std::to_string(k) +
                               " p=" + std::to_string(p) + " is not a non-negative integer");
    return v.as_integer();
}

// +1/2 rows of the correction tables for p = 2 (keyed on k mod 4) and p = 3
// (keyed on k mod 6); everything else is 0.
inline Rational small_prime_correction(i64 k, i64 p) {
    const bool bump = (p == 2) ? (k % 4 == 1 || k % 4 == 2)
                               : (k % 6 == 1 || k % 6 == 2 || k % 6 == 4 || k % 6 == 5);
    return bump ? Rational(1, 2) : Rational(0);
}

}  // namespace detail

inline ReprTypeCounts representation_type_counts(i64 k, i64 p) {
    if (k < 3) throw std::invalid_argument("representation_type_counts: k must be >= 3");
    if (!is_prime(p)) throw std::invalid_argument("representation_type_counts: p must be prime");
    ReprTypeCounts out;
    out.k = k;
    out.p = p;
    const Rational half_new(dim_newspace(2 * k - 2, p), 2);
    const bool even_k = (k % 2 == 0);

    if (p >= 5) {
        const i64 h = class_number_qfield(p);
        const Rational hb(checked_mul(h, b_factor(p)));
        const Rational quarter_hb = hb / Rational(4);
        if (even_k) {
            out.s_Vb = detail::as_count(half_new - quarter_hb, "s_Vb", k, p);
            out.s_P_VIb = detail::as_count(half_new + quarter_hb, "s_P_VIb", k, p);
        } else {
            out.s_VIc = detail::as_count(half_new - quarter_hb, "s_VIc", k, p);
        }
        const Rational sgn(even_k ? 1 : -1);
        const Rational yosh = half_new * Rational(dim_newspace(2, p)) +
                              sgn * (hb * hb / Rational(8) - hb / Rational(4));
        out.s_Y_VIb = detail::as_count(yosh, "s_Y_VIb", k, p);
    } else {
        // p = 2, 3: no Yoshida contribution; the Saito-Kurokawa counts get a
        // residue-dependent half-correction instead of the class number term.
        const Rational corr = detail::small_prime_correction(k, p);
        if (even_k) {
            out.s_P_VIb = detail::as_count(half_new + corr, "s_P_VIb", k, p);
            out.s_Vb = detail::as_count(Rational(dim_newspace(2 * k - 2, p)) - Rational(out.s_P_VIb),
                                        "s_Vb", k, p);
        } else {
            out.s_VIc = detail::as_count(half_new + corr, "s_VIc", k, p);
        }
    }
    return out;
}

}  // namespace congdim
