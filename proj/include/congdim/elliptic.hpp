// Dimensions of elliptic cusp form spaces: level 1, prime level (via the
// genus of the modular curve and the valence formula), new subspaces, and
// the plus/minus split of the newspace by the sign in the functional
// equation.
#pragma once

#include <optional>

#include "congdim/quadforms.hpp"
#include "congdim/rational.hpp"

namespace congdim {

namespace detail {

inline void require_even_weight(i64 k, const char* who) {
    if (k < 2 || k % 2 != 0)
        throw std::invalid_argument(std::string(who) + ": weight must be even and >= 2, got " +
                                    std::to_string(k));
}

// Elliptic point counts of Gamma_0(p) for prime p.
inline i64 nu2(i64 p) { return p == 2 ? 1 : 1 + kronecker(-1, p); }
inline i64 nu3(i64 p) { return p == 3 ? 1 : 1 + kronecker(-3, p); }

}  // namespace detail

// dim S_k(SL_2(Z)) for even k >= 2.
inline i64 dim_cusp_level1(i64 k) {
    detail::require_even_weight(k, "dim_cusp_level1");
    if (k == 2) return 0;
    i64 d = k / 12;
    if (k % 12 == 2) d -= 1;
    return d;
}

// Genus of the modular curve of Gamma_0(p).
inline i64 genus_gamma0(i64 p) {
    if (!is_prime(p)) throw std::invalid_argument("genus_gamma0: p must be prime");
    Rational g = Rational(1) + Rational(p + 1, 12) - Rational(detail::nu2(p), 4) -
                 Rational(detail::nu3(p), 3) - Rational(1);
    i64 v = g.as_integer();
    if (v < 0) throw std::logic_error("genus_gamma0: negative genus");
    return v;
}

// dim S_k(Gamma_0(p)) for even k >= 2; p = 1 means full level.
inline i64 dim_cusp_gamma0(i64 k, i64 p) {
    detail::require_even_weight(k, "dim_cusp_gamma0");
    if (p == 1) return dim_cusp_level1(k);
    if (!is_prime(p)) throw std::invalid_argument("dim_cusp_gamma0: level must be 1 or prime");
    const i64 g = genus_gamma0(p);
    if (k == 2) return g;
    const i64 d = (k - 1) * (g - 1) + (k / 4) * detail::nu2(p) + (k / 3) * detail::nu3(p) +
                  (k / 2 - 1) * 2;
    if (d < 0) throw std::logic_error("dim_cusp_gamma0: negative dimension");
    return d;
}

// dim of the new subspace at prime level p (the whole space at level 1).
// At prime level the only oldforms are the two embeddings of level 1.
inline i64 dim_newspace(i64 k, i64 p) {
    if (p == 1) return dim_cusp_level1(k);
    const i64 d = dim_cusp_gamma0(k, p) - 2 * dim_cusp_level1(k);
    if (d < 0) throw std::logic_error("dim_newspace: negative dimension");
    return d;
}

// dim of the +-1 eigenspace of the newspace under the sign of the functional
// equation. For p > 3: (dim_new)/2 +- (h(Delta_p) b / 2 - [k = 2]) / 2.
// For p = 2, 3 the correction is +-1/2 on specific weight residues and the
// formula needs k > 2.
inline i64 dim_newspace_signed(i64 k, i64 p, int sign) {
    detail::require_even_weight(k, "dim_newspace_signed");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("dim_newspace_signed: sign must be +1 or -1");
    if (!is_prime(p)) throw std::invalid_argument("dim_newspace_signed: p must be prime");
    const Rational half_new(dim_newspace(k, p), 2);
    Rational correction;
    if (p > 3) {
        const i64 h = class_number_qfield(p);
        const i64 delta = (k == 2) ? 1 : 0;
        correction = Rational(1, 2) * (Rational(checked_mul(h, b_factor(p)), 2) - Rational(delta));
    } else {
        if (k == 2)
            throw std::invalid_argument("dim_newspace_signed: k > 2 required for p = 2, 3");
        const bool bump = (p == 2) ? (k % 8 == 0 || k % 8 == 2)
                                   : (k % 12 == 0 || k % 12 == 2 || k % 12 == 6 || k % 12 == 8);
        correction = bump ? Rational(1, 2) : Rational(0);
    }
    const Rational v = sign > 0 ? half_new + correction : half_new - correction;
    if (!v.is_integer() || v < Rational(0))
        throw std::logic_error("dim_newspace_signed: non-integral or negative result " + v.str() +
                               " at k=" + std::to_string(k) + " p=" + std::to_string(p) +
                               " (upstream inconsistency)");
    return v.as_integer();
}

struct EllipticDims {
    i64 k = 0;
    i64 p = 0;
    i64 total = 0;
    i64 newspace = 0;
    std::optional<i64> plus, minus;  // absent where the sign split is undefined
};

inline EllipticDims elliptic_dims(i64 k, i64 p) {
    EllipticDims d;
    d.k = k;
    d.p = p;
    d.total = dim_cusp_gamma0(k, p);
    d.newspace = dim_newspace(k, p);
    if (p > 1 && !(p <= 3 && k == 2)) {
        d.plus = dim_newspace_signed(k, p, +1);
        d.minus = dim_newspace_signed(k, p, -1);
    }
    return d;
}

}  // namespace congdim
