// The congruence checkers: six families of congruences between Siegel cusp
// form dimensions, class numbers of imaginary quadratic fields, elliptic
// newspace dimensions, and 4-core partition counts, plus a synthetic
// generator that produces Siegel dimension triples consistent with the
// underlying counting identities for round-trip testing.
#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "congdim/elliptic.hpp"
#include "congdim/quadforms.hpp"
#include "congdim/reptypes.hpp"
#include "congdim/store.hpp"
#include "congdim/tcore.hpp"

namespace congdim {

enum class TheoremCase {
    T31i, T31ii, T31iii,
    T32i, T32ii, T32iii,
    T33,
    P34_2, P34_3,
    C41a, C41b,
    C42,
};

inline const char* to_string(TheoremCase c) {
    switch (c) {
        case TheoremCase::T31i: return "T31i";
        case TheoremCase::T31ii: return "T31ii";
        case TheoremCase::T31iii: return "T31iii";
        case TheoremCase::T32i: return "T32i";
        case TheoremCase::T32ii: return "T32ii";
        case TheoremCase::T32iii: return "T32iii";
        case TheoremCase::T33: return "T33";
        case TheoremCase::P34_2: return "P34_2";
        case TheoremCase::P34_3: return "P34_3";
        case TheoremCase::C41a: return "C41a";
        case TheoremCase::C41b: return "C41b";
        case TheoremCase::C42: return "C42";
    }
    return "?";
}

enum class Provenance { computed, ingested, synthetic };

inline const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::computed: return "computed";
        case Provenance::ingested: return "ingested";
        case Provenance::synthetic: return "synthetic";
    }
    return "?";
}

struct SiegelDims {
    i64 p = 0;
    i64 k = 0;
    i64 dim_K = 0;       // paramodular
    i64 dim_Gamma0 = 0;  // Siegel congruence subgroup
    std::optional<i64> dim_Klingen;
};

struct CongruenceReport {
    TheoremCase id = TheoremCase::T33;
    i64 k = 0;
    std::optional<i64> p;
    std::optional<i64> n;
    i64 lhs = 0;  // canonical residue in [0, modulus)
    i64 rhs = 0;
    i64 modulus = 0;
    bool pass = false;
    Provenance provenance = Provenance::computed;
};

// Unknown counts the closed forms say nothing about; free parameters of the
// synthetic generator.
struct FreeCounts {
    i64 s_I = 0;
    i64 s_IIb = 0;
    i64 s_IIa = 0;
    i64 s_Va = 0;
    i64 s_IIIaVIab = 0;
};

inline i64 canonical_mod(i64 x, i64 m) {
    i64 r = x % m;
    return r < 0 ? r + m : r;
}

namespace detail {

struct ThmInputs {
    i64 h;   // class number of Q(sqrt(-p))
    i64 b;   // 1 / 2 / 4 by p mod 8
    i64 d;   // dim of the weight 2k-2 newspace at level p
    i64 d2;  // dim of the weight 2 newspace at level p
};

inline ThmInputs theorem_inputs(i64 k, i64 p) {
    return ThmInputs{class_number_qfield(p), b_factor(p), dim_newspace(2 * k - 2, p),
                     dim_newspace(2, p)};
}

inline void require_thm_domain(i64 k, i64 p, const SiegelDims& dims, const char* who) {
    if (k < 3) throw std::invalid_argument(std::string(who) + ": k must be >= 3");
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument(std::string(who) + ": p must be a prime >= 5");
    if (dims.p != p || dims.k != k)
        throw std::invalid_argument(std::string(who) + ": dims are for (p=" +
                                    std::to_string(dims.p) + ", k=" + std::to_string(dims.k) +
                                    "), expected (p=" + std::to_string(p) +
                                    ", k=" + std::to_string(k) + ")");
}

inline CongruenceReport make_report(TheoremCase id, i64 k, std::optional<i64> p,
                                    std::optional<i64> n, i64 lhs, i64 rhs, i64 modulus,
                                    Provenance prov) {
    CongruenceReport r;
    r.id = id;
    r.k = k;
    r.p = p;
    r.n = n;
    r.lhs = canonical_mod(lhs, modulus);
    r.rhs = canonical_mod(rhs, modulus);
    r.modulus = modulus;
    r.pass = (r.lhs == r.rhs);
    r.provenance = prov;
    return r;
}

}  // namespace detail

// Difference congruence: relates dim_K - dim_Gamma0 to the class number and
// the two elliptic newspace dimensions, mod 16 for p = 1 (4) and mod 4
// otherwise.
inline CongruenceReport check_t31(i64 k, i64 p, const SiegelDims& dims,
                                  Provenance prov = Provenance::ingested) {
    detail::require_thm_domain(k, p, dims, "check_t31");
    const auto in = detail::theorem_inputs(k, p);
    const i64 h = in.h, d = in.d, d2 = in.d2;
    const i64 sgn = (k % 2 == 0) ? -1 : 1;  // (-1)^(k-1)
    const i64 gap = checked_sub(dims.dim_K, dims.dim_Gamma0);
    const i64 h2 = checked_mul(h, h);
    const i64 dd2 = checked_mul(d, d2);
    if (p % 4 == 1) {
        const i64 lhs = checked_sub(sgn * h2, k % 2 == 1 ? 4 * h : 0);
        const i64 rhs = checked_add(4 * checked_sub(dd2, sgn * d), 8 * gap);
        return detail::make_report(TheoremCase::T31i, k, p, std::nullopt, lhs, rhs, 16, prov);
    }
    if (p % 8 == 7) {
        const i64 lhs = checked_sub(sgn * h2, k % 2 == 1 ? 2 * h : 0);
        const i64 rhs = checked_add(checked_sub(dd2, sgn * d), 2 * gap);
        return detail::make_report(TheoremCase::T31ii, k, p, std::nullopt, lhs, rhs, 4, prov);
    }
    const i64 lhs = 2 * gap;
    const i64 rhs = checked_sub(sgn * d, dd2);
    return detail::make_report(TheoremCase::T31iii, k, p, std::nullopt, lhs, rhs, 4, prov);
}

// Sum congruence: same shape with dim_K + dim_Gamma0 and no class-number
// linear term.
inline CongruenceReport check_t32(i64 k, i64 p, const SiegelDims& dims,
                                  Provenance prov = Provenance::ingested) {
    detail::require_thm_domain(k, p, dims, "check_t32");
    const auto in = detail::theorem_inputs(k, p);
    const i64 h = in.h, d = in.d, d2 = in.d2;
    const i64 sgn = (k % 2 == 0) ? 1 : -1;  // (-1)^k
    const i64 tot = checked_add(dims.dim_K, dims.dim_Gamma0);
    const i64 h2 = checked_mul(h, h);
    const i64 dd2 = checked_mul(d, d2);
    if (p % 4 == 1) {
        const i64 rhs = checked_add(-4 * checked_add(dd2, d), 8 * tot);
        return detail::make_report(TheoremCase::T32i, k, p, std::nullopt, sgn * h2, rhs, 16, prov);
    }
    if (p % 8 == 7) {
        const i64 rhs = checked_add(checked_sub(-dd2, d), 2 * tot);
        return detail::make_report(TheoremCase::T32ii, k, p, std::nullopt, sgn * h2, rhs, 4, prov);
    }
    const i64 rhs = checked_add(d, dd2);
    return detail::make_report(TheoremCase::T32iii, k, p, std::nullopt, 2 * tot, rhs, 4, prov);
}

// Parity of the weight 2k-2 newspace dimension against h(Delta_p) b / 2.
inline CongruenceReport check_t33(i64 k, i64 p) {
    if (k < 3) throw std::invalid_argument("check_t33: k must be >= 3");
    if (p < 5 || !is_prime(p)) throw std::invalid_argument("check_t33: p must be a prime >= 5");
    const i64 d = dim_newspace(2 * k - 2, p);
    const i64 half_hb =
        (Rational(checked_mul(class_number_qfield(p), b_factor(p)), 2)).as_integer();
    return detail::make_report(TheoremCase::T33, k, p, std::nullopt, d, half_hb, 2,
                               Provenance::computed);
}

// p = 2, 3 analogue of the difference congruence, with sign tables keyed on
// k mod 4 (p = 2) and k mod 6 (p = 3).
inline CongruenceReport check_p34(i64 k, i64 p, const SiegelDims& dims,
                                  Provenance prov = Provenance::ingested) {
    if (k < 3) throw std::invalid_argument("check_p34: k must be >= 3");
    if (p != 2 && p != 3) throw std::invalid_argument("check_p34: p must be 2 or 3");
    if (dims.p != p || dims.k != k) throw std::invalid_argument("check_p34: dims/key mismatch");
    const i64 d = dim_newspace(2 * k - 2, p);
    const i64 lhs = 2 * checked_sub(dims.dim_K, dims.dim_Gamma0);
    i64 rhs;
    if (p == 2) {
        switch (k % 4) {
            case 0: rhs = -d; break;
            case 1: rhs = d + 1; break;
            case 2: rhs = -d - 1; break;
            default: rhs = d; break;
        }
    } else {
        switch (k % 6) {
            case 0: rhs = -d; break;
            case 1: case 5: rhs = d + 1; break;
            case 2: case 4: rhs = -d - 1; break;
            default: rhs = d; break;  // k = 3 mod 6
        }
    }
    return detail::make_report(p == 2 ? TheoremCase::P34_2 : TheoremCase::P34_3, k, p,
                               std::nullopt, lhs, rhs, 4, prov);
}

// Both mod-4 congruences with the 4-core count c4(n) standing in for
// h(Delta_p)/2 at p = 8n + 5. The caller supplies c4(n) so scans can reuse
// one series build.
inline std::pair<CongruenceReport, CongruenceReport> check_c41(i64 k, i64 n, const SiegelDims& dims,
                                                               i64 c4n,
                                                               Provenance prov =
                                                                   Provenance::ingested) {
    if (k < 5) throw std::invalid_argument("check_c41: k must be >= 5");
    const i64 p = 8 * n + 5;
    if (!is_prime(p))
        throw std::invalid_argument("check_c41: 8n+5 = " + std::to_string(p) + " is not prime");
    if (dims.p != p || dims.k != k) throw std::invalid_argument("check_c41: dims/key mismatch");
    const i64 d = dim_newspace(2 * k - 2, p);
    const i64 d2 = dim_newspace(2, p);
    const i64 sgn = (k % 2 == 0) ? -1 : 1;  // (-1)^(k-1)
    const i64 gap = checked_sub(dims.dim_K, dims.dim_Gamma0);
    const i64 c2 = checked_mul(c4n, c4n);
    const i64 dd2 = checked_mul(d, d2);
    const i64 lhs_a = checked_sub(checked_sub(sgn * c2, k % 2 == 1 ? 2 * c4n : 0), 2 * gap);
    const i64 rhs_a = checked_sub(dd2, sgn * d);
    const i64 lhs_b = checked_sub(-sgn * c2, 2 * gap);
    const i64 rhs_b = -checked_add(dd2, d);
    return {detail::make_report(TheoremCase::C41a, k, p, n, lhs_a, rhs_a, 4, prov),
            detail::make_report(TheoremCase::C41b, k, p, n, lhs_b, rhs_b, 4, prov)};
}

// Parity of c4(n) against the weight 4k newspace dimension at level 8n + 5.
inline CongruenceReport check_c42(i64 k, i64 n, i64 c4n) {
    if (k < 1) throw std::invalid_argument("check_c42: k must be >= 1");
    const i64 p = 8 * n + 5;
    if (!is_prime(p))
        throw std::invalid_argument("check_c42: 8n+5 = " + std::to_string(p) + " is not prime");
    return detail::make_report(TheoremCase::C42, k, p, n, c4n, dim_newspace(4 * k, p), 2,
                               Provenance::computed);
}

inline CongruenceReport check_c42(i64 k, i64 n) {
    return check_c42(k, n, t_core_series(4, n).coeff_i64(n));
}

// Builds a Siegel dimension triple from free counts plus the closed-form
// counts, by inverting the three counting identities that the difference and
// sum congruences rest on. Draws that fail integrality or positivity are
// rejected loudly (none are known to exist).
inline SiegelDims synthesize_dims(i64 k, i64 p, const FreeCounts& free) {
    if (free.s_I < 0 || free.s_IIb < 0 || free.s_IIa < 0 || free.s_Va < 0 || free.s_IIIaVIab < 0)
        throw std::invalid_argument("synthesize_dims: free counts must be non-negative");
    const ReprTypeCounts c = representation_type_counts(k, p);
    const i64 dim_K = checked_add(checked_add(free.s_IIa, 2 * free.s_I),
                                  checked_add(free.s_IIb, checked_add(c.s_Vb, c.s_VIc)));
    const i64 dim_G =
        checked_add(dim_K, checked_add(2 * checked_add(free.s_IIIaVIab,
                                                       checked_add(free.s_I, free.s_IIb)),
                                       checked_sub(checked_add(c.s_P_VIb, c.s_Y_VIb), c.s_VIc)));
    const Rational klingen = Rational(free.s_Va) + Rational(dim_G, 2) + Rational(3 * dim_K, 2) -
                             Rational(free.s_I) - Rational(free.s_IIb) - Rational(c.s_Vb) -
                             Rational(c.s_P_VIb, 2) - Rational(c.s_Y_VIb, 2) -
                             Rational(c.s_VIc, 2);
    if (dim_K < 0 || dim_G < 0 || !klingen.is_integer() || klingen < Rational(0))
        throw std::domain_error("synthesize_dims: rejected draw at k=" + std::to_string(k) +
                                " p=" + std::to_string(p) + " (dim_Klingen = " + klingen.str() +
                                ")");
    SiegelDims dims;
    dims.p = p;
    dims.k = k;
    dims.dim_K = dim_K;
    dims.dim_Gamma0 = dim_G;
    dims.dim_Klingen = klingen.as_integer();
    return dims;
}

// mt19937_64 output is fully specified, and taking residues directly keeps
// the draw stream identical across standard libraries.
inline FreeCounts draw_free_counts(std::mt19937_64& rng, i64 max_value = 20) {
    auto u = [&]() { return (i64)(rng() % (u64)(max_value + 1)); };
    FreeCounts f;
    f.s_I = u();
    f.s_IIb = u();
    f.s_IIa = u();
    f.s_Va = u();
    f.s_IIIaVIab = u();
    return f;
}

}  // namespace congdim
