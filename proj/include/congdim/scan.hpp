// Scan driver: runs one congruence family over a (k, p) or (k, n) grid,
// produces a deterministic report stream plus explicit skip records for
// every in-range pair the family does not apply to.
#pragma once

#include <algorithm>
#include <cstring>
#include <optional>
#include <string>
#include <vector>

#include "congdim/congruence.hpp"
#include "congdim/store.hpp"

namespace congdim {

enum class TheoremFamily { T31, T32, T33, P34, C41, C42 };

inline const char* to_string(TheoremFamily f) {
    switch (f) {
        case TheoremFamily::T31: return "T31";
        case TheoremFamily::T32: return "T32";
        case TheoremFamily::T33: return "T33";
        case TheoremFamily::P34: return "P34";
        case TheoremFamily::C41: return "C41";
        case TheoremFamily::C42: return "C42";
    }
    return "?";
}

inline std::optional<TheoremFamily> parse_theorem_family(const std::string& s) {
    if (s == "T31") return TheoremFamily::T31;
    if (s == "T32") return TheoremFamily::T32;
    if (s == "T33") return TheoremFamily::T33;
    if (s == "P34") return TheoremFamily::P34;
    if (s == "C41") return TheoremFamily::C41;
    if (s == "C42") return TheoremFamily::C42;
    return std::nullopt;
}

enum class DimsSource { computed, ingested, synthetic };

inline const char* to_string(DimsSource s) {
    switch (s) {
        case DimsSource::computed: return "computed";
        case DimsSource::ingested: return "ingested";
        case DimsSource::synthetic: return "synthetic";
    }
    return "?";
}

struct ScanConfig {
    TheoremFamily theorem = TheoremFamily::T33;
    i64 k_min = 3;
    i64 k_max = 3;
    i64 p_max = 0;   // grid bound for T31/T32/T33/P34
    i64 n_max = -1;  // grid bound for C41/C42
    DimsSource source = DimsSource::computed;
    i64 draws = 1;   // synthetic draws per grid point
    u64 seed = 0;
};

struct SkipRecord {
    TheoremFamily theorem = TheoremFamily::T33;
    i64 k = 0;
    std::optional<i64> p;
    std::optional<i64> n;
    std::string reason;
};

struct ScanOutcome {
    std::vector<CongruenceReport> reports;
    std::vector<SkipRecord> skips;
    i64 rejected_draws = 0;

    i64 pass_count() const {
        i64 c = 0;
        for (const auto& r : reports) c += r.pass ? 1 : 0;
        return c;
    }
    i64 fail_count() const { return (i64)reports.size() - pass_count(); }
};

namespace detail {

inline std::vector<i64> primes_in(i64 lo, i64 hi) {
    std::vector<i64> out;
    for (i64 p = lo; p <= hi; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

// Whether a (k, p) grid point can be supplied with Siegel dims, and the dims
// themselves when it can.
inline std::optional<SiegelDims> dims_for(i64 k, i64 p, DimsSource source, const DimStore* store,
                                          std::mt19937_64& rng, std::string& skip_reason) {
    switch (source) {
        case DimsSource::computed:
            skip_reason = "Siegel dimensions have no closed form here; "
                          "provide ingested data or use --synthetic";
            return std::nullopt;
        case DimsSource::ingested: {
            if (store == nullptr) {
                skip_reason = "no dimension store configured";
                return std::nullopt;
            }
            auto dk = store->lookup(SiegelGroup::paramodular_K, p, k);
            auto dg = store->lookup(SiegelGroup::siegel_Gamma0, p, k);
            if (!dk || !dg) {
                skip_reason = "store has no " +
                              std::string(!dk ? "paramodular_K" : "siegel_Gamma0") +
                              " record for (p=" + std::to_string(p) +
                              ", k=" + std::to_string(k) + ")";
                return std::nullopt;
            }
            SiegelDims dims;
            dims.p = p;
            dims.k = k;
            dims.dim_K = dk->dim;
            dims.dim_Gamma0 = dg->dim;
            if (auto dkl = store->lookup(SiegelGroup::klingen_Gamma0prime, p, k))
                dims.dim_Klingen = dkl->dim;
            return dims;
        }
        case DimsSource::synthetic:
            return synthesize_dims(k, p, draw_free_counts(rng));
    }
    return std::nullopt;
}

}  // namespace detail

inline ScanOutcome run_scan(const ScanConfig& cfg, const DimStore* store = nullptr) {
    if (cfg.k_min > cfg.k_max) throw std::invalid_argument("run_scan: empty k range");
    const bool n_grid = (cfg.theorem == TheoremFamily::C41 || cfg.theorem == TheoremFamily::C42);
    if (n_grid && cfg.n_max < 0) throw std::invalid_argument("run_scan: n range required");
    if (!n_grid && cfg.p_max < 2) throw std::invalid_argument("run_scan: p range required");
    if (cfg.draws < 1) throw std::invalid_argument("run_scan: draws must be >= 1");

    ScanOutcome out;
    std::mt19937_64 rng(cfg.seed);
    const Provenance prov =
        cfg.source == DimsSource::synthetic ? Provenance::synthetic : Provenance::ingested;
    const i64 draws = cfg.source == DimsSource::synthetic ? cfg.draws : 1;

    auto skip = [&](i64 k, std::optional<i64> p, std::optional<i64> n, std::string reason) {
        out.skips.push_back({cfg.theorem, k, p, n, std::move(reason)});
    };

    switch (cfg.theorem) {
        case TheoremFamily::T33: {
            for (i64 p : detail::primes_in(2, cfg.p_max)) {
                for (i64 k = cfg.k_min; k <= cfg.k_max; ++k) {
                    if (p < 5) {
                        skip(k, p, std::nullopt, "requires p >= 5");
                        continue;
                    }
                    if (k < 3) {
                        skip(k, p, std::nullopt, "requires k >= 3");
                        continue;
                    }
                    out.reports.push_back(check_t33(k, p));
                }
            }
            break;
        }
        case TheoremFamily::T31:
        case TheoremFamily::T32: {
            for (i64 p : detail::primes_in(2, cfg.p_max)) {
                for (i64 k = cfg.k_min; k <= cfg.k_max; ++k) {
                    if (p < 5) {
                        skip(k, p, std::nullopt, "requires p >= 5 (see P34 for p = 2, 3)");
                        continue;
                    }
                    if (k < 3) {
                        skip(k, p, std::nullopt, "requires k >= 3");
                        continue;
                    }
                    std::string reason;
                    for (i64 i = 0; i < draws; ++i) {
                        auto dims = detail::dims_for(k, p, cfg.source, store, rng, reason);
                        if (!dims) {
                            skip(k, p, std::nullopt, reason);
                            break;
                        }
                        out.reports.push_back(cfg.theorem == TheoremFamily::T31
                                                  ? check_t31(k, p, *dims, prov)
                                                  : check_t32(k, p, *dims, prov));
                    }
                }
            }
            break;
        }
        case TheoremFamily::P34: {
            for (i64 p : detail::primes_in(2, std::min<i64>(cfg.p_max, 3))) {
                for (i64 k = cfg.k_min; k <= cfg.k_max; ++k) {
                    if (k < 3) {
                        skip(k, p, std::nullopt, "requires k >= 3");
                        continue;
                    }
                    std::string reason;
                    for (i64 i = 0; i < draws; ++i) {
                        auto dims = detail::dims_for(k, p, cfg.source, store, rng, reason);
                        if (!dims) {
                            skip(k, p, std::nullopt, reason);
                            break;
                        }
                        out.reports.push_back(check_p34(k, p, *dims, prov));
                    }
                }
            }
            break;
        }
        case TheoremFamily::C41: {
            const QSeries c4 = t_core_series(4, cfg.n_max);
            for (i64 n = 0; n <= cfg.n_max; ++n) {
                const i64 p = 8 * n + 5;
                for (i64 k = cfg.k_min; k <= cfg.k_max; ++k) {
                    if (!is_prime(p)) {
                        skip(k, p, n, "8n+5 = " + std::to_string(p) + " is composite");
                        continue;
                    }
                    if (k < 5) {
                        skip(k, p, n, "requires k >= 5");
                        continue;
                    }
                    std::string reason;
                    for (i64 i = 0; i < draws; ++i) {
                        auto dims = detail::dims_for(k, p, cfg.source, store, rng, reason);
                        if (!dims) {
                            skip(k, p, n, reason);
                            break;
                        }
                        auto [a, b] = check_c41(k, n, *dims, c4.coeff_i64(n), prov);
                        out.reports.push_back(a);
                        out.reports.push_back(b);
                    }
                }
            }
            break;
        }
        case TheoremFamily::C42: {
            const QSeries c4 = t_core_series(4, cfg.n_max);
            for (i64 n = 0; n <= cfg.n_max; ++n) {
                const i64 p = 8 * n + 5;
                for (i64 k = cfg.k_min; k <= cfg.k_max; ++k) {
                    if (!is_prime(p)) {
                        skip(k, p, n, "8n+5 = " + std::to_string(p) + " is composite");
                        continue;
                    }
                    if (k < 1) {
                        skip(k, p, n, "requires k >= 1");
                        continue;
                    }
                    out.reports.push_back(check_c42(k, n, c4.coeff_i64(n)));
                }
            }
            break;
        }
    }

    // Canonical report order regardless of generation strategy; stable so
    // repeated draws at one grid point keep their draw order.
    std::stable_sort(out.reports.begin(), out.reports.end(),
                     [](const CongruenceReport& a, const CongruenceReport& b) {
                         const int c = std::strcmp(to_string(a.id), to_string(b.id));
                         if (c != 0) return c < 0;
                         if (a.p != b.p) return a.p.value_or(0) < b.p.value_or(0);
                         if (a.k != b.k) return a.k < b.k;
                         return a.n.value_or(-1) < b.n.value_or(-1);
                     });
    return out;
}

}  // namespace congdim
