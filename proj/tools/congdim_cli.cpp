// congdim: class numbers, Hurwitz class numbers, t-core partition counts,
// elliptic newspace dimensions and their sign split, representation-type
// counts, and verification scans for the congruences relating them.
//
// Exit codes: 0 = all checks passed, 1 = at least one congruence failed,
// 2 = usage or input error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "congdim/congruence.hpp"
#include "congdim/elliptic.hpp"
#include "congdim/quadforms.hpp"
#include "congdim/records.hpp"
#include "congdim/reptypes.hpp"
#include "congdim/scan.hpp"
#include "congdim/store.hpp"
#include "congdim/tcore.hpp"

namespace {

using namespace congdim;
using nlohmann::json;

struct Options {
    bool machine = false;
    std::string store_path;
    std::string subcommand;

    // shared numeric options; each subcommand uses the ones it declares
    i64 max_n = 0;
    i64 t = 4;
    i64 disc = 0;
    i64 k = 0;
    i64 p = 0;
    i64 n = -1;
    std::string theorem;
    std::string k_range;
    i64 p_max = 0;
    i64 n_max = -1;
    bool synthetic = false;
    i64 draws = 1;
    std::optional<u64> seed;
    std::string dims_file;
    std::string ingest_file;
};

u64 env_default_seed() {
    if (const char* s = std::getenv("CONGDIM_SEED")) return std::strtoull(s, nullptr, 10);
    return 0;
}

std::string env_default_store() {
    if (const char* s = std::getenv("CONGDIM_STORE")) return s;
    return "congdim_store.csv";
}

std::pair<i64, i64> parse_k_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        i64 v = std::stoll(s);
        return {v, v};
    }
    return {std::stoll(s.substr(0, dots)), std::stoll(s.substr(dots + 2))};
}

json config_json(const Options& o, u64 seed) {
    json j;
    j["type"] = "config";
    j["subcommand"] = o.subcommand;
    j["machine"] = o.machine;
    j["seed"] = seed;
    if (o.subcommand == "c4") {
        j["t"] = o.t;
        j["max"] = o.max_n;
    } else if (o.subcommand == "classnum" || o.subcommand == "hurwitz") {
        j["discriminant"] = o.disc;
    } else if (o.subcommand == "dims" || o.subcommand == "types" || o.subcommand == "synth") {
        j["k"] = o.k;
        j["p"] = o.p;
    } else if (o.subcommand == "verify" || o.subcommand == "scan") {
        j["theorem"] = o.theorem;
        if (o.subcommand == "verify") {
            j["k"] = o.k;
            if (o.p > 0) j["p"] = o.p;
            if (o.n >= 0) j["n"] = o.n;
        } else {
            auto [a, b] = parse_k_range(o.k_range);
            j["k_min"] = a;
            j["k_max"] = b;
            if (o.p_max > 0) j["p_max"] = o.p_max;
            if (o.n_max >= 0) j["n_max"] = o.n_max;
            j["draws"] = o.draws;
        }
        j["dims_source"] = o.synthetic ? "synthetic"
                                       : (!o.dims_file.empty() ? "file:" + o.dims_file
                                                               : "store:" + o.store_path);
    } else if (o.subcommand == "ingest") {
        j["input"] = o.ingest_file;
        j["store"] = o.store_path;
    }
    return j;
}

void print_config(const Options& o, u64 seed) {
    json j = config_json(o, seed);
    if (o.machine) {
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "# config:";
        for (auto it = j.begin(); it != j.end(); ++it)
            if (it.key() != "type") std::cout << " " << it.key() << "=" << it.value().dump();
        std::cout << "\n";
    }
}

void print_report_human(const CongruenceReport& r) {
    std::cout << to_string(r.id) << " k=" << r.k;
    if (r.p) std::cout << " p=" << *r.p;
    if (r.n) std::cout << " n=" << *r.n;
    std::cout << ": lhs=" << r.lhs << " rhs=" << r.rhs << " (mod " << r.modulus << ") "
              << (r.pass ? "pass" : "FAIL") << " [" << to_string(r.provenance) << "]\n";
}

void print_skip_human(const SkipRecord& s) {
    std::cout << to_string(s.theorem) << " k=" << s.k;
    if (s.p) std::cout << " p=" << *s.p;
    if (s.n) std::cout << " n=" << *s.n;
    std::cout << ": skip (" << s.reason << ")\n";
}

void emit_reports(const Options& o, const std::vector<CongruenceReport>& reports,
                  const std::vector<SkipRecord>& skips, i64 rejected, u64 seed) {
    i64 pass = 0, fail = 0;
    for (const auto& r : reports) (r.pass ? pass : fail)++;
    if (o.machine) {
        for (const auto& r : reports) std::cout << machine_record(r, seed) << "\n";
        for (const auto& s : skips) std::cout << machine_record(s) << "\n";
        std::cout << machine_summary(pass, fail, (i64)skips.size(), rejected) << "\n";
    } else {
        for (const auto& r : reports) print_report_human(r);
        for (const auto& s : skips) print_skip_human(s);
        std::cout << "summary: pass=" << pass << " fail=" << fail << " skip=" << skips.size()
                  << " rejected_draws=" << rejected << "\n";
    }
}

int exit_code_for(const std::vector<CongruenceReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return 1;
    return 0;
}

int run_c4(const Options& o) {
    const u64 seed = o.seed.value_or(env_default_seed());
    if (o.machine) print_config(o, seed);
    QSeries s = t_core_series(o.t, o.max_n);
    if (o.machine) {
        for (i64 n = 0; n <= o.max_n; ++n) {
            json j;
            j["type"] = "coefficient";
            j["t"] = o.t;
            j["n"] = n;
            i128 v = s.coeff(n);
            if (v >= INT64_MIN && v <= INT64_MAX)
                j["value"] = (i64)v;
            else
                j["value"] = to_string_i128(v);
            std::cout << j.dump() << "\n";
        }
    } else {
        for (i64 n = 0; n <= o.max_n; ++n)
            std::cout << (n > 0 ? " " : "") << to_string_i128(s.coeff(n));
        std::cout << "\n";
    }
    return 0;
}

int run_classnum(const Options& o) {
    const auto D = Discriminant::of(o.disc);
    const auto forms = reduced_forms(D);
    if (o.machine) {
        print_config(o, o.seed.value_or(env_default_seed()));
        json j;
        j["type"] = "classnum";
        j["discriminant"] = o.disc;
        j["fundamental"] = D.fundamental();
        j["conductor"] = D.conductor;
        j["h"] = (i64)forms.size();
        json fs = json::array();
        for (const auto& f : forms) fs.push_back({f.a, f.b, f.c});
        j["forms"] = fs;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "h(" << o.disc << ") = " << forms.size() << "\n";
        for (const auto& f : forms)
            std::cout << "  (" << f.a << ", " << f.b << ", " << f.c << ")\n";
    }
    return 0;
}

int run_hurwitz(const Options& o) {
    const auto D = Discriminant::of(o.disc);
    const Rational H = hurwitz(D);
    if (o.machine) {
        print_config(o, o.seed.value_or(env_default_seed()));
        json j;
        j["type"] = "hurwitz";
        j["discriminant"] = o.disc;
        j["num"] = H.num();
        j["den"] = H.den();
        j["value"] = H.str();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "H(" << o.disc << ") = " << H.str() << "\n";
    }
    return 0;
}

int run_dims(const Options& o) {
    const EllipticDims d = elliptic_dims(o.k, o.p);
    if (o.machine) {
        print_config(o, o.seed.value_or(env_default_seed()));
        json j;
        j["type"] = "dims";
        j["k"] = d.k;
        j["p"] = d.p;
        j["total"] = d.total;
        j["new"] = d.newspace;
        j["plus"] = d.plus ? json(*d.plus) : json(nullptr);
        j["minus"] = d.minus ? json(*d.minus) : json(nullptr);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "k=" << d.k << " p=" << d.p << ": total=" << d.total
                  << " new=" << d.newspace;
        if (d.plus)
            std::cout << " plus=" << *d.plus << " minus=" << *d.minus;
        else
            std::cout << " plus=n/a minus=n/a";
        std::cout << "\n";
    }
    return 0;
}

int run_types(const Options& o) {
    const ReprTypeCounts c = representation_type_counts(o.k, o.p);
    if (o.machine) {
        print_config(o, o.seed.value_or(env_default_seed()));
        json j;
        j["type"] = "types";
        j["k"] = c.k;
        j["p"] = c.p;
        j["s_Vb"] = c.s_Vb;
        j["s_VIc"] = c.s_VIc;
        j["s_P_VIb"] = c.s_P_VIb;
        j["s_Y_VIb"] = c.s_Y_VIb;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "k=" << c.k << " p=" << c.p << ": s_Vb=" << c.s_Vb << " s_VIc=" << c.s_VIc
                  << " s_P_VIb=" << c.s_P_VIb << " s_Y_VIb=" << c.s_Y_VIb << "\n";
    }
    return 0;
}

// Dims for a single verify instance, mirroring the scan source rules.
std::optional<SiegelDims> verify_dims(const Options& o, i64 k, i64 p, u64 seed,
                                      Provenance& prov, std::string& skip_reason) {
    if (o.synthetic) {
        std::mt19937_64 rng(seed);
        prov = Provenance::synthetic;
        return synthesize_dims(k, p, draw_free_counts(rng));
    }
    DimStore store;
    if (!o.dims_file.empty()) {
        store = DimStore();
        auto res = store.ingest(o.dims_file);
        if (!res.rejects.empty())
            throw std::runtime_error("dims file has " + std::to_string(res.rejects.size()) +
                                     " invalid rows (first: line " +
                                     std::to_string(res.rejects.front().line) + ": " +
                                     res.rejects.front().reason + ")");
    } else if (std::filesystem::exists(o.store_path)) {
        store = DimStore::attached(o.store_path);
    }
    prov = Provenance::ingested;
    auto dk = store.lookup(SiegelGroup::paramodular_K, p, k);
    auto dg = store.lookup(SiegelGroup::siegel_Gamma0, p, k);
    if (!dk || !dg) {
        skip_reason = "no ingested Siegel dimensions for (p=" + std::to_string(p) +
                      ", k=" + std::to_string(k) + ")";
        return std::nullopt;
    }
    SiegelDims dims;
    dims.p = p;
    dims.k = k;
    dims.dim_K = dk->dim;
    dims.dim_Gamma0 = dg->dim;
    if (auto dkl = store.lookup(SiegelGroup::klingen_Gamma0prime, p, k))
        dims.dim_Klingen = dkl->dim;
    return dims;
}

int run_verify(const Options& o) {
    const u64 seed = o.seed.value_or(env_default_seed());
    auto family = parse_theorem_family(o.theorem);
    if (!family) throw CLI::ValidationError("--theorem", "unknown theorem id " + o.theorem);
    print_config(o, seed);

    std::vector<CongruenceReport> reports;
    std::vector<SkipRecord> skips;
    Provenance prov = Provenance::computed;
    std::string reason;

    switch (*family) {
        case TheoremFamily::T33:
            reports.push_back(check_t33(o.k, o.p));
            break;
        case TheoremFamily::C42:
            if (o.n < 0) throw CLI::ValidationError("--n", "required for C42");
            reports.push_back(check_c42(o.k, o.n));
            break;
        case TheoremFamily::T31:
        case TheoremFamily::T32:
        case TheoremFamily::P34: {
            if (o.p < 2) throw CLI::ValidationError("--p", "required");
            auto dims = verify_dims(o, o.k, o.p, seed, prov, reason);
            if (!dims) {
                skips.push_back({*family, o.k, o.p, std::nullopt, reason});
                break;
            }
            if (*family == TheoremFamily::T31)
                reports.push_back(check_t31(o.k, o.p, *dims, prov));
            else if (*family == TheoremFamily::T32)
                reports.push_back(check_t32(o.k, o.p, *dims, prov));
            else
                reports.push_back(check_p34(o.k, o.p, *dims, prov));
            break;
        }
        case TheoremFamily::C41: {
            if (o.n < 0) throw CLI::ValidationError("--n", "required for C41");
            const i64 p = 8 * o.n + 5;
            auto dims = verify_dims(o, o.k, p, seed, prov, reason);
            if (!dims) {
                skips.push_back({*family, o.k, p, o.n, reason});
                break;
            }
            const i64 c4n = t_core_series(4, o.n).coeff_i64(o.n);
            auto [a, b] = check_c41(o.k, o.n, *dims, c4n, prov);
            reports.push_back(a);
            reports.push_back(b);
            break;
        }
    }
    emit_reports(o, reports, skips, 0, seed);
    return exit_code_for(reports);
}

int run_scan(const Options& o) {
    const u64 seed = o.seed.value_or(env_default_seed());
    auto family = parse_theorem_family(o.theorem);
    if (!family) throw CLI::ValidationError("--theorem", "unknown theorem id " + o.theorem);

    ScanConfig cfg;
    cfg.theorem = *family;
    std::tie(cfg.k_min, cfg.k_max) = parse_k_range(o.k_range);
    cfg.p_max = o.p_max;
    cfg.n_max = o.n_max;
    cfg.draws = o.draws;
    cfg.seed = seed;
    cfg.source = o.synthetic ? DimsSource::synthetic
                             : ((*family == TheoremFamily::T33 || *family == TheoremFamily::C42)
                                    ? DimsSource::computed
                                    : DimsSource::ingested);

    DimStore store;
    const DimStore* store_ptr = nullptr;
    if (cfg.source == DimsSource::ingested) {
        if (!o.dims_file.empty()) {
            auto res = store.ingest(o.dims_file);
            if (!res.rejects.empty())
                throw std::runtime_error("dims file has " + std::to_string(res.rejects.size()) +
                                         " invalid rows");
            store_ptr = &store;
        } else if (std::filesystem::exists(o.store_path)) {
            store = DimStore::attached(o.store_path);
            store_ptr = &store;
        } else {
            cfg.source = DimsSource::computed;  // nothing ingested: scans report skips
        }
    }

    print_config(o, seed);
    ScanOutcome out = ::congdim::run_scan(cfg, store_ptr);
    emit_reports(o, out.reports, out.skips, out.rejected_draws, seed);
    return exit_code_for(out.reports);
}

int run_ingest(const Options& o) {
    DimStore store = DimStore::attached(o.store_path);
    IngestResult res = store.ingest(o.ingest_file);
    if (o.machine) {
        print_config(o, o.seed.value_or(env_default_seed()));
        json j;
        j["type"] = "ingest";
        j["accepted"] = res.accepted;
        j["rejected"] = (i64)res.rejects.size();
        std::cout << j.dump() << "\n";
        for (const auto& r : res.rejects) {
            json rj;
            rj["type"] = "reject";
            rj["line"] = r.line;
            rj["row"] = r.row;
            rj["reason"] = r.reason;
            std::cout << rj.dump() << "\n";
        }
    } else {
        std::cout << "ingested " << res.accepted << " records into " << o.store_path << "\n";
        for (const auto& r : res.rejects)
            std::cout << "  reject line " << r.line << ": " << r.reason << " [" << r.row << "]\n";
    }
    return res.rejects.empty() ? 0 : 2;
}

int run_synth(const Options& o) {
    const u64 seed = o.seed.value_or(env_default_seed());
    print_config(o, seed);
    std::mt19937_64 rng(seed);
    const FreeCounts f = draw_free_counts(rng);
    const SiegelDims dims = synthesize_dims(o.k, o.p, f);
    if (o.machine) {
        json j;
        j["type"] = "synth";
        j["k"] = dims.k;
        j["p"] = dims.p;
        j["dim_K"] = dims.dim_K;
        j["dim_Gamma0"] = dims.dim_Gamma0;
        j["dim_Klingen"] = *dims.dim_Klingen;
        j["free"] = {{"s_I", f.s_I},
                     {"s_IIb", f.s_IIb},
                     {"s_IIa", f.s_IIa},
                     {"s_Va", f.s_Va},
                     {"s_IIIaVIab", f.s_IIIaVIab}};
        j["seed"] = seed;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "k=" << dims.k << " p=" << dims.p << ": dim_K=" << dims.dim_K
                  << " dim_Gamma0=" << dims.dim_Gamma0 << " dim_Klingen=" << *dims.dim_Klingen
                  << " (free: s_I=" << f.s_I << " s_IIb=" << f.s_IIb << " s_IIa=" << f.s_IIa
                  << " s_Va=" << f.s_Va << " s_IIIaVIab=" << f.s_IIIaVIab << ")\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    o.store_path = env_default_store();

    CLI::App app{"exact verification of Siegel dimension / class number / 4-core congruences"};
    app.require_subcommand(1);
    app.add_flag("--machine", o.machine, "emit line-delimited JSON records");
    app.add_option("--store", o.store_path, "dimension store path (env CONGDIM_STORE)");

    auto add_seed = [&](CLI::App* sub) {
        sub->add_option("--seed", [&o](const CLI::results_t& r) {
            o.seed = std::stoull(r[0]);
            return true;
        }, "RNG seed (env CONGDIM_SEED, default 0)");
    };

    auto* c4 = app.add_subcommand("c4", "t-core partition counts from the generating function");
    c4->add_option("--max", o.max_n, "highest n to print")->required()->check(CLI::NonNegativeNumber);
    c4->add_option("--t", o.t, "core size t (default 4)")->check(CLI::PositiveNumber);

    auto* cn = app.add_subcommand("classnum", "class number and reduced forms of a discriminant");
    cn->add_option("-D,--disc", o.disc, "negative discriminant")->required();

    auto* hw = app.add_subcommand("hurwitz", "Hurwitz class number as an exact fraction");
    hw->add_option("-D,--disc", o.disc, "negative discriminant")->required();

    auto* dm = app.add_subcommand("dims", "elliptic cusp form dimensions at prime level");
    dm->add_option("--k", o.k, "even weight")->required();
    dm->add_option("--p", o.p, "prime level (1 = full level)")->required();

    auto* ty = app.add_subcommand("types", "representation-type counts s_k(p, *)");
    ty->add_option("--k", o.k, "weight k >= 3")->required();
    ty->add_option("--p", o.p, "prime")->required();

    auto* vf = app.add_subcommand("verify", "check one congruence instance");
    vf->add_option("--theorem", o.theorem, "T31|T32|T33|P34|C41|C42")->required();
    vf->add_option("--k", o.k, "weight parameter")->required();
    vf->add_option("--p", o.p, "prime");
    vf->add_option("--n", o.n, "n parameter (C41/C42)");
    vf->add_option("--dims-file", o.dims_file, "CSV file with Siegel dimensions");
    vf->add_flag("--synthetic", o.synthetic, "use synthesized Siegel dimensions");
    add_seed(vf);

    auto* sc = app.add_subcommand("scan", "check a congruence family over a grid");
    sc->add_option("--theorem", o.theorem, "T31|T32|T33|P34|C41|C42")->required();
    sc->add_option("--k-range", o.k_range, "inclusive weight range A..B")->required();
    sc->add_option("--p-max", o.p_max, "largest prime level");
    sc->add_option("--n-max", o.n_max, "largest n (C41/C42)");
    sc->add_option("--dims-file", o.dims_file, "CSV file with Siegel dimensions");
    sc->add_flag("--synthetic", o.synthetic, "use synthesized Siegel dimensions");
    sc->add_option("--draws", o.draws, "synthetic draws per grid point")->check(CLI::PositiveNumber);
    add_seed(sc);

    auto* in = app.add_subcommand("ingest", "load a Siegel dimension table into the store");
    in->add_option("file", o.ingest_file, "input CSV")->required();

    auto* sy = app.add_subcommand("synth", "synthesize one Siegel dimension triple");
    sy->add_option("--k", o.k, "weight k >= 3")->required();
    sy->add_option("--p", o.p, "prime")->required();
    add_seed(sy);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // usage problems are exit 2, --help is 0
    }

    try {
        o.subcommand = app.get_subcommands().front()->get_name();
        if (*c4) return run_c4(o);
        if (*cn) return run_classnum(o);
        if (*hw) return run_hurwitz(o);
        if (*dm) return run_dims(o);
        if (*ty) return run_types(o);
        if (*vf) return run_verify(o);
        if (*sc) return run_scan(o);
        if (*in) return run_ingest(o);
        if (*sy) return run_synth(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
