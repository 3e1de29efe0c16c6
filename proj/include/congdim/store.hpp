// Ingestion, validation, and lookup of externally sourced Siegel cusp form
// dimension tables. Storage is a plain CSV table (header
// `group,p,k,dim,source`) kept in memory, optionally mirrored to an
// append-only backing file.
#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "congdim/arith.hpp"

namespace congdim {

enum class SiegelGroup { paramodular_K, siegel_Gamma0, klingen_Gamma0prime };

inline const char* to_string(SiegelGroup g) {
    switch (g) {
        case SiegelGroup::paramodular_K: return "paramodular_K";
        case SiegelGroup::siegel_Gamma0: return "siegel_Gamma0";
        case SiegelGroup::klingen_Gamma0prime: return "klingen_Gamma0prime";
    }
    return "?";
}

inline std::optional<SiegelGroup> parse_siegel_group(const std::string& s) {
    if (s == "paramodular_K") return SiegelGroup::paramodular_K;
    if (s == "siegel_Gamma0") return SiegelGroup::siegel_Gamma0;
    if (s == "klingen_Gamma0prime") return SiegelGroup::klingen_Gamma0prime;
    return std::nullopt;
}

struct DimRecord {
    SiegelGroup group = SiegelGroup::paramodular_K;
    i64 p = 0;
    i64 k = 0;
    i64 dim = 0;
    std::string source;

    bool operator==(const DimRecord&) const = default;
};

struct IngestReject {
    int line = 0;
    std::string row;
    std::string reason;
};

struct IngestResult {
    i64 accepted = 0;
    std::vector<IngestReject> rejects;
};

inline constexpr const char* kStoreHeader = "group,p,k,dim,source";

class DimStore {
  public:
    DimStore() = default;

    // Binds the store to a backing file; existing contents are loaded,
    // later ingests are appended.
    static DimStore attached(const std::filesystem::path& path) {
        DimStore s;
        s.backing_ = path;
        if (std::filesystem::exists(path)) {
            std::ifstream in(path);
            if (!in) throw std::runtime_error("store: cannot read " + path.string());
            IngestResult r = s.ingest_stream(in, /*persist=*/false);
            if (!r.rejects.empty())
                throw std::runtime_error("store: backing file " + path.string() +
                                         " contains invalid rows (line " +
                                         std::to_string(r.rejects.front().line) + ": " +
                                         r.rejects.front().reason + ")");
        }
        return s;
    }

    IngestResult ingest(const std::filesystem::path& input) {
        std::ifstream in(input);
        if (!in) throw std::runtime_error("ingest: cannot open " + input.string());
        return ingest_stream(in, /*persist=*/true);
    }

    // Parses and validates the whole batch before anything is committed;
    // a bad header or unreadable input is structural and aborts the batch.
    IngestResult ingest_stream(std::istream& in, bool persist = true) {
        struct Row {
            int line;
            std::string text;
            DimRecord rec;
        };
        IngestResult result;
        std::vector<Row> staged;
        std::string line;
        int line_no = 0;
        bool header_seen = false;
        while (std::getline(in, line)) {
            ++line_no;
            std::string t = trim(line);
            if (t.empty() || t[0] == '#') continue;
            if (!header_seen) {
                if (t != kStoreHeader)
                    throw std::runtime_error("ingest: line " + std::to_string(line_no) +
                                             ": header must be exactly `" +
                                             std::string(kStoreHeader) + "`, got `" + t + "`");
                header_seen = true;
                continue;
            }
            DimRecord rec;
            std::string reason;
            if (parse_row(t, rec, reason))
                staged.push_back({line_no, t, std::move(rec)});
            else
                result.rejects.push_back({line_no, t, reason});
        }
        if (!header_seen) throw std::runtime_error("ingest: missing header row");

        // Conflicts inside the batch reject every row with the offending key.
        std::map<Key, std::vector<std::size_t>> by_key;
        for (std::size_t i = 0; i < staged.size(); ++i)
            by_key[key_of(staged[i].rec)].push_back(i);
        std::vector<bool> drop(staged.size(), false);
        for (const auto& [key, idxs] : by_key) {
            bool conflict = false;
            for (std::size_t i : idxs)
                if (staged[idxs[0]].rec.dim != staged[i].rec.dim) conflict = true;
            if (conflict) {
                for (std::size_t i : idxs) {
                    drop[i] = true;
                    result.rejects.push_back({staged[i].line, staged[i].text,
                                              "conflicting dim values for duplicate key"});
                }
            } else {
                for (std::size_t j = 1; j < idxs.size(); ++j) drop[idxs[j]] = true;  // dedupe
            }
        }

        std::ofstream app;
        if (persist && !backing_.empty()) {
            bool fresh = !std::filesystem::exists(backing_) ||
                         std::filesystem::file_size(backing_) == 0;
            app.open(backing_, std::ios::app);
            if (!app) throw std::runtime_error("store: cannot append to " + backing_.string());
            if (fresh) app << kStoreHeader << "\n";
        }
        for (std::size_t i = 0; i < staged.size(); ++i) {
            if (drop[i]) continue;
            const auto& rec = staged[i].rec;
            auto it = records_.find(key_of(rec));
            if (it != records_.end()) {
                if (it->second.dim != rec.dim)
                    result.rejects.push_back({staged[i].line, staged[i].text,
                                              "conflicts with already stored dim = " +
                                                  std::to_string(it->second.dim)});
                continue;  // consistent duplicate of a stored record
            }
            records_.emplace(key_of(rec), rec);
            ++result.accepted;
            if (app.is_open()) app << format_row(rec) << "\n";
        }
        return result;
    }

    std::optional<DimRecord> lookup(SiegelGroup g, i64 p, i64 k) const {
        auto it = records_.find(Key{(int)g, p, k});
        if (it == records_.end()) return std::nullopt;
        return it->second;
    }

    void export_csv(std::ostream& out) const {
        out << kStoreHeader << "\n";
        for (const auto& [key, rec] : records_) out << format_row(rec) << "\n";
    }

    std::size_t size() const { return records_.size(); }

    std::vector<DimRecord> all() const {
        std::vector<DimRecord> out;
        out.reserve(records_.size());
        for (const auto& [key, rec] : records_) out.push_back(rec);
        return out;
    }

  private:
    using Key = std::tuple<int, i64, i64>;  // (group, p, k)

    static Key key_of(const DimRecord& r) { return Key{(int)r.group, r.p, r.k}; }

    static std::string trim(const std::string& s) {
        std::size_t b = s.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) return "";
        std::size_t e = s.find_last_not_of(" \t\r\n");
        return s.substr(b, e - b + 1);
    }

    static std::string format_row(const DimRecord& r) {
        std::ostringstream os;
        os << to_string(r.group) << "," << r.p << "," << r.k << "," << r.dim << "," << r.source;
        return os.str();
    }

    static bool parse_i64(const std::string& s, i64& out) {
        try {
            std::size_t pos = 0;
            out = std::stoll(s, &pos);
            return pos == s.size() && !s.empty();
        } catch (...) {
            return false;
        }
    }

    // group,p,k,dim,source -- the source field is free text and keeps any
    // commas after the fourth separator.
    static bool parse_row(const std::string& t, DimRecord& rec, std::string& reason) {
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (int i = 0; i < 4; ++i) {
            std::size_t comma = t.find(',', start);
            if (comma == std::string::npos) {
                reason = "expected 5 comma-separated fields";
                return false;
            }
            fields.push_back(trim(t.substr(start, comma - start)));
            start = comma + 1;
        }
        fields.push_back(trim(t.substr(start)));

        auto group = parse_siegel_group(fields[0]);
        if (!group) {
            reason = "unknown group `" + fields[0] + "`";
            return false;
        }
        i64 p, k, dim;
        if (!parse_i64(fields[1], p) || !parse_i64(fields[2], k) || !parse_i64(fields[3], dim)) {
            reason = "p, k, dim must be integers";
            return false;
        }
        if (!is_prime(p)) {
            reason = "p = " + fields[1] + " is not prime";
            return false;
        }
        if (k < 3) {
            reason = "k must be >= 3";
            return false;
        }
        if (dim < 0) {
            reason = "dim must be >= 0";
            return false;
        }
        if (fields[4].empty()) {
            reason = "source must be nonempty";
            return false;
        }
        rec = DimRecord{*group, p, k, dim, fields[4]};
        return true;
    }

    std::map<Key, DimRecord> records_;
    std::filesystem::path backing_;
};

}  // namespace congdim
