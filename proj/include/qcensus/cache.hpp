#pragma once

// On-disk census cache: versioned JSON-lines, one self-contained entry per
// (r, alpha, beta, w, n) key.  Entries that fail validation -- wrong version,
// malformed JSON, or a dimension count that does not match the number of
// fixed points -- are dropped and recomputed; saving rewrites the whole file
// atomically (write-temp, then rename), which also repairs damage.

#include "qcensus/census.hpp"

#include "json.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <string>

namespace qcensus {

inline constexpr int kCensusCacheVersion = 1;

class JsonlCensusStore final : public CensusStore {
public:
    explicit JsonlCensusStore(std::string path) : path_(std::move(path)) { load_file(); }

    ~JsonlCensusStore() override {
        try {
            save();
        } catch (...) {
        }
    }

    std::optional<std::vector<int>> load(const CensusKey& key) override {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = entries_.find(key);
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    void store(const CensusKey& key, const std::vector<int>& dims) override {
        std::lock_guard<std::mutex> lock(mutex_);
        entries_.insert_or_assign(key, dims);
        dirty_ = true;
    }

    std::size_t entry_count() const { return entries_.size(); }

    // Atomic rewrite of the whole file.  An unwritable path degrades to
    // in-memory operation with a one-time warning.
    void save() {
        std::lock_guard<std::mutex> lock(mutex_);
        if (!dirty_) return;
        const std::string tmp = path_ + ".tmp";
        {
            std::ofstream out(tmp, std::ios::trunc);
            if (!out) {
                warn_unwritable();
                return;
            }
            for (const auto& [key, dims] : entries_) {
                nlohmann::ordered_json line;
                line["v"] = kCensusCacheVersion;
                line["r"] = key.r;
                line["alpha"] = key.alpha;
                line["beta"] = key.beta;
                line["w"] = key.w;
                line["n"] = key.n;
                line["dims"] = dims;
                out << line.dump() << "\n";
            }
            if (!out.good()) {
                warn_unwritable();
                std::error_code ec;
                std::filesystem::remove(tmp, ec);
                return;
            }
        }
        std::error_code ec;
        std::filesystem::rename(tmp, path_, ec);
        if (ec) {
            warn_unwritable();
            std::filesystem::remove(tmp, ec);
            return;
        }
        dirty_ = false;
    }

private:
    void warn_unwritable() {
        if (!warned_) {
            std::fprintf(stderr, "qcensus: warning: cache path '%s' is not writable; continuing in-memory\n",
                         path_.c_str());
            warned_ = true;
        }
    }

    void load_file() {
        std::ifstream in(path_);
        if (!in) return;  // nothing cached yet
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            nlohmann::json entry = nlohmann::json::parse(line, nullptr, false);
            if (!valid_entry(entry)) {
                dirty_ = true;  // repaired on the next save
                continue;
            }
            CensusKey key{entry["r"].get<int>(), entry["alpha"].get<int>(), entry["beta"].get<int>(),
                          entry["w"].get<std::vector<int>>(), entry["n"].get<int>()};
            entries_.insert_or_assign(std::move(key), entry["dims"].get<std::vector<int>>());
        }
    }

    static bool valid_entry(const nlohmann::json& entry) {
        if (!entry.is_object()) return false;
        for (const char* key : {"v", "r", "alpha", "beta", "n"})
            if (!entry.contains(key) || !entry[key].is_number_integer()) return false;
        if (entry["v"].get<int>() != kCensusCacheVersion) return false;
        if (!entry.contains("w") || !entry["w"].is_array()) return false;
        if (!entry.contains("dims") || !entry["dims"].is_array()) return false;
        const int r = entry["r"].get<int>();
        const int n = entry["n"].get<int>();
        if (r < 1 || n < 0) return false;
        if (entry["alpha"].get<int>() < 1 || entry["beta"].get<int>() < 1) return false;
        if (static_cast<int>(entry["w"].size()) != r) return false;
        for (const auto& w : entry["w"])
            if (!w.is_number_integer()) return false;
        int prev = 0;
        for (const auto& d : entry["dims"]) {
            if (!d.is_number_integer() || d.get<int>() < prev) return false;  // sorted, >= 0
            prev = d.get<int>();
        }
        // A stored multiset must account for every fixed point of size n.
        return Int(entry["dims"].size()) == count_fixed_points(r, n);
    }

    std::mutex mutex_;
    std::string path_;
    std::map<CensusKey, std::vector<int>> entries_;
    bool dirty_ = false;
    bool warned_ = false;
};

}  // namespace qcensus
