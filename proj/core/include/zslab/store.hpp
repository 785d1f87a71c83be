// store.hpp — JSON serialization of certificates and constant results, and
// the append-only JSON-lines result cache used by the CLI.
#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "zslab/constants.hpp"
#include "zslab/solver.hpp"

namespace zslab {

using Json = nlohmann::ordered_json;

// Certificate wire format (indices 1-based, weights keyed by index):
//   {"kind":"consecutive","n":8,"indices":[2,3,4],"weights":{"2":1,"3":5,"4":1}}
// Fixed-length certificates add "length".
Json certificate_to_json(const ZeroSumCertificate& cert);
ZeroSumCertificate certificate_from_json(const Json& j);

// Constant-result wire format:
//   {"kind":"C","n":8,"weights":"units","value":8,"method":"exhaustive",
//    "witness":[4,2,4,1,4,2,4]}
// method is "exhaustive", "closed-form:<id>", "lower-witness-only" or
// "upper-bound-only"; partial results carry "lower_bound"/"upper_bound".
Json constant_result_to_json(const ConstantResult& res);
ConstantResult constant_result_from_json(const Json& j);

enum class Provenance { Predicted, Exhaustive, Verified };

std::string to_string(Provenance p);
Provenance parse_provenance(const std::string& text);

struct CacheKey {
    ConstantKind kind = ConstantKind::D;
    std::uint64_t n = 1;
    std::string weights;  // canonical weight-spec string

    friend auto operator<=>(const CacheKey&, const CacheKey&) = default;
};

struct CacheEntry {
    CacheKey key;
    Provenance provenance = Provenance::Exhaustive;
    std::optional<std::uint64_t> predicted;  // present on Predicted and Verified entries
    ConstantResult result;
    std::string timestamp;  // ISO-8601 UTC
};

Json cache_entry_to_json(const CacheEntry& e);
CacheEntry cache_entry_from_json(const Json& j);

/// One JSON object per line, append-only; the newest entry for a key wins.
/// Appends take an advisory exclusive lock (single writer); readers do not
/// lock. Verified entries must carry an agreeing predicted value.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path path);

    /// $ZSLAB_CACHE when set, else zslab_cache.jsonl in the working directory.
    static std::filesystem::path default_path();

    std::optional<CacheEntry> lookup(const CacheKey& key) const;
    void append(const CacheEntry& entry);

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

/// UTC timestamp for cache entries.
std::string iso_utc_now();

}  // namespace zslab
