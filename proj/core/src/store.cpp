#include "zslab/store.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdio>
#include <ctime>
#include <fstream>

namespace zslab {

namespace {

std::string kind_to_json_string(CertificateKind kind) {
    switch (kind) {
        case CertificateKind::AnySubsequence: return "any";
        case CertificateKind::ConsecutiveBlock: return "consecutive";
        case CertificateKind::FixedLength: return "length";
    }
    throw std::logic_error("bad certificate kind");
}

CertificateKind kind_from_json_string(const std::string& s) {
    if (s == "any") return CertificateKind::AnySubsequence;
    if (s == "consecutive") return CertificateKind::ConsecutiveBlock;
    if (s == "length") return CertificateKind::FixedLength;
    throw std::invalid_argument("bad certificate kind '" + s + "'");
}

}  // namespace

Json certificate_to_json(const ZeroSumCertificate& cert) {
    Json j;
    j["kind"] = kind_to_json_string(cert.kind);
    j["n"] = cert.n;
    if (cert.kind == CertificateKind::FixedLength) j["length"] = cert.fixed_length;
    j["indices"] = cert.indices;
    Json weights = Json::object();
    for (const auto& [idx, w] : cert.weights) weights[std::to_string(idx)] = w;
    j["weights"] = std::move(weights);
    return j;
}

ZeroSumCertificate certificate_from_json(const Json& j) {
    ZeroSumCertificate cert;
    cert.kind = kind_from_json_string(j.at("kind").get<std::string>());
    cert.n = j.at("n").get<std::uint64_t>();
    if (cert.kind == CertificateKind::FixedLength) cert.fixed_length = j.at("length").get<std::uint64_t>();
    cert.indices = j.at("indices").get<std::vector<std::size_t>>();
    for (const auto& [key, value] : j.at("weights").items())
        cert.weights[std::stoull(key)] = value.get<Residue>();
    return cert;
}

namespace {

std::string method_string(const ConstantResult& res) {
    switch (res.method) {
        case ComputeMethod::Exhaustive: return "exhaustive";
        case ComputeMethod::ClosedForm: return "closed-form:" + res.formula_id.value_or("");
        case ComputeMethod::LowerWitnessOnly: return "lower-witness-only";
        case ComputeMethod::UpperBoundOnly: return "upper-bound-only";
    }
    throw std::logic_error("bad compute method");
}

}  // namespace

Json constant_result_to_json(const ConstantResult& res) {
    Json j;
    j["kind"] = to_string(res.kind);
    j["n"] = res.n;
    j["weights"] = res.weights.to_string();
    if (res.value) j["value"] = *res.value;
    j["method"] = method_string(res);
    if (res.witness) j["witness"] = *res.witness;
    if (res.lower_bound) j["lower_bound"] = *res.lower_bound;
    if (res.upper_bound) j["upper_bound"] = *res.upper_bound;
    return j;
}

ConstantResult constant_result_from_json(const Json& j) {
    ConstantResult res;
    res.kind = parse_constant_kind(j.at("kind").get<std::string>());
    res.n = j.at("n").get<std::uint64_t>();
    res.weights = WeightSetSpec::parse(j.at("weights").get<std::string>());
    if (j.contains("value")) res.value = j.at("value").get<std::uint64_t>();
    std::string method = j.at("method").get<std::string>();
    if (method == "exhaustive") {
        res.method = ComputeMethod::Exhaustive;
    } else if (method.rfind("closed-form:", 0) == 0) {
        res.method = ComputeMethod::ClosedForm;
        res.formula_id = method.substr(12);
    } else if (method == "lower-witness-only") {
        res.method = ComputeMethod::LowerWitnessOnly;
    } else if (method == "upper-bound-only") {
        res.method = ComputeMethod::UpperBoundOnly;
    } else {
        throw std::invalid_argument("bad method '" + method + "'");
    }
    if (j.contains("witness")) res.witness = j.at("witness").get<std::vector<Residue>>();
    if (j.contains("lower_bound")) res.lower_bound = j.at("lower_bound").get<std::uint64_t>();
    if (j.contains("upper_bound")) res.upper_bound = j.at("upper_bound").get<std::uint64_t>();
    return res;
}

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::Predicted: return "predicted";
        case Provenance::Exhaustive: return "exhaustive";
        case Provenance::Verified: return "verified";
    }
    throw std::logic_error("bad provenance");
}

Provenance parse_provenance(const std::string& text) {
    if (text == "predicted") return Provenance::Predicted;
    if (text == "exhaustive") return Provenance::Exhaustive;
    if (text == "verified") return Provenance::Verified;
    throw std::invalid_argument("bad provenance '" + text + "'");
}

Json cache_entry_to_json(const CacheEntry& e) {
    Json j;
    j["key"] = Json{{"kind", to_string(e.key.kind)}, {"n", e.key.n}, {"weights", e.key.weights}};
    j["provenance"] = to_string(e.provenance);
    if (e.predicted) j["predicted"] = *e.predicted;
    j["result"] = constant_result_to_json(e.result);
    j["timestamp"] = e.timestamp;
    return j;
}

CacheEntry cache_entry_from_json(const Json& j) {
    CacheEntry e;
    const auto& key = j.at("key");
    e.key.kind = parse_constant_kind(key.at("kind").get<std::string>());
    e.key.n = key.at("n").get<std::uint64_t>();
    e.key.weights = key.at("weights").get<std::string>();
    e.provenance = parse_provenance(j.at("provenance").get<std::string>());
    if (j.contains("predicted")) e.predicted = j.at("predicted").get<std::uint64_t>();
    e.result = constant_result_from_json(j.at("result"));
    e.timestamp = j.at("timestamp").get<std::string>();
    return e;
}

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) {}

std::filesystem::path ResultCache::default_path() {
    if (const char* env = std::getenv("ZSLAB_CACHE")) return std::filesystem::path(env);
    return std::filesystem::path("zslab_cache.jsonl");
}

std::optional<CacheEntry> ResultCache::lookup(const CacheKey& key) const {
    std::ifstream in(path_);
    if (!in) return std::nullopt;
    std::optional<CacheEntry> found;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            CacheEntry e = cache_entry_from_json(Json::parse(line));
            if (e.key == key) found = std::move(e);  // newest wins
        } catch (const std::exception&) {
            continue;  // tolerate foreign/partial lines
        }
    }
    return found;
}

void ResultCache::append(const CacheEntry& entry) {
    if (entry.provenance == Provenance::Verified) {
        if (!entry.predicted || !entry.result.value || *entry.predicted != *entry.result.value)
            throw std::invalid_argument("cache: verified entries must carry an agreeing predicted value");
    }
    std::string line = cache_entry_to_json(entry).dump();
    line.push_back('\n');

    int fd = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
    if (fd < 0) throw std::runtime_error("cache: cannot open " + path_.string());
    ::flock(fd, LOCK_EX);
    ssize_t written = ::write(fd, line.data(), line.size());
    ::flock(fd, LOCK_UN);
    ::close(fd);
    if (written != static_cast<ssize_t>(line.size())) throw std::runtime_error("cache: short write");
}

std::string iso_utc_now() {
    std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

}  // namespace zslab
