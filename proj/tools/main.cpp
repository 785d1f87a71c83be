// zslab — zero-sum constants of Z_n: exact computation, closed forms,
// certificates, extremal sequences, GF(2) kernel fixtures, result cache.
//
// Subcommands: constant, solve, extremal, table, gf2, probe-weights.
// Exit codes: 0 ok/found, 1 complete search found none, 2 bad input,
// 3 budget exhausted, 4 predict/exhaustive mismatch.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zslab/constants.hpp"
#include "zslab/store.hpp"

namespace {

using namespace zslab;

constexpr int kExitFound = 0;
constexpr int kExitNone = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitMismatch = 4;

std::vector<Residue> parse_sequence(const std::string& text, std::uint64_t n) {
    std::vector<Residue> terms;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad sequence term '" + item + "'");
        if (v >= n) throw std::invalid_argument("sequence term " + item + " not in [0, n)");
        terms.push_back(v);
    }
    if (terms.empty()) throw std::invalid_argument("empty sequence");
    return terms;
}

struct ConstantArgs {
    std::string kind;
    std::uint64_t n = 0;
    std::string weights;
    std::string method = "verify";
    std::uint64_t budget = 1'000'000'000;
    bool no_cache = false;
};

int run_constant(const ConstantArgs& args) {
    ConstantKind kind = parse_constant_kind(args.kind);
    RingSpec ring = factorize(args.n);
    WeightSetSpec spec = WeightSetSpec::parse(args.weights);
    CacheKey key{kind, args.n, spec.to_string()};
    ResultCache cache(ResultCache::default_path());

    auto emit = [](const ConstantResult& res) { std::cout << constant_result_to_json(res).dump() << "\n"; };

    if (args.method == "predict") {
        auto res = predict(kind, ring, spec);
        if (!res) {
            Json j{{"kind", to_string(kind)}, {"n", args.n}, {"weights", spec.to_string()}, {"method", "no-formula"}};
            std::cout << j.dump() << "\n";
            return kExitFound;
        }
        if (!args.no_cache) cache.append({key, Provenance::Predicted, res->value, *res, iso_utc_now()});
        emit(*res);
        return kExitFound;
    }

    if (args.method != "exhaustive" && args.method != "verify")
        throw std::invalid_argument("--method must be predict, exhaustive or verify");

    if (!args.no_cache) {
        if (auto hit = cache.lookup(key)) {
            bool usable = (args.method == "exhaustive" && hit->provenance != Provenance::Predicted) ||
                          (args.method == "verify" && hit->provenance == Provenance::Verified);
            if (usable && hit->result.value) {
                emit(hit->result);
                return kExitFound;
            }
        }
    }

    SearchBudget budget(args.budget);
    std::optional<ConstantResult> predicted = predict(kind, ring, spec);
    std::optional<std::uint64_t> hint = predicted ? predicted->value : std::nullopt;
    ConstantResult computed = compute_exhaustive(kind, ring, spec, budget, hint);
    if (!computed.value) {
        emit(computed);  // partial with bracketing bounds
        return kExitBudget;
    }
    if (args.method == "verify" && predicted && predicted->value != computed.value) {
        Json j{{"error", "predict/exhaustive mismatch"},
               {"predicted", *predicted->value},
               {"computed", *computed.value}};
        std::cout << j.dump() << "\n";
        return kExitMismatch;
    }
    if (!args.no_cache) {
        bool verified = args.method == "verify" && predicted;
        cache.append({key, verified ? Provenance::Verified : Provenance::Exhaustive,
                      verified ? predicted->value : std::nullopt, computed, iso_utc_now()});
    }
    emit(computed);
    return kExitFound;
}

struct SolveArgs {
    std::uint64_t n = 0;
    std::string weights;
    std::string sequence;
    std::string kind = "any";
};

int run_solve(const SolveArgs& args) {
    RingSpec ring = factorize(args.n);
    WeightSet w = materialize(WeightSetSpec::parse(args.weights), ring);
    ResidueSequence s(args.n, parse_sequence(args.sequence, args.n));

    SolverVerdict verdict;
    if (args.kind == "any") {
        verdict = solve_any(s, w);
    } else if (args.kind == "consecutive") {
        verdict = solve_consecutive(s, w);
    } else if (args.kind.rfind("length:", 0) == 0) {
        verdict = solve_fixed_length(s, w, std::stoull(args.kind.substr(7)));
    } else {
        throw std::invalid_argument("--kind must be any, consecutive or length:L");
    }
    if (!verdict.found) {
        std::cout << "none\n";
        return kExitNone;
    }
    if (!verify_certificate(s, w, *verdict.certificate)) throw std::logic_error("certificate failed verification");
    std::cout << certificate_to_json(*verdict.certificate).dump() << "\n";
    return kExitFound;
}

struct ExtremalArgs {
    std::string kind;
    std::uint64_t n = 0;
    std::string weights;
    bool enumerate = false;
    bool up_to_equivalence = false;
    std::string classify;
    std::uint64_t budget = 1'000'000'000;
};

int run_extremal(const ExtremalArgs& args) {
    ConstantKind kind = parse_constant_kind(args.kind);
    RingSpec ring = factorize(args.n);
    WeightSetSpec spec = WeightSetSpec::parse(args.weights);

    if (!args.classify.empty()) {
        ResidueSequence s(args.n, parse_sequence(args.classify, args.n));
        bool verdict;
        if (kind == ConstantKind::C) {
            verdict = classify_c_extremal_pow2(s).extremal;
        } else if (kind == ConstantKind::E) {
            verdict = classify_e_extremal_pow2(s);
        } else {
            throw std::invalid_argument("--classify supports kinds C and E");
        }
        std::cout << (verdict ? "true" : "false") << "\n";
        return kExitFound;
    }
    if (!args.enumerate) throw std::invalid_argument("extremal: pass --enumerate or --classify=SEQ");

    SearchBudget budget(args.budget);
    auto list = enumerate_extremal(kind, ring, spec, args.up_to_equivalence, budget);
    Json j;
    j["kind"] = to_string(kind);
    j["n"] = args.n;
    j["weights"] = spec.to_string();
    j["up_to_equivalence"] = args.up_to_equivalence;
    j["count"] = list.size();
    Json seqs = Json::array();
    for (const auto& s : list) seqs.push_back(s.terms);
    j["sequences"] = std::move(seqs);
    std::cout << j.dump() << "\n";
    return kExitFound;
}

struct TableArgs {
    std::string kinds = "C,D,E";
    std::string n_range;
    std::string parity = "all";
    std::string weights;
    std::string format = "csv";
    std::string out;
    std::uint64_t budget = 1'000'000'000;
};

int run_table(const TableArgs& args) {
    auto split = [](const std::string& text, char sep) {
        std::vector<std::string> parts;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, sep))
            if (!item.empty()) parts.push_back(item);
        return parts;
    };
    auto range_pos = args.n_range.find("..");
    if (range_pos == std::string::npos) throw std::invalid_argument("--n-range must be like 2..12");
    std::uint64_t lo = std::stoull(args.n_range.substr(0, range_pos));
    std::uint64_t hi = std::stoull(args.n_range.substr(range_pos + 2));
    if (lo < 2 || hi < lo) throw std::invalid_argument("--n-range must satisfy 2 <= lo <= hi");

    std::vector<ConstantKind> kinds;
    for (const auto& k : split(args.kinds, ',')) kinds.push_back(parse_constant_kind(k));
    std::sort(kinds.begin(), kinds.end(),
              [](ConstantKind a, ConstantKind b) { return to_string(a) < to_string(b); });
    std::vector<WeightSetSpec> weight_specs;
    for (const auto& w : split(args.weights, ';')) weight_specs.push_back(WeightSetSpec::parse(w));
    if (weight_specs.empty()) throw std::invalid_argument("--weights is required (semicolon-separated specs)");
    std::sort(weight_specs.begin(), weight_specs.end(),
              [](const WeightSetSpec& a, const WeightSetSpec& b) { return a.to_string() < b.to_string(); });

    bool budget_hit = false;
    struct Row {
        std::uint64_t n;
        std::string kind, weights, predicted, computed, method;
    };
    std::vector<Row> rows;
    for (std::uint64_t n = lo; n <= hi; ++n) {
        if (args.parity == "even" && n % 2 != 0) continue;
        if (args.parity == "odd" && n % 2 != 1) continue;
        RingSpec ring = factorize(n);
        for (auto kind : kinds) {
            for (const auto& spec : weight_specs) {
                Row row{n, to_string(kind), spec.to_string(), "", "", ""};
                try {
                    auto p = predict(kind, ring, spec);
                    if (p && p->value) row.predicted = std::to_string(*p->value);
                    SearchBudget budget(args.budget);
                    auto res = compute_exhaustive(kind, ring, spec, budget,
                                                  p && p->value ? p->value : std::nullopt);
                    if (res.value) {
                        row.computed = std::to_string(*res.value);
                        row.method = "exhaustive";
                    } else {
                        budget_hit = true;
                        row.method = res.method == ComputeMethod::UpperBoundOnly ? "upper-bound-only"
                                                                                 : "lower-witness-only";
                        std::string lo_s = res.lower_bound ? std::to_string(*res.lower_bound) : "?";
                        std::string hi_s = res.upper_bound ? std::to_string(*res.upper_bound) : "?";
                        row.computed = lo_s + ".." + hi_s;
                    }
                } catch (const std::invalid_argument&) {
                    row.method = "unusable-weights";  // e.g. `even` at n = 2
                }
                rows.push_back(std::move(row));
            }
        }
    }

    std::ostringstream body;
    if (args.format == "csv") {
        body << "kind,n,weights,predicted,computed,method\n";
        for (const auto& r : rows)
            body << r.kind << ',' << r.n << ',' << r.weights << ',' << r.predicted << ',' << r.computed << ','
                 << r.method << "\n";
    } else if (args.format == "json") {
        Json arr = Json::array();
        for (const auto& r : rows) {
            Json j;
            j["kind"] = r.kind;
            j["n"] = r.n;
            j["weights"] = r.weights;
            j["predicted"] = r.predicted;
            j["computed"] = r.computed;
            j["method"] = r.method;
            arr.push_back(std::move(j));
        }
        body << arr.dump(2) << "\n";
    } else {
        throw std::invalid_argument("--format must be csv or json");
    }

    if (args.out.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(args.out);
        if (!out) {
            std::cerr << "zslab: cannot write " << args.out << "\n";
            return kExitUsage;
        }
        out << body.str();
    }
    return budget_hit ? kExitBudget : kExitFound;
}

struct Gf2Args {
    std::string op;
    std::uint64_t m = 0;
    std::string file = "-";
};

int run_gf2(const Gf2Args& args) {
    gf2::GF2Matrix p;
    if (args.file == "-") {
        p = gf2::read_matrix_text(std::cin);
    } else {
        std::ifstream in(args.file);
        if (!in) throw std::invalid_argument("cannot read " + args.file);
        p = gf2::read_matrix_text(in);
    }

    Json j;
    j["op"] = args.op;
    if (args.op == "window") {
        auto w = gf2::find_zero_xor_window(p);
        if (!w) {
            std::cout << "none\n";
            return kExitNone;
        }
        j["lo"] = w->lo;
        j["hi"] = w->hi;
        j["verified"] = gf2::xor_of_window(p, *w).is_zero();
    } else if (args.op == "subset") {
        auto s = gf2::find_zero_xor_subset(p);
        if (!s) {
            std::cout << "none\n";
            return kExitNone;
        }
        j["indices"] = s->indices;
        j["verified"] = gf2::xor_of_rows(p, s->indices).is_zero();
    } else if (args.op == "fixed-weight") {
        auto s = gf2::kernel_fixed_weight(p, static_cast<std::uint32_t>(args.m));
        j["m"] = args.m;
        j["indices"] = s.indices;
        j["verified"] = gf2::xor_of_rows(p, s.indices).is_zero();
    } else {
        throw std::invalid_argument("--op must be window, subset or fixed-weight");
    }
    std::cout << j.dump() << "\n";
    return kExitFound;
}

int run_probe_weights(std::uint64_t n, std::uint64_t budget_steps) {
    RingSpec ring = factorize(n);
    SearchBudget budget(budget_steps);
    auto exceeding = probe_half_size_weight_sets(ring, budget);
    Json j;
    j["n"] = n;
    j["set_size"] = (n - 1) / 2;
    j["exceeding_three"] = Json::array();
    for (const auto& r : exceeding) {
        j["exceeding_three"].push_back(
            Json{{"weights", r.weights.to_string()}, {"D", r.d_value}, {"C", r.c_value}});
    }
    std::cout << j.dump() << "\n";
    return kExitFound;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero-sum constants of Z_n: exact search, closed forms, certificates"};
    app.require_subcommand(1);

    ConstantArgs cargs;
    auto* constant = app.add_subcommand("constant", "compute or predict D_A(n), C_A(n), E_A(n)");
    constant->add_option("kind", cargs.kind, "D, C or E")->required();
    constant->add_option("n", cargs.n, "modulus")->required();
    constant->add_option("weights", cargs.weights, "weight-set spec, e.g. units, odd, interval:3")->required();
    constant->add_option("--method", cargs.method, "predict | exhaustive | verify (default verify)");
    constant->add_option("--budget", cargs.budget, "search step budget");
    constant->add_flag("--no-cache", cargs.no_cache, "skip the result cache");

    SolveArgs sargs;
    auto* solve = app.add_subcommand("solve", "find an A-weighted zero-sum subsequence certificate");
    solve->add_option("n", sargs.n, "modulus")->required();
    solve->add_option("weights", sargs.weights, "weight-set spec")->required();
    solve->add_option("sequence", sargs.sequence, "comma-separated residues in [0, n)")->required();
    solve->add_option("--kind", sargs.kind, "any | consecutive | length:L (default any)");

    ExtremalArgs eargs;
    auto* extremal = app.add_subcommand("extremal", "enumerate or classify extremal sequences");
    extremal->add_option("kind", eargs.kind, "D, C or E")->required();
    extremal->add_option("n", eargs.n, "modulus")->required();
    extremal->add_option("weights", eargs.weights, "weight-set spec")->required();
    extremal->add_flag("--enumerate", eargs.enumerate, "list all extremal sequences");
    extremal->add_flag("--up-to-equivalence", eargs.up_to_equivalence, "one representative per class");
    extremal->add_option("--classify", eargs.classify, "classify this sequence (powers of 2, units)");
    extremal->add_option("--budget", eargs.budget, "search step budget");

    TableArgs targs;
    auto* table = app.add_subcommand("table", "emit predicted-vs-computed constants table");
    table->add_option("--kinds", targs.kinds, "comma list of D,C,E (default all)");
    table->add_option("--n-range", targs.n_range, "inclusive range lo..hi")->required();
    table->add_option("--parity", targs.parity, "all | even | odd (default all)");
    table->add_option("--weights", targs.weights, "semicolon-separated weight specs")->required();
    table->add_option("--format", targs.format, "csv | json (default csv)");
    table->add_option("--out", targs.out, "output file (default stdout)");
    table->add_option("--budget", targs.budget, "search step budget per cell");

    Gf2Args gargs;
    auto* g = app.add_subcommand("gf2", "run a GF(2) kernel solver on a matrix fixture");
    g->add_option("--op", gargs.op, "window | subset | fixed-weight")->required();
    g->add_option("--m", gargs.m, "selection size for fixed-weight");
    g->add_option("file", gargs.file, "matrix file ('m a' header then 0/1 rows); - for stdin");

    std::uint64_t probe_n = 0;
    std::uint64_t probe_budget = 1'000'000'000;
    auto* probe = app.add_subcommand("probe-weights",
                                     "scan all weight sets of size (n-1)/2 (odd n) for D or C above 3");
    probe->add_option("n", probe_n, "odd modulus")->required();
    probe->add_option("--budget", probe_budget, "search step budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : kExitUsage;
    }

    try {
        if (*constant) return run_constant(cargs);
        if (*solve) return run_solve(sargs);
        if (*extremal) return run_extremal(eargs);
        if (*table) return run_table(targs);
        if (*g) return run_gf2(gargs);
        if (*probe) return run_probe_weights(probe_n, probe_budget);
    } catch (const BudgetExceeded&) {
        std::cerr << "zslab: search budget exhausted\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "zslab: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "zslab: internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
