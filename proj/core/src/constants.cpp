#include "zslab/constants.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>

namespace zslab {

std::string to_string(ConstantKind k) {
    switch (k) {
        case ConstantKind::D: return "D";
        case ConstantKind::C: return "C";
        case ConstantKind::E: return "E";
    }
    throw std::logic_error("to_string(ConstantKind): bad value");
}

ConstantKind parse_constant_kind(const std::string& text) {
    if (text == "D" || text == "d") return ConstantKind::D;
    if (text == "C" || text == "c") return ConstantKind::C;
    if (text == "E" || text == "e") return ConstantKind::E;
    throw std::invalid_argument("constant kind must be one of D, C, E");
}

namespace {

// Batches budget ticks so the atomic counter stays off the hot path.
class TickBatch {
public:
    explicit TickBatch(SearchBudget& budget) : budget_(budget) {}
    void tick() {
        if (++local_ >= 4096) flush();
    }
    void flush() {
        if (local_) {
            budget_.tick(local_);
            local_ = 0;
        }
    }

private:
    SearchBudget& budget_;
    std::uint64_t local_ = 0;
};

std::uint64_t rot_bits(std::uint64_t mask, std::uint64_t s, std::uint64_t n, std::uint64_t full) {
    if (s == 0) return mask;
    return ((mask << s) | (mask >> (n - s))) & full;
}

// Reachable-sum search engine over Z_n for one weight set; n is limited to
// 64 so sum sets fit one machine word. For n <= 16 each value gets a full
// transform table mask -> union of rotations, built by lowest-bit DP.
class SearchEngine {
public:
    SearchEngine(const RingSpec& ring, const WeightSet& w, SearchBudget& budget)
        : n_(ring.n), full_(n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1), ticks_(budget) {
        if (n_ < 2 || n_ > 64) throw std::invalid_argument("exhaustive search supports 2 <= n <= 64");
        img_.resize(n_);
        img_mask_.assign(n_, 0);
        for (std::uint64_t x = 0; x < n_; ++x) {
            for (auto a : w.values) {
                std::uint64_t s = mul_mod(a, x, n_);
                img_mask_[x] |= std::uint64_t{1} << s;
            }
            for (std::uint64_t s = 0; s < n_; ++s)
                if ((img_mask_[x] >> s) & 1) img_[x].push_back(s);
        }
        if (n_ <= 16) {
            table_.resize(n_);
            for (std::uint64_t x = 0; x < n_; ++x) {
                auto& t = table_[x];
                t.assign(std::size_t{1} << n_, 0);
                for (std::uint64_t b = 0; b < n_; ++b)
                    t[std::size_t{1} << b] = static_cast<std::uint16_t>(rot_bits(img_mask_[x], b, n_, full_));
                for (std::size_t mask = 1; mask < t.size(); ++mask) {
                    std::size_t low = mask & (~mask + 1);
                    if (mask != low) t[mask] = t[mask ^ low] | t[low];
                }
            }
        }
    }

    std::uint64_t modulus() const { return n_; }

    // { r + a*x : r in mask, a in A } — the every-term-weighted step.
    std::uint64_t step_weighted(std::uint64_t mask, std::uint64_t x) const {
        if (!table_.empty()) return table_[x][mask];
        std::uint64_t acc = 0;
        for (auto s : img_[x]) acc |= rot_bits(mask, s, n_, full_);
        return acc;
    }

    // reach' for "each term optionally picked": reach | step(reach ∪ {0}).
    std::uint64_t step_any(std::uint64_t reach, std::uint64_t x) const {
        return reach | step_weighted(reach | 1, x);
    }

    std::uint64_t image_mask(std::uint64_t x) const { return img_mask_[x]; }
    void tick() { ticks_.tick(); }
    void flush_ticks() { ticks_.flush(); }

private:
    std::uint64_t n_;
    std::uint64_t full_;
    std::vector<std::vector<std::uint64_t>> img_;
    std::vector<std::uint64_t> img_mask_;
    std::vector<std::vector<std::uint16_t>> table_;
    TickBatch ticks_;
};

using TermVisitor = std::function<bool(const std::vector<Residue>&)>;  // false stops the walk

// ---- D: multisets with no weighted zero-sum subset anywhere ------------------

bool walk_d_bad(SearchEngine& eng, std::uint64_t min_value, std::size_t slots, std::uint64_t reach,
                std::vector<Residue>& terms, const TermVisitor& visit) {
    if (slots == 0) return visit(terms);
    for (std::uint64_t v = min_value; v < eng.modulus(); ++v) {
        eng.tick();
        std::uint64_t next = eng.step_any(reach, v);
        if (next & 1) continue;  // this branch already has a zero-sum: all good
        terms.push_back(v);
        if (!walk_d_bad(eng, v, slots - 1, next, terms, visit)) return false;
        terms.pop_back();
    }
    return true;
}

// ---- E: multisets with no weighted zero-sum subset of size exactly n ---------

bool walk_e_bad(SearchEngine& eng, std::uint64_t min_value, std::size_t slots,
                std::vector<std::uint64_t>& rows, std::vector<Residue>& terms, const TermVisitor& visit) {
    const std::size_t target = static_cast<std::size_t>(eng.modulus());
    if (slots == 0) return visit(terms);
    for (std::uint64_t v = min_value; v < eng.modulus(); ++v) {
        eng.tick();
        std::vector<std::uint64_t> saved = rows;
        std::size_t top = std::min(terms.size(), target - 1);
        for (std::size_t c = top + 1; c-- > 0;) rows[c + 1] |= eng.step_weighted(rows[c], v);
        if (rows[target] & 1) {
            rows = saved;  // a length-n zero-sum appeared: subtree all good
            continue;
        }
        terms.push_back(v);
        bool keep_going = walk_e_bad(eng, v, slots - 1, rows, terms, visit);
        terms.pop_back();
        rows = std::move(saved);
        if (!keep_going) return false;
    }
    return true;
}

// ---- C: sequences with no weighted zero-sum block ----------------------------

struct CSearchContext {
    SearchEngine& eng;
    std::size_t length;
    const TermVisitor& visit;
    const std::vector<Residue>* root_values;        // scaling-reduced roots, or null
    std::vector<std::vector<std::uint64_t>> layers;  // layers[d]: block reach masks at depth d
};

// layers[d][start] is the sum set of the fully-weighted block start..d-1.
bool walk_c_bad(CSearchContext& ctx, std::vector<Residue>& terms) {
    const std::size_t depth = terms.size();
    if (depth == ctx.length) return ctx.visit(terms);
    const bool at_root = depth == 0 && ctx.root_values != nullptr;
    const std::size_t count = at_root ? ctx.root_values->size() : static_cast<std::size_t>(ctx.eng.modulus());
    const auto& reach = ctx.layers[depth];
    auto& child = ctx.layers[depth + 1];
    for (std::size_t vi = 0; vi < count; ++vi) {
        std::uint64_t v = at_root ? (*ctx.root_values)[vi] : vi;
        ctx.eng.tick();
        std::uint64_t fresh = ctx.eng.image_mask(v);
        if (fresh & 1) continue;  // the one-term block closes: skip
        bool good = false;
        for (std::size_t start = 0; start < depth; ++start) {
            std::uint64_t r = ctx.eng.step_weighted(reach[start], v);
            if (r & 1) {
                good = true;
                break;
            }
            child[start] = r;
        }
        if (good) continue;
        child[depth] = fresh;
        terms.push_back(v);
        bool keep_going = walk_c_bad(ctx, terms);
        terms.pop_back();
        if (!keep_going) return false;
    }
    return true;
}

bool walk_c_bad_root(SearchEngine& eng, std::size_t length, const TermVisitor& visit,
                     const std::vector<Residue>* root_values) {
    if (length == 0) {
        std::vector<Residue> empty;
        return visit(empty);
    }
    CSearchContext ctx{eng, length, visit, root_values, {}};
    ctx.layers.assign(length + 1, {});
    for (std::size_t d = 0; d <= length; ++d) ctx.layers[d].assign(d, 0);
    std::vector<Residue> terms;
    return walk_c_bad(ctx, terms);
}

// True when scaling the sequence by any unit keeps the weight set usable
// for the quotient argument (the conservative gate: A closed under units).
bool closed_under_unit_scaling(const WeightSet& w) {
    for (auto u : units_of(w.n))
        for (auto a : w.values)
            if (!w.contains(mul_mod(a, u, w.n))) return false;
    return true;
}

// Representatives v with v = min(orbit of v under U(n) scaling), nonzero.
std::vector<Residue> unit_orbit_minima(std::uint64_t n) {
    std::vector<Residue> mins;
    auto units = units_of(n);
    for (Residue x = 1; x < n; ++x) {
        Residue m = x;
        for (auto u : units) m = std::min<Residue>(m, mul_mod(u, x, n));
        if (m == x) mins.push_back(x);
    }
    return mins;
}

struct KindEngine {
    ConstantKind kind;
    RingSpec ring;
    WeightSet weights;
    SearchEngine eng;
    bool scaling_quotient;
    std::vector<Residue> roots;

    KindEngine(ConstantKind k, const RingSpec& r, const WeightSet& w, SearchBudget& budget)
        : kind(k), ring(r), weights(w), eng(r, w, budget) {
        scaling_quotient = (kind == ConstantKind::C) && closed_under_unit_scaling(w);
        if (scaling_quotient) roots = unit_orbit_minima(r.n);
    }

    // Walks bad (structure-free) candidates of the given length; the visitor
    // returns false to stop early. Returns false iff stopped.
    bool walk_bad(std::size_t length, const TermVisitor& visit, bool quotient_ok) {
        bool complete;
        switch (kind) {
            case ConstantKind::D: {
                std::vector<Residue> terms;
                complete = length == 0 ? visit(terms) : walk_d_bad(eng, 0, length, 0, terms, visit);
                break;
            }
            case ConstantKind::E: {
                std::vector<Residue> terms;
                std::vector<std::uint64_t> rows(ring.n + 1, 0);
                rows[0] = 1;
                complete = length == 0 ? visit(terms) : walk_e_bad(eng, 0, length, rows, terms, visit);
                break;
            }
            case ConstantKind::C:
                complete = walk_c_bad_root(eng, length, visit,
                                           quotient_ok && scaling_quotient ? &roots : nullptr);
                break;
            default: throw std::logic_error("KindEngine: bad kind");
        }
        eng.flush_ticks();
        return complete;
    }

    bool all_good(std::size_t length, std::optional<std::vector<Residue>>* counterexample) {
        // Singleton weights reduce exactly: a block is zero iff the plain sum
        // vanishes mod n/gcd(a,n), so badness is prefix-sum injectivity mod q
        // and length q is the cutoff.
        if (kind == ConstantKind::C && weights.size() == 1) {
            std::uint64_t q = ring.n / std::gcd(weights.values[0], ring.n);
            if (length >= q) return true;
            if (counterexample) *counterexample = std::vector<Residue>(length, 1 % ring.n);
            return false;
        }
        bool found_bad = false;
        walk_bad(
            length,
            [&](const std::vector<Residue>& terms) {
                found_bad = true;
                if (counterexample) *counterexample = terms;
                return false;
            },
            /*quotient_ok=*/true);
        return !found_bad;
    }
};

}  // namespace

ConstantResult compute_exhaustive(ConstantKind kind, const RingSpec& ring, const WeightSetSpec& spec,
                                  SearchBudget& budget, std::optional<std::uint64_t> start_hint) {
    WeightSet w = materialize(spec, ring);
    if (ring.n < 2) throw std::invalid_argument("compute_exhaustive: needs n >= 2");
    ConstantResult res;
    res.kind = kind;
    res.n = ring.n;
    res.weights = spec;

    KindEngine engine(kind, ring, w, budget);
    const std::uint64_t cap = (kind == ConstantKind::E) ? 3 * ring.n + 3 : ring.n + 1;

    std::optional<std::uint64_t> best_upper;                  // smallest L confirmed all-good
    std::optional<std::vector<Residue>> longest_bad;          // longest bad candidate found
    std::uint64_t longest_bad_len = 0;

    try {
        std::uint64_t level = std::min<std::uint64_t>(start_hint.value_or(1), cap);
        if (level == 0) level = 1;
        while (true) {
            std::optional<std::vector<Residue>> cex;
            bool good = engine.all_good(static_cast<std::size_t>(level), &cex);
            if (good) {
                best_upper = best_upper ? std::min(*best_upper, level) : level;
                if (level == 1) {
                    res.value = 1;
                    res.witness = std::vector<Residue>{};
                    res.method = ComputeMethod::Exhaustive;
                    return res;
                }
                if (longest_bad && longest_bad_len == level - 1) {
                    res.value = level;
                    res.witness = longest_bad;
                    res.method = ComputeMethod::Exhaustive;
                    return res;
                }
                level -= 1;  // look for the extremal witness one below
            } else {
                if (cex && level > longest_bad_len) {
                    longest_bad = cex;
                    longest_bad_len = level;
                }
                if (best_upper && *best_upper == level + 1) {
                    res.value = *best_upper;
                    res.witness = longest_bad;
                    res.method = ComputeMethod::Exhaustive;
                    return res;
                }
                level += 1;
                if (level > cap) throw std::logic_error("compute_exhaustive: exceeded theoretical cap");
            }
        }
    } catch (const BudgetExceeded&) {
        res.lower_bound = longest_bad_len + 1;
        res.upper_bound = best_upper;
        if (best_upper && *best_upper == longest_bad_len + 1) {
            res.value = *best_upper;
            res.witness = longest_bad;
            res.method = ComputeMethod::Exhaustive;
            return res;
        }
        if (best_upper) {
            res.method = ComputeMethod::UpperBoundOnly;
        } else {
            res.method = ComputeMethod::LowerWitnessOnly;
            res.witness = longest_bad;
        }
        return res;
    }
}

namespace {

// A-orbit representative table for a subgroup A <= U(n).
std::vector<Residue> orbit_representatives(const WeightSet& subgroup) {
    const std::uint64_t n = subgroup.n;
    std::vector<Residue> rep(n);
    for (Residue x = 0; x < n; ++x) {
        Residue m = x;
        for (auto a : subgroup.values) m = std::min<Residue>(m, mul_mod(a, x, n));
        rep[x] = m;
    }
    return rep;
}

void require_subgroup(const WeightSet& a) {
    const std::uint64_t n = a.n;
    if (!a.contains(1 % n)) throw std::invalid_argument("weight set is not a subgroup of U(n): missing 1");
    for (auto x : a.values) {
        if (n > 1 && std::gcd(x, n) != 1)
            throw std::invalid_argument("weight set is not a subgroup of U(n): non-unit element");
        for (auto y : a.values)
            if (!a.contains(mul_mod(x, y, n)))
                throw std::invalid_argument("weight set is not a subgroup of U(n): not closed");
    }
}

}  // namespace

std::vector<ResidueSequence> enumerate_extremal(ConstantKind kind, const RingSpec& ring,
                                                const WeightSetSpec& spec, bool up_to_equivalence,
                                                SearchBudget& budget) {
    ConstantResult base = compute_exhaustive(kind, ring, spec, budget);
    if (!base.value) throw BudgetExceeded{};
    const std::size_t len = static_cast<std::size_t>(*base.value - 1);

    WeightSet w = materialize(spec, ring);
    KindEngine engine(kind, ring, w, budget);
    std::vector<ResidueSequence> out;
    if (len == 0) return out;
    engine.walk_bad(
        len,
        [&](const std::vector<Residue>& terms) {
            out.push_back(ResidueSequence(ring.n, terms));
            return true;
        },
        /*quotient_ok=*/false);

    if (!up_to_equivalence) return out;

    require_subgroup(w);
    auto rep = orbit_representatives(w);
    auto units = units_of(ring.n);
    std::map<std::vector<Residue>, std::size_t> seen;  // canonical key -> index in result
    std::vector<ResidueSequence> classes;
    for (const auto& seq : out) {
        std::vector<Residue> best;
        for (auto c : units) {
            std::vector<Residue> key;
            key.reserve(seq.length());
            for (auto x : seq.terms) key.push_back(rep[mul_mod(c, x, ring.n)]);
            std::sort(key.begin(), key.end());
            if (best.empty() || key < best) best = std::move(key);
        }
        if (seen.emplace(best, classes.size()).second) classes.push_back(seq);
    }
    return classes;
}

std::optional<EquivalenceWitness> check_equivalence(const ResidueSequence& s, const ResidueSequence& t,
                                                    const WeightSet& subgroup) {
    if (s.n != t.n || subgroup.n != s.n) throw std::invalid_argument("check_equivalence: modulus mismatch");
    if (s.length() != t.length()) throw std::invalid_argument("check_equivalence: lengths differ");
    require_subgroup(subgroup);
    const std::uint64_t n = s.n;
    auto rep = orbit_representatives(subgroup);

    for (auto c : units_of(n)) {
        std::vector<Residue> lhs, rhs;
        for (auto x : s.terms) lhs.push_back(rep[x]);
        for (auto y : t.terms) rhs.push_back(rep[mul_mod(c, y, n)]);
        auto sorted_l = lhs, sorted_r = rhs;
        std::sort(sorted_l.begin(), sorted_l.end());
        std::sort(sorted_r.begin(), sorted_r.end());
        if (sorted_l != sorted_r) continue;

        EquivalenceWitness wit;
        wit.c = c;
        wit.sigma.assign(s.length(), 0);
        wit.weights.assign(s.length(), 1);
        std::vector<bool> used(t.length(), false);
        bool ok = true;
        for (std::size_t i = 0; i < s.length() && ok; ++i) {
            ok = false;
            for (std::size_t j = 0; j < t.length(); ++j) {
                if (used[j] || rhs[j] != lhs[i]) continue;
                std::uint64_t target = mul_mod(c, t.terms[j], n);
                for (auto a : subgroup.values) {
                    if (mul_mod(a, s.terms[i], n) == target) {
                        used[j] = true;
                        wit.sigma[i] = j + 1;
                        wit.weights[i] = a;
                        ok = true;
                        break;
                    }
                }
                if (ok) break;
            }
        }
        if (ok) return wit;
    }
    return std::nullopt;
}

CExtremalDecomposition classify_c_extremal_pow2(const ResidueSequence& s) {
    RingSpec ring = factorize(s.n);
    if (ring.factors.size() != 1 || ring.factors[0].p != 2)
        throw std::invalid_argument("classify_c_extremal_pow2: modulus must be a power of 2");
    if (s.length() != s.n - 1)
        throw std::invalid_argument("classify_c_extremal_pow2: needs |S| = n - 1");

    CExtremalDecomposition node;
    node.modulus = s.n;
    if (s.n == 2) {
        node.middle = s.terms[0];
        node.extremal = (s.terms[0] % 2 == 1);
        return node;
    }
    const std::size_t half = s.n / 2;  // 1-based middle position
    node.middle = s.terms[half - 1];
    if (*node.middle % 2 == 0) {
        node.extremal = false;
        return node;
    }
    for (std::size_t i = 0; i < s.length(); ++i) {
        if (i != half - 1 && s.terms[i] % 2 == 1) {
            node.extremal = false;
            return node;
        }
    }
    auto halve = [&](std::size_t from, std::size_t count) {
        std::vector<Residue> terms;
        for (std::size_t i = from; i < from + count; ++i) terms.push_back(s.terms[i] / 2);
        return ResidueSequence(s.n / 2, std::move(terms));
    };
    node.halves.push_back(classify_c_extremal_pow2(halve(0, half - 1)));
    node.halves.push_back(classify_c_extremal_pow2(halve(half, half - 1)));
    node.extremal = node.halves[0].extremal && node.halves[1].extremal;
    return node;
}

bool classify_e_extremal_pow2(const ResidueSequence& s) {
    RingSpec ring = factorize(s.n);
    if (ring.factors.size() != 1 || ring.factors[0].p != 2)
        throw std::invalid_argument("classify_e_extremal_pow2: modulus must be a power of 2");
    const std::uint32_t r = ring.factors[0].r;
    if (s.length() != s.n + r - 1)
        throw std::invalid_argument("classify_e_extremal_pow2: needs |S| = n + r - 1");

    std::vector<std::size_t> level_count(r + 1, 0);  // by 2-adic valuation; r means zero
    for (auto x : s.terms) {
        if (x == 0) {
            ++level_count[r];
            continue;
        }
        std::uint32_t v = 0;
        Residue y = x;
        while (y % 2 == 0) {
            y /= 2;
            ++v;
        }
        ++level_count[v];
    }
    for (std::uint32_t i = 0; i + 1 < r; ++i)
        if (level_count[i] != 1) return false;
    std::size_t m = level_count[r - 1];
    return m % 2 == 1 && m >= 1 && m <= s.n - 1;
}

ResidueSequence c_extremal_witness_pow2(std::uint32_t r) {
    if (r == 0) throw std::invalid_argument("c_extremal_witness_pow2: needs r >= 1");
    const std::uint64_t n = std::uint64_t{1} << r;
    std::vector<Residue> terms;
    for (std::uint64_t j = 1; j < n; ++j) {
        std::uint32_t v = static_cast<std::uint32_t>(std::countr_zero(j));
        terms.push_back(std::uint64_t{1} << (r - 1 - v));
    }
    return ResidueSequence(n, std::move(terms));
}

ResidueSequence c_extremal_witness_composite(const RingSpec& ring, SearchBudget& budget) {
    if (ring.n < 2) throw std::invalid_argument("c_extremal_witness_composite: needs n >= 2");
    std::optional<GroupSequence> acc;
    for (const auto& f : ring.factors) {
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < f.r; ++i) q *= f.p;
        ResidueSequence piece(q, {});
        if (f.p == 2) {
            piece = c_extremal_witness_pow2(f.r);
        } else {
            // search a C-extremal sequence of length 2^r - 1 over Z_{p^r}
            RingSpec sub = factorize(q);
            WeightSet units = materialize(WeightSetSpec::units(), sub);
            KindEngine engine(ConstantKind::C, sub, units, budget);
            std::optional<std::vector<Residue>> found;
            engine.walk_bad(
                (std::size_t{1} << f.r) - 1,
                [&](const std::vector<Residue>& terms) {
                    found = terms;
                    return false;
                },
                /*quotient_ok=*/true);
            if (!found) throw std::logic_error("c_extremal_witness_composite: no prime-power witness");
            piece = ResidueSequence(q, *found);
        }
        GroupSequence g = to_group_sequence(piece);
        acc = acc ? build_witness_product_c(*acc, g, GroupWeightKind::ComponentUnits) : g;
    }
    ResidueSequence witness = crt_map_to_zn(*acc);
    WeightSet units = materialize(WeightSetSpec::units(), ring);
    if (solve_consecutive(witness, units).found)
        throw std::logic_error("c_extremal_witness_composite: witness failed verification");
    if (ring.big_omega >= 63 || witness.length() != (std::uint64_t{1} << ring.big_omega) - 1)
        throw std::logic_error("c_extremal_witness_composite: wrong witness length");
    return witness;
}

GroupConstantResult compute_group_c_constant(const GroupSpec& g, SearchBudget& budget) {
    return compute_group_c(g, budget.limit() - budget.used());
}

GroupConstantResult compute_group_d_constant(const GroupSpec& g, SearchBudget& budget) {
    return compute_group_d(g, budget.limit() - budget.used());
}

std::vector<WeightProbeResult> probe_half_size_weight_sets(const RingSpec& ring, SearchBudget& budget) {
    const std::uint64_t n = ring.n;
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("probe_half_size_weight_sets: needs odd n >= 3");
    if (n > 13) throw std::invalid_argument("probe_half_size_weight_sets: desk-scale limit n <= 13");
    const std::size_t k = static_cast<std::size_t>((n - 1) / 2);

    std::vector<WeightProbeResult> exceeding;
    std::vector<std::size_t> combo(k);
    for (std::size_t i = 0; i < k; ++i) combo[i] = i + 1;
    while (true) {
        std::vector<std::int64_t> elems;
        for (auto v : combo) elems.push_back(static_cast<std::int64_t>(v));
        WeightSetSpec spec = WeightSetSpec::explicit_set(elems);
        auto d = compute_exhaustive(ConstantKind::D, ring, spec, budget);
        auto c = compute_exhaustive(ConstantKind::C, ring, spec, budget);
        if (!d.value || !c.value) throw BudgetExceeded{};
        if (*d.value > 3 || *c.value > 3) exceeding.push_back({spec, *d.value, *c.value});

        std::int64_t pos = static_cast<std::int64_t>(k) - 1;
        while (pos >= 0 && combo[static_cast<std::size_t>(pos)] == (n - 1) - (k - 1 - static_cast<std::size_t>(pos)))
            --pos;
        if (pos < 0) break;
        ++combo[static_cast<std::size_t>(pos)];
        for (std::size_t j = static_cast<std::size_t>(pos) + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
    return exceeding;
}

// ---- closed forms -------------------------------------------------------------

namespace {

bool is_units_set(const WeightSet& w, const RingSpec& ring) {
    return w.values == units_of(ring.n);
}

std::optional<std::uint64_t> interval_width(const WeightSet& w) {
    for (std::size_t i = 0; i < w.values.size(); ++i)
        if (w.values[i] != i + 1) return std::nullopt;
    return w.values.size();
}

bool all_odd(const WeightSet& w) {
    return std::all_of(w.values.begin(), w.values.end(), [](Residue v) { return v % 2 == 1; });
}

bool is_even_set(const WeightSet& w) {
    std::vector<Residue> evens;
    for (Residue x = 2; x < w.n; x += 2) evens.push_back(x);
    return !evens.empty() && w.values == evens;
}

bool is_odd_set(const WeightSet& w) {
    std::vector<Residue> odds;
    for (Residue x = 1; x < w.n; x += 2) odds.push_back(x);
    return !odds.empty() && w.values == odds;
}

}  // namespace

std::optional<ConstantResult> predict(ConstantKind kind, const RingSpec& ring, const WeightSetSpec& spec) {
    if (ring.n < 2) throw std::invalid_argument("predict: needs n >= 2");
    WeightSet w = materialize(spec, ring);

    // D and C first; E follows from any covered D by E_A(n) = D_A(n) + n - 1.
    std::optional<std::uint64_t> d_value, c_value;
    std::string d_id, c_id;

    if (is_units_set(w, ring)) {
        d_value = ring.big_omega + 1;
        d_id = "dun";
        c_value = std::uint64_t{1} << ring.big_omega;
        c_id = "cun";
    } else if (auto r = interval_width(w); r && *r < ring.n) {
        std::uint64_t ceil_nr = (ring.n + *r - 1) / *r;
        d_value = ceil_nr;
        d_id = "interval-d";
        c_value = ceil_nr;
        c_id = "interval-c";
    } else if (ring.n % 2 == 0 && all_odd(w)) {
        std::uint32_t v2 = ring.vp(2);
        std::uint64_t m = ring.n >> v2;
        if (w.contains(m)) {
            d_value = v2 + 1;
            d_id = "odd-d";
            c_value = std::uint64_t{1} << v2;
            c_id = "odd-c";
        }
    } else if (ring.n % 2 == 0 && is_even_set(w)) {
        d_value = 2;
        d_id = "half-odd-even";
        c_value = 2;
        c_id = "half-odd-even";
    } else if (ring.n % 2 == 1 && (is_odd_set(w) || is_even_set(w))) {
        d_value = 3;
        d_id = "half-odd";
        c_value = 3;
        c_id = "half-odd";
    }

    ConstantResult res;
    res.kind = kind;
    res.n = ring.n;
    res.weights = spec;
    res.method = ComputeMethod::ClosedForm;
    switch (kind) {
        case ConstantKind::D:
            if (!d_value) return std::nullopt;
            res.value = d_value;
            res.formula_id = d_id;
            return res;
        case ConstantKind::C:
            if (!c_value) return std::nullopt;
            res.value = c_value;
            res.formula_id = c_id;
            return res;
        case ConstantKind::E:
            if (is_units_set(w, ring)) {
                res.value = ring.n + ring.big_omega;
                res.formula_id = "en";
                return res;
            }
            if (!d_value) return std::nullopt;
            res.value = *d_value + ring.n - 1;
            res.formula_id = "yz:" + d_id;
            return res;
    }
    return std::nullopt;
}

}  // namespace zslab
