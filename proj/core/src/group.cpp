#include "zslab/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "zslab/budget.hpp"

namespace zslab {

std::uint64_t GroupSpec::order() const {
    std::uint64_t o = 1;
    for (auto f : factors) {
        if (f < 2) throw std::invalid_argument("GroupSpec: factors must be >= 2");
        o *= f;
    }
    return o;
}

std::vector<std::uint64_t> GroupSpec::decode(std::uint64_t e) const {
    std::vector<std::uint64_t> coords(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
        coords[i] = e % factors[i];
        e /= factors[i];
    }
    return coords;
}

std::uint64_t GroupSpec::encode(const std::vector<std::uint64_t>& coords) const {
    if (coords.size() != factors.size()) throw std::invalid_argument("GroupSpec::encode: arity mismatch");
    std::uint64_t e = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) e = e * factors[i] + coords[i] % factors[i];
    return e;
}

std::uint64_t GroupSpec::add(std::uint64_t a, std::uint64_t b) const {
    auto ca = decode(a), cb = decode(b);
    for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = (ca[i] + cb[i]) % factors[i];
    return encode(ca);
}

std::uint64_t GroupSpec::neg(std::uint64_t a) const {
    auto c = decode(a);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (factors[i] - c[i]) % factors[i];
    return encode(c);
}

GroupSpec GroupSpec::product(const GroupSpec& a, const GroupSpec& b) {
    GroupSpec g = a;
    g.factors.insert(g.factors.end(), b.factors.begin(), b.factors.end());
    return g;
}

std::vector<std::uint64_t> weighted_images(const GroupSpec& g, GroupWeightKind kind, std::uint64_t elem) {
    if (kind == GroupWeightKind::One) return {elem};
    auto coords = g.decode(elem);
    std::vector<std::vector<std::uint64_t>> per_coord;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        std::vector<std::uint64_t> imgs;
        for (auto u : units_of(g.factors[i])) imgs.push_back(mul_mod(u, coords[i], g.factors[i]));
        std::sort(imgs.begin(), imgs.end());
        imgs.erase(std::unique(imgs.begin(), imgs.end()), imgs.end());
        per_coord.push_back(std::move(imgs));
    }
    // cartesian product of per-coordinate images
    std::vector<std::vector<std::uint64_t>> tuples{{}};
    for (const auto& choices : per_coord) {
        std::vector<std::vector<std::uint64_t>> next;
        for (const auto& t : tuples)
            for (auto c : choices) {
                auto t2 = t;
                t2.push_back(c);
                next.push_back(std::move(t2));
            }
        tuples = std::move(next);
    }
    std::vector<std::uint64_t> result;
    for (const auto& t : tuples) result.push_back(g.encode(t));
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

namespace {

std::uint64_t require_small_order(const GroupSpec& g) {
    std::uint64_t o = g.order();
    if (o > 64) throw std::invalid_argument("group solver: order limited to 64");
    return o;
}

// Per-element weighted image lists, indexed by encoded element.
std::vector<std::vector<std::uint64_t>> image_table(const GroupSpec& g, GroupWeightKind kind) {
    std::uint64_t o = g.order();
    std::vector<std::vector<std::uint64_t>> table(o);
    for (std::uint64_t e = 0; e < o; ++e) table[e] = weighted_images(g, kind, e);
    return table;
}

std::uint64_t add_table_shift(const GroupSpec& g, std::uint64_t mask, std::uint64_t delta) {
    // { r + delta : r in mask } for masks over encoded elements.
    std::uint64_t out = 0;
    while (mask) {
        std::uint64_t bit = mask & (~mask + 1);
        std::uint64_t idx = static_cast<std::uint64_t>(__builtin_ctzll(mask));
        out |= std::uint64_t{1} << g.add(idx, delta);
        mask ^= bit;
    }
    return out;
}

}  // namespace

bool group_has_zero_sum_subsequence(const GroupSequence& s, GroupWeightKind kind) {
    require_small_order(s.group);
    auto images = image_table(s.group, kind);
    std::uint64_t reach = 0;  // sums of nonempty selections
    for (auto t : s.terms) {
        std::uint64_t next = reach;
        for (auto img : images[t]) {
            next |= add_table_shift(s.group, reach, img);
            next |= std::uint64_t{1} << img;
        }
        reach = next;
        if (reach & 1) return true;  // identity is encoded as 0
    }
    return false;
}

bool group_has_zero_sum_block(const GroupSequence& s, GroupWeightKind kind) {
    require_small_order(s.group);
    auto images = image_table(s.group, kind);
    const std::size_t k = s.length();
    for (std::size_t start = 0; start < k; ++start) {
        std::uint64_t reach = 0;
        for (std::size_t end = start; end < k; ++end) {
            std::uint64_t next = 0;
            for (auto img : images[s.terms[end]]) {
                if (end == start)
                    next |= std::uint64_t{1} << img;
                else
                    next |= add_table_shift(s.group, reach, img);
            }
            reach = next;
            if (reach & 1) return true;
        }
    }
    return false;
}

GroupSequence build_witness_product_c(const GroupSequence& s1, const GroupSequence& s2, GroupWeightKind kind) {
    if (group_has_zero_sum_block(s1, kind))
        throw std::invalid_argument("build_witness_product_c: S1 already has a weighted zero-sum block");
    if (group_has_zero_sum_block(s2, kind))
        throw std::invalid_argument("build_witness_product_c: S2 already has a weighted zero-sum block");

    GroupSpec g = GroupSpec::product(s1.group, s2.group);
    auto embed1 = [&](std::uint64_t e) {
        auto c = s1.group.decode(e);
        c.resize(g.factors.size(), 0);
        return g.encode(c);
    };
    auto embed2 = [&](std::uint64_t e) {
        std::vector<std::uint64_t> c(s1.group.factors.size(), 0);
        auto c2 = s2.group.decode(e);
        c.insert(c.end(), c2.begin(), c2.end());
        return g.encode(c);
    };

    GroupSequence out;
    out.group = g;
    auto push_s1 = [&] {
        for (auto t : s1.terms) out.terms.push_back(embed1(t));
    };
    push_s1();
    for (auto y : s2.terms) {
        out.terms.push_back(embed2(y));
        push_s1();
    }
    return out;
}

GroupSequence build_witness_concat_d(const GroupSequence& s1, const GroupSequence& s2, GroupWeightKind kind) {
    if (group_has_zero_sum_subsequence(s1, kind))
        throw std::invalid_argument("build_witness_concat_d: S1 already has a weighted zero-sum subsequence");
    if (group_has_zero_sum_subsequence(s2, kind))
        throw std::invalid_argument("build_witness_concat_d: S2 already has a weighted zero-sum subsequence");

    GroupSpec g = GroupSpec::product(s1.group, s2.group);
    GroupSequence out;
    out.group = g;
    for (auto t : s1.terms) {
        auto c = s1.group.decode(t);
        c.resize(g.factors.size(), 0);
        out.terms.push_back(g.encode(c));
    }
    for (auto y : s2.terms) {
        std::vector<std::uint64_t> c(s1.group.factors.size(), 0);
        auto c2 = s2.group.decode(y);
        c.insert(c.end(), c2.begin(), c2.end());
        out.terms.push_back(g.encode(c));
    }
    return out;
}

namespace {

// DFS over sequences whose prefix sums are pairwise distinct (no zero block).
// Returns a bad sequence of length len if one exists.
bool find_c_bad_sequence(const GroupSpec& g, std::uint64_t order, std::size_t len, std::uint64_t used_mask,
                         std::uint64_t prefix, std::vector<std::uint64_t>& terms, SearchBudget& budget) {
    if (terms.size() == len) return true;
    for (std::uint64_t t = 0; t < order; ++t) {
        budget.tick();
        std::uint64_t next = g.add(prefix, t);
        if (used_mask & (std::uint64_t{1} << next)) continue;
        terms.push_back(t);
        if (find_c_bad_sequence(g, order, len, used_mask | (std::uint64_t{1} << next), next, terms, budget))
            return true;
        terms.pop_back();
    }
    return false;
}

// DFS over multisets (nondecreasing terms) with no zero-sum subset yet.
bool find_d_bad_multiset(const GroupSpec& g, std::uint64_t order, std::size_t len, std::uint64_t min_value,
                         std::uint64_t reach, std::vector<std::uint64_t>& terms, SearchBudget& budget) {
    if (terms.size() == len) return true;
    for (std::uint64_t t = min_value; t < order; ++t) {
        budget.tick();
        std::uint64_t next = reach | add_table_shift(g, reach, t) | (std::uint64_t{1} << t);
        if (next & 1) continue;  // subtree is all good
        terms.push_back(t);
        if (find_d_bad_multiset(g, order, len, t, next, terms, budget)) return true;
        terms.pop_back();
    }
    return false;
}

}  // namespace

GroupConstantResult compute_group_c(const GroupSpec& g, std::uint64_t budget) {
    std::uint64_t order = require_small_order(g);
    SearchBudget b{budget};
    GroupConstantResult res;
    for (std::uint64_t len = 1;; ++len) {
        std::vector<std::uint64_t> terms;
        if (!find_c_bad_sequence(g, order, len, 1 /* prefix 0 used */, 0, terms, b)) {
            res.value = len;
            return res;
        }
        res.witness = GroupSequence{g, terms};
        if (len > order) throw std::logic_error("compute_group_c: pigeonhole violated");
    }
}

GroupConstantResult compute_group_d(const GroupSpec& g, std::uint64_t budget) {
    std::uint64_t order = require_small_order(g);
    SearchBudget b{budget};
    GroupConstantResult res;
    for (std::uint64_t len = 1;; ++len) {
        std::vector<std::uint64_t> terms;
        if (!find_d_bad_multiset(g, order, len, 0, 0, terms, b)) {
            res.value = len;
            return res;
        }
        res.witness = GroupSequence{g, terms};
        if (len > order) throw std::logic_error("compute_group_d: Davenport bound violated");
    }
}

ResidueSequence crt_map_to_zn(const GroupSequence& s) {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < s.group.factors.size(); ++i) {
        for (std::size_t j = i + 1; j < s.group.factors.size(); ++j) {
            if (std::gcd(s.group.factors[i], s.group.factors[j]) != 1)
                throw std::invalid_argument("crt_map_to_zn: factors must be pairwise coprime");
        }
        n *= s.group.factors[i];
    }
    ResidueSequence out(n, {});
    out.terms.reserve(s.length());
    for (auto t : s.terms) {
        auto coords = s.group.decode(t);
        std::vector<std::pair<std::uint64_t, std::uint64_t>> congruences;
        for (std::size_t i = 0; i < coords.size(); ++i) congruences.emplace_back(coords[i], s.group.factors[i]);
        out.terms.push_back(crt_combine(congruences));
    }
    return out;
}

GroupSequence to_group_sequence(const ResidueSequence& s) {
    GroupSequence out;
    out.group = GroupSpec{{s.n}};
    out.terms = s.terms;
    return out;
}

}  // namespace zslab
