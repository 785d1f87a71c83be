#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "naive.hpp"
#include "zslab/constants.hpp"

using namespace zslab;

namespace {

ConstantResult compute(ConstantKind kind, std::uint64_t n, const WeightSetSpec& spec) {
    SearchBudget budget;
    return compute_exhaustive(kind, factorize(n), spec, budget);
}

std::uint64_t value_of(ConstantKind kind, std::uint64_t n, const WeightSetSpec& spec) {
    auto res = compute(kind, n, spec);
    REQUIRE(res.value.has_value());
    return *res.value;
}

}  // namespace

TEST_CASE("predict: closed forms fire on the covered families") {
    auto expect = [&](ConstantKind k, std::uint64_t n, const WeightSetSpec& spec, std::uint64_t value,
                      const std::string& formula) {
        auto res = predict(k, factorize(n), spec);
        REQUIRE(res.has_value());
        REQUIRE(res->value.has_value());
        CHECK(*res->value == value);
        CHECK(res->formula_id.value_or("") == formula);
    };
    expect(ConstantKind::C, 8, WeightSetSpec::units(), 8, "cun");
    expect(ConstantKind::D, 12, WeightSetSpec::units(), 4, "dun");
    expect(ConstantKind::E, 12, WeightSetSpec::units(), 15, "en");
    expect(ConstantKind::C, 10, WeightSetSpec::interval(3), 4, "interval-c");
    expect(ConstantKind::C, 9, WeightSetSpec::interval(2), 5, "interval-c");
    expect(ConstantKind::C, 12, WeightSetSpec::odd(), 4, "odd-c");
    expect(ConstantKind::D, 12, WeightSetSpec::odd(), 3, "odd-d");
    expect(ConstantKind::D, 12, WeightSetSpec::even(), 2, "half-odd-even");
    expect(ConstantKind::C, 9, WeightSetSpec::odd(), 3, "half-odd");
    expect(ConstantKind::E, 9, WeightSetSpec::odd(), 11, "yz:half-odd");
    // singleton {m} with m = n / 2^{v2(n)} sits inside the odd sandwich
    expect(ConstantKind::C, 12, WeightSetSpec::singleton(3), 4, "odd-c");
    // A = {1} is the r = 1 interval
    expect(ConstantKind::D, 7, WeightSetSpec::one(), 7, "interval-d");
    expect(ConstantKind::E, 7, WeightSetSpec::one(), 13, "yz:interval-d");
}

TEST_CASE("predict: no formula is never a guess") {
    CHECK(!predict(ConstantKind::D, factorize(8), WeightSetSpec::singleton(5)).has_value());
    CHECK(!predict(ConstantKind::C, factorize(10), WeightSetSpec::explicit_set({1, 9})).has_value());
    CHECK(!predict(ConstantKind::E, factorize(7), WeightSetSpec::unit_kth_powers(3)).has_value());
}

TEST_CASE("compute_exhaustive: the worked examples") {
    auto d8 = compute(ConstantKind::D, 8, WeightSetSpec::units());
    CHECK(d8.value == 4);
    CHECK(d8.witness == std::vector<Residue>{1, 2, 4});

    auto c4 = compute(ConstantKind::C, 4, WeightSetSpec::units());
    CHECK(c4.value == 4);
    CHECK(c4.witness == std::vector<Residue>{2, 1, 2});

    CHECK(value_of(ConstantKind::E, 8, WeightSetSpec::units()) == 11);

    for (std::uint64_t n : {4ull, 10ull, 16ull}) {
        CHECK(value_of(ConstantKind::D, n, WeightSetSpec::even()) == 2);
    }
}

TEST_CASE("compute_exhaustive agrees with naive enumeration on tiny rings") {
    for (std::uint64_t n = 2; n <= 6; ++n) {
        for (auto spec : {WeightSetSpec::units(), WeightSetSpec::one()}) {
            auto w = materialize(spec, factorize(n));
            CHECK(value_of(ConstantKind::D, n, spec) == oracle::naive_constant(0, w, n));
            CHECK(value_of(ConstantKind::C, n, spec) == oracle::naive_constant(1, w, n));
            if (n <= 4) CHECK(value_of(ConstantKind::E, n, spec) == oracle::naive_constant(2, w, n));
        }
    }
}

TEST_CASE("witnesses stored in results are extremal") {
    std::vector<std::tuple<ConstantKind, std::uint64_t, WeightSetSpec>> grid = {
        {ConstantKind::D, 8, WeightSetSpec::units()},  {ConstantKind::C, 8, WeightSetSpec::units()},
        {ConstantKind::E, 6, WeightSetSpec::units()},  {ConstantKind::D, 9, WeightSetSpec::odd()},
        {ConstantKind::C, 10, WeightSetSpec::interval(3)}, {ConstantKind::D, 10, WeightSetSpec::even()},
    };
    for (const auto& [kind, n, spec] : grid) {
        auto res = compute(kind, n, spec);
        REQUIRE(res.value.has_value());
        REQUIRE(res.witness.has_value());
        CHECK(res.witness->size() == *res.value - 1);
        auto w = materialize(spec, factorize(n));
        ResidueSequence s(n, *res.witness);
        bool has = kind == ConstantKind::D   ? solve_any(s, w).found
                   : kind == ConstantKind::C ? solve_consecutive(s, w).found
                                             : solve_fixed_length(s, w, n).found;
        CHECK(!has);
    }
}

TEST_CASE("D <= C <= n whenever both are computed") {
    for (std::uint64_t n = 2; n <= 10; ++n) {
        for (auto spec : {WeightSetSpec::units(), WeightSetSpec::one(), WeightSetSpec::odd()}) {
            auto d = value_of(ConstantKind::D, n, spec);
            auto c = value_of(ConstantKind::C, n, spec);
            CHECK(d <= c);
            CHECK(c <= n);
        }
    }
}

TEST_CASE("predict equals exhaustive on a small covered grid") {
    for (std::uint64_t n = 2; n <= 10; ++n) {
        std::vector<WeightSetSpec> specs = {WeightSetSpec::units(), WeightSetSpec::one()};
        if (n >= 3) specs.push_back(WeightSetSpec::odd());
        if (n >= 4) specs.push_back(WeightSetSpec::interval(2));
        if (n >= 4) specs.push_back(WeightSetSpec::even());
        for (const auto& spec : specs) {
            for (auto kind : {ConstantKind::D, ConstantKind::C, ConstantKind::E}) {
                if (kind == ConstantKind::E && n > 8) continue;  // keep the unit suite quick
                auto predicted = predict(kind, factorize(n), spec);
                if (!predicted) continue;
                CHECK(*predicted->value == value_of(kind, n, spec));
            }
        }
    }
}

TEST_CASE("enumerate_extremal(C, 8, units) is exactly the structured family") {
    SearchBudget budget;
    auto list = enumerate_extremal(ConstantKind::C, factorize(8), WeightSetSpec::units(), false, budget);
    std::set<std::vector<Residue>> got;
    for (const auto& s : list) got.insert(s.terms);

    std::set<std::vector<Residue>> expected;
    for (Residue a1 : {1, 3, 5, 7})
        for (Residue a2 : {1, 3, 5, 7})
            for (Residue a3 : {1, 3, 5, 7})
                for (Residue a4 : {1, 3, 5, 7})
                    for (Residue a5 : {1, 3, 5, 7})
                        for (Residue a6 : {1, 3, 5, 7})
                            for (Residue a7 : {1, 3, 5, 7})
                                expected.insert({4 * a1 % 8, 2 * a2 % 8, 4 * a3 % 8, a4, 4 * a5 % 8,
                                                 2 * a6 % 8, 4 * a7 % 8});
    CHECK(got == expected);
    CHECK(got.size() == 16);
}

TEST_CASE("enumerate_extremal up to equivalence: the three headline answers") {
    SearchBudget budget;
    auto e8 = enumerate_extremal(ConstantKind::E, factorize(8), WeightSetSpec::units(), true, budget);
    CHECK(e8.size() == 4);

    auto d8 = enumerate_extremal(ConstantKind::D, factorize(8), WeightSetSpec::units(), true, budget);
    REQUIRE(d8.size() == 1);
    auto u8 = materialize(WeightSetSpec::units(), factorize(8));
    CHECK(check_equivalence(d8[0], ResidueSequence(8, {1, 2, 4}), u8).has_value());

    auto d2 = enumerate_extremal(ConstantKind::D, factorize(2), WeightSetSpec::one(), false, budget);
    REQUIRE(d2.size() == 1);
    CHECK(d2[0].terms == std::vector<Residue>{1});
}

TEST_CASE("unquotiented extremal lists are closed under A-equivalence transforms") {
    SearchBudget budget;
    auto list = enumerate_extremal(ConstantKind::E, factorize(8), WeightSetSpec::units(), false, budget);
    std::set<std::vector<Residue>> members;
    for (const auto& s : list) members.insert(s.terms);

    std::mt19937_64 rng(2024);
    auto units8 = units_of(8);
    for (const auto& s : list) {
        for (int trial = 0; trial < 20; ++trial) {
            Residue c = units8[rng() % units8.size()];
            std::vector<Residue> transformed;
            // c y = a x with a random unit a: y = c^{-1} a x
            for (auto x : s.terms) {
                Residue a = units8[rng() % units8.size()];
                transformed.push_back(mul_mod(mul_mod(inv_mod(c, 8), a, 8), x, 8));
            }
            std::sort(transformed.begin(), transformed.end());
            CHECK(members.count(transformed) == 1);
        }
    }
}

TEST_CASE("check_equivalence finds witnesses and verified negatives") {
    auto u8 = materialize(WeightSetSpec::units(), factorize(8));
    ResidueSequence s(8, {1, 2, 4}), t(8, {3, 6, 4});
    auto wit = check_equivalence(s, t, u8);
    REQUIRE(wit.has_value());
    for (std::size_t i = 0; i < s.length(); ++i) {
        CHECK(mul_mod(wit->c, t.terms[wit->sigma[i] - 1], 8) == mul_mod(wit->weights[i], s.terms[i], 8));
        CHECK(u8.contains(wit->weights[i]));
    }

    auto self = check_equivalence(s, s, u8);
    REQUIRE(self.has_value());

    auto u4 = materialize(WeightSetSpec::units(), factorize(4));
    CHECK(!check_equivalence(ResidueSequence(4, {1, 0}), ResidueSequence(4, {1, 1}), u4).has_value());

    auto odd12 = materialize(WeightSetSpec::odd(), factorize(12));
    CHECK_THROWS_AS(check_equivalence(ResidueSequence(12, {1}), ResidueSequence(12, {1}), odd12),
                    std::invalid_argument);  // 3 is not a unit mod 12
}

TEST_CASE("classify C-extremal over powers of two") {
    CHECK(classify_c_extremal_pow2(ResidueSequence(8, {4, 2, 4, 1, 4, 2, 4})).extremal);
    CHECK(!classify_c_extremal_pow2(ResidueSequence(8, {4, 2, 4, 2, 4, 2, 4})).extremal);  // even middle
    CHECK(classify_c_extremal_pow2(ResidueSequence(2, {1})).extremal);
    CHECK(!classify_c_extremal_pow2(ResidueSequence(2, {0})).extremal);
    CHECK_THROWS_AS(classify_c_extremal_pow2(ResidueSequence(8, {1, 2, 4})), std::invalid_argument);
    CHECK_THROWS_AS(classify_c_extremal_pow2(ResidueSequence(12, {1, 2, 4})), std::invalid_argument);

    auto tree = classify_c_extremal_pow2(ResidueSequence(8, {4, 2, 4, 1, 4, 2, 4}));
    REQUIRE(tree.halves.size() == 2);
    CHECK(tree.middle == 1);
    CHECK(tree.halves[0].middle == 1);  // (4,2,4)/2 = (2,1,2) over Z_4
}

TEST_CASE("classify C-extremal matches enumeration for r = 1, 2, 3") {
    SearchBudget budget;
    for (std::uint32_t r = 1; r <= 3; ++r) {
        std::uint64_t n = std::uint64_t{1} << r;
        auto list = enumerate_extremal(ConstantKind::C, factorize(n), WeightSetSpec::units(), false, budget);
        std::set<std::vector<Residue>> extremal_set;
        for (const auto& s : list) extremal_set.insert(s.terms);

        std::vector<Residue> terms(n - 1, 0);
        std::function<void(std::size_t)> sweep = [&](std::size_t pos) {
            if (pos == terms.size()) {
                ResidueSequence s(n, terms);
                CHECK(classify_c_extremal_pow2(s).extremal == (extremal_set.count(terms) == 1));
                return;
            }
            for (Residue v = 0; v < n; ++v) {
                terms[pos] = v;
                sweep(pos + 1);
            }
        };
        sweep(0);
    }
}

TEST_CASE("classify E-extremal over powers of two") {
    CHECK(classify_e_extremal_pow2(ResidueSequence(8, {1, 2, 4, 4, 4, 0, 0, 0, 0, 0})));
    CHECK(!classify_e_extremal_pow2(ResidueSequence(8, {1, 3, 4, 0, 0, 0, 0, 0, 0, 0})));  // two units
    CHECK(!classify_e_extremal_pow2(ResidueSequence(8, {1, 2, 4, 4, 0, 0, 0, 0, 0, 0})));  // even count of 4s
    CHECK(classify_e_extremal_pow2(ResidueSequence(2, {1, 0})));
    CHECK(!classify_e_extremal_pow2(ResidueSequence(2, {1, 1})));
    CHECK_THROWS_AS(classify_e_extremal_pow2(ResidueSequence(8, {1, 2, 4})), std::invalid_argument);
}

TEST_CASE("classify E-extremal = equivalent to an enumerated class (multisets, r = 2, 3)") {
    SearchBudget budget;
    for (std::uint32_t r = 2; r <= 3; ++r) {
        std::uint64_t n = std::uint64_t{1} << r;
        auto classes = enumerate_extremal(ConstantKind::E, factorize(n), WeightSetSpec::units(), true, budget);
        auto u = materialize(WeightSetSpec::units(), factorize(n));
        std::size_t len = n + r - 1;

        std::vector<Residue> multiset(len, 0);
        std::function<void(std::size_t, Residue)> sweep = [&](std::size_t pos, Residue min_v) {
            if (pos == len) {
                ResidueSequence s(n, multiset);
                bool in_class = false;
                for (const auto& rep : classes)
                    if (check_equivalence(s, rep, u)) {
                        in_class = true;
                        break;
                    }
                CHECK(classify_e_extremal_pow2(s) == in_class);
                return;
            }
            for (Residue v = min_v; v < n; ++v) {
                multiset[pos] = v;
                sweep(pos + 1, v);
            }
        };
        sweep(0, 0);
    }
}

TEST_CASE("ruler witness and composite CRT witnesses verify") {
    auto r4 = c_extremal_witness_pow2(4);
    CHECK(r4.terms == std::vector<Residue>{8, 4, 8, 2, 8, 4, 8, 1, 8, 4, 8, 2, 8, 4, 8});
    auto u16 = materialize(WeightSetSpec::units(), factorize(16));
    CHECK(!solve_consecutive(r4, u16).found);

    SearchBudget budget;
    for (std::uint64_t n : {12ull, 18ull, 20ull}) {
        auto ring = factorize(n);
        auto w = c_extremal_witness_composite(ring, budget);
        CHECK(w.length() == (std::uint64_t{1} << ring.big_omega) - 1);
        auto u = materialize(WeightSetSpec::units(), ring);
        CHECK(!solve_consecutive(w, u).found);
    }
}

TEST_CASE("odd-weight sandwich is monotone: C_B <= C_A <= C_{{m}}") {
    std::mt19937_64 rng(77);
    for (std::uint64_t n : {6ull, 12ull}) {
        auto ring = factorize(n);
        std::uint64_t m = n >> ring.vp(2);
        std::vector<Residue> odds;
        for (Residue x = 1; x < n; x += 2) odds.push_back(x);
        auto c_b = value_of(ConstantKind::C, n, WeightSetSpec::odd());
        auto c_m = value_of(ConstantKind::C, n, WeightSetSpec::singleton(m));
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<std::int64_t> elems{static_cast<std::int64_t>(m)};
            for (auto x : odds)
                if (x != m && (rng() & 1)) elems.push_back(static_cast<std::int64_t>(x));
            auto c_a = value_of(ConstantKind::C, n, WeightSetSpec::explicit_set(elems));
            CHECK(c_b <= c_a);
            CHECK(c_a <= c_m);
        }
    }
}

TEST_CASE("budget exhaustion yields partial results with bounds") {
    SearchBudget tiny(200);
    auto res = compute_exhaustive(ConstantKind::C, factorize(12), WeightSetSpec::units(), tiny);
    CHECK(!res.value.has_value());
    CHECK((res.method == ComputeMethod::LowerWitnessOnly || res.method == ComputeMethod::UpperBoundOnly));
    CHECK(res.lower_bound.has_value());
}

TEST_CASE("probe over half-size weight sets reports values above three honestly") {
    SearchBudget budget;
    auto ring = factorize(9);
    auto findings = probe_half_size_weight_sets(ring, budget);
    // independent spot check of one reported set
    for (const auto& f : findings) {
        CHECK((f.d_value > 3 || f.c_value > 3));
        CHECK(f.d_value == value_of(ConstantKind::D, 9, f.weights));
        CHECK(f.c_value == value_of(ConstantKind::C, 9, f.weights));
    }
    auto w = materialize(WeightSetSpec::explicit_set({1, 2, 4, 5}), ring);
    CHECK(oracle::naive_constant(1, w, 9) == 4);  // C exceeds 3 here
}
