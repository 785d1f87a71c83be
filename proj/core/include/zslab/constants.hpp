// constants.hpp — the zero-sum constants D_A(n), C_A(n), E_A(n): closed-form
// prediction, exact computation by symmetry-reduced exhaustive search,
// extremal-sequence enumeration and classification, and the lower-bound
// witness constructions.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zslab/budget.hpp"
#include "zslab/group.hpp"
#include "zslab/ring.hpp"
#include "zslab/solver.hpp"

namespace zslab {

enum class ConstantKind { D, C, E };

std::string to_string(ConstantKind k);
ConstantKind parse_constant_kind(const std::string& text);

enum class ComputeMethod { Exhaustive, ClosedForm, LowerWitnessOnly, UpperBoundOnly };

struct ConstantResult {
    ConstantKind kind = ConstantKind::D;
    std::uint64_t n = 1;
    WeightSetSpec weights;
    std::optional<std::uint64_t> value;
    ComputeMethod method = ComputeMethod::Exhaustive;
    std::optional<std::string> formula_id;            // set for ClosedForm
    std::optional<std::vector<Residue>> witness;      // extremal, length value-1
    std::optional<std::uint64_t> lower_bound;         // set on budget-exhausted partials
    std::optional<std::uint64_t> upper_bound;

    friend bool operator==(const ConstantResult&, const ConstantResult&) = default;
};

/// Closed-form value when one of the known formulas covers (kind, n, A);
/// matching is on the materialized set, so e.g. explicit:1,3 over Z_4 hits
/// the units formula. Returns nullopt (never a guess) outside coverage.
///
/// Covered: A = U(n); A = {1..r}; even n with A all odd containing
/// n / 2^{v2(n)}; A all even (n even: D=C=2; n odd: D=C=3); A all odd with
/// n odd (D=C=3). E values follow from D via E_A(n) = D_A(n) + n - 1.
std::optional<ConstantResult> predict(ConstantKind kind, const RingSpec& ring, const WeightSetSpec& spec);

/// Exact value: the least L such that every length-L sequence (multiset for
/// D/E, which are permutation-invariant) has the required zero-sum
/// structure, plus one extremal witness of length L-1.
///
/// Search order: upward from 1, or centered on start_hint when given.
/// On budget exhaustion returns a partial result carrying bracketing
/// bounds (method LowerWitnessOnly / UpperBoundOnly) instead of a value.
ConstantResult compute_exhaustive(ConstantKind kind, const RingSpec& ring, const WeightSetSpec& spec,
                                  SearchBudget& budget,
                                  std::optional<std::uint64_t> start_hint = std::nullopt);

/// All extremal sequences of length value-1 (multisets, as nondecreasing
/// tuples, for D/E; sequences for C). With up_to_equivalence (A must be a
/// subgroup of U(n)) one representative per A-equivalence class, the
/// lexicographically smallest member.
std::vector<ResidueSequence> enumerate_extremal(ConstantKind kind, const RingSpec& ring,
                                                const WeightSetSpec& spec, bool up_to_equivalence,
                                                SearchBudget& budget);

/// Witness of S ~ T under a subgroup A <= U(n): a unit c, a permutation
/// sigma and weights a_i in A with c y_{sigma(i)} = a_i x_i for all i.
struct EquivalenceWitness {
    Residue c = 1;
    std::vector<std::size_t> sigma;   // sigma[i] is 1-based into T
    std::vector<Residue> weights;

    friend bool operator==(const EquivalenceWitness&, const EquivalenceWitness&) = default;
};

/// Exhaustive over the global unit c with multiset matching on A-orbits;
/// nullopt is a verified negative. Rejects A not a subgroup of U(n).
std::optional<EquivalenceWitness> check_equivalence(const ResidueSequence& s, const ResidueSequence& t,
                                                    const WeightSet& subgroup);

/// Structural test for C-extremal sequences over Z_{2^r}, |S| = 2^r - 1:
/// the middle term is odd, every other term is even, and the two halves
/// divided by 2 are recursively C-extremal over Z_{2^(r-1)}.
struct CExtremalDecomposition {
    bool extremal = false;
    std::uint64_t modulus = 2;
    std::optional<Residue> middle;
    std::vector<CExtremalDecomposition> halves;  // two entries when r > 1
};

CExtremalDecomposition classify_c_extremal_pow2(const ResidueSequence& s);

/// Valuation-profile test for E-extremal sequences over Z_{2^r},
/// |S| = 2^r + r - 1: one unit multiple of 2^i for each i in [0, r-2], an
/// odd number of terms equal to 2^(r-1), zeros elsewhere. Valuations are
/// invariants of U(2^r)-equivalence, so the profile decides membership.
bool classify_e_extremal_pow2(const ResidueSequence& s);

/// The ruler sequence over Z_{2^r}: position j carries 2^(r-1-v2(j)).
/// It is C-extremal of length 2^r - 1 (e.g. (4,2,4,1,4,2,4) for r = 3).
ResidueSequence c_extremal_witness_pow2(std::uint32_t r);

/// C-extremal witness of length 2^Omega(n) - 1 for composite n: per-prime-
/// power witnesses (the ruler sequence at 2^r, searched for odd prime
/// powers) combined by the product construction and mapped through the
/// ring isomorphism Z_n = prod Z_{p^r}. Verified before returning.
ResidueSequence c_extremal_witness_composite(const RingSpec& ring, SearchBudget& budget);

/// Exact C(G) over a product group for A = {1}; must equal |G|.
GroupConstantResult compute_group_c_constant(const GroupSpec& g, SearchBudget& budget);
/// Exact D(G) over a product group for A = {1}.
GroupConstantResult compute_group_d_constant(const GroupSpec& g, SearchBudget& budget);

/// Probe for the open question on weight sets of size (n-1)/2 for odd n:
/// computes D_A and C_A for every A of that size and reports any with a
/// value above 3. Asserts nothing; expected empty at small n.
struct WeightProbeResult {
    WeightSetSpec weights;
    std::uint64_t d_value = 0;
    std::uint64_t c_value = 0;
};

std::vector<WeightProbeResult> probe_half_size_weight_sets(const RingSpec& ring, SearchBudget& budget);

}  // namespace zslab
