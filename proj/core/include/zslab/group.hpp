// group.hpp — finite products of cyclic groups Z_{n_1} x ... x Z_{n_t},
// the lower-bound witness constructions for products, and exact C(G)/D(G)
// computation for unweighted (A = {1}) sequences at desk scale.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zslab/ring.hpp"

namespace zslab {

/// Elements are encoded as mixed-radix indices in [0, order).
struct GroupSpec {
    std::vector<std::uint64_t> factors;  // each >= 2

    std::uint64_t order() const;
    std::vector<std::uint64_t> decode(std::uint64_t e) const;
    std::uint64_t encode(const std::vector<std::uint64_t>& coords) const;
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;

    static GroupSpec product(const GroupSpec& a, const GroupSpec& b);

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

struct GroupSequence {
    GroupSpec group;
    std::vector<std::uint64_t> terms;  // encoded elements

    std::size_t length() const { return terms.size(); }

    friend bool operator==(const GroupSequence&, const GroupSequence&) = default;
};

/// Weight action on group terms. One: plain sums. ComponentUnits: each term
/// may be scaled per coordinate by any unit of that cyclic factor — under
/// the CRT isomorphism with coprime factors this is exactly U(n) acting on
/// Z_n.
enum class GroupWeightKind { One, ComponentUnits };

/// All images { w . g } of one element under the weight action, deduplicated.
std::vector<std::uint64_t> weighted_images(const GroupSpec& g, GroupWeightKind kind, std::uint64_t elem);

/// Complete decision: some nonempty subsequence admits weights summing to
/// the identity. Group order is limited to 64 (bitset state).
bool group_has_zero_sum_subsequence(const GroupSequence& s, GroupWeightKind kind);

/// Complete decision over consecutive blocks, every term weighted.
bool group_has_zero_sum_block(const GroupSequence& s, GroupWeightKind kind);

/// The interleaved product witness
///   S1, y_1, S1, y_2, ..., y_l, S1
/// over G1 x G2, of length (|S1|+1)(|S2|+1) - 1. Requires (and verifies)
/// that neither input has a weighted zero-sum block; the output then has
/// none either, certifying C(G1 x G2) >= C(G1) C(G2).
GroupSequence build_witness_product_c(const GroupSequence& s1, const GroupSequence& s2, GroupWeightKind kind);

/// The concatenated witness (x_1,0),...,(x_k,0),(0,y_1),...,(0,y_l) over
/// G1 x G2, length |S1|+|S2|. Requires (and verifies) that neither input
/// has a weighted zero-sum subsequence; certifies
/// D(G1 x G2) >= D(G1) + D(G2) - 1.
GroupSequence build_witness_concat_d(const GroupSequence& s1, const GroupSequence& s2, GroupWeightKind kind);

struct GroupConstantResult {
    std::uint64_t value = 0;
    GroupSequence witness;  // length value-1, no qualifying zero-sum
};

/// Exact C(G) for A = {1} by pruned exhaustive search over sequences: a
/// block sums to zero iff two prefix sums agree, so the search walks
/// injective prefix-sum sequences. budget counts search steps.
GroupConstantResult compute_group_c(const GroupSpec& g, std::uint64_t budget = 1'000'000'000);

/// Exact D(G) for A = {1} by multiset search with reachable-sum pruning.
GroupConstantResult compute_group_d(const GroupSpec& g, std::uint64_t budget = 1'000'000'000);

/// Maps a sequence over a product of pairwise-coprime cyclic groups to the
/// isomorphic Z_n, n the product of the factors, by CRT on coordinates.
ResidueSequence crt_map_to_zn(const GroupSequence& s);

/// Embeds a Z_n sequence as a group sequence over the one-factor group.
GroupSequence to_group_sequence(const ResidueSequence& s);

}  // namespace zslab
