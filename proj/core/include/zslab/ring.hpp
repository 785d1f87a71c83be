// ring.hpp — exact arithmetic in Z_n: factorization, residue sequences,
// weight-set materialization, and the natural projections Z_n -> Z_m for m | n.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zslab {

/// Canonical residue representative; always kept in [0, n).
using Residue = std::uint64_t;

struct PrimePower {
    std::uint64_t p = 0;  // prime
    std::uint32_t r = 0;  // exponent, >= 1

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A modulus together with its prime factorization.
///
/// Invariants: factors sorted ascending by p, each exponent >= 1, the
/// product of p^r equals n, and big_omega is the sum of exponents.
struct RingSpec {
    std::uint64_t n = 1;
    std::vector<PrimePower> factors;  // empty for n = 1
    std::uint32_t big_omega = 0;

    /// Exponent of p in n (0 when p does not divide n).
    std::uint32_t vp(std::uint64_t p) const;

    friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// Trial division with a deterministic Miller-Rabin check on the cofactor.
/// Rejects n = 0.
RingSpec factorize(std::uint64_t n);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// ---- modular helpers -------------------------------------------------------

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

/// Reduces a signed integer into [0, n).
Residue residue_mod(std::int64_t x, std::uint64_t n);

/// Inverse of a mod m; requires gcd(a, m) = 1.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

/// Euler phi from a factorization.
std::uint64_t phi(const RingSpec& ring);

/// Least x with x = r_i (mod m_i) for pairwise-coprime moduli.
std::uint64_t crt_combine(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& residue_mod_pairs);

/// Smallest unit of Z_n that reduces to the given unit of Z_m under the
/// natural map, where m | n. The map U(n) -> U(m) is onto, so this exists.
Residue smallest_unit_preimage(std::uint64_t n, std::uint64_t m, Residue unit_mod_m);

/// All units of Z_n in ascending order. For n = 1 this is {0}.
std::vector<Residue> units_of(std::uint64_t n);

// ---- sequences -------------------------------------------------------------

/// An ordered finite sequence over Z_n. Order matters for the consecutive
/// (C-type) constants; the D/E constants are permutation-invariant.
struct ResidueSequence {
    std::uint64_t n = 1;
    std::vector<Residue> terms;

    ResidueSequence() = default;
    ResidueSequence(std::uint64_t modulus, std::vector<Residue> values);

    /// Builds from signed integers, reducing each into [0, n).
    static ResidueSequence from_ints(std::uint64_t modulus, const std::vector<std::int64_t>& values);

    std::size_t length() const { return terms.size(); }

    friend bool operator==(const ResidueSequence&, const ResidueSequence&) = default;
};

/// x mod m for m | n; rejects non-divisors.
Residue project(Residue x, std::uint64_t n, std::uint64_t m);

/// Termwise projection of a sequence to Z_m, m | n.
ResidueSequence project(const ResidueSequence& s, std::uint64_t m);

/// Termwise S - a (mod n).
ResidueSequence shift(const ResidueSequence& s, Residue a);

// ---- weight sets ------------------------------------------------------------

enum class WeightVariant {
    Units,          // U(n)
    UnitKthPowers,  // { x^k : x in U(n) },  k >= 2
    Odd,            // odd residues in [1, n)
    Even,           // even residues in [2, n); 0 is never a weight
    Interval,       // {1, ..., r},  1 <= r < n
    Singleton,      // {m},  0 <= m < n
    One,            // {1}
    Explicit,       // an explicit nonempty list
};

/// Symbolic weight-set descriptor. The CLI grammar is:
///   units | units^k:3 | odd | even | interval:3 | singleton:5 | one | explicit:1,3,5
struct WeightSetSpec {
    WeightVariant variant = WeightVariant::Units;
    std::uint64_t k = 0;                  // UnitKthPowers
    std::uint64_t r = 0;                  // Interval
    std::uint64_t m = 0;                  // Singleton
    std::vector<std::int64_t> elements;   // Explicit (reduced at materialization)

    static WeightSetSpec units() { return {}; }
    static WeightSetSpec unit_kth_powers(std::uint64_t k);
    static WeightSetSpec odd();
    static WeightSetSpec even();
    static WeightSetSpec interval(std::uint64_t r);
    static WeightSetSpec singleton(std::uint64_t m);
    static WeightSetSpec one();
    static WeightSetSpec explicit_set(std::vector<std::int64_t> elements);

    /// Canonical spec string (the CLI grammar, explicit lists sorted).
    std::string to_string() const;

    /// Parses the CLI grammar; throws std::invalid_argument on bad input.
    static WeightSetSpec parse(const std::string& text);

    friend bool operator==(const WeightSetSpec&, const WeightSetSpec&) = default;
};

/// A materialized weight set: the residues of the spec in Z_n.
struct WeightSet {
    WeightSetSpec spec;
    std::uint64_t n = 1;
    std::vector<Residue> values;     // sorted ascending, deduplicated, nonempty
    std::vector<char> is_member;     // size n lookup

    bool contains(Residue x) const { return x < is_member.size() && is_member[x]; }
    std::size_t size() const { return values.size(); }
};

/// Materializes a weight-set spec in Z_n. An empty materialization (e.g.
/// `even` with n = 2) is a usage error and throws std::invalid_argument.
WeightSet materialize(const WeightSetSpec& spec, const RingSpec& ring);

}  // namespace zslab
