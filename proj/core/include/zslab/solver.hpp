// solver.hpp — certificate-producing solvers for A-weighted zero-sum
// subsequences of Z_n sequences.
//
// The three solve_* procedures are complete decision procedures (reachable-sum
// dynamic programs with backtracking); a NotFound verdict from them is a
// proof of absence. The pipelines (cun/dun/eun, the lemma weight builders,
// lift_by_p, cubp) are constructive: within their stated preconditions they
// always produce a certificate, and every certificate is re-verified by
// direct evaluation before being returned.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zslab/gf2.hpp"
#include "zslab/ring.hpp"

namespace zslab {

enum class CertificateKind { AnySubsequence, ConsecutiveBlock, FixedLength };

/// An explicit proof: indices into the sequence (1-based, ascending) and a
/// weight for each chosen index, with sum_{i} a_i x_i = 0 (mod n).
struct ZeroSumCertificate {
    CertificateKind kind = CertificateKind::AnySubsequence;
    std::uint64_t n = 1;
    std::uint64_t fixed_length = 0;  // meaningful when kind == FixedLength
    std::vector<std::size_t> indices;
    std::map<std::size_t, Residue> weights;

    friend bool operator==(const ZeroSumCertificate&, const ZeroSumCertificate&) = default;
};

enum class SolveMethod { DP, ConstructiveCun, ConstructiveDun, ConstructiveEun, LemmaEven, LemmaB, Cubp };

std::string to_string(SolveMethod m);

struct SolverVerdict {
    bool found = false;
    SolveMethod method = SolveMethod::DP;
    std::optional<ZeroSumCertificate> certificate;
};

/// Exact check of a certificate against its sequence and weight set:
/// index-kind constraints, weight membership, and the modular evaluation.
bool verify_certificate(const ResidueSequence& s, const WeightSet& weights, const ZeroSumCertificate& cert);

// ---- complete decision procedures -------------------------------------------

/// Some nonempty subsequence admits weights summing to zero. Certificate
/// tie-break: lexicographically smallest index set, weights chosen smallest
/// first among those that keep the selection completable.
SolverVerdict solve_any(const ResidueSequence& s, const WeightSet& weights);

/// Some nonempty block of consecutive terms qualifies, with every term of
/// the block weighted. Earliest start, then shortest block.
SolverVerdict solve_consecutive(const ResidueSequence& s, const WeightSet& weights);

/// Some subsequence of length exactly target_len qualifies. Rejects
/// target_len == 0 or > |S|. Lexicographically smallest index set.
SolverVerdict solve_fixed_length(const ResidueSequence& s, const WeightSet& weights, std::uint64_t target_len);

// ---- constructive pipelines (unit weights) -----------------------------------

/// Consecutive-block certificate with unit weights for any |S| >= 2^Omega(n):
/// builds the indicator sets X_i^(p) = { j : x_j != 0 mod p^i }, finds a
/// window meeting each with even parity, then assembles the weights per
/// prime and combines them by CRT.
ZeroSumCertificate cun_pipeline(const ResidueSequence& s);

/// Any-subsequence certificate with unit weights for |S| >= Omega(n)+1;
/// the subset comes from Gaussian elimination instead of the window scan.
ZeroSumCertificate dun_pipeline(const ResidueSequence& s);

/// Fixed-length-m certificate with unit weights for m even, m >= 2^Omega(n),
/// |S| >= m + Omega(n); solved on the first m + Omega(n) terms.
ZeroSumCertificate eun_pipeline(const ResidueSequence& s, std::uint64_t m);

/// Unit weights a_j of Z_{p^r} with sum a_j x_j = 0 (mod p^r), for a sequence
/// in which every X_i = { j : x_j != 0 mod p^i }, i in [1, r], has even size.
/// Terms of equal p-adic valuation are cancelled in pairs level by level.
/// Weights cover every term of the input.
std::vector<Residue> lemma_gri_weights(const ResidueSequence& s_mod_prime_power);

/// Unit weights of Z_{2^r} summing the whole sequence to zero, provided the
/// sequence holds a nonzero even number of units: every weight is 1 except
/// the first unit, which is scaled to cancel the rest.
std::vector<Residue> lemma_even_weights(const ResidueSequence& s_mod_two_power);

/// When p | n and p divides every term, solving on the divided sequence over
/// Z_{n/p} is equivalent; a certificate found there lifts through the onto
/// map U(n) -> U(n/p) via the smallest unit preimage of each weight.
SolverVerdict lift_by_p(const ResidueSequence& s, std::uint64_t p, CertificateKind kind,
                        std::uint64_t target_len = 0);

/// Weights in the k-th power subgroup U(p)^k for a sequence of unit terms,
/// for odd primes p, k with p = 1 (mod k), p != 1 (mod k^2). Two same-coset
/// terms cancel each other; otherwise the k terms cover all k cosets of
/// U(p)^k and the geometric sum 1 + c + ... + c^{k-1} = 0 closes it.
ZeroSumCertificate cubp_solve(const ResidueSequence& s, std::uint64_t k);

/// Indicator matrix of the pipelines: row j has one bit per (p, i) pair,
/// set iff x_j != 0 (mod p^i). Columns ordered by ascending p, then i.
gf2::GF2Matrix indicator_matrix(const ResidueSequence& s, const RingSpec& ring);

}  // namespace zslab
