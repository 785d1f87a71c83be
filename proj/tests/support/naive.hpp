// naive.hpp — brute-force oracles for the solvers and constants. These
// enumerate index sets and full weight tuples A^{|I|} directly and share no
// code with the DP or constructive paths they cross-check.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "zslab/ring.hpp"

namespace oracle {

using zslab::ResidueSequence;
using zslab::WeightSet;

// Does any weight tuple over the chosen positions sum to zero?
inline bool tuple_scan(const ResidueSequence& s, const WeightSet& w, const std::vector<std::size_t>& chosen,
                       std::size_t pos, std::uint64_t sum) {
    if (pos == chosen.size()) return sum == 0;
    for (auto a : w.values) {
        std::uint64_t next = (sum + a * s.terms[chosen[pos]]) % s.n;
        if (tuple_scan(s, w, chosen, pos + 1, next)) return true;
    }
    return false;
}

inline bool naive_any(const ResidueSequence& s, const WeightSet& w) {
    const std::size_t k = s.length();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<std::size_t> chosen;
        for (std::size_t i = 0; i < k; ++i)
            if ((mask >> i) & 1) chosen.push_back(i);
        if (tuple_scan(s, w, chosen, 0, 0)) return true;
    }
    return false;
}

inline bool naive_consecutive(const ResidueSequence& s, const WeightSet& w) {
    const std::size_t k = s.length();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            std::vector<std::size_t> chosen;
            for (std::size_t t = i; t <= j; ++t) chosen.push_back(t);
            if (tuple_scan(s, w, chosen, 0, 0)) return true;
        }
    }
    return false;
}

inline bool naive_fixed_length(const ResidueSequence& s, const WeightSet& w, std::size_t target) {
    const std::size_t k = s.length();
    if (target == 0 || target > k) return false;
    std::vector<std::size_t> chosen(target);
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t from, std::size_t picked) {
        if (picked == target) return tuple_scan(s, w, chosen, 0, 0);
        for (std::size_t i = from; i + (target - picked) <= k; ++i) {
            chosen[picked] = i;
            if (rec(i + 1, picked + 1)) return true;
        }
        return false;
    };
    return rec(0, 0);
}

// Exact constants over tiny rings by full sequence enumeration against the
// naive solvers above. kind: 0 = D, 1 = C, 2 = E.
inline std::uint64_t naive_constant(int kind, const WeightSet& w, std::uint64_t n) {
    auto every_sequence_good = [&](std::size_t len) {
        std::vector<zslab::Residue> terms(len, 0);
        std::function<bool(std::size_t)> rec = [&](std::size_t pos) -> bool {
            if (pos == len) {
                ResidueSequence s(n, terms);
                bool good = kind == 0   ? naive_any(s, w)
                            : kind == 1 ? naive_consecutive(s, w)
                                        : naive_fixed_length(s, w, static_cast<std::size_t>(n));
                return good;
            }
            for (std::uint64_t v = 0; v < n; ++v) {
                terms[pos] = v;
                if (!rec(pos + 1)) return false;
            }
            return true;
        };
        return rec(0);
    };
    for (std::size_t len = 1;; ++len) {
        if (every_sequence_good(len)) return len;
    }
}

}  // namespace oracle
