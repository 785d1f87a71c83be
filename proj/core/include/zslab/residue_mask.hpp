// residue_mask.hpp — a bitset over Z_n with the cyclic rotate-or kernel that
// drives every reachable-sum dynamic program in the solvers.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace zslab {

struct ResidueMask {
    std::uint64_t modulus = 1;
    std::vector<std::uint64_t> words;

    ResidueMask() : words(1, 0) {}
    explicit ResidueMask(std::uint64_t n) : modulus(n), words((n + 63) / 64, 0) {
        if (n == 0) throw std::invalid_argument("ResidueMask: modulus must be positive");
    }

    bool test(std::uint64_t r) const { return (words[r >> 6] >> (r & 63)) & 1; }
    void set(std::uint64_t r) { words[r >> 6] |= std::uint64_t{1} << (r & 63); }
    void clear() {
        for (auto& w : words) w = 0;
    }
    bool any() const {
        for (auto w : words)
            if (w) return true;
        return false;
    }
    void or_with(const ResidueMask& other) {
        for (std::size_t i = 0; i < words.size(); ++i) words[i] |= other.words[i];
    }

    friend bool operator==(const ResidueMask&, const ResidueMask&) = default;
};

/// dst |= (src rotated by s), i.e. for every r in src mark (r + s) mod n in
/// dst. This is one DP step "add a term with weighted value s" on a
/// reachable-sum set. dst and src must share the modulus and be distinct.
void ored_rotate(ResidueMask& dst, const ResidueMask& src, std::uint64_t s);

}  // namespace zslab
