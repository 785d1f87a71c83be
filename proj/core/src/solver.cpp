#include "zslab/solver.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "zslab/residue_mask.hpp"

namespace zslab {

namespace {

std::uint64_t read_window64(const std::vector<std::uint64_t>& words, std::uint64_t pos) {
    std::uint64_t w = pos >> 6, b = pos & 63;
    std::uint64_t lo = words[w] >> b;
    if (b != 0 && w + 1 < words.size()) lo |= words[w + 1] << (64 - b);
    return lo;
}

void or_window64(std::vector<std::uint64_t>& words, std::uint64_t pos, std::uint64_t val, std::uint64_t take) {
    if (take < 64) val &= (std::uint64_t{1} << take) - 1;
    std::uint64_t w = pos >> 6, b = pos & 63;
    words[w] |= val << b;
    if (b != 0 && b + take > 64) words[w + 1] |= val >> (64 - b);
}

// OR `len` bits of src starting at src_from into dst starting at dst_from.
void or_bit_range(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
                  std::uint64_t src_from, std::uint64_t len, std::uint64_t dst_from) {
    for (std::uint64_t off = 0; off < len; off += 64) {
        std::uint64_t take = std::min<std::uint64_t>(64, len - off);
        or_window64(dst, dst_from + off, read_window64(src, src_from + off), take);
    }
}

}  // namespace

void ored_rotate(ResidueMask& dst, const ResidueMask& src, std::uint64_t s) {
    const std::uint64_t n = src.modulus;
    s %= n;
    if (n <= 64) {
        const std::uint64_t mask = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        std::uint64_t w = src.words[0];
        std::uint64_t rotated = (s == 0) ? w : (((w << s) | (w >> (n - s))) & mask);
        dst.words[0] |= rotated;
        return;
    }
    if (s == 0) {
        dst.or_with(src);
        return;
    }
    or_bit_range(dst.words, src.words, 0, n - s, s);  // low bits move up
    or_bit_range(dst.words, src.words, n - s, s, 0);  // top bits wrap around
}

std::string to_string(SolveMethod m) {
    switch (m) {
        case SolveMethod::DP: return "dp";
        case SolveMethod::ConstructiveCun: return "cun";
        case SolveMethod::ConstructiveDun: return "dun";
        case SolveMethod::ConstructiveEun: return "eun";
        case SolveMethod::LemmaEven: return "lemma-even";
        case SolveMethod::LemmaB: return "lemma-b";
        case SolveMethod::Cubp: return "cubp";
    }
    throw std::logic_error("to_string(SolveMethod): bad value");
}

bool verify_certificate(const ResidueSequence& s, const WeightSet& weights, const ZeroSumCertificate& cert) {
    if (cert.n != s.n || weights.n != s.n) return false;
    if (cert.indices.empty()) return false;
    if (!std::is_sorted(cert.indices.begin(), cert.indices.end())) return false;
    if (std::adjacent_find(cert.indices.begin(), cert.indices.end()) != cert.indices.end()) return false;
    if (cert.indices.front() < 1 || cert.indices.back() > s.length()) return false;
    if (cert.kind == CertificateKind::ConsecutiveBlock &&
        cert.indices.back() - cert.indices.front() + 1 != cert.indices.size())
        return false;
    if (cert.kind == CertificateKind::FixedLength && cert.indices.size() != cert.fixed_length) return false;
    if (cert.weights.size() != cert.indices.size()) return false;
    std::uint64_t sum = 0;
    for (auto i : cert.indices) {
        auto it = cert.weights.find(i);
        if (it == cert.weights.end()) return false;
        if (!weights.contains(it->second)) return false;
        sum = (sum + mul_mod(it->second, s.terms[i - 1], s.n)) % s.n;
    }
    return sum == 0;
}

// ---- complete decision procedures -------------------------------------------

SolverVerdict solve_any(const ResidueSequence& s, const WeightSet& w) {
    if (w.n != s.n) throw std::invalid_argument("solve_any: weight set is over a different modulus");
    const std::uint64_t n = s.n;
    const std::size_t k = s.length();

    // can[i]: accumulated sums from which positions i..k-1 (each optionally
    // picked and weighted) can still reach zero.
    std::vector<ResidueMask> can(k + 1, ResidueMask(n));
    can[k].set(0);
    for (std::size_t i = k; i-- > 0;) {
        can[i] = can[i + 1];
        for (auto a : w.values) {
            std::uint64_t step = (n - mul_mod(a, s.terms[i], n)) % n;
            ored_rotate(can[i], can[i + 1], step);
        }
    }

    // Greedy: include an index whenever some weight keeps the target
    // reachable; this yields the lexicographically smallest index set.
    ZeroSumCertificate cert;
    cert.kind = CertificateKind::AnySubsequence;
    cert.n = n;
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (!cert.indices.empty() && sum == 0) break;
        std::optional<Residue> zero_now, continues;
        for (auto a : w.values) {
            std::uint64_t next = (sum + mul_mod(a, s.terms[i], n)) % n;
            if (next == 0 && !zero_now) zero_now = a;
            if (next != 0 && !continues && can[i + 1].test(next)) continues = a;
            if (zero_now) break;  // immediate close is the smallest completion
        }
        std::optional<Residue> choice = zero_now ? zero_now : continues;
        if (!choice) continue;
        cert.indices.push_back(i + 1);
        cert.weights[i + 1] = *choice;
        sum = (sum + mul_mod(*choice, s.terms[i], n)) % n;
    }
    if (cert.indices.empty() || sum != 0) return {false, SolveMethod::DP, std::nullopt};
    return {true, SolveMethod::DP, std::move(cert)};
}

SolverVerdict solve_consecutive(const ResidueSequence& s, const WeightSet& w) {
    if (w.n != s.n) throw std::invalid_argument("solve_consecutive: weight set is over a different modulus");
    const std::uint64_t n = s.n;
    const std::size_t k = s.length();

    for (std::size_t start = 0; start < k; ++start) {
        // layers[t]: sums reachable by weighting every term of start..start+t.
        std::vector<ResidueMask> layers;
        for (std::size_t end = start; end < k; ++end) {
            ResidueMask next(n);
            if (end == start) {
                for (auto a : w.values) next.set(mul_mod(a, s.terms[end], n));
            } else {
                for (auto a : w.values) ored_rotate(next, layers.back(), mul_mod(a, s.terms[end], n));
            }
            layers.push_back(std::move(next));
            if (!layers.back().test(0)) continue;

            // Backtrack, preferring the smallest weight at each position.
            ZeroSumCertificate cert;
            cert.kind = CertificateKind::ConsecutiveBlock;
            cert.n = n;
            std::uint64_t target = 0;
            for (std::size_t pos = end; pos > start; --pos) {
                for (auto a : w.values) {
                    std::uint64_t prev = (target + n - mul_mod(a, s.terms[pos], n) % n) % n;
                    if (layers[pos - 1 - start].test(prev)) {
                        cert.weights[pos + 1] = a;
                        target = prev;
                        break;
                    }
                }
            }
            for (auto a : w.values) {
                if (mul_mod(a, s.terms[start], n) == target) {
                    cert.weights[start + 1] = a;
                    break;
                }
            }
            for (std::size_t i = start; i <= end; ++i) cert.indices.push_back(i + 1);
            return {true, SolveMethod::DP, std::move(cert)};
        }
    }
    return {false, SolveMethod::DP, std::nullopt};
}

SolverVerdict solve_fixed_length(const ResidueSequence& s, const WeightSet& w, std::uint64_t target_len) {
    if (w.n != s.n) throw std::invalid_argument("solve_fixed_length: weight set is over a different modulus");
    if (target_len == 0 || target_len > s.length())
        throw std::invalid_argument("solve_fixed_length: need 1 <= L <= |S|");
    const std::uint64_t n = s.n;
    const std::size_t k = s.length();
    const std::size_t L = static_cast<std::size_t>(target_len);

    // can[i][c]: accumulated sums from which exactly c further picks among
    // positions i..k-1 can close the total to zero.
    std::vector<std::vector<ResidueMask>> can(k + 1, std::vector<ResidueMask>(L + 1, ResidueMask(n)));
    can[k][0].set(0);
    for (std::size_t i = k; i-- > 0;) {
        for (std::size_t c = 0; c <= L; ++c) {
            can[i][c] = can[i + 1][c];
            if (c > 0) {
                for (auto a : w.values) {
                    std::uint64_t step = (n - mul_mod(a, s.terms[i], n)) % n;
                    ored_rotate(can[i][c], can[i + 1][c - 1], step);
                }
            }
        }
    }
    if (!can[0][L].test(0)) return {false, SolveMethod::DP, std::nullopt};

    ZeroSumCertificate cert;
    cert.kind = CertificateKind::FixedLength;
    cert.n = n;
    cert.fixed_length = target_len;
    std::uint64_t sum = 0;
    std::size_t remaining = L;
    for (std::size_t i = 0; i < k && remaining > 0; ++i) {
        for (auto a : w.values) {
            std::uint64_t next = (sum + mul_mod(a, s.terms[i], n)) % n;
            if (can[i + 1][remaining - 1].test(next)) {
                cert.indices.push_back(i + 1);
                cert.weights[i + 1] = a;
                sum = next;
                --remaining;
                break;
            }
        }
    }
    if (remaining != 0 || sum != 0) throw std::logic_error("solve_fixed_length: reconstruction failed");
    return {true, SolveMethod::DP, std::move(cert)};
}

// ---- constructive pipelines ---------------------------------------------------

gf2::GF2Matrix indicator_matrix(const ResidueSequence& s, const RingSpec& ring) {
    const std::uint32_t k = static_cast<std::uint32_t>(s.length());
    gf2::GF2Matrix p(k, ring.big_omega);
    std::uint32_t col = 0;
    for (const auto& f : ring.factors) {
        std::uint64_t pi = 1;
        for (std::uint32_t i = 1; i <= f.r; ++i) {
            pi *= f.p;
            for (std::uint32_t j = 0; j < k; ++j) {
                if (s.terms[j] % pi != 0) p.row_data[j].set(col, true);
            }
            ++col;
        }
    }
    return p;
}

namespace {

// Per-prime unit weights on the selected subsequence, CRT-combined into
// units of Z_n. `local` holds 1-based indices into s.
std::map<std::size_t, Residue> crt_unit_weights(const ResidueSequence& s, const RingSpec& ring,
                                                const std::vector<std::size_t>& selection) {
    std::vector<Residue> sub;
    sub.reserve(selection.size());
    for (auto i : selection) sub.push_back(s.terms[i - 1]);

    std::vector<std::vector<Residue>> per_prime;
    std::vector<std::uint64_t> prime_powers;
    for (const auto& f : ring.factors) {
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < f.r; ++i) q *= f.p;
        prime_powers.push_back(q);
        ResidueSequence projected(q, {});
        projected.terms.reserve(sub.size());
        for (auto x : sub) projected.terms.push_back(x % q);
        per_prime.push_back(lemma_gri_weights(projected));
    }

    std::map<std::size_t, Residue> weights;
    for (std::size_t t = 0; t < selection.size(); ++t) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> congruences;
        for (std::size_t f = 0; f < prime_powers.size(); ++f)
            congruences.emplace_back(per_prime[f][t], prime_powers[f]);
        weights[selection[t]] = crt_combine(congruences);
    }
    return weights;
}

void check_pipeline_output(const ResidueSequence& s, const RingSpec& ring, const ZeroSumCertificate& cert) {
    WeightSet units = materialize(WeightSetSpec::units(), ring);
    if (!verify_certificate(s, units, cert)) throw std::logic_error("pipeline produced an invalid certificate");
}

}  // namespace

ZeroSumCertificate cun_pipeline(const ResidueSequence& s) {
    RingSpec ring = factorize(s.n);
    if (s.n < 2) throw std::invalid_argument("cun_pipeline: needs n >= 2");
    if (ring.big_omega >= 63 || s.length() < (std::uint64_t{1} << ring.big_omega))
        throw std::invalid_argument("cun_pipeline: needs |S| >= 2^Omega(n)");

    auto window = gf2::kernel_window(indicator_matrix(s, ring));
    std::vector<std::size_t> selection;
    for (std::size_t i = window.lo; i <= window.hi; ++i) selection.push_back(i);

    ZeroSumCertificate cert;
    cert.kind = CertificateKind::ConsecutiveBlock;
    cert.n = s.n;
    cert.indices = selection;
    cert.weights = crt_unit_weights(s, ring, selection);
    check_pipeline_output(s, ring, cert);
    return cert;
}

ZeroSumCertificate dun_pipeline(const ResidueSequence& s) {
    RingSpec ring = factorize(s.n);
    if (s.n < 2) throw std::invalid_argument("dun_pipeline: needs n >= 2");

    // |S| >= Omega(n)+1 guarantees a dependency; shorter inputs are accepted
    // when their indicator rows happen to be dependent anyway.
    auto dependency = gf2::find_zero_xor_subset(indicator_matrix(s, ring));
    if (!dependency) {
        if (s.length() < ring.big_omega + std::size_t{1})
            throw std::invalid_argument("dun_pipeline: needs |S| >= Omega(n)+1 (no dependency below that)");
        throw std::logic_error("dun_pipeline: no dependency despite |S| > Omega(n)");
    }
    auto subset = *dependency;

    ZeroSumCertificate cert;
    cert.kind = CertificateKind::AnySubsequence;
    cert.n = s.n;
    cert.indices = subset.indices;
    cert.weights = crt_unit_weights(s, ring, subset.indices);
    check_pipeline_output(s, ring, cert);
    return cert;
}

ZeroSumCertificate eun_pipeline(const ResidueSequence& s, std::uint64_t m) {
    RingSpec ring = factorize(s.n);
    if (s.n < 2) throw std::invalid_argument("eun_pipeline: needs n >= 2");
    const std::uint32_t a = ring.big_omega;
    if (m == 0 || m % 2 != 0 || a >= 63 || m < (std::uint64_t{1} << a))
        throw std::invalid_argument("eun_pipeline: needs m even with m >= 2^Omega(n)");
    if (s.length() < m + a) throw std::invalid_argument("eun_pipeline: needs |S| >= m + Omega(n)");

    ResidueSequence head(s.n, std::vector<Residue>(s.terms.begin(), s.terms.begin() + m + a));
    auto subset = gf2::kernel_fixed_weight(indicator_matrix(head, ring), static_cast<std::uint32_t>(m));

    ZeroSumCertificate cert;
    cert.kind = CertificateKind::FixedLength;
    cert.n = s.n;
    cert.fixed_length = m;
    cert.indices = subset.indices;
    cert.weights = crt_unit_weights(s, ring, subset.indices);
    check_pipeline_output(s, ring, cert);
    return cert;
}

std::vector<Residue> lemma_gri_weights(const ResidueSequence& s) {
    RingSpec ring = factorize(s.n);
    if (ring.factors.size() != 1) throw std::invalid_argument("lemma_gri_weights: modulus must be a prime power");
    const std::uint64_t p = ring.factors[0].p;
    const std::uint32_t r = ring.factors[0].r;
    const std::uint64_t n = s.n;

    // |X_i| even for every level i in [1, r]; equivalently every p-adic
    // valuation below r occurs an even number of times.
    std::uint64_t pi = 1;
    for (std::uint32_t i = 1; i <= r; ++i) {
        pi *= p;
        std::size_t size = 0;
        for (auto x : s.terms)
            if (x % pi != 0) ++size;
        if (size % 2 != 0)
            throw std::invalid_argument("lemma_gri_weights: |X_" + std::to_string(i) + "| is odd");
    }

    auto valuation = [&](Residue x) -> std::uint32_t {
        if (x == 0) return r;
        std::uint32_t v = 0;
        while (x % p == 0) {
            x /= p;
            ++v;
        }
        return v;
    };

    std::vector<Residue> weights(s.length(), 1);
    std::vector<std::vector<std::size_t>> by_level(r);
    for (std::size_t j = 0; j < s.length(); ++j) {
        std::uint32_t v = valuation(s.terms[j]);
        if (v < r) by_level[v].push_back(j);  // terms = 0 keep weight 1
    }
    for (std::uint32_t v = 0; v < r; ++v) {
        const auto& level = by_level[v];
        std::uint64_t pv = 1;
        for (std::uint32_t i = 0; i < v; ++i) pv *= p;
        std::uint64_t q = n / pv;  // p^{r-v}
        for (std::size_t t = 0; t + 1 < level.size(); t += 2) {
            // pair (x, y) = p^v (u, w); weight y by -u w^{ -1} mod p^{r-v}.
            std::uint64_t u = (s.terms[level[t]] / pv) % q;
            std::uint64_t w = (s.terms[level[t + 1]] / pv) % q;
            std::uint64_t b = (q - mul_mod(u, inv_mod(w, q), q)) % q;
            weights[level[t + 1]] = b;  // a unit below p^r, hence a unit of Z_n
        }
    }

    std::uint64_t sum = 0;
    for (std::size_t j = 0; j < s.length(); ++j) sum = (sum + mul_mod(weights[j], s.terms[j], n)) % n;
    if (sum != 0) throw std::logic_error("lemma_gri_weights: pairing failed to cancel");
    return weights;
}

std::vector<Residue> lemma_even_weights(const ResidueSequence& s) {
    RingSpec ring = factorize(s.n);
    if (ring.factors.size() != 1 || ring.factors[0].p != 2)
        throw std::invalid_argument("lemma_even_weights: modulus must be a power of 2");
    const std::uint64_t n = s.n;

    std::vector<std::size_t> unit_positions;
    for (std::size_t j = 0; j < s.length(); ++j)
        if (s.terms[j] % 2 == 1) unit_positions.push_back(j);
    if (unit_positions.empty() || unit_positions.size() % 2 != 0)
        throw std::invalid_argument("lemma_even_weights: needs a nonzero even number of units");

    // Everything weighs 1; the first unit absorbs the rest of the sum.
    std::vector<Residue> weights(s.length(), 1);
    std::uint64_t rest = 0;
    for (std::size_t j = 0; j < s.length(); ++j)
        if (j != unit_positions.front()) rest = (rest + s.terms[j]) % n;
    std::uint64_t balancing = mul_mod((n - rest) % n, inv_mod(s.terms[unit_positions.front()], n), n);
    weights[unit_positions.front()] = balancing;

    std::uint64_t sum = 0;
    for (std::size_t j = 0; j < s.length(); ++j) sum = (sum + mul_mod(weights[j], s.terms[j], n)) % n;
    if (sum != 0 || balancing % 2 == 0) throw std::logic_error("lemma_even_weights: balancing weight failed");
    return weights;
}

SolverVerdict lift_by_p(const ResidueSequence& s, std::uint64_t p, CertificateKind kind,
                        std::uint64_t target_len) {
    if (p < 2 || !is_prime(p) || s.n % p != 0) throw std::invalid_argument("lift_by_p: p must be a prime divisor of n");
    for (auto x : s.terms)
        if (x % p != 0) throw std::invalid_argument("lift_by_p: p must divide every term");
    const std::uint64_t reduced_n = s.n / p;

    ResidueSequence divided(reduced_n, {});
    divided.terms.reserve(s.length());
    for (auto x : s.terms) divided.terms.push_back((x / p) % reduced_n);

    WeightSet units = materialize(WeightSetSpec::units(), factorize(reduced_n));
    SolverVerdict inner;
    switch (kind) {
        case CertificateKind::AnySubsequence: inner = solve_any(divided, units); break;
        case CertificateKind::ConsecutiveBlock: inner = solve_consecutive(divided, units); break;
        case CertificateKind::FixedLength: inner = solve_fixed_length(divided, units, target_len); break;
    }
    if (!inner.found) return {false, SolveMethod::LemmaB, std::nullopt};

    ZeroSumCertificate cert = *inner.certificate;
    cert.n = s.n;
    for (auto& [idx, weight] : cert.weights) weight = smallest_unit_preimage(s.n, reduced_n, weight);
    WeightSet big_units = materialize(WeightSetSpec::units(), factorize(s.n));
    if (!verify_certificate(s, big_units, cert)) throw std::logic_error("lift_by_p: lifted certificate invalid");
    return {true, SolveMethod::LemmaB, std::move(cert)};
}

namespace {

std::uint64_t smallest_primitive_root(std::uint64_t p) {
    RingSpec order = factorize(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool primitive = true;
        for (const auto& f : order.factors) {
            if (pow_mod(g, (p - 1) / f.p, p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
    throw std::logic_error("smallest_primitive_root: none found");
}

}  // namespace

ZeroSumCertificate cubp_solve(const ResidueSequence& s, std::uint64_t k) {
    const std::uint64_t p = s.n;
    if (!is_prime(p) || p == 2) throw std::invalid_argument("cubp_solve: n must be an odd prime");
    if (!is_prime(k) || k == 2) throw std::invalid_argument("cubp_solve: k must be an odd prime");
    if ((p - 1) % k != 0) throw std::invalid_argument("cubp_solve: needs p = 1 (mod k)");
    if ((p - 1) % (k * k) == 0) throw std::invalid_argument("cubp_solve: needs p != 1 (mod k^2)");
    if (s.length() < k) throw std::invalid_argument("cubp_solve: needs at least k terms");
    for (auto x : s.terms)
        if (x == 0) throw std::invalid_argument("cubp_solve: every term must be a unit");

    const std::uint64_t g = smallest_primitive_root(p);
    std::vector<std::uint64_t> log_of(p, 0);
    {
        std::uint64_t v = 1;
        for (std::uint64_t e = 0; e < p - 1; ++e) {
            log_of[v] = e;
            v = mul_mod(v, g, p);
        }
    }
    const std::uint64_t c = pow_mod(g, (p - 1) / k, p);  // deterministic order-k element
    // x = g^e lies in the coset [c^t] with t = e * ((p-1)/k)^{-1} (mod k);
    // the inverse exists because p != 1 (mod k^2).
    const std::uint64_t shift_inv = inv_mod(((p - 1) / k) % k, k);
    auto coset_of = [&](Residue x) { return mul_mod(log_of[x] % k, shift_inv, k); };

    ZeroSumCertificate cert;
    cert.kind = CertificateKind::AnySubsequence;
    cert.n = p;

    // Case 1: two terms share a coset of U(p)^k.
    std::unordered_map<std::uint64_t, std::size_t> first_in_coset;
    for (std::size_t j = 0; j < s.length(); ++j) {
        std::uint64_t t = coset_of(s.terms[j]);
        auto it = first_in_coset.find(t);
        if (it != first_in_coset.end()) {
            std::size_t i = it->second;
            std::uint64_t cl = pow_mod(c, t, p);
            std::uint64_t a = mul_mod(s.terms[i], inv_mod(cl, p), p);
            std::uint64_t b = mul_mod(s.terms[j], inv_mod(cl, p), p);
            cert.indices = {i + 1, j + 1};
            cert.weights[i + 1] = (p - b) % p;  // -b; a k-th power since k is odd
            cert.weights[j + 1] = a;
            break;
        }
        first_in_coset[t] = j;
    }

    // Case 2: all k cosets represented once among the first k terms.
    if (cert.indices.empty()) {
        for (std::size_t j = 0; j < k; ++j) {
            std::uint64_t t = coset_of(s.terms[j]);
            std::uint64_t a = mul_mod(s.terms[j], inv_mod(pow_mod(c, t, p), p), p);
            cert.indices.push_back(j + 1);
            cert.weights[j + 1] = inv_mod(a, p);
        }
    }

    WeightSet powers = materialize(WeightSetSpec::unit_kth_powers(k), factorize(p));
    if (!verify_certificate(s, powers, cert)) throw std::logic_error("cubp_solve: certificate invalid");
    return cert;
}

}  // namespace zslab
