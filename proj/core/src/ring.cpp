#include "zslab/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace zslab {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    a %= m;
    while (e > 0) {
        if (e & 1) result = mul_mod(result, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set decides primality for every 64-bit integer.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint32_t RingSpec::vp(std::uint64_t p) const {
    for (const auto& f : factors) {
        if (f.p == p) return f.r;
    }
    return 0;
}

RingSpec factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    RingSpec ring;
    ring.n = n;
    std::uint64_t rest = n;
    auto push = [&](std::uint64_t p, std::uint32_t r) {
        ring.factors.push_back({p, r});
        ring.big_omega += r;
    };
    for (std::uint64_t p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
        if (rest % p != 0) continue;
        std::uint32_t r = 0;
        while (rest % p == 0) {
            rest /= p;
            ++r;
        }
        push(p, r);
        if (rest > 1 && is_prime(rest)) break;  // large prime cofactor
    }
    if (rest > 1) push(rest, 1);  // prime cofactor: no factor <= sqrt(rest) remains
    std::sort(ring.factors.begin(), ring.factors.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.p < b.p; });
    return ring;
}

Residue residue_mod(std::int64_t x, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("residue_mod: modulus must be positive");
    std::int64_t m = static_cast<std::int64_t>(n);
    std::int64_t v = x % m;
    if (v < 0) v += m;
    return static_cast<Residue>(v);
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (r != 1) throw std::invalid_argument("inv_mod: argument not a unit");
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t phi(const RingSpec& ring) {
    std::uint64_t result = 1;
    for (const auto& f : ring.factors) {
        std::uint64_t pr = 1;
        for (std::uint32_t i = 1; i < f.r; ++i) pr *= f.p;
        result *= pr * (f.p - 1);
    }
    return result;
}

std::uint64_t crt_combine(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& residue_mod_pairs) {
    std::uint64_t x = 0, m = 1;
    for (const auto& [r, mi] : residue_mod_pairs) {
        // solve x + m*t = r (mod mi)
        std::uint64_t t = mul_mod(((r + mi) - x % mi) % mi, inv_mod(m % mi, mi), mi);
        x += m * t;
        m *= mi;
    }
    return x % m;
}

Residue smallest_unit_preimage(std::uint64_t n, std::uint64_t m, Residue unit_mod_m) {
    if (m == 0 || n % m != 0) throw std::invalid_argument("smallest_unit_preimage: m must divide n");
    for (std::uint64_t w = unit_mod_m; w < n; w += m) {
        if (std::gcd(w, n) == 1) return w;
    }
    throw std::invalid_argument("smallest_unit_preimage: input is not a unit mod m");
}

std::vector<Residue> units_of(std::uint64_t n) {
    if (n == 1) return {0};
    std::vector<Residue> units;
    for (Residue x = 1; x < n; ++x) {
        if (std::gcd(x, n) == 1) units.push_back(x);
    }
    return units;
}

ResidueSequence::ResidueSequence(std::uint64_t modulus, std::vector<Residue> values)
    : n(modulus), terms(std::move(values)) {
    if (n == 0) throw std::invalid_argument("ResidueSequence: modulus must be positive");
    for (auto& t : terms) t %= n;
}

ResidueSequence ResidueSequence::from_ints(std::uint64_t modulus, const std::vector<std::int64_t>& values) {
    std::vector<Residue> reduced;
    reduced.reserve(values.size());
    for (auto v : values) reduced.push_back(residue_mod(v, modulus));
    return ResidueSequence(modulus, std::move(reduced));
}

Residue project(Residue x, std::uint64_t n, std::uint64_t m) {
    if (m == 0 || n % m != 0) throw std::invalid_argument("project: m must divide n");
    return x % m;
}

ResidueSequence project(const ResidueSequence& s, std::uint64_t m) {
    if (m == 0 || s.n % m != 0) throw std::invalid_argument("project: m must divide n");
    std::vector<Residue> out;
    out.reserve(s.terms.size());
    for (auto x : s.terms) out.push_back(x % m);
    return ResidueSequence(m, std::move(out));
}

ResidueSequence shift(const ResidueSequence& s, Residue a) {
    std::vector<Residue> out;
    out.reserve(s.terms.size());
    a %= s.n;
    for (auto x : s.terms) out.push_back((x + s.n - a) % s.n);
    return ResidueSequence(s.n, std::move(out));
}

WeightSetSpec WeightSetSpec::unit_kth_powers(std::uint64_t k) {
    if (k < 2) throw std::invalid_argument("unit_kth_powers: k must be >= 2");
    WeightSetSpec s;
    s.variant = WeightVariant::UnitKthPowers;
    s.k = k;
    return s;
}

WeightSetSpec WeightSetSpec::odd() {
    WeightSetSpec s;
    s.variant = WeightVariant::Odd;
    return s;
}

WeightSetSpec WeightSetSpec::even() {
    WeightSetSpec s;
    s.variant = WeightVariant::Even;
    return s;
}

WeightSetSpec WeightSetSpec::interval(std::uint64_t r) {
    if (r < 1) throw std::invalid_argument("interval: r must be >= 1");
    WeightSetSpec s;
    s.variant = WeightVariant::Interval;
    s.r = r;
    return s;
}

WeightSetSpec WeightSetSpec::singleton(std::uint64_t m) {
    WeightSetSpec s;
    s.variant = WeightVariant::Singleton;
    s.m = m;
    return s;
}

WeightSetSpec WeightSetSpec::one() {
    WeightSetSpec s;
    s.variant = WeightVariant::One;
    return s;
}

WeightSetSpec WeightSetSpec::explicit_set(std::vector<std::int64_t> elements) {
    WeightSetSpec s;
    s.variant = WeightVariant::Explicit;
    s.elements = std::move(elements);
    return s;
}

std::string WeightSetSpec::to_string() const {
    std::ostringstream os;
    switch (variant) {
        case WeightVariant::Units: return "units";
        case WeightVariant::UnitKthPowers:
            os << "units^k:" << k;
            return os.str();
        case WeightVariant::Odd: return "odd";
        case WeightVariant::Even: return "even";
        case WeightVariant::Interval:
            os << "interval:" << r;
            return os.str();
        case WeightVariant::Singleton:
            os << "singleton:" << m;
            return os.str();
        case WeightVariant::One: return "one";
        case WeightVariant::Explicit: {
            auto sorted = elements;
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            os << "explicit:";
            for (std::size_t i = 0; i < sorted.size(); ++i) {
                if (i) os << ',';
                os << sorted[i];
            }
            return os.str();
        }
    }
    throw std::logic_error("WeightSetSpec::to_string: bad variant");
}

namespace {

std::uint64_t parse_u64(const std::string& text) {
    std::size_t pos = 0;
    if (text.empty()) throw std::invalid_argument("weight spec: missing number");
    unsigned long long v = std::stoull(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("weight spec: bad number '" + text + "'");
    return v;
}

}  // namespace

WeightSetSpec WeightSetSpec::parse(const std::string& text) {
    if (text == "units") return units();
    if (text == "odd") return odd();
    if (text == "even") return even();
    if (text == "one") return one();
    auto starts_with = [&](const char* prefix) { return text.rfind(prefix, 0) == 0; };
    if (starts_with("units^k:")) return unit_kth_powers(parse_u64(text.substr(8)));
    if (starts_with("interval:")) return interval(parse_u64(text.substr(9)));
    if (starts_with("singleton:")) return singleton(parse_u64(text.substr(10)));
    if (starts_with("explicit:")) {
        std::vector<std::int64_t> elems;
        std::stringstream ss(text.substr(9));
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) throw std::invalid_argument("weight spec: empty element in explicit list");
            std::size_t pos = 0;
            long long v = std::stoll(item, &pos);
            if (pos != item.size()) throw std::invalid_argument("weight spec: bad element '" + item + "'");
            elems.push_back(v);
        }
        if (elems.empty()) throw std::invalid_argument("weight spec: explicit list is empty");
        return explicit_set(std::move(elems));
    }
    throw std::invalid_argument("weight spec: unrecognized '" + text + "'");
}

WeightSet materialize(const WeightSetSpec& spec, const RingSpec& ring) {
    const std::uint64_t n = ring.n;
    std::vector<Residue> values;
    switch (spec.variant) {
        case WeightVariant::Units:
            values = units_of(n);
            break;
        case WeightVariant::UnitKthPowers: {
            if (spec.k < 2) throw std::invalid_argument("materialize: units^k needs k >= 2");
            for (Residue x : units_of(n)) values.push_back(pow_mod(x, spec.k, n));
            break;
        }
        case WeightVariant::Odd:
            for (Residue x = 1; x < n; x += 2) values.push_back(x);
            break;
        case WeightVariant::Even:
            for (Residue x = 2; x < n; x += 2) values.push_back(x);
            break;
        case WeightVariant::Interval:
            if (spec.r < 1 || spec.r >= n) throw std::invalid_argument("materialize: interval needs 1 <= r < n");
            for (Residue x = 1; x <= spec.r; ++x) values.push_back(x);
            break;
        case WeightVariant::Singleton:
            if (spec.m >= n) throw std::invalid_argument("materialize: singleton needs 0 <= m < n");
            values.push_back(spec.m);
            break;
        case WeightVariant::One:
            values.push_back(1 % n);
            break;
        case WeightVariant::Explicit:
            for (auto v : spec.elements) values.push_back(residue_mod(v, n));
            break;
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.empty()) {
        throw std::invalid_argument("materialize: weight set '" + spec.to_string() + "' is empty in Z_" +
                                    std::to_string(n));
    }
    WeightSet ws;
    ws.spec = spec;
    ws.n = n;
    ws.values = std::move(values);
    ws.is_member.assign(n, 0);
    for (auto v : ws.values) ws.is_member[v] = 1;
    return ws;
}

}  // namespace zslab
