#include "zslab/gf2.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>

namespace zslab::gf2 {

void GF2Vector::xor_with(const GF2Vector& other) {
    for (std::size_t w = 0; w < words.size(); ++w) words[w] ^= other.words[w];
}

bool GF2Vector::is_zero() const {
    for (auto w : words)
        if (w) return false;
    return true;
}

std::uint32_t GF2Vector::weight() const {
    std::uint32_t total = 0;
    for (auto w : words) total += static_cast<std::uint32_t>(std::popcount(w));
    return total;
}

bool operator<(const GF2Vector& a, const GF2Vector& b) {
    return a.words < b.words;
}

GF2Matrix GF2Matrix::from_strings(const std::vector<std::string>& bits) {
    GF2Matrix p(static_cast<std::uint32_t>(bits.size()),
                bits.empty() ? 0 : static_cast<std::uint32_t>(bits.front().size()));
    for (std::uint32_t i = 0; i < p.rows; ++i) {
        if (bits[i].size() != p.cols) throw std::invalid_argument("GF2Matrix: ragged rows");
        for (std::uint32_t j = 0; j < p.cols; ++j) {
            char c = bits[i][j];
            if (c != '0' && c != '1') throw std::invalid_argument("GF2Matrix: rows must be 0/1 strings");
            p.row_data[i].set(j, c == '1');
        }
    }
    return p;
}

GF2Vector xor_of_rows(const GF2Matrix& p, const std::vector<std::size_t>& indices) {
    GF2Vector acc(p.cols);
    for (auto i : indices) {
        if (i < 1 || i > p.rows) throw std::out_of_range("xor_of_rows: index out of range");
        acc.xor_with(p.row(static_cast<std::uint32_t>(i - 1)));
    }
    return acc;
}

GF2Vector xor_of_window(const GF2Matrix& p, const SupportWindow& w) {
    GF2Vector acc(p.cols);
    for (std::size_t i = w.lo; i <= w.hi; ++i) acc.xor_with(p.row(static_cast<std::uint32_t>(i - 1)));
    return acc;
}

namespace {

struct WordsHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (auto w : v) h = (h ^ w) * 0x100000001b3ull;
        return h;
    }
};

bool pow2_at_most(std::uint32_t a, std::uint64_t m) {
    if (a >= 63) return false;
    return (std::uint64_t{1} << a) <= m;
}

}  // namespace

std::optional<SupportWindow> find_zero_xor_window(const GF2Matrix& p) {
    // Prefix XORs p_0..p_m; a window [i, j] has zero XOR iff p_{i-1} == p_j.
    // Keeping the *last* occurrence of each prefix value and scanning j
    // upward yields the smallest end index first, then the smallest length.
    std::unordered_map<std::vector<std::uint64_t>, std::size_t, WordsHash> last_seen;
    GF2Vector prefix(p.cols);
    last_seen[prefix.words] = 0;
    for (std::size_t j = 1; j <= p.rows; ++j) {
        prefix.xor_with(p.row(static_cast<std::uint32_t>(j - 1)));
        auto it = last_seen.find(prefix.words);
        if (it != last_seen.end()) return SupportWindow{it->second + 1, j};
        last_seen[prefix.words] = j;
    }
    return std::nullopt;
}

SupportWindow kernel_window(const GF2Matrix& p) {
    if (!pow2_at_most(p.cols, p.rows)) {
        throw std::invalid_argument("kernel_window: needs m >= 2^a rows");
    }
    auto w = find_zero_xor_window(p);
    if (!w) throw std::logic_error("kernel_window: pigeonhole violated");  // unreachable
    return *w;
}

std::optional<SupportSubset> find_zero_xor_subset(const GF2Matrix& p) {
    // Echelon basis keyed by leading bit; each slot carries the index set
    // that produced it. Rows are inserted in order 1..m and the first row
    // that reduces to zero yields the dependency.
    struct Slot {
        GF2Vector value;
        std::vector<std::size_t> combo;
    };
    std::map<std::uint32_t, Slot, std::greater<>> slots;  // keyed by leading bit, high first
    auto leading_bit = [](const GF2Vector& v) -> std::int64_t {
        for (std::size_t w = v.words.size(); w-- > 0;) {
            if (v.words[w]) return static_cast<std::int64_t>(w * 64 + (63 - std::countl_zero(v.words[w])));
        }
        return -1;
    };
    for (std::size_t i = 1; i <= p.rows; ++i) {
        GF2Vector cur = p.row(static_cast<std::uint32_t>(i - 1));
        std::vector<std::size_t> combo{i};
        std::int64_t lead = leading_bit(cur);
        while (lead >= 0) {
            auto it = slots.find(static_cast<std::uint32_t>(lead));
            if (it == slots.end()) break;
            cur.xor_with(it->second.value);
            // symmetric difference of index sets (an index used twice cancels)
            std::vector<std::size_t> merged;
            std::set_symmetric_difference(combo.begin(), combo.end(), it->second.combo.begin(),
                                          it->second.combo.end(), std::back_inserter(merged));
            combo = std::move(merged);
            lead = leading_bit(cur);
        }
        if (lead < 0) return SupportSubset{std::move(combo)};
        slots.emplace(static_cast<std::uint32_t>(lead), Slot{std::move(cur), std::move(combo)});
    }
    return std::nullopt;
}

SupportSubset kernel_subset(const GF2Matrix& p) {
    auto s = find_zero_xor_subset(p);
    if (!s) throw std::invalid_argument("kernel_subset: rows are linearly independent (no kernel)");
    return *s;
}

namespace {

// Pairs of equal-valued rows, earliest first, from the given index list.
std::vector<std::pair<std::size_t, std::size_t>> equal_value_pairs(const GF2Matrix& p,
                                                                   const std::vector<std::size_t>& order) {
    std::unordered_map<std::vector<std::uint64_t>, std::size_t, WordsHash> pending;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (auto i : order) {
        const auto& key = p.row(static_cast<std::uint32_t>(i - 1)).words;
        auto it = pending.find(key);
        if (it == pending.end()) {
            pending[key] = i;
        } else {
            pairs.emplace_back(it->second, i);
            pending.erase(it);
        }
    }
    return pairs;
}

std::optional<SupportSubset> exhaustive_fixed_weight(const GF2Matrix& p, std::uint32_t k, std::uint32_t m) {
    // First combination in lexicographic index order whose rows XOR to zero.
    std::vector<std::size_t> combo(m);
    for (std::uint32_t i = 0; i < m; ++i) combo[i] = i + 1;
    while (true) {
        if (xor_of_rows(p, combo).is_zero()) return SupportSubset{combo};
        std::int64_t pos = m - 1;
        while (pos >= 0 && combo[static_cast<std::size_t>(pos)] == k - (m - 1 - pos)) --pos;
        if (pos < 0) return std::nullopt;
        ++combo[static_cast<std::size_t>(pos)];
        for (std::size_t j = static_cast<std::size_t>(pos) + 1; j < m; ++j) combo[j] = combo[j - 1] + 1;
    }
}

}  // namespace

SupportSubset kernel_fixed_weight(const GF2Matrix& p, std::uint32_t m) {
    const std::uint32_t a = p.cols;
    if (m == 0 || (m & 1) != 0) throw std::invalid_argument("kernel_fixed_weight: m must be positive and even");
    if (!pow2_at_most(a, m)) throw std::invalid_argument("kernel_fixed_weight: needs m >= 2^a");
    if (p.rows < m + a) throw std::invalid_argument("kernel_fixed_weight: needs at least m+a rows");
    const std::uint32_t k = m + a;  // solve on the first m+a rows

    // Row values and multiplicities.
    std::map<std::vector<std::uint64_t>, std::uint32_t> mult;
    for (std::uint32_t i = 0; i < k; ++i) ++mult[p.row(i).words];

    auto result_or_fallback = [&](std::vector<std::size_t> picked) -> SupportSubset {
        std::sort(picked.begin(), picked.end());
        if (picked.size() == m && xor_of_rows(p, picked).is_zero()) return SupportSubset{std::move(picked)};
        if (k <= 24) {
            if (auto r = exhaustive_fixed_weight(p, k, m)) return *r;
        }
        throw std::logic_error("kernel_fixed_weight: construction failed");
    };

    // Smallest value of odd multiplicity, if any.
    std::optional<std::vector<std::uint64_t>> odd_value;
    for (const auto& [value, count] : mult) {
        if (count & 1) {
            odd_value = value;
            break;
        }
    }

    std::vector<std::size_t> all_indices(k);
    for (std::uint32_t i = 0; i < k; ++i) all_indices[i] = i + 1;

    if (!odd_value) {
        // Every value repeats evenly: m/2 equal pairs XOR to zero.
        auto pairs = equal_value_pairs(p, all_indices);
        std::vector<std::size_t> picked;
        for (std::uint32_t t = 0; t < m / 2; ++t) {
            picked.push_back(pairs[t].first);
            picked.push_back(pairs[t].second);
        }
        return result_or_fallback(std::move(picked));
    }

    // Shift every row by the odd value; selections of even size are
    // shift-invariant, and zero now has odd multiplicity.
    GF2Matrix shifted = p;
    shifted.rows = k;
    shifted.row_data.resize(k);
    GF2Vector v(a);
    v.words = *odd_value;
    for (std::uint32_t i = 0; i < k; ++i) shifted.row_data[i].xor_with(v);

    // Distinct part: the first index of each odd-multiplicity value.
    std::map<std::vector<std::uint64_t>, std::uint32_t> shifted_mult;
    for (std::uint32_t i = 0; i < k; ++i) ++shifted_mult[shifted.row(i).words];
    std::vector<std::size_t> distinct_part, rest;
    {
        std::map<std::vector<std::uint64_t>, bool> taken;
        for (std::uint32_t i = 0; i < k; ++i) {
            const auto& key = shifted.row(i).words;
            if ((shifted_mult[key] & 1) && !taken[key]) {
                taken[key] = true;
                distinct_part.push_back(i + 1);
            } else {
                rest.push_back(i + 1);
            }
        }
    }
    auto rest_pairs = equal_value_pairs(shifted, rest);

    auto pad_with_pairs = [&](std::vector<std::size_t> core) -> SupportSubset {
        std::uint32_t need = (m - static_cast<std::uint32_t>(core.size())) / 2;
        for (std::uint32_t t = 0; t < need; ++t) {
            core.push_back(rest_pairs[t].first);
            core.push_back(rest_pairs[t].second);
        }
        return result_or_fallback(std::move(core));
    };

    if (distinct_part.size() <= a) return pad_with_pairs({});

    // Maximal zero-XOR part of the distinct rows: start from the zero row,
    // then repeatedly extract dependencies until the remainder is independent.
    // This leaves at most a rows behind, which is all the padding step needs.
    std::vector<std::size_t> part;              // accumulated zero-XOR selection
    std::vector<std::size_t> remaining;
    for (auto i : distinct_part) {
        if (shifted.row(static_cast<std::uint32_t>(i - 1)).is_zero())
            part.push_back(i);  // the zero row, present with odd multiplicity
        else
            remaining.push_back(i);
    }
    while (true) {
        GF2Matrix sub(static_cast<std::uint32_t>(remaining.size()), a);
        for (std::size_t t = 0; t < remaining.size(); ++t)
            sub.row_data[t] = shifted.row(static_cast<std::uint32_t>(remaining[t] - 1));
        auto dep = find_zero_xor_subset(sub);
        if (!dep) break;
        std::vector<std::size_t> extracted;
        for (auto local : dep->indices) extracted.push_back(remaining[local - 1]);
        std::vector<std::size_t> next;
        std::set_difference(remaining.begin(), remaining.end(), extracted.begin(), extracted.end(),
                            std::back_inserter(next));
        remaining = std::move(next);
        part.insert(part.end(), extracted.begin(), extracted.end());
    }
    if (part.size() % 2 == 1) {
        // Drop the zero row to make the part even; its XOR is unchanged.
        auto zero_it = std::find_if(part.begin(), part.end(), [&](std::size_t i) {
            return shifted.row(static_cast<std::uint32_t>(i - 1)).is_zero();
        });
        part.erase(zero_it);
    }
    return pad_with_pairs(std::move(part));
}

bool has_zero_xor_subset_of_size(const GF2Matrix& p, std::uint32_t m) {
    if (m == 0 || m > p.rows) return false;
    std::vector<std::size_t> combo(m);
    for (std::uint32_t i = 0; i < m; ++i) combo[i] = i + 1;
    while (true) {
        if (xor_of_rows(p, combo).is_zero()) return true;
        std::int64_t pos = m - 1;
        while (pos >= 0 && combo[static_cast<std::size_t>(pos)] == p.rows - (m - 1 - pos)) --pos;
        if (pos < 0) return false;
        ++combo[static_cast<std::size_t>(pos)];
        for (std::size_t j = static_cast<std::size_t>(pos) + 1; j < m; ++j) combo[j] = combo[j - 1] + 1;
    }
}

GF2Vector subspace_weight_m_vector(const std::vector<GF2Vector>& basis) {
    if (basis.empty()) throw std::invalid_argument("subspace_weight_m_vector: empty basis");
    const std::uint32_t m = static_cast<std::uint32_t>(basis.size());
    const std::uint32_t len = basis.front().length;
    if (len < m) throw std::invalid_argument("subspace_weight_m_vector: dimension exceeds ambient length");
    const std::uint32_t a = len - m;
    for (const auto& b : basis)
        if (b.length != len) throw std::invalid_argument("subspace_weight_m_vector: ragged basis");

    // Row reduce the basis; confirm independence and record pivot columns.
    std::vector<GF2Vector> rref(basis.begin(), basis.end());
    std::vector<std::uint32_t> pivot_cols;
    std::uint32_t rank = 0;
    for (std::uint32_t col = 0; col < len && rank < m; ++col) {
        std::uint32_t sel = rank;
        while (sel < m && !rref[sel].get(col)) ++sel;
        if (sel == m) continue;
        std::swap(rref[rank], rref[sel]);
        for (std::uint32_t i = 0; i < m; ++i) {
            if (i != rank && rref[i].get(col)) rref[i].xor_with(rref[rank]);
        }
        pivot_cols.push_back(col);
        ++rank;
    }
    if (rank < m) throw std::invalid_argument("subspace_weight_m_vector: basis is dependent");

    // Orthogonal-complement basis (one vector per non-pivot column), laid out
    // as the parity-check matrix A of the subspace.
    std::vector<bool> is_pivot(len, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    std::vector<GF2Vector> check_rows;
    for (std::uint32_t col = 0; col < len; ++col) {
        if (is_pivot[col]) continue;
        GF2Vector w(len);
        w.set(col, true);
        for (std::uint32_t i = 0; i < m; ++i)
            if (rref[i].get(col)) w.set(pivot_cols[i], true);
        check_rows.push_back(std::move(w));
    }
    // (W^perp has dimension a = len - m.)

    // Columns of A become the rows of P; a zero-XOR selection of exactly m
    // columns is the indicator of a weight-m vector in ker A = W.
    GF2Matrix p(len, a);
    for (std::uint32_t j = 0; j < len; ++j)
        for (std::uint32_t i = 0; i < a; ++i) p.row_data[j].set(i, check_rows[i].get(j));
    auto sel = kernel_fixed_weight(p, m);
    GF2Vector v(len);
    for (auto i : sel.indices) v.set(static_cast<std::uint32_t>(i - 1), true);
    return v;
}

LBarResult check_lbar(std::uint32_t n, std::uint32_t m) {
    LBarResult res;
    res.n = n;
    res.m = m;
    res.in_regime = (m >= 1) && (m % 2 == 0) && (m <= n) && pow2_at_most(n - m, m);
    if (!res.in_regime) return res;  // bound not guaranteed, no witness claimed
    res.value = m - 1;
    for (std::uint32_t i = 0; i + 1 < m; ++i) {
        GF2Vector e(n);
        e.set(i, true);
        res.lower_witness_basis.push_back(std::move(e));
    }
    return res;
}

namespace {

// Enumerates all dim-dimensional subspaces of F_2^n as RREF matrices and
// applies fn to each generator list. Stops and returns false if fn does.
bool for_each_subspace(std::uint32_t n, std::uint32_t dim,
                       const std::function<bool(const std::vector<std::uint32_t>&)>& fn) {
    if (n > 14) throw std::invalid_argument("subspace enumeration limited to n <= 14");
    if (dim > n) return true;
    if (dim == 0) {
        return fn(std::vector<std::uint32_t>{});
    }
    // Choose pivot columns c_1 < ... < c_dim, then fill the free cells: a
    // free cell sits right of its pivot and outside every pivot column.
    std::vector<std::uint32_t> pivots(dim);
    for (std::uint32_t i = 0; i < dim; ++i) pivots[i] = i;
    while (true) {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> free_cells;  // (row, col)
        std::vector<bool> is_pivot(n, false);
        for (auto c : pivots) is_pivot[c] = true;
        for (std::uint32_t i = 0; i < dim; ++i)
            for (std::uint32_t c = pivots[i] + 1; c < n; ++c)
                if (!is_pivot[c]) free_cells.emplace_back(i, c);
        const std::uint64_t combos = std::uint64_t{1} << free_cells.size();
        for (std::uint64_t mask = 0; mask < combos; ++mask) {
            std::vector<std::uint32_t> rows(dim, 0);
            for (std::uint32_t i = 0; i < dim; ++i) rows[i] = std::uint32_t{1} << pivots[i];
            for (std::size_t t = 0; t < free_cells.size(); ++t)
                if ((mask >> t) & 1) rows[free_cells[t].first] |= std::uint32_t{1} << free_cells[t].second;
            if (!fn(rows)) return false;
        }
        // next pivot combination
        std::int64_t pos = dim - 1;
        while (pos >= 0 && pivots[static_cast<std::size_t>(pos)] == n - (dim - static_cast<std::uint32_t>(pos)))
            --pos;
        if (pos < 0) break;
        ++pivots[static_cast<std::size_t>(pos)];
        for (std::size_t j = static_cast<std::size_t>(pos) + 1; j < dim; ++j) pivots[j] = pivots[j - 1] + 1;
    }
    return true;
}

bool span_has_weight(const std::vector<std::uint32_t>& rows, std::uint32_t m) {
    const std::uint32_t dim = static_cast<std::uint32_t>(rows.size());
    for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << dim); ++sel) {
        std::uint32_t v = 0;
        for (std::uint32_t i = 0; i < dim; ++i)
            if ((sel >> i) & 1) v ^= rows[i];
        if (static_cast<std::uint32_t>(std::popcount(v)) == m) return true;
    }
    return false;
}

}  // namespace

bool every_subspace_has_weight_m_vector(std::uint32_t n, std::uint32_t dim, std::uint32_t m) {
    return for_each_subspace(n, dim, [&](const std::vector<std::uint32_t>& rows) {
        return span_has_weight(rows, m);
    });
}

std::uint32_t exhaustive_lbar_value(std::uint32_t n, std::uint32_t m) {
    for (std::uint32_t dim = n;; --dim) {
        bool found_avoiding = !for_each_subspace(n, dim, [&](const std::vector<std::uint32_t>& rows) {
            return span_has_weight(rows, m);  // keep going while weight-m present
        });
        if (found_avoiding) return dim;
        if (dim == 0) break;
    }
    throw std::logic_error("exhaustive_lbar_value: the zero subspace avoids every positive weight");
}

GF2Matrix read_matrix_text(std::istream& in) {
    std::uint32_t m = 0, a = 0;
    if (!(in >> m >> a)) throw std::invalid_argument("matrix text: expected header 'm a'");
    GF2Matrix p(m, a);
    for (std::uint32_t i = 0; i < m; ++i) {
        std::string line;
        if (!(in >> line) || line.size() != a)
            throw std::invalid_argument("matrix text: expected " + std::to_string(a) + " bits on row " +
                                        std::to_string(i + 1));
        for (std::uint32_t j = 0; j < a; ++j) {
            if (line[j] != '0' && line[j] != '1') throw std::invalid_argument("matrix text: rows must be 0/1");
            p.row_data[i].set(j, line[j] == '1');
        }
    }
    return p;
}

void write_matrix_text(std::ostream& out, const GF2Matrix& p) {
    out << p.rows << ' ' << p.cols << '\n';
    for (std::uint32_t i = 0; i < p.rows; ++i) {
        for (std::uint32_t j = 0; j < p.cols; ++j) out << (p.row(i).get(j) ? '1' : '0');
        out << '\n';
    }
}

}  // namespace zslab::gf2
