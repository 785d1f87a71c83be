// gf2.hpp — bit-packed linear algebra over F_2.
//
// The three kernel solvers return row selections with zero XOR:
//   kernel_window       a nonempty run of consecutive rows   (needs m >= 2^a)
//   kernel_subset       a nonempty subset of rows            (needs m >= a+1)
//   kernel_fixed_weight a subset of exactly m rows, m even   (needs m >= 2^a,
//                                                             row count >= m+a)
// The bounds are sharp: a handcrafted instance one row shorter defeats each
// solver (see the sharpness tests).
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <vector>

namespace zslab::gf2 {

/// Fixed-length bit vector packed into 64-bit words.
struct GF2Vector {
    std::uint32_t length = 0;
    std::vector<std::uint64_t> words;

    GF2Vector() = default;
    explicit GF2Vector(std::uint32_t len) : length(len), words((len + 63) / 64, 0) {}

    bool get(std::uint32_t i) const { return (words[i >> 6] >> (i & 63)) & 1; }
    void set(std::uint32_t i, bool v) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            words[i >> 6] |= mask;
        else
            words[i >> 6] &= ~mask;
    }
    void xor_with(const GF2Vector& other);
    bool is_zero() const;
    std::uint32_t weight() const;

    friend bool operator==(const GF2Vector&, const GF2Vector&) = default;
    friend bool operator<(const GF2Vector& a, const GF2Vector& b);
};

/// Row-major m x a bit matrix; row i is the i-th position's constraint vector.
struct GF2Matrix {
    std::uint32_t rows = 0;
    std::uint32_t cols = 0;
    std::vector<GF2Vector> row_data;

    GF2Matrix() = default;
    GF2Matrix(std::uint32_t m, std::uint32_t a) : rows(m), cols(a), row_data(m, GF2Vector(a)) {}

    GF2Vector& row(std::uint32_t i) { return row_data[i]; }
    const GF2Vector& row(std::uint32_t i) const { return row_data[i]; }

    /// Builds from strings of '0'/'1', one per row.
    static GF2Matrix from_strings(const std::vector<std::string>& bits);
};

/// 1-based inclusive run of consecutive row indices.
struct SupportWindow {
    std::size_t lo = 0;
    std::size_t hi = 0;

    friend bool operator==(const SupportWindow&, const SupportWindow&) = default;
};

/// 1-based ascending row indices.
struct SupportSubset {
    std::vector<std::size_t> indices;

    friend bool operator==(const SupportSubset&, const SupportSubset&) = default;
};

/// XOR of the selected rows (1-based indices); the verification primitive
/// every solver result is checked against.
GF2Vector xor_of_rows(const GF2Matrix& p, const std::vector<std::size_t>& indices);
GF2Vector xor_of_window(const GF2Matrix& p, const SupportWindow& w);

/// Complete scan for a zero-XOR window of rows, any matrix shape.
/// Ties: smallest end index, then smallest length. nullopt when none exists.
std::optional<SupportWindow> find_zero_xor_window(const GF2Matrix& p);

/// Zero-XOR window, guaranteed by the prefix-XOR pigeonhole once m >= 2^a.
/// Throws std::invalid_argument when m < 2^a (existence is not guaranteed:
/// for every a there is an instance of length 2^a - 1 with none).
SupportWindow kernel_window(const GF2Matrix& p);

/// Complete search for a nonzero left-kernel vector: Gaussian elimination
/// with row-combination tracking, rows inserted in order; returns the first
/// dependency found. nullopt when the rows are linearly independent.
std::optional<SupportSubset> find_zero_xor_subset(const GF2Matrix& p);

/// Nonempty zero-XOR subset; guaranteed once m >= a+1. Throws
/// std::invalid_argument if the rows are independent (only possible m <= a).
SupportSubset kernel_subset(const GF2Matrix& p);

/// Zero-XOR subset of exactly m rows. Requires m even, m >= 2^a and at
/// least m+a rows (extra rows beyond the first m+a are ignored).
///
/// Constructive path: shift rows so a value of odd multiplicity becomes
/// zero (a size-m selection is shift-invariant since m is even), split off
/// the distinct part, grow a maximal zero-XOR part by repeated elimination,
/// fix parity by dropping the zero row, and pad with equal-value pairs.
/// A bounded exhaustive fallback covers m+a <= 24.
SupportSubset kernel_fixed_weight(const GF2Matrix& p, std::uint32_t m);

/// Exhaustive existence check used as the oracle for kernel_fixed_weight.
bool has_zero_xor_subset_of_size(const GF2Matrix& p, std::uint32_t m);

/// A vector of Hamming weight exactly m in the span of the given basis of
/// an m-dimensional subspace of F_2^{m+a}; requires m even, m >= 2^a.
/// Works through the a x (m+a) parity-check matrix of the subspace and
/// kernel_fixed_weight on its columns. Rejects dependent input bases.
GF2Vector subspace_weight_m_vector(const std::vector<GF2Vector>& basis);

/// l(n, m-bar): the largest dimension of a subspace of F_2^n containing no
/// vector of weight m. In the regime {m even, m <= n, m >= 2^(n-m)} the
/// value is m-1, witnessed below by span{e_1,...,e_{m-1}}.
///
/// The source statement reads "m > n", which would make a weight-m vector
/// impossible; the regime implemented here is the m <= n correction.
struct LBarResult {
    std::uint32_t n = 0;
    std::uint32_t m = 0;
    bool in_regime = false;
    std::optional<std::uint32_t> value;            // m-1 when in regime
    std::vector<GF2Vector> lower_witness_basis;    // e_1..e_{m-1}, no weight-m vector
};

LBarResult check_lbar(std::uint32_t n, std::uint32_t m);

/// True l(n, m-bar) by enumerating every subspace of F_2^n in row-reduced
/// echelon form. Feasible for small n only (guarded at n <= 14).
std::uint32_t exhaustive_lbar_value(std::uint32_t n, std::uint32_t m);

/// True iff every subspace of F_2^n of the given dimension contains a
/// vector of weight m. Same exhaustive enumeration and guard.
bool every_subspace_has_weight_m_vector(std::uint32_t n, std::uint32_t dim, std::uint32_t m);

// ---- text fixture format ----------------------------------------------------
// First line "m a", then m lines of a characters in {0,1}.

GF2Matrix read_matrix_text(std::istream& in);
void write_matrix_text(std::ostream& out, const GF2Matrix& p);

}  // namespace zslab::gf2
