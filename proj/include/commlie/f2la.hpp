#pragma once

// Dense linear algebra over the two-element field.
//
// Vectors and matrix rows are packed 64 entries per word; addition is XOR.
// Every operation keeps the padding bits past the last column at zero, so rows
// can be compared and combined word-wise.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace commlie {

inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_(words_for(size), 0) {}

    static BitVector unit(std::size_t size, std::size_t index);
    /// Parses a string of '0'/'1' characters; whitespace is ignored.
    static BitVector from_string(std::string_view bits);

    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i) { words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits); }

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

    [[nodiscard]] bool any() const;
    [[nodiscard]] bool none() const { return !any(); }
    [[nodiscard]] std::size_t count() const;
    /// Inner product (parity of the common support).
    [[nodiscard]] bool dot(const BitVector& other) const;
    /// Indices of the nonzero entries in increasing order.
    [[nodiscard]] std::vector<std::size_t> support() const;

    [[nodiscard]] std::span<const std::uint64_t> words() const { return words_; }
    [[nodiscard]] std::span<std::uint64_t> words() { return words_; }

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Row-major packed matrix. A matrix with `rows` x `cols` acts on column vectors of length `cols`.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_(words_for(cols)), bits_(rows * stride_, 0) {}

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(std::span<const BitVector> rows, std::size_t cols);
    /// Each string is one row of '0'/'1' characters (whitespace ignored).
    static BitMatrix from_strings(std::initializer_list<std::string_view> rows);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] std::size_t stride() const noexcept { return stride_; }

    [[nodiscard]] bool get(std::size_t r, std::size_t c) const
    {
        return (bits_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
    }
    void set(std::size_t r, std::size_t c, bool value = true);
    void flip(std::size_t r, std::size_t c) { bits_[r * stride_ + c / kWordBits] ^= std::uint64_t{1} << (c % kWordBits); }

    [[nodiscard]] std::span<std::uint64_t> row(std::size_t r) { return {bits_.data() + r * stride_, stride_}; }
    [[nodiscard]] std::span<const std::uint64_t> row(std::size_t r) const { return {bits_.data() + r * stride_, stride_}; }
    [[nodiscard]] BitVector row_vector(std::size_t r) const;
    void set_row(std::size_t r, const BitVector& v);
    void xor_row(std::size_t dst, std::size_t src);
    void xor_into_row(std::size_t dst, std::span<const std::uint64_t> words);
    void swap_rows(std::size_t a, std::size_t b);
    [[nodiscard]] bool row_is_zero(std::size_t r) const;
    void append_row(const BitVector& v);
    /// Drops all rows with index >= n.
    void truncate_rows(std::size_t n);

    [[nodiscard]] BitMatrix transpose() const;
    /// Matrix-vector product `this * x`.
    [[nodiscard]] BitVector apply(const BitVector& x) const;
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] std::size_t count_ones() const;

    /// Kronecker product with the m x m identity, with index (i, a) -> i*m + a on both sides.
    [[nodiscard]] BitMatrix kron_identity(std::size_t m) const;

    static BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom);
    static BitMatrix hstack(const BitMatrix& left, const BitMatrix& right);

    friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
    friend BitMatrix operator+(const BitMatrix& a, const BitMatrix& b);
    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

    [[nodiscard]] std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> bits_;
};

struct RrefResult {
    BitMatrix reduced;                // same shape as the input, zero rows last
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RrefResult rref_rank(BitMatrix m);
/// Rank only; forward elimination, cheaper than a full reduction.
std::size_t rank(BitMatrix m);

/// A linear subspace of F_2^n held as its reduced row-echelon basis.
/// Two equal subspaces have identical bases, so equality is a word comparison.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);
    /// Row space of `rows`.
    static Subspace span(BitMatrix rows);
    static Subspace span(std::span<const BitVector> vectors, std::size_t ambient_dim);
    /// Span of the unit vectors with the given indices.
    static Subspace coordinate(std::span<const std::size_t> indices, std::size_t ambient_dim);

    [[nodiscard]] std::size_t ambient_dim() const noexcept { return ambient_; }
    [[nodiscard]] std::size_t dim() const noexcept { return basis_.rows(); }
    [[nodiscard]] const BitMatrix& basis() const noexcept { return basis_; }
    [[nodiscard]] const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    [[nodiscard]] BitVector basis_vector(std::size_t i) const { return basis_.row_vector(i); }

    /// Clears the pivot coordinates of `v` using basis rows. The result is zero iff v lies in the subspace.
    [[nodiscard]] BitVector reduce(BitVector v) const;
    [[nodiscard]] bool contains(const BitVector& v) const;
    [[nodiscard]] bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    Subspace(std::size_t ambient, BitMatrix basis, std::vector<std::size_t> pivots)
        : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    std::size_t ambient_ = 0;
    BitMatrix basis_;
    std::vector<std::size_t> pivots_;
};

/// {x : m x = 0}
Subspace kernel_basis(const BitMatrix& m);
/// Column space of m.
Subspace image(const BitMatrix& m);
/// Image of the subspace s under m.
Subspace image_of(const BitMatrix& m, const Subspace& s);
/// Functionals (as vectors, via the standard inner product) vanishing on s.
Subspace annihilator(const Subspace& s);

enum class CombineMode { Sum, Intersect };
Subspace subspace_combine(const Subspace& a, const Subspace& b, CombineMode mode);
inline Subspace sum(const Subspace& a, const Subspace& b) { return subspace_combine(a, b, CombineMode::Sum); }
inline Subspace intersect(const Subspace& a, const Subspace& b) { return subspace_combine(a, b, CombineMode::Intersect); }

/// {x : m x in s}
Subspace preimage(const BitMatrix& m, const Subspace& s);

/// dim a - dim b; requires b to be contained in a.
std::size_t quotient_dim(const Subspace& a, const Subspace& b);

/// Canonical coordinates on a quotient upper/lower.
///
/// Coset representatives are the reduced row-echelon basis of the upper basis
/// reduced modulo the lower subspace; the coordinate of a coset along
/// representative k is the entry at that representative's pivot column.
class QuotientCoordinates {
public:
    QuotientCoordinates() = default;
    QuotientCoordinates(Subspace upper, Subspace lower);

    [[nodiscard]] std::size_t dim() const noexcept { return reps_.rows(); }
    [[nodiscard]] const Subspace& upper() const noexcept { return upper_; }
    [[nodiscard]] const Subspace& lower() const noexcept { return lower_; }
    [[nodiscard]] const BitMatrix& representatives() const noexcept { return reps_; }

    /// Coordinates of the coset of v; v must lie in the upper subspace.
    [[nodiscard]] BitVector coords(const BitVector& v) const;
    [[nodiscard]] BitVector lift(const BitVector& coords) const;

private:
    Subspace upper_;
    Subspace lower_;
    BitMatrix reps_;
    std::vector<std::size_t> rep_pivots_;
};

/// Matrix of the map dom_a/dom_b -> cod_c/cod_d induced by m, in the canonical coset coordinates.
BitMatrix induced_map(const BitMatrix& m, const Subspace& dom_a, const Subspace& dom_b, const Subspace& cod_c,
                      const Subspace& cod_d);
BitMatrix induced_map(const BitMatrix& m, const QuotientCoordinates& dom, const QuotientCoordinates& cod);

BitMatrix inverse(const BitMatrix& m);

/// Repeated solves of A x = b for a fixed A.
class LinearSolver {
public:
    explicit LinearSolver(const BitMatrix& a);

    [[nodiscard]] std::size_t rank() const noexcept { return reduced_.rows(); }
    /// Some x with A x = b, or nothing when b is outside the column space.
    [[nodiscard]] std::optional<BitVector> solve(const BitVector& b) const;

private:
    std::size_t unknowns_ = 0;
    BitMatrix reduced_;       // independent combinations of the columns of A, echelon form
    BitMatrix combinations_;  // row k records which columns of A make up reduced_ row k
    std::vector<std::size_t> pivots_;
};

}  // namespace commlie
