#include "commlie/f2la.hpp"

#include <algorithm>
#include <bit>

#include "commlie/error.hpp"

namespace commlie {

namespace {

void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, std::size_t from = 0)
{
    for (std::size_t w = from; w < dst.size(); ++w) dst[w] ^= src[w];
}

}  // namespace

// ---------------------------------------------------------------------------
// BitVector

BitVector BitVector::unit(std::size_t size, std::size_t index)
{
    BitVector v(size);
    v.set(index);
    return v;
}

BitVector BitVector::from_string(std::string_view bits)
{
    std::vector<bool> values;
    for (char ch : bits) {
        if (ch == '0' || ch == '1')
            values.push_back(ch == '1');
        else if (ch != ' ' && ch != '\t')
            fail(ErrorKind::Parse, "bit string contains '" + std::string(1, ch) + "'");
    }
    BitVector v(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i]) v.set(i);
    return v;
}

void BitVector::set(std::size_t i, bool value)
{
    const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (value)
        words_[i / kWordBits] |= mask;
    else
        words_[i / kWordBits] &= ~mask;
}

BitVector& BitVector::operator^=(const BitVector& other)
{
    if (other.size_ != size_) fail(ErrorKind::Dimension, "vector sizes differ in xor");
    xor_words(words_, other.words_);
    return *this;
}

bool BitVector::any() const
{
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVector::count() const
{
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool BitVector::dot(const BitVector& other) const
{
    if (other.size_ != size_) fail(ErrorKind::Dimension, "vector sizes differ in dot product");
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return (std::popcount(acc) & 1) != 0;
}

std::vector<std::size_t> BitVector::support() const
{
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t word = words_[w];
        while (word != 0) {
            out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(word)));
            word &= word - 1;
        }
    }
    return out;
}

std::string BitVector::to_string() const
{
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

// ---------------------------------------------------------------------------
// BitMatrix

BitMatrix BitMatrix::identity(std::size_t n)
{
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_rows(std::span<const BitVector> rows, std::size_t cols)
{
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows)
{
    std::vector<BitVector> vs;
    for (std::string_view s : rows) vs.push_back(BitVector::from_string(s));
    const std::size_t cols = vs.empty() ? 0 : vs.front().size();
    for (const auto& v : vs)
        if (v.size() != cols) fail(ErrorKind::Dimension, "ragged rows in matrix literal");
    return from_rows(vs, cols);
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value)
{
    const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
    std::uint64_t& word = bits_[r * stride_ + c / kWordBits];
    word = value ? (word | mask) : (word & ~mask);
}

BitVector BitMatrix::row_vector(std::size_t r) const
{
    BitVector v(cols_);
    std::copy_n(bits_.begin() + static_cast<std::ptrdiff_t>(r * stride_), stride_, v.words().begin());
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v)
{
    if (v.size() != cols_) fail(ErrorKind::Dimension, "row length does not match matrix width");
    std::copy(v.words().begin(), v.words().end(), bits_.begin() + static_cast<std::ptrdiff_t>(r * stride_));
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src)
{
    std::uint64_t* d = bits_.data() + dst * stride_;
    const std::uint64_t* s = bits_.data() + src * stride_;
    for (std::size_t w = 0; w < stride_; ++w) d[w] ^= s[w];
}

void BitMatrix::xor_into_row(std::size_t dst, std::span<const std::uint64_t> words)
{
    xor_words(row(dst), words);
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b) return;
    std::swap_ranges(bits_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                     bits_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                     bits_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
}

bool BitMatrix::row_is_zero(std::size_t r) const
{
    auto words = row(r);
    return std::all_of(words.begin(), words.end(), [](std::uint64_t w) { return w == 0; });
}

void BitMatrix::append_row(const BitVector& v)
{
    if (v.size() != cols_) fail(ErrorKind::Dimension, "row length does not match matrix width");
    bits_.insert(bits_.end(), v.words().begin(), v.words().end());
    ++rows_;
}

void BitMatrix::truncate_rows(std::size_t n)
{
    if (n >= rows_) return;
    rows_ = n;
    bits_.resize(rows_ * stride_);
}

BitMatrix BitMatrix::transpose() const
{
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto words = row(r);
        for (std::size_t w = 0; w < stride_; ++w) {
            std::uint64_t word = words[w];
            while (word != 0) {
                const std::size_t c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(word));
                t.flip(c, r);
                word &= word - 1;
            }
        }
    }
    return t;
}

BitVector BitMatrix::apply(const BitVector& x) const
{
    if (x.size() != cols_) fail(ErrorKind::Dimension, "vector length does not match matrix width");
    BitVector y(rows_);
    auto xs = x.words();
    for (std::size_t r = 0; r < rows_; ++r) {
        const std::uint64_t* rw = bits_.data() + r * stride_;
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < stride_; ++w) acc ^= rw[w] & xs[w];
        if (std::popcount(acc) & 1) y.flip(r);
    }
    return y;
}

bool BitMatrix::is_zero() const
{
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitMatrix::count_ones() const
{
    std::size_t total = 0;
    for (std::uint64_t w : bits_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

BitMatrix BitMatrix::kron_identity(std::size_t m) const
{
    BitMatrix out(rows_ * m, cols_ * m);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c : row_vector(r).support())
            for (std::size_t a = 0; a < m; ++a) out.set(r * m + a, c * m + a);
    return out;
}

BitMatrix BitMatrix::vstack(const BitMatrix& top, const BitMatrix& bottom)
{
    if (top.cols_ != bottom.cols_) fail(ErrorKind::Dimension, "vstack of matrices with different widths");
    BitMatrix out(top.rows_ + bottom.rows_, top.cols_);
    std::copy(top.bits_.begin(), top.bits_.end(), out.bits_.begin());
    std::copy(bottom.bits_.begin(), bottom.bits_.end(),
              out.bits_.begin() + static_cast<std::ptrdiff_t>(top.bits_.size()));
    return out;
}

BitMatrix BitMatrix::hstack(const BitMatrix& left, const BitMatrix& right)
{
    if (left.rows_ != right.rows_) fail(ErrorKind::Dimension, "hstack of matrices with different heights");
    BitMatrix out(left.rows_, left.cols_ + right.cols_);
    for (std::size_t r = 0; r < left.rows_; ++r) {
        for (std::size_t c : left.row_vector(r).support()) out.set(r, c);
        for (std::size_t c : right.row_vector(r).support()) out.set(r, left.cols_ + c);
    }
    return out;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b)
{
    if (a.cols_ != b.rows_) fail(ErrorKind::Dimension, "matrix product with mismatched inner dimension");
    BitMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        auto arow = a.row(r);
        auto orow = out.row(r);
        for (std::size_t w = 0; w < a.stride_; ++w) {
            std::uint64_t word = arow[w];
            while (word != 0) {
                const std::size_t k = w * kWordBits + static_cast<std::size_t>(std::countr_zero(word));
                xor_words(orow, b.row(k));
                word &= word - 1;
            }
        }
    }
    return out;
}

BitMatrix operator+(const BitMatrix& a, const BitMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::Dimension, "matrix sum with mismatched shapes");
    BitMatrix out = a;
    for (std::size_t i = 0; i < out.bits_.size(); ++i) out.bits_[i] ^= b.bits_[i];
    return out;
}

std::string BitMatrix::to_string() const
{
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
        s += row_vector(r).to_string();
        s += '\n';
    }
    return s;
}

// ---------------------------------------------------------------------------
// Elimination

RrefResult rref_rank(BitMatrix m)
{
    RrefResult result;
    const std::size_t rows = m.rows();
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < rows; ++c) {
        const std::size_t w = c / kWordBits;
        const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
        std::size_t pivot = r;
        while (pivot < rows && (m.row(pivot)[w] & mask) == 0) ++pivot;
        if (pivot == rows) continue;
        m.swap_rows(r, pivot);
        // Rows at and below r are zero left of column c, so XOR can start at word w.
        auto prow = m.row(r);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            auto irow = m.row(i);
            if (irow[w] & mask) xor_words(irow, prow, i < r ? 0 : w);
        }
        result.pivots.push_back(c);
        ++r;
    }
    result.rank = r;
    result.reduced = std::move(m);
    return result;
}

std::size_t rank(BitMatrix m)
{
    const std::size_t rows = m.rows();
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < rows; ++c) {
        const std::size_t w = c / kWordBits;
        const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
        std::size_t pivot = r;
        while (pivot < rows && (m.row(pivot)[w] & mask) == 0) ++pivot;
        if (pivot == rows) continue;
        m.swap_rows(r, pivot);
        auto prow = m.row(r);
        for (std::size_t i = r + 1; i < rows; ++i) {
            auto irow = m.row(i);
            if (irow[w] & mask) xor_words(irow, prow, w);
        }
        ++r;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(ambient_dim, BitMatrix(0, ambient_dim), {}); }

Subspace Subspace::full(std::size_t ambient_dim)
{
    std::vector<std::size_t> pivots(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
    return Subspace(ambient_dim, BitMatrix::identity(ambient_dim), std::move(pivots));
}

Subspace Subspace::span(BitMatrix rows)
{
    const std::size_t ambient = rows.cols();
    RrefResult r = rref_rank(std::move(rows));
    r.reduced.truncate_rows(r.rank);
    return Subspace(ambient, std::move(r.reduced), std::move(r.pivots));
}

Subspace Subspace::span(std::span<const BitVector> vectors, std::size_t ambient_dim)
{
    return span(BitMatrix::from_rows(vectors, ambient_dim));
}

Subspace Subspace::coordinate(std::span<const std::size_t> indices, std::size_t ambient_dim)
{
    std::vector<std::size_t> sorted(indices.begin(), indices.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    BitMatrix basis(sorted.size(), ambient_dim);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] >= ambient_dim) fail(ErrorKind::Dimension, "coordinate index out of range");
        basis.set(i, sorted[i]);
    }
    return Subspace(ambient_dim, std::move(basis), std::move(sorted));
}

BitVector Subspace::reduce(BitVector v) const
{
    if (v.size() != ambient_) fail(ErrorKind::Dimension, "vector does not live in the subspace's ambient space");
    auto words = v.words();
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if ((words[p / kWordBits] >> (p % kWordBits)) & 1U) xor_words(words, basis_.row(i));
    }
    return v;
}

bool Subspace::contains(const BitVector& v) const { return reduce(v).none(); }

bool Subspace::contains(const Subspace& other) const
{
    if (other.ambient_ != ambient_) fail(ErrorKind::Dimension, "containment test across different ambient spaces");
    if (other.dim() > dim()) return false;
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_vector(i))) return false;
    return true;
}

Subspace kernel_basis(const BitMatrix& m)
{
    const std::size_t n = m.cols();
    RrefResult r = rref_rank(m);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    BitMatrix vectors(n - r.rank, n);
    std::size_t k = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        vectors.set(k, f);
        for (std::size_t i = 0; i < r.rank; ++i)
            if (r.reduced.get(i, f)) vectors.set(k, r.pivots[i]);
        ++k;
    }
    return Subspace::span(std::move(vectors));
}

Subspace image(const BitMatrix& m) { return Subspace::span(m.transpose()); }

Subspace image_of(const BitMatrix& m, const Subspace& s)
{
    if (m.cols() != s.ambient_dim()) fail(ErrorKind::Dimension, "image_of: matrix width differs from ambient dimension");
    return Subspace::span(s.basis() * m.transpose());
}

Subspace annihilator(const Subspace& s) { return kernel_basis(s.basis()); }

Subspace subspace_combine(const Subspace& a, const Subspace& b, CombineMode mode)
{
    if (a.ambient_dim() != b.ambient_dim())
        fail(ErrorKind::Dimension, "subspace_combine: ambient dimensions " + std::to_string(a.ambient_dim()) +
                                       " and " + std::to_string(b.ambient_dim()) + " differ");
    const std::size_t n = a.ambient_dim();
    if (mode == CombineMode::Sum) return Subspace::span(BitMatrix::vstack(a.basis(), b.basis()));

    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(n);
    if (a.contains(b)) return b;
    if (b.contains(a)) return a;
    // Zassenhaus: rows [a | a] and [b | 0]; echelon rows with a zero left half span the intersection.
    BitMatrix z(a.dim() + b.dim(), 2 * n);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t c : a.basis_vector(i).support()) {
            z.set(i, c);
            z.set(i, n + c);
        }
    for (std::size_t j = 0; j < b.dim(); ++j)
        for (std::size_t c : b.basis_vector(j).support()) z.set(a.dim() + j, c);
    RrefResult r = rref_rank(std::move(z));
    std::vector<BitVector> meet;
    for (std::size_t i = 0; i < r.rank; ++i) {
        if (r.pivots[i] < n) continue;
        BitVector v(n);
        for (std::size_t c = 0; c < n; ++c)
            if (r.reduced.get(i, n + c)) v.set(c);
        meet.push_back(std::move(v));
    }
    return Subspace::span(meet, n);
}

Subspace preimage(const BitMatrix& m, const Subspace& s)
{
    if (m.rows() != s.ambient_dim())
        fail(ErrorKind::Dimension, "preimage: matrix height " + std::to_string(m.rows()) +
                                       " differs from subspace ambient dimension " + std::to_string(s.ambient_dim()));
    if (s.dim() == s.ambient_dim()) return Subspace::full(m.cols());
    const Subspace complement_test = annihilator(s);
    return kernel_basis(complement_test.basis() * m);
}

std::size_t quotient_dim(const Subspace& a, const Subspace& b)
{
    if (!a.contains(b)) fail(ErrorKind::Precondition, "quotient_dim: not a subspace");
    return a.dim() - b.dim();
}

// ---------------------------------------------------------------------------
// Quotients and induced maps

QuotientCoordinates::QuotientCoordinates(Subspace upper, Subspace lower)
    : upper_(std::move(upper)), lower_(std::move(lower))
{
    if (!upper_.contains(lower_)) fail(ErrorKind::Precondition, "quotient coordinates: lower space is not a subspace");
    BitMatrix reduced(upper_.dim(), upper_.ambient_dim());
    for (std::size_t i = 0; i < upper_.dim(); ++i) reduced.set_row(i, lower_.reduce(upper_.basis_vector(i)));
    RrefResult r = rref_rank(std::move(reduced));
    if (r.rank != upper_.dim() - lower_.dim())
        fail(ErrorKind::Invariant, "quotient coordinates: representative count does not match quotient dimension");
    r.reduced.truncate_rows(r.rank);
    reps_ = std::move(r.reduced);
    rep_pivots_ = std::move(r.pivots);
}

BitVector QuotientCoordinates::coords(const BitVector& v) const
{
    BitVector rest = lower_.reduce(v);
    BitVector c(reps_.rows());
    auto words = rest.words();
    for (std::size_t k = 0; k < rep_pivots_.size(); ++k) {
        const std::size_t p = rep_pivots_[k];
        if ((words[p / kWordBits] >> (p % kWordBits)) & 1U) {
            c.set(k);
            xor_words(words, reps_.row(k));
        }
    }
    if (rest.any()) fail(ErrorKind::Precondition, "quotient coordinates: vector is outside the upper subspace");
    return c;
}

BitVector QuotientCoordinates::lift(const BitVector& coords) const
{
    if (coords.size() != reps_.rows()) fail(ErrorKind::Dimension, "lift: coordinate vector has wrong length");
    BitVector v(upper_.ambient_dim());
    for (std::size_t k : coords.support()) v ^= reps_.row_vector(k);
    return v;
}

BitMatrix induced_map(const BitMatrix& m, const QuotientCoordinates& dom, const QuotientCoordinates& cod)
{
    if (m.cols() != dom.upper().ambient_dim() || m.rows() != cod.upper().ambient_dim())
        fail(ErrorKind::Dimension, "induced_map: matrix shape does not match the quotient spaces");
    const Subspace image_lower = image_of(m, dom.lower());
    if (!cod.lower().contains(image_lower))
        fail(ErrorKind::Precondition, "induced_map: m does not map dom_b into cod_d");
    BitMatrix out(cod.dim(), dom.dim());
    const BitMatrix& reps = dom.representatives();
    for (std::size_t k = 0; k < reps.rows(); ++k) {
        const BitVector w = m.apply(reps.row_vector(k));
        if (!cod.upper().contains(w)) fail(ErrorKind::Precondition, "induced_map: m does not map dom_a into cod_c");
        for (std::size_t i : cod.coords(w).support()) out.set(i, k);
    }
    return out;
}

BitMatrix induced_map(const BitMatrix& m, const Subspace& dom_a, const Subspace& dom_b, const Subspace& cod_c,
                      const Subspace& cod_d)
{
    if (!dom_a.contains(dom_b)) fail(ErrorKind::Precondition, "induced_map: dom_b is not contained in dom_a");
    if (!cod_c.contains(cod_d)) fail(ErrorKind::Precondition, "induced_map: cod_d is not contained in cod_c");
    return induced_map(m, QuotientCoordinates(dom_a, dom_b), QuotientCoordinates(cod_c, cod_d));
}

BitMatrix inverse(const BitMatrix& m)
{
    if (m.rows() != m.cols()) fail(ErrorKind::Dimension, "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RrefResult r = rref_rank(BitMatrix::hstack(m, BitMatrix::identity(n)));
    if (r.rank < n || (n > 0 && r.pivots[n - 1] >= n)) fail(ErrorKind::Precondition, "matrix is singular");
    BitMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < n; ++c)
            if (r.reduced.get(i, n + c)) inv.set(i, c);
    return inv;
}

// ---------------------------------------------------------------------------
// LinearSolver

LinearSolver::LinearSolver(const BitMatrix& a) : unknowns_(a.cols())
{
    // Row-reduce the columns of A while recording the combination that produced each row.
    BitMatrix work = a.transpose();
    BitMatrix comb = BitMatrix::identity(a.cols());
    const std::size_t rows = work.rows();
    std::size_t r = 0;
    for (std::size_t c = 0; c < work.cols() && r < rows; ++c) {
        const std::size_t w = c / kWordBits;
        const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
        std::size_t pivot = r;
        while (pivot < rows && (work.row(pivot)[w] & mask) == 0) ++pivot;
        if (pivot == rows) continue;
        work.swap_rows(r, pivot);
        comb.swap_rows(r, pivot);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || (work.row(i)[w] & mask) == 0) continue;
            work.xor_row(i, r);
            comb.xor_row(i, r);
        }
        pivots_.push_back(c);
        ++r;
    }
    work.truncate_rows(r);
    comb.truncate_rows(r);
    reduced_ = std::move(work);
    combinations_ = std::move(comb);
}

std::optional<BitVector> LinearSolver::solve(const BitVector& b) const
{
    if (b.size() != reduced_.cols()) fail(ErrorKind::Dimension, "solve: right-hand side has wrong length");
    BitVector rest = b;
    BitVector x(unknowns_);
    auto words = rest.words();
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        const std::size_t p = pivots_[k];
        if ((words[p / kWordBits] >> (p % kWordBits)) & 1U) {
            xor_words(words, reduced_.row(k));
            xor_words(x.words(), combinations_.row(k));
        }
    }
    if (rest.any()) return std::nullopt;
    return x;
}

}  // namespace commlie
