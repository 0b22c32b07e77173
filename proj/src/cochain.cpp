#include "commlie/cochain.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "commlie/error.hpp"

namespace commlie {

namespace {

std::uint64_t choose(std::uint64_t n, std::uint64_t k)
{
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::uint64_t power(std::uint64_t base, std::size_t exp)
{
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) r *= base;
    return r;
}

void enumerate_words(Flavor flavor, std::size_t d, std::size_t n, Word& prefix, std::vector<Word>& out)
{
    if (prefix.size() == n) {
        out.push_back(prefix);
        return;
    }
    std::size_t start = 0;
    if (!prefix.empty()) {
        if (flavor == Flavor::Sym) start = prefix.back();
        if (flavor == Flavor::Ext) start = prefix.back() + 1u;
    }
    for (std::size_t letter = start; letter < d; ++letter) {
        prefix.push_back(static_cast<std::uint8_t>(letter));
        enumerate_words(flavor, d, n, prefix, out);
        prefix.pop_back();
    }
}

// Nonzero entries of each basis element's action matrix, as (row, col) pairs.
using ActionPairs = std::vector<std::vector<std::pair<std::size_t, std::size_t>>>;

ActionPairs action_pairs(const std::vector<BitMatrix>& actions)
{
    ActionPairs out(actions.size());
    for (std::size_t i = 0; i < actions.size(); ++i)
        for (std::size_t a = 0; a < actions[i].rows(); ++a)
            for (std::size_t b : actions[i].row_vector(a).support()) out[i].emplace_back(a, b);
    return out;
}

BitMatrix build_differential(Flavor flavor, const BracketTable& t, const BimoduleSpec& coeffs, std::size_t n,
                             std::span<const Word> targets)
{
    const std::size_t d = t.dim();
    const std::size_t m = coeffs.dim();
    const MonomialBasis source(flavor, d, n);
    const std::size_t target_size = basis_dim(flavor, d, n + 1);
    if (targets.size() != target_size) fail(ErrorKind::Dimension, "differential: wrong number of representative words");

    const ActionPairs left = action_pairs(coeffs.left.rho);
    const ActionPairs right = action_pairs(coeffs.sigma);
    BitMatrix out(target_size * m, source.size() * m);
    std::vector<std::uint8_t> scratch(n);

    for (std::size_t tgt = 0; tgt < target_size; ++tgt) {
        const Word& w = targets[tgt];
        if (w.size() != n + 1) fail(ErrorKind::Dimension, "differential: representative word has wrong length");

        // Action terms x_i . f(.., x_i omitted, ..); the last slot acts from the right for Leibniz cochains.
        for (std::size_t i = 0; i <= n; ++i) {
            std::size_t pos = 0;
            for (std::size_t k = 0; k <= n; ++k)
                if (k != i) scratch[pos++] = w[k];
            const auto src = source.rank(scratch);
            if (!src) continue;
            const auto& pairs = (flavor == Flavor::Tensor && i == n) ? right[w[i]] : left[w[i]];
            for (auto [a, b] : pairs) out.flip(tgt * m + a, *src * m + b);
        }

        // Bracket terms.
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = i + 1; j <= n; ++j) {
                Elem br = t.at(w[i], w[j]);
                while (br != 0) {
                    const auto k = static_cast<std::uint8_t>(std::countr_zero(br));
                    br &= br - 1;
                    std::size_t pos = 0;
                    if (flavor == Flavor::Tensor) {
                        for (std::size_t p = 0; p <= n; ++p) {
                            if (p == i) continue;
                            scratch[pos++] = (p == j) ? k : w[p];
                        }
                    } else {
                        scratch[pos++] = k;
                        for (std::size_t p = 0; p <= n; ++p)
                            if (p != i && p != j) scratch[pos++] = w[p];
                    }
                    const auto src = source.rank(scratch);
                    if (!src) continue;
                    for (std::size_t a = 0; a < m; ++a) out.flip(tgt * m + a, *src * m + a);
                }
            }
    }
    return out;
}

}  // namespace

const char* to_string(Flavor flavor)
{
    switch (flavor) {
    case Flavor::Sym: return "sym";
    case Flavor::Ext: return "ext";
    case Flavor::Tensor: return "tensor";
    case Flavor::Quotient: return "quotient";
    }
    return "?";
}

const char* to_string(Inclusion which)
{
    switch (which) {
    case Inclusion::I1: return "i1";
    case Inclusion::I2: return "i2";
    case Inclusion::I3: return "i3";
    }
    return "?";
}

std::size_t basis_dim(Flavor flavor, std::size_t d, std::size_t n)
{
    switch (flavor) {
    case Flavor::Sym: return n == 0 ? 1 : static_cast<std::size_t>(choose(d + n - 1, n));
    case Flavor::Ext: return static_cast<std::size_t>(choose(d, n));
    case Flavor::Tensor: return static_cast<std::size_t>(power(d, n));
    case Flavor::Quotient: break;
    }
    fail(ErrorKind::Precondition, "quotient complexes have no monomial basis");
}

MonomialBasis::MonomialBasis(Flavor flavor, std::size_t d, std::size_t n) : flavor_(flavor), d_(d), n_(n)
{
    if (flavor == Flavor::Quotient) fail(ErrorKind::Precondition, "quotient complexes have no monomial basis");
    if (n > kMaxDegree) fail(ErrorKind::Dimension, "degree exceeds " + std::to_string(kMaxDegree));
    if (d > 255) fail(ErrorKind::Dimension, "algebra dimension too large for monomial words");
    Word prefix;
    std::vector<Word> words;
    enumerate_words(flavor, d, n, prefix, words);
    words_.resize(words.size());
    for (auto& w : words) {
        Word copy = w;
        const auto r = rank(copy);
        if (!r || *r >= words_.size()) fail(ErrorKind::Invariant, "monomial ranking is not a bijection");
        words_[*r] = std::move(w);
    }
}

std::optional<std::size_t> MonomialBasis::rank(std::span<std::uint8_t> word) const
{
    std::uint64_t r = 0;
    switch (flavor_) {
    case Flavor::Tensor: {
        std::uint64_t scale = 1;
        for (std::uint8_t letter : word) {
            r += letter * scale;
            scale *= d_;
        }
        break;
    }
    case Flavor::Sym:
        std::sort(word.begin(), word.end());
        for (std::size_t i = 0; i < word.size(); ++i) r += choose(word[i] + i, i + 1);
        break;
    case Flavor::Ext:
        std::sort(word.begin(), word.end());
        for (std::size_t i = 0; i < word.size(); ++i) {
            if (i > 0 && word[i] == word[i - 1]) return std::nullopt;
            r += choose(word[i], i + 1);
        }
        break;
    case Flavor::Quotient: return std::nullopt;
    }
    return static_cast<std::size_t>(r);
}

std::optional<std::size_t> MonomialBasis::rank_of(const Word& word) const
{
    Word copy = word;
    return rank(copy);
}

void require_flavor(Flavor flavor, const BracketTable& t, const BimoduleSpec& m)
{
    const AlgebraClass cls = classify_algebra(t);
    switch (flavor) {
    case Flavor::Sym:
        if (!cls.commutative) fail(ErrorKind::Precondition, "sym flavor: algebra is not commutative");
        if (!cls.jacobi) fail(ErrorKind::Precondition, "sym flavor: algebra fails the Jacobi identity");
        break;
    case Flavor::Ext:
        if (!cls.alternating) fail(ErrorKind::Precondition, "ext flavor: algebra is not alternating");
        if (!cls.jacobi) fail(ErrorKind::Precondition, "ext flavor: algebra fails the Jacobi identity");
        break;
    case Flavor::Tensor:
        if (!cls.left_leibniz) fail(ErrorKind::Precondition, "tensor flavor: algebra fails the left Leibniz identity");
        break;
    case Flavor::Quotient: fail(ErrorKind::Precondition, "quotient complexes are built by the comparison module");
    }
    if (flavor != Flavor::Tensor && !m.symmetric())
        fail(ErrorKind::Precondition, std::string(to_string(flavor)) + " flavor: coefficients must be a symmetric bimodule");
    const AxiomVerdict v = check_bimodule_axioms(t, m);
    if (!v) fail(ErrorKind::Precondition, "coefficients: " + v.describe());
}

BitMatrix differential_matrix(Flavor flavor, const BracketTable& t, const BimoduleSpec& m, std::size_t n)
{
    require_flavor(flavor, t, m);
    const MonomialBasis target(flavor, t.dim(), n + 1);
    return build_differential(flavor, t, m, n, target.words());
}

BitMatrix differential_matrix_from_words(Flavor flavor, const BracketTable& t, const BimoduleSpec& m, std::size_t n,
                                         std::span<const Word> representatives)
{
    require_flavor(flavor, t, m);
    const MonomialBasis target(flavor, t.dim(), n + 1);
    for (std::size_t i = 0; i < representatives.size(); ++i) {
        const auto r = target.rank_of(representatives[i]);
        if (!r || *r != i) fail(ErrorKind::Precondition, "representative word does not represent its monomial");
    }
    return build_differential(flavor, t, m, n, representatives);
}

BitMatrix lie_derivative_matrix(Flavor flavor, std::size_t d, std::size_t n, const BitMatrix& ad, const BitMatrix& act)
{
    if (ad.rows() != d || ad.cols() != d) fail(ErrorKind::Dimension, "Lie derivative: bracket operator has wrong shape");
    if (act.rows() != act.cols()) fail(ErrorKind::Dimension, "Lie derivative: action matrix must be square");
    const std::size_t m = act.rows();
    const MonomialBasis basis(flavor, d, n);
    const BitMatrix ad_t = ad.transpose();  // row j lists the support of ad(b_j)
    BitMatrix out(basis.size() * m, basis.size() * m);
    Word scratch(n);
    for (std::size_t u = 0; u < basis.size(); ++u) {
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b : act.row_vector(a).support()) out.flip(u * m + a, u * m + b);
        const Word& w = basis.word(u);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k : ad_t.row_vector(w[i]).support()) {
                scratch = w;
                scratch[i] = static_cast<std::uint8_t>(k);
                const auto r = basis.rank(scratch);
                if (!r) continue;
                for (std::size_t a = 0; a < m; ++a) out.flip(u * m + a, *r * m + a);
            }
    }
    return out;
}

BitMatrix operator_matrix(OperatorKind kind, Elem x, Flavor flavor, const BracketTable& t, const BimoduleSpec& m,
                          std::size_t n)
{
    require_flavor(flavor, t, m);
    const std::size_t d = t.dim();
    const std::size_t dm = m.dim();
    if (kind == OperatorKind::LieDerivative) {
        BitMatrix ad(d, d);
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k : elem_to_vector(t.bracket(x, basis_elem(j)), d).support()) ad.set(k, j);
        return lie_derivative_matrix(flavor, d, n, ad, m.left_action(x));
    }
    const MonomialBasis source(flavor, d, n);
    if (n == 0) return BitMatrix(0, source.size() * dm);
    const MonomialBasis target(flavor, d, n - 1);
    BitMatrix out(target.size() * dm, source.size() * dm);
    Word scratch(n);
    for (std::size_t u = 0; u < target.size(); ++u)
        for (std::size_t k : elem_to_vector(x, d).support()) {
            scratch[0] = static_cast<std::uint8_t>(k);
            std::copy(target.word(u).begin(), target.word(u).end(), scratch.begin() + 1);
            const auto r = source.rank(scratch);
            if (!r) continue;
            for (std::size_t a = 0; a < dm; ++a) out.flip(u * dm + a, *r * dm + a);
        }
    return out;
}

BitMatrix argument_quotient(Inclusion which, std::size_t d, std::size_t n)
{
    const Flavor from = which == Inclusion::I2 ? Flavor::Sym : Flavor::Tensor;
    const Flavor to = which == Inclusion::I3 ? Flavor::Sym : Flavor::Ext;
    const MonomialBasis source(from, d, n);
    const MonomialBasis target(to, d, n);
    BitMatrix q(target.size(), source.size());
    for (std::size_t w = 0; w < source.size(); ++w)
        if (const auto r = target.rank_of(source.word(w))) q.set(*r, w);
    return q;
}

BitMatrix inclusion_matrix(Inclusion which, const BracketTable& t, const BimoduleSpec& m, std::size_t n)
{
    const AlgebraClass cls = classify_algebra(t);
    if (which == Inclusion::I3) {
        if (!cls.commutative_lie()) fail(ErrorKind::Precondition, "i3 requires a commutative Lie algebra");
    } else if (!cls.lie()) {
        fail(ErrorKind::Precondition, std::string(to_string(which)) + " requires a Lie algebra (alternating + Jacobi)");
    }
    return argument_quotient(which, t.dim(), n).transpose().kron_identity(m.dim());
}

ComplexTower build_tower(Flavor flavor, const BracketTable& t, const BimoduleSpec& m, std::size_t n_max,
                         std::string label)
{
    require_flavor(flavor, t, m);
    ComplexTower c;
    c.flavor = flavor;
    c.label = label.empty() ? to_string(flavor) : std::move(label);
    for (std::size_t n = 0; n <= n_max; ++n) c.dims.push_back(basis_dim(flavor, t.dim(), n) * m.dim());
    for (std::size_t n = 0; n < n_max; ++n) {
        const MonomialBasis target(flavor, t.dim(), n + 1);
        c.d.push_back(build_differential(flavor, t, m, n, target.words()));
    }
    return c;
}

bool composes_to_zero(const ComplexTower& c)
{
    for (std::size_t n = 0; n + 1 < c.d.size(); ++n)
        if (!(c.d[n + 1] * c.d[n]).is_zero()) return false;
    return true;
}

void check_tower(const ComplexTower& c)
{
    if (c.d.size() + 1 != c.dims.size() && !(c.dims.empty() && c.d.empty()))
        fail(ErrorKind::Dimension, "tower: need one differential per degree below the top");
    for (std::size_t n = 0; n < c.d.size(); ++n)
        if (c.d[n].cols() != c.dims[n] || c.d[n].rows() != c.dims[n + 1])
            fail(ErrorKind::Dimension, "tower '" + c.label + "': differential " + std::to_string(n) + " has wrong shape");
    for (std::size_t n = 0; n + 1 < c.d.size(); ++n)
        if (!(c.d[n + 1] * c.d[n]).is_zero())
            fail(ErrorKind::Invariant, "tower '" + c.label + "': d o d != 0 at degree " + std::to_string(n));
}

}  // namespace commlie
