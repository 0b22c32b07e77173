#include "commlie/algebra.hpp"

#include <bit>

#include "commlie/error.hpp"

namespace commlie {

namespace {

void require_dim(const BracketTable& t, const Subspace& h)
{
    if (h.ambient_dim() != t.dim())
        fail(ErrorKind::Dimension, "subspace of F_2^" + std::to_string(h.ambient_dim()) +
                                       " used with an algebra of dimension " + std::to_string(t.dim()));
}

template <typename F>
void for_each_bit(Elem x, F&& f)
{
    while (x != 0) {
        f(static_cast<std::size_t>(std::countr_zero(x)));
        x &= x - 1;
    }
}

void require_module_shape(const BracketTable& t, std::size_t m, const std::vector<BitMatrix>& actions,
                          const char* what)
{
    if (actions.size() != t.dim())
        fail(ErrorKind::Dimension, std::string(what) + ": expected one matrix per basis element (" +
                                       std::to_string(t.dim()) + "), got " + std::to_string(actions.size()));
    for (const auto& a : actions)
        if (a.rows() != m || a.cols() != m)
            fail(ErrorKind::Dimension, std::string(what) + ": action matrices must be " + std::to_string(m) + "x" +
                                           std::to_string(m));
}

BitMatrix sum_of(const std::vector<BitMatrix>& mats, Elem x, std::size_t m)
{
    BitMatrix out(m, m);
    for_each_bit(x, [&](std::size_t i) { out = out + mats[i]; });
    return out;
}

Elem row_elem(const BitMatrix& p, std::size_t r) { return vector_to_elem(p.row_vector(r)); }

}  // namespace

BitVector elem_to_vector(Elem x, std::size_t dim)
{
    BitVector v(dim);
    for_each_bit(x, [&](std::size_t i) {
        if (i >= dim) fail(ErrorKind::Dimension, "element has a coordinate beyond the algebra dimension");
        v.set(i);
    });
    return v;
}

Elem vector_to_elem(const BitVector& v)
{
    if (v.size() > kMaxAlgebraDim) fail(ErrorKind::Dimension, "vector too long for an algebra element");
    return v.size() == 0 ? 0 : v.words()[0];
}

// ---------------------------------------------------------------------------
// BracketTable

BracketTable::BracketTable(std::size_t dim) : dim_(dim), c_(dim * dim, 0)
{
    if (dim > kMaxAlgebraDim) fail(ErrorKind::Dimension, "algebra dimension exceeds " + std::to_string(kMaxAlgebraDim));
}

void BracketTable::set(std::size_t i, std::size_t j, Elem value)
{
    if (i >= dim_ || j >= dim_) fail(ErrorKind::Dimension, "bracket index out of range");
    if (dim_ < kMaxAlgebraDim && (value >> dim_) != 0)
        fail(ErrorKind::Dimension, "bracket value has a coordinate beyond the algebra dimension");
    c_[i * dim_ + j] = value;
}

Elem BracketTable::bracket(Elem x, Elem y) const
{
    Elem out = 0;
    for_each_bit(x, [&](std::size_t i) { for_each_bit(y, [&](std::size_t j) { out ^= at(i, j); }); });
    return out;
}

AlgebraClass classify_algebra(const BracketTable& t)
{
    const std::size_t d = t.dim();
    AlgebraClass cls{true, true, true, true};
    for (std::size_t i = 0; i < d; ++i) {
        if (t.at(i, i) != 0) cls.alternating = false;
        for (std::size_t j = 0; j < d; ++j)
            if (t.at(i, j) != t.at(j, i)) cls.commutative = false;
    }
    cls.alternating = cls.alternating && cls.commutative;
    for (std::size_t i = 0; i < d; ++i) {
        const Elem x = basis_elem(i);
        for (std::size_t j = 0; j < d; ++j) {
            const Elem y = basis_elem(j);
            for (std::size_t k = 0; k < d; ++k) {
                const Elem z = basis_elem(k);
                const Elem cyclic = t.bracket(x, t.at(j, k)) ^ t.bracket(y, t.at(k, i)) ^ t.bracket(z, t.at(i, j));
                if (cyclic != 0) cls.jacobi = false;
                const Elem lli = t.bracket(x, t.at(j, k)) ^ t.bracket(t.at(i, j), z) ^ t.bracket(y, t.at(i, k));
                if (lli != 0) cls.left_leibniz = false;
            }
        }
    }
    return cls;
}

// ---------------------------------------------------------------------------
// Modules

BitMatrix ModuleSpec::action(Elem x) const { return sum_of(rho, x, dim); }

BitMatrix BimoduleSpec::right_action(Elem x) const { return sum_of(sigma, x, left.dim); }

std::string AxiomVerdict::describe() const
{
    if (ok) return "ok";
    return axiom + " axiom fails at basis pair (" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

AxiomVerdict check_module_axioms(const BracketTable& t, const ModuleSpec& m)
{
    require_module_shape(t, m.dim, m.rho, "module");
    const std::size_t d = t.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const BitMatrix lhs = m.action(t.at(i, j));
            const BitMatrix rhs = m.rho[i] * m.rho[j] + m.rho[j] * m.rho[i];
            if (lhs != rhs) return {false, "module", i, j};
        }
    return {};
}

AxiomVerdict check_bimodule_axioms(const BracketTable& t, const BimoduleSpec& m)
{
    require_module_shape(t, m.dim(), m.left.rho, "bimodule left action");
    require_module_shape(t, m.dim(), m.sigma, "bimodule right action");
    const std::size_t d = t.dim();
    const auto& rho = m.left.rho;
    const auto& sigma = m.sigma;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (m.left_action(t.at(i, j)) != rho[i] * rho[j] + rho[j] * rho[i]) return {false, "LLM", i, j};
            const BitMatrix right_bracket = m.right_action(t.at(i, j));
            if (rho[i] * sigma[j] != sigma[j] * rho[i] + right_bracket) return {false, "LML", i, j};
            if (right_bracket != sigma[j] * sigma[i] + rho[i] * sigma[j]) return {false, "MLL", i, j};
        }
    return {};
}

namespace {

ModuleSpec verified(const BracketTable& t, ModuleSpec m, const char* name)
{
    const AxiomVerdict v = check_module_axioms(t, m);
    if (!v) fail(ErrorKind::Precondition, std::string(name) + ": " + v.describe());
    return m;
}

}  // namespace

ModuleSpec trivial_module(const BracketTable& t, std::size_t m)
{
    return ModuleSpec{m, std::vector<BitMatrix>(t.dim(), BitMatrix(m, m))};
}

ModuleSpec f_lambda(const BracketTable& t, Elem lambda)
{
    ModuleSpec m{1, std::vector<BitMatrix>(t.dim(), BitMatrix(1, 1))};
    for (std::size_t i = 0; i < t.dim(); ++i)
        if ((lambda >> i) & 1U) m.rho[i].set(0, 0);
    if (t.dim() < kMaxAlgebraDim && (lambda >> t.dim()) != 0)
        fail(ErrorKind::Dimension, "F_lambda: lambda has more entries than the algebra dimension");
    return verified(t, std::move(m), "F_lambda");
}

ModuleSpec adjoint_module(const BracketTable& t)
{
    const std::size_t d = t.dim();
    ModuleSpec m{d, std::vector<BitMatrix>(d, BitMatrix(d, d))};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for_each_bit(t.at(i, j), [&](std::size_t k) { m.rho[i].set(k, j); });
    return verified(t, std::move(m), "adjoint module");
}

ModuleSpec coadjoint_module(const BracketTable& t)
{
    if (!classify_algebra(t).jacobi) fail(ErrorKind::Precondition, "coadjoint module: algebra fails the Jacobi identity");
    const std::size_t d = t.dim();
    ModuleSpec m{d, std::vector<BitMatrix>(d, BitMatrix(d, d))};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for_each_bit(t.at(i, j), [&](std::size_t k) { m.rho[i].set(j, k); });
    return verified(t, std::move(m), "coadjoint module");
}

BimoduleSpec symmetrize(const ModuleSpec& m) { return BimoduleSpec{m, m.rho}; }

// ---------------------------------------------------------------------------
// Subalgebras, ideals, quotients

Subspace leibniz_kernel(const BracketTable& t)
{
    const std::size_t d = t.dim();
    std::vector<BitVector> gens;
    for (std::size_t i = 0; i < d; ++i) {
        gens.push_back(elem_to_vector(t.at(i, i), d));
        for (std::size_t j = i + 1; j < d; ++j) gens.push_back(elem_to_vector(t.at(i, j) ^ t.at(j, i), d));
    }
    return Subspace::span(gens, d);
}

const char* to_string(SubalgebraKind kind)
{
    switch (kind) {
    case SubalgebraKind::NotSubalgebra: return "not-subalgebra";
    case SubalgebraKind::Subalgebra: return "subalgebra";
    case SubalgebraKind::Ideal: return "ideal";
    }
    return "?";
}

SubalgebraKind is_ideal(const BracketTable& t, const Subspace& h)
{
    require_dim(t, h);
    const std::size_t d = t.dim();
    auto inside = [&](Elem x) { return h.contains(elem_to_vector(x, d)); };
    for (std::size_t a = 0; a < h.dim(); ++a)
        for (std::size_t b = 0; b < h.dim(); ++b)
            if (!inside(t.bracket(row_elem(h.basis(), a), row_elem(h.basis(), b)))) return SubalgebraKind::NotSubalgebra;
    for (std::size_t a = 0; a < h.dim(); ++a) {
        const Elem u = row_elem(h.basis(), a);
        for (std::size_t k = 0; k < d; ++k)
            if (!inside(t.bracket(basis_elem(k), u)) || !inside(t.bracket(u, basis_elem(k))))
                return SubalgebraKind::Subalgebra;
    }
    return SubalgebraKind::Ideal;
}

AdaptedBasis adapted_basis(const Subspace& h)
{
    const std::size_t d = h.ambient_dim();
    AdaptedBasis out;
    out.h_dim = h.dim();
    std::vector<bool> pivot(d, false);
    for (std::size_t p : h.pivots()) pivot[p] = true;
    for (std::size_t c = 0; c < d; ++c)
        if (!pivot[c]) out.complement.push_back(c);
    out.basis = BitMatrix(d, d);
    for (std::size_t r = 0; r < h.dim(); ++r) out.basis.set_row(r, h.basis_vector(r));
    for (std::size_t a = 0; a < out.complement.size(); ++a) out.basis.set(h.dim() + a, out.complement[a]);
    return out;
}

QuotientAlgebra quotient_algebra(const BracketTable& t, const Subspace& h, QuotientMode mode)
{
    const SubalgebraKind kind = is_ideal(t, h);
    if (mode == QuotientMode::RequireIdeal && kind != SubalgebraKind::Ideal)
        fail(ErrorKind::Precondition, "quotient_algebra: subspace is not an ideal");
    if (kind == SubalgebraKind::NotSubalgebra) fail(ErrorKind::Precondition, "quotient_algebra: subspace is not a subalgebra");

    const std::size_t d = t.dim();
    QuotientAlgebra out;
    out.adapted = adapted_basis(h);
    const auto& comp = out.adapted.complement;
    const std::size_t dq = comp.size();

    auto project = [&](Elem x) {
        const BitVector rest = h.reduce(elem_to_vector(x, d));
        Elem y = 0;
        for (std::size_t a = 0; a < dq; ++a)
            if (rest.get(comp[a])) y |= basis_elem(a);
        return y;
    };

    out.proj = BitMatrix(dq, d);
    for (std::size_t k = 0; k < d; ++k)
        for_each_bit(project(basis_elem(k)), [&](std::size_t a) { out.proj.set(a, k); });
    out.section = BitMatrix(d, dq);
    for (std::size_t a = 0; a < dq; ++a) out.section.set(comp[a], a);

    if (kind == SubalgebraKind::Ideal) {
        out.q = BracketTable(dq);
        for (std::size_t a = 0; a < dq; ++a)
            for (std::size_t b = 0; b < dq; ++b)
                out.q.set(a, b, project(t.at(comp[a], comp[b])));
    }

    out.h_action = ModuleSpec{dq, {}};
    for (std::size_t r = 0; r < h.dim(); ++r) {
        const Elem u = row_elem(h.basis(), r);
        BitMatrix act(dq, dq);
        for (std::size_t a = 0; a < dq; ++a)
            for_each_bit(project(t.bracket(u, basis_elem(comp[a]))), [&](std::size_t b) { act.set(b, a); });
        out.h_action.rho.push_back(std::move(act));
    }
    return out;
}

BracketTable change_basis(const BracketTable& t, const BitMatrix& p)
{
    const std::size_t d = t.dim();
    if (p.rows() != d || p.cols() != d) fail(ErrorKind::Dimension, "change_basis: matrix must be square of the algebra dimension");
    const BitMatrix to_new = inverse(p.transpose());
    BracketTable out(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Elem v = t.bracket(row_elem(p, i), row_elem(p, j));
            out.set(i, j, vector_to_elem(to_new.apply(elem_to_vector(v, d))));
        }
    return out;
}

ModuleSpec change_basis(const ModuleSpec& m, const BitMatrix& p)
{
    ModuleSpec out{m.dim, {}};
    for (std::size_t i = 0; i < p.rows(); ++i) out.rho.push_back(m.action(row_elem(p, i)));
    return out;
}

BimoduleSpec change_basis(const BimoduleSpec& m, const BitMatrix& p)
{
    BimoduleSpec out{change_basis(m.left, p), {}};
    for (std::size_t i = 0; i < p.rows(); ++i) out.sigma.push_back(m.right_action(row_elem(p, i)));
    return out;
}

BracketTable restrict_algebra(const BracketTable& t, const Subspace& h)
{
    require_dim(t, h);
    const std::size_t k = h.dim();
    BracketTable out(k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            const BitVector v = elem_to_vector(t.bracket(row_elem(h.basis(), a), row_elem(h.basis(), b)), t.dim());
            if (!h.contains(v)) fail(ErrorKind::Precondition, "restrict_algebra: subspace is not a subalgebra");
            Elem coords = 0;
            for (std::size_t r = 0; r < k; ++r)
                if (v.get(h.pivots()[r])) coords |= basis_elem(r);
            out.set(a, b, coords);
        }
    return out;
}

ModuleSpec restrict_module(const ModuleSpec& m, const Subspace& h)
{
    ModuleSpec out{m.dim, {}};
    for (std::size_t r = 0; r < h.dim(); ++r) out.rho.push_back(m.action(row_elem(h.basis(), r)));
    return out;
}

}  // namespace commlie
