#pragma once

// Algebras over GF(2) given by structure constants, their modules and bimodules.
//
// Algebra elements are bit masks over the basis (bit i = coefficient of b_i),
// which caps the dimension at 64; all computations here are far below that.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "commlie/f2la.hpp"

namespace commlie {

using Elem = std::uint64_t;

inline constexpr std::size_t kMaxAlgebraDim = 64;

inline constexpr Elem basis_elem(std::size_t i) { return Elem{1} << i; }

BitVector elem_to_vector(Elem x, std::size_t dim);
Elem vector_to_elem(const BitVector& v);

class BracketTable {
public:
    BracketTable() = default;
    explicit BracketTable(std::size_t dim);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    /// [b_i, b_j]
    [[nodiscard]] Elem at(std::size_t i, std::size_t j) const { return c_[i * dim_ + j]; }
    void set(std::size_t i, std::size_t j, Elem value);
    /// Bilinear extension to arbitrary elements.
    [[nodiscard]] Elem bracket(Elem x, Elem y) const;

    friend bool operator==(const BracketTable&, const BracketTable&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Elem> c_;
};

struct AlgebraClass {
    bool commutative = false;
    bool alternating = false;
    bool jacobi = false;
    bool left_leibniz = false;

    [[nodiscard]] bool commutative_lie() const { return commutative && jacobi; }
    [[nodiscard]] bool lie() const { return alternating && jacobi; }

    friend bool operator==(const AlgebraClass&, const AlgebraClass&) = default;
};

AlgebraClass classify_algebra(const BracketTable& t);

/// Left module: rho[i] is the m x m matrix of v -> b_i . v.
struct ModuleSpec {
    std::size_t dim = 0;
    std::vector<BitMatrix> rho;

    [[nodiscard]] BitMatrix action(Elem x) const;

    friend bool operator==(const ModuleSpec&, const ModuleSpec&) = default;
};

/// Leibniz bimodule: left action rho (in `left`) and right action sigma[i] of v -> v . b_i.
struct BimoduleSpec {
    ModuleSpec left;
    std::vector<BitMatrix> sigma;

    [[nodiscard]] std::size_t dim() const { return left.dim; }
    [[nodiscard]] bool symmetric() const { return left.rho == sigma; }
    [[nodiscard]] BitMatrix left_action(Elem x) const { return left.action(x); }
    [[nodiscard]] BitMatrix right_action(Elem x) const;

    friend bool operator==(const BimoduleSpec&, const BimoduleSpec&) = default;
};

struct AxiomVerdict {
    bool ok = true;
    std::string axiom;  // "module", "LLM", "LML" or "MLL" on failure
    std::size_t i = 0;
    std::size_t j = 0;

    explicit operator bool() const { return ok; }
    [[nodiscard]] std::string describe() const;
};

AxiomVerdict check_module_axioms(const BracketTable& t, const ModuleSpec& m);
AxiomVerdict check_bimodule_axioms(const BracketTable& t, const BimoduleSpec& m);

ModuleSpec trivial_module(const BracketTable& t, std::size_t m);
/// One-dimensional module with b_i acting by bit i of lambda.
ModuleSpec f_lambda(const BracketTable& t, Elem lambda);
/// x . y = [x, y]
ModuleSpec adjoint_module(const BracketTable& t);
/// (x . phi)(y) = phi([x, y]), in the dual basis.
ModuleSpec coadjoint_module(const BracketTable& t);
/// Bimodule with the right action equal to the left one.
BimoduleSpec symmetrize(const ModuleSpec& m);

/// span{[b_i, b_i]} + span{[b_i, b_j] + [b_j, b_i]}
Subspace leibniz_kernel(const BracketTable& t);

enum class SubalgebraKind { NotSubalgebra, Subalgebra, Ideal };
const char* to_string(SubalgebraKind kind);

SubalgebraKind is_ideal(const BracketTable& t, const Subspace& h);

/// Basis with the subalgebra first: the echelon basis of h, then the unit vectors
/// of the non-pivot columns. Rows of `basis` are the new basis vectors.
struct AdaptedBasis {
    BitMatrix basis;
    std::size_t h_dim = 0;
    std::vector<std::size_t> complement;  // columns whose unit vectors complete the basis
};

AdaptedBasis adapted_basis(const Subspace& h);

enum class QuotientMode { RequireIdeal, Subalgebra };

struct QuotientAlgebra {
    BracketTable q;             // empty in Subalgebra mode
    BitMatrix proj;             // dim q x dim g
    BitMatrix section;          // dim g x dim q
    AdaptedBasis adapted;
    ModuleSpec h_action;        // h acting on g/h through the adjoint action
};

QuotientAlgebra quotient_algebra(const BracketTable& t, const Subspace& h,
                                 QuotientMode mode = QuotientMode::RequireIdeal);

/// Structure constants in the basis given by the rows of p (which must be invertible).
BracketTable change_basis(const BracketTable& t, const BitMatrix& p);
ModuleSpec change_basis(const ModuleSpec& m, const BitMatrix& p);
BimoduleSpec change_basis(const BimoduleSpec& m, const BitMatrix& p);

/// The subalgebra h with its echelon basis, and a module restricted to it.
BracketTable restrict_algebra(const BracketTable& t, const Subspace& h);
ModuleSpec restrict_module(const ModuleSpec& m, const Subspace& h);

}  // namespace commlie
