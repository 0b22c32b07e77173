#pragma once

// Cochain spaces Hom(S^n g, M), Hom(Lambda^n g, M) and Hom(tensor^n g, M) with their differentials.
//
// A monomial is a word of basis indices: non-decreasing for Sym, strictly
// increasing for Ext, arbitrary for Tensor. Monomials are ranked colexicographically
// and a cochain is a vector indexed by monomial * dim M + coefficient.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "commlie/algebra.hpp"
#include "commlie/f2la.hpp"

namespace commlie {

enum class Flavor { Sym, Ext, Tensor, Quotient };

const char* to_string(Flavor flavor);

/// Longest word handled by the monomial bases.
inline constexpr std::size_t kMaxDegree = 24;

using Word = std::vector<std::uint8_t>;

std::size_t basis_dim(Flavor flavor, std::size_t d, std::size_t n);

class MonomialBasis {
public:
    MonomialBasis(Flavor flavor, std::size_t d, std::size_t n);

    [[nodiscard]] Flavor flavor() const noexcept { return flavor_; }
    [[nodiscard]] std::size_t algebra_dim() const noexcept { return d_; }
    [[nodiscard]] std::size_t degree() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return words_.size(); }
    [[nodiscard]] const Word& word(std::size_t index) const { return words_[index]; }
    [[nodiscard]] const std::vector<Word>& words() const noexcept { return words_; }

    /// Index of the monomial represented by an arbitrary word of length n, or nothing when
    /// the word vanishes (a repeated letter in an exterior power). The span is used as scratch.
    [[nodiscard]] std::optional<std::size_t> rank(std::span<std::uint8_t> word) const;
    [[nodiscard]] std::optional<std::size_t> rank_of(const Word& word) const;

private:
    Flavor flavor_;
    std::size_t d_;
    std::size_t n_;
    std::vector<Word> words_;
};

/// d^n : C^n -> C^{n+1} for the given flavor; checks the algebra class and coefficient axioms.
BitMatrix differential_matrix(Flavor flavor, const BracketTable& t, const BimoduleSpec& m, std::size_t n);

/// Same formula, evaluating each target monomial on the given word in place of its
/// canonical representative (used to test well-definedness).
BitMatrix differential_matrix_from_words(Flavor flavor, const BracketTable& t, const BimoduleSpec& m, std::size_t n,
                                         std::span<const Word> representatives);

enum class OperatorKind { Insertion, LieDerivative };

/// i_x : C^n -> C^{n-1} or L_x : C^n -> C^n.
BitMatrix operator_matrix(OperatorKind kind, Elem x, Flavor flavor, const BracketTable& t, const BimoduleSpec& m,
                          std::size_t n);

/// (L f)(u_1..u_n) = act f(u) + sum_i f(u_1, .., ad(u_i), .., u_n) on Hom(basis_n of F_2^d, F_2^m).
/// Column j of `ad` holds the image of the basis vector j; `act` is m x m.
BitMatrix lie_derivative_matrix(Flavor flavor, std::size_t d, std::size_t n, const BitMatrix& ad,
                                const BitMatrix& act);

enum class Inclusion { I1, I2, I3 };

const char* to_string(Inclusion which);

/// Quotient map of argument spaces whose pullback is the inclusion:
/// I1: tensor -> Lambda, I2: Sym -> Lambda, I3: tensor -> Sym.
BitMatrix argument_quotient(Inclusion which, std::size_t d, std::size_t n);
/// Pullback of argument_quotient, tensored with the identity on M.
BitMatrix inclusion_matrix(Inclusion which, const BracketTable& t, const BimoduleSpec& m, std::size_t n);

struct ComplexTower {
    Flavor flavor = Flavor::Sym;
    std::string label;
    std::vector<std::size_t> dims;  // degrees 0..n_max
    std::vector<BitMatrix> d;       // d[n] : degree n -> degree n+1, n < n_max

    [[nodiscard]] std::size_t n_max() const { return dims.empty() ? 0 : dims.size() - 1; }
};

ComplexTower build_tower(Flavor flavor, const BracketTable& t, const BimoduleSpec& m, std::size_t n_max,
                         std::string label = {});

/// Shapes fit and consecutive differentials compose to zero.
bool composes_to_zero(const ComplexTower& c);
void check_tower(const ComplexTower& c);

/// Throws when the algebra class or the coefficients do not suit the flavor.
void require_flavor(Flavor flavor, const BracketTable& t, const BimoduleSpec& m);

}  // namespace commlie
