#pragma once

// Comparison of Lie, commutative and Leibniz cohomology.
//
// Each relative complex is the cokernel of an inclusion of cochain complexes, shifted
// down by two. It is modeled as Hom(K_{n+2}, M), where K_N is the kernel of the map of
// argument spaces whose pullback is the inclusion (I_N, I_N/J_N or J_N). The CR complexes
// are cokernels of the pullback of a product map, shifted down by one.

#include <cstddef>
#include <string>
#include <vector>

#include "commlie/algebra.hpp"
#include "commlie/cochain.hpp"
#include "commlie/spectral.hpp"

namespace commlie {

enum class RelativeKind {
    Lambda,     // Lambda inside tensor cochains
    LambdaSym,  // Lambda inside Sym cochains
    Sym,        // Sym inside tensor cochains
};

const char* to_string(RelativeKind kind);
Inclusion inclusion_of(RelativeKind kind);
Flavor sub_flavor(RelativeKind kind);
Flavor total_flavor(RelativeKind kind);

struct RelativeTower {
    RelativeKind kind = RelativeKind::Lambda;
    std::size_t algebra_dim = 0;
    std::size_t module_dim = 0;
    /// rel^n = Hom(K_{n+2}, M), n = 0..n_max.
    ComplexTower tower;
    /// The short exact sequence sub -> total -> rel[-2], degrees 0..n_max+2.
    ComplexTower sub;
    ComplexTower total;
    std::vector<BitMatrix> inclusion;   // sub^N -> total^N
    std::vector<Subspace> kernel;       // K_N inside the total argument space, RREF basis
    std::vector<BitMatrix> projection;  // total^N -> rel^{N-2}: restriction to K_N
    std::vector<BitMatrix> lift;        // rel^{N-2} -> total^N, with projection * lift = 1
};

RelativeTower build_relative_complex(RelativeKind kind, const BracketTable& t, const BimoduleSpec& m,
                                     std::size_t n_max);

/// Degrees N where 0 -> sub^N -> total^N -> rel^{N-2} -> 0 fails to be exact.
std::vector<std::size_t> short_exactness_failures(const RelativeTower& rel);

struct LesNode {
    std::string space;  // "sub", "total" or "rel"
    std::size_t degree = 0;
    std::size_t dim = 0;
    std::size_t rank_in = 0;
    std::size_t rank_out = 0;
    bool composition_zero = true;
    [[nodiscard]] bool exact() const { return composition_zero && rank_in + rank_out == dim; }
};

struct LesMaps {
    std::size_t degree = 0;  // N
    BitMatrix inclusion;     // H^N(sub) -> H^N(total)
    BitMatrix projection;    // H^N(total) -> H^{N-2}(rel), N >= 2
    BitMatrix connecting;    // H^{N-2}(rel) -> H^{N+1}(sub), N >= 2
};

struct LesReport {
    std::vector<LesNode> nodes;
    std::vector<LesMaps> maps;
    [[nodiscard]] bool ok() const;
};

/// The long exact sequence
///   H^N(sub) -> H^N(total) -> H^{N-2}(rel) -> H^{N+1}(sub) -> ...
/// for N = 0..n_top, with exactness checked by ranks at every node. Requires n_top <= rel.tower.n_max().
LesReport long_exact_sequence_check(const RelativeTower& rel, std::size_t n_top);

/// Index of F^0 in the usual numbering of each comparison filtration.
int comparison_filtration_offset(RelativeKind kind);

/// Filtration of the relative complex by the condition of being alternating or symmetric in
/// the leading arguments, with F^0 the whole space.
FilteredTower comparison_filtration(const RelativeTower& rel);

enum class CrKind { Lambda, LambdaSym, Sym };

const char* to_string(CrKind kind);

struct CrTower {
    CrKind kind = CrKind::Lambda;
    /// CR^n = A^{n+1} / m^*(C^{n+2}(g, F)) with A^N inside C^N(g, g*).
    ComplexTower tower;
    std::vector<Subspace> ambient;  // A^{n+1}
    std::vector<Subspace> image;    // pullback of the product map
};

/// Cokernel of the pullback of the product map, n = 0..n_max. Checks injectivity of the
/// pullback and stability of the ambient and image spaces under d.
CrTower build_cr_complex(CrKind kind, const BracketTable& t, std::size_t n_max);

enum class ProductTheorem {
    LieLeibniz,         // rel Lambda: HR_Lambda x HL
    LieCommutative,     // rel Lambda-Sym: HR_{Lambda,S} x HS
    CommutativeLeibniz  // rel Sym: HR_S x HL
};

const char* to_string(ProductTheorem theorem);
RelativeKind relative_kind(ProductTheorem theorem);
CrKind cr_kind(ProductTheorem theorem);
/// Flavor of the cohomology in the second tensor factor.
Flavor factor_flavor(ProductTheorem theorem);

struct ProductReport {
    ProductTheorem theorem = ProductTheorem::LieLeibniz;
    std::vector<std::size_t> hr;        // HR^p, p = 0..n_max-1
    std::vector<std::size_t> factor;    // H?^q(g, M), q = 0..n_max-1
    std::vector<std::size_t> relative;  // H_rel^n, n = 0..n_max-1
    std::vector<ClosedFormEntry> entries;  // page 2, p + q <= n_max-1
    std::vector<ConvergenceEntry> convergence;
    std::vector<PageViolation> page_violations;
    int filtration_offset = 0;

    [[nodiscard]] bool product_holds() const;
    [[nodiscard]] bool internally_consistent() const;
};

/// Dimensions of E_2 of the comparison filtration against dim HR^p * dim H?^q.
ProductReport verify_e2_product(ProductTheorem theorem, const BracketTable& t, const BimoduleSpec& m,
                                std::size_t n_max);

enum class PropagationTheorem {
    LieToLeibniz,         // H = 0 up to n  =>  HL = 0 up to n
    LieToCommutative,     // H = 0 up to n  =>  HS = 0 up to n
    CommutativeToLeibniz  // HS = 0 up to n =>  HL = 0 up to n
};

const char* to_string(PropagationTheorem theorem);

struct PropagationVerdict {
    PropagationTheorem theorem = PropagationTheorem::LieToLeibniz;
    std::vector<std::size_t> lower;  // hypothesis cohomology, degrees 0..n_max-1
    std::vector<std::size_t> upper;  // conclusion cohomology
    /// Largest n with lower^k = 0 for all k <= n, or -1.
    int window = -1;
    bool holds = true;
    /// Largest n with upper^k = 0 for all k <= n, or -1.
    int converse_window = -1;
    bool converse_holds = true;
    std::string detail;

    [[nodiscard]] bool applies() const { return window >= 0; }
};

/// Checks the vanishing propagation and its converse within degrees 0..n_max-1.
PropagationVerdict propagation_check(PropagationTheorem theorem, const BracketTable& t, const BimoduleSpec& m,
                                     std::size_t n_max);

}  // namespace commlie
