#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "commlie/cochain.hpp"
#include "commlie/f2la.hpp"

namespace commlie {

struct BettiTable {
    Flavor flavor = Flavor::Sym;
    std::string label;
    std::vector<std::size_t> dims;  // degrees 0..n_max-1

    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// Cocycles and coboundaries of one degree.
struct CohomologySpaces {
    Subspace cycles;
    Subspace boundaries;

    [[nodiscard]] std::size_t dim() const { return cycles.dim() - boundaries.dim(); }
};

CohomologySpaces cohomology_spaces(const ComplexTower& c, std::size_t n);

/// Dimensions in degrees 0..n_max-1; the top degree has no outgoing differential and is left out.
BettiTable betti_table(const ComplexTower& c);

/// Cocycles spanning a complement of the coboundaries (the canonical coset representatives).
std::vector<BitVector> cocycle_representatives(const ComplexTower& c, std::size_t n);

/// Matrix on H^n induced by an operator on C^n that preserves cocycles and coboundaries,
/// in the coordinates of cocycle_representatives.
BitMatrix induced_cohomology_action(const BitMatrix& op, const ComplexTower& c, std::size_t n);

}  // namespace commlie
