#include "commlie/cohomology.hpp"

#include "commlie/error.hpp"

namespace commlie {

CohomologySpaces cohomology_spaces(const ComplexTower& c, std::size_t n)
{
    if (n >= c.d.size())
        fail(ErrorKind::Precondition, "cohomology: degree " + std::to_string(n) + " is not below the truncation degree " +
                                          std::to_string(c.n_max()));
    return {kernel_basis(c.d[n]), n == 0 ? Subspace::zero(c.dims[0]) : image(c.d[n - 1])};
}

BettiTable betti_table(const ComplexTower& c)
{
    check_tower(c);
    BettiTable out{c.flavor, c.label, {}};
    for (std::size_t n = 0; n < c.d.size(); ++n) {
        const std::size_t cycles = c.dims[n] - rank(c.d[n]);
        const std::size_t boundaries = n == 0 ? 0 : rank(c.d[n - 1]);
        out.dims.push_back(cycles - boundaries);
    }
    return out;
}

std::vector<BitVector> cocycle_representatives(const ComplexTower& c, std::size_t n)
{
    const CohomologySpaces h = cohomology_spaces(c, n);
    const QuotientCoordinates q(h.cycles, h.boundaries);
    std::vector<BitVector> out;
    for (std::size_t k = 0; k < q.dim(); ++k) out.push_back(q.representatives().row_vector(k));
    return out;
}

BitMatrix induced_cohomology_action(const BitMatrix& op, const ComplexTower& c, std::size_t n)
{
    const CohomologySpaces h = cohomology_spaces(c, n);
    if (op.rows() != c.dims[n] || op.cols() != c.dims[n])
        fail(ErrorKind::Dimension, "induced action: operator does not act on the degree-" + std::to_string(n) + " cochains");
    if (!h.cycles.contains(image_of(op, h.cycles)))
        fail(ErrorKind::Precondition, "induced action: operator does not preserve cocycles in degree " + std::to_string(n));
    if (!h.boundaries.contains(image_of(op, h.boundaries)))
        fail(ErrorKind::Precondition, "induced action: operator does not preserve coboundaries in degree " + std::to_string(n));
    return induced_map(op, h.cycles, h.boundaries, h.cycles, h.boundaries);
}

}  // namespace commlie
