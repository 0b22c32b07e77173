#pragma once

// Spectral sequences of finitely filtered cochain complexes.
//
// Pages follow the standard construction
//   Z_r^p = F^p C ∩ d^{-1}(F^{p+r} C),   Z_{-1}^p = F^p C,
//   E_r^p = Z_r^p / (Z_{r-1}^{p+1} + d Z_{r-1}^{p-r+1}),
// evaluated degree by degree with subspace arithmetic; d_r is the map induced by d.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "commlie/algebra.hpp"
#include "commlie/cochain.hpp"
#include "commlie/cohomology.hpp"

namespace commlie {

struct FilteredTower {
    ComplexTower tower;
    /// filt[n][p] for p = 0..length(n); filt[n][0] is the whole space and filt[n].back() is zero.
    std::vector<std::vector<Subspace>> filt;
    /// Index of F^0 in the source's own numbering (reports only).
    int index_offset = 0;

    [[nodiscard]] std::size_t length(std::size_t n) const { return filt[n].size() - 1; }
    [[nodiscard]] std::size_t max_length() const;
    /// F^p in degree n, with F^p = F^0 for p < 0 and F^p = 0 beyond the length.
    [[nodiscard]] const Subspace& step(std::size_t n, int p) const;
};

/// Validates shape, monotonicity, end points and d(F^p) ⊆ F^p.
FilteredTower make_filtered_tower(ComplexTower tower, std::vector<std::vector<Subspace>> filt, int index_offset = 0);

/// First (n, p) with d(F^p C^n) not inside F^p C^{n+1}, or nothing.
struct CompatibilityFailure {
    std::size_t n = 0;
    std::size_t p = 0;
};
std::vector<CompatibilityFailure> compatibility_failures(const ComplexTower& tower,
                                                         const std::vector<std::vector<Subspace>>& filt);

using Bidegree = std::pair<int, int>;  // (p, q)

struct Page {
    int r = 0;
    std::map<Bidegree, std::size_t> entries;
    std::map<Bidegree, BitMatrix> d;  // d_r out of (p, q), where the target is inside the computed range
    bool stable = false;

    [[nodiscard]] std::size_t dim(int p, int q) const;
};

/// Pages E_0..E_{r_max}; entries cover total degrees 0..n_max-1 of the tower.
std::vector<Page> compute_pages(const FilteredTower& f, int r_max);
/// Pages up to the first index beyond the filtration length, where they stop changing.
std::vector<Page> compute_pages_until_stable(const FilteredTower& f);

struct PageViolation {
    int r = 0;
    Bidegree at;
    std::string what;
};
/// dim E_{r+1} = dim ker d_r - dim im d_r, d_r o d_r = 0 and pages never grow.
std::vector<PageViolation> check_pages(const std::vector<Page>& pages);

struct ConvergenceEntry {
    std::size_t n = 0;
    std::size_t e_infinity = 0;
    std::size_t cohomology = 0;
    [[nodiscard]] bool ok() const { return e_infinity == cohomology; }
};
/// Sum over p + q = n of the stable page against the cohomology of the tower, n <= n_max-1.
std::vector<ConvergenceEntry> convergence_check(const FilteredTower& f, const std::vector<Page>& pages);

struct HsFiltration {
    FilteredTower filtered;
    AdaptedBasis adapted;
    BracketTable adapted_table;
    BimoduleSpec adapted_module;
    SubalgebraKind kind = SubalgebraKind::Subalgebra;
};

/// F^p CS^n = cochains vanishing on monomials with at least n-p+1 factors from h,
/// computed in the adapted basis.
HsFiltration hs_filtration(const BracketTable& t, const Subspace& h, const BimoduleSpec& m, std::size_t n_max);

struct ClosedFormEntry {
    int page = 0;
    int p = 0;
    int q = 0;
    std::size_t expected = 0;
    std::size_t actual = 0;
    [[nodiscard]] bool ok() const { return expected == actual; }
};

struct ClosedFormReport {
    std::vector<ClosedFormEntry> entries;  // pages 0, 1 and 2
    std::vector<std::size_t> ideal_cohomology;  // dim HS^q(h, M)
    [[nodiscard]] bool ok() const;
};

/// E_0 = Hom(S^q h, Hom(S^p q, M)), E_1 = Hom(S^p q, HS^q(h, M)) and E_2 = HS^p(q, HS^q(h, M)),
/// computed independently and compared with the pages of hs_filtration, for p + q <= n_max-1.
/// E_1 and E_2 entries are produced only when h is an ideal.
ClosedFormReport e2_closed_form_check(const HsFiltration& hs, const std::vector<Page>& pages);

/// Matrix of the extended Lie derivative of x on CS^n(h, M) for an ideal h = span of the first
/// k adapted basis vectors.
BitMatrix ideal_lie_derivative(const BracketTable& adapted_table, const BimoduleSpec& adapted_module, std::size_t k,
                               Elem x, std::size_t n);

}  // namespace commlie
