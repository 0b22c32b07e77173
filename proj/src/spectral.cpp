#include "commlie/spectral.hpp"

#include <algorithm>
#include <tuple>

#include "commlie/error.hpp"

namespace commlie {

// ---------------------------------------------------------------------------
// Filtered towers

std::size_t FilteredTower::max_length() const
{
    std::size_t len = 0;
    for (std::size_t n = 0; n < filt.size(); ++n) len = std::max(len, length(n));
    return len;
}

const Subspace& FilteredTower::step(std::size_t n, int p) const
{
    const auto& chain = filt[n];
    if (p <= 0) return chain.front();
    return chain[std::min(static_cast<std::size_t>(p), chain.size() - 1)];
}

std::vector<CompatibilityFailure> compatibility_failures(const ComplexTower& tower,
                                                         const std::vector<std::vector<Subspace>>& filt)
{
    std::vector<CompatibilityFailure> out;
    for (std::size_t n = 0; n < tower.d.size(); ++n)
        for (std::size_t p = 0; p < filt[n].size(); ++p) {
            const Subspace& target = filt[n + 1][std::min(p, filt[n + 1].size() - 1)];
            if (!target.contains(image_of(tower.d[n], filt[n][p]))) out.push_back({n, p});
        }
    return out;
}

FilteredTower make_filtered_tower(ComplexTower tower, std::vector<std::vector<Subspace>> filt, int index_offset)
{
    check_tower(tower);
    if (filt.size() != tower.dims.size())
        fail(ErrorKind::Dimension, "filtration: need one chain per degree of the tower");
    for (std::size_t n = 0; n < filt.size(); ++n) {
        const auto& chain = filt[n];
        if (chain.empty()) fail(ErrorKind::Dimension, "filtration: empty chain in degree " + std::to_string(n));
        for (const auto& s : chain)
            if (s.ambient_dim() != tower.dims[n])
                fail(ErrorKind::Dimension, "filtration: step lives in the wrong space in degree " + std::to_string(n));
        if (chain.front().dim() != tower.dims[n])
            fail(ErrorKind::Invariant, "filtration: F^0 is not the whole space in degree " + std::to_string(n));
        if (chain.back().dim() != 0)
            fail(ErrorKind::Invariant, "filtration: last step is not zero in degree " + std::to_string(n));
        for (std::size_t p = 0; p + 1 < chain.size(); ++p)
            if (!chain[p].contains(chain[p + 1]))
                fail(ErrorKind::Invariant, "filtration: not decreasing at F^" + std::to_string(p + 1) + " in degree " +
                                               std::to_string(n));
    }
    const auto bad = compatibility_failures(tower, filt);
    if (!bad.empty())
        fail(ErrorKind::Invariant, "filtration: d(F^" + std::to_string(bad.front().p) + ") leaves F^" +
                                       std::to_string(bad.front().p) + " in degree " + std::to_string(bad.front().n));
    return FilteredTower{std::move(tower), std::move(filt), index_offset};
}

// ---------------------------------------------------------------------------
// Pages

std::size_t Page::dim(int p, int q) const
{
    const auto it = entries.find({p, q});
    return it == entries.end() ? 0 : it->second;
}

namespace {

class PageEngine {
public:
    explicit PageEngine(const FilteredTower& f) : f_(f), top_(f.tower.d.size()) {}

    // Z^p with target index t: F^p(n) ∩ d^{-1} F^t(n+1).
    const Subspace& z(int p, int t, std::size_t n)
    {
        const int len_n = static_cast<int>(f_.length(n));
        const int len_next = static_cast<int>(f_.length(n + 1));
        p = std::clamp(p, 0, len_n);
        t = std::clamp(t, 0, len_next);
        const auto key = std::make_tuple(p, t, n);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        const Subspace& fp = f_.step(n, p);
        Subspace value = t == 0 ? fp : intersect(fp, preimage(f_.tower.d[n], f_.step(n + 1, t)));
        return cache_.emplace(key, std::move(value)).first->second;
    }

    // E_r^p(n) = Z_r^p / B_r^p.
    std::pair<Subspace, Subspace> page_spaces(int r, int p, std::size_t n)
    {
        const Subspace upper = z(p, p + r, n);
        Subspace lower = z(p + 1, p + r, n);
        if (n > 0) lower = sum(lower, image_of(f_.tower.d[n - 1], z(p - r + 1, p, n - 1)));
        return {upper, lower};
    }

    Page page(int r)
    {
        Page out;
        out.r = r;
        for (std::size_t n = 0; n < top_; ++n) {
            for (int p = 0; p < static_cast<int>(f_.length(n)); ++p) {
                const auto [upper, lower] = page_spaces(r, p, n);
                out.entries[{p, static_cast<int>(n) - p}] = upper.dim() - lower.dim();
            }
        }
        for (std::size_t n = 0; n + 1 < top_; ++n)
            for (int p = 0; p < static_cast<int>(f_.length(n)); ++p) {
                const int target = p + r;
                if (target >= static_cast<int>(f_.length(n + 1))) continue;
                const auto [za, zb] = page_spaces(r, p, n);
                const auto [zc, zd] = page_spaces(r, target, n + 1);
                out.d[{p, static_cast<int>(n) - p}] = induced_map(f_.tower.d[n], za, zb, zc, zd);
            }
        out.stable = r > static_cast<int>(f_.max_length());
        return out;
    }

private:
    const FilteredTower& f_;
    std::size_t top_;  // total degrees 0..top_-1 are computed
    std::map<std::tuple<int, int, std::size_t>, Subspace> cache_;
};

}  // namespace

std::vector<Page> compute_pages(const FilteredTower& f, int r_max)
{
    PageEngine engine(f);
    std::vector<Page> pages;
    for (int r = 0; r <= r_max; ++r) pages.push_back(engine.page(r));
    return pages;
}

std::vector<Page> compute_pages_until_stable(const FilteredTower& f)
{
    return compute_pages(f, static_cast<int>(f.max_length()) + 1);
}

std::vector<PageViolation> check_pages(const std::vector<Page>& pages)
{
    std::vector<PageViolation> out;
    int top = -1;  // highest total degree with entries
    if (!pages.empty())
        for (const auto& [pq, dim] : pages.front().entries) top = std::max(top, pq.first + pq.second);

    auto d_of = [](const Page& page, Bidegree at) -> const BitMatrix* {
        const auto it = page.d.find(at);
        return it == page.d.end() ? nullptr : &it->second;
    };

    for (std::size_t i = 0; i < pages.size(); ++i) {
        const Page& page = pages[i];
        const int r = page.r;
        for (const auto& [pq, mat] : page.d) {
            const Bidegree next{pq.first + r, pq.second - r + 1};
            if (const BitMatrix* after = d_of(page, next); after && !((*after) * mat).is_zero())
                out.push_back({r, pq, "d_r o d_r != 0"});
        }
        if (i + 1 == pages.size()) continue;
        const Page& next_page = pages[i + 1];
        for (const auto& [pq, dim] : page.entries) {
            const int n = pq.first + pq.second;
            if (next_page.dim(pq.first, pq.second) > dim) out.push_back({r, pq, "page grew"});
            if (n + 1 > top) continue;  // outgoing differential lies beyond the computed range
            const BitMatrix* outgoing = d_of(page, pq);
            const BitMatrix* incoming = d_of(page, {pq.first - r, pq.second + r - 1});
            const std::size_t ker = dim - (outgoing ? rank(*outgoing) : 0);
            const std::size_t im = incoming ? rank(*incoming) : 0;
            if (next_page.dim(pq.first, pq.second) != ker - im)
                out.push_back({r, pq, "E_{r+1} is not the cohomology of (E_r, d_r)"});
        }
    }
    return out;
}

std::vector<ConvergenceEntry> convergence_check(const FilteredTower& f, const std::vector<Page>& pages)
{
    if (pages.empty()) fail(ErrorKind::Precondition, "convergence check needs at least one page");
    const BettiTable betti = betti_table(f.tower);
    const Page& last = pages.back();
    std::vector<ConvergenceEntry> out;
    for (std::size_t n = 0; n < betti.dims.size(); ++n) {
        ConvergenceEntry e{n, 0, betti.dims[n]};
        for (const auto& [pq, dim] : last.entries)
            if (pq.first + pq.second == static_cast<int>(n)) e.e_infinity += dim;
        out.push_back(e);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hochschild-Serre filtration

HsFiltration hs_filtration(const BracketTable& t, const Subspace& h, const BimoduleSpec& m, std::size_t n_max)
{
    HsFiltration out;
    out.kind = is_ideal(t, h);
    if (out.kind == SubalgebraKind::NotSubalgebra) fail(ErrorKind::Precondition, "hs filtration: subspace is not a subalgebra");
    out.adapted = adapted_basis(h);
    out.adapted_table = change_basis(t, out.adapted.basis);
    out.adapted_module = change_basis(m, out.adapted.basis);
    ComplexTower tower = build_tower(Flavor::Sym, out.adapted_table, out.adapted_module, n_max, "sym (adapted basis)");

    const std::size_t k = out.adapted.h_dim;
    const std::size_t dm = m.dim();
    std::vector<std::vector<Subspace>> filt;
    for (std::size_t n = 0; n <= n_max; ++n) {
        const MonomialBasis basis(Flavor::Sym, t.dim(), n);
        std::vector<std::size_t> h_count(basis.size());
        for (std::size_t u = 0; u < basis.size(); ++u)
            h_count[u] = static_cast<std::size_t>(
                std::count_if(basis.word(u).begin(), basis.word(u).end(), [&](std::uint8_t l) { return l < k; }));
        std::vector<Subspace> chain;
        for (std::size_t p = 0; p <= n + 1; ++p) {
            std::vector<std::size_t> coords;
            for (std::size_t u = 0; u < basis.size(); ++u)
                if (h_count[u] + p <= n)
                    for (std::size_t a = 0; a < dm; ++a) coords.push_back(u * dm + a);
            chain.push_back(Subspace::coordinate(coords, tower.dims[n]));
        }
        filt.push_back(std::move(chain));
    }
    out.filtered = make_filtered_tower(std::move(tower), std::move(filt));
    return out;
}

BitMatrix ideal_lie_derivative(const BracketTable& adapted_table, const BimoduleSpec& adapted_module, std::size_t k,
                               Elem x, std::size_t n)
{
    BitMatrix ad(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        const Elem v = adapted_table.bracket(x, basis_elem(j));
        if (k < kMaxAlgebraDim && (v >> k) != 0) fail(ErrorKind::Precondition, "Lie derivative: [x, h] is not inside h");
        for (std::size_t i = 0; i < k; ++i)
            if ((v >> i) & 1U) ad.set(i, j);
    }
    return lie_derivative_matrix(Flavor::Sym, k, n, ad, adapted_module.left_action(x));
}

bool ClosedFormReport::ok() const
{
    return std::all_of(entries.begin(), entries.end(), [](const ClosedFormEntry& e) { return e.ok(); });
}

ClosedFormReport e2_closed_form_check(const HsFiltration& hs, const std::vector<Page>& pages)
{
    if (pages.size() < 3) fail(ErrorKind::Precondition, "closed-form check needs pages E_0, E_1 and E_2");
    const std::size_t d = hs.adapted_table.dim();
    const std::size_t k = hs.adapted.h_dim;
    const std::size_t dq = d - k;
    const std::size_t dm = hs.adapted_module.dim();
    const std::size_t top = hs.filtered.tower.d.size();  // total degrees 0..top-1

    // h with its restricted coefficients, in the first k adapted coordinates.
    BracketTable h_table(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) h_table.set(i, j, hs.adapted_table.at(i, j));
    BimoduleSpec h_module;
    h_module.left.dim = dm;
    for (std::size_t i = 0; i < k; ++i) {
        h_module.left.rho.push_back(hs.adapted_module.left.rho[i]);
        h_module.sigma.push_back(hs.adapted_module.sigma[i]);
    }
    const ComplexTower h_tower = build_tower(Flavor::Sym, h_table, h_module, top, "sym(h)");
    ClosedFormReport report;
    report.ideal_cohomology = betti_table(h_tower).dims;

    for (std::size_t n = 0; n < top; ++n)
        for (std::size_t p = 0; p <= n; ++p) {
            const std::size_t q = n - p;
            const int ip = static_cast<int>(p);
            const int iq = static_cast<int>(q);
            report.entries.push_back({0, ip, iq, basis_dim(Flavor::Sym, k, q) * basis_dim(Flavor::Sym, dq, p) * dm,
                                      pages[0].dim(ip, iq)});
            if (hs.kind == SubalgebraKind::Ideal)
                report.entries.push_back(
                    {1, ip, iq, basis_dim(Flavor::Sym, dq, p) * report.ideal_cohomology[q], pages[1].dim(ip, iq)});
        }

    if (hs.kind != SubalgebraKind::Ideal) return report;

    BracketTable q_table(dq);
    for (std::size_t a = 0; a < dq; ++a)
        for (std::size_t b = 0; b < dq; ++b) q_table.set(a, b, hs.adapted_table.at(k + a, k + b) >> k);

    for (std::size_t q = 0; q < top; ++q) {
        ModuleSpec v{report.ideal_cohomology[q], {}};
        for (std::size_t a = 0; a < dq; ++a) {
            const BitMatrix lx = ideal_lie_derivative(hs.adapted_table, hs.adapted_module, k, basis_elem(k + a), q);
            v.rho.push_back(induced_cohomology_action(lx, h_tower, q));
        }
        const AxiomVerdict verdict = check_module_axioms(q_table, v);
        if (!verdict) fail(ErrorKind::Invariant, "induced action on HS^" + std::to_string(q) + "(h, M): " + verdict.describe());
        const std::size_t p_top = top - q;  // p + q <= top - 1
        std::vector<std::size_t> hp(p_top, 0);
        if (v.dim > 0) hp = betti_table(build_tower(Flavor::Sym, q_table, symmetrize(v), p_top)).dims;
        for (std::size_t p = 0; p < p_top; ++p)
            report.entries.push_back({2, static_cast<int>(p), static_cast<int>(q), hp[p],
                                      pages[2].dim(static_cast<int>(p), static_cast<int>(q))});
    }
    return report;
}

}  // namespace commlie
