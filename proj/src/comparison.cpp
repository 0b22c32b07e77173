#include "commlie/comparison.hpp"

#include <algorithm>
#include <optional>

#include "commlie/cohomology.hpp"
#include "commlie/error.hpp"

namespace commlie {

namespace {

void require_class(bool lie_needed, const BracketTable& t, const char* what)
{
    const AlgebraClass cls = classify_algebra(t);
    if (lie_needed && !cls.lie()) fail(ErrorKind::Precondition, std::string(what) + ": algebra is not a Lie algebra");
    if (!lie_needed && !cls.commutative_lie())
        fail(ErrorKind::Precondition, std::string(what) + ": algebra is not a commutative Lie algebra");
}

BitMatrix select_columns(const BitMatrix& m, const std::vector<std::size_t>& cols)
{
    BitMatrix out(m.rows(), cols.size());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (m.get(r, cols[c])) out.set(r, c);
    return out;
}

// All words of length n over d letters, in tensor rank order.
std::vector<Word> tensor_words(std::size_t d, std::size_t n) { return MonomialBasis(Flavor::Tensor, d, n).words(); }

}  // namespace

// ---------------------------------------------------------------------------
// Relative complexes

const char* to_string(RelativeKind kind)
{
    switch (kind) {
    case RelativeKind::Lambda: return "rel-lambda";
    case RelativeKind::LambdaSym: return "rel-lambda-sym";
    case RelativeKind::Sym: return "rel-sym";
    }
    return "?";
}

Inclusion inclusion_of(RelativeKind kind)
{
    switch (kind) {
    case RelativeKind::Lambda: return Inclusion::I1;
    case RelativeKind::LambdaSym: return Inclusion::I2;
    case RelativeKind::Sym: return Inclusion::I3;
    }
    return Inclusion::I1;
}

Flavor sub_flavor(RelativeKind kind) { return kind == RelativeKind::Sym ? Flavor::Sym : Flavor::Ext; }

Flavor total_flavor(RelativeKind kind) { return kind == RelativeKind::LambdaSym ? Flavor::Sym : Flavor::Tensor; }

RelativeTower build_relative_complex(RelativeKind kind, const BracketTable& t, const BimoduleSpec& m, std::size_t n_max)
{
    require_class(kind != RelativeKind::Sym, t, to_string(kind));
    if (!m.symmetric()) fail(ErrorKind::Precondition, std::string(to_string(kind)) + ": coefficients must be a symmetric bimodule");

    const std::size_t top = n_max + 2;
    const std::size_t dm = m.dim();
    RelativeTower rel;
    rel.kind = kind;
    rel.algebra_dim = t.dim();
    rel.module_dim = dm;
    rel.sub = build_tower(sub_flavor(kind), t, m, top);
    rel.total = build_tower(total_flavor(kind), t, m, top);

    for (std::size_t n = 0; n <= top; ++n) {
        rel.inclusion.push_back(inclusion_matrix(inclusion_of(kind), t, m, n));
        Subspace k = kernel_basis(argument_quotient(inclusion_of(kind), t.dim(), n));
        rel.projection.push_back(k.basis().kron_identity(dm));
        BitMatrix lift(rel.total.dims[n], k.dim() * dm);
        for (std::size_t r = 0; r < k.dim(); ++r)
            for (std::size_t a = 0; a < dm; ++a) lift.set(k.pivots()[r] * dm + a, r * dm + a);
        rel.lift.push_back(std::move(lift));
        rel.kernel.push_back(std::move(k));
    }

    rel.tower.flavor = Flavor::Quotient;
    rel.tower.label = to_string(kind);
    for (std::size_t n = 0; n <= n_max; ++n) rel.tower.dims.push_back(rel.kernel[n + 2].dim() * dm);
    for (std::size_t n = 0; n < n_max; ++n)
        rel.tower.d.push_back(rel.projection[n + 3] * rel.total.d[n + 2] * rel.lift[n + 2]);
    check_tower(rel.tower);
    return rel;
}

std::vector<std::size_t> short_exactness_failures(const RelativeTower& rel)
{
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n < rel.total.dims.size(); ++n) {
        const BitMatrix& inc = rel.inclusion[n];
        const BitMatrix& proj = rel.projection[n];
        bool ok = rank(inc) == rel.sub.dims[n] && (proj * inc).is_zero() &&
                  rel.sub.dims[n] + proj.rows() == rel.total.dims[n] &&
                  proj * rel.lift[n] == BitMatrix::identity(proj.rows());
        if (n < rel.total.d.size()) {
            ok = ok && rel.total.d[n] * inc == rel.inclusion[n + 1] * rel.sub.d[n];
            const BitMatrix after = rel.projection[n + 1] * rel.total.d[n];
            if (n >= 2 && n - 2 < rel.tower.d.size())
                ok = ok && after == rel.tower.d[n - 2] * proj;
            else if (n < 2)
                ok = ok && after.is_zero();
        }
        if (!ok) out.push_back(n);
    }
    return out;
}

bool LesReport::ok() const
{
    return std::all_of(nodes.begin(), nodes.end(), [](const LesNode& n) { return n.exact(); });
}

LesReport long_exact_sequence_check(const RelativeTower& rel, std::size_t n_top)
{
    if (n_top > rel.tower.n_max())
        fail(ErrorKind::Precondition, "long exact sequence: degree " + std::to_string(n_top) + " exceeds the relative tower");

    std::vector<QuotientCoordinates> sub_h;
    std::vector<QuotientCoordinates> tot_h;
    std::vector<QuotientCoordinates> rel_h;
    for (std::size_t n = 0; n <= n_top + 1; ++n) {
        const auto s = cohomology_spaces(rel.sub, n);
        sub_h.emplace_back(s.cycles, s.boundaries);
        const auto c = cohomology_spaces(rel.total, n);
        tot_h.emplace_back(c.cycles, c.boundaries);
    }
    for (std::size_t n = 0; n + 2 <= n_top; ++n) {
        const auto r = cohomology_spaces(rel.tower, n);
        rel_h.emplace_back(r.cycles, r.boundaries);
    }

    LesReport report;
    for (std::size_t big = 0; big <= n_top; ++big) {
        LesMaps maps;
        maps.degree = big;
        maps.inclusion = induced_map(rel.inclusion[big], sub_h[big], tot_h[big]);
        if (big >= 2) {
            const QuotientCoordinates& rh = rel_h[big - 2];
            maps.projection = induced_map(rel.projection[big], tot_h[big], rh);
            const LinearSolver solver(rel.inclusion[big + 1]);
            maps.connecting = BitMatrix(sub_h[big + 1].dim(), rh.dim());
            for (std::size_t k = 0; k < rh.dim(); ++k) {
                const BitVector f = rel.lift[big].apply(rh.representatives().row_vector(k));
                const auto x = solver.solve(rel.total.d[big].apply(f));
                if (!x) fail(ErrorKind::Invariant, "connecting map: d of a lifted cocycle is not in the subcomplex");
                const BitVector coords = sub_h[big + 1].coords(*x);
                for (std::size_t i = 0; i < coords.size(); ++i)
                    if (coords.get(i)) maps.connecting.set(i, k);
            }
        } else {
            maps.projection = BitMatrix(0, tot_h[big].dim());
            maps.connecting = BitMatrix(sub_h[big + 1].dim(), 0);
        }
        report.maps.push_back(std::move(maps));
    }

    for (std::size_t big = 0; big <= n_top; ++big) {
        const LesMaps& cur = report.maps[big];
        LesNode sub{"sub", big, sub_h[big].dim(), 0, rank(cur.inclusion), true};
        if (big >= 3) {
            const BitMatrix& delta = report.maps[big - 1].connecting;
            sub.rank_in = rank(delta);
            sub.composition_zero = (cur.inclusion * delta).is_zero();
        }
        report.nodes.push_back(sub);

        LesNode tot{"total", big, tot_h[big].dim(), rank(cur.inclusion), rank(cur.projection),
                    (cur.projection * cur.inclusion).is_zero()};
        report.nodes.push_back(tot);

        if (big >= 2) {
            LesNode r{"rel", big - 2, rel_h[big - 2].dim(), rank(cur.projection), rank(cur.connecting),
                      (cur.connecting * cur.projection).is_zero()};
            report.nodes.push_back(r);
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Comparison filtrations

int comparison_filtration_offset(RelativeKind kind) { return kind == RelativeKind::Lambda ? 0 : 1; }

FilteredTower comparison_filtration(const RelativeTower& rel)
{
    const std::size_t dim_alg = rel.algebra_dim;
    const std::size_t dm = rel.module_dim;
    const bool alternating = rel.kind != RelativeKind::Sym;
    const Flavor arg_flavor = total_flavor(rel.kind);

    std::vector<std::vector<Subspace>> filt;
    for (std::size_t n = 0; n < rel.tower.dims.size(); ++n) {
        const std::size_t big = n + 2;
        const Subspace& k = rel.kernel[big];
        const MonomialBasis args(arg_flavor, dim_alg, big);
        const std::size_t ambient = args.size();
        auto coordinate = [&](const Word& w) { return *args.rank_of(w); };

        std::vector<Subspace> chain{Subspace::full(rel.tower.dims[n])};
        Subspace generated = Subspace::zero(ambient);
        for (std::size_t p = 1; p <= big - 1; ++p) {
            const std::size_t s = p - 1;  // new adjacent position pair (s, s+1)
            BitMatrix gens(0, ambient);
            for (const Word& w : tensor_words(dim_alg, big)) {
                if (alternating && w[s] == w[s + 1]) {
                    gens.append_row(BitVector::unit(ambient, coordinate(w)));
                } else if (w[s] < w[s + 1]) {
                    Word swapped = w;
                    std::swap(swapped[s], swapped[s + 1]);
                    BitVector v(ambient);
                    v.flip(coordinate(w));
                    v.flip(coordinate(swapped));
                    if (v.any()) gens.append_row(v);
                }
            }
            generated = sum(generated, Subspace::span(std::move(gens)));
            if (!k.contains(generated)) fail(ErrorKind::Invariant, "comparison filtration: generators leave the kernel");
            const BitMatrix constraint = select_columns(generated.basis(), k.pivots()).kron_identity(dm);
            chain.push_back(kernel_basis(constraint));
        }
        filt.push_back(std::move(chain));
    }
    return make_filtered_tower(rel.tower, std::move(filt), comparison_filtration_offset(rel.kind));
}

// ---------------------------------------------------------------------------
// CR complexes

const char* to_string(CrKind kind)
{
    switch (kind) {
    case CrKind::Lambda: return "cr-lambda";
    case CrKind::LambdaSym: return "cr-lambda-sym";
    case CrKind::Sym: return "cr-sym";
    }
    return "?";
}

CrTower build_cr_complex(CrKind kind, const BracketTable& t, std::size_t n_max)
{
    require_class(kind != CrKind::Sym, t, to_string(kind));
    const std::size_t d = t.dim();
    const Flavor flavor = kind == CrKind::Lambda ? Flavor::Ext : Flavor::Sym;
    const Flavor source = kind == CrKind::Sym ? Flavor::Sym : Flavor::Ext;
    const BimoduleSpec coad = symmetrize(coadjoint_module(t));
    const ComplexTower big = build_tower(flavor, t, coad, n_max + 1, "coadjoint");

    CrTower out;
    out.kind = kind;
    for (std::size_t n = 0; n <= n_max; ++n) {
        const std::size_t deg = n + 1;
        const MonomialBasis args(flavor, d, deg);
        const MonomialBasis src(source, d, deg + 1);
        BitMatrix pullback(args.size() * d, src.size());
        for (std::size_t u = 0; u < args.size(); ++u)
            for (std::size_t k = 0; k < d; ++k) {
                Word w = args.word(u);
                w.push_back(static_cast<std::uint8_t>(k));
                if (const auto r = src.rank_of(w)) pullback.set(u * d + k, *r);
            }
        if (rank(pullback) != src.size())
            fail(ErrorKind::Invariant, std::string(to_string(kind)) + ": product pullback is not injective in degree " +
                                           std::to_string(deg + 1));

        Subspace ambient = Subspace::full(args.size() * d);
        if (kind == CrKind::LambdaSym) {
            // Functionals on S^deg g (x) g that factor through Lambda^deg g v g.
            BitMatrix gens(0, args.size() * d);
            for (std::size_t u = 0; u < args.size(); ++u) {
                const Word& w = args.word(u);
                if (std::adjacent_find(w.begin(), w.end()) != w.end())
                    for (std::size_t k = 0; k < d; ++k) gens.append_row(BitVector::unit(args.size() * d, u * d + k));
            }
            const MonomialBasis heads(Flavor::Sym, d, deg - 1);
            for (const Word& head : heads.words())
                for (std::size_t a = 0; a < d; ++a)
                    for (std::size_t b = a + 1; b < d; ++b) {
                        Word wa = head;
                        wa.push_back(static_cast<std::uint8_t>(a));
                        Word wb = head;
                        wb.push_back(static_cast<std::uint8_t>(b));
                        BitVector v(args.size() * d);
                        v.flip(*args.rank_of(wa) * d + b);
                        v.flip(*args.rank_of(wb) * d + a);
                        gens.append_row(v);
                    }
            ambient = annihilator(Subspace::span(std::move(gens)));
        }
        Subspace img = image(pullback);
        if (!ambient.contains(img))
            fail(ErrorKind::Invariant, std::string(to_string(kind)) + ": product pullback leaves the ambient space");
        out.ambient.push_back(std::move(ambient));
        out.image.push_back(std::move(img));
    }

    out.tower.flavor = Flavor::Quotient;
    out.tower.label = to_string(kind);
    for (std::size_t n = 0; n <= n_max; ++n) out.tower.dims.push_back(out.ambient[n].dim() - out.image[n].dim());
    for (std::size_t n = 0; n < n_max; ++n) {
        const BitMatrix& dn = big.d[n + 1];
        if (!out.ambient[n + 1].contains(image_of(dn, out.ambient[n])) ||
            !out.image[n + 1].contains(image_of(dn, out.image[n])))
            fail(ErrorKind::Invariant, std::string(to_string(kind)) + ": d does not preserve the cokernel data in degree " +
                                           std::to_string(n));
        out.tower.d.push_back(induced_map(dn, out.ambient[n], out.image[n], out.ambient[n + 1], out.image[n + 1]));
    }
    check_tower(out.tower);
    return out;
}

// ---------------------------------------------------------------------------
// E_2 products

const char* to_string(ProductTheorem theorem)
{
    switch (theorem) {
    case ProductTheorem::LieLeibniz: return "lie-leibniz";
    case ProductTheorem::LieCommutative: return "lie-sym";
    case ProductTheorem::CommutativeLeibniz: return "sym-leibniz";
    }
    return "?";
}

RelativeKind relative_kind(ProductTheorem theorem)
{
    switch (theorem) {
    case ProductTheorem::LieLeibniz: return RelativeKind::Lambda;
    case ProductTheorem::LieCommutative: return RelativeKind::LambdaSym;
    case ProductTheorem::CommutativeLeibniz: return RelativeKind::Sym;
    }
    return RelativeKind::Lambda;
}

CrKind cr_kind(ProductTheorem theorem)
{
    switch (theorem) {
    case ProductTheorem::LieLeibniz: return CrKind::Lambda;
    case ProductTheorem::LieCommutative: return CrKind::LambdaSym;
    case ProductTheorem::CommutativeLeibniz: return CrKind::Sym;
    }
    return CrKind::Lambda;
}

Flavor factor_flavor(ProductTheorem theorem)
{
    return theorem == ProductTheorem::LieCommutative ? Flavor::Sym : Flavor::Tensor;
}

bool ProductReport::product_holds() const
{
    return std::all_of(entries.begin(), entries.end(), [](const ClosedFormEntry& e) { return e.ok(); });
}

bool ProductReport::internally_consistent() const
{
    return page_violations.empty() &&
           std::all_of(convergence.begin(), convergence.end(), [](const ConvergenceEntry& e) { return e.ok(); });
}

ProductReport verify_e2_product(ProductTheorem theorem, const BracketTable& t, const BimoduleSpec& m, std::size_t n_max)
{
    if (n_max == 0) fail(ErrorKind::Precondition, "E2 product: need n_max >= 1");
    ProductReport out;
    out.theorem = theorem;
    const RelativeTower rel = build_relative_complex(relative_kind(theorem), t, m, n_max);
    const FilteredTower f = comparison_filtration(rel);
    out.filtration_offset = f.index_offset;
    const auto pages = compute_pages(f, std::max(2, static_cast<int>(f.max_length()) + 1));
    out.page_violations = check_pages(pages);
    out.convergence = convergence_check(f, pages);
    out.hr = betti_table(build_cr_complex(cr_kind(theorem), t, n_max).tower).dims;
    out.factor = betti_table(build_tower(factor_flavor(theorem), t, m, n_max)).dims;
    out.relative = betti_table(rel.tower).dims;
    for (std::size_t n = 0; n < n_max; ++n)
        for (std::size_t p = 0; p <= n; ++p) {
            const int ip = static_cast<int>(p);
            const int iq = static_cast<int>(n - p);
            out.entries.push_back({2, ip, iq, out.hr[p] * out.factor[n - p], pages[2].dim(ip, iq)});
        }
    return out;
}

// ---------------------------------------------------------------------------
// Vanishing propagation

const char* to_string(PropagationTheorem theorem)
{
    switch (theorem) {
    case PropagationTheorem::LieToLeibniz: return "lie-to-leibniz";
    case PropagationTheorem::LieToCommutative: return "lie-to-sym";
    case PropagationTheorem::CommutativeToLeibniz: return "sym-to-leibniz";
    }
    return "?";
}

PropagationVerdict propagation_check(PropagationTheorem theorem, const BracketTable& t, const BimoduleSpec& m,
                                     std::size_t n_max)
{
    const Flavor lower = theorem == PropagationTheorem::CommutativeToLeibniz ? Flavor::Sym : Flavor::Ext;
    const Flavor upper = theorem == PropagationTheorem::LieToCommutative ? Flavor::Sym : Flavor::Tensor;
    require_class(theorem != PropagationTheorem::CommutativeToLeibniz, t, to_string(theorem));

    PropagationVerdict v;
    v.theorem = theorem;
    v.lower = betti_table(build_tower(lower, t, m, n_max)).dims;
    v.upper = betti_table(build_tower(upper, t, m, n_max)).dims;
    const int top = static_cast<int>(v.lower.size()) - 1;

    auto zero_window = [](const std::vector<std::size_t>& dims) {
        int w = -1;
        while (w + 1 < static_cast<int>(dims.size()) && dims[w + 1] == 0) ++w;
        return w;
    };
    v.window = zero_window(v.lower);
    if (v.window >= 0) {
        for (int k = 0; k <= v.window; ++k)
            if (v.upper[k] != 0) {
                v.holds = false;
                v.detail += "upper degree " + std::to_string(k) + " is nonzero; ";
            }
        for (int k = v.window + 1; k <= std::min(v.window + 2, top); ++k)
            if (v.upper[k] != v.lower[k]) {
                v.holds = false;
                v.detail += "degree " + std::to_string(k) + ": " + std::to_string(v.upper[k]) +
                            " != " + std::to_string(v.lower[k]) + "; ";
            }
    }
    v.converse_window = zero_window(v.upper);
    for (int k = 0; k <= v.converse_window; ++k)
        if (v.lower[k] != 0) {
            v.converse_holds = false;
            v.detail += "converse: lower degree " + std::to_string(k) + " is nonzero; ";
        }
    return v;
}

}  // namespace commlie
