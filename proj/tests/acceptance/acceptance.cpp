// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance            runs every criterion
//   acceptance 3 7        runs criteria 3 and 7
//
// The exit status is nonzero when any selected criterion fails.

#include <algorithm>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commlie/catalog.hpp"
#include "commlie/cohomology.hpp"
#include "commlie/comparison.hpp"
#include "commlie/spectral.hpp"
#include "commlie/survey.hpp"
#include "support.hpp"

using namespace commlie;
using commlie::testing::random_commutative_lie;
using commlie::testing::random_module;

namespace {

// Collects failures of one criterion; the first few are kept for the report line.
class Tally {
public:
    void expect(bool ok, const std::string& what)
    {
        ++checks_;
        if (ok) return;
        if (failures_.size() < 4) failures_.push_back(what);
        ++failed_;
    }

    void note(const std::string& what) { notes_.push_back(what); }

    [[nodiscard]] bool passed() const { return failed_ == 0 && checks_ > 0; }

    [[nodiscard]] std::string summary() const
    {
        std::ostringstream os;
        os << checks_ - failed_ << "/" << checks_ << " checks";
        for (const auto& n : notes_) os << "; " << n;
        if (failed_ > 0) {
            os << "; failures:";
            for (const auto& f : failures_) os << " [" << f << "]";
            if (failed_ > failures_.size()) os << " and " << failed_ - failures_.size() << " more";
        }
        return os.str();
    }

private:
    std::size_t checks_ = 0;
    std::size_t failed_ = 0;
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

std::string join(const std::vector<std::size_t>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

const std::vector<std::string> catalog = {"N", "a", "heis3", "abelian(1)", "abelian(2)", "abelian(3)"};

std::vector<RelativeKind> relative_kinds(const BracketTable& t)
{
    const auto c = classify_algebra(t);
    std::vector<RelativeKind> out;
    if (c.lie()) out = {RelativeKind::Lambda, RelativeKind::LambdaSym};
    if (c.commutative_lie()) out.push_back(RelativeKind::Sym);
    return out;
}

// Relative degrees use tensor words of length n + 2; three-dimensional algebras stop earlier.
std::size_t relative_top(std::size_t d, std::size_t wanted) { return d >= 3 ? std::min<std::size_t>(wanted, 5) : wanted; }

struct Instance {
    std::string label;
    BracketTable table;
    BimoduleSpec module;
};

// Catalog algebras with every prebuilt module, then seeded random (algebra, module) pairs.
std::vector<Instance> instances(std::size_t random_count, std::uint64_t seed)
{
    std::vector<Instance> out;
    for (const auto& name : catalog) {
        const auto alg = load_catalog(name);
        for (const auto& [mod, m] : alg.modules) out.push_back({name + "/" + mod, alg.table, m});
    }
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < random_count; ++i) {
        const std::size_t d = 1 + rng() % 3;
        const auto t = random_commutative_lie(rng, d, rng() % 2 == 0);
        out.push_back({"random#" + std::to_string(i), t, symmetrize(random_module(rng, t, 1 + rng() % 2))});
    }
    return out;
}

Tally differential_squares_to_zero()
{
    Tally tally;
    const auto all = instances(100, 0xd1ff);
    for (const auto& in : all) {
        const bool lie = classify_algebra(in.table).lie();
        for (Flavor f : {Flavor::Sym, Flavor::Ext, Flavor::Tensor}) {
            if (f == Flavor::Ext && !lie) continue;
            tally.expect(composes_to_zero(build_tower(f, in.table, in.module, 6)), in.label + " " + to_string(f));
        }
    }
    tally.note(std::to_string(all.size()) + " (algebra, module) pairs");
    return tally;
}

Tally cartan_relation()
{
    Tally tally;
    for (const auto& in : instances(40, 0xca27)) {
        const auto& t = in.table;
        const auto& m = in.module;
        for (std::size_t x = 0; x < t.dim(); ++x)
            for (std::size_t n = 0; n <= 5; ++n) {
                const Elem e = basis_elem(x);
                const BitMatrix lie = operator_matrix(OperatorKind::LieDerivative, e, Flavor::Sym, t, m, n);
                BitMatrix rhs = operator_matrix(OperatorKind::Insertion, e, Flavor::Sym, t, m, n + 1) *
                                differential_matrix(Flavor::Sym, t, m, n);
                if (n > 0)
                    rhs = rhs + differential_matrix(Flavor::Sym, t, m, n - 1) *
                                    operator_matrix(OperatorKind::Insertion, e, Flavor::Sym, t, m, n);
                tally.expect(lie == rhs, in.label + " x=" + std::to_string(x) + " n=" + std::to_string(n));
            }
    }
    return tally;
}

// Named subspaces of the catalog plus random subalgebras of random algebras.
struct SubalgebraCase {
    std::string label;
    BracketTable table;
    BimoduleSpec module;
    Subspace h;
};

std::vector<SubalgebraCase> subalgebra_cases()
{
    std::vector<SubalgebraCase> out;
    for (const char* name : {"N", "a", "heis3"}) {
        const auto alg = load_catalog(name);
        for (const auto& [sname, s] : alg.subspaces) {
            if (is_ideal(alg.table, s) == SubalgebraKind::NotSubalgebra) continue;
            for (const auto& [mod, m] : alg.modules) out.push_back({std::string(name) + "/" + sname + "/" + mod, alg.table, m, s});
        }
    }
    std::mt19937_64 rng(0x5ab);
    while (out.size() < 60) {
        const std::size_t d = 2 + rng() % 2;
        const auto t = random_commutative_lie(rng, d);
        const auto h = commlie::testing::random_subspace(rng, d, 1 + rng() % (d - 1));
        if (h.dim() == 0 || is_ideal(t, h) == SubalgebraKind::NotSubalgebra) continue;
        out.push_back({"random#" + std::to_string(out.size()), t, symmetrize(random_module(rng, t, 1 + rng() % 2)), h});
    }
    return out;
}

Tally filtration_compatibility()
{
    Tally tally;
    for (const auto& c : subalgebra_cases()) {
        const auto hs = hs_filtration(c.table, c.h, c.module, 5);
        tally.expect(compatibility_failures(hs.filtered.tower, hs.filtered.filt).empty(), "hs " + c.label);
    }
    for (const auto& name : catalog) {
        const auto alg = load_catalog(name);
        for (const auto& [mod, m] : alg.modules)
            for (RelativeKind k : relative_kinds(alg.table)) {
                const auto f = comparison_filtration(build_relative_complex(k, alg.table, m, relative_top(alg.dim(), 5)));
                tally.expect(compatibility_failures(f.tower, f.filt).empty(), name + "/" + mod + " " + to_string(k));
            }
    }
    return tally;
}

struct IdealCase {
    std::string label;
    BracketTable table;
    BimoduleSpec module;
    Subspace h;
};

std::vector<IdealCase> ideal_cases()
{
    std::vector<IdealCase> out;
    const std::vector<std::pair<const char*, std::vector<std::string>>> ideals = {
        {"N", {"e"}}, {"a", {"e"}}, {"abelian(2)", {"x1"}}, {"abelian(3)", {"x1", "x1,x2"}}};
    for (const auto& [name, specs] : ideals) {
        const auto alg = load_catalog(name);
        for (const auto& spec : specs)
            for (const char* mod : {"trivial", "F1"}) {
                if (!alg.has_module(mod)) continue;
                out.push_back({std::string(name) + "/" + spec + "/" + mod, alg.table, alg.module(mod), alg.subspace(spec)});
            }
    }
    return out;
}

Tally page_identifications()
{
    Tally tally;
    std::size_t entries = 0;
    for (const auto& c : ideal_cases()) {
        tally.expect(is_ideal(c.table, c.h) == SubalgebraKind::Ideal, c.label + " is an ideal");
        const auto hs = hs_filtration(c.table, c.h, c.module, 6);
        const auto pages = compute_pages_until_stable(hs.filtered);
        const auto report = e2_closed_form_check(hs, pages);
        for (int page : {0, 1, 2})
            tally.expect(std::any_of(report.entries.begin(), report.entries.end(), [&](const auto& e) { return e.page == page; }),
                         c.label + " has E" + std::to_string(page) + " entries");
        for (const auto& e : report.entries)
            tally.expect(e.ok(), c.label + " E" + std::to_string(e.page) + "(" + std::to_string(e.p) + "," +
                                     std::to_string(e.q) + ") " + std::to_string(e.actual) + " != " +
                                     std::to_string(e.expected));
        entries += report.entries.size();
    }
    tally.note(std::to_string(entries) + " page entries");
    return tally;
}

void expect_convergence(Tally& tally, const FilteredTower& f, const std::string& label)
{
    const auto pages = compute_pages_until_stable(f);
    tally.expect(check_pages(pages).empty(), label + " page structure");
    for (const auto& e : convergence_check(f, pages))
        tally.expect(e.ok(), label + " n=" + std::to_string(e.n) + " E_inf " + std::to_string(e.e_infinity) +
                                 " != H " + std::to_string(e.cohomology));
}

Tally convergence()
{
    Tally tally;
    std::size_t towers = 0;
    for (const auto& c : subalgebra_cases()) {
        expect_convergence(tally, hs_filtration(c.table, c.h, c.module, 7).filtered, "hs " + c.label);
        ++towers;
    }
    for (const auto& c : ideal_cases()) {
        expect_convergence(tally, hs_filtration(c.table, c.h, c.module, 7).filtered, "hs " + c.label);
        ++towers;
    }
    for (const auto& name : catalog) {
        const auto alg = load_catalog(name);
        for (const auto& [mod, m] : alg.modules)
            for (RelativeKind k : relative_kinds(alg.table)) {
                const auto rel = build_relative_complex(k, alg.table, m, relative_top(alg.dim(), 7));
                expect_convergence(tally, comparison_filtration(rel), name + "/" + mod + " " + to_string(k));
                ++towers;
            }
    }
    tally.note(std::to_string(towers) + " filtered towers");
    return tally;
}

Tally two_route_examples()
{
    Tally tally;
    for (const char* name : {"N", "a"}) {
        const auto alg = load_catalog(name);
        const auto& m = alg.module("trivial");
        const auto direct = betti_table(build_tower(Flavor::Sym, alg.table, m, 9)).dims;
        const auto hs = hs_filtration(alg.table, alg.subspace("e"), m, 9);
        const auto pages = compute_pages_until_stable(hs.filtered);
        std::vector<std::size_t> e_inf;
        for (const auto& e : convergence_check(hs.filtered, pages)) e_inf.push_back(e.e_infinity);
        tally.expect(direct.size() == 9 && direct == e_inf, std::string(name) + " direct " + join(direct) + " vs E_inf " + join(e_inf));

        std::vector<std::size_t> disagree;
        for (std::size_t n = 0; n < direct.size(); ++n)
            if (direct[n] != (n % 4 == 0 ? n + 1 : 0)) disagree.push_back(n);
        tally.note(std::string(name) + " HS=" + join(direct) + ", published closed form differs at n=" +
                   (disagree.empty() ? "none" : join(disagree)) + " (informational)");
    }
    return tally;
}

Tally vanishing_with_f1()
{
    Tally tally;
    std::size_t count = 0;
    bool abelian2 = false;
    for (std::size_t d = 1; d <= max_survey_dim; ++d)
        for (auto code : survey_enumerate({d, false, 1}).raw_codes) {
            const auto t = decode_candidate(d, code);
            for (const auto& in : ideal_f1_instances(t)) {
                const auto betti = betti_table(build_tower(Flavor::Sym, t, symmetrize(f_lambda(t, in.lambda)), 7)).dims;
                tally.expect(std::all_of(betti.begin(), betti.end(), [](auto v) { return v == 0; }),
                             "d=" + std::to_string(d) + " code " + std::to_string(code) + " HS=" + join(betti));
                ++count;
                abelian2 = abelian2 || (d == 2 && code == 0);
            }
        }
    tally.expect(abelian2, "abelian(2) instance exists");
    tally.note(std::to_string(count) + " instances");
    return tally;
}

Tally propagation()
{
    Tally tally;
    std::size_t applied = 0;
    for (const auto& name : catalog) {
        const auto alg = load_catalog(name);
        const bool lie = classify_algebra(alg.table).lie();
        for (const auto& [mod, m] : alg.modules) {
            if (!m.symmetric()) continue;
            for (auto th : {PropagationTheorem::LieToLeibniz, PropagationTheorem::LieToCommutative,
                            PropagationTheorem::CommutativeToLeibniz}) {
                if (th != PropagationTheorem::CommutativeToLeibniz && !lie) continue;
                const auto v = propagation_check(th, alg.table, m, alg.dim() >= 3 ? 6 : 7);
                if (!v.applies()) continue;
                ++applied;
                tally.expect(v.holds, name + "/" + mod + " " + to_string(th) + ": " + v.detail);
            }
        }
    }

    // Lie algebras with a one-dimensional ideal acting by 1 on F1.
    std::size_t lie_instances = 0;
    for (std::size_t d = 1; d <= max_survey_dim; ++d)
        for (auto code : survey_enumerate({d, false, 1}).raw_codes) {
            const auto t = decode_candidate(d, code);
            if (!classify_algebra(t).lie()) continue;
            for (const auto& in : ideal_f1_instances(t)) {
                const auto m = symmetrize(f_lambda(t, in.lambda));
                for (Flavor f : {Flavor::Ext, Flavor::Sym, Flavor::Tensor}) {
                    const auto betti = betti_table(build_tower(f, t, m, 7)).dims;
                    tally.expect(std::all_of(betti.begin(), betti.end(), [](auto v) { return v == 0; }),
                                 "d=" + std::to_string(d) + " code " + std::to_string(code) + " " + to_string(f) + "=" + join(betti));
                }
                ++lie_instances;
            }
        }
    tally.expect(lie_instances > 0, "Lie instances with F1 exist");
    tally.note(std::to_string(applied) + " propagation windows, " + std::to_string(lie_instances) + " Lie F1 instances");
    return tally;
}

Tally les_exactness()
{
    Tally tally;
    for (const auto& name : catalog) {
        const auto alg = load_catalog(name);
        const std::size_t top = relative_top(alg.dim(), 5);
        for (const auto& [mod, m] : alg.modules)
            for (RelativeKind k : relative_kinds(alg.table)) {
                const auto les = long_exact_sequence_check(build_relative_complex(k, alg.table, m, top), top);
                for (const auto& node : les.nodes)
                    tally.expect(node.exact(), name + "/" + mod + " " + to_string(k) + " " + node.space + "^" +
                                                   std::to_string(node.degree));
            }
    }
    return tally;
}

Tally e2_products()
{
    Tally tally;
    for (const char* name : {"abelian(1)", "abelian(2)"}) {
        const auto alg = load_catalog(name);
        for (const auto& [mod, m] : alg.modules)
            for (auto th : {ProductTheorem::LieLeibniz, ProductTheorem::LieCommutative, ProductTheorem::CommutativeLeibniz}) {
                const auto r = verify_e2_product(th, alg.table, m, 5);
                tally.expect(r.internally_consistent(), std::string(name) + "/" + mod + " " + to_string(th) + " consistency");
                for (const auto& e : r.entries)
                    tally.expect(e.ok(), std::string(name) + "/" + mod + " " + to_string(th) + " E2(" + std::to_string(e.p) +
                                             "," + std::to_string(e.q) + ")=" + std::to_string(e.actual) +
                                             " product=" + std::to_string(e.expected));
            }
    }
    for (const char* name : {"N", "a"}) {
        const auto alg = load_catalog(name);
        const bool lie = classify_algebra(alg.table).lie();
        std::size_t total = 0;
        std::size_t mismatched = 0;
        for (const auto& [mod, m] : alg.modules)
            for (auto th : {ProductTheorem::LieLeibniz, ProductTheorem::LieCommutative, ProductTheorem::CommutativeLeibniz}) {
                if (th != ProductTheorem::CommutativeLeibniz && !lie) continue;
                const auto r = verify_e2_product(th, alg.table, m, 5);
                for (const auto& e : r.entries) {
                    ++total;
                    mismatched += e.ok() ? 0 : 1;
                }
            }
        tally.note(std::string(name) + ": " + std::to_string(mismatched) + "/" + std::to_string(total) +
                   " E2 entries differ from the product (informational)");
    }
    return tally;
}

Tally structural_facts()
{
    Tally tally;
    const auto n = load_catalog("N");
    const Subspace leib = leibniz_kernel(n.table);
    tally.expect(leib == n.subspace("e"), "Leib(N) = span{e}");
    const auto q = quotient_algebra(n.table, leib);
    bool abelian = true;
    for (std::size_t i = 0; i < q.q.dim(); ++i)
        for (std::size_t j = 0; j < q.q.dim(); ++j) abelian = abelian && q.q.at(i, j) == 0;
    tally.expect(abelian, "N/Leib(N) abelian");

    const auto cn = classify_algebra(n.table);
    tally.expect(cn.commutative && !cn.alternating && cn.jacobi, "N is commutative, not alternating, Jacobi");
    const auto ca = classify_algebra(load_catalog("a").table);
    tally.expect(ca.commutative && ca.alternating && ca.jacobi, "a is alternating");

    const auto one = survey_enumerate({1, false, 1});
    tally.expect(one.raw_count() == 2, "survey d=1 raw count " + std::to_string(one.raw_count()) + ", expected 2");

    const auto reference = survey_enumerate({2, true, 1});
    for (std::size_t jobs : {1, 2, 4})
        for (int run = 0; run < 2; ++run) {
            const auto s = survey_enumerate({2, true, jobs});
            std::vector<std::uint64_t> codes, ref_codes;
            for (const auto& o : s.orbits) codes.push_back(o.code);
            for (const auto& o : reference.orbits) ref_codes.push_back(o.code);
            tally.expect(s.raw_codes == reference.raw_codes && codes == ref_codes,
                         "survey d=2 stable with jobs=" + std::to_string(jobs));
        }
    tally.note("d=2 raw " + std::to_string(reference.raw_count()) + ", orbits " + std::to_string(reference.orbit_count()));
    return tally;
}

struct Criterion {
    const char* name;
    std::function<Tally()> run;
};

const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> all = {
        {"differential squares to zero", differential_squares_to_zero},
        {"Cartan relation", cartan_relation},
        {"filtration compatibility", filtration_compatibility},
        {"E0/E1/E2 identifications", page_identifications},
        {"convergence", convergence},
        {"two-route HS of N and a", two_route_examples},
        {"vanishing with F1 coefficients", vanishing_with_f1},
        {"vanishing propagation", propagation},
        {"long exact sequences", les_exactness},
        {"E2 product decomposition", e2_products},
        {"structural facts", structural_facts},
    };
    return all;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Acceptance criteria"};
    std::vector<std::size_t> selected;
    app.add_option("criteria", selected, "Criterion numbers (default: all)")->check(CLI::Range(std::size_t{1}, criteria().size()));
    CLI11_PARSE(app, argc, argv);
    if (selected.empty())
        for (std::size_t i = 1; i <= criteria().size(); ++i) selected.push_back(i);

    bool all_passed = true;
    for (std::size_t i : selected) {
        const auto& c = criteria()[i - 1];
        bool passed = false;
        std::string detail;
        try {
            const Tally t = c.run();
            passed = t.passed();
            detail = t.summary();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        all_passed = all_passed && passed;
        std::cout << (passed ? "PASS" : "FAIL") << " criterion " << i << ": " << c.name << " (" << detail << ")" << std::endl;
    }
    return all_passed ? 0 : 1;
}
