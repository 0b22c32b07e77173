#include <random>

#include "commlie/algebra.hpp"
#include "commlie/catalog.hpp"
#include "commlie/error.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace commlie;
using namespace commlie::testing;

TEST_CASE("classification of the catalog algebras")
{
    const auto n = classify_algebra(load_catalog("N").table);
    CHECK(n.commutative);
    CHECK_FALSE(n.alternating);
    CHECK(n.jacobi);
    CHECK(n.left_leibniz);

    const auto a = classify_algebra(load_catalog("a").table);
    CHECK(a.commutative);
    CHECK(a.alternating);
    CHECK(a.jacobi);

    for (std::size_t d = 1; d <= 4; ++d) {
        const auto z = classify_algebra(BracketTable(d));
        CHECK(z == AlgebraClass{true, true, true, true});
    }
}

TEST_CASE("classification detects non-commutative and non-Jacobi tables")
{
    BracketTable t(2);
    t.set(0, 1, basis_elem(1));  // [b0,b1] = b1, [b1,b0] = 0
    CHECK_FALSE(classify_algebra(t).commutative);

    // [x,x] = x in dimension 1: the cyclic sum is 3[x,[x,x]] = x.
    BracketTable u(1);
    u.set(0, 0, basis_elem(0));
    const auto cls = classify_algebra(u);
    CHECK(cls.commutative);
    CHECK_FALSE(cls.jacobi);
}

TEST_CASE("module axiom examples")
{
    const auto n = load_catalog("N");
    CHECK(check_module_axioms(n.table, trivial_module(n.table, 3)));

    BracketTable h(1);
    CHECK(check_module_axioms(h, f_lambda(h, 1)));

    ModuleSpec bad{1, {BitMatrix::identity(1), BitMatrix(1, 1)}};  // e acts by 1, f by 0
    const AxiomVerdict v = check_module_axioms(n.table, bad);
    CHECK_FALSE(v.ok);
    CHECK(v.axiom == "module");
    CHECK(v.i == 1);
    CHECK(v.j == 1);
    CHECK_THROWS_AS(f_lambda(n.table, basis_elem(0)), Error);
    CHECK_THROWS_AS(f_lambda(n.table, basis_elem(0) | basis_elem(1)), Error);
    CHECK_NOTHROW(f_lambda(n.table, basis_elem(1)));

    CHECK_THROWS_AS(check_module_axioms(n.table, ModuleSpec{1, {BitMatrix(1, 1)}}), Error);
}

TEST_CASE("standard modules satisfy their axioms")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const BracketTable t = random_commutative_lie(rng, 1 + rng() % 3);
        CHECK(check_module_axioms(t, adjoint_module(t)));
        CHECK(check_module_axioms(t, coadjoint_module(t)));
        const ModuleSpec m = random_module(rng, t, 1 + rng() % 2);
        CHECK(check_bimodule_axioms(t, symmetrize(m)));
    }
}

TEST_CASE("bimodule axioms name the failing identity")
{
    const auto n = load_catalog("N");
    // Left trivial, right action by e only: MLL at (e,e) reads 0 = (m.e).e + e.(m.e) = m.
    BimoduleSpec m{trivial_module(n.table, 1), {BitMatrix::identity(1), BitMatrix(1, 1)}};
    const auto v = check_bimodule_axioms(n.table, m);
    CHECK_FALSE(v.ok);
    CHECK(v.axiom == "MLL");
    CHECK(v.i == 0);

    // Left trivial, right action by f only: LML at (f,f) reads 0 = 0 + m.[f,f] = m.e, which holds,
    // and MLL at (f,f) reads m.e = (m.f).f = m, which fails.
    BimoduleSpec w{trivial_module(n.table, 1), {BitMatrix(1, 1), BitMatrix::identity(1)}};
    const auto vw = check_bimodule_axioms(n.table, w);
    CHECK(vw.axiom == "MLL");
    CHECK(vw.i == 1);
}

TEST_CASE("Leibniz kernel")
{
    const auto n = load_catalog("N");
    const Subspace leib = leibniz_kernel(n.table);
    CHECK(leib == n.subspace("e"));
    const auto q = quotient_algebra(n.table, leib);
    CHECK(q.q.dim() == 1);
    CHECK(q.q.at(0, 0) == 0);
    CHECK(leibniz_kernel(load_catalog("a").table).dim() == 0);
    CHECK(leibniz_kernel(load_catalog("heis3").table).dim() == 0);
}

TEST_CASE("ideals and subalgebras")
{
    const auto n = load_catalog("N");
    CHECK(is_ideal(n.table, n.subspace("e")) == SubalgebraKind::Ideal);
    const auto a = load_catalog("a");
    CHECK(is_ideal(a.table, a.subspace("e")) == SubalgebraKind::Ideal);
    CHECK(is_ideal(a.table, a.subspace("h")) == SubalgebraKind::Subalgebra);
    CHECK(is_ideal(n.table, n.subspace("f")) == SubalgebraKind::NotSubalgebra);
    CHECK_THROWS_AS(is_ideal(n.table, Subspace::full(3)), Error);
    CHECK_THROWS_AS(quotient_algebra(a.table, a.subspace("h")), Error);
}

TEST_CASE("quotient algebras")
{
    const auto n = load_catalog("N");
    const auto qn = quotient_algebra(n.table, n.subspace("e"));
    CHECK(qn.q == BracketTable(1));
    CHECK(qn.proj * qn.section == BitMatrix::identity(1));
    CHECK(qn.adapted.h_dim == 1);
    CHECK(qn.adapted.basis.row_vector(0) == BitVector::from_string("10"));
    CHECK(qn.adapted.basis.row_vector(1) == BitVector::from_string("01"));

    const auto a = load_catalog("a");
    CHECK(quotient_algebra(a.table, a.subspace("e")).q == BracketTable(1));

    const auto ab = load_catalog("abelian(3)");
    const auto plane = ab.subspace("x1,x3");
    const auto qa = quotient_algebra(ab.table, plane);
    CHECK(qa.q == BracketTable(1));
    CHECK(qa.proj * qa.section == BitMatrix::identity(1));

    // Subalgebra mode: h = span{h} in a acts on a/h = span{e} by 1.
    const auto sub = quotient_algebra(a.table, a.subspace("h"), QuotientMode::Subalgebra);
    CHECK(sub.q.dim() == 0);
    REQUIRE(sub.h_action.rho.size() == 1);
    CHECK(sub.h_action.rho[0] == BitMatrix::identity(1));
}

TEST_CASE("property: quotients keep commutative Lie structure; kernel quotient is Lie")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t d = 1 + rng() % 3;
        const BracketTable t = random_commutative_lie(rng, d);
        const Subspace leib = leibniz_kernel(t);
        REQUIRE(is_ideal(t, leib) == SubalgebraKind::Ideal);
        const auto lie = classify_algebra(quotient_algebra(t, leib).q);
        CHECK(lie.alternating);
        CHECK(lie.jacobi);

        const Subspace h = random_subspace(rng, d, rng() % (d + 1));
        if (is_ideal(t, h) == SubalgebraKind::Ideal) {
            const auto q = quotient_algebra(t, h);
            CHECK(classify_algebra(q.q).commutative_lie());
            CHECK(q.proj * q.section == BitMatrix::identity(d - h.dim()));
            CHECK(rank(q.adapted.basis) == d);
        }
    }
}

TEST_CASE("property: classification is basis-invariant")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t d = 1 + rng() % 3;
        BracketTable t(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) t.set(i, j, rng() & ((Elem{1} << d) - 1));
        if (trial % 2 == 0) t = random_commutative_lie(rng, d, trial % 4 == 0);
        const BitMatrix p = random_invertible(rng, d);
        const BracketTable u = change_basis(t, p);
        CHECK(classify_algebra(u) == classify_algebra(t));
        CHECK(change_basis(u, inverse(p)) == t);
    }
}

TEST_CASE("restriction to a subalgebra")
{
    const auto h3 = load_catalog("heis3");
    const Subspace xz = h3.subspace("x,z");
    const BracketTable r = restrict_algebra(h3.table, xz);
    CHECK(r == BracketTable(2));
    CHECK_THROWS_AS(restrict_algebra(h3.table, h3.subspace("x,y")), Error);
    const auto& f1 = h3.module("F1");
    const ModuleSpec rm = restrict_module(f1.left, xz);
    CHECK(rm.rho[0] == BitMatrix::identity(1));
    CHECK(rm.rho[1] == BitMatrix(1, 1));
}

TEST_CASE("catalog contents")
{
    CHECK(load_catalog("abelian3").dim() == 3);
    CHECK(load_catalog("abelian(2)").name == "abelian(2)");
    CHECK_THROWS_AS(load_catalog("sl2"), Error);
    CHECK_THROWS_AS(load_catalog("abelian(0)"), Error);
    for (const char* name : {"N", "a", "heis3", "abelian(1)", "abelian(2)"}) {
        const auto alg = load_catalog(name);
        CHECK(alg.has_module("trivial"));
        CHECK(alg.has_module("F1"));
        CHECK(alg.has_module("coadjoint"));
        for (const auto& [mname, m] : alg.modules) CHECK(check_bimodule_axioms(alg.table, m));
    }
    CHECK_THROWS_AS(static_cast<void>(load_catalog("N").module("nope")), Error);
    CHECK_THROWS_AS(static_cast<void>(load_catalog("N").subspace("e,q")), Error);
}
