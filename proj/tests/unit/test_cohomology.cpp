#include <random>

#include "commlie/catalog.hpp"
#include "commlie/cohomology.hpp"
#include "commlie/error.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace commlie;
using namespace commlie::testing;

namespace {

// Betti numbers from the naive differential, trivial coefficients.
std::vector<std::size_t> naive_betti(const BracketTable& t, std::size_t n_max)
{
    std::vector<std::size_t> ranks;
    for (std::size_t n = 0; n < n_max; ++n) ranks.push_back(rank(naive_sym_differential_trivial(t, n)));
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n < n_max; ++n)
        out.push_back(basis_dim(Flavor::Sym, t.dim(), n) - ranks[n] - (n == 0 ? 0 : ranks[n - 1]));
    return out;
}

// Invariants {v : x_i . v = 0 for all i} of a module.
std::size_t invariant_dim(const ModuleSpec& m)
{
    BitMatrix stacked(0, m.dim);
    for (const auto& r : m.rho) stacked = BitMatrix::vstack(stacked, r);
    return kernel_basis(stacked).dim();
}

}  // namespace

TEST_CASE("Betti tables of the worked examples")
{
    const auto ab = load_catalog("abelian(2)");
    const auto b = betti_table(build_tower(Flavor::Sym, ab.table, ab.module("trivial"), 7, "ab2"));
    REQUIRE(b.dims.size() == 7);
    for (std::size_t n = 0; n < 7; ++n) CHECK(b.dims[n] == n + 1);

    const auto one = load_catalog("abelian(1)");
    for (auto v : betti_table(build_tower(Flavor::Sym, one.table, one.module("F1"), 8, "f1")).dims) CHECK(v == 0);

    const auto n = load_catalog("N");
    const auto bn = betti_table(build_tower(Flavor::Sym, n.table, n.module("trivial"), 5, "N"));
    CHECK(bn.dims == std::vector<std::size_t>{1, 1, 0, 0, 1});
    CHECK(bn.dims == naive_betti(n.table, 5));
}

TEST_CASE("cocycle representatives")
{
    const auto n = load_catalog("N");
    const auto tower = build_tower(Flavor::Sym, n.table, n.module("trivial"), 4, "N");
    const auto reps = cocycle_representatives(tower, 1);
    REQUIRE(reps.size() == 1);
    CHECK(reps[0] == BitVector::from_string("01"));  // f*
    CHECK(cocycle_representatives(tower, 2).empty());

    const auto ab = load_catalog("abelian(2)");
    const auto t3 = build_tower(Flavor::Sym, ab.table, symmetrize(trivial_module(ab.table, 3)), 2, "ab2");
    CHECK(cocycle_representatives(t3, 0).size() == 3);
    CHECK_THROWS_AS(cocycle_representatives(t3, 2), Error);
}

TEST_CASE("induced actions")
{
    // a with h = span{e}: h-cochains of a 1-dimensional abelian algebra; the class of h acts by
    // 1 on odd degrees and by 0 on even degrees.
    BracketTable h(1);
    const BimoduleSpec trivial = symmetrize(trivial_module(h, 1));
    const auto tower = build_tower(Flavor::Sym, h, trivial, 6, "h");
    for (std::size_t q = 0; q < 6; ++q) {
        // [h, e] = e, so L_h multiplies the degree-q cochain on e^q by q.
        BitMatrix l(1, 1);
        if (q % 2 == 1) l.set(0, 0);
        const auto ind = induced_cohomology_action(l, tower, q);
        CHECK(ind == l);
    }

    // x in the algebra itself acts by zero (Cartan relation).
    const auto n = load_catalog("N");
    const auto tn = build_tower(Flavor::Sym, n.table, n.module("adjoint"), 4, "N");
    for (std::size_t q = 0; q < 4; ++q)
        for (Elem x = 1; x < 4; ++x) {
            const auto l = operator_matrix(OperatorKind::LieDerivative, x, Flavor::Sym, n.table, n.module("adjoint"), q);
            CHECK(induced_cohomology_action(l, tn, q).is_zero());
        }

    const auto ab = load_catalog("abelian(1)");
    const auto tower_ab = build_tower(Flavor::Sym, ab.table, ab.module("F1"), 3, "f1");
    CHECK_THROWS_AS(induced_cohomology_action(BitMatrix(2, 2), tower_ab, 0), Error);
}

TEST_CASE("property: degree zero is the space of invariants")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const BracketTable t = random_commutative_lie(rng, 1 + rng() % 3);
        const ModuleSpec m = random_module(rng, t, 1 + rng() % 2);
        const auto tower = build_tower(Flavor::Sym, t, symmetrize(m), 2, "r");
        CHECK(betti_table(tower).dims[0] == invariant_dim(m));
    }
}

TEST_CASE("property: exterior cohomology vanishes above the dimension")
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t d = 1 + rng() % 3;
        const BracketTable t = random_commutative_lie(rng, d, true);
        const ModuleSpec m = random_module(rng, t, 1 + rng() % 2);
        const auto b = betti_table(build_tower(Flavor::Ext, t, symmetrize(m), d + 3, "ext"));
        for (std::size_t n = d + 1; n < b.dims.size(); ++n) CHECK(b.dims[n] == 0);
    }
}

TEST_CASE("property: Betti tables are basis-invariant and match the naive oracle")
{
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t d = 1 + rng() % 3;
        const BracketTable t = random_commutative_lie(rng, d);
        const ModuleSpec m = random_module(rng, t, 1 + rng() % 2);
        const BitMatrix p = random_invertible(rng, d);
        for (Flavor f : {Flavor::Sym, Flavor::Tensor}) {
            const auto b1 = betti_table(build_tower(f, t, symmetrize(m), 4, "x")).dims;
            const auto b2 =
                betti_table(build_tower(f, change_basis(t, p), change_basis(symmetrize(m), p), 4, "x")).dims;
            CHECK(b1 == b2);
        }
        CHECK(betti_table(build_tower(Flavor::Sym, t, symmetrize(trivial_module(t, 1)), 4, "x")).dims ==
              naive_betti(t, 4));
    }
}

TEST_CASE("a tower with d o d != 0 is rejected")
{
    ComplexTower bad{Flavor::Sym, "bad", {1, 1, 1}, {BitMatrix::identity(1), BitMatrix::identity(1)}};
    CHECK_THROWS_AS(betti_table(bad), Error);
}
