#include <bit>
#include <random>

#include "commlie/error.hpp"
#include "commlie/survey.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace commlie;
using namespace commlie::testing;

namespace {

// Jacobi on basis triples, evaluated straight from the candidate code.
std::vector<std::uint64_t> naive_survey(std::size_t d)
{
    const std::size_t entries = d * (d + 1) / 2;
    std::vector<std::uint64_t> out;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (d * entries)); ++code) {
        std::vector<std::vector<unsigned>> c(d, std::vector<unsigned>(d));
        std::size_t k = 0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i; j < d; ++j, ++k) c[i][j] = c[j][i] = (code >> (k * d)) & ((1U << d) - 1);
        auto br = [&](unsigned x, unsigned y) {
            unsigned v = 0;
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    if (((x >> i) & 1U) && ((y >> j) & 1U)) v ^= c[i][j];
            return v;
        };
        bool ok = true;
        for (unsigned x = 0; x < d && ok; ++x)
            for (unsigned y = 0; y < d && ok; ++y)
                for (unsigned z = 0; z < d && ok; ++z) {
                    const unsigned a = 1U << x, b = 1U << y, e = 1U << z;
                    ok = (br(a, br(b, e)) ^ br(b, br(e, a)) ^ br(e, br(a, b))) == 0;
                }
        if (ok) out.push_back(code);
    }
    return out;
}

}  // namespace

TEST_CASE("candidate and group sizes")
{
    CHECK(survey_candidate_count(1) == 2);
    CHECK(survey_candidate_count(2) == 64);
    CHECK(survey_candidate_count(3) == 262144);
    CHECK(general_linear_group(1).size() == 1);
    CHECK(general_linear_group(2).size() == 6);
    CHECK(general_linear_group(3).size() == 168);
    CHECK_THROWS_AS(survey_candidate_count(4), Error);
    CHECK_THROWS_AS(survey_enumerate({4, false, 1}), Error);
}

TEST_CASE("codes round-trip")
{
    for (std::uint64_t code = 0; code < 64; ++code) CHECK(encode_candidate(decode_candidate(2, code)) == code);
    BracketTable t(2);
    t.set(0, 1, 1);
    CHECK_THROWS_AS(encode_candidate(t), Error);
}

TEST_CASE("raw enumeration matches a naive filter")
{
    for (std::size_t d = 1; d <= 3; ++d) {
        const auto r = survey_enumerate({d, false, 1});
        CHECK(r.raw_codes == naive_survey(d));
        for (auto code : r.raw_codes) CHECK(classify_algebra(decode_candidate(d, code)).commutative_lie());
    }
    // [e, e] = e fails Jacobi: the cyclic sum at (e, e, e) is [e, [e, e]] = e.
    CHECK(survey_enumerate({1, false, 1}).raw_count() == 1);
}

TEST_CASE("orbits: Burnside count, sizes and invariance")
{
    std::mt19937_64 rng(59);
    for (std::size_t d = 1; d <= 3; ++d) {
        const auto r = survey_enumerate({d, true, 1});
        const auto group = general_linear_group(d);
        std::size_t fixed = 0;
        for (const auto& g : group)
            for (auto code : r.raw_codes)
                if (encode_candidate(change_basis(decode_candidate(d, code), g)) == code) ++fixed;
        CHECK(fixed % group.size() == 0);
        CHECK(r.orbit_count() == fixed / group.size());

        std::size_t total = 0;
        for (const auto& o : r.orbits) {
            total += o.size;
            CHECK(group.size() % o.size == 0);
            CHECK(canonical_code(o.representative, group) == o.code);
            const auto moved = change_basis(o.representative, random_invertible(rng, d));
            CHECK(classify_algebra(moved) == o.cls);
            CHECK(canonical_code(moved, group) == o.code);
        }
        CHECK(total == r.raw_count());
        CHECK(r.orbit_count() <= r.raw_count());
    }
    const auto two = survey_enumerate({2, true, 1});
    CHECK(two.raw_count() == 7);
    CHECK(two.orbit_count() == 3);
}

TEST_CASE("output does not depend on the worker count")
{
    for (std::size_t d = 2; d <= 3; ++d) {
        const auto a = survey_enumerate({d, true, 1});
        for (std::size_t jobs : {2, 3, 8}) {
            const auto b = survey_enumerate({d, true, jobs});
            CHECK(a.raw_codes == b.raw_codes);
            REQUIRE(a.orbit_count() == b.orbit_count());
            for (std::size_t i = 0; i < a.orbit_count(); ++i) {
                CHECK(a.orbits[i].code == b.orbits[i].code);
                CHECK(a.orbits[i].size == b.orbits[i].size);
            }
        }
    }
}

TEST_CASE("one-dimensional ideals with F1")
{
    BracketTable ab(2);
    const auto inst = ideal_f1_instances(ab);
    // Every nonzero x spans an ideal; lambda ranges over functionals with lambda(x) = 1.
    CHECK(inst.size() == 3 * 2);
    for (const auto& i : inst) CHECK(std::popcount(i.ideal & i.lambda) % 2 == 1);

    BracketTable a(2);  // [h, e] = e
    a.set(0, 1, 2);
    a.set(1, 0, 2);
    CHECK(ideal_f1_instances(a).empty());

    BracketTable n(2);  // [f, f] = e; lambda(e) = 0 is forced and e spans the only ideal
    n.set(1, 1, 1);
    CHECK(ideal_f1_instances(n).empty());

    // Every algebra of the d = 3 survey is searched without error.
    for (auto code : survey_enumerate({3, false, 1}).raw_codes) CHECK_NOTHROW(ideal_f1_instances(decode_candidate(3, code)));
}
