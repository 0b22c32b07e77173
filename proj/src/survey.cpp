#include "commlie/survey.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "commlie/error.hpp"
#include "commlie/parallel.hpp"

namespace commlie {

namespace {

void check_dim(std::size_t d)
{
    if (d == 0 || d > max_survey_dim)
        fail(ErrorKind::Precondition, "survey: enumeration bound is 1 <= d <= " + std::to_string(max_survey_dim) +
                                          ", got " + std::to_string(d));
}

// lambda vanishes on every bracket [b_i, b_j].
bool kills_squares(const BracketTable& t, Elem lambda)
{
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = 0; j < t.dim(); ++j)
            if (std::popcount(lambda & t.at(i, j)) % 2 != 0) return false;
    return true;
}

std::size_t entry_count(std::size_t d) { return d * (d + 1) / 2; }

// Candidates per worker task.
constexpr std::uint64_t chunk = 4096;

}  // namespace

std::uint64_t survey_candidate_count(std::size_t d)
{
    check_dim(d);
    return std::uint64_t{1} << (d * entry_count(d));
}

BracketTable decode_candidate(std::size_t d, std::uint64_t code)
{
    check_dim(d);
    const Elem mask = (Elem{1} << d) - 1;
    BracketTable t(d);
    std::size_t shift = 0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j, shift += d) {
            const Elem v = (code >> shift) & mask;
            t.set(i, j, v);
            t.set(j, i, v);
        }
    return t;
}

std::uint64_t encode_candidate(const BracketTable& t)
{
    const std::size_t d = t.dim();
    check_dim(d);
    std::uint64_t code = 0;
    std::size_t shift = 0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j, shift += d) {
            if (t.at(i, j) != t.at(j, i)) fail(ErrorKind::Precondition, "encode_candidate: table is not symmetric");
            code |= std::uint64_t{t.at(i, j)} << shift;
        }
    return code;
}

std::vector<BitMatrix> general_linear_group(std::size_t d)
{
    check_dim(d);
    std::vector<BitMatrix> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (d * d)); ++bits) {
        BitMatrix p(d, d);
        for (std::size_t k = 0; k < d * d; ++k)
            if ((bits >> k) & 1U) p.set(k / d, k % d);
        if (rank(p) == d) out.push_back(std::move(p));
    }
    return out;
}

std::uint64_t canonical_code(const BracketTable& t, std::span<const BitMatrix> group)
{
    std::uint64_t best = encode_candidate(t);
    for (const auto& p : group) best = std::min(best, encode_candidate(change_basis(t, p)));
    return best;
}

SurveyResult survey_enumerate(const SurveyOptions& options)
{
    const std::size_t d = options.dim;
    SurveyResult out;
    out.dim = d;
    out.candidates = survey_candidate_count(d);

    const std::size_t tasks = static_cast<std::size_t>((out.candidates + chunk - 1) / chunk);
    const auto parts = parallel_map(tasks, options.jobs, [&](std::size_t task) {
        std::vector<std::uint64_t> found;
        const std::uint64_t end = std::min(out.candidates, (task + 1) * chunk);
        for (std::uint64_t code = task * chunk; code < end; ++code)
            if (classify_algebra(decode_candidate(d, code)).jacobi) found.push_back(code);
        return found;
    });
    for (const auto& p : parts) out.raw_codes.insert(out.raw_codes.end(), p.begin(), p.end());

    const auto group = general_linear_group(d);
    out.group_order = group.size();
    if (!options.up_to_iso) return out;

    const auto canon = parallel_map(out.raw_codes.size(), options.jobs, [&](std::size_t i) {
        return canonical_code(decode_candidate(d, out.raw_codes[i]), group);
    });
    std::map<std::uint64_t, std::size_t> sizes;
    for (auto c : canon) ++sizes[c];
    for (const auto& [code, size] : sizes) {
        SurveyOrbit o;
        o.code = code;
        o.representative = decode_candidate(d, code);
        o.size = size;
        o.cls = classify_algebra(o.representative);
        out.orbits.push_back(std::move(o));
    }
    return out;
}

std::vector<IdealF1Instance> ideal_f1_instances(const BracketTable& t)
{
    const std::size_t d = t.dim();
    if (d >= 20) fail(ErrorKind::Precondition, "ideal_f1_instances: dimension too large for exhaustive search");
    std::vector<IdealF1Instance> out;
    for (Elem x = 1; x < (Elem{1} << d); ++x) {
        const std::vector<BitVector> gen{elem_to_vector(x, d)};
        if (is_ideal(t, Subspace::span(gen, d)) != SubalgebraKind::Ideal) continue;
        for (Elem lambda = 1; lambda < (Elem{1} << d); ++lambda) {
            if (std::popcount(lambda & x) % 2 == 0 || !kills_squares(t, lambda)) continue;
            if (check_module_axioms(t, f_lambda(t, lambda))) out.push_back({x, lambda});
        }
    }
    return out;
}

}  // namespace commlie
