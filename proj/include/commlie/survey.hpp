#pragma once

// Exhaustive enumeration of commutative Lie algebras of dimension at most 3 over F_2.
//
// A candidate is a symmetric bracket table, encoded by its entries [b_i, b_j] for i <= j in
// row-major order, d bits each. The candidate code is the canonical rank used for ordering.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "commlie/algebra.hpp"

namespace commlie {

inline constexpr std::size_t max_survey_dim = 3;

std::uint64_t survey_candidate_count(std::size_t d);
BracketTable decode_candidate(std::size_t d, std::uint64_t code);
/// Requires a symmetric table.
std::uint64_t encode_candidate(const BracketTable& t);

/// Every invertible d x d matrix over F_2, in increasing order of their bit patterns.
std::vector<BitMatrix> general_linear_group(std::size_t d);
/// Smallest candidate code over the orbit of t under change of basis.
std::uint64_t canonical_code(const BracketTable& t, std::span<const BitMatrix> group);

struct SurveyOptions {
    std::size_t dim = 2;
    bool up_to_iso = false;
    std::size_t jobs = 1;
};

struct SurveyOrbit {
    std::uint64_t code = 0;  // canonical code, which is also the representative's code
    BracketTable representative;
    std::size_t size = 0;  // number of raw tables in the orbit
    AlgebraClass cls;
};

struct SurveyResult {
    std::size_t dim = 0;
    std::uint64_t candidates = 0;
    std::size_t group_order = 0;
    std::vector<std::uint64_t> raw_codes;  // increasing
    std::vector<SurveyOrbit> orbits;       // increasing code; empty unless up_to_iso

    [[nodiscard]] std::size_t raw_count() const { return raw_codes.size(); }
    [[nodiscard]] std::size_t orbit_count() const { return orbits.size(); }
};

/// Candidates satisfying Jacobi, optionally grouped into isomorphism classes. d must be 1..3.
SurveyResult survey_enumerate(const SurveyOptions& options);

/// A one-dimensional ideal span{x} with a one-dimensional module F_lambda on which x acts by 1.
struct IdealF1Instance {
    Elem ideal = 0;
    Elem lambda = 0;  // b_i acts by bit i
};

/// All such pairs: x spans an ideal and lambda(x) = 1, lambda vanishes on [g, g].
std::vector<IdealF1Instance> ideal_f1_instances(const BracketTable& t);

}  // namespace commlie
