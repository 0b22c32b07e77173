#pragma once

// Line-oriented text format for algebras with named modules and subspaces.
//
//   commlie-algebra 1
//   name N
//   dim 2
//   basis e f
//   bracket f f = e
//   module F1 1
//   act F1 f = 1
//   subspace h = e
//
// Blank lines and lines starting with '#' are ignored. Brackets that are not listed are zero.
// `act M x = r_1 ... r_m` gives the rows of the matrix of v -> x . v as bit strings.
// docs/algebra-file-format.md has the full grammar.

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "commlie/algebra.hpp"
#include "commlie/catalog.hpp"

namespace commlie {

inline constexpr std::size_t max_file_dim = 16;

struct AlgebraFile {
    std::string name;
    std::vector<std::string> labels;
    BracketTable table;
    std::vector<std::pair<std::string, ModuleSpec>> modules;
    std::vector<std::pair<std::string, Subspace>> subspaces;

    friend bool operator==(const AlgebraFile&, const AlgebraFile&) = default;
};

/// Throws Error{Parse} with the offending line number; module axioms are verified.
AlgebraFile parse_algebra_file(std::string_view text);
/// Canonical text: brackets in row-major order, subspaces by their reduced basis.
std::string serialize_algebra_file(const AlgebraFile& file);
AlgebraFile read_algebra_file(const std::filesystem::path& path);

/// Modules from the file as symmetric bimodules, followed by the standard ones it does not name.
NamedAlgebra to_named_algebra(const AlgebraFile& file);
/// The file view of a catalog entry; bimodules are reduced to their left actions.
AlgebraFile to_algebra_file(const NamedAlgebra& algebra);

/// "catalog:NAME" or a path to an algebra file.
NamedAlgebra load_algebra(std::string_view source);

}  // namespace commlie
