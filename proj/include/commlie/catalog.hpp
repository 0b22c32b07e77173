#pragma once

// Built-in example algebras and the named modules and subspaces that come with them.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "commlie/algebra.hpp"

namespace commlie {

struct NamedAlgebra {
    std::string name;
    std::vector<std::string> labels;
    BracketTable table;
    std::vector<std::pair<std::string, BimoduleSpec>> modules;
    std::vector<std::pair<std::string, Subspace>> subspaces;

    [[nodiscard]] std::size_t dim() const { return table.dim(); }
    [[nodiscard]] const BimoduleSpec& module(std::string_view name) const;
    [[nodiscard]] bool has_module(std::string_view name) const;
    /// A named subspace, or the span of a comma-separated list of basis labels.
    [[nodiscard]] Subspace subspace(std::string_view spec) const;
    [[nodiscard]] std::size_t label_index(std::string_view label) const;
};

/// "N", "a", "heis3", "abelian(d)" (also "abelianD").
NamedAlgebra load_catalog(std::string_view name);
std::vector<std::string> catalog_names();

/// Adds the standard modules (trivial, F1 when lambda is given and consistent, adjoint, coadjoint)
/// and the one-label spans.
void add_standard_structures(NamedAlgebra& a, Elem f1_lambda);

}  // namespace commlie
