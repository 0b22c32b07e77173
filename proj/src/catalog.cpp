#include "commlie/catalog.hpp"

#include <algorithm>
#include <charconv>

#include "commlie/error.hpp"

namespace commlie {

namespace {

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

std::size_t parse_abelian_dim(std::string_view name)
{
    std::string_view rest = name.substr(std::string_view("abelian").size());
    if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
    std::size_t d = 0;
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), d);
    if (ec != std::errc{} || ptr != rest.data() + rest.size() || d == 0 || d > 16)
        fail(ErrorKind::Parse, "catalog: abelian algebra needs a dimension between 1 and 16, got '" + std::string(name) + "'");
    return d;
}

}  // namespace

const BimoduleSpec& NamedAlgebra::module(std::string_view wanted) const
{
    for (const auto& [n, m] : modules)
        if (n == wanted) return m;
    std::string known;
    for (const auto& [n, m] : modules) known += (known.empty() ? "" : ", ") + n;
    fail(ErrorKind::Parse, "algebra '" + name + "' has no module '" + std::string(wanted) + "' (known: " + known + ")");
}

bool NamedAlgebra::has_module(std::string_view wanted) const
{
    return std::any_of(modules.begin(), modules.end(), [&](const auto& p) { return p.first == wanted; });
}

std::size_t NamedAlgebra::label_index(std::string_view label) const
{
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return i;
    fail(ErrorKind::Parse, "algebra '" + name + "' has no basis element '" + std::string(label) + "'");
}

Subspace NamedAlgebra::subspace(std::string_view spec) const
{
    const std::string key = trim(spec);
    for (const auto& [n, s] : subspaces)
        if (n == key) return s;
    std::vector<BitVector> gens;
    std::size_t start = 0;
    while (start <= key.size()) {
        const auto comma = key.find(',', start);
        const std::string item = trim(std::string_view(key).substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (item.empty()) fail(ErrorKind::Parse, "empty entry in subspace list '" + key + "'");
        gens.push_back(BitVector::unit(dim(), label_index(item)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return Subspace::span(gens, dim());
}

void add_standard_structures(NamedAlgebra& a, Elem f1_lambda)
{
    const AlgebraClass cls = classify_algebra(a.table);
    a.modules.emplace_back("trivial", symmetrize(trivial_module(a.table, 1)));
    if (f1_lambda != 0) {
        const ModuleSpec f1{1, [&] {
                                std::vector<BitMatrix> rho(a.dim(), BitMatrix(1, 1));
                                for (std::size_t i = 0; i < a.dim(); ++i)
                                    if ((f1_lambda >> i) & 1U) rho[i].set(0, 0);
                                return rho;
                            }()};
        if (check_module_axioms(a.table, f1)) a.modules.emplace_back("F1", symmetrize(f1));
    }
    if (cls.jacobi) {
        const ModuleSpec adj = [&] {
            ModuleSpec m{a.dim(), std::vector<BitMatrix>(a.dim(), BitMatrix(a.dim(), a.dim()))};
            for (std::size_t i = 0; i < a.dim(); ++i)
                for (std::size_t j = 0; j < a.dim(); ++j)
                    for (std::size_t k : elem_to_vector(a.table.at(i, j), a.dim()).support()) m.rho[i].set(k, j);
            return m;
        }();
        if (check_module_axioms(a.table, adj)) a.modules.emplace_back("adjoint", symmetrize(adj));
        a.modules.emplace_back("coadjoint", symmetrize(coadjoint_module(a.table)));
    }
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const std::size_t idx[] = {i};
        a.subspaces.emplace_back(a.labels[i], Subspace::coordinate(idx, a.dim()));
    }
}

std::vector<std::string> catalog_names() { return {"N", "a", "abelian(d)", "heis3"}; }

NamedAlgebra load_catalog(std::string_view name)
{
    NamedAlgebra out;
    out.name = std::string(name);
    Elem lambda = 0;
    if (name == "N") {
        out.labels = {"e", "f"};
        out.table = BracketTable(2);
        out.table.set(1, 1, basis_elem(0));
        lambda = basis_elem(1);
    } else if (name == "a") {
        out.labels = {"h", "e"};
        out.table = BracketTable(2);
        out.table.set(0, 1, basis_elem(1));
        out.table.set(1, 0, basis_elem(1));
        lambda = basis_elem(0);
    } else if (name == "heis3") {
        out.labels = {"x", "y", "z"};
        out.table = BracketTable(3);
        out.table.set(0, 1, basis_elem(2));
        out.table.set(1, 0, basis_elem(2));
        lambda = basis_elem(0);
    } else if (name.starts_with("abelian")) {
        const std::size_t d = parse_abelian_dim(name);
        out.name = "abelian(" + std::to_string(d) + ")";
        out.table = BracketTable(d);
        for (std::size_t i = 0; i < d; ++i) out.labels.push_back("x" + std::to_string(i + 1));
        lambda = basis_elem(0);
    } else {
        fail(ErrorKind::Parse, "unknown catalog algebra '" + std::string(name) + "' (catalog: N, a, abelian(d), heis3)");
    }
    add_standard_structures(out, lambda);
    return out;
}

}  // namespace commlie
