#include "commlie/algebra_file.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "commlie/error.hpp"

namespace commlie {

namespace {

constexpr std::string_view header = "commlie-algebra 1";

std::string_view trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::vector<std::string_view> words(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        const std::size_t b = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
        if (i > b) out.push_back(s.substr(b, i - b));
    }
    return out;
}

bool valid_label(std::string_view s)
{
    if (s.empty() || s == "0") return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

bool valid_name(std::string_view s)
{
    return !s.empty() && std::none_of(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t' || c == '='; });
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    AlgebraFile run()
    {
        std::size_t pos = 0;
        bool seen_header = false;
        while (pos <= text_.size()) {
            const auto nl = text_.find('\n', pos);
            const std::string_view raw = text_.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
            ++line_;
            const std::string_view line = trim(raw);
            if (!line.empty() && line.front() != '#') {
                if (!seen_header) {
                    if (words(line) != std::vector<std::string_view>{"commlie-algebra", "1"})
                        error("expected header '" + std::string(header) + "'");
                    seen_header = true;
                } else {
                    statement(line);
                }
            }
            if (nl == std::string_view::npos) break;
            pos = nl + 1;
        }
        if (!seen_header) error("missing header '" + std::string(header) + "'");
        if (out_.name.empty()) error("missing 'name'");
        if (!have_dim_) error("missing 'dim'");
        ensure_labels();
        for (const auto& [name, m] : out_.modules)
            if (!check_module_axioms(out_.table, m))
                fail(ErrorKind::Precondition, "module '" + name + "' (line " + std::to_string(module_lines_[name]) +
                                                  ") does not satisfy the module axioms");
        return std::move(out_);
    }

private:
    [[noreturn]] void error(const std::string& what) const
    {
        fail(ErrorKind::Parse, "algebra file line " + std::to_string(line_) + ": " + what);
    }

    std::size_t parse_count(std::string_view s, std::size_t lo, std::size_t hi, const char* what) const
    {
        std::size_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || v < lo || v > hi)
            error(std::string(what) + " must be an integer in " + std::to_string(lo) + ".." + std::to_string(hi) +
                  ", got '" + std::string(s) + "'");
        return v;
    }

    void ensure_labels()
    {
        if (!out_.labels.empty()) return;
        for (std::size_t i = 0; i < out_.table.dim(); ++i) out_.labels.push_back("x" + std::to_string(i + 1));
    }

    std::size_t label(std::string_view s)
    {
        ensure_labels();
        for (std::size_t i = 0; i < out_.labels.size(); ++i)
            if (out_.labels[i] == s) return i;
        error("unknown basis element '" + std::string(s) + "'");
    }

    // "0" or a '+'-separated sum of basis labels.
    Elem element(std::string_view s)
    {
        s = trim(s);
        if (s == "0") return 0;
        Elem v = 0;
        for (auto term : split(s, '+')) {
            if (term.empty()) error("empty term in '" + std::string(s) + "'");
            v ^= basis_elem(label(term));
        }
        return v;
    }

    void require_dim(std::string_view key) const
    {
        if (!have_dim_) error("'" + std::string(key) + "' before 'dim'");
    }

    // Splits "lhs = rhs".
    std::pair<std::string_view, std::string_view> equation(std::string_view rest) const
    {
        const auto eq = rest.find('=');
        if (eq == std::string_view::npos) error("expected '='");
        return {trim(rest.substr(0, eq)), trim(rest.substr(eq + 1))};
    }

    void statement(std::string_view line)
    {
        const auto sp = line.find_first_of(" \t");
        const std::string_view key = line.substr(0, sp);
        const std::string_view rest = sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp));

        if (key == "name") {
            if (!out_.name.empty()) error("duplicate 'name'");
            if (!valid_name(rest)) error("name must be a single word");
            out_.name = std::string(rest);
        } else if (key == "dim") {
            if (have_dim_) error("duplicate 'dim'");
            out_.table = BracketTable(parse_count(rest, 1, max_file_dim, "dim"));
            have_dim_ = true;
        } else if (key == "basis") {
            require_dim(key);
            if (!out_.labels.empty()) error("'basis' must come once, before any use of the labels");
            const auto ws = words(rest);
            if (ws.size() != out_.table.dim())
                error("'basis' lists " + std::to_string(ws.size()) + " labels for dim " + std::to_string(out_.table.dim()));
            std::set<std::string_view> seen;
            for (auto w : ws) {
                if (!valid_label(w)) error("invalid basis label '" + std::string(w) + "'");
                if (!seen.insert(w).second) error("duplicate basis label '" + std::string(w) + "'");
                out_.labels.emplace_back(w);
            }
        } else if (key == "bracket") {
            require_dim(key);
            const auto [lhs, rhs] = equation(rest);
            const auto args = words(lhs);
            if (args.size() != 2) error("'bracket' needs two basis elements before '='");
            const std::size_t i = label(args[0]);
            const std::size_t j = label(args[1]);
            if (!brackets_.insert({i, j}).second) error("duplicate bracket [" + std::string(args[0]) + ", " + std::string(args[1]) + "]");
            out_.table.set(i, j, element(rhs));
        } else if (key == "module") {
            require_dim(key);
            const auto ws = words(rest);
            if (ws.size() != 2) error("'module' needs a name and a dimension");
            if (!valid_name(ws[0])) error("invalid module name");
            if (find_module(ws[0]) != nullptr) error("duplicate module '" + std::string(ws[0]) + "'");
            const std::size_t m = parse_count(ws[1], 1, max_file_dim, "module dimension");
            out_.modules.emplace_back(std::string(ws[0]), ModuleSpec{m, std::vector<BitMatrix>(out_.table.dim(), BitMatrix(m, m))});
            module_lines_[std::string(ws[0])] = line_;
        } else if (key == "act") {
            const auto [lhs, rhs] = equation(rest);
            const auto args = words(lhs);
            if (args.size() != 2) error("'act' needs a module name and a basis element before '='");
            ModuleSpec* m = find_module(args[0]);
            if (m == nullptr) error("unknown module '" + std::string(args[0]) + "'");
            const std::size_t x = label(args[1]);
            if (!acts_.insert({std::string(args[0]), x}).second)
                error("duplicate action of '" + std::string(args[1]) + "' on '" + std::string(args[0]) + "'");
            const auto rows = words(rhs);
            if (rows.size() != m->dim) error("'act' needs " + std::to_string(m->dim) + " rows");
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (rows[r].size() != m->dim || rows[r].find_first_not_of("01") != std::string_view::npos)
                    error("row '" + std::string(rows[r]) + "' must be " + std::to_string(m->dim) + " bits");
                for (std::size_t c = 0; c < m->dim; ++c)
                    if (rows[r][c] == '1') m->rho[x].set(r, c);
            }
        } else if (key == "subspace") {
            require_dim(key);
            const auto [lhs, rhs] = equation(rest);
            if (!valid_name(lhs)) error("invalid subspace name");
            for (const auto& [n, s] : out_.subspaces)
                if (n == lhs) error("duplicate subspace '" + std::string(lhs) + "'");
            std::vector<BitVector> gens;
            for (auto item : split(rhs, ',')) {
                if (item.empty()) error("empty vector in subspace '" + std::string(lhs) + "'");
                gens.push_back(elem_to_vector(element(item), out_.table.dim()));
            }
            out_.subspaces.emplace_back(std::string(lhs), Subspace::span(gens, out_.table.dim()));
        } else {
            error("unknown keyword '" + std::string(key) + "'");
        }
    }

    ModuleSpec* find_module(std::string_view name)
    {
        for (auto& [n, m] : out_.modules)
            if (n == name) return &m;
        return nullptr;
    }

    std::string_view text_;
    std::size_t line_ = 0;
    bool have_dim_ = false;
    AlgebraFile out_;
    std::set<std::pair<std::size_t, std::size_t>> brackets_;
    std::set<std::pair<std::string, std::size_t>> acts_;
    std::map<std::string, std::size_t> module_lines_;
};

std::string element_text(Elem v, const std::vector<std::string>& labels)
{
    if (v == 0) return "0";
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if ((v >> i) & 1U) out += (out.empty() ? "" : " + ") + labels[i];
    return out;
}

}  // namespace

AlgebraFile parse_algebra_file(std::string_view text) { return Parser(text).run(); }

std::string serialize_algebra_file(const AlgebraFile& file)
{
    const std::size_t d = file.table.dim();
    std::ostringstream os;
    os << header << '\n' << "name " << file.name << '\n' << "dim " << d << '\n' << "basis";
    for (const auto& l : file.labels) os << ' ' << l;
    os << '\n';
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (file.table.at(i, j) != 0)
                os << "bracket " << file.labels[i] << ' ' << file.labels[j] << " = "
                   << element_text(file.table.at(i, j), file.labels) << '\n';
    for (const auto& [name, m] : file.modules) {
        os << "module " << name << ' ' << m.dim << '\n';
        for (std::size_t x = 0; x < d; ++x) {
            if (m.rho[x].is_zero()) continue;
            os << "act " << name << ' ' << file.labels[x] << " =";
            for (std::size_t r = 0; r < m.dim; ++r) os << ' ' << m.rho[x].row_vector(r).to_string();
            os << '\n';
        }
    }
    for (const auto& [name, s] : file.subspaces) {
        os << "subspace " << name << " = ";
        if (s.dim() == 0) os << '0';
        for (std::size_t i = 0; i < s.dim(); ++i)
            os << (i == 0 ? "" : ", ") << element_text(vector_to_elem(s.basis_vector(i)), file.labels);
        os << '\n';
    }
    return os.str();
}

AlgebraFile read_algebra_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Parse, "cannot open algebra file '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_algebra_file(ss.str());
}

NamedAlgebra to_named_algebra(const AlgebraFile& file)
{
    NamedAlgebra standard{file.name, file.labels, file.table, {}, {}};
    add_standard_structures(standard, 0);

    NamedAlgebra out{file.name, file.labels, file.table, {}, {}};
    for (const auto& [name, m] : file.modules) out.modules.emplace_back(name, symmetrize(m));
    for (auto& [name, m] : standard.modules)
        if (!out.has_module(name)) out.modules.emplace_back(name, std::move(m));
    out.subspaces = file.subspaces;
    for (auto& [name, s] : standard.subspaces)
        if (std::none_of(out.subspaces.begin(), out.subspaces.end(), [&](const auto& p) { return p.first == name; }))
            out.subspaces.emplace_back(name, std::move(s));
    return out;
}

AlgebraFile to_algebra_file(const NamedAlgebra& algebra)
{
    AlgebraFile out{algebra.name, algebra.labels, algebra.table, {}, algebra.subspaces};
    for (const auto& [name, m] : algebra.modules) out.modules.emplace_back(name, m.left);
    return out;
}

NamedAlgebra load_algebra(std::string_view source)
{
    constexpr std::string_view prefix = "catalog:";
    if (source.starts_with(prefix)) return load_catalog(source.substr(prefix.size()));
    return to_named_algebra(read_algebra_file(std::filesystem::path(std::string(source))));
}

}  // namespace commlie
