#include "commlie/report.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <set>
#include <sstream>

#include "commlie/algebra_file.hpp"
#include "commlie/catalog.hpp"
#include "commlie/cohomology.hpp"
#include "commlie/comparison.hpp"
#include "commlie/error.hpp"
#include "commlie/parallel.hpp"
#include "commlie/spectral.hpp"
#include "commlie/survey.hpp"

#ifndef COMMLIE_VERSION
#define COMMLIE_VERSION "0.0.0"
#endif

namespace commlie {

using nlohmann::json;

namespace {

// Largest cochain space a report may build.
constexpr std::size_t max_space_dim = 1U << 15;

std::string elem_text(Elem v, const std::vector<std::string>& labels)
{
    if (v == 0) return "0";
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if ((v >> i) & 1U) out += (out.empty() ? "" : " + ") + labels[i];
    return out;
}

json subspace_json(const Subspace& s, const std::vector<std::string>& labels)
{
    json basis = json::array();
    for (std::size_t i = 0; i < s.dim(); ++i) basis.push_back(elem_text(vector_to_elem(s.basis_vector(i)), labels));
    return basis;
}

json class_json(const AlgebraClass& c)
{
    return {{"commutative", c.commutative}, {"alternating", c.alternating}, {"jacobi", c.jacobi},
            {"left_leibniz", c.left_leibniz}, {"lie", c.lie()},          {"commutative_lie", c.commutative_lie()}};
}

json brackets_json(const BracketTable& t, const std::vector<std::string>& labels)
{
    json out = json::array();
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = 0; j < t.dim(); ++j)
            if (t.at(i, j) != 0) out.push_back({labels[i], labels[j], elem_text(t.at(i, j), labels)});
    return out;
}

json pages_json(const std::vector<Page>& pages)
{
    json out = json::array();
    for (const auto& page : pages) {
        json entries = json::array();
        for (const auto& [pq, dim] : page.entries) entries.push_back({{"p", pq.first}, {"q", pq.second}, {"dim", dim}});
        out.push_back({{"r", page.r}, {"stable", page.stable}, {"entries", entries}});
    }
    return out;
}

json violations_json(const std::vector<PageViolation>& v)
{
    json out = json::array();
    for (const auto& x : v) out.push_back({{"r", x.r}, {"p", x.at.first}, {"q", x.at.second}, {"what", x.what}});
    return out;
}

json convergence_json(const std::vector<ConvergenceEntry>& c)
{
    json out = json::array();
    for (const auto& e : c)
        out.push_back({{"n", e.n}, {"e_infinity", e.e_infinity}, {"cohomology", e.cohomology}, {"ok", e.ok()}});
    return out;
}

bool all_ok(const std::vector<ConvergenceEntry>& c)
{
    return std::all_of(c.begin(), c.end(), [](const auto& e) { return e.ok(); });
}

Flavor parse_flavor(std::string_view s)
{
    if (s == "sym") return Flavor::Sym;
    if (s == "ext") return Flavor::Ext;
    if (s == "tensor") return Flavor::Tensor;
    fail(ErrorKind::Parse, "unknown flavor '" + std::string(s) + "' (expected sym, ext or tensor)");
}

void guard_size(std::size_t dim, std::size_t module_dim, Flavor flavor, std::size_t top_degree)
{
    const std::size_t n = basis_dim(flavor, dim, top_degree);
    if (n > max_space_dim / std::max<std::size_t>(module_dim, 1))
        fail(ErrorKind::Precondition, std::string(to_string(flavor)) + " cochains in degree " + std::to_string(top_degree) +
                                          " have dimension " + std::to_string(n * module_dim) +
                                          "; lower --max-degree");
}

std::string to_text(const json& v)
{
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

class Builder {
public:
    explicit Builder(const ReportOptions& o) : o_(o) {}

    Report run()
    {
        const auto& cmds = report_commands();
        if (std::find(cmds.begin(), cmds.end(), o_.command) == cmds.end())
            fail(ErrorKind::Parse, "unknown command '" + o_.command + "'");

        json input = report_options_to_json(o_);
        input.erase("jobs");
        if (o_.command != "survey") {
            alg_ = load_algebra(o_.algebra);
            input["algebra_text"] = serialize_algebra_file(to_algebra_file(alg_));
        }

        if (o_.command == "check") check();
        else if (o_.command == "cohomology") cohomology();
        else if (o_.command == "hs-ss") hs_ss();
        else if (o_.command == "compare") compare();
        else if (o_.command == "les") les();
        else survey();

        char digest[32];
        std::snprintf(digest, sizeof digest, "fnv1a64:%016llx", static_cast<unsigned long long>(fnv1a64(input.dump())));
        out_.document = {{"schema", report_schema},     {"tool", "commlie"},   {"version", tool_version()},
                         {"command", o_.command},       {"input", input},      {"input_digest", digest},
                         {"checks_passed", out_.checks_passed}, {"flags", flags_}, {"result", result_}};
        return std::move(out_);
    }

private:
    const BimoduleSpec& module() const { return alg_.module(o_.module); }

    void row(std::vector<json> cells)
    {
        std::vector<std::string> r;
        for (const auto& c : cells) r.push_back(to_text(c));
        out_.table.push_back(std::move(r));
    }

    void flag(std::string source, std::string quantity, json at, json expected, json actual)
    {
        const bool agree = expected == actual;
        flags_.push_back({{"source", std::move(source)},
                          {"quantity", std::move(quantity)},
                          {"at", std::move(at)},
                          {"expected", expected},
                          {"actual", actual},
                          {"agree", agree}});
    }

    void check()
    {
        const auto& t = alg_.table;
        const AlgebraClass cls = classify_algebra(t);
        const Subspace leib = leibniz_kernel(t);
        json quotient = nullptr;
        if (is_ideal(t, leib) == SubalgebraKind::Ideal) {
            const auto q = quotient_algebra(t, leib);
            bool abelian = true;
            for (std::size_t i = 0; i < q.q.dim(); ++i)
                for (std::size_t j = 0; j < q.q.dim(); ++j) abelian = abelian && q.q.at(i, j) == 0;
            quotient = {{"dim", q.q.dim()}, {"abelian", abelian}, {"classification", class_json(classify_algebra(q.q))}};
        }
        json modules = json::array();
        for (const auto& [name, m] : alg_.modules) {
            const auto v = check_bimodule_axioms(t, m);
            if (!v) out_.checks_passed = false;
            modules.push_back({{"name", name}, {"dim", m.dim()}, {"symmetric", m.symmetric()},
                               {"axioms", v.ok ? "ok" : v.describe()}});
        }
        json subspaces = json::array();
        for (const auto& [name, s] : alg_.subspaces)
            subspaces.push_back({{"name", name}, {"basis", subspace_json(s, alg_.labels)}, {"kind", to_string(is_ideal(t, s))}});
        result_ = {{"name", alg_.name},
                   {"dim", alg_.dim()},
                   {"basis", alg_.labels},
                   {"brackets", brackets_json(t, alg_.labels)},
                   {"classification", class_json(cls)},
                   {"leibniz_kernel", subspace_json(leib, alg_.labels)},
                   {"leibniz_quotient", quotient},
                   {"modules", modules},
                   {"subspaces", subspaces}};
        row({"property", "value"});
        for (const auto& [k, v] : result_["classification"].items()) row({k, v});
        row({"leibniz_kernel_dim", leib.dim()});
    }

    // The subspace named by --ideal or --subalgebra, or nothing.
    std::optional<std::pair<std::string, Subspace>> chosen_subspace() const
    {
        if (!o_.ideal.empty() && !o_.subalgebra.empty()) fail(ErrorKind::Parse, "give only one of --ideal and --subalgebra");
        const std::string& spec = o_.ideal.empty() ? o_.subalgebra : o_.ideal;
        if (spec.empty()) return std::nullopt;
        Subspace h = alg_.subspace(spec);
        const auto kind = is_ideal(alg_.table, h);
        if (!o_.ideal.empty() && kind != SubalgebraKind::Ideal)
            fail(ErrorKind::Precondition, "'" + spec + "' is not an ideal (" + to_string(kind) + ")");
        if (kind == SubalgebraKind::NotSubalgebra) fail(ErrorKind::Precondition, "'" + spec + "' is not a subalgebra");
        return std::make_pair(spec, std::move(h));
    }

    void cohomology()
    {
        const std::size_t n_max = o_.max_degree + 1;
        const auto& t = alg_.table;
        const auto& m = module();
        std::vector<Flavor> flavors;
        for (const auto& f : o_.flavors) flavors.push_back(parse_flavor(f));
        if (flavors.empty()) fail(ErrorKind::Parse, "no flavor requested");
        for (Flavor f : flavors) guard_size(t.dim(), m.dim(), f, n_max);

        // Second route: reversed basis.
        BitMatrix rev(t.dim(), t.dim());
        for (std::size_t i = 0; i < t.dim(); ++i) rev.set(i, t.dim() - 1 - i);
        const auto t_rev = change_basis(t, rev);
        const auto m_rev = change_basis(m, rev);

        json tables = json::array();
        row({"flavor", "degree", "dim"});
        for (Flavor f : flavors) {
            const auto direct = betti_table(build_tower(f, t, m, n_max, to_string(f))).dims;
            const auto reversed = betti_table(build_tower(f, t_rev, m_rev, n_max, to_string(f))).dims;
            json entry = {{"flavor", to_string(f)}, {"betti", direct}, {"reversed_basis", reversed}, {"agree", direct == reversed}};
            bool ok = direct == reversed;
            if (f == Flavor::Sym) {
                auto chosen = chosen_subspace();
                Subspace h = chosen ? chosen->second : Subspace::full(t.dim());
                if (!chosen)
                    for (std::size_t i = 0; i < t.dim(); ++i) {
                        const std::size_t idx[] = {i};
                        const Subspace line = Subspace::coordinate(idx, t.dim());
                        if (is_ideal(t, line) != SubalgebraKind::NotSubalgebra) {
                            h = line;
                            break;
                        }
                    }
                const auto hs = hs_filtration(t, h, m, n_max);
                const auto pages = compute_pages_until_stable(hs.filtered);
                const auto conv = convergence_check(hs.filtered, pages);
                std::vector<std::size_t> e_inf;
                for (const auto& c : conv) e_inf.push_back(c.e_infinity);
                const bool agree = e_inf == direct && all_ok(conv);
                entry["e_infinity"] = {{"subalgebra", subspace_json(h, alg_.labels)}, {"dims", e_inf}, {"agree", agree}};
                ok = ok && agree;
            }
            out_.checks_passed = out_.checks_passed && ok;
            for (std::size_t n = 0; n < direct.size(); ++n) row({to_string(f), n, direct[n]});
            tables.push_back(std::move(entry));
        }
        result_ = {{"module", o_.module}, {"max_degree", o_.max_degree}, {"tables", tables}};
    }

    void published_flags(const HsFiltration& hs, const std::vector<Page>& pages, const std::vector<std::size_t>& betti)
    {
        const bool n = alg_.name == "N";
        const bool a = alg_.name == "a";
        if (!(n || a) || o_.module != "trivial" || !alg_.has_module("trivial")) return;
        if (hs.filtered.tower.dims.empty() || alg_.subspace("e") != chosen_subspace()->second) return;
        auto page = [&](int r) -> const Page* {
            for (const auto& p : pages)
                if (p.r == r) return &p;
            return nullptr;
        };
        // Published tables: E_2 of N is one-dimensional everywhere; E_3 of N and E_2 of a are
        // one-dimensional exactly when 4 | p + q.
        if (const Page* e2 = page(2))
            for (const auto& [pq, dim] : e2->entries) {
                const std::size_t expected = n ? 1 : ((pq.first + pq.second) % 4 == 0 ? 1 : 0);
                flag("published", "E2", {pq.first, pq.second}, expected, dim);
            }
        if (const Page* e3 = n ? page(3) : nullptr)
            for (const auto& [pq, dim] : e3->entries)
                flag("published", "E3", {pq.first, pq.second}, (pq.first + pq.second) % 4 == 0 ? 1 : 0, dim);
        for (std::size_t k = 0; k < betti.size(); ++k) flag("published", "HS", {k}, k % 4 == 0 ? k + 1 : 0, betti[k]);
    }

    void hs_ss()
    {
        const auto chosen = chosen_subspace();
        if (!chosen) fail(ErrorKind::Parse, "hs-ss needs --ideal or --subalgebra");
        const std::size_t n_max = o_.max_degree + 1;
        const auto& t = alg_.table;
        const auto& m = module();
        guard_size(t.dim(), m.dim(), Flavor::Sym, n_max);

        const auto hs = hs_filtration(t, chosen->second, m, n_max);
        const auto pages = compute_pages_until_stable(hs.filtered);
        const auto violations = check_pages(pages);
        const auto conv = convergence_check(hs.filtered, pages);
        const auto closed = e2_closed_form_check(hs, pages);
        const auto betti = betti_table(hs.filtered.tower).dims;

        json closed_json = json::array();
        for (const auto& e : closed.entries)
            closed_json.push_back({{"page", e.page}, {"p", e.p}, {"q", e.q}, {"expected", e.expected}, {"actual", e.actual}, {"ok", e.ok()}});
        out_.checks_passed = violations.empty() && all_ok(conv) && closed.ok();
        published_flags(hs, pages, betti);

        result_ = {{"module", o_.module},
                   {"subspace", {{"name", chosen->first}, {"basis", subspace_json(chosen->second, alg_.labels)}, {"kind", to_string(hs.kind)}}},
                   {"max_degree", o_.max_degree},
                   {"betti", betti},
                   {"pages", pages_json(pages)},
                   {"page_violations", violations_json(violations)},
                   {"convergence", convergence_json(conv)},
                   {"closed_form", closed_json},
                   {"subalgebra_cohomology", closed.ideal_cohomology}};
        row({"page", "p", "q", "dim"});
        for (const auto& page : pages)
            for (const auto& [pq, dim] : page.entries) row({page.r, pq.first, pq.second, dim});
    }

    std::vector<RelativeKind> relative_kinds() const
    {
        const auto c = classify_algebra(alg_.table);
        std::vector<RelativeKind> out;
        if (c.lie()) out = {RelativeKind::Lambda, RelativeKind::LambdaSym};
        if (c.commutative_lie()) out.push_back(RelativeKind::Sym);
        if (out.empty()) fail(ErrorKind::Precondition, "comparison needs a commutative Lie algebra");
        return out;
    }

    void compare()
    {
        const std::size_t n_max = o_.max_degree + 1;
        const auto& t = alg_.table;
        const auto& m = module();
        guard_size(t.dim(), m.dim(), Flavor::Tensor, n_max + 2);
        const auto kinds = relative_kinds();
        const bool lie = classify_algebra(t).lie();

        json relative = json::array();
        for (RelativeKind k : kinds) {
            const auto rel = build_relative_complex(k, t, m, n_max);
            const auto ses = short_exactness_failures(rel);
            out_.checks_passed = out_.checks_passed && ses.empty();
            relative.push_back({{"kind", to_string(k)}, {"dims", rel.tower.dims}, {"betti", betti_table(rel.tower).dims},
                                {"short_exactness_failures", ses}});
        }

        json cr = json::array();
        for (CrKind k : {CrKind::Lambda, CrKind::LambdaSym, CrKind::Sym}) {
            if (k != CrKind::Sym && !lie) continue;
            const auto c = build_cr_complex(k, t, n_max);
            cr.push_back({{"kind", to_string(k)}, {"dims", c.tower.dims}, {"betti", betti_table(c.tower).dims}});
        }

        json products = json::array();
        row({"theorem", "p", "q", "e2", "product", "match"});
        for (ProductTheorem th : {ProductTheorem::LieLeibniz, ProductTheorem::LieCommutative, ProductTheorem::CommutativeLeibniz}) {
            if (th != ProductTheorem::CommutativeLeibniz && !lie) continue;
            const auto r = verify_e2_product(th, t, m, n_max);
            out_.checks_passed = out_.checks_passed && r.internally_consistent();
            json entries = json::array();
            for (const auto& e : r.entries) {
                entries.push_back({{"p", e.p}, {"q", e.q}, {"e2", e.actual}, {"product", e.expected}, {"match", e.ok()}});
                flag(std::string("product:") + to_string(th), "E2", {e.p, e.q}, e.expected, e.actual);
                row({to_string(th), e.p, e.q, e.actual, e.expected, e.ok()});
            }
            products.push_back({{"theorem", to_string(th)},
                                {"filtration_offset", r.filtration_offset},
                                {"hr", r.hr},
                                {"factor", r.factor},
                                {"relative", r.relative},
                                {"entries", entries},
                                {"convergence", convergence_json(r.convergence)},
                                {"page_violations", violations_json(r.page_violations)},
                                {"product_holds", r.product_holds()},
                                {"internally_consistent", r.internally_consistent()}});
        }

        json propagation = json::array();
        for (auto th : {PropagationTheorem::LieToLeibniz, PropagationTheorem::LieToCommutative, PropagationTheorem::CommutativeToLeibniz}) {
            if (th != PropagationTheorem::CommutativeToLeibniz && !lie) continue;
            const auto v = propagation_check(th, t, m, n_max);
            if (v.applies()) flag(std::string("propagation:") + to_string(th), "holds", {v.window}, true, v.holds);
            propagation.push_back({{"theorem", to_string(th)}, {"lower", v.lower}, {"upper", v.upper}, {"window", v.window},
                                   {"holds", v.holds}, {"converse_window", v.converse_window},
                                   {"converse_holds", v.converse_holds}, {"detail", v.detail}});
        }
        result_ = {{"module", o_.module}, {"max_degree", o_.max_degree}, {"relative", relative},
                   {"cr", cr},            {"products", products},          {"propagation", propagation}};
    }

    void les()
    {
        const std::size_t top = o_.max_degree;
        const auto& t = alg_.table;
        const auto& m = module();
        guard_size(t.dim(), m.dim(), Flavor::Tensor, top + 3);
        json out = json::array();
        row({"kind", "space", "degree", "dim", "rank_in", "rank_out", "exact"});
        for (RelativeKind k : relative_kinds()) {
            const auto rel = build_relative_complex(k, t, m, std::max<std::size_t>(top, 1));
            const auto report = long_exact_sequence_check(rel, top);
            out_.checks_passed = out_.checks_passed && report.ok();
            json nodes = json::array();
            for (const auto& n : report.nodes) {
                nodes.push_back({{"space", n.space}, {"degree", n.degree}, {"dim", n.dim}, {"rank_in", n.rank_in},
                                 {"rank_out", n.rank_out}, {"exact", n.exact()}});
                row({to_string(k), n.space, n.degree, n.dim, n.rank_in, n.rank_out, n.exact()});
            }
            out.push_back({{"kind", to_string(k)}, {"exact", report.ok()}, {"nodes", nodes}});
        }
        result_ = {{"module", o_.module}, {"max_degree", top}, {"sequences", out}};
    }

    void survey()
    {
        const auto s = survey_enumerate({o_.survey_dim, o_.up_to_iso, o_.jobs});
        const std::size_t d = s.dim;
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < d; ++i) labels.push_back("x" + std::to_string(i + 1));

        std::vector<std::uint64_t> codes;
        std::vector<std::size_t> sizes;
        if (o_.up_to_iso)
            for (const auto& o : s.orbits) {
                codes.push_back(o.code);
                sizes.push_back(o.size);
            }
        else
            codes = s.raw_codes;
        guard_size(d, 1, Flavor::Sym, o_.max_degree + 1);

        struct Summary {
            AlgebraClass cls;
            std::vector<std::size_t> betti;
            std::size_t instances = 0;
            bool vanishing = true;
        };
        const auto summaries = parallel_map(codes.size(), o_.jobs, [&](std::size_t i) {
            const BracketTable t = decode_candidate(d, codes[i]);
            Summary sm;
            sm.cls = classify_algebra(t);
            sm.betti = betti_table(build_tower(Flavor::Sym, t, symmetrize(trivial_module(t, 1)), o_.max_degree + 1)).dims;
            const auto inst = ideal_f1_instances(t);
            sm.instances = inst.size();
            for (const auto& in : inst)
                for (auto v : betti_table(build_tower(Flavor::Sym, t, symmetrize(f_lambda(t, in.lambda)), o_.max_degree + 1)).dims)
                    sm.vanishing = sm.vanishing && v == 0;
            return sm;
        });

        json tables = json::array();
        std::vector<json> header{"code"};
        if (o_.up_to_iso) header.push_back("orbit_size");
        for (const char* k : {"alternating", "ideal_f1_instances"}) header.push_back(k);
        for (std::size_t n = 0; n <= o_.max_degree; ++n) header.push_back("hs_" + std::to_string(n));
        row(header);
        for (std::size_t i = 0; i < codes.size(); ++i) {
            const auto& sm = summaries[i];
            out_.checks_passed = out_.checks_passed && sm.cls.commutative_lie();
            json e = {{"code", codes[i]},
                      {"brackets", brackets_json(decode_candidate(d, codes[i]), labels)},
                      {"classification", class_json(sm.cls)},
                      {"hs_trivial", sm.betti},
                      {"ideal_f1_instances", sm.instances}};
            if (o_.up_to_iso) e["orbit_size"] = sizes[i];
            if (sm.instances > 0) {
                e["f1_vanishing"] = sm.vanishing;
                flag("vanishing", "HS(F1)", {codes[i]}, true, sm.vanishing);
            }
            tables.push_back(std::move(e));
            std::vector<json> r{codes[i]};
            if (o_.up_to_iso) r.push_back(sizes[i]);
            r.push_back(sm.cls.alternating);
            r.push_back(sm.instances);
            for (auto b : sm.betti) r.push_back(b);
            row(std::move(r));
        }
        result_ = {{"dim", d},
                   {"candidates", s.candidates},
                   {"group_order", s.group_order},
                   {"raw_count", s.raw_count()},
                   {"up_to_iso", o_.up_to_iso},
                   {"orbit_count", o_.up_to_iso ? json(s.orbit_count()) : json(nullptr)},
                   {"basis", labels},
                   {"tables", tables}};
    }

    const ReportOptions& o_;
    NamedAlgebra alg_;
    Report out_;
    json result_ = json::object();
    json flags_ = json::array();
};

}  // namespace

const char* tool_version() { return COMMLIE_VERSION; }

const std::vector<std::string>& report_commands()
{
    static const std::vector<std::string> commands{"check", "cohomology", "hs-ss", "compare", "les", "survey"};
    return commands;
}

ReportOptions report_options_from_json(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::Parse, std::string("options: ") + e.what());
    }
    if (!j.is_object()) fail(ErrorKind::Parse, "options: expected a JSON object");
    static const std::set<std::string> known{"command", "algebra", "module", "ideal", "subalgebra", "flavors",
                                             "max_degree", "jobs", "survey_dim", "up_to_iso"};
    ReportOptions o;
    try {
        for (const auto& [key, value] : j.items()) {
            if (!known.contains(key)) fail(ErrorKind::Parse, "options: unknown key '" + key + "'");
            if (key == "command") o.command = value.get<std::string>();
            else if (key == "algebra") o.algebra = value.get<std::string>();
            else if (key == "module") o.module = value.get<std::string>();
            else if (key == "ideal") o.ideal = value.get<std::string>();
            else if (key == "subalgebra") o.subalgebra = value.get<std::string>();
            else if (key == "flavors") o.flavors = value.get<std::vector<std::string>>();
            else if (key == "max_degree") o.max_degree = value.get<std::size_t>();
            else if (key == "jobs") o.jobs = value.get<std::size_t>();
            else if (key == "survey_dim") o.survey_dim = value.get<std::size_t>();
            else o.up_to_iso = value.get<bool>();
        }
    } catch (const json::exception& e) {
        fail(ErrorKind::Parse, std::string("options: ") + e.what());
    }
    if (o.command.empty()) fail(ErrorKind::Parse, "options: missing 'command'");
    return o;
}

json report_options_to_json(const ReportOptions& o)
{
    return {{"command", o.command},       {"algebra", o.algebra},       {"module", o.module},
            {"ideal", o.ideal},           {"subalgebra", o.subalgebra}, {"flavors", o.flavors},
            {"max_degree", o.max_degree}, {"jobs", o.jobs},             {"survey_dim", o.survey_dim},
            {"up_to_iso", o.up_to_iso}};
}

Report run_report(const ReportOptions& options) { return Builder(options).run(); }

std::string render_report(const Report& report, std::string_view format)
{
    if (format == "json") return report.document.dump(2) + "\n";
    if (format != "csv") fail(ErrorKind::Parse, "unknown format '" + std::string(format) + "' (expected json or csv)");
    std::ostringstream os;
    for (const auto& r : report.table) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            const bool quote = r[i].find_first_of(",\"") != std::string::npos;
            if (i > 0) os << ',';
            if (!quote) {
                os << r[i];
                continue;
            }
            os << '"';
            for (char c : r[i]) os << (c == '"' ? "\"\"" : std::string(1, c));
            os << '"';
        }
        os << '\n';
    }
    return os.str();
}

std::uint64_t fnv1a64(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace commlie
