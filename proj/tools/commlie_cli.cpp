#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commlie.h"
#include "json.hpp"

namespace {

struct Args {
    std::string algebra = "catalog:N";
    std::string module = "trivial";
    std::string ideal;
    std::string subalgebra;
    std::vector<std::string> flavors;
    std::size_t max_degree = 4;
    std::string format = "json";
    std::size_t jobs = 1;
    std::size_t dim = 2;
    bool raw = false;
    std::string output;
};

struct ReportDeleter {
    void operator()(commlie_report* r) const { commlie_report_free(r); }
};

struct StringDeleter {
    void operator()(char* s) const { commlie_string_free(s); }
};

void add_common(CLI::App& cmd, Args& a)
{
    cmd.add_option("--max-degree", a.max_degree, "Highest cohomological degree")->capture_default_str();
    cmd.add_option("--format", a.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    cmd.add_option("--jobs", a.jobs, "Worker threads")->check(CLI::Range(1, 256))->capture_default_str();
    cmd.add_option("-o,--output", a.output, "Write the report to this file instead of stdout");
}

void add_algebra(CLI::App& cmd, Args& a)
{
    cmd.add_option("--algebra", a.algebra, "catalog:NAME or a path to an algebra file")->capture_default_str();
    cmd.add_option("--module", a.module, "Named module of the algebra")->capture_default_str();
}

void add_subspace(CLI::App& cmd, Args& a)
{
    auto* ideal = cmd.add_option("--ideal", a.ideal, "Named subspace that must be an ideal");
    auto* sub = cmd.add_option("--subalgebra", a.subalgebra, "Named subspace that must be a subalgebra");
    ideal->excludes(sub);
}

int fail_with(const char* what, commlie_status status)
{
    std::cerr << "commlie: " << commlie_status_string(status) << ": " << what << '\n';
    return commlie_exit_code(status, 0);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cohomology of commutative Lie algebras over GF(2)", "commlie"};
    app.set_version_flag("--version", std::string(commlie_version()));
    app.require_subcommand(1);

    Args a;
    auto* check = app.add_subcommand("check", "Classify the algebra and verify its modules");
    add_algebra(*check, a);
    add_common(*check, a);

    auto* cohomology = app.add_subcommand("cohomology", "Betti numbers of the cochain complexes");
    add_algebra(*cohomology, a);
    add_subspace(*cohomology, a);
    cohomology->add_option("--flavor", a.flavors, "sym, ext or tensor (repeatable)")
        ->check(CLI::IsMember({"sym", "ext", "tensor"}));
    add_common(*cohomology, a);

    auto* hs = app.add_subcommand("hs-ss", "Spectral sequence of an ideal or subalgebra filtration");
    add_algebra(*hs, a);
    add_subspace(*hs, a);
    add_common(*hs, a);

    auto* compare = app.add_subcommand("compare", "Comparison spectral sequences between the three theories");
    add_algebra(*compare, a);
    add_common(*compare, a);

    auto* les = app.add_subcommand("les", "Long exact sequences of the relative complexes");
    add_algebra(*les, a);
    add_common(*les, a);

    auto* survey = app.add_subcommand("survey", "Enumerate commutative Lie algebras of small dimension");
    survey->add_option("--dim", a.dim, "Dimension (1 to 3)")->capture_default_str();
    survey->add_flag("--raw", a.raw, "List every table instead of one per isomorphism class");
    add_common(*survey, a);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    nlohmann::json options = {{"command", command}, {"max_degree", a.max_degree}, {"jobs", a.jobs}};
    if (command == "survey") {
        options["survey_dim"] = a.dim;
        options["up_to_iso"] = !a.raw;
    } else {
        options["algebra"] = a.algebra;
        options["module"] = a.module;
        options["ideal"] = a.ideal;
        options["subalgebra"] = a.subalgebra;
        if (!a.flavors.empty()) options["flavors"] = a.flavors;
    }

    commlie_report* raw_report = nullptr;
    commlie_status status = commlie_run(options.dump().c_str(), &raw_report);
    if (status != COMMLIE_OK) return fail_with(commlie_last_error(), status);
    const std::unique_ptr<commlie_report, ReportDeleter> report(raw_report);

    char* raw_text = nullptr;
    status = commlie_report_render(report.get(), a.format.c_str(), &raw_text);
    if (status != COMMLIE_OK) return fail_with(commlie_last_error(), status);
    const std::unique_ptr<char, StringDeleter> text(raw_text);

    if (a.output.empty()) {
        std::fputs(text.get(), stdout);
    } else {
        std::ofstream out(a.output, std::ios::binary);
        out << text.get();
        if (!out) return fail_with(("cannot write " + a.output).c_str(), COMMLIE_ERR_ARGUMENT);
    }
    const int passed = commlie_report_checks_passed(report.get());
    if (!passed) std::cerr << "commlie: internal checks failed; see the report\n";
    return commlie_exit_code(COMMLIE_OK, passed);
}
