#include "commlie.h"

#include <cstring>
#include <new>
#include <string>

#include "commlie/algebra_file.hpp"
#include "commlie/cohomology.hpp"
#include "commlie/error.hpp"
#include "commlie/report.hpp"

struct commlie_report {
    commlie::Report report;
};

struct commlie_algebra {
    commlie::NamedAlgebra algebra;
};

namespace {

thread_local std::string last_error;

commlie_status status_of(commlie::ErrorKind kind)
{
    switch (kind) {
    case commlie::ErrorKind::Parse: return COMMLIE_ERR_PARSE;
    case commlie::ErrorKind::Precondition: return COMMLIE_ERR_PRECONDITION;
    case commlie::ErrorKind::Dimension: return COMMLIE_ERR_DIMENSION;
    case commlie::ErrorKind::Invariant: return COMMLIE_ERR_INVARIANT;
    }
    return COMMLIE_ERR_INTERNAL;
}

commlie_status argument_error(const char* what)
{
    last_error = what;
    return COMMLIE_ERR_ARGUMENT;
}

// Runs f, translating exceptions into status codes and the thread's error message.
template <class F>
commlie_status guarded(F&& f) noexcept
{
    try {
        last_error.clear();
        f();
        return COMMLIE_OK;
    } catch (const commlie::Error& e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return COMMLIE_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return COMMLIE_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return COMMLIE_ERR_INTERNAL;
    }
}

char* copy_string(const std::string& s)
{
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

extern "C" {

const char* commlie_version(void) { return commlie::tool_version(); }

const char* commlie_status_string(commlie_status status)
{
    switch (status) {
    case COMMLIE_OK: return "ok";
    case COMMLIE_ERR_PARSE: return "parse error";
    case COMMLIE_ERR_PRECONDITION: return "precondition failed";
    case COMMLIE_ERR_DIMENSION: return "dimension mismatch";
    case COMMLIE_ERR_INVARIANT: return "internal invariant violated";
    case COMMLIE_ERR_INTERNAL: return "internal error";
    case COMMLIE_ERR_ARGUMENT: return "invalid argument";
    }
    return "unknown status";
}

const char* commlie_last_error(void) { return last_error.c_str(); }

void commlie_string_free(char* s) { delete[] s; }

int commlie_exit_code(commlie_status status, int checks_passed)
{
    switch (status) {
    case COMMLIE_OK: return checks_passed ? 0 : 2;
    case COMMLIE_ERR_INVARIANT:
    case COMMLIE_ERR_INTERNAL: return 2;
    default: return 1;
    }
}

commlie_status commlie_run(const char* options_json, commlie_report** out)
{
    if (options_json == nullptr || out == nullptr) return argument_error("commlie_run: null argument");
    *out = nullptr;
    return guarded([&] {
        const auto options = commlie::report_options_from_json(options_json);
        *out = new commlie_report{commlie::run_report(options)};
    });
}

int commlie_report_checks_passed(const commlie_report* report) { return report != nullptr && report->report.checks_passed; }

commlie_status commlie_report_render(const commlie_report* report, const char* format, char** out)
{
    if (report == nullptr || format == nullptr || out == nullptr) return argument_error("commlie_report_render: null argument");
    *out = nullptr;
    return guarded([&] { *out = copy_string(commlie::render_report(report->report, format)); });
}

void commlie_report_free(commlie_report* report) { delete report; }

commlie_status commlie_algebra_load(const char* source, commlie_algebra** out)
{
    if (source == nullptr || out == nullptr) return argument_error("commlie_algebra_load: null argument");
    *out = nullptr;
    return guarded([&] { *out = new commlie_algebra{commlie::load_algebra(source)}; });
}

commlie_status commlie_algebra_parse(const char* text, commlie_algebra** out)
{
    if (text == nullptr || out == nullptr) return argument_error("commlie_algebra_parse: null argument");
    *out = nullptr;
    return guarded([&] { *out = new commlie_algebra{commlie::to_named_algebra(commlie::parse_algebra_file(text))}; });
}

size_t commlie_algebra_dim(const commlie_algebra* algebra) { return algebra == nullptr ? 0 : algebra->algebra.dim(); }

commlie_status commlie_algebra_serialize(const commlie_algebra* algebra, char** out)
{
    if (algebra == nullptr || out == nullptr) return argument_error("commlie_algebra_serialize: null argument");
    *out = nullptr;
    return guarded([&] {
        *out = copy_string(commlie::serialize_algebra_file(commlie::to_algebra_file(algebra->algebra)));
    });
}

commlie_status commlie_algebra_betti(const commlie_algebra* algebra, const char* module, commlie_flavor flavor,
                                     size_t* betti, size_t count)
{
    if (algebra == nullptr || module == nullptr || (betti == nullptr && count > 0))
        return argument_error("commlie_algebra_betti: null argument");
    commlie::Flavor f{};
    switch (flavor) {
    case COMMLIE_SYM: f = commlie::Flavor::Sym; break;
    case COMMLIE_EXT: f = commlie::Flavor::Ext; break;
    case COMMLIE_TENSOR: f = commlie::Flavor::Tensor; break;
    default: return argument_error("commlie_algebra_betti: unknown flavor");
    }
    return guarded([&] {
        if (count == 0) return;
        const auto& a = algebra->algebra;
        const auto dims = commlie::betti_table(commlie::build_tower(f, a.table, a.module(module), count)).dims;
        for (std::size_t n = 0; n < count; ++n) betti[n] = dims.at(n);
    });
}

void commlie_algebra_free(commlie_algebra* algebra) { delete algebra; }

}  // extern "C"
