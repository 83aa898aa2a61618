// tmirror: batch front end for the torusmirror C API.
//
// Exit status: 0 all checks passed, 1 a mathematical check failed,
// 2 precision or usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "torusmirror/torusmirror.h"

namespace {

struct ReportDeleter {
    void operator()(tm_report* r) const { tm_report_free(r); }
};
struct StringDeleter {
    void operator()(char* s) const { tm_string_free(s); }
};
using ReportPtr = std::unique_ptr<tm_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

int exit_code(tm_status status)
{
    switch (status) {
    case TM_OK: return 0;
    case TM_CHECK_FAILED: return 1;
    default: return 2;
    }
}

int emit(tm_status status, tm_report* raw, tm_format format, const std::string& output)
{
    ReportPtr report(raw);
    if (!report) {
        std::cerr << "error: " << tm_status_string(status) << ": " << tm_last_error() << "\n";
        return exit_code(status);
    }
    char* rendered = nullptr;
    if (tm_report_render(report.get(), format, &rendered) != TM_OK) {
        std::cerr << "error: " << tm_last_error() << "\n";
        return 2;
    }
    StringPtr text(rendered);
    if (output.empty()) {
        std::cout << text.get();
    } else {
        std::ofstream file(output, std::ios::binary);
        if (!file || !(file << text.get())) {
            std::cerr << "error: cannot write " << output << "\n";
            return 2;
        }
    }
    return exit_code(status);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact q-series verification of the torus mirror map"};
    app.require_subcommand(1);
    app.fallthrough();

    long long order_x = 200;
    std::string format = "text";
    std::string output;
    app.add_option("--order-x", order_x, "Truncation order in powers of x = exp(i pi tau/18)")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("-o,--output", output, "Write the report to this file instead of stdout");

    auto* theta = app.add_subcommand("theta", "Print a theta series A_k, B_k, C_k or D_k");
    std::string family = "A";
    long long index = 1;
    theta->add_option("--family", family, "Theta family")->check(CLI::IsMember({"A", "B", "C", "D"}));
    theta->add_option("--index", index, "Family index (reduced by the family period)");

    auto* verify = app.add_subcommand("verify", "Run one family of identity checks");
    std::string which;
    verify->add_option("check", which, "Which checks to run")
        ->required()
        ->check(CLI::IsMember({"products", "commutativity", "associativity", "mumford", "oracle", "matrix",
                               "relation"}));

    auto* jcheck = app.add_subcommand("jcheck", "Compare j from the Hesse relation with the Eisenstein j");
    int terms = 5;
    jcheck->add_option("--terms", terms, "Number of coefficients to compare")->check(CLI::PositiveNumber);

    auto* matrix = app.add_subcommand("matrix", "Print the structure matrix and its closed-form entries");
    auto* relation = app.add_subcommand("relation", "Print the cubic relation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const tm_format fmt = (format == "json") ? TM_FORMAT_JSON : TM_FORMAT_TEXT;
    tm_report* report = nullptr;
    tm_status status = TM_OK;
    if (*theta) {
        status = tm_run_theta(family.front(), index, order_x, &report);
    } else if (*verify) {
        status = tm_run_verify(which.c_str(), order_x, &report);
    } else if (*jcheck) {
        status = tm_run_jcheck(order_x, terms, &report);
    } else if (*matrix) {
        status = tm_run_matrix(order_x, &report);
    } else if (*relation) {
        status = tm_run_relation(order_x, &report);
    }
    return emit(status, report, fmt, output);
}
