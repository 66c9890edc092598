#include "cmplane/errors.hpp"
#include "cmplane/fixtures.hpp"
#include "cmplane/job.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

enum Exit { Ok = 0, Schema = 1, Computation = 2, Precondition = 3 };

int run_fixtures(std::ostream& out)
{
    const auto results = cmplane::run_worked_examples();
    std::size_t width = 0;
    for (const auto& r : results)
        width = std::max(width, r.name.size());
    int failed = 0;
    for (const auto& r : results) {
        out << (r.passed ? "PASS  " : "FAIL  ") << r.name << std::string(width - r.name.size() + 2, ' ') << r.detail
            << "\n";
        failed += r.passed ? 0 : 1;
    }
    out << results.size() - failed << "/" << results.size() << " fixtures passed\n";
    return failed == 0 ? Ok : Computation;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cyclotomic invariants of plane curve singularities and cyclic covers"};
    std::string input = "-", output = "-", format = "report";
    bool fixtures = false;
    app.add_option("--input", input, "Job document (JSON); '-' reads stdin");
    app.add_option("--output", output, "Where to write the result; '-' writes stdout");
    app.add_option("--format", format, "report | summary | both")
        ->check(CLI::IsMember({"report", "summary", "both"}));
    app.add_flag("--fixtures", fixtures, "Run the built-in worked-example suite and print a pass/fail table");
    CLI11_PARSE(app, argc, argv);

    std::ofstream file;
    if (output != "-") {
        file.open(output);
        if (!file) {
            std::cerr << "error: cannot write " << output << "\n";
            return Computation;
        }
    }
    std::ostream& out = output == "-" ? std::cout : file;

    if (fixtures)
        return run_fixtures(out);

    std::string text;
    if (input == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(input);
        if (!in) {
            std::cerr << "error: cannot read " << input << "\n";
            return Schema;
        }
        text.assign(std::istreambuf_iterator<char>(in), {});
    }

    try {
        const cmplane::JobDescription job = cmplane::parse_job(std::string_view(text));
        cmplane::JobResult result = cmplane::run_job(job);
        if (format == "summary") {
            out << result.summary;
        } else {
            if (format == "both")
                result.report["summary"] = result.summary;
            out << result.report.dump(2) << "\n";
        }
        return Ok;
    } catch (const cmplane::SchemaError& e) {
        std::cerr << "schema violation:\n";
        for (const auto& v : e.violations())
            std::cerr << "  " << v << "\n";
        return Schema;
    } catch (const cmplane::PreconditionError& e) {
        std::cerr << "precondition not satisfied: " << e.what() << "\n";
        return Precondition;
    } catch (const cmplane::ComputationError& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return Computation;
    }
}
