#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "symdisc/cli.hpp"

namespace {

unsigned default_threads() {
    if (const char* env = std::getenv("SYMDISC_THREADS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
    }
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    symdisc::JobSpec spec;
    spec.threads = default_threads();
    std::string input_path;
    std::vector<std::string> coeff_args;

    CLI::App app{"Exact factored discriminants of symmetric forms"};
    app.add_option("command", spec.command,
                   "discriminant | closed-form | evaluate | verify | antisym | berwald-moor");
    app.add_option("--input", input_path, "Read the job from a JSON file instead of flags");
    app.add_option("--n", spec.n, "Number of variables");
    app.add_option("--r", spec.r, "Degree of the form");
    app.add_option("--coeff", coeff_args,
                   "Coefficient as partition=value, e.g. --coeff 2,1=3/4 (repeatable)");
    app.add_option("--symbolic", spec.symbolic, "Keep coefficients symbolic");
    app.add_option("--format", spec.format, "Output format: text | json");
    app.add_option("--seed", spec.seed, "Seed for verification sampling");
    app.add_option("--trials", spec.trials, "Number of verification points");
    app.add_option("--threads", spec.threads,
                   "Worker threads (default from SYMDISC_THREADS)");
    app.add_option("--variant", spec.variant, "Closed-form r=3 shape: product | b-form");
    CLI11_PARSE(app, argc, argv);

    try {
        if (!input_path.empty()) {
            std::ifstream in(input_path);
            if (!in) {
                std::cerr << "cannot open " << input_path << "\n";
                return 2;
            }
            std::ostringstream text;
            text << in.rdbuf();
            unsigned threads = spec.threads;
            spec = symdisc::job_from_json(text.str());
            if (spec.threads == 0) spec.threads = threads;
        } else {
            for (const auto& arg : coeff_args) {
                auto eq = arg.find('=');
                if (eq == std::string::npos)
                    throw symdisc::ParseError("--coeff expects partition=value, got '" + arg + "'");
                spec.coefficients[arg.substr(0, eq)] = arg.substr(eq + 1);
            }
        }
        if (spec.command.empty())
            throw symdisc::ParseError("no command given (try --help)");
    } catch (const symdisc::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    return symdisc::run(spec, std::cout, std::cerr);
}
