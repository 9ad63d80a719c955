#include "tautext/jobs.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct Flags {
    bool strict = false;
    std::string format, output;
    unsigned jobs = 0;
};

int execute(tautext::jobs::JobSpec job, const Flags& f)
{
    using namespace tautext::jobs;
    if (f.strict)
        job.strict = true;
    if (!f.format.empty())
        job.format = f.format;
    if (!f.output.empty())
        job.output = f.output;
    if (f.jobs)
        job.jobs = f.jobs;

    JobResult res = run_job(job);
    const std::string text = render(res, job.format);
    if (job.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(job.output, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << job.output << "\n";
            return validation_failure;
        }
        out << text;
    }
    int code = exit_code(job, res);
    if (code == undetermined)
        std::cerr << "strict: some values are intervals, unknown or failed\n";
    if (code == selftest_failure)
        std::cerr << "selftest failed\n";
    return code;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Ext groups of tautological bundles on symmetric products of curves"};
    app.require_subcommand(1);

    Flags flags;
    auto add_flags = [&](CLI::App* sub) {
        sub->add_flag("--strict", flags.strict, "exit 2 if any value is not exact");
        sub->add_option("--format", flags.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("-o,--output", flags.output, "output file (default stdout)");
        sub->add_option("-j,--jobs", flags.jobs, "worker threads")->check(CLI::PositiveNumber);
    };

    std::string path;
    auto* run = app.add_subcommand("run", "run a JSON job document ('-' reads stdin)");
    run->add_option("job", path, "job file")->required();
    add_flags(run);

    auto* self = app.add_subcommand("selftest", "run the property oracles");
    add_flags(self);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : tautext::jobs::validation_failure;
    }

    try {
        if (*self)
            return execute(tautext::jobs::parse_job(R"({"command":"selftest"})"), flags);
        std::stringstream buf;
        if (path == "-") {
            buf << std::cin.rdbuf();
        } else {
            std::ifstream in(path, std::ios::binary);
            if (!in) {
                std::cerr << "cannot read " << path << "\n";
                return tautext::jobs::validation_failure;
            }
            buf << in.rdbuf();
        }
        return execute(tautext::jobs::parse_job(buf.str()), flags);
    } catch (const tautext::jobs::JobError& e) {
        std::cerr << e.what() << "\n";
        for (const auto& p : e.problems())
            std::cerr << "  " << p << "\n";
        return tautext::jobs::validation_failure;
    }
}
