// Batch front end: run session files that define a ring, ideals and modules
// and then sample, fit, and verify; or re-render an emitted JSON report as a
// readable narrative.
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "torhilb/session.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact engine for lengths of derived tensor functors of quotient powers"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "execute a session file");
    std::string session_path;
    torhilb::RunOptions options;
    std::int64_t char_override = 0;
    int budget = -1, max_degree = -1, parallel = 1;
    std::string seed_order;
    run->add_option("session", session_path, "session file")->required();
    run->add_option("--out", options.out_dir, "output directory (default: current)");
    run->add_option("--char", char_override, "characteristic override");
    run->add_option("--budget", budget, "search budget override");
    run->add_option("--max-degree", max_degree, "fit degree cap override");
    run->add_option("--seed-order", seed_order,
                    "variable priority as a comma-separated list of names");
    run->add_option("--parallel", parallel, "cell evaluation threads")->expected(0, 1)->default_str("4");

    auto* explain = app.add_subcommand("explain", "render a JSON report as text");
    std::string report_path;
    explain->add_option("report", report_path, "report JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) {
        if (char_override > 0) options.characteristic = char_override;
        if (budget >= 0) options.budget = budget;
        if (max_degree >= 0) options.max_degree = max_degree;
        if (parallel > 1) options.threads = parallel;
        if (!seed_order.empty()) {
            std::vector<std::string> names;
            std::string cur;
            for (char c : seed_order + ",") {
                if (c == ',') {
                    if (!cur.empty()) names.push_back(cur);
                    cur.clear();
                } else if (!std::isspace(static_cast<unsigned char>(c))) {
                    cur.push_back(c);
                }
            }
            options.priority = names;
        }
        return torhilb::run_session_file(session_path, options);
    }

    try {
        std::cout << torhilb::explain_report_file(report_path);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
