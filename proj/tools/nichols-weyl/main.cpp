#include <nw/cli/commands.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic Nichols-algebra / Weyl-groupoid engine"};
    app.require_subcommand(1);

    std::string config_path;
    std::string dot_path;
    std::string report_path;
    long word_bound = -1;
    long max_deg = -1;

    const struct {
        const char* name;
        const char* help;
    } kCommands[] = {
        {"validate", "check the group, cocycle, module, and tuple identities"},
        {"cartan", "print the Cartan matrix of the configured tuple"},
        {"graph", "explore the semi-Cartan graph and verify its axioms"},
        {"roots", "enumerate bounded real roots and the root-system axioms"},
        {"titscone", "classify the Tits cone and run the alcove tiling check"},
        {"hilbert", "print graded dimensions of the Nichols algebra per tuple module"},
    };
    for (const auto& c : kCommands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("--config", config_path, "configuration file")->required();
        sub->add_option("--word-bound", word_bound, "morphism word length window");
        sub->add_option("--max-deg", max_deg, "top degree for graded dimensions");
        sub->add_option("--dot", dot_path, "write the graph in DOT format to this file");
        sub->add_option("--report", report_path, "write a JSON report to this file");
    }

    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();

    nw::cli::CommandOptions opts;
    if (word_bound >= 0) opts.word_bound = static_cast<size_t>(word_bound);
    if (max_deg >= 0) opts.max_deg = static_cast<size_t>(max_deg);
    opts.dot_path = dot_path;
    opts.report_path = report_path;

    try {
        const nw::cli::Config cfg = nw::cli::parse_config_file(config_path);
        return nw::cli::run_command(command, cfg, opts, std::cout);
    } catch (const nw::cli::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return nw::cli::kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
