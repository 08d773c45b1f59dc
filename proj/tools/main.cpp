#include "commands.hpp"
#include "run_config.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

void add_options(CLI::App& app, cli::RunConfig& c, cli::RawConfig& raw)
{
    app.add_option("--kind", raw.kind, "Lattice: hex or square")->capture_default_str();
    app.add_option("--k", c.k, "Interference hop count (>= 1)")->capture_default_str();
    app.add_option("--extent", raw.extent, "Network extent WxH");
    app.add_option("--nodes", c.nodes, "Node count (near-square extent, row-major truncation)");
    app.add_option("--gamma", c.gamma, "Path-loss exponent (> 2)")->capture_default_str();
    app.add_option("--beta", c.beta, "SINR threshold; with --dd fixes the operating point");
    app.add_option("--dd", c.dd, "Neighbor distance ratio D/d, used together with --beta");
    app.add_option("--f", c.f, "Operating-point fraction in [0, 1]")->capture_default_str();
    app.add_option("--eta", c.eta, "Noise power")->capture_default_str();
    app.add_option("--seed", raw.seed, "Seed list, comma separated")->capture_default_str();
    app.add_option("--out", c.out, "Output path ('-' for stdout; a directory for simulate)")->capture_default_str();
    app.add_option("--format", raw.format, "csv or json")->capture_default_str();
    app.add_option("--power-margin", c.power_margin, "Transmit power = threshold * (1 + margin)")
        ->capture_default_str();
    app.add_option("--schedule", c.schedule_file, "Schedule CSV to verify");
    app.add_option("--budget", c.budget, "Node limit for the exact clique search")->capture_default_str();
    app.add_option("--gammas", raw.gammas, "Feasibility gamma list (values or lo:hi:step)")->capture_default_str();
    app.add_option("--ks", raw.ks, "Feasibility k list (values or lo:hi[:step])")->capture_default_str();
    app.add_option("--param", c.param, "Sweep parameter: k, f, nodes or gamma");
    app.add_option("--values", raw.values, "Sweep values (values or lo:hi:step)");
    app.add_flag("--hold-point", c.hold_point, "Hold (beta, D/d) at the first sweep point");
}

}  // namespace

int main(int argc, char** argv)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);

    try {
        args = cli::expand_config(args);
    } catch (const cli::CliError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.exit_code();
    }

    cli::RunConfig config;
    cli::RawConfig raw;
    CLI::App app{"Lattice STDMA scheduling and SINR evaluation"};
    app.set_version_flag("--version", std::string(latsched_version()));
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    app.footer("Any option may also come from --config FILE (key=value lines); explicit flags win.\n"
               "Exit codes: 0 success, 1 verification or feasibility failure, 2 invalid configuration.");

    const std::vector<std::pair<const char*, const char*>> commands{
        {"schedule", "Emit the slot assignment for an extent"},
        {"verify", "Check a schedule against the k-hop interference model"},
        {"clique", "Clique number, exact search and approximation ratio"},
        {"feasibility", "Feasibility region table over gamma and k"},
        {"simulate", "Evaluate SINR on perturbed deployments"},
        {"sweep", "Run simulate over a parameter range"}};
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        add_options(*sub, config, raw);
        sub->callback([&config, name = std::string(name)] { config.command = name; });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::kBadConfig;
    }

    try {
        cli::finalize(config, raw);
        if (config.command == "schedule")
            return cli::cmd_schedule(config);
        if (config.command == "verify")
            return cli::cmd_verify(config);
        if (config.command == "clique")
            return cli::cmd_clique(config);
        if (config.command == "feasibility")
            return cli::cmd_feasibility(config);
        if (config.command == "simulate")
            return cli::cmd_simulate(config);
        if (config.command == "sweep")
            return cli::cmd_sweep(config);
        std::cerr << "error: no command\n";
        return cli::kBadConfig;
    } catch (const cli::CliError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kBadConfig;
    }
}
