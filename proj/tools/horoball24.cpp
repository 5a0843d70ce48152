// horoball24: constants, sweeps, optimization, verification and reports for
// the horoball packing families of the ideal hyperbolic 24-cell.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "h24/report.hpp"

namespace {

int write_output(const h24::RunConfig& cfg, const std::string& text) {
    if (cfg.out_path) {
        std::ofstream out(*cfg.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open output file '" << *cfg.out_path << "'\n";
            return 2;
        }
        out << text;
        return 0;
    }
    std::cout << text;
    return 0;
}

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"horoball packings of the ideal hyperbolic 24-cell"};
    app.require_subcommand(1);

    h24::RunConfig cfg;
    std::string family_arg = "b01";

    auto add_common = [&](CLI::App* sub, bool with_family) {
        if (with_family)
            sub->add_option("--family", family_arg, "packing family (b01|b12|b13|b04)")
                ->check(CLI::IsMember({"b01", "b12", "b13", "b04"}));
        sub->add_option("--grid", cfg.grid, "grid points per family domain")
            ->check(CLI::Range(2, 100000));
        sub->add_option("--mc-samples", cfg.mc_samples, "Monte Carlo sample budget")
            ->check(CLI::Range(10000LL, 1000000000LL));
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "md"}));
        sub->add_option("--out", cfg.out_path, "write output to a file instead of stdout");
    };

    auto* constants = app.add_subcommand("constants", "derived constants vs the source decimals");
    add_common(constants, false);
    auto* dump = app.add_subcommand("dump", "24-cell vertex table, neighbor classes, incidence counts");
    add_common(dump, false);
    auto* sweep = app.add_subcommand("sweep", "density curve of one family, closed form vs oracle");
    add_common(sweep, true);
    auto* optimize = app.add_subcommand("optimize", "grid + golden-section maximization of one family");
    add_common(optimize, true);
    auto* verify = app.add_subcommand("verify", "full verification suite; exit 0 iff every check passes");
    add_common(verify, false);
    verify->add_option("--inject-v0-scale", cfg.inject_v0_scale,
                       "fault-injection hook: scale V0 in the closed forms")
        ->group("");  // hidden
    auto* report = app.add_subcommand("report", "per-family optima and the regime classification");
    add_common(report, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (constants->parsed()) {
            cfg.command = "constants";
            return write_output(cfg, json_text(h24::cmd_constants()));
        }
        if (dump->parsed()) {
            cfg.command = "dump";
            return write_output(cfg, json_text(h24::cmd_dump()));
        }
        if (sweep->parsed()) {
            cfg.command = "sweep";
            cfg.family = h24::family_from_label(family_arg);
            const std::string text = cfg.format == "csv"
                                         ? h24::sweep_csv(*cfg.family, cfg.grid)
                                         : json_text(h24::cmd_sweep(*cfg.family, cfg.grid));
            return write_output(cfg, text);
        }
        if (optimize->parsed()) {
            cfg.command = "optimize";
            cfg.family = h24::family_from_label(family_arg);
            return write_output(cfg, json_text(h24::cmd_optimize(*cfg.family, cfg.grid)));
        }
        if (verify->parsed()) {
            cfg.command = "verify";
            const auto result = h24::cmd_verify(cfg);
            const int io = write_output(cfg, json_text(result.audit));
            if (io != 0) return io;
            return result.ok ? 0 : 1;
        }
        if (report->parsed()) {
            cfg.command = "report";
            const std::string text =
                cfg.format == "md" ? h24::report_markdown() : json_text(h24::cmd_report());
            return write_output(cfg, text);
        }
    } catch (const h24::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
