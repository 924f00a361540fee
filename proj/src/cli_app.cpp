#include "ladm/cli_app.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ladm/grid.hpp"
#include "ladm/oracle.hpp"
#include "ladm/serialization.hpp"
#include "ladm/solver.hpp"

namespace ladm::cli {

namespace {

ExactSolution matching_exact_solution(double beta) {
    return ExactSolution{std::abs(beta), beta > 0.0 ? +1 : -1};
}

void validate(const RunConfig& cfg) {
    if (cfg.beta == 0.0) {
        throw CLI::ValidationError("--beta must be nonzero");
    }
    if (cfg.terms < 0) {
        throw CLI::ValidationError("--terms must be >= 0");
    }
    if (cfg.x_count < 1) {
        throw CLI::ValidationError("--x-count must be >= 1");
    }
    if (cfg.x_count > 1 && cfg.x_step == 0.0) {
        throw CLI::ValidationError("--x-step must be nonzero when --x-count > 1");
    }
    if (cfg.t_values.empty()) {
        throw CLI::ValidationError("at least one --t value is required");
    }
}

void cmd_solve(const RunConfig& cfg, std::ostream& out) {
    if (cfg.emit != Emit::Json) {
        throw CLI::ValidationError("solve emits JSON only");
    }
    const LadmRun result = run(kundu_eckhaus(), cfg.beta, cfg.harmonic, cfg.terms);
    out << run_to_json(result).dump(2) << '\n';
}

void cmd_table(const RunConfig& cfg, TablePart part, std::ostream& out) {
    if (cfg.emit != Emit::Csv) {
        throw CLI::ValidationError("table emits CSV only");
    }
    if (cfg.t_values.size() != 1) {
        throw CLI::ValidationError("table requires exactly one --t value");
    }
    const LadmRun result = run(kundu_eckhaus(), cfg.beta, cfg.harmonic, cfg.terms);
    const std::vector<double> xs = linspace_grid(cfg.x_start, cfg.x_step, cfg.x_count);
    const auto rows = compare_grid(result, matching_exact_solution(cfg.beta), xs, cfg.t_values[0]);
    write_comparison_csv(out, rows, part);
}

void cmd_grid(const RunConfig& cfg, std::ostream& out) {
    const LadmRun result = run(kundu_eckhaus(), cfg.beta, cfg.harmonic, cfg.terms);
    const std::vector<double> xs = linspace_grid(cfg.x_start, cfg.x_step, cfg.x_count);
    const auto rows = comparison_rows(result, matching_exact_solution(cfg.beta), xs, cfg.t_values);
    if (cfg.emit == Emit::Csv) {
        write_comparison_csv(out, rows);
    } else {
        out << comparison_rows_to_json(rows).dump(2) << '\n';
    }
}

void cmd_residual(const RunConfig& cfg, std::ostream& out) {
    if (cfg.emit != Emit::Json) {
        throw CLI::ValidationError("residual emits JSON only");
    }
    const EquationModel model = kundu_eckhaus();
    const LadmRun result = run(model, cfg.beta, cfg.harmonic, cfg.terms);
    out << residual_report_json(result, model).dump(2) << '\n';
}

void add_common_options(CLI::App* cmd, RunConfig& cfg, std::string& emit) {
    cmd->add_option("--beta", cfg.beta, "plane-wave amplitude")->capture_default_str();
    cmd->add_option("--harmonic", cfg.harmonic, "initial-condition wavenumber")
        ->capture_default_str();
    cmd->add_option("--terms", cfg.terms, "number of correction terms k")
        ->capture_default_str();
    cmd->add_option("--t", cfg.t_values, "time value (repeatable; default 1.0)");
    cmd->add_option("--x-start", cfg.x_start, "first x sample")->capture_default_str();
    cmd->add_option("--x-step", cfg.x_step, "x sample spacing")->capture_default_str();
    cmd->add_option("--x-count", cfg.x_count, "number of x samples")->capture_default_str();
    cmd->add_option("--emit", emit, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", cfg.out_path, "output path ('-' = standard output)")
        ->capture_default_str();
}

int write_output(const RunConfig& cfg, const std::string& payload, std::ostream& out,
                 std::ostream& err) {
    if (cfg.out_path == "-") {
        out << payload;
        return kExitOk;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
        err << "error: cannot open output file '" << cfg.out_path << "'\n";
        return kExitInternalError;
    }
    file << payload;
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Laplace-Adomian decomposition solver for the Kundu-Eckhaus equation"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string emit;
    std::string part = "real";

    CLI::App* solve = app.add_subcommand("solve", "emit the series iterates as JSON");
    CLI::App* table = app.add_subcommand(
        "table", "compare the truncated series against the closed-form reference at one time");
    CLI::App* grid = app.add_subcommand(
        "grid", "comparison rows over the full (x, t) product grid");
    CLI::App* residual_cmd =
        app.add_subcommand("residual", "per-order PDE defect of the truncated series");
    for (CLI::App* cmd : {solve, table, grid, residual_cmd}) {
        add_common_options(cmd, cfg, emit);
    }
    table->add_option("--part", part, "which part to tabulate")
        ->check(CLI::IsMember({"real", "imag"}));

    std::vector<char*> argv;
    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.push_back("ladm");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    for (auto& s : argv_storage) {
        argv.push_back(s.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        CLI::App* active = app.get_subcommands().at(0);
        if (emit.empty()) {
            emit = (active == table || active == grid) ? "csv" : "json";
        }
        cfg.emit = emit == "csv" ? Emit::Csv : Emit::Json;
        if (cfg.t_values.empty()) {
            cfg.t_values = {1.0};
        }
        validate(cfg);

        std::ostringstream payload;
        if (active == solve) {
            cmd_solve(cfg, payload);
        } else if (active == table) {
            cmd_table(cfg, part == "real" ? TablePart::Real : TablePart::Imag, payload);
        } else if (active == grid) {
            cmd_grid(cfg, payload);
        } else {
            cmd_residual(cfg, payload);
        }
        return write_output(cfg, payload.str(), out, err);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitBadConfig;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadConfig;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternalError;
    }
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(args, std::cout, std::cerr);
}

}  // namespace ladm::cli
