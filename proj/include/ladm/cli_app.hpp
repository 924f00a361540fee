#pragma once

#include <cmath>
#include <iosfwd>
#include <string>
#include <vector>

namespace ladm::cli {

enum class Emit { Csv, Json };

inline const double kDefaultBeta = std::pow(2.0, 1.0 / 16.0);

struct RunConfig {
    double beta = kDefaultBeta;
    int harmonic = 1;
    int terms = 4;
    std::vector<double> t_values;  // defaults to {1.0}
    double x_start = 0.5;
    double x_step = 0.5;
    int x_count = 10;
    Emit emit = Emit::Csv;
    std::string out_path = "-";  // "-" = stdout
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternalError = 1;
inline constexpr int kExitBadConfig = 2;

/// Parses argv and dispatches to the solve/table/grid/residual commands,
/// writing results to --out (stdout by default) and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace ladm::cli
