#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qws/tables.hpp"

namespace qws {

/// Options shared by all subcommands. Zero/empty fields mean "use the
/// command default". The random seed is reserved for interface stability;
/// every computation is deterministic and ignores it.
struct RunConfig {
    std::vector<std::string> shapes;  // empty = command default
    double sigma = 1.0;
    std::string sigma_sweep;  // "min:max:n:log|lin"; empty = command default
    double delta = 0.0;
    double half_width = 0.0;  // 0 = command default
    int n_points = 0;         // 0 = command default
    bool nonlinearity = true;
    std::string format = "csv";
    std::string out;  // empty = stdout
    std::optional<double> z_min, z_max;
    int z_points = 401;
    unsigned seed = 0;
    bool full_oracle = false;
};

std::vector<double> parse_sweep(const std::string& spec);

std::vector<Table> cmd_pulse(const RunConfig& cfg);
std::vector<Table> cmd_scatter1(const RunConfig& cfg);
std::vector<Table> cmd_scatter2(const RunConfig& cfg);
std::vector<Table> cmd_spectrum2d(const RunConfig& cfg);
std::vector<Table> cmd_density(const RunConfig& cfg);

struct ValidationCheck {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool all_pass() const;
    Table to_table() const;
};

/// Closed-form, identity, unitarity and (reduced or full) time-domain oracle
/// checks; the CLI exits nonzero when any of them fails.
ValidationReport run_validation(const RunConfig& cfg);

/// Render and either print to stdout or atomically write to cfg.out.
void emit_tables(const std::vector<Table>& tables, const RunConfig& cfg);

}  // namespace qws
