#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qws/cli_support.hpp"

namespace {

void add_common_options(CLI::App* cmd, qws::RunConfig& cfg) {
    cmd->add_option("--shape", cfg.shapes,
                    "pulse shape(s): lorentzian, gaussian, square");
    cmd->add_option("--sigma", cfg.sigma, "spectral FWHM in units of Gamma/v_g");
    cmd->add_option("--sigma-sweep", cfg.sigma_sweep, "sweep spec min:max:n:log|lin");
    cmd->add_option("--delta", cfg.delta, "detuning in units of Gamma/v_g");
    cmd->add_option("--half-width", cfg.half_width, "grid half width [Gamma/v_g]");
    cmd->add_option("--n-points", cfg.n_points, "grid points (odd)");
    cmd->add_flag("--no-nonlinearity", [&cfg](std::int64_t) { cfg.nonlinearity = false; },
                  "zero the two-photon bound-state term b12");
    cmd->add_option("--format", cfg.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", cfg.out, "output path (atomic write); default stdout");
    cmd->add_option("--z-min", cfg.z_min, "lower edge of the z window [v_g/Gamma]");
    cmd->add_option("--z-max", cfg.z_max, "upper edge of the z window [v_g/Gamma]");
    cmd->add_option("--z-points", cfg.z_points, "number of z samples");
    cmd->add_option("--seed", cfg.seed, "reserved; all computations are deterministic");
    cmd->set_config("--config", "", "key=value config file; flags override");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-level-emitter photon scattering in a 1D waveguide"};
    app.require_subcommand(1);

    qws::RunConfig cfg;
    auto* pulse = app.add_subcommand("pulse", "input wavepacket spectra and profiles");
    auto* scatter1 = app.add_subcommand("scatter1", "single-photon probabilities and fidelities");
    auto* scatter2 = app.add_subcommand("scatter2", "two-photon fidelity sweeps");
    auto* spectrum2d = app.add_subcommand("spectrum2d", "two-photon intensity spectra");
    auto* density = app.add_subcommand("density", "photon densities N(z)");
    auto* validate = app.add_subcommand("validate", "closed-form and oracle checks");
    for (auto* cmd : {pulse, scatter1, scatter2, spectrum2d, density, validate})
        add_common_options(cmd, cfg);
    validate->add_flag("--full-oracle", cfg.full_oracle,
                       "run the n=257 two-excitation oracle (minutes)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (pulse->parsed()) {
            qws::emit_tables(qws::cmd_pulse(cfg), cfg);
        } else if (scatter1->parsed()) {
            qws::emit_tables(qws::cmd_scatter1(cfg), cfg);
        } else if (scatter2->parsed()) {
            qws::emit_tables(qws::cmd_scatter2(cfg), cfg);
        } else if (spectrum2d->parsed()) {
            qws::emit_tables(qws::cmd_spectrum2d(cfg), cfg);
        } else if (density->parsed()) {
            qws::emit_tables(qws::cmd_density(cfg), cfg);
        } else if (validate->parsed()) {
            const auto report = qws::run_validation(cfg);
            qws::emit_tables({report.to_table()}, cfg);
            if (!report.all_pass()) return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
