#include "qws/cli_support.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qws/emitter.hpp"
#include "qws/grid.hpp"
#include "qws/oracle.hpp"
#include "qws/product_stats.hpp"
#include "qws/pulses.hpp"
#include "qws/single_photon.hpp"
#include "qws/transforms.hpp"
#include "qws/two_photon.hpp"

namespace qws {

namespace {

int make_odd(int n) { return n | 1; }

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
    return v;
}

SpectralAmplitude make_pulse(const std::string& shape, double sigma,
                             const WavevectorGrid& grid) {
    switch (pulse_shape_from_string(shape)) {
        case PulseShape::lorentzian: return lorentzian_pulse(sigma, grid);
        case PulseShape::gaussian: return gaussian_pulse(sigma, grid);
        case PulseShape::square: return square_pulse(sigma, grid);
        default: throw std::invalid_argument("make_pulse: unsupported shape " + shape);
    }
}

/// 1D grid sized to resolve both the pulse and the emitter linewidth.
WavevectorGrid sweep_grid(const RunConfig& cfg, double sigma, double g) {
    const double w = cfg.half_width > 0.0 ? cfg.half_width : 40.0 * g;
    int n = cfg.n_points;
    if (n == 0) {
        const double dk = std::min(sigma, g) / 12.0;
        n = std::clamp(static_cast<int>(2.0 * w / dk) + 1, 4097, 32769);
    }
    return make_grid(w, make_odd(n));
}

}  // namespace

std::vector<double> parse_sweep(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 4)
        throw std::invalid_argument("sweep spec must be min:max:n:log|lin, got " + spec);
    const double lo = std::stod(parts[0]);
    const double hi = std::stod(parts[1]);
    const int n = std::stoi(parts[2]);
    if (n < 1 || lo <= 0.0 || hi < lo)
        throw std::invalid_argument("invalid sweep range " + spec);
    std::vector<double> out(n);
    if (n == 1) {
        out[0] = lo;
    } else if (parts[3] == "log") {
        const double ratio = std::log(hi / lo);
        for (int i = 0; i < n; ++i) out[i] = lo * std::exp(ratio * i / (n - 1));
    } else if (parts[3] == "lin") {
        for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * i / (n - 1);
    } else {
        throw std::invalid_argument("sweep scale must be log or lin, got " + parts[3]);
    }
    return out;
}

std::vector<Table> cmd_pulse(const RunConfig& cfg) {
    const EmitterParams params{1.0, cfg.delta, 1.0};
    const double w = cfg.half_width > 0.0 ? cfg.half_width : 40.0;
    const int n = make_odd(cfg.n_points > 0 ? cfg.n_points : 2049);
    const auto grid = make_grid(w, n);
    const auto shapes = cfg.shapes.empty()
                            ? std::vector<std::string>{"lorentzian", "gaussian", "square"}
                            : cfg.shapes;

    std::vector<SpectralAmplitude> pulses;
    for (const auto& s : shapes) pulses.push_back(make_pulse(s, cfg.sigma, grid));

    Table spec_t;
    spec_t.name = "spectrum";
    spec_t.columns = {"k [Gamma/v_g]"};
    for (const auto& s : shapes) spec_t.columns.push_back("|xi_" + s + "(k)|^2");
    for (int i = 0; i < grid.n_points; ++i) {
        std::vector<Table::Cell> row{grid.points[i]};
        for (const auto& p : pulses) row.emplace_back(std::norm(p.values[i]));
        spec_t.add_row(std::move(row));
    }

    const auto z = linspace(cfg.z_min.value_or(-8.0), cfg.z_max.value_or(8.0),
                            cfg.z_points);
    Table spat_t;
    spat_t.name = "spatial";
    spat_t.columns = {"z [v_g/Gamma]"};
    for (const auto& s : shapes) spat_t.columns.push_back("|xi_" + s + "(z)|^2");
    std::vector<std::vector<cd>> profiles;
    for (const auto& p : pulses) profiles.push_back(to_space(p, z));
    for (std::size_t j = 0; j < z.size(); ++j) {
        std::vector<Table::Cell> row{z[j]};
        for (const auto& prof : profiles) row.emplace_back(std::norm(prof[j]));
        spat_t.add_row(std::move(row));
    }
    (void)params;
    return {std::move(spec_t), std::move(spat_t)};
}

std::vector<Table> cmd_scatter1(const RunConfig& cfg) {
    const EmitterParams params{1.0, cfg.delta, 1.0};
    const auto sigmas = parse_sweep(cfg.sigma_sweep.empty() ? "0.05:20:61:log"
                                                            : cfg.sigma_sweep);
    const auto shapes = cfg.shapes.empty()
                            ? std::vector<std::string>{"lorentzian", "gaussian", "square"}
                            : cfg.shapes;

    Table t;
    t.name = "scatter1";
    t.columns = {"sigma [Gamma/v_g]", "delta [Gamma/v_g]"};
    for (const auto& s : shapes) t.columns.push_back("p2_" + s);
    t.columns.insert(t.columns.end(),
                     {"f_full_lorentzian", "f_int_lorentzian", "f_spat_lorentzian",
                      "f_prob_lorentzian", "delta_z_opt_lorentzian",
                      "f_full_lorentzian_closed", "f_prob_lorentzian_closed"});

    for (const double sigma : sigmas) {
        const auto grid = sweep_grid(cfg, sigma, params.gamma_tilde);
        std::vector<Table::Cell> row{sigma, cfg.delta};
        for (const auto& s : shapes) {
            if (s == "square" && sigma <= 2.0 * grid.spacing()) {
                row.emplace_back(std::string("nan"));
                continue;
            }
            const auto pulse = make_pulse(s, sigma, grid);
            const auto scat = scatter_one(pulse, params);
            row.emplace_back(probabilities(scat).second);
        }
        const auto pulse = lorentzian_pulse(sigma, grid);
        const auto scat = scatter_one(pulse, params);
        const auto fid = fidelities_one(scat, pulse, params);
        const auto [cf_full, cf_prob] =
            lorentzian_closed_forms_one(sigma, cfg.delta, params);
        row.insert(row.end(), {fid.f_full, fid.f_int, *fid.f_spat, fid.f_prob,
                               *fid.delta_z_opt, cf_full, cf_prob});
        t.add_row(std::move(row));
    }
    return {std::move(t)};
}

std::vector<Table> cmd_scatter2(const RunConfig& cfg) {
    const auto sigmas = parse_sweep(cfg.sigma_sweep.empty() ? "0.1:10:41:log"
                                                            : cfg.sigma_sweep);
    const auto shapes = cfg.shapes.empty()
                            ? std::vector<std::string>{"gaussian", "lorentzian"}
                            : cfg.shapes;
    const double w = cfg.half_width > 0.0 ? cfg.half_width : 40.0;
    const int n = make_odd(cfg.n_points > 0 ? cfg.n_points : 1025);
    const auto grid = make_grid(w, n);

    Table t;
    t.name = "scatter2";
    t.columns = {"sigma [Gamma/v_g]", "delta [Gamma/v_g]", "shape", "nonlinearity",
                 "f_prob", "f_full", "f_int", "p11", "p12"};
    for (const double delta : {0.0, 0.5}) {
        const EmitterParams params{1.0, delta, 1.0};
        for (const auto& shape : shapes) {
            for (const bool nl : {true, false}) {
                for (const double sigma : sigmas) {
                    const auto pulse = make_pulse(shape, sigma, grid);
                    const auto beta = product_input(pulse, pulse);
                    const auto scat = scatter_two(beta, params, nl);
                    const auto fid = fidelities_two(scat, beta);
                    const auto probs = outcome_probabilities(scat);
                    t.add_row({sigma, delta, shape, std::string(nl ? "on" : "off"),
                               fid.f_prob, fid.f_full, fid.f_int, probs.p11,
                               probs.p12});
                }
            }
        }
    }
    return {std::move(t)};
}

namespace {

Table spectrum2d_table(const std::string& name, double sigma, bool nl,
                       const RunConfig& cfg) {
    const EmitterParams params{1.0, cfg.delta, 1.0};
    const double w = cfg.half_width > 0.0 ? cfg.half_width : 8.0;
    const int n = make_odd(cfg.n_points > 0 ? cfg.n_points : 257);
    const auto grid = make_grid(w, n);
    const auto pulse = gaussian_pulse(sigma, grid);
    const auto beta = product_input(pulse, pulse);
    const auto scat = scatter_two(beta, params, nl);

    Table t;
    t.name = name;
    t.columns = {"p [Gamma/v_g]", "p_prime [Gamma/v_g]", "input_abs2",
                 "out12_abs2", "out11_abs2"};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const std::size_t idx = static_cast<std::size_t>(i) * n + j;
            t.add_row({grid.points[i], grid.points[j], std::norm(beta.values[idx]),
                       std::norm(scat.b12.values[idx]), std::norm(scat.b11.values[idx])});
        }
    return t;
}

}  // namespace

std::vector<Table> cmd_spectrum2d(const RunConfig& cfg) {
    std::vector<Table> tables;
    if (cfg.sigma != 1.0 || !cfg.sigma_sweep.empty()) {
        // explicit sigma: emit that width with the nonlinearity on and off
        tables.push_back(spectrum2d_table("sigma_custom_nl_on", cfg.sigma, true, cfg));
        tables.push_back(spectrum2d_table("sigma_custom_nl_off", cfg.sigma, false, cfg));
        return tables;
    }
    tables.push_back(spectrum2d_table("row1_sigma_0.2", 0.2, true, cfg));
    tables.push_back(spectrum2d_table("row2_sigma_1", 1.0, true, cfg));
    tables.push_back(spectrum2d_table("row3_sigma_4", 4.0, true, cfg));
    tables.push_back(spectrum2d_table("row4_sigma_1_nl_off", 1.0, false, cfg));
    return tables;
}

std::vector<Table> cmd_density(const RunConfig& cfg) {
    const EmitterParams params{1.0, cfg.delta, 1.0};
    const double w = cfg.half_width > 0.0 ? cfg.half_width : 24.0;
    const int n = make_odd(cfg.n_points > 0 ? cfg.n_points : 513);
    const auto grid = make_grid(w, n);
    const auto z = linspace(cfg.z_min.value_or(-12.0), cfg.z_max.value_or(8.0),
                            cfg.z_points);
    const auto shapes = cfg.shapes.empty()
                            ? std::vector<std::string>{"gaussian", "lorentzian"}
                            : cfg.shapes;

    std::vector<Table> tables;
    for (const auto& shape : shapes) {
        const auto pulse = make_pulse(shape, cfg.sigma, grid);
        const auto beta = product_input(pulse, pulse);
        const auto input_density = photon_density(beta, z);
        for (const bool nl : {true, false}) {
            const auto scat = scatter_two(beta, params, nl);
            const auto probs = outcome_probabilities(scat);
            const auto d11 = photon_density(scat.b11, z);
            const auto d12 = photon_density(scat.b12, z);

            Table t;
            t.name = "density_" + shape + (nl ? "_nl_on" : "_nl_off");
            t.columns = {"z [v_g/Gamma]", "input_mode1",  "n11_mode1",
                         "n12_mode1",     "n12_mode2",    "n11_mode1_norm",
                         "n12_mode1_norm", "n12_mode2_norm"};
            for (std::size_t j = 0; j < z.size(); ++j) {
                const double p11 = std::max(probs.p11, 1e-300);
                const double p12 = std::max(probs.p12, 1e-300);
                t.add_row({z[j], input_density.mode1[j], d11.mode1[j], d12.mode1[j],
                           d12.mode2[j], d11.mode1[j] / p11, d12.mode1[j] / p12,
                           d12.mode2[j] / p12});
            }
            tables.push_back(std::move(t));
        }
    }
    return tables;
}

bool ValidationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const ValidationCheck& c) { return c.pass; });
}

Table ValidationReport::to_table() const {
    Table t;
    t.name = "validation";
    t.columns = {"check", "value", "tolerance", "pass"};
    for (const auto& c : checks)
        t.add_row({c.name, c.value, c.tolerance, std::string(c.pass ? "pass" : "FAIL")});
    return t;
}

namespace {

void add_check(ValidationReport& rep, const std::string& name, double value,
               double tol) {
    rep.checks.push_back({name, value, tol, std::abs(value) <= tol});
}

void add_check_ge(ValidationReport& rep, const std::string& name, double value,
                  double floor) {
    rep.checks.push_back({name, value, floor, value >= floor});
}

}  // namespace

ValidationReport run_validation(const RunConfig& cfg) {
    ValidationReport rep;
    const EmitterParams params{1.0, 0.0, 1.0};

    // single-photon closed forms and unitarity
    for (const double delta : {0.0, 0.5}) {
        const EmitterParams pd{1.0, delta, 1.0};
        for (const double sigma : {0.1, 0.5, 1.0, 2.0, 10.0}) {
            const auto grid = make_grid(40.0, make_odd(std::clamp(
                                                  static_cast<int>(80.0 * 16.0 /
                                                                   std::min(sigma, 1.0)),
                                                  4097, 32769)));
            const auto pulse = lorentzian_pulse(sigma, grid);
            const auto scat = scatter_one(pulse, pd);
            const auto fid = fidelities_one(scat, pulse, pd);
            const auto [cf_full, cf_prob] = lorentzian_closed_forms_one(sigma, delta, pd);
            char name[96];
            std::snprintf(name, sizeof(name), "one_photon_closed_form_s%g_d%g", sigma,
                          delta);
            add_check(rep, name,
                      std::max(std::abs(fid.f_full - cf_full),
                               std::abs(fid.f_prob - cf_prob)),
                      1e-4);
            const auto [p1, p2] = probabilities(scat);
            std::snprintf(name, sizeof(name), "one_photon_prob_sum_s%g_d%g", sigma,
                          delta);
            add_check(rep, name, p1 + p2 - 1.0, 1e-6);
            std::snprintf(name, sizeof(name), "one_photon_ordering_s%g_d%g", sigma,
                          delta);
            const double violation =
                std::max({fid.f_full - fid.f_int, fid.f_int - fid.f_prob,
                          *fid.f_spat - fid.f_int});
            add_check(rep, name, std::max(violation, 0.0), 1e-6);
        }
    }

    // two-photon Lorentzian closed forms, both toggles
    for (const double delta : {0.0, 0.5}) {
        const EmitterParams pd{1.0, delta, 1.0};
        for (const double sigma : {0.2, 1.0 / std::numbers::sqrt3, 1.0, 2.0, 5.0}) {
            const auto grid = lorentzian_stats_grid(sigma, 1.0, 2e-5);
            const auto pulse = lorentzian_pulse(sigma, grid);
            for (const bool nl : {true, false}) {
                const auto stats =
                    product_scatter_stats(pulse, pd, {nl, 256.0});
                const double cf = closed_form_p11_lorentzian(sigma, delta, pd, nl);
                char name[96];
                std::snprintf(name, sizeof(name), "two_photon_closed_form_s%.3g_d%g_%s",
                              sigma, delta, nl ? "on" : "off");
                add_check(rep, name, stats.p11 - cf, 1e-4);
            }
        }
    }

    // linear resonant baseline: a(1-a) identity and the 1/4 bound
    {
        const auto grid = make_grid(40.0, 8193);
        for (const double sigma : {0.3, 1.0, 3.0}) {
            const auto pulse = gaussian_pulse(sigma, grid);
            const auto stats = product_scatter_stats(pulse, params, {false, 0.0});
            const double aa = linear_resonant_p11(pulse, params);
            char name[64];
            std::snprintf(name, sizeof(name), "linear_a_one_minus_a_s%g", sigma);
            add_check(rep, name, stats.p11 - aa, 1e-6);
            std::snprintf(name, sizeof(name), "linear_p11_bound_s%g", sigma);
            add_check(rep, name, std::max(stats.p11 - 0.25, 0.0), 1e-6);
        }
    }

    // nonlinear enhancement factor for Lorentzian pulses on resonance
    for (const double sigma : {0.01, 0.5, 1.0, 5.0}) {
        const double cf_on = closed_form_p11_lorentzian(sigma, 0.0, params, true);
        const double cf_off = closed_form_p11_lorentzian(sigma, 0.0, params, false);
        const double budget =
            0.25 * 1e-3 * cf_off / std::max(std::abs(1.0 - cf_on / cf_off), 1e-6);
        const auto grid = lorentzian_stats_grid(sigma, 1.0, std::min(budget, 2e-5));
        const auto pulse = lorentzian_pulse(sigma, grid);
        const auto on = product_scatter_stats(pulse, params, {true, 256.0});
        const auto off = product_scatter_stats(pulse, params, {false, 256.0});
        const double expected = 1.0 + 2.0 / (1.0 + 3.0 * sigma);
        char name[64];
        std::snprintf(name, sizeof(name), "enhancement_factor_s%g", sigma);
        add_check(rep, name, on.p11 / off.p11 - expected, 1e-3);
    }

    // dense pipeline unitarity and dense == factorized evaluator
    {
        const auto grid = make_grid(40.0, 1025);
        const auto pulse = gaussian_pulse(1.0, grid);
        const auto beta = product_input(pulse, pulse);
        const auto scat = scatter_two(beta, params, true);
        const auto probs = outcome_probabilities(scat);
        add_check(rep, "two_photon_prob_sum", probs.sum() - 1.0, 1e-5);
        add_check(rep, "two_photon_p11_eq_p22", probs.p11 - probs.p22, 1e-9);

        const auto stats = product_scatter_stats(pulse, params, {true, 0.0});
        add_check(rep, "dense_equals_factorized", probs.p11 - stats.p11, 1e-9);
    }

    // time-domain oracle (reduced by default, criterion-scale with --full-oracle)
    {
        const int n = cfg.full_oracle ? 257 : 129;
        const double w = cfg.full_oracle ? 20.0 : 16.0;
        const double dt = cfg.full_oracle ? 0.002 : 0.004;
        const double overlap_floor = cfg.full_oracle ? 0.99 : 0.98;
        const double dp_tol = cfg.full_oracle ? 0.02 : 0.03;
        const auto grid = make_grid(w, n);
        const auto pulse = gaussian_pulse(1.0, grid);
        const double z0 = -8.0;
        const double t_final = 2.0 * std::abs(z0) + 10.0;

        const auto one0 = make_one_excitation(pulse, z0);
        const auto one1 = evolve_one(one0, params, t_final, dt);
        const auto one_ref = smatrix_one_reference(pulse, z0, params);
        const auto c1 = compare(one1, one_ref, params, t_final);
        add_check_ge(rep, "oracle_one_overlap", c1.overlap_sq, overlap_floor);
        add_check(rep, "oracle_one_dp2", c1.dp2, dp_tol);

        const auto two0 = make_two_excitation(pulse, z0);
        const auto two1 = evolve_two(two0, params, t_final, dt);
        const auto two_ref = smatrix_two_reference(pulse, z0, params);
        const auto c2 = compare(two1, two_ref, params, t_final);
        add_check_ge(rep, "oracle_two_overlap", c2.overlap_sq, overlap_floor);
        add_check(rep, "oracle_two_dp11", c2.dp11, dp_tol);
    }

    return rep;
}

void emit_tables(const std::vector<Table>& tables, const RunConfig& cfg) {
    const std::string rendered = render_tables(tables, cfg.format);
    if (cfg.out.empty())
        std::cout << rendered;
    else
        write_file_atomic(cfg.out, rendered);
}

}  // namespace qws
