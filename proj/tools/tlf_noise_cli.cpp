// Command-line front end: config-driven parameter sweeps over the single-TLF
// and ensemble spectral densities, oracle comparisons, and figure-data
// reproduction. Emits CSV plus a JSON sidecar echoing the resolved
// configuration.
//
// Exit codes: 0 success, 2 config error, 3 numerical-convergence failure,
// 4 I/O failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "tlfnoise/bloch_redfield.hpp"
#include "tlfnoise/ensemble.hpp"
#include "tlfnoise/spectator.hpp"
#include "tlfnoise/superop.hpp"
#include "tlfnoise/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace tlfnoise;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitIo = 4;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConvergenceFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// config schema

struct GridSpec {
    double omega_min = 1e-9;  // rad/ps
    double omega_max = 1e3;
    int points_per_sign = 161;
    bool signed_grid = true;
};

struct RunConfig {
    std::string mode = "single-tlf";
    std::string output_dir = "out";
    int threads = 0;

    double temperature_kelvin = 0.04;
    std::vector<double> temperatures_kelvin;  // crossover sweeps

    double tlf_epsilon_kelvin = 0.0;
    double tlf_delta_kelvin = 0.08;

    double bath_j0_ps2 = 364.64135723480488;  // matches the single-TLF operating point
    double bath_omega_d_kelvin = 470.0;

    int alpha = 0;
    double eps_min_kelvin = 0.0;
    double eps_max_kelvin = 4.0;
    double delta_min_kelvin = 2e-6;
    double delta_max_kelvin = 4.0;
    double n_tlf = 1000.0;
    double dipole_ratio = 1e-4;
    double ensemble_rtol = 1e-4;
    std::string method = "SQ";  // SQ | BR | both

    double spectator_omega_q_kelvin = 0.16;
    double spectator_kappa_ratio = 1e-3;  // kappa / omega_q

    GridSpec grid;

    int figure = 2;
    double fdt_tolerance = 1e-10;
    double pt_tolerance = 1e-4;
    double rate_tolerance = 1e-2;
};

void check_known_keys(const json& j, const std::vector<std::string>& known,
                      const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw ConfigError("unknown key '" + key + "' in " + where);
        }
    }
}

template <typename T>
void load(const json& j, const char* key, T& out) {
    if (j.contains(key)) j.at(key).get_to(out);
}

RunConfig parse_config(const json& j) {
    RunConfig c;
    check_known_keys(j, {"mode", "output_dir", "threads", "temperature_kelvin",
                         "temperatures_kelvin", "tlf", "bath", "ensemble", "spectator",
                         "grid", "figure", "tolerance"},
                     "top level");
    load(j, "mode", c.mode);
    load(j, "output_dir", c.output_dir);
    load(j, "threads", c.threads);
    load(j, "temperature_kelvin", c.temperature_kelvin);
    load(j, "temperatures_kelvin", c.temperatures_kelvin);
    load(j, "figure", c.figure);

    if (j.contains("tlf")) {
        const json& t = j.at("tlf");
        check_known_keys(t, {"epsilon_kelvin", "delta_kelvin"}, "tlf");
        load(t, "epsilon_kelvin", c.tlf_epsilon_kelvin);
        load(t, "delta_kelvin", c.tlf_delta_kelvin);
    }
    if (j.contains("bath")) {
        const json& b = j.at("bath");
        check_known_keys(b, {"j0_ps2", "omega_d_kelvin"}, "bath");
        load(b, "j0_ps2", c.bath_j0_ps2);
        load(b, "omega_d_kelvin", c.bath_omega_d_kelvin);
    }
    if (j.contains("ensemble")) {
        const json& e = j.at("ensemble");
        check_known_keys(e,
                         {"alpha", "eps_min_kelvin", "eps_max_kelvin", "delta_min_kelvin",
                          "delta_max_kelvin", "n_tlf", "dipole_ratio", "rtol", "method"},
                         "ensemble");
        load(e, "alpha", c.alpha);
        load(e, "eps_min_kelvin", c.eps_min_kelvin);
        load(e, "eps_max_kelvin", c.eps_max_kelvin);
        load(e, "delta_min_kelvin", c.delta_min_kelvin);
        load(e, "delta_max_kelvin", c.delta_max_kelvin);
        load(e, "n_tlf", c.n_tlf);
        load(e, "dipole_ratio", c.dipole_ratio);
        load(e, "rtol", c.ensemble_rtol);
        load(e, "method", c.method);
    }
    if (j.contains("spectator")) {
        const json& s = j.at("spectator");
        check_known_keys(s, {"omega_q_kelvin", "kappa_over_omega_q"}, "spectator");
        load(s, "omega_q_kelvin", c.spectator_omega_q_kelvin);
        load(s, "kappa_over_omega_q", c.spectator_kappa_ratio);
    }
    if (j.contains("grid")) {
        const json& g = j.at("grid");
        check_known_keys(g, {"omega_min_rad_per_ps", "omega_max_rad_per_ps",
                             "points_per_sign", "signed"},
                         "grid");
        load(g, "omega_min_rad_per_ps", c.grid.omega_min);
        load(g, "omega_max_rad_per_ps", c.grid.omega_max);
        load(g, "points_per_sign", c.grid.points_per_sign);
        load(g, "signed", c.grid.signed_grid);
    }
    if (j.contains("tolerance")) {
        const json& t = j.at("tolerance");
        check_known_keys(t, {"fdt", "pt_rates", "extracted_rates"}, "tolerance");
        load(t, "fdt", c.fdt_tolerance);
        load(t, "pt_rates", c.pt_tolerance);
        load(t, "extracted_rates", c.rate_tolerance);
    }
    return c;
}

json config_echo(const RunConfig& c) {
    json j;
    j["mode"] = c.mode;
    j["output_dir"] = c.output_dir;
    j["threads"] = c.threads;
    j["temperature_kelvin"] = c.temperature_kelvin;
    if (!c.temperatures_kelvin.empty()) j["temperatures_kelvin"] = c.temperatures_kelvin;
    j["tlf"] = {{"epsilon_kelvin", c.tlf_epsilon_kelvin}, {"delta_kelvin", c.tlf_delta_kelvin}};
    j["bath"] = {{"j0_ps2", c.bath_j0_ps2}, {"omega_d_kelvin", c.bath_omega_d_kelvin}};
    j["ensemble"] = {{"alpha", c.alpha},
                     {"eps_min_kelvin", c.eps_min_kelvin},
                     {"eps_max_kelvin", c.eps_max_kelvin},
                     {"delta_min_kelvin", c.delta_min_kelvin},
                     {"delta_max_kelvin", c.delta_max_kelvin},
                     {"n_tlf", c.n_tlf},
                     {"dipole_ratio", c.dipole_ratio},
                     {"rtol", c.ensemble_rtol},
                     {"method", c.method}};
    j["spectator"] = {{"omega_q_kelvin", c.spectator_omega_q_kelvin},
                      {"kappa_over_omega_q", c.spectator_kappa_ratio}};
    j["grid"] = {{"omega_min_rad_per_ps", c.grid.omega_min},
                 {"omega_max_rad_per_ps", c.grid.omega_max},
                 {"points_per_sign", c.grid.points_per_sign},
                 {"signed", c.grid.signed_grid}};
    j["figure"] = c.figure;
    j["tolerance"] = {{"fdt", c.fdt_tolerance},
                      {"pt_rates", c.pt_tolerance},
                      {"extracted_rates", c.rate_tolerance}};
    return j;
}

// ---------------------------------------------------------------------------
// derived physics objects

TlfParams config_tlf(const RunConfig& c) {
    return make_tlf(kelvin_to_omega(c.tlf_epsilon_kelvin), kelvin_to_omega(c.tlf_delta_kelvin));
}

BathSpec config_bath(const RunConfig& c) {
    return BathSpec(c.bath_j0_ps2, kelvin_to_omega(c.bath_omega_d_kelvin));
}

EnsembleDist config_dist(const RunConfig& c, int alpha) {
    return EnsembleDist(alpha, kelvin_to_omega(c.eps_min_kelvin),
                        kelvin_to_omega(c.eps_max_kelvin), kelvin_to_omega(c.delta_min_kelvin),
                        kelvin_to_omega(c.delta_max_kelvin), c.n_tlf, c.dipole_ratio);
}

std::vector<double> config_grid(const RunConfig& c) {
    if (c.grid.signed_grid) {
        return signed_log_grid(c.grid.omega_min, c.grid.omega_max, c.grid.points_per_sign);
    }
    return log_grid(c.grid.omega_min, c.grid.omega_max, c.grid.points_per_sign);
}

// ---------------------------------------------------------------------------
// output plumbing

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

class CsvWriter {
public:
    CsvWriter(const fs::path& path, const std::vector<std::string>& columns) : path_(path) {
        out_.open(path);
        if (!out_.good()) throw IoError("cannot open " + path.string());
        for (size_t i = 0; i < columns.size(); ++i) {
            out_ << columns[i] << (i + 1 < columns.size() ? "," : "\n");
        }
    }

    void row(const std::vector<double>& values) {
        for (size_t i = 0; i < values.size(); ++i) {
            out_ << fmt17(values[i]) << (i + 1 < values.size() ? "," : "\n");
        }
    }

    void close() {
        out_.close();
        if (out_.fail()) throw IoError("write failed for " + path_.string());
    }

private:
    fs::path path_;
    std::ofstream out_;
};

void write_sidecar(const fs::path& dir, const std::string& stem, const RunConfig& c,
                   const json& extra = json::object()) {
    json j;
    j["library_version"] = kVersion;
    j["config"] = config_echo(c);
    if (!extra.empty()) j["result"] = extra;
    std::ofstream out(dir / (stem + ".meta.json"));
    if (!out.good()) throw IoError("cannot open sidecar for " + stem);
    out << j.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// modes

int run_single_tlf(const RunConfig& c) {
    const TlfParams tlf = config_tlf(c);
    const BathSpec bath = config_bath(c);
    const Temperature temp(c.temperature_kelvin);
    const BrRates br = br_rates(tlf, bath, temp);
    const std::vector<double> grid = config_grid(c);

    const fs::path dir(c.output_dir);
    fs::create_directories(dir);
    CsvWriter csv(dir / "single_tlf.csv",
                  {"omega_rad_per_ps", "s_zz_br_ps", "s_xx_br_ps", "s_br_ps", "s_zz_sq_ps",
                   "s_xx_sq_ps", "s_sq_ps"});
    for (double w : grid) {
        const RateSet r = rate_set_at(tlf, w, bath, temp);
        const TlfOccupations occ = tlf_occupations(r);
        const double zz = s_zz_sq(w, r, occ);
        const double xx = s_xx_sq(w, r, tlf);
        csv.row({w, s_zz_br(w, br), s_xx_br(w, tlf, br), s_br_total(w, tlf, br), zz, xx,
                 tlf.cos2_theta() * zz + tlf.sin2_theta() * xx});
    }
    csv.close();
    write_sidecar(dir, "single_tlf", c);
    return kExitOk;
}

int run_verify_fdt(const RunConfig& c) {
    const TlfParams tlf = config_tlf(c);
    const BathSpec bath = config_bath(c);
    const Temperature temp(c.temperature_kelvin);
    const double beta = temp.beta();

    const std::vector<double> grid = config_grid(c);
    double worst = 0.0;
    for (double w : grid) {
        // beyond beta*omega ~ 600 the Boltzmann factor leaves the range of
        // normalized doubles and the identity is not measurable
        if (w <= 0.0 || beta * w > 600.0) continue;
        auto resid = [&](double sp, double sm) {
            const double want = sp * std::exp(-beta * w);
            return std::abs(sm - want) / want;
        };
        worst = std::max(worst, resid(s_zz_sq(w, tlf, bath, temp), s_zz_sq(-w, tlf, bath, temp)));
        worst = std::max(worst, resid(s_xx_sq(w, tlf, bath, temp), s_xx_sq(-w, tlf, bath, temp)));
        worst = std::max(worst, resid(s_tlf(w, tlf, bath, temp), s_tlf(-w, tlf, bath, temp)));
    }

    const fs::path dir(c.output_dir);
    fs::create_directories(dir);
    CsvWriter csv(dir / "verify_fdt.csv", {"max_relative_residual", "tolerance"});
    csv.row({worst, c.fdt_tolerance});
    csv.close();
    write_sidecar(dir, "verify_fdt", c, {{"max_relative_residual", worst}});

    std::cout << "max FDT residual " << fmt17(worst) << " (tolerance " << c.fdt_tolerance
              << ")\n";
    if (worst > c.fdt_tolerance) {
        throw ConvergenceFailure("FDT residual above tolerance");
    }
    return kExitOk;
}

Method parse_method(const std::string& m) {
    if (m == "SQ") return Method::spectator;
    if (m == "BR") return Method::bloch_redfield;
    throw ConfigError("ensemble.method must be SQ, BR or both");
}

int run_ensemble(const RunConfig& c) {
    const BathSpec bath = config_bath(c);
    const Temperature temp(c.temperature_kelvin);
    const EnsembleDist dist = config_dist(c, c.alpha);
    const std::vector<double> grid = config_grid(c);

    std::vector<Method> methods;
    if (c.method == "both") {
        methods = {Method::spectator, Method::bloch_redfield};
    } else {
        methods = {parse_method(c.method)};
    }

    const fs::path dir(c.output_dir);
    fs::create_directories(dir);
    bool all_ok = true;
    for (Method m : methods) {
        bool ok = true;
        const SpectralCurve per =
            ensemble_curve(grid, dist, bath, temp, m, c.ensemble_rtol, c.threads, &ok);
        const SpectralCurve tot = with_total(per, dist);
        const SpectralCurve q = charge_noise(tot, dist);
        all_ok = all_ok && ok;

        const std::string stem = std::string("ensemble_alpha") + std::to_string(c.alpha) +
                                 "_" + (m == Method::spectator ? "sq" : "br");
        CsvWriter csv(dir / (stem + ".csv"),
                      {"omega_rad_per_ps", "s_per_tlf_ps", "s_total_ps", "sq_over_e2_ps"});
        for (size_t i = 0; i < per.omegas.size(); ++i) {
            csv.row({per.omegas[i], per.values[i], tot.values[i], q.values[i]});
        }
        csv.close();
        write_sidecar(dir, stem, c, {{"converged", ok}});
    }
    if (!all_ok) throw ConvergenceFailure("ensemble quadrature did not converge everywhere");
    return kExitOk;
}

// The closed-form crossover describes the zz part of the average; the
// resonant xx background would bury its 1/f^2 window at higher temperatures,
// so the extraction runs on the zz component with a deep 1/f sampling.
CrossoverFit extract_crossover(int alpha, const BathSpec& bath, const Temperature& temp,
                               const RunConfig& c) {
    const EnsembleDist dist = config_dist(c, alpha);
    const double ws = crossover_analytic(temp, bath, alpha);
    std::vector<double> grid;
    for (double lf = -5.0; lf <= 3.01; lf += 0.125) {
        grid.push_back(ws * std::pow(10.0, lf));
    }
    bool ok = true;
    const SpectralCurve curve =
        ensemble_curve(grid, dist, bath, temp, Method::spectator, c.ensemble_rtol * 0.1,
                       c.threads, &ok, Component::zz);
    if (!ok) throw ConvergenceFailure("crossover curve quadrature did not converge");
    return crossover_numeric(curve, 0.05);
}

int run_crossover(const RunConfig& c) {
    const BathSpec bath = config_bath(c);
    std::vector<double> temps = c.temperatures_kelvin;
    if (temps.empty()) temps = {0.010, 0.020, 0.040, 0.080};

    const fs::path dir(c.output_dir);
    fs::create_directories(dir);
    CsvWriter csv(dir / "crossover.csv",
                  {"temperature_kelvin", "alpha", "omega_star_numeric_rad_per_ps",
                   "omega_star_analytic_rad_per_ps", "ratio"});

    json summary;
    for (int alpha : {1, 0}) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (double t : temps) {
            const Temperature temp(t);
            const CrossoverFit fit = extract_crossover(alpha, bath, temp, c);
            const double ref = crossover_analytic(temp, bath, alpha);
            csv.row({t, double(alpha), fit.omega_star, ref, fit.omega_star / ref});
            const double lx = std::log(t), ly = std::log(fit.omega_star);
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
        }
        const double n = static_cast<double>(temps.size());
        const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        std::cout << "alpha=" << alpha << ": ln w* vs ln T slope = " << slope << "\n";
        summary["slope_alpha" + std::to_string(alpha)] = slope;
    }
    csv.close();
    write_sidecar(dir, "crossover", c, summary);
    return kExitOk;
}

int run_oracle_compare(const RunConfig& c) {
    using namespace superop;
    const TlfParams tlf = config_tlf(c);
    const BathSpec bath = config_bath(c);
    const Temperature temp(c.temperature_kelvin);
    const double wq = kelvin_to_omega(c.spectator_omega_q_kelvin);
    const double kappa = c.spectator_kappa_ratio * wq;

    const fs::path dir(c.output_dir);
    fs::create_directories(dir);
    CsvWriter csv(dir / "oracle_compare.csv",
                  {"phi_is_sigma_x", "gamma_down_closed", "gamma_up_closed", "gamma_down_pt",
                   "gamma_up_pt", "gamma_down_eigen", "gamma_up_eigen", "gamma_down_ode",
                   "gamma_up_ode"});

    double worst_pt = 0.0, worst_extract = 0.0;
    for (PhiSelector phi : {PhiSelector::sigma_z, PhiSelector::sigma_x}) {
        const RateSet r = rate_set_at(tlf, wq, bath, temp);
        const QubitRates cf = (phi == PhiSelector::sigma_z)
                                  ? qubit_rates_z(r, tlf_occupations(r), wq)
                                  : qubit_rates_x(r, tlf, wq);
        const PtResult pt = rates_from_pt(tlf, wq, phi, bath, temp);
        const DegenerateSubspace sub = degenerate_subspace(r);
        const Superoperator lam = build_lambda(tlf, wq, kappa, phi, bath, temp);
        const EigenRatesResult er = rates_from_eigen(lam, sub, kappa);
        const double total = (cf.up + cf.down) * kappa * kappa;
        const OdeFitResult ode = rates_from_ode(lam, sub, kappa, 5.0 / total);

        csv.row({phi == PhiSelector::sigma_x ? 1.0 : 0.0, cf.down, cf.up, pt.rates.down,
                 pt.rates.up, er.rates.down, er.rates.up, ode.rates.down, ode.rates.up});

        worst_pt = std::max({worst_pt, std::abs(pt.rates.down / cf.down - 1.0),
                             std::abs(pt.rates.up / cf.up - 1.0)});
        worst_extract = std::max({worst_extract, std::abs(er.rates.down / cf.down - 1.0),
                                  std::abs(er.rates.up / cf.up - 1.0),
                                  std::abs(ode.rates.down / cf.down - 1.0),
                                  std::abs(ode.rates.up / cf.up - 1.0)});
    }
    csv.close();
    write_sidecar(dir, "oracle_compare", c,
                  {{"worst_pt_error", worst_pt}, {"worst_extract_error", worst_extract}});

    std::cout << "perturbation theory vs closed forms: " << fmt17(worst_pt)
              << "\neigen/relaxation extraction vs closed forms: " << fmt17(worst_extract)
              << "\n";
    if (worst_pt > c.pt_tolerance || worst_extract > c.rate_tolerance) {
        throw ConvergenceFailure("oracle disagreement above tolerance");
    }
    return kExitOk;
}

int run_reproduce(const RunConfig& c) {
    const fs::path dir(c.output_dir);
    fs::create_directories(dir);

    if (c.figure == 3) {
        throw ConfigError("figure 3 shows perturbative processes; no data to reproduce");
    }

    if (c.figure == 2) {
        RunConfig local = c;
        local.tlf_epsilon_kelvin = 0.0;
        local.tlf_delta_kelvin = 0.08;
        local.bath_j0_ps2 = 364.64135723480488;
        local.bath_omega_d_kelvin = 470.0;
        const TlfParams tlf = config_tlf(local);
        const BathSpec bath = config_bath(local);
        const std::vector<double> grid =
            signed_log_grid(1e-3 * tlf.omega_t, 1e3 * tlf.omega_t, 161);

        const Temperature t40(0.04);
        const BrRates br40 = br_rates(tlf, bath, t40);
        CsvWriter a(dir / "figure2a.csv", {"omega_rad_per_ps", "s_zz_br_ps", "s_zz_sq_ps",
                                           "s_xx_br_ps", "s_xx_sq_ps"});
        for (double w : grid) {
            a.row({w, s_zz_br(w, br40), s_zz_sq(w, tlf, bath, t40), s_xx_br(w, tlf, br40),
                   s_xx_sq(w, tlf, bath, t40)});
        }
        a.close();

        const std::vector<double> temps = {0.010, 0.020, 0.040};
        CsvWriter b(dir / "figure2b.csv",
                    {"omega_rad_per_ps", "s_zz_sq_10mk_ps", "s_zz_sq_20mk_ps",
                     "s_zz_sq_40mk_ps", "s_zz_br_10mk_ps", "s_zz_br_20mk_ps",
                     "s_zz_br_40mk_ps"});
        for (double w : grid) {
            std::vector<double> row{w};
            for (double t : temps) row.push_back(s_zz_sq(w, tlf, bath, Temperature(t)));
            for (double t : temps) {
                row.push_back(s_zz_br(w, br_rates(tlf, bath, Temperature(t))));
            }
            b.row(row);
        }
        b.close();
        write_sidecar(dir, "figure2", c);
        return kExitOk;
    }

    if (c.figure == 4) {
        RunConfig local = c;
        local.bath_j0_ps2 = 0.047;
        local.bath_omega_d_kelvin = 470.0;
        const BathSpec bath = config_bath(local);
        const Temperature temp(0.010);
        const std::vector<double> grid = config_grid(local);
        bool all_ok = true;
        for (int alpha : {1, 0}) {
            const EnsembleDist dist = config_dist(local, alpha);
            for (Method m : {Method::spectator, Method::bloch_redfield}) {
                bool ok = true;
                const SpectralCurve per = ensemble_curve(grid, dist, bath, temp, m,
                                                         local.ensemble_rtol, local.threads, &ok);
                all_ok = all_ok && ok;
                const SpectralCurve q = charge_noise(with_total(per, dist), dist);
                const std::string stem = std::string("figure4_alpha") + std::to_string(alpha) +
                                         (m == Method::spectator ? "_sq" : "_br");
                CsvWriter csv(dir / (stem + ".csv"),
                              {"omega_rad_per_ps", "sq_over_e2_ps", "s_per_tlf_ps"});
                for (size_t i = 0; i < per.omegas.size(); ++i) {
                    csv.row({per.omegas[i], q.values[i], per.values[i]});
                }
                csv.close();
            }
        }
        write_sidecar(dir, "figure4", c, {{"converged", all_ok}});
        if (!all_ok) throw ConvergenceFailure("figure 4 quadrature did not converge");
        return kExitOk;
    }

    if (c.figure == 5) {
        RunConfig local = c;
        local.bath_j0_ps2 = 0.047;
        local.bath_omega_d_kelvin = 470.0;
        return run_crossover(local);
    }

    throw ConfigError("unsupported figure id " + std::to_string(c.figure) +
                      " (supported: 2, 4, 5)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum noise spectral densities of two-level fluctuators"};
    app.set_version_flag("--version", kVersion);

    std::string config_path;
    std::optional<std::string> mode, output_dir, method;
    std::optional<double> temperature, rtol, dipole;
    std::optional<int> alpha, figure, threads;

    app.add_option("-c,--config", config_path, "JSON configuration file");
    app.add_option("--mode", mode,
                   "single-tlf | ensemble | crossover | verify-fdt | oracle-compare | reproduce");
    app.add_option("--output-dir", output_dir, "output directory");
    app.add_option("--temperature", temperature, "temperature in kelvin");
    app.add_option("--alpha", alpha, "ensemble distribution exponent (0 or 1)");
    app.add_option("--method", method, "SQ | BR | both");
    app.add_option("--figure", figure, "figure id for --mode reproduce");
    app.add_option("--threads", threads, "worker threads (0 = hardware)");
    app.add_option("--rtol", rtol, "ensemble quadrature relative tolerance");
    app.add_option("--dipole-ratio", dipole, "charge-noise conversion ratio p/(eL)");

    CLI11_PARSE(app, argc, argv);

    try {
        json j = json::object();
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in.good()) throw IoError("cannot open config file " + config_path);
            try {
                in >> j;
            } catch (const json::exception& e) {
                throw ConfigError(std::string("config parse failure: ") + e.what());
            }
        }
        RunConfig cfg;
        try {
            cfg = parse_config(j);
        } catch (const json::exception& e) {
            throw ConfigError(std::string("config type error: ") + e.what());
        }

        // flags win over file values
        if (mode) cfg.mode = *mode;
        if (output_dir) cfg.output_dir = *output_dir;
        if (temperature) cfg.temperature_kelvin = *temperature;
        if (alpha) cfg.alpha = *alpha;
        if (method) cfg.method = *method;
        if (figure) cfg.figure = *figure;
        if (threads) cfg.threads = *threads;
        if (rtol) cfg.ensemble_rtol = *rtol;
        if (dipole) cfg.dipole_ratio = *dipole;

        if (cfg.mode == "single-tlf") return run_single_tlf(cfg);
        if (cfg.mode == "ensemble") return run_ensemble(cfg);
        if (cfg.mode == "crossover") return run_crossover(cfg);
        if (cfg.mode == "verify-fdt") return run_verify_fdt(cfg);
        if (cfg.mode == "oracle-compare") return run_oracle_compare(cfg);
        if (cfg.mode == "reproduce") return run_reproduce(cfg);
        throw ConfigError("unknown mode '" + cfg.mode + "'");
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const InvalidParameter& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ConvergenceFailure& e) {
        std::cerr << "convergence failure: " << e.what() << "\n";
        return kExitConvergence;
    } catch (const WindowDetectionError& e) {
        std::cerr << "convergence failure: " << e.what() << "\n";
        return kExitConvergence;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}
