// sqz: detuning sweeps, quadrature-noise tables and parameter optimizers for
// squeezed-vacuum generation by polarization self-rotation.
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>

#include "CLI11.hpp"

#include "sqz/buffer.hpp"
#include "sqz/config.hpp"
#include "sqz/constants.hpp"
#include "sqz/emit.hpp"
#include "sqz/errors.hpp"
#include "sqz/quadrature.hpp"
#include "sqz/sweep.hpp"
#include "sqz/transitions.hpp"
#include "sqz/version.hpp"

namespace {

struct GlobalOpts {
  std::string config_path;
  std::string output_path;  // empty -> stdout
  std::string format = "csv";
  int threads = 1;
  std::uint64_t seed = 12345;  // Monte-Carlo check column only
};

sqz::OutputFormat parse_format(const std::string& f) {
  if (f == "csv") return sqz::OutputFormat::csv;
  if (f == "json") return sqz::OutputFormat::json;
  throw CLI::ValidationError("--format must be csv or json");
}

// All emission goes through a stream chosen once, so every subcommand is
// stdout/file agnostic.
int with_output(const GlobalOpts& g,
                const std::function<void(std::ostream&)>& body) {
  if (g.output_path.empty()) {
    body(std::cout);
    return 0;
  }
  std::ofstream out(g.output_path, std::ios::binary);
  if (!out) {
    std::cerr << "sqz: cannot open " << g.output_path << " for writing\n";
    return 1;
  }
  body(out);
  out.flush();
  if (!out) {
    std::cerr << "sqz: write failed for " << g.output_path << "\n";
    return 1;
  }
  return 0;
}

std::string fmt(double v) { return sqz::format_double(v); }

sqz::TransitionSpec default_medium(sqz::TransitionKind kind, double gamma0,
                                   double gamma_ratio, double wavelength_nm,
                                   double density) {
  sqz::TransitionSpec m;
  m.system = kind;
  m.gamma0 = gamma0;
  m.gamma = gamma_ratio * gamma0;
  m.wavelength = wavelength_nm * 1e-7;
  m.density = density;
  m.Jg = 0.5;
  m.Je = kind == sqz::TransitionKind::x_half_half ? 0.5 : 1.5;
  m.dipole = sqz::radiative_dipole(m.gamma0, m.wavelength) *
             std::sqrt(2.0 * m.Je + 1.0);
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"squeezed vacuum by polarization self-rotation"};
  app.set_version_flag("--version", std::string("sqz ") + sqz::version);
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--config", g.config_path, "atom/buffer constants (JSON)");
  app.add_option("--output", g.output_path, "output path (default stdout)");
  app.add_option("--format", g.format, "csv|json")->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads for sweeps")
      ->capture_default_str();
  app.add_option("--seed", g.seed, "RNG seed (Monte-Carlo check column only)")
      ->capture_default_str();

  // --- quadrature: v(chi) table at fixed slab numbers -----------------------
  auto* quad = app.add_subcommand("quadrature", "quadrature variance vs LO phase");
  double q_gell = 5.0, q_alphaell = 0.0;
  int q_points = 181;
  long long q_mc = 0;
  quad->add_option("--g-ell", q_gell, "rotation strength g*l")
      ->capture_default_str();
  quad->add_option("--alpha-ell", q_alphaell, "absorption depth alpha*l")
      ->capture_default_str();
  quad->add_option("--points", q_points, "phase grid points on [0, pi)")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  quad->add_option("--mc-samples", q_mc,
                   "add a Monte-Carlo variance column with this many samples")
      ->capture_default_str();

  // --- analytic: closed-form detuning sweep ---------------------------------
  auto* ana = app.add_subcommand("analytic", "closed-form detuning sweep");
  std::string a_system = "x";
  double a_kappa = 1e8, a_density = 1e13, a_length = 10.0;
  double a_gamma0_mhz = 5.746, a_gamma_ratio = 1e-3, a_lambda_nm = 794.978851;
  double a_from = NAN, a_to = NAN;
  int a_points = 201;
  ana->add_option("--system", a_system, "x (1/2->1/2) or d2 (1/2->3/2)")
      ->check(CLI::IsMember({"x", "d2"}))
      ->capture_default_str();
  ana->add_option("--kappa", a_kappa, "saturation parameter")
      ->capture_default_str();
  ana->add_option("--density", a_density, "atoms/cm^3")->capture_default_str();
  ana->add_option("--length", a_length, "cell length, cm")
      ->capture_default_str();
  ana->add_option("--gamma0-2pi-mhz", a_gamma0_mhz, "excited decay rate")
      ->capture_default_str();
  ana->add_option("--gamma-ratio", a_gamma_ratio, "gamma/gamma0")
      ->capture_default_str();
  ana->add_option("--wavelength-nm", a_lambda_nm, "transition wavelength")
      ->capture_default_str();
  ana->add_option("--from", a_from, "detuning start, gamma0 units (default 0)");
  ana->add_option("--to", a_to,
                  "detuning end, gamma0 units (default 2x optimal)");
  ana->add_option("--points", a_points, "grid points")->capture_default_str();

  // --- dm: hyperfine density-matrix sweep -----------------------------------
  auto* dm = app.add_subcommand("dm", "density-matrix D-line sweep");
  sqz::DLineScanParams d_params;
  dm->add_option("--line", d_params.line, "line name in config")
      ->capture_default_str();
  dm->add_option("--ground-f", d_params.ground_f, "ground hyperfine level")
      ->capture_default_str();
  dm->add_option("--power-mw", d_params.power_mW, "beam power")
      ->capture_default_str();
  dm->add_option("--beam-cm", d_params.beam_diameter_cm, "beam diameter")
      ->capture_default_str();
  dm->add_option("--density", d_params.density_cm3, "atoms/cm^3")
      ->capture_default_str();
  dm->add_option("--length", d_params.cell_length_cm, "cell length, cm")
      ->capture_default_str();
  dm->add_option("--from", d_params.from, "detuning start, gamma0 units")
      ->capture_default_str();
  dm->add_option("--to", d_params.to, "detuning end, gamma0 units")
      ->capture_default_str();
  dm->add_option("--points", d_params.points, "grid points")
      ->capture_default_str();
  dm->add_option("--gh-order", d_params.gh_order, "Doppler quadrature order")
      ->capture_default_str();
  double d_doppler_mhz = -1.0;
  dm->add_option("--doppler-2pi-mhz", d_doppler_mhz,
                 "Doppler width override (<0: config value)")
      ->capture_default_str();

  // --- kappa-scan: per-kappa optimized squeezing ----------------------------
  auto* ks = app.add_subcommand("kappa-scan", "squeezing vs saturation");
  std::string k_system = "x";
  sqz::KappaScanParams k_params;
  ks->add_option("--system", k_system, "x, d2 or dm")
      ->check(CLI::IsMember({"x", "d2", "dm"}))
      ->capture_default_str();
  ks->add_option("--kappa-from", k_params.kappa_from, "grid start")
      ->capture_default_str();
  ks->add_option("--kappa-to", k_params.kappa_to, "grid end")
      ->capture_default_str();
  ks->add_option("--points", k_params.points, "log-spaced points")
      ->capture_default_str();
  sqz::DLineScanParams k_base;
  k_base.points = 41;
  k_base.gh_order = 32;
  ks->add_option("--line", k_base.line, "dm: line name")->capture_default_str();
  ks->add_option("--ground-f", k_base.ground_f, "dm: ground hyperfine level")
      ->capture_default_str();
  ks->add_option("--scan-points", k_base.points, "dm: detuning points per kappa")
      ->capture_default_str();
  ks->add_option("--gh-order", k_base.gh_order, "dm: Doppler quadrature order")
      ->capture_default_str();

  // --- buffer: effective rates vs buffer density ----------------------------
  auto* buf = app.add_subcommand("buffer", "buffer-gas saturation gain");
  double b_from = 1e16, b_to = 1e21;
  int b_points = 51;
  bool b_optimize = false;
  buf->add_option("--nb-from", b_from, "buffer density start, cm^-3")
      ->capture_default_str();
  buf->add_option("--nb-to", b_to, "buffer density end, cm^-3")
      ->capture_default_str();
  buf->add_option("--points", b_points, "log-spaced points")
      ->capture_default_str();
  buf->add_flag("--optimize", b_optimize, "emit only the optimum density row");

  // --- optimize: detuning + density for best squeezing ----------------------
  auto* opt = app.add_subcommand("optimize", "optimal detuning and density");
  std::string o_system = "x";
  double o_kappa = 1e8, o_length = 10.0;
  double o_gamma0_mhz = 5.746, o_gamma_ratio = 1e-3, o_lambda_nm = 794.978851;
  opt->add_option("--system", o_system, "x or d2")
      ->check(CLI::IsMember({"x", "d2"}))
      ->capture_default_str();
  opt->add_option("--kappa", o_kappa, "saturation parameter")
      ->capture_default_str();
  opt->add_option("--length", o_length, "cell length, cm")
      ->capture_default_str();
  opt->add_option("--gamma0-2pi-mhz", o_gamma0_mhz, "excited decay rate")
      ->capture_default_str();
  opt->add_option("--gamma-ratio", o_gamma_ratio, "gamma/gamma0")
      ->capture_default_str();
  opt->add_option("--wavelength-nm", o_lambda_nm, "transition wavelength")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    // CLI11's own exit codes are per-error-class; collapse them to the
    // documented "1 = usage".
    app.exit(e);
    return 1;
  }

  try {
    sqz::OutputFormat format = parse_format(g.format);
    auto load_config = [&]() {
      if (g.config_path.empty())
        throw sqz::ConfigError("this subcommand needs --config");
      return sqz::load_atom_config(g.config_path);
    };

    if (*quad) {
      std::vector<double> chi(q_points), var(q_points), mc;
      sqz::QuadratureGeometry geom{q_gell, q_alphaell};
      for (int i = 0; i < q_points; ++i) {
        chi[i] = sqz::consts::pi * i / q_points;
        var[i] = sqz::variance(geom, chi[i]);
      }
      sqz::RunMetadata meta{"quadrature",
                            {{"g_ell", fmt(q_gell)},
                             {"alpha_ell", fmt(q_alphaell)},
                             {"points", std::to_string(q_points)}}};
      if (q_mc > 0) {
        // Empirical lossless variance: push Gaussian vacuum quadratures
        // through the linear output map and measure the chi quadrature.
        mc.resize(q_points);
        std::mt19937_64 rng(g.seed);
        std::normal_distribution<double> gauss(0.0, 0.5);
        meta.parameters.emplace_back("mc_samples", std::to_string(q_mc));
        meta.parameters.emplace_back("seed", std::to_string(g.seed));
        std::vector<std::complex<double>> amps(q_mc);
        for (auto& a : amps) {
          std::complex<double> a0{gauss(rng), gauss(rng)};
          a = a0 + std::complex<double>{0.0, 0.5 * q_gell} *
                       (std::conj(a0) - a0);
        }
        for (int i = 0; i < q_points; ++i) {
          double m1 = 0.0, m2 = 0.0;
          for (const auto& a : amps) {
            double e = 2.0 * (a * std::polar(1.0, chi[i])).real();
            m1 += e;
            m2 += e * e;
          }
          m1 /= static_cast<double>(q_mc);
          m2 /= static_cast<double>(q_mc);
          mc[i] = m2 - m1 * m1;
        }
        return with_output(g, [&](std::ostream& os) {
          sqz::emit_table(os, {"chi_rad", "variance_vacuum", "variance_mc"},
                          {chi, var, mc}, format, meta);
        });
      }
      return with_output(g, [&](std::ostream& os) {
        sqz::emit_xy(os, "chi_rad", "variance_vacuum", chi, var, format, meta);
      });
    }

    if (*ana) {
      sqz::TransitionKind kind = a_system == "x"
                                     ? sqz::TransitionKind::x_half_half
                                     : sqz::TransitionKind::half_threehalves;
      sqz::SweepSpec spec;
      spec.model = a_system == "x" ? sqz::SweepModel::analytic_x
                                   : sqz::SweepModel::analytic_d2;
      spec.kappa = a_kappa;
      spec.medium = default_medium(kind, 2.0 * sqz::consts::pi * 1e6 * a_gamma0_mhz,
                                   a_gamma_ratio, a_lambda_nm, a_density);
      spec.cell_length_cm = a_length;
      double d_opt = sqz::optimal_detuning(kind, a_kappa);
      spec.from = std::isnan(a_from) ? 0.0 : a_from;
      spec.to = std::isnan(a_to) ? 2.0 * d_opt : a_to;
      spec.points = a_points;
      spec.threads = g.threads;
      std::vector<sqz::ScanRow> rows = sqz::run_sweep(spec);
      sqz::RunMetadata meta{a_system == "x" ? "analytic_x" : "analytic_d2",
                            {{"kappa", fmt(a_kappa)},
                             {"density_cm3", fmt(a_density)},
                             {"cell_length_cm", fmt(a_length)},
                             {"gamma0_2pi_mhz", fmt(a_gamma0_mhz)},
                             {"gamma_ratio", fmt(a_gamma_ratio)},
                             {"wavelength_nm", fmt(a_lambda_nm)},
                             {"from", fmt(spec.from)},
                             {"to", fmt(spec.to)},
                             {"points", std::to_string(a_points)}}};
      return with_output(g, [&](std::ostream& os) {
        sqz::emit_rows(os, rows, format, meta);
      });
    }

    if (*dm) {
      sqz::AtomConfig atom = load_config();
      d_params.threads = g.threads;
      d_params.doppler_width =
          d_doppler_mhz < 0.0 ? -1.0
                              : 2.0 * sqz::consts::pi * 1e6 * d_doppler_mhz;
      std::vector<sqz::ScanRow> rows = sqz::d_line_scan(atom, d_params);
      sqz::RunMetadata meta{
          "dm",
          {{"isotope", atom.isotope},
           {"line", d_params.line},
           {"ground_f", fmt(d_params.ground_f)},
           {"power_mw", fmt(d_params.power_mW)},
           {"beam_cm", fmt(d_params.beam_diameter_cm)},
           {"density_cm3", fmt(d_params.density_cm3)},
           {"cell_length_cm", fmt(d_params.cell_length_cm)},
           {"from", fmt(d_params.from)},
           {"to", fmt(d_params.to)},
           {"points", std::to_string(d_params.points)},
           {"gh_order", std::to_string(d_params.gh_order)}}};
      return with_output(g, [&](std::ostream& os) {
        sqz::emit_rows(os, rows, format, meta);
      });
    }

    if (*ks) {
      std::vector<sqz::KappaRow> rows;
      sqz::RunMetadata meta{"kappa_scan_" + k_system,
                            {{"kappa_from", fmt(k_params.kappa_from)},
                             {"kappa_to", fmt(k_params.kappa_to)},
                             {"points", std::to_string(k_params.points)}}};
      if (k_system == "dm") {
        sqz::AtomConfig atom = load_config();
        k_base.threads = g.threads;
        rows = sqz::kappa_scan_dm(atom, k_base, k_params);
        meta.parameters.emplace_back("line", k_base.line);
        meta.parameters.emplace_back("ground_f", fmt(k_base.ground_f));
      } else {
        sqz::TransitionKind kind = k_system == "x"
                                       ? sqz::TransitionKind::x_half_half
                                       : sqz::TransitionKind::half_threehalves;
        rows = sqz::kappa_scan_analytic(kind, k_params);
      }
      return with_output(g, [&](std::ostream& os) {
        sqz::emit_kappa_rows(os, rows, format, meta);
      });
    }

    if (*buf) {
      sqz::AtomConfig atom = load_config();
      if (!atom.has_buffer)
        throw sqz::ConfigError(g.config_path + ": no buffer block");
      double gamma0 = atom.lines.begin()->second.gamma0;
      sqz::RunMetadata meta{"buffer",
                            {{"isotope", atom.isotope},
                             {"gamma0_rad_s", fmt(gamma0)},
                             {"gamma_free_s", fmt(atom.buffer_gamma_free)}}};
      if (b_optimize) {
        sqz::BufferOptimum best = sqz::optimize_buffer_density(
            atom.buffer, gamma0, atom.buffer_gamma_free);
        return with_output(g, [&](std::ostream& os) {
          sqz::emit_xy(os, "nb_cm3", "kappa_ratio", {best.n_b_opt},
                       {best.rates.kappa_ratio}, format, meta);
        });
      }
      if (b_points < 2 || b_from <= 0.0 || b_to <= b_from)
        throw CLI::ValidationError("buffer: bad density grid");
      std::vector<double> nb(b_points), ratio(b_points);
      double lstep = (std::log10(b_to) - std::log10(b_from)) / (b_points - 1);
      for (int i = 0; i < b_points; ++i) {
        nb[i] = std::pow(10.0, std::log10(b_from) + lstep * i);
        sqz::BufferGasSpec s = atom.buffer;
        s.n_b = nb[i];
        ratio[i] =
            sqz::buffer_rates(s, gamma0, atom.buffer_gamma_free).kappa_ratio;
      }
      return with_output(g, [&](std::ostream& os) {
        sqz::emit_xy(os, "nb_cm3", "kappa_ratio", nb, ratio, format, meta);
      });
    }

    if (*opt) {
      sqz::TransitionKind kind = o_system == "x"
                                     ? sqz::TransitionKind::x_half_half
                                     : sqz::TransitionKind::half_threehalves;
      sqz::SweepModel model = o_system == "x" ? sqz::SweepModel::analytic_x
                                              : sqz::SweepModel::analytic_d2;
      sqz::TransitionSpec medium =
          default_medium(kind, 2.0 * sqz::consts::pi * 1e6 * o_gamma0_mhz,
                         o_gamma_ratio, o_lambda_nm, 1e13);
      sqz::OptimizeResult best =
          sqz::optimize_squeezing(model, medium, o_kappa, o_length);
      return with_output(g, [&](std::ostream& os) {
        if (format == sqz::OutputFormat::csv) {
          os << "detuning_gamma0,density_cm3,g_over_alpha,squeezing_db\n"
             << fmt(best.detuning_opt) << ',' << fmt(best.density_opt) << ','
             << fmt(best.g_over_alpha) << ',' << fmt(best.s_db) << '\n';
        } else {
          os << "{\n  \"metadata\": {\"model\": \"optimize_" << o_system
             << "\", \"kappa\": " << fmt(o_kappa)
             << ", \"cell_length_cm\": " << fmt(o_length)
             << ", \"version\": \"" << sqz::version << "\"},\n"
             << "  \"detuning_gamma0\": " << fmt(best.detuning_opt)
             << ",\n  \"density_cm3\": " << fmt(best.density_opt)
             << ",\n  \"g_over_alpha\": " << fmt(best.g_over_alpha)
             << ",\n  \"squeezing_db\": " << fmt(best.s_db) << "\n}\n";
        }
      });
    }
  } catch (const sqz::ConfigError& e) {
    std::cerr << "sqz: config error: " << e.what() << '\n';
    return 2;
  } catch (const sqz::ConvergenceError& e) {
    std::cerr << "sqz: numerical failure: " << e.what() << '\n';
    return 3;
  } catch (const CLI::Error& e) {
    std::cerr << "sqz: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "sqz: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
