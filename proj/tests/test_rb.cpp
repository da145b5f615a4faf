#include "sqz/rb.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"

#include "sqz/errors.hpp"

namespace {
sqz::AtomConfig load_rb() {
  return sqz::load_atom_config(std::string(SQZ_TEST_DATA_DIR) + "/rb87.json");
}
}  // namespace

TEST_CASE("flag rendering") {
  CHECK(sqz::flags_to_string(0) == "");
  CHECK(sqz::flags_to_string(sqz::flag_g_over_alpha_low) == "g_over_alpha_low");
  CHECK(sqz::flags_to_string(sqz::flag_kappa_regime | sqz::flag_se_large) ==
        "kappa_regime;se_large");
  CHECK(sqz::flags_to_string(sqz::flag_g_over_alpha_low |
                             sqz::flag_doppler_unconverged) ==
        "g_over_alpha_low;doppler_unconverged");
}

TEST_CASE("bundled atom data sanity") {
  sqz::AtomConfig atom = load_rb();
  CHECK(atom.nuclear_spin == 1.5);
  CHECK(atom.lines.count("D1") == 1);
  CHECK(atom.lines.count("D2") == 1);
  const sqz::LineConfig& d1 = atom.lines.at("D1");
  CHECK(d1.Jg == 0.5);
  CHECK(d1.Je == 0.5);
  CHECK(d1.wavelength == doctest::Approx(794.978851e-7).epsilon(1e-12));
  CHECK(d1.gamma0 == doctest::Approx(2 * 3.14159265358979 * 5.746e6)
                         .epsilon(1e-10));
  CHECK(d1.fp_offsets.size() == 2);
}

TEST_CASE("operating point of the default scan") {
  sqz::AtomConfig atom = load_rb();
  sqz::DLineScanParams p;  // 10 mW, 0.03 cm beam, 1e12 cm^-3, D1 F=2
  sqz::DLineOperatingPoint op = sqz::d_line_operating_point(atom, p);

  CHECK(op.intensity_mW_cm2 == doctest::Approx(1.415e4).epsilon(2e-3));
  CHECK(op.temperature_K == doctest::Approx(309.0).epsilon(0.01));
  CHECK(op.gamma_transit == doctest::Approx(9.15e5).epsilon(0.005));
  CHECK(op.rabi == doctest::Approx(2.4838e9).epsilon(2e-3));
  CHECK(op.kappa == doctest::Approx(3.735e5).epsilon(5e-3));
  CHECK(op.K == doctest::Approx(2.724e10).epsilon(2e-3));
}

TEST_CASE("scan slice around the squeezing peak") {
  // 5-point slice of the full thermal-vapor scan at reduced quadrature
  // order; values frozen from the converged run (the doubling check already
  // guards convergence within the run itself).
  sqz::AtomConfig atom = load_rb();
  sqz::DLineScanParams p;
  p.from = 290.0;
  p.to = 330.0;
  p.points = 5;
  p.gh_order = 16;
  std::vector<sqz::ScanRow> rows = sqz::d_line_scan(atom, p);
  REQUIRE(rows.size() == 5);

  const sqz::ScanRow& peak = rows[2];
  CHECK(peak.detuning == doctest::Approx(310.0).epsilon(1e-12));
  CHECK(peak.alpha_ell == doctest::Approx(0.0620205552).epsilon(1e-6));
  CHECK(peak.g_ell == doctest::Approx(5.86405608).epsilon(1e-6));
  CHECK(peak.s_db == doctest::Approx(5.32787355).epsilon(1e-6));
  // g*l just below 10 flags the envelope-validity rule, nothing else.
  CHECK(peak.flags == sqz::flag_g_over_alpha_low);
}

TEST_CASE("zero light power flags every point invalid") {
  sqz::AtomConfig atom = load_rb();
  sqz::DLineScanParams p;
  p.power_mW = 0.0;
  p.from = 300.0;
  p.to = 320.0;
  p.points = 3;
  p.gh_order = 4;
  for (const sqz::ScanRow& r : sqz::d_line_scan(atom, p)) {
    CHECK((r.flags & sqz::flag_g_over_alpha_low) != 0);
    CHECK(r.g_ell == 0.0);
    CHECK(r.s_db == 0.0);
  }
}

TEST_CASE("intensity above the treatment's trust window is flagged") {
  sqz::AtomConfig atom = load_rb();
  sqz::DLineScanParams p;
  p.power_mW = 1e5;  // ~1.4e8 mW/cm^2, far above the configured limit
  p.from = 300.0;
  p.to = 310.0;
  p.points = 2;
  p.gh_order = 4;
  for (const sqz::ScanRow& r : sqz::d_line_scan(atom, p))
    CHECK((r.flags & sqz::flag_kappa_regime) != 0);
}

TEST_CASE("rotation is antisymmetric about an isolated resonance") {
  // Synthetic single-F' medium, low saturation, no thermal motion: the scan
  // detunings are measured from that resonance, so g(+D) = -g(-D).
  sqz::AtomConfig atom = load_rb();
  sqz::LineConfig iso = atom.lines.at("D1");
  iso.fp_offsets = {{1.0, 0.0}};
  atom.lines["iso"] = iso;

  sqz::DLineScanParams p;
  p.line = "iso";
  p.power_mW = 1e-4;
  p.doppler_width = 0.0;
  p.from = -6.0;
  p.to = 6.0;
  p.points = 5;
  std::vector<sqz::ScanRow> rows = sqz::d_line_scan(atom, p);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].g_ell == doctest::Approx(-rows[4].g_ell).epsilon(1e-8));
  CHECK(rows[1].g_ell == doctest::Approx(-rows[3].g_ell).epsilon(1e-8));
  CHECK(rows[0].alpha_ell ==
        doctest::Approx(rows[4].alpha_ell).epsilon(1e-8));
}

TEST_CASE("unknown line or uncoupled ground manifold is a config error") {
  sqz::AtomConfig atom = load_rb();
  sqz::DLineScanParams p;
  p.line = "D3";
  CHECK_THROWS_AS((void)sqz::d_line_scan(atom, p), sqz::ConfigError);

  p.line = "D1";
  p.ground_f = 7.0;
  CHECK_THROWS_AS((void)sqz::d_line_scan(atom, p), sqz::ConfigError);
}

TEST_CASE("threaded scan is byte-for-byte the serial scan") {
  sqz::AtomConfig atom = load_rb();
  sqz::DLineScanParams p;
  p.from = 300.0;
  p.to = 320.0;
  p.points = 3;
  p.gh_order = 8;
  std::vector<sqz::ScanRow> serial = sqz::d_line_scan(atom, p);
  p.threads = 4;
  std::vector<sqz::ScanRow> par = sqz::d_line_scan(atom, p);
  REQUIRE(serial.size() == par.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].detuning == par[i].detuning);
    CHECK(serial[i].alpha_ell == par[i].alpha_ell);
    CHECK(serial[i].g_ell == par[i].g_ell);
    CHECK(serial[i].s_db == par[i].s_db);
    CHECK(serial[i].flags == par[i].flags);
  }
}
