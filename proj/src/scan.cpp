#include "multipole/scan.hpp"

#include "multipole/polarization.hpp"
#include "multipole/vacuum.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace multipole::scan {

namespace {

std::string num(double x) {
  if (std::isnan(x))
    return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

const char *name(atom::Direction d) {
  return d == atom::Direction::Polar ? "polar" : "equatorial";
}

const char *name(RadialKind b) {
  return b == RadialKind::CavityStanding ? "cavity" : "free";
}

void header(const ScanSpec &s, std::ostream &os) {
  os << "# multipole " << kVersion << " " << to_string(s.subcommand) << "\n"
     << "# kr_min = " << num(s.kr_min) << "\n"
     << "# kr_max = " << num(s.kr_max) << "\n"
     << "# steps = " << s.steps << "\n"
     << "# log_grid = " << (s.log_grid ? "true" : "false") << "\n"
     << "# jmax = " << s.j_max << "\n"
     << "# both_parities = " << (s.include_both_parities ? "true" : "false")
     << "\n"
     << "# m = " << s.m << "\n"
     << "# direction = " << name(s.direction) << "\n"
     << "# boundary = " << name(s.boundary) << "\n"
     << "# phi = " << num(s.phi) << "\n"
     << "# cutoff = " << num(s.cutoff) << "\n"
     << "# g = " << num(s.g) << "\n"
     << "# t_min = " << num(s.t_min) << "\n"
     << "# t_max = " << num(s.t_max) << "\n"
     << "# eta = " << (s.eta ? num(*s.eta) : std::string("unset")) << "\n"
     << "# delta_omega = " << num(s.delta_omega) << "\n"
     << "# detuning = " << num(s.detuning) << "\n"
     << "# preset = " << (s.field ? std::string("field") : to_string(s.preset))
     << "\n";
  if (s.field) {
    os << "# field =";
    for (double v : *s.field)
      os << " " << num(v);
    os << "\n";
  }
  os << "# units: densities in plane-wave vacuum units, matrices in hbar*omega/3V\n";
}

polarization::FieldSnapshot snapshot_from(const std::array<double, 12> &f) {
  polarization::FieldSnapshot s;
  for (int i = 0; i < 3; ++i) {
    s.E(i) = cplx(f[2 * i], f[2 * i + 1]);
    s.B(i) = cplx(f[6 + 2 * i], f[6 + 2 * i + 1]);
  }
  return s;
}

void dump(std::ostream &os, const std::string &label, const std::string &kr,
          const polarization::PolarizationMatrix &P) {
  const bool hel = P.basis == polarization::Basis::Helicity;
  static const char *cart[] = {"x", "y", "z"};
  static const char *heli[] = {"+", "0", "-"};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      os << label << "," << (hel ? "helicity" : "cartesian") << "," << kr << ","
         << (hel ? heli[r] : cart[r]) << "," << (hel ? heli[c] : cart[c]) << ","
         << num(P.m(r, c).real()) << "," << num(P.m(r, c).imag()) << "\n";
}

void check_line(std::ostream &os, const std::string &label,
                const std::string &kr,
                const polarization::PolarizationMatrix &P) {
  os << "# check " << label << " kr=" << kr
     << " hermiticity_defect=" << num(P.hermiticity_defect())
     << " trace=" << num(P.trace())
     << " min_eigenvalue=" << num(P.min_eigenvalue()) << "\n";
}

} // namespace

std::string to_string(Subcommand s) {
  switch (s) {
  case Subcommand::Vacuum:
    return "vacuum";
  case Subcommand::Emission:
    return "emission";
  case Subcommand::PolMatrix:
    return "polmatrix";
  case Subcommand::Dynamics:
    return "dynamics";
  }
  return "?";
}

std::string to_string(PolPreset p) {
  switch (p) {
  case PolPreset::PlaneWave:
    return "plane-wave";
  case PolPreset::Zero:
    return "zero";
  case PolPreset::DipoleVacuum:
    return "dipole-vacuum";
  }
  return "?";
}

void ScanSpec::validate() const {
  if (steps < 2)
    throw std::invalid_argument("steps must be >= 2");
  const bool uses_kr = subcommand != Subcommand::Dynamics;
  if (uses_kr) {
    if (!(kr_min > 0.0))
      throw std::invalid_argument("kr-min must be positive");
    if (!(kr_max > kr_min))
      throw std::invalid_argument("kr-max must exceed kr-min");
  }
  if (j_max < 1)
    throw std::invalid_argument("jmax must be >= 1");
  if (m < -1 || m > 1)
    throw std::invalid_argument("m must be -1, 0 or 1");
  if (!(cutoff > 0.0))
    throw std::invalid_argument("cutoff must be positive");
  if (subcommand == Subcommand::Dynamics) {
    if (!(t_min >= 0.0))
      throw std::invalid_argument("t-min must be >= 0");
    if (!(t_max > t_min))
      throw std::invalid_argument("t-max must exceed t-min");
    if (eta && !(*eta >= 0.0))
      throw std::invalid_argument("eta must be >= 0");
  }
}

std::vector<double> kr_grid(const ScanSpec &spec) {
  return spec.log_grid ? vacuum::log_grid(spec.kr_min, spec.kr_max, spec.steps)
                       : vacuum::linear_grid(spec.kr_min, spec.kr_max, spec.steps);
}

std::vector<double> t_grid(const ScanSpec &spec) {
  return vacuum::linear_grid(spec.t_min, spec.t_max, spec.steps);
}

std::array<double, 12> parse_field_literal(const std::string &text) {
  std::array<double, 12> out{};
  std::stringstream ss(text);
  std::string item;
  std::size_t n = 0;
  while (std::getline(ss, item, ',')) {
    if (n == out.size())
      throw std::invalid_argument("field literal: more than 12 numbers");
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception &) {
      throw std::invalid_argument("field literal: cannot parse '" + item + "'");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
      ++used;
    if (used != item.size() || !std::isfinite(v))
      throw std::invalid_argument("field literal: cannot parse '" + item + "'");
    out[n++] = v;
  }
  if (n != out.size())
    throw std::invalid_argument("field literal: expected 12 comma-separated "
                                "numbers (Re/Im of Ex Ey Ez Bx By Bz), got " +
                                std::to_string(n));
  return out;
}

void run_vacuum_scan(const ScanSpec &spec, std::ostream &os) {
  spec.validate();
  vacuum::VacuumScanConfig cfg;
  cfg.j_max = spec.j_max;
  cfg.include_both_parities = spec.include_both_parities;
  cfg.kr_grid = kr_grid(spec);
  cfg.validate();
  const double baseline = vacuum::plane_wave_vacuum_density();

  header(spec, os);
  os << "kr,multipole_density,plane_wave_baseline\n";
  for (double kr : cfg.kr_grid)
    os << num(kr) << "," << num(vacuum::vacuum_energy_density(cfg, kr)) << ","
       << num(baseline) << "\n";
}

void run_emission_scan(const ScanSpec &spec, std::ostream &os) {
  spec.validate();
  const auto grid = kr_grid(spec);
  std::ostringstream body;
  for (double kr : grid) {
    atom::EmissionGeometry geom;
    geom.m = spec.m;
    geom.direction = spec.direction;
    geom.phi = spec.phi;
    geom.kr = kr;
    geom.boundary = spec.boundary;
    geom.cutoff = spec.cutoff;
    const auto P = atom::dipole_pol_matrix(geom);
    body << num(kr) << "," << num(P.helicity(1, 1).real()) << ","
         << num(P.helicity(-1, -1).real()) << ","
         << num(atom::cross_term_phase(geom)) << "\n";
  }
  header(spec, os);
  os << "kr,I_plus,I_minus,phase_of_cross_term\n" << body.str();
}

void run_polmatrix(const ScanSpec &spec, std::ostream &os) {
  using namespace polarization;
  if (!spec.field && spec.preset == PolPreset::DipoleVacuum) {
    spec.validate();
    const auto grid = kr_grid(spec);
    std::vector<ModeIndex> modes;
    for (int m = -1; m <= 1; ++m)
      modes.emplace_back(ModeType::Electric, 1.0, 1, m);
    header(spec, os);
    os << "matrix,basis,kr,row,col,re,im\n";
    for (double kr : grid) {
      const auto vac = vacuum_polarization(
          modes, SpacePoint(kr, 0.5 * std::numbers::pi, spec.phi),
          RadialKind::CavityStanding);
      const std::string k = num(kr);
      dump(os, "P_vac_E", k, vac.electric);
      dump(os, "P_vac_B", k, vac.magnetic);
      dump(os, "P_vac", k, vac.total());
      check_line(os, "P_vac_E", k, vac.electric);
      check_line(os, "P_vac", k, vac.total());
    }
    return;
  }

  FieldSnapshot s;
  if (spec.field) {
    s = snapshot_from(*spec.field);
  } else if (spec.preset == PolPreset::PlaneWave) {
    // Circular plane wave along z: B_x = -E_y, B_y = E_x.
    const double h = 0.70710678118654752440;
    s.E = Vec3c(h, cplx(0.0, h), 0.0);
    s.B = Vec3c(-s.E.y(), s.E.x(), 0.0);
  }
  const auto R = bilinear_R(field_tensor(s));
  const auto PE = pol_matrix_electric(s.E);
  const auto PB = pol_matrix_magnetic(s.B);
  const auto P = R.P;
  const std::string na = "nan";

  header(spec, os);
  os << "# W_E = " << num(R.W_E) << "\n";
  os << "# S = " << num(R.S.x().real()) << " " << num(R.S.x().imag()) << " "
     << num(R.S.y().real()) << " " << num(R.S.y().imag()) << " "
     << num(R.S.z().real()) << " " << num(R.S.z().imag()) << "\n";
  os << "matrix,basis,kr,row,col,re,im\n";
  dump(os, "P_E", na, PE);
  dump(os, "P_B", na, PB);
  dump(os, "P", na, P);
  dump(os, "P_E", na, PE.to(Basis::Helicity));
  check_line(os, "P_E", na, PE);
  check_line(os, "P_B", na, PB);
  check_line(os, "P", na, P);
}

void run_dynamics(const ScanSpec &spec, std::ostream &os) {
  spec.validate();
  const auto grid = t_grid(spec);
  atom::DecayParams dp;
  if (spec.eta)
    dp.eta = *spec.eta;
  dp.delta_omega = spec.delta_omega;
  dp.omega_0 = 1.0;
  dp.omega_k = 1.0 + spec.detuning;

  header(spec, os);
  os << "t,rabi_factor" << (spec.eta ? ",ww_factor" : "")
     << ",excited_population\n";
  for (double t : grid) {
    const auto psi = atom::evolve_dressed(spec.g, t, spec.m);
    os << num(t) << "," << num(atom::rabi_factor(spec.g, t));
    if (spec.eta)
      os << "," << num(atom::ww_factor(dp, t));
    os << "," << num(std::norm(psi.excited_amplitude(spec.m))) << "\n";
  }
}

void run(const ScanSpec &spec, std::ostream &os) {
  switch (spec.subcommand) {
  case Subcommand::Vacuum:
    return run_vacuum_scan(spec, os);
  case Subcommand::Emission:
    return run_emission_scan(spec, os);
  case Subcommand::PolMatrix:
    return run_polmatrix(spec, os);
  case Subcommand::Dynamics:
    return run_dynamics(spec, os);
  }
}

void run_to_destination(const ScanSpec &spec) {
  std::ostringstream buf;
  run(spec, buf);
  if (spec.out.empty()) {
    std::cout << buf.str();
    std::cout.flush();
    return;
  }
  std::ofstream f(spec.out, std::ios::binary | std::ios::trunc);
  if (!f)
    throw std::runtime_error("cannot open output file '" + spec.out + "'");
  f << buf.str();
  f.flush();
  if (!f)
    throw std::runtime_error("failed writing output file '" + spec.out + "'");
}

} // namespace multipole::scan
