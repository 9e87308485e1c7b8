// multipole: parameter scans over vacuum density, dipole emission
// polarization, polarization matrices and Jaynes-Cummings time factors.
//
//   multipole vacuum   --kr-min 0.05 --kr-max 20 --steps 400 --jmax 1
//   multipole emission --boundary free --direction equatorial --m 1
//   multipole polmatrix --preset plane-wave
//   multipole dynamics --g 1 --eta 0.2 --t-max 30

#include "multipole/scan.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

using multipole::RadialKind;
using multipole::atom::Direction;
using namespace multipole::scan;

namespace {

void add_grid_flags(CLI::App &cmd, ScanSpec &s) {
  cmd.add_option("--kr-min", s.kr_min, "smallest kr");
  cmd.add_option("--kr-max", s.kr_max, "largest kr");
  cmd.add_flag("--log-grid", s.log_grid, "geometric kr grid");
}

void add_emission_flags(CLI::App &cmd, ScanSpec &s) {
  static const std::map<std::string, Direction> dirs{
      {"polar", Direction::Polar}, {"equatorial", Direction::Equatorial}};
  static const std::map<std::string, RadialKind> bounds{
      {"cavity", RadialKind::CavityStanding}, {"free", RadialKind::OutgoingWave}};
  cmd.add_option("--m", s.m, "atomic m (and emitted helicity): -1, 0 or 1");
  cmd.add_option("--direction", s.direction, "polar or equatorial")
      ->transform(CLI::CheckedTransformer(dirs, CLI::ignore_case));
  cmd.add_option("--boundary", s.boundary, "cavity or free")
      ->transform(CLI::CheckedTransformer(bounds, CLI::ignore_case));
  cmd.add_option("--phi", s.phi, "azimuth in radians");
  cmd.add_option("--cutoff", s.cutoff, "atom radius k*r_a for free space");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Multipole radiation: vacuum density, polarization and "
               "dipole dynamics scans"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  ScanSpec spec;
  std::string field_text;
  bool electric_only = false;
  double eta = 0.0;

  // Options shared by every subcommand.
  auto common = [&](CLI::App &cmd) {
    cmd.add_option("--steps", spec.steps, "grid points (>= 2)");
    cmd.add_option("--out", spec.out, "output path (default: stdout)");
  };

  auto *vac = app.add_subcommand("vacuum", "zero-point energy density vs kr");
  common(*vac);
  add_grid_flags(*vac, spec);
  vac->add_option("--jmax", spec.j_max, "largest multipole order");
  vac->add_flag("--electric-only", electric_only,
                "drop magnetic multipoles from the sum");

  auto *emi = app.add_subcommand("emission", "dipole helicity intensities vs kr");
  common(*emi);
  add_grid_flags(*emi, spec);
  add_emission_flags(*emi, spec);

  static const std::map<std::string, PolPreset> presets{
      {"plane-wave", PolPreset::PlaneWave},
      {"zero", PolPreset::Zero},
      {"dipole-vacuum", PolPreset::DipoleVacuum}};
  auto *pol = app.add_subcommand("polmatrix", "polarization matrix dump");
  common(*pol);
  add_grid_flags(*pol, spec);
  pol->add_option("--preset", spec.preset, "plane-wave, zero or dipole-vacuum")
      ->transform(CLI::CheckedTransformer(presets, CLI::ignore_case));
  pol->add_option("--field", field_text,
                  "12 comma-separated numbers: Re/Im of Ex Ey Ez Bx By Bz");
  pol->add_option("--phi", spec.phi, "azimuth for the dipole-vacuum preset");

  auto *dyn = app.add_subcommand("dynamics", "Rabi and decay time factors");
  common(*dyn);
  dyn->add_option("--g", spec.g, "coupling constant");
  dyn->add_option("--m", spec.m, "atomic m: -1, 0 or 1");
  dyn->add_option("--t-min", spec.t_min, "first time");
  dyn->add_option("--t-max", spec.t_max, "last time");
  auto *eta_opt = dyn->add_option("--eta", eta, "decay rate; enables ww_factor");
  dyn->add_option("--delta-omega", spec.delta_omega, "level shift");
  dyn->add_option("--detuning", spec.detuning, "omega_k - omega_0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e);
  }

  try {
    if (*vac)
      spec.subcommand = Subcommand::Vacuum;
    else if (*emi)
      spec.subcommand = Subcommand::Emission;
    else if (*pol)
      spec.subcommand = Subcommand::PolMatrix;
    else
      spec.subcommand = Subcommand::Dynamics;
    spec.include_both_parities = !electric_only;
    if (!field_text.empty())
      spec.field = parse_field_literal(field_text);
    if (eta_opt->count() > 0)
      spec.eta = eta;
    run_to_destination(spec);
  } catch (const std::exception &e) {
    std::cerr << "multipole: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
