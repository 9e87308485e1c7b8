#pragma once

#include "multipole/atom.hpp"
#include "multipole/field.hpp"

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace multipole::scan {

inline constexpr const char *kVersion = "1.0.0";

enum class Subcommand { Vacuum, Emission, PolMatrix, Dynamics };

enum class PolPreset { PlaneWave, Zero, DipoleVacuum };

/// Everything a CLI invocation can set. Unused fields are still echoed.
struct ScanSpec {
  Subcommand subcommand = Subcommand::Vacuum;

  double kr_min = 0.05;
  double kr_max = 20.0;
  int steps = 400;
  bool log_grid = false;

  int j_max = 10;
  bool include_both_parities = true;

  int m = 1;
  atom::Direction direction = atom::Direction::Equatorial;
  RadialKind boundary = RadialKind::CavityStanding;
  double phi = 0.0;
  double cutoff = kDefaultAtomCutoff;

  double g = 1.0;
  double t_min = 0.0;
  double t_max = 6.283185307179586;
  std::optional<double> eta;  // ww_factor column only when set
  double delta_omega = 0.0;
  double detuning = 0.0;      // omega_k - omega_0

  PolPreset preset = PolPreset::PlaneWave;
  // Re/Im of Ex, Ey, Ez, Bx, By, Bz; overrides the preset when present.
  std::optional<std::array<double, 12>> field;

  std::string out; // empty: standard output

  /// Throws std::invalid_argument for an unusable grid or parameter.
  void validate() const;
};

/// The kr grid (linear by default, geometric with log_grid).
std::vector<double> kr_grid(const ScanSpec &spec);
/// Time grid on [t_min, t_max] with `steps` points.
std::vector<double> t_grid(const ScanSpec &spec);

/// Parse "a,b,c,..." (12 reals) into a field literal. Throws
/// std::invalid_argument on malformed input.
std::array<double, 12> parse_field_literal(const std::string &text);

void run_vacuum_scan(const ScanSpec &spec, std::ostream &os);
void run_emission_scan(const ScanSpec &spec, std::ostream &os);
void run_polmatrix(const ScanSpec &spec, std::ostream &os);
void run_dynamics(const ScanSpec &spec, std::ostream &os);

/// Dispatch on spec.subcommand.
void run(const ScanSpec &spec, std::ostream &os);

/// Run and write to spec.out (or stdout). Output is produced completely
/// before the file is opened; an unwritable path raises std::runtime_error.
void run_to_destination(const ScanSpec &spec);

std::string to_string(Subcommand s);
std::string to_string(PolPreset p);

} // namespace multipole::scan
