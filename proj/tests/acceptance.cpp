// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include "multipole/atom.hpp"
#include "multipole/polarization.hpp"
#include "multipole/specfun.hpp"
#include "multipole/vacuum.hpp"
#include "oracles.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace multipole;
using std::numbers::pi;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char *name, double budget_s,
               const std::function<Outcome()> &body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception &e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double dt =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (dt > budget_s) {
    o.pass = false;
    o.detail += " [over time budget]";
  }
  if (!o.pass)
    ++failures;
  std::printf("%s  %2d  %-34s %s (%.3f s)\n", o.pass ? "PASS" : "FAIL", id, name,
              o.detail.c_str(), dt);
}

std::string fmt(const char *f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char *f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

template <class Derived> double max_abs(const Eigen::MatrixBase<Derived> &m) {
  return m.cwiseAbs().maxCoeff();
}

atom::EmissionGeometry geometry(int m, atom::Direction d, double kr,
                                RadialKind b, double phi = 0.0) {
  atom::EmissionGeometry g;
  g.m = m;
  g.direction = d;
  g.kr = kr;
  g.boundary = b;
  g.phi = phi;
  return g;
}

Vec3c cross(const Vec3c &a, const Vec3c &b) {
  return {a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2),
          a(0) * b(1) - a(1) * b(0)};
}

std::string slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

int main() {
  criterion(1, "dof ratio", 1.0, [] {
    const auto r = vacuum::dof_ratio(1);
    return Outcome{r == vacuum::Rational(3, 2),
                   std::to_string(r.num) + "/" + std::to_string(r.den)};
  });

  criterion(2, "vacuum density profile (j_max=1)", 1.0, [] {
    vacuum::VacuumScanConfig c;
    c.j_max = 1;
    c.kr_grid = vacuum::linear_grid(0.01, 20.0, 2000);
    const double r0 = vacuum::concentration_radius(c);
    const double base = vacuum::plane_wave_vacuum_density();
    bool above = true;
    for (double kr : c.kr_grid)
      if (kr < r0 && !(vacuum::vacuum_energy_density(c, kr) > base))
        above = false;
    const double near = vacuum::vacuum_energy_density(c, 1e-6);
    const double far = vacuum::vacuum_energy_density(c, 100.0);
    const bool ok = above && r0 >= 1.0 && r0 <= 4.0 && far < 0.05 * near;
    return Outcome{ok, fmt("kr0=%.6f", r0) + fmt(" far/near=%.3e", far / near) +
                           (above ? "" : " (dips below baseline)")};
  });

  criterion(3, "Bessel square-sum rule", 1.0, [] {
    double worst = 0.0;
    for (double z : {1.0, 2.0, 5.0}) {
      const double lhs = specfun::bessel_square_sum(z, 40);
      const double rhs = specfun::sine_integral(2 * z) / pi;
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    return Outcome{worst < 1e-8, fmt("max|diff|=%.2e", worst)};
  });

  criterion(4, "dipole selection rule", 1.0, [] {
    double worst = 0.0;
    for (int m = -1; m <= 1; ++m)
      for (int mu = -1; mu <= 1; ++mu)
        if (mu != m)
          for (double th : {0.3, 1.0, pi / 2, 2.6})
            for (double ph : {0.0, 0.3, 2.0})
              worst = std::max(worst, atom::off_selection_ratio(m, mu, 1e-3, th, ph));
    bool rule = true;
    for (int m = -1; m <= 1; ++m)
      rule = rule && atom::emission_selection_rule(m) == m;
    return Outcome{rule && worst < 1e-4, fmt("max off/on=%.2e", worst)};
  });

  criterion(5, "closed form vs mode dyadic", 1.0, [] {
    double worst = 0.0;
    for (int m : {1, -1})
      for (int s = 0; s < 50; ++s) {
        const double kr = 0.1 + 0.2 * s;
        const auto g = geometry(m, atom::Direction::Equatorial, kr,
                                RadialKind::CavityStanding, 0.37 * s);
        worst = std::max(worst, max_abs(atom::dipole_pol_matrix_cavity(g).m -
                                        atom::dipole_pol_matrix_dyadic(g).m));
      }
    return Outcome{worst < 1e-10, fmt("max entry diff=%.2e", worst)};
  });

  criterion(6, "cavity equatorial helicity weights", 1.0, [] {
    auto I = [](double kr, int mu) {
      return atom::dipole_pol_matrix(geometry(1, atom::Direction::Equatorial, kr,
                                              RadialKind::CavityStanding))
          .helicity(mu, mu)
          .real();
    };
    double first_bad = -1.0;
    for (int s = 1; s <= 300; ++s) {
      const double kr = 3.0 * s / 300.0;
      if (!(I(kr, 1) > I(kr, -1))) {
        first_bad = kr;
        break;
      }
    }
    double sp = 0.0, sm = 0.0;
    for (int s = 0; s <= 1000; ++s) {
      const double kr = 50.0 + 0.01 * s;
      sp += I(kr, 1);
      sm += I(kr, -1);
    }
    const double ratio = sp / sm;
    const bool near_ok = first_bad < 0.0;
    const bool far_ok = ratio >= 0.8 && ratio <= 1.25;
    std::string d = fmt("window I+/I-=%.4f", ratio);
    if (!near_ok)
      d += fmt("; I+ <= I- first at kr=%.3f (I+=%.4f", first_bad, I(first_bad, 1)) +
           fmt(", I-=%.4f)", I(first_bad, -1));
    return Outcome{near_ok && far_ok, d};
  });

  criterion(7, "polar purity", 1.0, [] {
    double worst = 0.0;
    double smallest_pp = 1e300;
    for (RadialKind b : {RadialKind::CavityStanding, RadialKind::OutgoingWave})
      for (int s = 0; s < 100; ++s) {
        const double kr = 0.01 + 0.2 * s;
        const auto P = atom::dipole_pol_matrix(
            geometry(1, atom::Direction::Polar, kr, b, 0.1 * s));
        for (int mu = -1; mu <= 1; ++mu)
          for (int nu = -1; nu <= 1; ++nu)
            if (mu != 1 || nu != 1)
              worst = std::max(worst, std::abs(P.helicity(mu, nu)));
        smallest_pp = std::min(smallest_pp, P.helicity(1, 1).real());
      }
    return Outcome{worst < 1e-14 && smallest_pp > 0.0,
                   fmt("max other=%.2e", worst) + fmt(" min(+,+)=%.2e", smallest_pp)};
  });

  criterion(8, "polarization algebra", 5.0, [] {
    using namespace polarization;
    double decomp = 0.0, herm = 0.0, psd = 0.0, phase = 0.0, pw = 0.0;
    for (int i = 0; i < 1000; ++i) {
      FieldSnapshot s{oracle::random_cvec(2.0), oracle::random_cvec(2.0)};
      const auto R = bilinear_R(field_tensor(s));
      const Mat3c ref =
          oracle::electric_closed_form(s.E) + oracle::magnetic_closed_form(s.B);
      decomp = std::max(decomp, max_abs(R.P.m - ref));
      decomp = std::max(decomp, std::abs(R.W_E - s.E.squaredNorm()));
      decomp = std::max(decomp, (R.S + cross(s.E.conjugate(), s.B)).norm());
      for (const auto &P : {R.P, pol_matrix_electric(s.E), pol_matrix_magnetic(s.B)}) {
        herm = std::max(herm, P.hermiticity_defect());
        psd = std::min(psd, P.min_eigenvalue());
      }
      const auto d = phase_differences(s.E);
      if (d.all_defined())
        phase = std::max(phase, std::abs(wrap_angle(*d.xy + *d.yz + *d.zx)));

      // Plane wave along z: E transverse, B = z x E.
      const Vec3c E(s.E(0), s.E(1), 0.0);
      const Vec3c B(-E(1), E(0), 0.0);
      const auto PE = pol_matrix_electric(E);
      const auto PB = pol_matrix_magnetic(B);
      pw = std::max(pw, max_abs(PB.m.topLeftCorner<2, 2>() - PE.m.topLeftCorner<2, 2>()));
      pw = std::max(pw, std::abs(PB.m(2, 2) - E.squaredNorm()));
      pw = std::max(pw, max_abs(PE.m.row(2)) + max_abs(PE.m.col(2)));
    }
    const bool ok = decomp < 1e-12 && herm < 1e-12 && psd > -1e-12 &&
                    phase < 1e-12 && pw < 1e-12;
    return Outcome{ok, fmt("decomp=%.1e", decomp) + fmt(" herm=%.1e", herm) +
                           fmt(" mineig=%.1e", psd) + fmt(" phase=%.1e", phase) +
                           fmt(" planewave=%.1e", pw)};
  });

  criterion(9, "dynamics oracle", 1.0, [] {
    const double g = 0.6, w = 1.2;
    const atom::JcBasis b(1);
    const Eigen::MatrixXcd H = atom::jc_hamiltonian(g, w, w, 1).cast<cplx>();
    const cplx i(0.0, 1.0);
    double worst = 0.0;
    for (int m = -1; m <= 1; ++m) {
      Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(b.dim());
      psi0(b.index(atom::excited(m), m, 0)) = 1.0;
      for (int s = 0; s <= 64; ++s) {
        const double t = 4 * pi / g * s / 64.0;
        const Eigen::MatrixXcd U = (-i * t * H).exp();
        const Eigen::VectorXcd ref = std::exp(i * w * t) * (U * psi0);
        worst = std::max(worst, max_abs(atom::evolve_dressed(g, t, m).amp - ref));
      }
    }
    bool rabi = true;
    for (int s = 0; s <= 100; ++s) {
      const double t = 0.05 * s;
      const double sn = std::sin(g * t);
      rabi = rabi && atom::rabi_factor(g, t) == 2.0 * sn * sn;
    }
    atom::DecayParams d;
    d.eta = 0.5;
    const double w0 = atom::ww_factor(d, 0.0);
    const double w50 = atom::ww_factor(d, 50.0 / d.eta);
    const bool ok = worst < 1e-9 && rabi && w0 == 0.0 && std::abs(w50 - 1.0) < 1e-10;
    return Outcome{ok, fmt("max amp diff=%.2e", worst) + (rabi ? "" : " rabi mismatch") +
                           fmt(" ww(0)=%.1e", w0) + fmt(" |ww(eta t=50)-1|=%.1e", std::abs(w50 - 1.0))};
  });

  criterion(10, "cross-term phase variation", 1.0, [] {
    auto sd = [](RadialKind b) {
      std::vector<double> v;
      for (int s = 0; s <= 200; ++s)
        v.push_back(atom::cross_term_phase(
            geometry(1, atom::Direction::Equatorial, 1.0 + 9.0 * s / 200.0, b)));
      double mean = 0.0;
      for (double x : v)
        mean += x;
      mean /= double(v.size());
      double acc = 0.0;
      for (double x : v)
        acc += (x - mean) * (x - mean);
      return std::sqrt(acc / double(v.size()));
    };
    const double f = sd(RadialKind::OutgoingWave);
    const double c = sd(RadialKind::CavityStanding);
    return Outcome{f > 0.1 && c < 1e-12, fmt("std free=%.3f", f) + fmt(" cavity=%.1e", c)};
  });

  criterion(11, "CSV determinism", 5.0, [] {
    const fs::path dir = fs::temp_directory_path() / "multipole_acceptance";
    fs::create_directories(dir);
    const std::vector<std::string> runs{
        "vacuum --steps 200",
        "emission --steps 200 --boundary free",
        "polmatrix --preset dipole-vacuum --steps 20",
        "dynamics --steps 200 --eta 0.1"};
    bool ok = true;
    std::string detail;
    for (const auto &args : runs) {
      std::string out[2];
      for (int k = 0; k < 2; ++k) {
        const fs::path p = dir / ("run" + std::to_string(k) + ".csv");
        const std::string cmd = std::string(MULTIPOLE_CLI_PATH) + " " + args +
                                " --out " + p.string() + " >/dev/null 2>&1";
        if (std::system(cmd.c_str()) != 0)
          ok = false;
        out[k] = slurp(p);
      }
      const bool same = !out[0].empty() && out[0] == out[1];
      ok = ok && same;
      detail += (same ? "" : " differs: " + args);
    }
    fs::remove_all(dir);
    return Outcome{ok, ok ? "4 subcommands byte-identical" : detail};
  });

  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
