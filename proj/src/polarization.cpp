#include "multipole/polarization.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace multipole::polarization {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

Mat3c dyadic(const Vec3c &v) { return v.conjugate() * v.transpose(); }

Vec3c cartesian(const HelicityVector &h) { return h.to_cartesian(); }

// Eigen conjugates cross products of complex vectors; this one does not.
Vec3c cross(const Vec3c &a, const Vec3c &b) {
  return {a.y() * b.z() - a.z() * b.y(), a.z() * b.x() - a.x() * b.z(),
          a.x() * b.y() - a.y() * b.x()};
}

} // namespace

const Mat3c &helicity_transform() {
  static const Mat3c W = [] {
    const cplx i(0.0, 1.0);
    Mat3c w;
    w << kInvSqrt2, i * kInvSqrt2, 0.0, //
        0.0, 0.0, 1.0,                  //
        -kInvSqrt2, i * kInvSqrt2, 0.0;
    return w;
  }();
  return W;
}

PolarizationMatrix PolarizationMatrix::to(Basis target) const {
  if (target == basis)
    return *this;
  const Mat3c &W = helicity_transform();
  if (target == Basis::Helicity)
    return {W * m * W.adjoint(), Basis::Helicity};
  return {W.adjoint() * m * W, Basis::Cartesian};
}

cplx PolarizationMatrix::helicity(int mu, int nu) const {
  if (basis != Basis::Helicity)
    throw std::logic_error("helicity entry requested from a Cartesian matrix");
  if (std::abs(mu) > 1 || std::abs(nu) > 1)
    throw std::invalid_argument("helicity index must be -1, 0 or +1");
  return m(HelicityVector::slot(mu), HelicityVector::slot(nu));
}

double PolarizationMatrix::hermiticity_defect() const {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double PolarizationMatrix::min_eigenvalue() const {
  const Mat3c h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat3c> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

PolarizationMatrix
PolarizationMatrix::operator+(const PolarizationMatrix &o) const {
  return {m + o.to(basis).m, basis};
}

FieldStrengthTensor field_tensor(const FieldSnapshot &s) {
  const Vec3c &E = s.E;
  const Vec3c &B = s.B;
  FieldStrengthTensor t;
  t.F << 0.0, E.x(), E.y(), E.z(),  //
      -E.x(), 0.0, -B.z(), B.y(),   //
      -E.y(), B.z(), 0.0, -B.x(),   //
      -E.z(), -B.y(), B.x(), 0.0;
  return t;
}

BilinearDecomposition bilinear_R(const FieldStrengthTensor &F) {
  const Mat4c R = F.F.adjoint() * F.F;
  BilinearDecomposition out;
  out.W_E = R(0, 0).real();
  out.S = R.block<1, 3>(0, 1).transpose();
  out.P = {R.block<3, 3>(1, 1), Basis::Cartesian};
  return out;
}

PolarizationMatrix pol_matrix_electric(const Vec3c &E, Basis basis) {
  return PolarizationMatrix{dyadic(E), Basis::Cartesian}.to(basis);
}

PolarizationMatrix pol_matrix_electric(const HelicityVector &E) {
  PolarizationMatrix out{Mat3c::Zero(), Basis::Helicity};
  for (int mu = 1; mu >= -1; --mu)
    for (int nu = 1; nu >= -1; --nu) {
      const double sign = ((mu + nu) % 2 == 0) ? 1.0 : -1.0;
      out.m(HelicityVector::slot(mu), HelicityVector::slot(nu)) =
          sign * std::conj(E[mu]) * E[nu];
    }
  return out;
}

PolarizationMatrix pol_matrix_magnetic(const Vec3c &B, Basis basis) {
  // |B|^2 on the diagonal minus the transposed dyadic.
  const Mat3c d = dyadic(B);
  const Mat3c m = Mat3c::Identity() * d.trace() - d.transpose();
  return PolarizationMatrix{m, Basis::Cartesian}.to(basis);
}

double wrap_angle(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::remainder(a, two_pi); // [-pi, pi]
  if (r <= -std::numbers::pi)
    r += two_pi;
  return r;
}

PhaseDifferences phase_differences(const Vec3c &E) {
  auto diff = [](cplx a, cplx b) -> std::optional<double> {
    if (a == 0.0 || b == 0.0)
      return std::nullopt;
    return wrap_angle(std::arg(a) - std::arg(b));
  };
  return {diff(E.x(), E.y()), diff(E.y(), E.z()), diff(E.z(), E.x())};
}

VacuumPolarization vacuum_polarization(std::span<const ModeIndex> modes,
                                       const SpacePoint &p, RadialKind radial,
                                       double cutoff) {
  VacuumPolarization out{{Mat3c::Zero(), Basis::Helicity},
                         {Mat3c::Zero(), Basis::Helicity}};
  for (const auto &mode : modes) {
    // Commutator c-number: 4 pi / k in plane-wave density units.
    const double scale = 4.0 * std::numbers::pi / mode.k;
    const auto E = electric_field_mode(mode, p, radial, cutoff);
    const auto B = magnetic_field_mode(mode, p, radial, cutoff);
    out.electric.m += scale * pol_matrix_electric(E).m;
    out.magnetic.m +=
        scale * pol_matrix_magnetic(cartesian(B), Basis::Helicity).m;
  }
  return out;
}

VacuumPolarization vacuum_polarization(std::span<const PlaneWaveMode> modes,
                                       const Vec3 &r) {
  VacuumPolarization out{{Mat3c::Zero(), Basis::Cartesian},
                         {Mat3c::Zero(), Basis::Cartesian}};
  for (const auto &mode : modes) {
    // Half a quantum per unit-amplitude mode.
    const Vec3c E = mode.cartesian_at(r);
    const Vec3c B = cross(mode.k_vec.normalized().cast<cplx>(), E);
    out.electric.m += 0.5 * dyadic(E);
    out.magnetic.m += 0.5 * pol_matrix_magnetic(B).m;
  }
  out.electric = out.electric.to(Basis::Helicity);
  out.magnetic = out.magnetic.to(Basis::Helicity);
  return out;
}

cplx mode_e_dot_b(const ModeIndex &mode, const SpacePoint &p,
                  RadialKind radial, double cutoff) {
  return helicity_dot(electric_field_mode(mode, p, radial, cutoff),
                      magnetic_field_mode(mode, p, radial, cutoff));
}

} // namespace multipole::polarization
