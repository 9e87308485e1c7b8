#include "multipole/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace multipole::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

// j_1 via its ascending series below x = 0.5, where the closed form cancels.
double bessel_j1(double x) {
  if (x < 0.5) {
    const double x2 = x * x;
    double term = x / 3.0;
    double sum = term;
    for (int k = 1; k < 30; ++k) {
      term *= -x2 / (2.0 * k * (2.0 * k + 3.0));
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum))
        break;
    }
    return sum;
  }
  return (std::sin(x) / x - std::cos(x)) / x;
}

double bessel_upward(int ell, double x) {
  double prev = sinc(x);
  double cur = bessel_j1(x);
  for (int k = 1; k < ell; ++k) {
    const double next = (2.0 * k + 1.0) / x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// Backward continued fraction for r_k = j_k / j_{k-1}:
//   r_k = x / ((2k+1) - x r_{k+1}),
// then j_ell = j_base * prod r_k.
double bessel_ratio_product(int ell, double x) {
  const int start =
      ell + 40 + static_cast<int>(std::ceil(x)) +
      static_cast<int>(2.0 * std::sqrt(static_cast<double>(ell)));
  double r = 0.0;
  double product = 1.0;
  const double j0 = sinc(x);
  const double j1 = bessel_j1(x);
  const bool use_j0 = std::abs(j0) >= std::abs(j1);
  const int first = use_j0 ? 1 : 2;
  for (int k = start; k >= first; --k) {
    r = x / ((2.0 * k + 1.0) - x * r);
    if (k <= ell)
      product *= r;
  }
  return (use_j0 ? j0 : j1) * product;
}

double bessel_negative(int ell, double x) {
  if (x == 0.0)
    throw std::domain_error("spherical_bessel_j: pole at x = 0 for order " +
                            std::to_string(ell));
  // j_{k-1} = (2k+1)/x j_k - j_{k+1}
  double upper = sinc(x);          // j_0
  double cur = std::cos(x) / x;    // j_{-1}
  for (int k = -1; k > ell; --k) {
    const double next = (2.0 * k + 1.0) / x * cur - upper;
    upper = cur;
    cur = next;
  }
  if (!std::isfinite(cur))
    throw std::overflow_error("spherical_bessel_j: order " +
                              std::to_string(ell) + " overflows at x = " +
                              std::to_string(x));
  return cur;
}

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

} // namespace

double spherical_bessel_j(int ell, double x) {
  if (!(x >= 0.0) || !std::isfinite(x))
    throw std::domain_error("spherical_bessel_j: argument must be finite and "
                            "non-negative");
  if (ell < 0)
    return bessel_negative(ell, x);
  if (ell > kMaxBesselOrder)
    throw std::domain_error("spherical_bessel_j: order " + std::to_string(ell) +
                            " exceeds supported maximum");
  if (x == 0.0)
    return ell == 0 ? 1.0 : 0.0;
  if (ell == 0)
    return sinc(x);
  if (ell == 1)
    return bessel_j1(x);
  if (x > ell)
    return bessel_upward(ell, x);
  return bessel_ratio_product(ell, x);
}

std::complex<double> spherical_hankel1(int ell, double x) {
  if (ell < 0)
    throw std::domain_error("spherical_hankel1: order must be non-negative");
  if (!(x > 0.0))
    throw std::domain_error("spherical_hankel1: diverges at x = 0");
  const double sign = (ell % 2 == 0) ? -1.0 : 1.0; // (-1)^{ell+1}
  return {spherical_bessel_j(ell, x), sign * spherical_bessel_j(-ell - 1, x)};
}

double sine_integral(double z) {
  if (!(z >= 0.0))
    throw std::domain_error("sine_integral: argument must be non-negative");
  if (z == 0.0)
    return 0.0;
  if (std::isinf(z))
    return kPi / 2.0;

  if (z <= 4.0) {
    // sum_k (-1)^k z^{2k+1} / ((2k+1)(2k+1)!)
    const double z2 = z * z;
    double power = z; // (-1)^k z^{2k+1}/(2k+1)!
    double sum = z;
    for (int k = 1; k < 60; ++k) {
      power *= -z2 / ((2.0 * k) * (2.0 * k + 1.0));
      const double term = power / (2.0 * k + 1.0);
      sum += term;
      if (std::abs(term) < 1e-17 * std::abs(sum))
        break;
    }
    return sum;
  }

  // Modified Lentz evaluation of E1(iz); Si(z) = pi/2 + Im E1(iz).
  using cplx = std::complex<double>;
  constexpr double tiny = 1e-300;
  cplx b(1.0, z);
  cplx c(1.0 / tiny, 0.0);
  cplx d = 1.0 / b;
  cplx h = d;
  for (int i = 2; i < 10000; ++i) {
    const double a = -static_cast<double>((i - 1) * (i - 1));
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const cplx delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16)
      break;
  }
  h *= cplx(std::cos(z), -std::sin(z));
  return kPi / 2.0 + h.imag();
}

double bessel_square_sum(double z, int max_order) {
  if (!(z > 0.0))
    throw std::domain_error("bessel_square_sum: argument must be positive");
  // J^2_{l+1/2}(z) = (2z/pi) j_l(z)^2; add smallest terms first.
  double sum = 0.0;
  for (int ell = max_order; ell >= 0; --ell) {
    const double j = spherical_bessel_j(ell, z);
    sum += j * j;
  }
  return 2.0 * z / kPi * sum;
}

std::complex<double> spherical_harmonic(int ell, int m, double theta,
                                        double phi) {
  if (ell < 0 || std::abs(m) > ell)
    throw std::invalid_argument("spherical_harmonic: need |m| <= ell, got ell=" +
                                std::to_string(ell) +
                                " m=" + std::to_string(m));
  if (!(theta >= 0.0 && theta <= kPi))
    throw std::domain_error("spherical_harmonic: theta outside [0, pi]");

  const int am = std::abs(m);
  const double x = std::cos(theta);
  const double s = std::sin(theta);

  // Fully normalised associated Legendre functions, CS phase included.
  double pmm = 1.0 / std::sqrt(4.0 * kPi);
  for (int i = 1; i <= am; ++i)
    pmm *= -std::sqrt((2.0 * i + 1.0) / (2.0 * i)) * s;

  double plm = pmm;
  if (ell > am) {
    double p_prev = pmm;
    double p_cur = x * std::sqrt(2.0 * am + 3.0) * pmm;
    for (int l = am + 2; l <= ell; ++l) {
      const double a = std::sqrt((4.0 * l * l - 1.0) / (double(l) * l - double(am) * am));
      const double a_prev =
          std::sqrt((4.0 * (l - 1) * (l - 1) - 1.0) /
                    (double(l - 1) * (l - 1) - double(am) * am));
      const double p_next = a * (x * p_cur - p_prev / a_prev);
      p_prev = p_cur;
      p_cur = p_next;
    }
    plm = p_cur;
  }

  const std::complex<double> y = plm * std::polar(1.0, am * phi);
  if (m >= 0)
    return y;
  return (am % 2 == 0 ? 1.0 : -1.0) * std::conj(y);
}

double clebsch_gordan(const CGArgs &a) {
  if (a.two_j1 < 0 || a.two_j2 < 0 || a.two_j < 0)
    throw std::invalid_argument("clebsch_gordan: negative angular momentum");

  auto in_range = [](int two_j, int two_m) {
    return std::abs(two_m) <= two_j && (two_j + two_m) % 2 == 0;
  };
  if (!in_range(a.two_j1, a.two_m1) || !in_range(a.two_j2, a.two_m2) ||
      !in_range(a.two_j, a.two_m))
    return 0.0;
  if (a.two_m1 + a.two_m2 != a.two_m)
    return 0.0;
  if (a.two_j < std::abs(a.two_j1 - a.two_j2) || a.two_j > a.two_j1 + a.two_j2)
    return 0.0;
  if ((a.two_j1 + a.two_j2 + a.two_j) % 2 != 0)
    return 0.0;

  // All combinations below are integers once halved.
  const int j1pj2mj = (a.two_j1 + a.two_j2 - a.two_j) / 2;
  const int jpj1mj2 = (a.two_j + a.two_j1 - a.two_j2) / 2;
  const int jmj1pj2 = (a.two_j - a.two_j1 + a.two_j2) / 2;
  const int sum_all = (a.two_j1 + a.two_j2 + a.two_j) / 2;
  const int j1mm1 = (a.two_j1 - a.two_m1) / 2;
  const int j1pm1 = (a.two_j1 + a.two_m1) / 2;
  const int j2mm2 = (a.two_j2 - a.two_m2) / 2;
  const int j2pm2 = (a.two_j2 + a.two_m2) / 2;
  const int jmm = (a.two_j - a.two_m) / 2;
  const int jpm = (a.two_j + a.two_m) / 2;
  // Lower bounds in the Racah sum.
  const int c1 = (a.two_j - a.two_j2 + a.two_m1) / 2; // j - j2 + m1
  const int c2 = (a.two_j - a.two_j1 - a.two_m2) / 2; // j - j1 - m2

  const double log_pref =
      0.5 * (std::log(a.two_j + 1.0) + log_factorial(jpj1mj2) +
             log_factorial(jmj1pj2) + log_factorial(j1pj2mj) -
             log_factorial(sum_all + 1) + log_factorial(jpm) +
             log_factorial(jmm) + log_factorial(j1mm1) + log_factorial(j1pm1) +
             log_factorial(j2mm2) + log_factorial(j2pm2));

  const int k_min = std::max({0, -c1, -c2});
  const int k_max = std::min({j1pj2mj, j1mm1, j2pm2});
  double sum = 0.0;
  for (int k = k_min; k <= k_max; ++k) {
    const double log_den = log_factorial(k) + log_factorial(j1pj2mj - k) +
                           log_factorial(j1mm1 - k) + log_factorial(j2pm2 - k) +
                           log_factorial(c1 + k) + log_factorial(c2 + k);
    const double term = std::exp(log_pref - log_den);
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum;
}

} // namespace multipole::specfun
