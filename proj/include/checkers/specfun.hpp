#pragma once

// Real special functions used by the asymptotic formulas and propagators.

namespace checkers::specfun {

struct SpecfunResult {
  double value = 0.0;
  double est_error = 0.0;
};

inline constexpr double kAiryMax = 40.0;
inline constexpr double kBesselMax = 1000.0;

/// Airy function Ai on |x| <= 40.
SpecfunResult airy(double x);

/// J_n (z >= 0), Y_n and K_n (z > 0) for n in {0, 1} and z <= 1000.
SpecfunResult bessel_j(int n, double z);
SpecfunResult bessel_y(int n, double z);
SpecfunResult bessel_k(int n, double z);

/// Inverse hyperbolic cosine on x >= 1, accepting 1 - 1e-12 as 1.
double arcosh(double x);

/// Arithmetic-geometric mean of two positive numbers.
double agm(double a, double b);

/// Complete elliptic integrals in the parameter convention K(m), E(m), m < 1.
/// The modulus k = i used for the lemniscate constants is m = -1.
double ellip_k(double m);
double ellip_e(double m);

}  // namespace checkers::specfun
