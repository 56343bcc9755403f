#pragma once

// Fourier-integral amplitudes, antiparticle values b_k, and plane waves.

#include <utility>

#include "checkers/types.hpp"

namespace checkers::spectral {

/// Trapezoid rule settings for the periodic integrals over [-pi/eps, pi/eps].
struct QuadratureOptions {
  double tol = 1e-10;
  long min_nodes = 64;
  long max_nodes = 1L << 20;
};

/// omega_p = arccos(cos(p eps) / sqrt(1 + mu^2)) / eps.
double omega(double p, const LatticeParams& params);

/// Both complex integrals A_1, A_2 at (ix, it) without the t <= 0 sign rule.
struct FourierIntegrals {
  cplx A1;
  cplx A2;
  long nodes = 0;  // final node count
};

FourierIntegrals fourier_integrals(long ix, long it, const LatticeParams& params, const QuadratureOptions& opt = {});

/// a1, a2 at a black site with it >= 1 by quadrature (m > 0).
AmplitudePair fourier_amplitude(long ix, long it, const LatticeParams& params, const QuadratureOptions& opt = {});

enum class Parity { Even, Odd };

/// A_k at any site. On odd sites A_k = i b_k; `b1`, `b2` hold b_k there and
/// are zero on even sites, where `A1`, `A2` carry the real a_k values.
struct AntiAmplitude {
  Parity parity = Parity::Even;
  cplx A1;
  cplx A2;
  double b1 = 0.0;
  double b2 = 0.0;
  /// Largest discarded real part on odd sites (imaginary part on even ones).
  double residue = 0.0;
};

AntiAmplitude anti_amplitude(long ix, long it, const LatticeParams& params, const QuadratureOptions& opt = {});

/// Gauss constant G = 1 / agm(1, sqrt 2).
double gauss_constant();
/// Inverse lemniscate constant L' = (2/pi)(E(i) - K(i)).
double inverse_lemniscate_constant();

/// Plane-wave solution of the source-free lattice Dirac system.
struct Dispersion {
  double lambda = 0.0;
  double period = 0.0;  // T
  double alpha = 0.0;
  cplx a;
  cplx b;
  LatticeParams params;
};

Dispersion dispersion_solve(double lambda, const LatticeParams& params, cplx a1_0, cplx a2_0);

/// (a~1, a~2) at lattice point (ix*eps, it*eps).
std::pair<cplx, cplx> wave_eval(const Dispersion& d, long ix, long it);

/// Largest residual of the two update equations on [x0, x0+nx) x [t0+1, t0+nt].
double wave_residual(const Dispersion& d, long x0, long t0, long nx, long nt);

}  // namespace checkers::spectral
