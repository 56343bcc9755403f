#pragma once

// Binomial-sum evaluations of amplitudes and the Young-diagram counter.

#include <gmpxx.h>

#include "checkers/lattice.hpp"
#include "checkers/types.hpp"

namespace checkers::closed_forms {

/// Binomial coefficient extended to all integers: the usual value for n >= 0
/// (zero outside 0 <= k <= n) and the reflection formulas for n < 0.
mpz_class binomial(long n, long k);

/// In-cone massive amplitude via the binomial sum. The double mu is taken as
/// the exact dyadic rational it represents, the alternating sum is formed in
/// rationals, and only the normalization (1+mu^2)^{(1-it)/2} is floating.
AmplitudePair explicit_amplitude(long ix, long it, double mu);

/// Same sum at mu = 1 in integers: A_k = 2^{(it-1)/2} a_k.
lattice::ExactAmplitude explicit_exact(long ix, long it);

enum class AltVariant { A, B };

/// Alternative basic-model sums (m = eps = 1), returned in integer scale.
lattice::ExactAmplitude alt_explicit_basic(long ix, long it, AltVariant variant);

/// Coefficients at z^{t-k-1} and z^{t-k} of (1+z)^{t-k-1}(1-z)^{k-1}; these are
/// the integer-scaled a1(-t+2k, t) and a2(-t+2k, t).
lattice::ExactAmplitude particular_values_poly(long k, long t);

/// Young diagrams with exactly h rows and w columns, split by the parity of
/// the number of steps (distinct column heights).
struct YoungCount {
  long h = 0;
  long w = 0;
  mpz_class n_even;
  mpz_class n_odd;
};

inline constexpr long kYoungMax = 10;

/// Exhaustive enumeration of column-height sequences; 1 <= h, w <= 10.
YoungCount young_counts(long h, long w);

/// n_odd - n_even predicted by the lattice: 2^{(h+w-1)/2} a1(h-w, h+w).
mpz_class young_delta(long h, long w);

}  // namespace checkers::closed_forms
