#pragma once

#include <random>

#include "tate/lattice.hpp"
#include "tate/places.hpp"

namespace tate {

// Deterministic source for the randomized property suites; every report
// quotes its seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    long uniform(long lo, long hi);  // inclusive bounds
    Scalar scalar(const FieldInfo* f);
    Scalar nonzero_scalar(const FieldInfo* f);
    LaurentSeries series(const FieldInfo* f, long deg_lo, long deg_hi, long prec);

  private:
    std::mt19937_64 gen_;
};

// Random lattice B = P * diag(t^{a_i}) canonicalized, with a_i in [-3, 3],
// P = I + noise where the noise has support in degrees [-2, 2] off the
// diagonal and [1, 2] on it (so the diagonal stays a unit).  Resamples the
// rare singular draw.
Lattice random_lattice(Rng& rng, const TateSpace& v);

// Identity plus t * (integral noise), optionally composed with unit column
// scalings: invertible over k[[t]].
LaurentMatrix random_unimodular(Rng& rng, const FieldInfo* f, int n, long prec);

FieldMatrix random_field_matrix(Rng& rng, const FieldInfo* f, int rows, int cols);

// Nonzero rational function with numerator and denominator degrees bounded
// as given.
RationalFunction random_rational_function(Rng& rng, const FieldInfo* f, int num_deg, int den_deg);

}  // namespace tate
