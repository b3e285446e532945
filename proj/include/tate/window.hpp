#pragma once

#include "tate/lattice.hpp"

namespace tate {

// Brute-force finite-dimensional model of lattice algebra on the window
// t^{-w}..t^{w-1}: a lattice becomes a plain subspace of k^{2wn} and
// meet/join/quotients become subspace computations.  Independent of the
// canonical-form code path on purpose; used to cross-check it.
//
// Sound whenever the lattices are commensurable within the window:
// t^w std <= L <= t^{-w} std.
namespace window_oracle {

// Coordinates are flattened as (exponent + w) * rank + coordinate index.
FieldMatrix span_of_lattice(const Lattice& l, long w);

// The nilpotent multiplication-by-t matrix on the window space.
FieldMatrix t_action(const FieldInfo* f, int rank, long w);

bool lattice_fits(const Lattice& l, long w);

FieldMatrix subspace_sum(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix subspace_intersection(const FieldMatrix& a, const FieldMatrix& b);
bool subspace_leq(const FieldMatrix& a, const FieldMatrix& b);
bool subspace_eq(const FieldMatrix& a, const FieldMatrix& b);

// Elementary exponents of sup/sub recovered from the dimension profile of
// (t^m sup + sub)/sub.
std::vector<long> quotient_exponents(const FieldMatrix& sub, const FieldMatrix& sup,
                                     const FieldMatrix& t, long w);

struct IndexDims {
    long pos, neg;
};
IndexDims index_dims(const FieldMatrix& s0, const FieldMatrix& s1);

}  // namespace window_oracle

}  // namespace tate
