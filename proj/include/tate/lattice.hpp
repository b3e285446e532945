#pragma once

#include "tate/laurent_matrix.hpp"
#include "tate/matrix.hpp"

namespace tate {

// The Laurent model V = k((t))^n of an elementary Tate space.
struct TateSpace {
    int rank;
    const FieldInfo* field;
    long default_prec = 32;
    friend bool operator==(const TateSpace& a, const TateSpace& b) {
        return a.rank == b.rank && a.field == b.field;
    }
};

// A full-rank k[[t]]-submodule of k((t))^n commensurable with k[[t]]^n,
// held by its canonical column basis.  Canonical form makes equality of
// lattices equality of matrices.
class Lattice {
  public:
    static Lattice standard(const TateSpace& v, long shift = 0);
    static Lattice from_matrix(const LaurentMatrix& m);
    // Canonicalize the span of any generating set with full row rank.
    static Lattice from_generators(const LaurentMatrix& m);

    int rank() const { return basis_.rows(); }
    const FieldInfo* field() const { return basis_.field(); }
    const LaurentMatrix& basis() const { return basis_; }
    const std::vector<long>& pivots() const { return pivots_; }
    const std::vector<int>& pivot_rows() const { return pivot_rows_; }
    long prec() const { return basis_.rows() == 0 ? 0 : basis_.prec(); }

    Lattice shifted(long k) const;  // t^k L
    Lattice mapped(const FieldInfo* target) const;

    friend bool operator==(const Lattice& a, const Lattice& b);
    friend bool operator!=(const Lattice& a, const Lattice& b) { return !(a == b); }

    std::string str() const { return basis_.str(); }

  private:
    Lattice(LaurentMatrix basis, std::vector<long> pivots, std::vector<int> rows)
        : basis_(std::move(basis)), pivots_(std::move(pivots)), pivot_rows_(std::move(rows)) {}
    LaurentMatrix basis_;
    std::vector<long> pivots_;
    std::vector<int> pivot_rows_;
};

// Same ambient space: equal rank and coefficient field.
void require_same_ambient(const Lattice& a, const Lattice& b);

// Smallest common enveloping lattice (canonical reduction of the side by
// side generators).
Lattice lattice_join(const Lattice& l0, const Lattice& l1);

// Largest common sub-lattice, computed through the dual bases.
Lattice lattice_meet(const Lattice& l0, const Lattice& l1);

// The lattice with inverse-transpose basis (pairing-integral dual).
Lattice lattice_dual(const Lattice& l);

bool lattice_leq(const Lattice& sub, const Lattice& sup);

// Elementary exponents e_i of sup/sub = (+) k[[t]]/t^{e_i}, ascending.
std::vector<long> quotient_dims(const Lattice& sub, const Lattice& sup);

struct IndexBundle {
    long pos;  // dim L0/N over k
    long neg;  // dim L1/N over k
    long net() const { return pos - neg; }
};

// Graded index of the pair, through the common sub-lattice N = meet.
IndexBundle index_bundle(const Lattice& l0, const Lattice& l1);

// t^{-N} k[[t]]^n with N = max(0, -min entry valuation of a): every column
// of a lands inside it.
Lattice enveloping_lattice_for_map(const LaurentMatrix& a, int ambient_rank, long prec);

// Dimensions of (t^{-k} L)/L for k = 0..kmax, the chain presentation of V/L.
std::vector<long> ind_quotient_dims(const Lattice& l, int kmax);

struct SplitWindow {
    FieldMatrix section;     // k^m -> window coordinates, image = L's trace
    FieldMatrix retraction;  // retraction * section = identity
};

// Explicit splitting V = L (+) V/L on the window t^{-w}..t^{w-1}.  Window
// coordinates are flattened as (exponent + w) * rank + coordinate.
SplitWindow split_tate(const TateSpace& v, const Lattice& l, long window);

}  // namespace tate
