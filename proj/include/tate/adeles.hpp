#pragma once

#include "tate/matrix.hpp"
#include "tate/places.hpp"

namespace tate {

// Adele of O(d) truncated to the places of degree <= D and N known digits
// per place.
struct TruncatedAdele {
    std::vector<LocalExpansion> components;  // places in enumeration order
    bool integral_elsewhere;
};

TruncatedAdele adele_of_function(const RationalFunction& f, int max_degree, int digits);

// Finite model of the two-term adelic complex of O(d) on P^1, twisted by
// d * infinity (and optionally by -point_sub * (x), for the skyscraper
// sequence).  Per place the coefficient window is [m_p - N, m_p + N) where
// m_p is the twist multiplicity; the lower half holds the principal parts
// and the upper half the integral digits.
class AdelicComplex {
  public:
    AdelicComplex(const FieldInfo* f, int d, int max_degree, int digits, int rank = 1,
                  int point_sub = 0);

    const FieldInfo* field() const { return f_; }
    int d() const { return d_; }
    int digits() const { return n_; }
    const std::vector<Place>& places() const { return places_; }

    long twist_at(int place_idx) const;  // m_p
    int dim_full() const;
    int dim_integral() const;
    int dim_gen() const;
    int dim_principal() const;  // = dim_full - dim_integral

    // j-th monomial generator x^j / prod pi^(N - m_pi) of the global space.
    RationalFunction gen_basis(int j) const;

    // Principal parts of the generators: dim_principal x dim_gen over F_q.
    FieldMatrix principal_part_matrix() const;

    // The full difference map A_gen (+) A_int -> A_full, (f, a) |-> diag f - a.
    // Used by small cross-checks; cohomology goes through the reduced form.
    FieldMatrix difference_map() const;

    // h0 = dim ker, h1 = dim coker of the difference map.
    std::pair<long, long> cohomology() const;

  private:
    const FieldInfo* f_;
    int d_, dmax_, n_, rank_, point_sub_;
    std::vector<Place> places_;

    // Coordinates of one local series on [m_p - N, m_p + N), flattened over
    // the base field; width 2N*deg(p).
    std::vector<Scalar> window_coords(const LocalExpansion& le, int place_idx) const;
};

struct AdeleCohomology {
    long h0, h1;
    bool stable;  // agreed with the (D+1, N+2) refinement
};

// Cohomology of O(d) with the built-in refinement check; throws on an
// inadequate truncation (needs max_degree >= 1 and digits >= |d| + 2) and
// when the refinement disagrees.
AdeleCohomology adelic_cohomology(const FieldInfo* f, int d, int max_degree, int digits);

struct AdeleTateStructure {
    long pro_dim;  // window dimension of the integral product part
    long ind_dim;  // window dimension of the principal-part sum
    long total;    // = dim of the full truncated adele space
};

AdeleTateStructure adele_tate_structure(const FieldInfo* f, int d, int max_degree, int digits,
                                        int rank = 1);

// Exactness bookkeeping for 0 -> O(d - p) -> O(d) -> O_p -> 0 at the
// rational point p = (x): window inclusions have the right codimensions and
// the Euler characteristics drop by exactly one.
bool ses_adeles_check(const FieldInfo* f, int d, int max_degree, int digits);

}  // namespace tate
