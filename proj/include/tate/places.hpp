#pragma once

#include "tate/laurent.hpp"
#include "tate/poly.hpp"

namespace tate {

// Rational function over F_q, kept with a monic denominator and the
// gcd cancelled.
class RationalFunction {
  public:
    RationalFunction(Poly num, Poly den);
    static RationalFunction from_poly(const Poly& p) { return RationalFunction(p, Poly::constant(p.field()->one())); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const FieldInfo* field() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    RationalFunction derivative() const;  // quotient rule

    std::string str() const;

  private:
    Poly num_, den_;
};

// Closed point of P^1 over F_q: a monic irreducible polynomial, or the
// point at infinity.
class Place {
  public:
    static Place infinity(const FieldInfo* f);
    static Place finite(const Poly& pi);

    bool is_infinity() const { return infinite_; }
    const Poly& uniformizer() const;
    int degree() const { return infinite_ ? 1 : pi_.degree(); }
    const FieldInfo* base_field() const { return field_; }
    // Residue field: F_q itself for rational places, F_q[y]/pi otherwise.
    const FieldInfo* residue_field() const;

    std::string name() const;  // "inf" or the polynomial in x

    friend bool operator==(const Place& a, const Place& b);
    friend bool operator<(const Place& a, const Place& b);  // inf first, then by degree+lex

  private:
    Place(const FieldInfo* f, Poly pi, bool inf) : field_(f), pi_(std::move(pi)), infinite_(inf) {}
    const FieldInfo* field_;
    Poly pi_;
    bool infinite_;
};

struct LocalExpansion {
    Place place;
    LaurentSeries series;  // in the uniformizer, over the residue field
};

// Infinity plus every monic irreducible of degree <= max_degree, in
// degree-then-lexicographic order.  The degree-d count obeys the necklace
// formula; checked in tests.
std::vector<Place> enumerate_places(const FieldInfo* f, int max_degree);

// Number of monic irreducibles of degree d over F_q (Gauss/necklace count).
long long count_irreducibles(long long q, int d);

// Laurent expansion of f at the place, with `digits` known coefficients
// starting at the valuation.  At infinity the variable is u = 1/x.
LocalExpansion local_expand(const RationalFunction& f, const Place& p, int digits);

// ord_p(f); throws on the zero function.
long place_valuation(const RationalFunction& f, const Place& p);

// Residue of the differential f dg at p: the trace down to F_q of the
// u^{-1} coefficient of f * dg/du in the local coordinate u.
Scalar residue(const RationalFunction& f, const RationalFunction& g, const Place& p);

// Residues at every pole (plus infinity), keyed by place; exact sum.
struct ResidueReport {
    std::vector<std::pair<Place, Scalar>> per_place;
    Scalar sum;
};
ResidueReport residue_sum(const RationalFunction& f, const RationalFunction& g);

// Monic irreducible factors with multiplicities.
std::vector<std::pair<Poly, int>> factor_squarefree_by_places(const Poly& p);

}  // namespace tate
