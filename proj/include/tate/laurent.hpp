#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tate/field.hpp"

namespace tate {

// Truncated Laurent series: the value is known modulo t^prec.  Coefficients
// run from t^v upward; indices in [v + coeffs.size(), prec) are known zeros.
//
// Normal form: coeffs has no leading or trailing zero entries, so a
// nonempty coeffs front is the genuine leading coefficient and val() is v.
// An empty coeffs means "zero at this precision", which is distinguishable
// from an exact zero: val() reports it as unbounded and callers that need
// a definite answer must raise the precision.
class LaurentSeries {
  public:
    LaurentSeries(const FieldInfo* f, long v, long prec, std::vector<Scalar> coeffs);
    static LaurentSeries zero(const FieldInfo* f, long prec);
    static LaurentSeries one(const FieldInfo* f, long prec);
    static LaurentSeries monomial(const FieldInfo* f, long k, long prec);   // t^k
    static LaurentSeries constant(const Scalar& c, long prec);

    const FieldInfo* field() const { return f_; }
    long v() const { return v_; }
    long prec() const { return prec_; }
    const std::vector<Scalar>& coeffs() const { return c_; }

    // Valuation, or nullopt when every known coefficient vanishes.
    std::optional<long> val() const;
    bool is_zero_at_prec() const { return c_.empty(); }
    // True if the series provably equals the monomial t^k.
    bool is_monomial(long k) const;

    Scalar coeff(long k) const;  // coefficient of t^k; throws past prec

    LaurentSeries truncated(long new_prec) const;
    LaurentSeries shifted(long k) const;  // multiply by t^k
    // Terms of degree >= k, divided by t^k (the k[[t]]-quotient on division
    // by the monomial); the complementary remainder is truncated(k).
    LaurentSeries integral_above(long k) const;
    LaurentSeries operator-() const;

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    LaurentSeries operator*(const Scalar& s) const;

    // Multiplicative inverse; prec drops to a.prec - 2*a.v.
    LaurentSeries inverse() const;
    friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b);

    // Equality of the known digits on the common precision window.
    friend bool agree_at_common_prec(const LaurentSeries& a, const LaurentSeries& b);
    // Structural equality (same v, prec and digits).
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);
    friend bool operator!=(const LaurentSeries& a, const LaurentSeries& b) { return !(a == b); }

    LaurentSeries mapped(const FieldInfo* target) const;  // embed coefficients

    std::string str(const std::string& var = "t") const;

  private:
    const FieldInfo* f_;
    long v_;
    long prec_;
    std::vector<Scalar> c_;

    void canon();
    long veff() const { return c_.empty() ? prec_ : v_; }
};

}  // namespace tate
