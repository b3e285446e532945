#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tate/field.hpp"

namespace tate {

// Dense univariate polynomial over an exact field.  Coefficients are stored
// low degree first; the zero polynomial has an empty coefficient vector.
class Poly {
  public:
    explicit Poly(const FieldInfo* f) : f_(f) {}
    Poly(const FieldInfo* f, std::vector<Scalar> coeffs);
    static Poly x(const FieldInfo* f);
    static Poly constant(const Scalar& c);
    // x^k with k >= 0.
    static Poly monomial(const FieldInfo* f, int k, const Scalar& c);

    const FieldInfo* field() const { return f_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Scalar coeff(int k) const;
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar leading() const;
    bool is_monic() const;
    Poly monic() const;

    Scalar operator()(const Scalar& v) const;
    Poly derivative() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    Poly operator*(const Scalar& s) const;

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    // Total order used for deterministic place enumeration: by degree, then
    // by coefficient indices from the constant term up.
    friend bool operator<(const Poly& a, const Poly& b);

    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    static Poly gcd(const Poly& a, const Poly& b);  // monic
    static Poly powmod(const Poly& base, long long e, const Poly& mod);

    // Exact multiplicity of the factor d in *this (d nonconstant).
    int remove_factor(const Poly& d, Poly* quotient_out) const;

    bool is_irreducible() const;

    std::string str(const std::string& var = "x") const;
    static Poly parse(const FieldInfo* f, const std::string& text, const std::string& var = "x");

  private:
    const FieldInfo* f_;
    std::vector<Scalar> c_;
    void trim();
};

}  // namespace tate
