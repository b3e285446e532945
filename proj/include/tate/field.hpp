#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tate/errors.hpp"

namespace tate {

class Scalar;

enum class FieldKind { rational, prime, extension };

// Immutable field descriptor.  Instances are interned and live for the
// whole process, so raw pointers to them are stable and cheap to copy.
//
// Extensions are quotient rings base[y]/(modulus) with modulus monic and
// irreducible over the base; towers are allowed (the base may itself be an
// extension).  extension(p, d) picks the modulus deterministically: the
// monic irreducible of degree d over F_p whose coefficient vector
// (a_0, ..., a_{d-1}), read as the integer sum a_i p^i, is least.
class FieldInfo {
  public:
    static const FieldInfo* rationals();
    static const FieldInfo* prime(long long p);
    static const FieldInfo* extension(long long p, int degree);
    static const FieldInfo* extension(const FieldInfo* base, const std::vector<Scalar>& modulus);

    FieldKind kind() const { return kind_; }
    long long characteristic() const { return p_; }
    // Degree over the immediate base field (1 for prime fields and Q).
    int degree() const { return degree_; }
    const FieldInfo* base() const { return base_; }
    const std::vector<Scalar>& modulus() const { return modulus_; }

    bool finite() const { return kind_ != FieldKind::rational; }
    // Number of elements; throws for Q, overflows are the caller's problem.
    long long order() const;
    std::string name() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_integer(long long n) const;
    // Inverse of from_index below.
    Scalar from_index(long long idx) const;

  private:
    FieldInfo() = default;
    FieldKind kind_ = FieldKind::prime;
    long long p_ = 0;
    int degree_ = 1;
    const FieldInfo* base_ = nullptr;
    std::vector<Scalar> modulus_;

    friend class Scalar;
};

// An exact scalar: element of Q, of F_p, or of an extension field.
// Always kept in canonical form (reduced fraction with positive
// denominator, value in [0, p), coefficient vector trimmed of leading
// zeros), so equality is plain comparison.
class Scalar {
  public:
    Scalar() : f_(nullptr), num_(0), den_(1) {}
    Scalar(const FieldInfo* f, long long n);

    static Scalar rational(long long num, long long den);
    // Element of an extension field from coefficients over the base.
    static Scalar from_coeffs(const FieldInfo* f, std::vector<Scalar> coeffs);

    const FieldInfo* field() const { return f_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar inverse() const;
    Scalar pow(long long e) const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Prime-field value in [0, p).
    long long residue() const;
    long long rational_num() const { return num_; }
    long long rational_den() const { return den_; }
    // Coefficients over the base field, implicit zeros trimmed.
    const std::vector<Scalar>& coeffs() const { return c_; }

    // Canonical integer encoding: rank of the element in the lexicographic
    // enumeration of the field (0 for zero).  Defined for finite fields only.
    long long index() const;

    // Image under a field embedding.  Supported: identity, F_p into an
    // extension with the same characteristic, and base-into-extension.
    Scalar embed(const FieldInfo* target) const;

    // Trace down to the immediate base field (matrix-of-multiplication).
    Scalar trace_to_base() const;

    std::string str() const;
    static Scalar parse(const FieldInfo* f, const std::string& text);

  private:
    const FieldInfo* f_;
    long long num_, den_;     // prime: num_ is the residue; rational: num_/den_
    std::vector<Scalar> c_;   // extension: coefficients over base, trimmed

    void canon();
    friend class FieldInfo;
};

}  // namespace tate
