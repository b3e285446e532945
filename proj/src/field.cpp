#include "tate/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

#include "tate/poly.hpp"

namespace tate {

namespace {

long long mod_pos(long long a, long long p) {
    long long r = a % p;
    return r < 0 ? r + p : r;
}

long long mul_mod(long long a, long long b, long long p) {
    return static_cast<long long>((static_cast<__int128>(a) * b) % p);
}

long long inv_mod(long long a, long long p) {
    long long t = 0, newt = 1, r = p, newr = mod_pos(a, p);
    while (newr != 0) {
        long long q = r / newr;
        std::tie(t, newt) = std::make_tuple(newt, t - q * newt);
        std::tie(r, newr) = std::make_tuple(newr, r - q * newr);
    }
    if (r != 1) throw domain_error("not invertible mod p");
    return mod_pos(t, p);
}

std::mutex g_registry_mutex;

}  // namespace

// ---------------------------------------------------------------------------
// FieldInfo registry

const FieldInfo* FieldInfo::rationals() {
    static FieldInfo* q = [] {
        auto* f = new FieldInfo();
        f->kind_ = FieldKind::rational;
        f->p_ = 0;
        f->degree_ = 1;
        return f;
    }();
    return q;
}

const FieldInfo* FieldInfo::prime(long long p) {
    if (p < 2) throw domain_error("field characteristic must be >= 2");
    static std::map<long long, FieldInfo*> reg;
    std::lock_guard<std::mutex> lock(g_registry_mutex);
    auto it = reg.find(p);
    if (it != reg.end()) return it->second;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw domain_error("field characteristic must be prime");
    auto* f = new FieldInfo();
    f->kind_ = FieldKind::prime;
    f->p_ = p;
    f->degree_ = 1;
    reg[p] = f;
    return f;
}

const FieldInfo* FieldInfo::extension(const FieldInfo* base, const std::vector<Scalar>& modulus) {
    if (!base->finite()) throw domain_error("extensions are only built over finite fields");
    if (modulus.size() < 3) throw domain_error("extension modulus must have degree >= 2");
    for (const auto& c : modulus)
        if (c.field() != base) throw field_mismatch("modulus coefficients must lie in the base field");
    if (!modulus.back().is_one()) throw domain_error("extension modulus must be monic");

    // Key: base pointer plus the index encoding of the modulus coefficients.
    static std::map<std::pair<const FieldInfo*, std::vector<long long>>, FieldInfo*> reg;
    std::vector<long long> key;
    for (const auto& c : modulus) key.push_back(c.index());
    std::lock_guard<std::mutex> lock(g_registry_mutex);
    auto it = reg.find({base, key});
    if (it != reg.end()) return it->second;
    auto* f = new FieldInfo();
    f->kind_ = FieldKind::extension;
    f->p_ = base->characteristic();
    f->degree_ = static_cast<int>(modulus.size()) - 1;
    f->base_ = base;
    f->modulus_ = modulus;
    reg[{base, key}] = f;
    return f;
}

const FieldInfo* FieldInfo::extension(long long p, int degree) {
    const FieldInfo* base = prime(p);
    if (degree == 1) return base;
    if (degree < 1) throw domain_error("extension degree must be >= 1");
    // Scan candidates x^d + a_{d-1} x^{d-1} + ... + a_0 in increasing order of
    // the integer sum a_i p^i and take the first irreducible one.
    long long count = 1;
    for (int i = 0; i < degree; ++i) {
        if (count > (1LL << 40)) throw domain_error("extension search space too large");
        count *= p;
    }
    for (long long m = 0; m < count; ++m) {
        std::vector<Scalar> coeffs(degree + 1, base->zero());
        long long rest = m;
        for (int i = 0; i < degree; ++i) {
            coeffs[i] = base->from_integer(rest % p);
            rest /= p;
        }
        coeffs[degree] = base->one();
        Poly cand(base, coeffs);
        if (cand.is_irreducible()) return extension(base, coeffs);
    }
    throw domain_error("no irreducible modulus found");  // unreachable for d >= 1
}

long long FieldInfo::order() const {
    if (!finite()) throw domain_error("rational field is infinite");
    if (kind_ == FieldKind::prime) return p_;
    long long b = base_->order(), r = 1;
    for (int i = 0; i < degree_; ++i) r *= b;
    return r;
}

std::string FieldInfo::name() const {
    if (kind_ == FieldKind::rational) return "Q";
    std::ostringstream os;
    os << "F" << order();
    return os.str();
}

Scalar FieldInfo::zero() const { return Scalar(this, 0); }
Scalar FieldInfo::one() const { return Scalar(this, 1); }
Scalar FieldInfo::from_integer(long long n) const { return Scalar(this, n); }

Scalar FieldInfo::from_index(long long idx) const {
    if (kind_ == FieldKind::rational) throw domain_error("from_index needs a finite field");
    if (kind_ == FieldKind::prime) return Scalar(this, idx);
    long long b = base_->order();
    std::vector<Scalar> coeffs;
    for (int i = 0; i < degree_; ++i) {
        coeffs.push_back(base_->from_index(idx % b));
        idx /= b;
    }
    return Scalar::from_coeffs(this, std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(const FieldInfo* f, long long n) : f_(f), num_(n), den_(1) {
    if (!f) throw domain_error("scalar without a field");
    if (f->kind() == FieldKind::extension) {
        num_ = 0;
        if (n != 0) c_.push_back(f->base()->from_integer(n));
    }
    canon();
}

Scalar Scalar::rational(long long num, long long den) {
    Scalar s;
    s.f_ = FieldInfo::rationals();
    s.num_ = num;
    s.den_ = den;
    s.canon();
    return s;
}

Scalar Scalar::from_coeffs(const FieldInfo* f, std::vector<Scalar> coeffs) {
    if (f->kind() != FieldKind::extension) throw domain_error("from_coeffs needs an extension field");
    if (static_cast<int>(coeffs.size()) > f->degree())
        throw domain_error("coefficient vector longer than extension degree");
    for (const auto& c : coeffs)
        if (c.field() != f->base()) throw field_mismatch("coefficients must lie in the base field");
    Scalar s;
    s.f_ = f;
    s.num_ = 0;
    s.c_ = std::move(coeffs);
    s.canon();
    return s;
}

void Scalar::canon() {
    switch (f_->kind()) {
        case FieldKind::rational: {
            if (den_ == 0) throw domain_error("zero denominator");
            if (den_ < 0) { num_ = -num_; den_ = -den_; }
            long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
            if (g > 1) { num_ /= g; den_ /= g; }
            if (num_ == 0) den_ = 1;
            break;
        }
        case FieldKind::prime:
            num_ = mod_pos(num_, f_->p_);
            den_ = 1;
            break;
        case FieldKind::extension:
            while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
            break;
    }
}

bool Scalar::is_zero() const {
    if (f_->kind() == FieldKind::extension) return c_.empty();
    return num_ == 0;
}

bool Scalar::is_one() const {
    if (f_->kind() == FieldKind::extension) return c_.size() == 1 && c_[0].is_one();
    return num_ == 1 && den_ == 1;
}

long long Scalar::residue() const {
    if (f_->kind() != FieldKind::prime) throw domain_error("residue needs a prime field");
    return num_;
}

namespace {

// Helpers for extension arithmetic on raw coefficient vectors over the base.
using CoeffVec = std::vector<Scalar>;

void cv_trim(CoeffVec& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

CoeffVec cv_add(const CoeffVec& a, const CoeffVec& b, bool subtract) {
    CoeffVec r = a;
    if (r.size() < b.size()) r.resize(b.size(), b[0].field()->zero());
    for (size_t i = 0; i < b.size(); ++i) r[i] = subtract ? r[i] - b[i] : r[i] + b[i];
    cv_trim(r);
    return r;
}

CoeffVec cv_mul(const CoeffVec& a, const CoeffVec& b, const FieldInfo* base) {
    if (a.empty() || b.empty()) return {};
    CoeffVec r(a.size() + b.size() - 1, base->zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    cv_trim(r);
    return r;
}

// Remainder modulo the monic modulus.
CoeffVec cv_mod(CoeffVec a, const CoeffVec& modulus) {
    int d = static_cast<int>(modulus.size()) - 1;
    while (static_cast<int>(a.size()) > d) {
        Scalar lead = a.back();
        int shift = static_cast<int>(a.size()) - 1 - d;
        if (!lead.is_zero())
            for (int i = 0; i < d; ++i) a[shift + i] -= lead * modulus[i];
        a.pop_back();
        cv_trim(a);
    }
    return a;
}

// Extended Euclid in base[y] restricted to what inversion needs.
CoeffVec cv_invert(const CoeffVec& a, const CoeffVec& modulus, const FieldInfo* base) {
    CoeffVec r0 = modulus, r1 = a;
    CoeffVec t0 = {}, t1 = {base->one()};
    while (!r1.empty()) {
        // divmod(r0, r1)
        CoeffVec q;
        CoeffVec rem = r0;
        Scalar lead_inv = r1.back().inverse();
        int dq = static_cast<int>(rem.size()) - static_cast<int>(r1.size());
        if (dq >= 0) {
            q.assign(dq + 1, base->zero());
            while (static_cast<int>(rem.size()) >= static_cast<int>(r1.size()) && !rem.empty()) {
                int k = static_cast<int>(rem.size()) - static_cast<int>(r1.size());
                Scalar c = rem.back() * lead_inv;
                q[k] = c;
                for (size_t i = 0; i < r1.size(); ++i) rem[k + i] -= c * r1[i];
                cv_trim(rem);
            }
        }
        CoeffVec t2 = cv_add(t0, cv_mul(q, t1, base), true);
        r0 = r1; r1 = rem;
        t0 = t1; t1 = t2;
    }
    if (r0.size() != 1) throw domain_error("modulus not irreducible: inversion failed");
    Scalar scale = r0[0].inverse();
    for (auto& c : t0) c *= scale;
    cv_trim(t0);
    return cv_mod(std::move(t0), modulus);
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.f_ != b.f_) throw field_mismatch("scalar addition across fields");
    Scalar r;
    r.f_ = a.f_;
    switch (a.f_->kind()) {
        case FieldKind::rational:
            r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
            r.den_ = a.den_ * b.den_;
            break;
        case FieldKind::prime:
            r.num_ = a.num_ + b.num_;
            r.den_ = 1;
            break;
        case FieldKind::extension:
            r.c_ = cv_add(a.c_, b.c_, false);
            r.num_ = 0;
            break;
    }
    r.canon();
    return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (f_->kind() == FieldKind::extension) {
        for (auto& c : r.c_) c = -c;
    } else {
        r.num_ = -r.num_;
    }
    r.canon();
    return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.f_ != b.f_) throw field_mismatch("scalar multiplication across fields");
    Scalar r;
    r.f_ = a.f_;
    switch (a.f_->kind()) {
        case FieldKind::rational:
            r.num_ = a.num_ * b.num_;
            r.den_ = a.den_ * b.den_;
            break;
        case FieldKind::prime:
            r.num_ = mul_mod(a.num_, b.num_, a.f_->characteristic());
            r.den_ = 1;
            break;
        case FieldKind::extension:
            r.c_ = cv_mod(cv_mul(a.c_, b.c_, a.f_->base()), a.f_->modulus());
            r.num_ = 0;
            break;
    }
    r.canon();
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw domain_error("inverse of zero");
    Scalar r;
    r.f_ = f_;
    switch (f_->kind()) {
        case FieldKind::rational:
            r.num_ = den_;
            r.den_ = num_;
            break;
        case FieldKind::prime:
            r.num_ = inv_mod(num_, f_->characteristic());
            r.den_ = 1;
            break;
        case FieldKind::extension:
            r.c_ = cv_invert(c_, f_->modulus(), f_->base());
            r.num_ = 0;
            break;
    }
    r.canon();
    return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar acc = f_->one(), base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.f_ != b.f_) return false;
    if (a.f_->kind() == FieldKind::extension) return a.c_ == b.c_;
    return a.num_ == b.num_ && a.den_ == b.den_;
}

long long Scalar::index() const {
    switch (f_->kind()) {
        case FieldKind::rational: throw domain_error("index needs a finite field");
        case FieldKind::prime: return num_;
        case FieldKind::extension: {
            long long b = f_->base()->order(), acc = 0;
            for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * b + it->index();
            return acc;
        }
    }
    return 0;
}

Scalar Scalar::embed(const FieldInfo* target) const {
    if (target == f_) return *this;
    if (f_->characteristic() != target->characteristic() || !f_->finite() || !target->finite())
        throw field_mismatch("no embedding between these fields");
    if (target->kind() == FieldKind::extension) {
        if (f_ == target->base()) {
            if (is_zero()) return target->zero();
            return Scalar::from_coeffs(target, {*this});
        }
        // Hop through the base for towers rooted in the same prime field.
        return embed(target->base()).embed(target);
    }
    throw field_mismatch("no embedding between these fields");
}

Scalar Scalar::trace_to_base() const {
    if (f_->kind() != FieldKind::extension) throw domain_error("trace needs an extension field");
    const FieldInfo* base = f_->base();
    int d = f_->degree();
    // Sum of diagonal entries of multiplication by *this on the power basis.
    Scalar tr = base->zero();
    CoeffVec ypow = {base->one()};  // y^i reduced
    for (int i = 0; i < d; ++i) {
        CoeffVec col = cv_mod(cv_mul(c_, ypow, base), f_->modulus());
        if (static_cast<int>(col.size()) > i) tr += col[i];
        // multiply ypow by y
        ypow.insert(ypow.begin(), base->zero());
        ypow = cv_mod(std::move(ypow), f_->modulus());
    }
    return tr;
}

std::string Scalar::str() const {
    switch (f_->kind()) {
        case FieldKind::rational: {
            std::ostringstream os;
            os << num_;
            if (den_ != 1) os << "/" << den_;
            return os.str();
        }
        case FieldKind::prime:
            return std::to_string(num_);
        case FieldKind::extension:
            return std::to_string(index());
    }
    return "";
}

Scalar Scalar::parse(const FieldInfo* f, const std::string& text) {
    if (text.empty()) throw domain_error("empty scalar literal");
    if (f->kind() == FieldKind::rational) {
        auto slash = text.find('/');
        if (slash == std::string::npos) return Scalar::rational(std::stoll(text), 1);
        return Scalar::rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    }
    long long v = std::stoll(text);
    if (f->kind() == FieldKind::prime) return Scalar(f, v);
    if (v < 0) throw domain_error("extension scalar literals are nonnegative indices");
    return f->from_index(v);
}

}  // namespace tate
