#include "tate/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tate {

Poly::Poly(const FieldInfo* f, std::vector<Scalar> coeffs) : f_(f), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (c.field() != f_) throw field_mismatch("polynomial coefficient field mismatch");
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::x(const FieldInfo* f) { return Poly(f, {f->zero(), f->one()}); }

Poly Poly::constant(const Scalar& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const FieldInfo* f, int k, const Scalar& c) {
    if (k < 0) throw domain_error("monomial exponent must be >= 0");
    std::vector<Scalar> v(k + 1, f->zero());
    v[k] = c;
    return Poly(f, std::move(v));
}

Scalar Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return f_->zero();
    return c_[k];
}

Scalar Poly::leading() const {
    if (c_.empty()) throw domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

bool Poly::is_monic() const { return !c_.empty() && c_.back().is_one(); }

Poly Poly::monic() const {
    if (c_.empty()) throw domain_error("cannot normalize zero polynomial");
    return *this * c_.back().inverse();
}

Scalar Poly::operator()(const Scalar& v) const {
    Scalar acc = f_->zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(f_);
    std::vector<Scalar> d(c_.size() - 1, f_->zero());
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * f_->from_integer(static_cast<long long>(k));
    return Poly(f_, std::move(d));
}

Poly operator+(const Poly& a, const Poly& b) {
    if (a.f_ != b.f_) throw field_mismatch("polynomial addition across fields");
    std::vector<Scalar> r = a.c_;
    if (r.size() < b.c_.size()) r.resize(b.c_.size(), a.f_->zero());
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Poly(a.f_, std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::operator-() const {
    std::vector<Scalar> r = c_;
    for (auto& c : r) c = -c;
    return Poly(f_, std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.f_ != b.f_) throw field_mismatch("polynomial multiplication across fields");
    if (a.c_.empty() || b.c_.empty()) return Poly(a.f_);
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, a.f_->zero());
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Poly(a.f_, std::move(r));
}

Poly Poly::operator*(const Scalar& s) const {
    std::vector<Scalar> r = c_;
    for (auto& c : r) c *= s;
    return Poly(f_, std::move(r));
}

bool operator==(const Poly& a, const Poly& b) { return a.f_ == b.f_ && a.c_ == b.c_; }

bool operator<(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (size_t i = 0; i < a.c_.size(); ++i) {
        long long ia = a.c_[i].index(), ib = b.c_[i].index();
        if (ia != ib) return ia < ib;
    }
    return false;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (a.f_ != b.f_) throw field_mismatch("polynomial division across fields");
    if (b.is_zero()) throw domain_error("polynomial division by zero");
    Poly q(a.f_), r = a;
    if (r.degree() < b.degree()) return {q, r};
    q.c_.assign(r.degree() - b.degree() + 1, a.f_->zero());
    Scalar lead_inv = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        Scalar c = r.leading() * lead_inv;
        q.c_[k] = c;
        for (int i = 0; i <= b.degree(); ++i) r.c_[k + i] -= c * b.c_[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Poly rem = divmod(r0, r1).second;
        r0 = r1;
        r1 = rem;
    }
    if (r0.is_zero()) return r0;
    return r0.monic();
}

Poly Poly::powmod(const Poly& base, long long e, const Poly& mod) {
    Poly acc = Poly::constant(base.f_->one());
    Poly b = divmod(base, mod).second;
    while (e > 0) {
        if (e & 1) acc = divmod(acc * b, mod).second;
        b = divmod(b * b, mod).second;
        e >>= 1;
    }
    return acc;
}

int Poly::remove_factor(const Poly& d, Poly* quotient_out) const {
    if (d.degree() < 1) throw domain_error("factor must be nonconstant");
    int m = 0;
    Poly cur = *this;
    while (!cur.is_zero()) {
        auto [q, r] = divmod(cur, d);
        if (!r.is_zero()) break;
        cur = q;
        ++m;
    }
    if (quotient_out) *quotient_out = cur;
    return m;
}

bool Poly::is_irreducible() const {
    // Rabin's test.  Works over any finite field; q is the order of the
    // coefficient field and Frobenius powers are iterated q-th powers.
    if (!f_->finite()) throw domain_error("irreducibility test needs a finite field");
    int d = degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    long long q = f_->order();
    Poly f = monic();
    Poly xp = Poly::x(f_);

    auto frob_iter = [&](const Poly& g, int times) {
        Poly h = g;
        for (int i = 0; i < times; ++i) h = powmod(h, q, f);
        return h;
    };

    // x^(q^d) == x mod f
    if (frob_iter(xp, d) != divmod(xp, f).second) return false;
    // gcd(x^(q^(d/r)) - x, f) == 1 for every prime r | d
    std::vector<int> primes;
    int dd = d;
    for (int r = 2; r * r <= dd; ++r) {
        if (dd % r == 0) {
            primes.push_back(r);
            while (dd % r == 0) dd /= r;
        }
    }
    if (dd > 1) primes.push_back(dd);
    for (int r : primes) {
        Poly h = frob_iter(xp, d / r) - xp;
        if (gcd(h, f).degree() != 0) return false;
    }
    return true;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Scalar c = coeff(k);
        if (c.is_zero()) continue;
        if (!first) os << "+";
        first = false;
        if (k == 0 || !c.is_one()) os << c.str();
        if (k > 0) {
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

Poly Poly::parse(const FieldInfo* f, const std::string& text, const std::string& var) {
    // Accepts sums of terms "c", "c*x^k", "c x^k", "x^k", "x", with +/-.
    Poly acc(f);
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    bool any = false;
    while (i < text.size()) {
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (any) {
            throw domain_error("malformed polynomial: missing operator in '" + text + "'");
        }
        std::string num;
        while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) num += text[i++];
        skip_ws();
        if (i < text.size() && text[i] == '*') { ++i; skip_ws(); }
        int exp = 0;
        if (text.compare(i, var.size(), var) == 0) {
            i += var.size();
            exp = 1;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                std::string e;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) e += text[i++];
                if (e.empty()) throw domain_error("malformed exponent in '" + text + "'");
                exp = std::stoi(e);
            }
        }
        if (num.empty() && exp == 0) throw domain_error("malformed polynomial term in '" + text + "'");
        Scalar c = num.empty() ? f->one() : Scalar::parse(f, num);
        if (sign < 0) c = -c;
        acc = acc + Poly::monomial(f, exp, c);
        any = true;
        skip_ws();
    }
    if (!any) throw domain_error("empty polynomial literal");
    return acc;
}

}  // namespace tate
