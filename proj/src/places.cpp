#include "tate/places.hpp"

#include <algorithm>
#include <sstream>

namespace tate {

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.field() != den_.field()) throw field_mismatch("rational function across fields");
    if (den_.is_zero()) throw domain_error("zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.field()->one());
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Poly::divmod(num_, g).first;
        den_ = Poly::divmod(den_, g).first;
    }
    Scalar lead = den_.leading();
    if (!lead.is_one()) {
        Scalar inv = lead.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

std::string RationalFunction::str() const {
    if (den_.degree() == 0) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---------------------------------------------------------------------------

Place Place::infinity(const FieldInfo* f) { return Place(f, Poly(f), true); }

Place Place::finite(const Poly& pi) {
    if (!pi.is_monic() || pi.degree() < 1) throw domain_error("finite place needs a monic polynomial");
    if (!pi.is_irreducible()) throw domain_error("finite place needs an irreducible polynomial");
    return Place(pi.field(), pi, false);
}

const Poly& Place::uniformizer() const {
    if (infinite_) throw domain_error("infinity has no polynomial uniformizer");
    return pi_;
}

const FieldInfo* Place::residue_field() const {
    if (infinite_ || pi_.degree() == 1) return field_;
    return FieldInfo::extension(field_, pi_.coeffs());
}

std::string Place::name() const { return infinite_ ? "inf" : pi_.str(); }

bool operator==(const Place& a, const Place& b) {
    if (a.infinite_ != b.infinite_) return false;
    return a.infinite_ || a.pi_ == b.pi_;
}

bool operator<(const Place& a, const Place& b) {
    if (a.infinite_ != b.infinite_) return a.infinite_;
    if (a.infinite_) return false;
    return a.pi_ < b.pi_;
}

long long count_irreducibles(long long q, int d) {
    // (1/d) sum_{e | d} mu(e) q^{d/e}
    auto mobius = [](int n) {
        int m = 1;
        for (int p = 2; p * p <= n; ++p) {
            if (n % p) continue;
            n /= p;
            if (n % p == 0) return 0;
            m = -m;
        }
        if (n > 1) m = -m;
        return m;
    };
    long long total = 0;
    for (int e = 1; e <= d; ++e) {
        if (d % e) continue;
        long long pw = 1;
        for (int i = 0; i < d / e; ++i) pw *= q;
        total += mobius(e) * pw;
    }
    return total / d;
}

std::vector<Place> enumerate_places(const FieldInfo* f, int max_degree) {
    if (!f->finite()) throw domain_error("places need a finite base field");
    std::vector<Place> out;
    out.push_back(Place::infinity(f));
    long long q = f->order();
    for (int d = 1; d <= max_degree; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= q;
        for (long long m = 0; m < count; ++m) {
            std::vector<Scalar> coeffs;
            long long rest = m;
            for (int i = 0; i < d; ++i) {
                coeffs.push_back(f->from_index(rest % q));
                rest /= q;
            }
            coeffs.push_back(f->one());
            Poly cand(f, coeffs);
            if (cand.is_irreducible()) out.push_back(Place::finite(cand));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

// Residue-class helpers for the digit expansion at a finite place.
struct ResidueRing {
    const FieldInfo* base;
    const FieldInfo* ext;  // == base for degree-1 places
    Poly pi;
    Scalar root;  // for degree-1 places, the zero of pi

    explicit ResidueRing(const Place& p)
        : base(p.base_field()), ext(p.residue_field()), pi(p.uniformizer()), root(base->zero()) {
        if (pi.degree() == 1) root = -pi.coeff(0);
    }

    Scalar cls(const Poly& r) const {
        if (pi.degree() == 1) return r(root);
        Poly rem = Poly::divmod(r, pi).second;
        std::vector<Scalar> cv = rem.coeffs();
        return Scalar::from_coeffs(ext, cv);
    }

    Poly lift(const Scalar& c) const {
        if (pi.degree() == 1) return Poly::constant(c);
        return Poly(base, c.coeffs());
    }
};

// Digits of n/d at pi, both coprime to pi, little-endian.
std::vector<Scalar> pi_adic_digits(const ResidueRing& rr, Poly n, const Poly& d, int digits) {
    Scalar dinv = rr.cls(d).inverse();
    std::vector<Scalar> out;
    Poly r = n;
    for (int k = 0; k < digits; ++k) {
        Scalar dig = rr.cls(r) * dinv;
        out.push_back(dig);
        auto [q, rem] = Poly::divmod(r - rr.lift(dig) * d, rr.pi);
        if (!rem.is_zero()) throw domain_error("digit expansion failed to divide");
        r = q;
    }
    return out;
}

Poly reversal(const Poly& p, int width) {
    // Coefficients of u^{width} p(1/u); width >= deg p.
    std::vector<Scalar> c(static_cast<size_t>(width) + 1, p.field()->zero());
    for (int k = 0; k <= p.degree(); ++k) c[width - k] = p.coeff(k);
    return Poly(p.field(), std::move(c));
}

}  // namespace

long place_valuation(const RationalFunction& f, const Place& p) {
    if (f.is_zero()) throw domain_error("valuation of the zero function");
    if (p.is_infinity()) return f.den().degree() - f.num().degree();
    int vn = f.num().remove_factor(p.uniformizer(), nullptr);
    int vd = f.den().remove_factor(p.uniformizer(), nullptr);
    return vn - vd;
}

LocalExpansion local_expand(const RationalFunction& f, const Place& p, int digits) {
    if (digits < 0) throw domain_error("digit count must be >= 0");
    const FieldInfo* e = p.residue_field();
    if (f.is_zero()) return LocalExpansion{p, LaurentSeries::zero(e, digits)};

    if (p.is_infinity()) {
        long v = f.den().degree() - f.num().degree();
        int w = std::max(f.num().degree(), f.den().degree());
        // u^w num(1/u) and u^w den(1/u); after stripping powers of u both
        // have nonzero constant term and the stripped exponents difference
        // is exactly v.
        Poly rn = reversal(f.num(), w), rd = reversal(f.den(), w);
        Poly u = Poly::x(f.field());
        rn.remove_factor(u, &rn);
        rd.remove_factor(u, &rd);
        ResidueRing rr(Place::finite(u));
        std::vector<Scalar> digs = pi_adic_digits(rr, rn, rd, digits);
        return LocalExpansion{p, LaurentSeries(e, v, v + digits, std::move(digs))};
    }

    const Poly& pi = p.uniformizer();
    Poly n1(f.field()), d1(f.field());
    int vn = f.num().remove_factor(pi, &n1);
    int vd = f.den().remove_factor(pi, &d1);
    long v = vn - vd;
    ResidueRing rr(p);
    std::vector<Scalar> digs = pi_adic_digits(rr, n1, d1, digits);
    return LocalExpansion{p, LaurentSeries(e, v, v + digits, std::move(digs))};
}

Scalar residue(const RationalFunction& f, const RationalFunction& g, const Place& p) {
    const FieldInfo* base = f.field();
    RationalFunction gp = g.derivative();
    RationalFunction w = f * gp;
    if (p.is_infinity()) {
        // dx = -u^{-2} du, so the integrand in u is -x^2 f g'.
        Poly x2 = Poly::monomial(base, 2, base->one());
        w = w * RationalFunction(-x2, Poly::constant(base->one()));
    } else {
        // dg/du = g'(x) / pi'(x); irreducibles over finite fields are
        // separable.
        w = w * RationalFunction(Poly::constant(base->one()), p.uniformizer().derivative());
    }
    if (w.is_zero()) return base->zero();
    long v = place_valuation(w, p);
    if (v >= 0) return base->zero();
    LocalExpansion le = local_expand(w, p, static_cast<int>(-v));
    Scalar c = le.series.coeff(-1);
    if (c.field() == base) return c;
    return c.trace_to_base();
}

std::vector<std::pair<Poly, int>> factor_squarefree_by_places(const Poly& p) {
    if (p.is_zero()) throw domain_error("cannot factor the zero polynomial");
    std::vector<std::pair<Poly, int>> out;
    Poly rem = p.degree() >= 1 ? p.monic() : p;
    const FieldInfo* f = p.field();
    long long q = f->order();
    for (int d = 1; rem.degree() >= d; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= q;
        for (long long m = 0; m < count && rem.degree() >= d; ++m) {
            std::vector<Scalar> coeffs;
            long long rest = m;
            for (int i = 0; i < d; ++i) {
                coeffs.push_back(f->from_index(rest % q));
                rest /= q;
            }
            coeffs.push_back(f->one());
            Poly cand(f, coeffs);
            int mult = rem.remove_factor(cand, &rem);
            if (mult > 0) out.emplace_back(cand, mult);
        }
    }
    return out;
}

ResidueReport residue_sum(const RationalFunction& f, const RationalFunction& g) {
    const FieldInfo* base = f.field();
    RationalFunction w = f * g.derivative();
    ResidueReport rep{{}, base->zero()};
    std::vector<Place> places;
    places.push_back(Place::infinity(base));
    if (!w.is_zero())
        for (const auto& [pi, mult] : factor_squarefree_by_places(w.den())) {
            (void)mult;
            places.push_back(Place::finite(pi));
        }
    std::sort(places.begin(), places.end());
    for (const Place& p : places) {
        Scalar r = residue(f, g, p);
        rep.per_place.emplace_back(p, r);
        rep.sum += r;
    }
    return rep;
}

}  // namespace tate
