#include "tate/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace tate {

LaurentSeries::LaurentSeries(const FieldInfo* f, long v, long prec, std::vector<Scalar> coeffs)
    : f_(f), v_(v), prec_(prec), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (c.field() != f_) throw field_mismatch("series coefficient field mismatch");
    if (v_ + static_cast<long>(c_.size()) > prec_)
        throw domain_error("series coefficients extend past the declared precision");
    canon();
}

void LaurentSeries::canon() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        v_ += static_cast<long>(lead);
    }
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    if (c_.empty()) v_ = 0;
}

LaurentSeries LaurentSeries::zero(const FieldInfo* f, long prec) { return LaurentSeries(f, 0, prec, {}); }

LaurentSeries LaurentSeries::one(const FieldInfo* f, long prec) { return monomial(f, 0, prec); }

LaurentSeries LaurentSeries::monomial(const FieldInfo* f, long k, long prec) {
    if (k >= prec) throw domain_error("monomial exponent at or past precision");
    return LaurentSeries(f, k, prec, {f->one()});
}

LaurentSeries LaurentSeries::constant(const Scalar& c, long prec) {
    if (c.is_zero()) return zero(c.field(), prec);
    if (prec <= 0) throw domain_error("constant needs positive precision");
    return LaurentSeries(c.field(), 0, prec, {c});
}

std::optional<long> LaurentSeries::val() const {
    if (c_.empty()) return std::nullopt;
    return v_;
}

bool LaurentSeries::is_monomial(long k) const {
    return c_.size() == 1 && v_ == k && c_[0].is_one();
}

Scalar LaurentSeries::coeff(long k) const {
    if (k >= prec_) throw precision_error("coefficient index at or past precision");
    if (k < v_ || k >= v_ + static_cast<long>(c_.size())) return f_->zero();
    return c_[k - v_];
}

LaurentSeries LaurentSeries::truncated(long new_prec) const {
    long p = std::min(prec_, new_prec);
    std::vector<Scalar> cc;
    for (long k = v_; k < std::min(p, v_ + static_cast<long>(c_.size())); ++k) cc.push_back(c_[k - v_]);
    return LaurentSeries(f_, v_, p, std::move(cc));
}

LaurentSeries LaurentSeries::shifted(long k) const {
    LaurentSeries r = *this;
    r.v_ += k;
    r.prec_ += k;
    if (r.c_.empty()) r.v_ = 0;
    return r;
}

LaurentSeries LaurentSeries::integral_above(long k) const {
    std::vector<Scalar> cc;
    for (long d = std::max(v_, k); d < v_ + static_cast<long>(c_.size()); ++d) cc.push_back(c_[d - v_]);
    return LaurentSeries(f_, std::max(v_, k) - k, prec_ - k, std::move(cc));
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.f_ != b.f_) throw field_mismatch("series addition across fields");
    long prec = std::min(a.prec_, b.prec_);
    long lo = std::min(a.veff(), b.veff());
    if (lo >= prec) return LaurentSeries::zero(a.f_, prec);
    std::vector<Scalar> cc(static_cast<size_t>(prec - lo), a.f_->zero());
    auto acc = [&](const LaurentSeries& s) {
        for (long k = s.v_; k < std::min(prec, s.v_ + static_cast<long>(s.c_.size())); ++k)
            cc[k - lo] += s.c_[k - s.v_];
    };
    acc(a);
    acc(b);
    return LaurentSeries(a.f_, lo, prec, std::move(cc));
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.f_ != b.f_) throw field_mismatch("series multiplication across fields");
    long prec = std::min(a.prec_ + b.veff(), b.prec_ + a.veff());
    if (a.c_.empty() || b.c_.empty()) return LaurentSeries::zero(a.f_, prec);
    long lo = a.v_ + b.v_;
    if (lo >= prec) return LaurentSeries::zero(a.f_, prec);
    std::vector<Scalar> cc(static_cast<size_t>(prec - lo), a.f_->zero());
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            long k = a.v_ + static_cast<long>(i) + b.v_ + static_cast<long>(j);
            if (k >= prec) break;
            cc[k - lo] += a.c_[i] * b.c_[j];
        }
    }
    return LaurentSeries(a.f_, lo, prec, std::move(cc));
}

LaurentSeries LaurentSeries::operator*(const Scalar& s) const {
    if (s.field() != f_) throw field_mismatch("series scaling across fields");
    if (s.is_zero()) return zero(f_, prec_);
    LaurentSeries r = *this;
    for (auto& c : r.c_) c *= s;
    r.canon();
    return r;
}

LaurentSeries LaurentSeries::inverse() const {
    if (c_.empty()) throw domain_error("inverse of a series that is zero at its precision");
    long m = prec_ - v_;  // relative precision of the unit part
    if (m <= 0) throw precision_error("empty precision window for inversion");
    // Invert the unit part u = c_[0] + c_[1] t + ... modulo t^m by long
    // division, then shift the valuation.
    std::vector<Scalar> inv(static_cast<size_t>(m), f_->zero());
    Scalar lead_inv = c_[0].inverse();
    std::vector<Scalar> rem(static_cast<size_t>(m), f_->zero());
    rem[0] = f_->one();
    for (long k = 0; k < m; ++k) {
        Scalar d = rem[k] * lead_inv;
        inv[k] = d;
        if (d.is_zero()) continue;
        for (size_t j = 0; j < c_.size() && k + static_cast<long>(j) < m; ++j)
            rem[k + j] -= d * c_[j];
    }
    return LaurentSeries(f_, -v_, -v_ + m, std::move(inv));
}

LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) { return a * b.inverse(); }

bool agree_at_common_prec(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.f_ != b.f_) return false;
    long prec = std::min(a.prec_, b.prec_);
    return a.truncated(prec).c_ == b.truncated(prec).c_ &&
           (a.truncated(prec).c_.empty() || a.truncated(prec).v_ == b.truncated(prec).v_);
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.f_ == b.f_ && a.v_ == b.v_ && a.prec_ == b.prec_ && a.c_ == b.c_;
}

LaurentSeries LaurentSeries::mapped(const FieldInfo* target) const {
    std::vector<Scalar> cc;
    cc.reserve(c_.size());
    for (const auto& c : c_) cc.push_back(c.embed(target));
    return LaurentSeries(target, v_, prec_, std::move(cc));
}

std::string LaurentSeries::str(const std::string& var) const {
    std::ostringstream os;
    if (c_.empty()) {
        os << "O(" << var << "^" << prec_ << ")";
        return os.str();
    }
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        long k = v_ + static_cast<long>(i);
        if (!first) os << " + ";
        first = false;
        if (k == 0 || !c_[i].is_one()) os << c_[i].str();
        if (k != 0) {
            if (!c_[i].is_one()) os << "*";
            os << var;
            if (k != 1) os << "^" << k;
        }
    }
    os << " + O(" << var << "^" << prec_ << ")";
    return os.str();
}

}  // namespace tate
