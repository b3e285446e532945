#include "tate/staircase.hpp"

#include <algorithm>
#include <sstream>

namespace tate {

bool layer_leq(const Layer& x, const Layer& y) {
    if (x.kind == Layer::Kind::zero || y.kind == Layer::Kind::full) return true;
    if (x.kind == Layer::Kind::full) return false;
    if (y.kind == Layer::Kind::zero) return false;
    return x.a >= y.a;  // t1^a k[[t1]] <= t1^b k[[t1]] iff a >= b
}

Layer layer_join(const Layer& x, const Layer& y) { return layer_leq(x, y) ? y : x; }

Layer layer_meet(const Layer& x, const Layer& y) { return layer_leq(x, y) ? x : y; }

Staircase2::Staircase2(long j0, std::vector<Layer> profile) : j0_(j0), profile_(std::move(profile)) {
    for (size_t i = 0; i + 1 < profile_.size(); ++i)
        if (!layer_leq(profile_[i], profile_[i + 1]))
            throw domain_error("staircase layers must grow with the t2 exponent");
    // Normalize: leading zero layers belong below j0, trailing full layers
    // above j1.
    while (!profile_.empty() && profile_.front() == Layer::zero()) {
        profile_.erase(profile_.begin());
        ++j0_;
    }
    while (!profile_.empty() && profile_.back() == Layer::full()) profile_.pop_back();
}

Staircase2 Staircase2::standard(long shift) { return Staircase2(shift, {}); }

Layer Staircase2::layer(long j) const {
    if (j < j0_) return Layer::zero();
    if (j >= j1()) return Layer::full();
    return profile_[j - j0_];
}

std::string Staircase2::str() const {
    std::ostringstream os;
    os << "{";
    for (long j = j0_; j < j1(); ++j) {
        const Layer& l = layer(j);
        os << (j > j0_ ? ", " : "") << j << ":";
        switch (l.kind) {
            case Layer::Kind::zero: os << "0"; break;
            case Layer::Kind::lat: os << "Lat(" << l.a << ")"; break;
            case Layer::Kind::full: os << "Full"; break;
        }
    }
    os << ", >=" << j1() << ":Full}";
    return os.str();
}

namespace {

template <typename Op>
Staircase2 pointwise(const Staircase2& l, const Staircase2& m, Op op) {
    long lo = std::min(l.j0(), m.j0());
    long hi = std::max(l.j1(), m.j1());
    std::vector<Layer> prof;
    for (long j = lo; j < hi; ++j) prof.push_back(op(l.layer(j), m.layer(j)));
    return Staircase2(lo, std::move(prof));
}

}  // namespace

Staircase2 lattice2_join(const Staircase2& l, const Staircase2& m) {
    return pointwise(l, m, layer_join);
}

Staircase2 lattice2_meet(const Staircase2& l, const Staircase2& m) {
    return pointwise(l, m, layer_meet);
}

bool lattice2_leq(const Staircase2& sub, const Staircase2& sup) {
    long lo = std::min(sub.j0(), sup.j0());
    long hi = std::max(sub.j1(), sup.j1());
    for (long j = lo; j < hi; ++j)
        if (!layer_leq(sub.layer(j), sup.layer(j))) return false;
    return true;
}

std::vector<std::pair<long, OneTateDescriptor>> quotient2_descriptor(const Staircase2& sub,
                                                                     const Staircase2& sup) {
    if (!lattice2_leq(sub, sup)) throw domain_error("staircases are not nested");
    long lo = std::min(sub.j0(), sup.j0());
    long hi = std::max(sub.j1(), sup.j1());
    std::vector<std::pair<long, OneTateDescriptor>> out;
    for (long j = lo; j < hi; ++j) {
        Layer a = sub.layer(j), b = sup.layer(j);
        OneTateDescriptor d;
        if (a == b) {
            // zero layer
        } else if (b.kind == Layer::Kind::lat) {
            if (a.kind == Layer::Kind::zero) {
                d.pro_part = true;
            } else {
                d.finite_dim = a.a - b.a;
            }
        } else {  // b full
            d.ind_part = true;
            if (a.kind == Layer::Kind::zero) d.pro_part = true;  // full 1-Tate layer
        }
        out.emplace_back(j, d);
    }
    return out;
}

std::vector<Staircase2> enumerate_staircases(long jbound, long abound) {
    // Layer values in containment order: Zero < Lat(abound) < ... <
    // Lat(-abound) < Full.
    std::vector<Layer> chain;
    chain.push_back(Layer::zero());
    for (long a = abound; a >= -abound; --a) chain.push_back(Layer::lat(a));
    chain.push_back(Layer::full());
    const int levels = static_cast<int>(chain.size());
    const int positions = static_cast<int>(2 * jbound);

    std::vector<Staircase2> out;
    // Monotone sequences of length `positions` over the chain.
    std::vector<int> idx(positions, 0);
    while (true) {
        std::vector<Layer> prof;
        for (int p = 0; p < positions; ++p) prof.push_back(chain[idx[p]]);
        out.push_back(Staircase2(-jbound, std::move(prof)));
        int p = positions - 1;
        while (p >= 0 && idx[p] == levels - 1) --p;
        if (p < 0) break;
        int next = idx[p] + 1;
        for (int q = p; q < positions; ++q) idx[q] = next;
    }
    // Normalization can collide (different raw sequences, same staircase);
    // dedupe deterministically.
    std::sort(out.begin(), out.end(), [](const Staircase2& a, const Staircase2& b) {
        if (a.j0() != b.j0()) return a.j0() < b.j0();
        if (a.profile().size() != b.profile().size()) return a.profile().size() < b.profile().size();
        for (size_t i = 0; i < a.profile().size(); ++i) {
            const Layer &la = a.profile()[i], &lb = b.profile()[i];
            if (la.kind != lb.kind) return static_cast<int>(la.kind) < static_cast<int>(lb.kind);
            if (la.kind == Layer::Kind::lat && la.a != lb.a) return la.a < lb.a;
        }
        return false;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace tate
