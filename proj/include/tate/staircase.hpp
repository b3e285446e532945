#pragma once

#include <string>
#include <vector>

#include "tate/errors.hpp"

namespace tate {

// Layer of a monomial 2-lattice in k((t1))((t2)): the t1-component attached
// to one power of t2.  Lat(a) stands for t1^a k[[t1]].
struct Layer {
    enum class Kind { zero, lat, full };
    Kind kind = Kind::zero;
    long a = 0;

    static Layer zero() { return {Kind::zero, 0}; }
    static Layer lat(long a) { return {Kind::lat, a}; }
    static Layer full() { return {Kind::full, 0}; }

    friend bool operator==(const Layer& x, const Layer& y) {
        return x.kind == y.kind && (x.kind != Kind::lat || x.a == y.a);
    }
    friend bool operator!=(const Layer& x, const Layer& y) { return !(x == y); }
};

// Containment of the corresponding t1-modules.
bool layer_leq(const Layer& x, const Layer& y);
Layer layer_join(const Layer& x, const Layer& y);  // Lat(a) v Lat(b) = Lat(min)
Layer layer_meet(const Layer& x, const Layer& y);  // Lat(a) ^ Lat(b) = Lat(max)

// Staircase model of a lattice in the elementary 2-Tate object
// k((t1))((t2)): zero t1-component below j0, explicit layers on [j0, j1),
// full component from j1 up.  Layers grow with j (multiplication by t2 maps
// the lattice into itself), and the stored profile is normalized so that
// the first explicit layer is nonzero and not every trailing layer is full.
class Staircase2 {
  public:
    Staircase2(long j0, std::vector<Layer> profile);
    static Staircase2 standard(long shift = 0);  // t2^shift k((t1))[[t2]]

    long j0() const { return j0_; }
    long j1() const { return j0_ + static_cast<long>(profile_.size()); }
    Layer layer(long j) const;
    const std::vector<Layer>& profile() const { return profile_; }

    friend bool operator==(const Staircase2& a, const Staircase2& b) {
        return a.j0_ == b.j0_ && a.profile_ == b.profile_;
    }
    friend bool operator!=(const Staircase2& a, const Staircase2& b) { return !(a == b); }

    std::string str() const;

  private:
    long j0_;
    std::vector<Layer> profile_;
};

Staircase2 lattice2_join(const Staircase2& l, const Staircase2& m);
Staircase2 lattice2_meet(const Staircase2& l, const Staircase2& m);
bool lattice2_leq(const Staircase2& sub, const Staircase2& sup);

// Shape of one layer of a quotient of nested staircases: zero, finite
// dimensional, a t1-Pro piece, a t1-Ind piece, or a full 1-Tate layer
// (both pieces present).
struct OneTateDescriptor {
    long finite_dim = 0;
    bool pro_part = false;
    bool ind_part = false;

    bool is_zero() const { return finite_dim == 0 && !pro_part && !ind_part; }
    friend bool operator==(const OneTateDescriptor& a, const OneTateDescriptor& b) {
        return a.finite_dim == b.finite_dim && a.pro_part == b.pro_part && a.ind_part == b.ind_part;
    }
};

// Per-layer description of sup/sub over the smallest range carrying all the
// nontrivial layers.  Throws when the staircases are not nested.
std::vector<std::pair<long, OneTateDescriptor>> quotient2_descriptor(const Staircase2& sub,
                                                                     const Staircase2& sup);

// All staircases with layers supported in [-jbound, jbound) and Lat
// exponents bounded by abound; deterministic order.
std::vector<Staircase2> enumerate_staircases(long jbound, long abound);

}  // namespace tate
