#include "tate/adeles.hpp"

#include <algorithm>

namespace tate {

TruncatedAdele adele_of_function(const RationalFunction& f, int max_degree, int digits) {
    const FieldInfo* base = f.field();
    if (!f.is_zero())
        for (const auto& [pi, mult] : factor_squarefree_by_places(f.den())) {
            (void)mult;
            if (pi.degree() > max_degree)
                throw domain_error("denominator has a place of degree beyond the truncation");
        }
    TruncatedAdele out{{}, true};
    for (const Place& p : enumerate_places(base, max_degree)) {
        LocalExpansion le = local_expand(f, p, digits);
        // Clamp to the window: digits known from the valuation, reported
        // modulo u^digits.
        out.components.push_back(LocalExpansion{p, le.series.truncated(digits)});
    }
    return out;
}

AdelicComplex::AdelicComplex(const FieldInfo* f, int d, int max_degree, int digits, int rank,
                             int point_sub)
    : f_(f), d_(d), dmax_(max_degree), n_(digits), rank_(rank), point_sub_(point_sub) {
    if (max_degree < 1) throw domain_error("place degree cutoff must be >= 1");
    if (digits < std::abs(d) + 2) throw domain_error("digit window too small for the twist");
    if (rank != 0 && rank != 1) throw domain_error("only rank 0 and rank 1 sheaves are modeled");
    if (point_sub < 0 || point_sub > 1) throw domain_error("point subtraction is 0 or 1");
    places_ = enumerate_places(f, max_degree);
}

long AdelicComplex::twist_at(int place_idx) const {
    const Place& p = places_[place_idx];
    if (p.is_infinity()) return -d_;
    if (point_sub_ > 0 && !p.is_infinity() && p.uniformizer() == Poly::x(f_)) return point_sub_;
    return 0;
}

int AdelicComplex::dim_full() const {
    if (rank_ == 0) return 0;
    int s = 0;
    for (const Place& p : places_) s += 2 * n_ * p.degree();
    return s;
}

int AdelicComplex::dim_integral() const { return rank_ == 0 ? 0 : dim_full() / 2; }

int AdelicComplex::dim_principal() const { return dim_full() - dim_integral(); }

int AdelicComplex::dim_gen() const {
    if (rank_ == 0) return 0;
    // deg of the pole divisor sum (N - m_p) p plus one.
    long deg = 0;
    for (size_t i = 0; i < places_.size(); ++i)
        deg += (n_ - twist_at(static_cast<int>(i))) * places_[i].degree();
    return static_cast<int>(std::max(0L, deg + 1));
}

RationalFunction AdelicComplex::gen_basis(int j) const {
    Poly den = Poly::constant(f_->one());
    for (size_t i = 0; i < places_.size(); ++i) {
        if (places_[i].is_infinity()) continue;
        long e = n_ - twist_at(static_cast<int>(i));
        for (long k = 0; k < e; ++k) den = den * places_[i].uniformizer();
    }
    return RationalFunction(Poly::monomial(f_, j, f_->one()), den);
}

std::vector<Scalar> AdelicComplex::window_coords(const LocalExpansion& le, int place_idx) const {
    const Place& p = places_[place_idx];
    const int deg = p.degree();
    const long lo = twist_at(place_idx) - n_;
    std::vector<Scalar> out(static_cast<size_t>(2 * n_ * deg), f_->zero());
    if (le.series.is_zero_at_prec()) return out;
    const LaurentSeries& s = le.series;
    for (long k = s.v(); k < s.v() + static_cast<long>(s.coeffs().size()); ++k) {
        long slot = k - lo;
        if (slot < 0 || slot >= 2 * n_) continue;
        const Scalar& c = s.coeffs()[k - s.v()];
        if (c.field() == f_) {
            out[static_cast<size_t>(slot) * deg] = c;
        } else {
            const auto& cc = c.coeffs();
            for (size_t t = 0; t < cc.size(); ++t) out[static_cast<size_t>(slot) * deg + t] = cc[t];
        }
    }
    return out;
}

FieldMatrix AdelicComplex::principal_part_matrix() const {
    const int rows = dim_principal(), cols = dim_gen();
    FieldMatrix m(f_, rows, cols);
    for (int j = 0; j < cols; ++j) {
        RationalFunction g = gen_basis(j);
        int row0 = 0;
        for (size_t pi = 0; pi < places_.size(); ++pi) {
            const Place& p = places_[pi];
            const int deg = p.degree();
            long split = twist_at(static_cast<int>(pi));
            long v = place_valuation(g, p);
            if (v < split - n_) throw domain_error("generator escapes its window");
            int digits = static_cast<int>(std::max(0L, split - v));
            LocalExpansion le = local_expand(g, p, digits);
            std::vector<Scalar> coords = window_coords(le, static_cast<int>(pi));
            for (int slot = 0; slot < n_ * deg; ++slot) m.at(row0 + slot, j) = coords[slot];
            row0 += n_ * deg;
        }
    }
    return m;
}

FieldMatrix AdelicComplex::difference_map() const {
    const int full = dim_full(), gen = dim_gen(), intd = dim_integral();
    FieldMatrix m(f_, full, gen + intd);
    for (int j = 0; j < gen; ++j) {
        RationalFunction g = gen_basis(j);
        int row0 = 0;
        for (size_t pi = 0; pi < places_.size(); ++pi) {
            const Place& p = places_[pi];
            const int deg = p.degree();
            long hi = twist_at(static_cast<int>(pi)) + n_;
            long v = place_valuation(g, p);
            int digits = static_cast<int>(std::max(0L, hi - v));
            LocalExpansion le = local_expand(g, p, digits);
            std::vector<Scalar> coords = window_coords(le, static_cast<int>(pi));
            for (int slot = 0; slot < 2 * n_ * deg; ++slot) m.at(row0 + slot, j) = coords[slot];
            row0 += 2 * n_ * deg;
        }
    }
    // Integral block: minus the inclusion of the upper window halves.
    int col = gen, row0 = 0;
    for (size_t pi = 0; pi < places_.size(); ++pi) {
        const int deg = places_[pi].degree();
        for (int slot = n_ * deg; slot < 2 * n_ * deg; ++slot) m.at(row0 + slot, col++) = -f_->one();
        row0 += 2 * n_ * deg;
    }
    return m;
}

std::pair<long, long> AdelicComplex::cohomology() const {
    if (rank_ == 0) return {0, 0};
    FieldMatrix pp = principal_part_matrix();
    long r = pp.rank();
    return {dim_gen() - r, dim_principal() - r};
}

AdeleCohomology adelic_cohomology(const FieldInfo* f, int d, int max_degree, int digits) {
    AdelicComplex base(f, d, max_degree, digits);
    auto [h0, h1] = base.cohomology();
    AdelicComplex refined(f, d, max_degree + 1, digits + 2);
    auto [h0r, h1r] = refined.cohomology();
    if (h0 != h0r || h1 != h1r)
        throw domain_error("adelic cohomology not stable under refinement");
    return AdeleCohomology{h0, h1, true};
}

AdeleTateStructure adele_tate_structure(const FieldInfo* f, int d, int max_degree, int digits,
                                        int rank) {
    AdelicComplex c(f, d, max_degree, digits, rank);
    return AdeleTateStructure{c.dim_integral(), c.dim_principal(), c.dim_full()};
}

bool ses_adeles_check(const FieldInfo* f, int d, int max_degree, int digits) {
    AdelicComplex big(f, d, max_degree, digits, 1, 0);
    AdelicComplex small(f, d, max_degree, digits, 1, 1);

    // Window bookkeeping of 0 -> O(d - p) -> O(d) -> O_p -> 0.
    if (big.dim_gen() - small.dim_gen() != 1) return false;
    // Integral windows at (x) shift by one slot; the skyscraper absorbs a
    // one-dimensional quotient.
    if (big.dim_integral() != small.dim_integral()) return false;
    if (big.dim_full() != small.dim_full()) return false;

    // Every generator of the smaller space satisfies the bigger bounds.
    for (int j = 0; j < small.dim_gen(); ++j) {
        RationalFunction g = small.gen_basis(j);
        for (size_t pi = 0; pi < big.places().size(); ++pi) {
            long bound = big.twist_at(static_cast<int>(pi)) - big.digits();
            if (place_valuation(g, big.places()[pi]) < bound) return false;
        }
    }

    auto [h0, h1] = big.cohomology();
    auto [h0s, h1s] = small.cohomology();
    long drop0 = h0 - h0s, rise1 = h1s - h1;
    if (drop0 < 0 || drop0 > 1 || rise1 < 0 || rise1 > 1) return false;
    // Long exact sequence through the one-dimensional skyscraper.
    return drop0 + rise1 == 1 && (h0 - h1) - (h0s - h1s) == 1;
}

}  // namespace tate
