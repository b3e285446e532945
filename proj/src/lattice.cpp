#include "tate/lattice.hpp"

#include <algorithm>

namespace tate {

Lattice Lattice::standard(const TateSpace& v, long shift) {
    if (v.rank < 0) throw domain_error("negative rank");
    LaurentMatrix b = LaurentMatrix::monomial_diag(v.field, std::vector<long>(v.rank, shift), v.default_prec);
    return Lattice(std::move(b), std::vector<long>(v.rank, shift), [&] {
        std::vector<int> rows(v.rank);
        for (int i = 0; i < v.rank; ++i) rows[i] = i;
        return rows;
    }());
}

Lattice Lattice::from_matrix(const LaurentMatrix& m) {
    if (m.rows() != m.cols()) throw domain_error("lattice basis must be square");
    return from_generators(m);
}

Lattice Lattice::from_generators(const LaurentMatrix& m) {
    HermiteResult h = dvr_hermite_reduce(m, true);
    return Lattice(std::move(h.basis), std::move(h.pivots), std::move(h.pivot_rows));
}

Lattice Lattice::shifted(long k) const {
    if (rank() == 0) return *this;
    Lattice r = *this;
    r.basis_ = basis_.shifted(k);
    for (auto& p : r.pivots_) p += k;
    return r;
}

Lattice Lattice::mapped(const FieldInfo* target) const {
    if (rank() == 0) {
        Lattice r = *this;
        return r;
    }
    return from_matrix(basis_.mapped(target));
}

bool operator==(const Lattice& a, const Lattice& b) {
    return a.rank() == b.rank() && a.field() == b.field() && a.pivots_ == b.pivots_ &&
           a.basis_.same_digits(b.basis_);
}

void require_same_ambient(const Lattice& a, const Lattice& b) {
    if (a.rank() != b.rank() || (a.rank() > 0 && a.field() != b.field()))
        throw domain_error("lattices live in different ambient spaces");
}

Lattice lattice_join(const Lattice& l0, const Lattice& l1) {
    require_same_ambient(l0, l1);
    if (l0.rank() == 0) return l0;
    return Lattice::from_generators(LaurentMatrix::hstack(l0.basis(), l1.basis()));
}

Lattice lattice_dual(const Lattice& l) {
    if (l.rank() == 0) return l;
    return Lattice::from_matrix(l.basis().inverse().transpose());
}

Lattice lattice_meet(const Lattice& l0, const Lattice& l1) {
    require_same_ambient(l0, l1);
    if (l0.rank() == 0) return l0;
    return lattice_dual(lattice_join(lattice_dual(l0), lattice_dual(l1)));
}

bool lattice_leq(const Lattice& sub, const Lattice& sup) {
    require_same_ambient(sub, sup);
    for (int c = 0; c < sub.rank(); ++c)
        if (!in_dvr_span(sup.basis(), sub.basis().col(c))) return false;
    return true;
}

std::vector<long> quotient_dims(const Lattice& sub, const Lattice& sup) {
    require_same_ambient(sub, sup);
    if (sub.rank() == 0) return {};
    LaurentMatrix c = sup.basis().inverse() * sub.basis();
    std::vector<long> exps;
    try {
        exps = dvr_smith_exponents(c);
    } catch (const domain_error&) {
        throw domain_error("lattices are not nested");
    }
    return exps;
}

IndexBundle index_bundle(const Lattice& l0, const Lattice& l1) {
    require_same_ambient(l0, l1);
    Lattice n = lattice_meet(l0, l1);
    auto total = [](const std::vector<long>& v) {
        long s = 0;
        for (long e : v) s += e;
        return s;
    };
    return IndexBundle{total(quotient_dims(n, l0)), total(quotient_dims(n, l1))};
}

Lattice enveloping_lattice_for_map(const LaurentMatrix& a, int ambient_rank, long prec) {
    long shift = 0;
    auto v = a.min_entry_val();
    if (v && *v < 0) shift = *v;
    return Lattice::standard({ambient_rank, a.field(), prec}, shift);
}

std::vector<long> ind_quotient_dims(const Lattice& l, int kmax) {
    if (kmax < 0) throw domain_error("kmax must be >= 0");
    std::vector<long> dims;
    for (int k = 0; k <= kmax; ++k) {
        auto exps = quotient_dims(l, l.shifted(-k));
        long s = 0;
        for (long e : exps) s += e;
        dims.push_back(s);
    }
    return dims;
}

SplitWindow split_tate(const TateSpace& v, const Lattice& l, long window) {
    if (l.rank() != v.rank || (v.rank > 0 && l.field() != v.field))
        throw domain_error("lattice does not live in the given space");
    const FieldInfo* f = v.field;
    const int n = v.rank;
    const long w = window;
    for (long p : l.pivots())
        if (p >= w || p < -w) throw domain_error("window too small for the lattice pivots");
    auto lo = l.rank() == 0 ? std::optional<long>{} : l.basis().min_entry_val();
    if (lo && *lo < -w) throw domain_error("window too small for the lattice support");

    const int dim = static_cast<int>(2 * w) * n;
    // Window images t^j * column, truncated to degrees below w.
    std::vector<FieldMatrix> gens;
    for (int c = 0; c < n; ++c) {
        for (long j = 0;; ++j) {
            FieldMatrix vec(f, dim, 1);
            bool nonzero = false;
            for (int i = 0; i < n; ++i) {
                const LaurentSeries& s = l.basis().at(i, c);
                if (s.is_zero_at_prec()) continue;
                for (long d = s.v(); d < s.v() + static_cast<long>(s.coeffs().size()); ++d) {
                    long deg = d + j;
                    if (deg < -w || deg >= w) continue;
                    Scalar val = s.coeffs()[d - s.v()];
                    if (val.is_zero()) continue;
                    vec.at(static_cast<int>((deg + w) * n + i), 0) = val;
                    nonzero = true;
                }
            }
            if (!nonzero) break;
            gens.push_back(vec);
        }
    }
    FieldMatrix all(f, dim, 0);
    for (const auto& g : gens) all = FieldMatrix::hstack(all, g);
    FieldMatrix section = all.column_space_basis();
    FieldMatrix retraction =
        section.cols() == 0 ? FieldMatrix(f, 0, dim) : retraction_of_monic(section);
    return SplitWindow{section, retraction};
}

}  // namespace tate
