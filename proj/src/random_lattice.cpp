#include "tate/random_lattice.hpp"

namespace tate {

long Rng::uniform(long lo, long hi) {
    return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
}

Scalar Rng::scalar(const FieldInfo* f) {
    if (!f->finite()) return Scalar::rational(uniform(-9, 9), uniform(1, 9));
    return f->from_index(uniform(0, f->order() - 1));
}

Scalar Rng::nonzero_scalar(const FieldInfo* f) {
    if (!f->finite()) return Scalar::rational(uniform(1, 9), uniform(1, 9));
    return f->from_index(uniform(1, f->order() - 1));
}

LaurentSeries Rng::series(const FieldInfo* f, long deg_lo, long deg_hi, long prec) {
    std::vector<Scalar> c;
    for (long d = deg_lo; d <= deg_hi; ++d) c.push_back(scalar(f));
    return LaurentSeries(f, deg_lo, prec, std::move(c));
}

Lattice random_lattice(Rng& rng, const TateSpace& v) {
    if (v.rank == 0) return Lattice::standard(v);
    const long prec = v.default_prec;
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<long> exps;
        for (int i = 0; i < v.rank; ++i) exps.push_back(rng.uniform(-3, 3));
        LaurentMatrix t = LaurentMatrix::monomial_diag(v.field, exps, prec);
        LaurentMatrix p = LaurentMatrix::identity(v.field, v.rank, prec);
        for (int i = 0; i < v.rank; ++i)
            for (int j = 0; j < v.rank; ++j) {
                LaurentSeries noise = i == j ? rng.series(v.field, 1, 2, prec)
                                             : rng.series(v.field, -2, 2, prec);
                p.at(i, j) = p.at(i, j) + noise;
            }
        try {
            return Lattice::from_matrix(p * t);
        } catch (const singular_error&) {
        }
    }
    throw singular_error("random lattice generation kept drawing singular matrices");
}

LaurentMatrix random_unimodular(Rng& rng, const FieldInfo* f, int n, long prec) {
    LaurentMatrix u = LaurentMatrix::identity(f, n, prec);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) u.at(i, j) = u.at(i, j) + rng.series(f, 1, 3, prec);
    // Unit column scalings keep it invertible over k[[t]].
    for (int j = 0; j < n; ++j) {
        LaurentSeries unit = LaurentSeries::constant(rng.nonzero_scalar(f), prec);
        for (int i = 0; i < n; ++i) u.at(i, j) = u.at(i, j) * unit;
    }
    return u;
}

FieldMatrix random_field_matrix(Rng& rng, const FieldInfo* f, int rows, int cols) {
    FieldMatrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = rng.scalar(f);
    return m;
}

RationalFunction random_rational_function(Rng& rng, const FieldInfo* f, int num_deg, int den_deg) {
    for (;;) {
        std::vector<Scalar> nc, dc;
        for (int i = 0; i <= num_deg; ++i) nc.push_back(rng.scalar(f));
        for (int i = 0; i <= den_deg; ++i) dc.push_back(rng.scalar(f));
        Poly num(f, std::move(nc)), den(f, std::move(dc));
        if (num.is_zero() || den.is_zero()) continue;
        return RationalFunction(num, den);
    }
}

}  // namespace tate
