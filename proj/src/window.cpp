#include "tate/window.hpp"

namespace tate {
namespace window_oracle {

FieldMatrix span_of_lattice(const Lattice& l, long w) {
    const FieldInfo* f = l.field();
    const int n = l.rank();
    const int dim = static_cast<int>(2 * w) * n;
    FieldMatrix acc(f, dim, 0);
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
                    const Scalar& val = s.coeffs()[d - s.v()];
                    if (val.is_zero()) continue;
                    vec.at(static_cast<int>((deg + w) * n + i), 0) = val;
                    nonzero = true;
                }
            }
            if (!nonzero) break;
            acc = FieldMatrix::hstack(acc, vec);
        }
    }
    return acc.column_space_basis();
}

FieldMatrix t_action(const FieldInfo* f, int rank, long w) {
    const int dim = static_cast<int>(2 * w) * rank;
    FieldMatrix t(f, dim, dim);
    for (long a = -w; a + 1 < w; ++a)
        for (int i = 0; i < rank; ++i)
            t.at(static_cast<int>((a + 1 + w) * rank + i), static_cast<int>((a + w) * rank + i)) = f->one();
    return t;
}

bool lattice_fits(const Lattice& l, long w) {
    for (long p : l.pivots())
        if (p > w || p < -w) return false;
    if (l.rank() > 0) {
        auto v = l.basis().min_entry_val();
        if (v && *v < -w) return false;
    }
    return true;
}

FieldMatrix subspace_sum(const FieldMatrix& a, const FieldMatrix& b) {
    return FieldMatrix::hstack(a, b).column_space_basis();
}

FieldMatrix subspace_intersection(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.cols() == 0 || b.cols() == 0) return FieldMatrix(a.field(), a.rows(), 0);
    FieldMatrix k = FieldMatrix::hstack(a, -b).kernel_basis();
    FieldMatrix x(a.field(), a.cols(), k.cols());
    for (int i = 0; i < a.cols(); ++i)
        for (int j = 0; j < k.cols(); ++j) x.at(i, j) = k.at(i, j);
    return (a * x).column_space_basis();
}

bool subspace_leq(const FieldMatrix& a, const FieldMatrix& b) {
    return FieldMatrix::hstack(a, b).rank() == b.rank();
}

bool subspace_eq(const FieldMatrix& a, const FieldMatrix& b) {
    return a.rank() == b.rank() && subspace_leq(a, b);
}

std::vector<long> quotient_exponents(const FieldMatrix& sub, const FieldMatrix& sup,
                                     const FieldMatrix& t, long w) {
    if (!subspace_leq(sub, sup)) throw domain_error("oracle: subspaces are not nested");
    // dims[m] = dim (t^m sup + sub) - dim sub = sum_i max(e_i - m, 0)
    std::vector<long> dims;
    FieldMatrix power = sup;
    for (long m = 0; m <= 2 * w; ++m) {
        dims.push_back(subspace_sum(power, sub).cols() - sub.cols());
        if (dims.back() == 0) break;
        power = (t * power).column_space_basis();
    }
    // dims[m] - dims[m+1] counts the factors with e_i >= m+1; differencing
    // once more gives the multiplicity of each exponent.
    std::vector<long> ge;
    for (size_t m = 0; m + 1 < dims.size(); ++m) ge.push_back(dims[m] - dims[m + 1]);
    std::vector<long> exps;
    for (size_t m = 0; m < ge.size(); ++m) {
        long here = ge[m] - (m + 1 < ge.size() ? ge[m + 1] : 0);
        for (long c = 0; c < here; ++c) exps.push_back(static_cast<long>(m) + 1);
    }
    std::sort(exps.begin(), exps.end());
    return exps;
}

IndexDims index_dims(const FieldMatrix& s0, const FieldMatrix& s1) {
    FieldMatrix meet = subspace_intersection(s0, s1);
    return IndexDims{s0.cols() - meet.cols(), s1.cols() - meet.cols()};
}

}  // namespace window_oracle
}  // namespace tate
