#include "tate/exact.hpp"

namespace tate {

SubObject kernel(const FieldMatrix& f) {
    FieldMatrix k = f.kernel_basis();
    return SubObject{{k.cols(), f.field()}, k};
}

QuotientObject cokernel(const FieldMatrix& f) {
    const FieldInfo* fld = f.field();
    FieldMatrix im = f.column_space_basis();
    FieldMatrix full(fld, 0, 0);
    complement_coords(im, &full);
    int codim = f.rows() - im.cols();
    if (codim == 0) return QuotientObject{{0, fld}, FieldMatrix(fld, 0, f.rows())};
    FieldMatrix inv = full.inverse();
    // Bottom block of the inverse: coordinates along the chosen complement.
    FieldMatrix p(fld, codim, f.rows());
    for (int i = 0; i < codim; ++i)
        for (int j = 0; j < f.rows(); ++j) p.at(i, j) = inv.at(im.cols() + i, j);
    return QuotientObject{{codim, fld}, p};
}

Pushout pushout_along_monic(const FieldMatrix& i, const FieldMatrix& f) {
    if (i.cols() != f.cols()) throw domain_error("pushout legs must share their source");
    if (i.rank() != i.cols()) throw domain_error("pushout leg is not injective");
    const FieldInfo* fld = i.field();
    // Relation columns (i(x), -f(x)) inside Y + Z.
    FieldMatrix rel = FieldMatrix::vstack(i, -f);
    QuotientObject q = cokernel(rel);
    int ny = i.rows(), nz = f.rows();
    FieldMatrix from_y(fld, q.obj.dim, ny), from_z(fld, q.obj.dim, nz);
    for (int r = 0; r < q.obj.dim; ++r) {
        for (int c = 0; c < ny; ++c) from_y.at(r, c) = q.project.at(r, c);
        for (int c = 0; c < nz; ++c) from_z.at(r, c) = q.project.at(r, ny + c);
    }
    return Pushout{q.obj, from_y, from_z};
}

bool check_exact(const ShortExactSequence& s) {
    if (s.i.rows() != s.p.cols() || s.i.field() != s.p.field()) return false;
    if (!(s.p * s.i).is_zero()) return false;
    if (s.i.rank() != s.i.cols()) return false;      // monic
    if (s.p.rank() != s.p.rows()) return false;      // epic
    // im(i) = ker(p): with p*i = 0 the image sits inside the kernel, so
    // dimensions decide.
    return s.i.cols() + s.p.rows() == s.i.rows();
}

FieldMatrix splitting_retraction(const ShortExactSequence& s) {
    if (!check_exact(s)) throw domain_error("sequence is not exact");
    return retraction_of_monic(s.i);
}

}  // namespace tate
