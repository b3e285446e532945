#include "tate/matrix.hpp"

#include <sstream>

namespace tate {

FieldMatrix::FieldMatrix(const FieldInfo* f, int rows, int cols)
    : f_(f), rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, f->zero()) {
    if (rows < 0 || cols < 0) throw domain_error("negative matrix dimension");
}

FieldMatrix::FieldMatrix(const FieldInfo* f, int rows, int cols, std::vector<Scalar> entries)
    : f_(f), rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != static_cast<size_t>(rows) * cols) throw domain_error("entry count does not match shape");
    for (const auto& s : e_)
        if (s.field() != f_) throw field_mismatch("matrix entry field mismatch");
}

FieldMatrix FieldMatrix::identity(const FieldInfo* f, int n) {
    FieldMatrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = f->one();
    return m;
}

FieldMatrix FieldMatrix::transpose() const {
    FieldMatrix r(f_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

FieldMatrix FieldMatrix::col(int c) const { return cols_slice(c, 1); }

FieldMatrix FieldMatrix::cols_slice(int from, int count) const {
    if (from < 0 || from + count > cols_) throw domain_error("column slice out of range");
    FieldMatrix r(f_, rows_, count);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < count; ++j) r.at(i, j) = at(i, from + j);
    return r;
}

FieldMatrix FieldMatrix::hstack(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.rows_ != b.rows_ || a.f_ != b.f_) throw domain_error("hstack shape mismatch");
    FieldMatrix r(a.f_, a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
    }
    return r;
}

FieldMatrix FieldMatrix::vstack(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.cols_ != b.cols_ || a.f_ != b.f_) throw domain_error("vstack shape mismatch");
    FieldMatrix r(a.f_, a.rows_ + b.rows_, a.cols_);
    for (int j = 0; j < a.cols_; ++j) {
        for (int i = 0; i < a.rows_; ++i) r.at(i, j) = a.at(i, j);
        for (int i = 0; i < b.rows_; ++i) r.at(a.rows_ + i, j) = b.at(i, j);
    }
    return r;
}

FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.f_ != b.f_) throw domain_error("matrix addition shape mismatch");
    FieldMatrix r = a;
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
    return r;
}

FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b) { return a + (-b); }

FieldMatrix FieldMatrix::operator-() const {
    FieldMatrix r = *this;
    for (auto& s : r.e_) s = -s;
    return r;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.cols_ != b.rows_ || a.f_ != b.f_) throw domain_error("matrix product shape mismatch");
    FieldMatrix r(a.f_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b.at(k, j);
                if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

FieldMatrix FieldMatrix::operator*(const Scalar& s) const {
    FieldMatrix r = *this;
    for (auto& x : r.e_) x *= s;
    return r;
}

bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.f_ == b.f_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

bool FieldMatrix::is_zero() const {
    for (const auto& s : e_)
        if (!s.is_zero()) return false;
    return true;
}

FieldMatrix FieldMatrix::rref(std::vector<int>* pivots) const {
    FieldMatrix m = *this;
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int sel = -1;
        for (int i = r; i < rows_; ++i)
            if (!m.at(i, c).is_zero()) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(r, j));
        Scalar inv = m.at(r, c).inverse();
        for (int j = c; j < cols_; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == r) continue;
            Scalar factor = m.at(i, c);
            if (factor.is_zero()) continue;
            for (int j = c; j < cols_; ++j) m.at(i, j) -= factor * m.at(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    if (pivots) *pivots = piv;
    return m;
}

int FieldMatrix::rank() const {
    std::vector<int> piv;
    rref(&piv);
    return static_cast<int>(piv.size());
}

FieldMatrix FieldMatrix::kernel_basis() const {
    std::vector<int> piv;
    FieldMatrix r = rref(&piv);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : piv) is_pivot[c] = true;
    int nfree = cols_ - static_cast<int>(piv.size());
    FieldMatrix k(f_, cols_, nfree);
    int out = 0;
    for (int c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        k.at(c, out) = f_->one();
        for (size_t pr = 0; pr < piv.size(); ++pr) k.at(piv[pr], out) = -r.at(static_cast<int>(pr), c);
        ++out;
    }
    return k;
}

FieldMatrix FieldMatrix::column_space_basis(std::vector<int>* chosen) const {
    std::vector<int> piv;
    rref(&piv);
    if (chosen) *chosen = piv;
    FieldMatrix b(f_, rows_, static_cast<int>(piv.size()));
    for (size_t j = 0; j < piv.size(); ++j)
        for (int i = 0; i < rows_; ++i) b.at(i, static_cast<int>(j)) = at(i, piv[j]);
    return b;
}

std::optional<FieldMatrix> FieldMatrix::solve(const FieldMatrix& b) const {
    if (b.rows_ != rows_ || b.f_ != f_) throw domain_error("solve shape mismatch");
    FieldMatrix aug = hstack(*this, b);
    std::vector<int> piv;
    FieldMatrix r = aug.rref(&piv);
    // Any pivot inside the b block means inconsistency.
    for (int c : piv)
        if (c >= cols_) return std::nullopt;
    FieldMatrix x(f_, cols_, b.cols_);
    for (size_t pr = 0; pr < piv.size(); ++pr)
        for (int j = 0; j < b.cols_; ++j) x.at(piv[pr], j) = r.at(static_cast<int>(pr), cols_ + j);
    return x;
}

FieldMatrix FieldMatrix::inverse() const {
    if (rows_ != cols_) throw domain_error("inverse of a non-square matrix");
    auto x = solve(identity(f_, rows_));
    if (!x || rank() != rows_) throw singular_error("matrix not invertible");
    return *x;
}

FieldMatrix FieldMatrix::mapped(const FieldInfo* target) const {
    FieldMatrix r(target, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].embed(target);
    return r;
}

std::string FieldMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
    }
    os << "]";
    return os.str();
}

std::vector<int> complement_coords(const FieldMatrix& m, FieldMatrix* full_out) {
    const FieldInfo* f = m.field();
    FieldMatrix acc = m;
    std::vector<int> chosen;
    int need = m.rows() - m.rank();
    for (int i = 0; i < m.rows() && static_cast<int>(chosen.size()) < need; ++i) {
        FieldMatrix e(f, m.rows(), 1);
        e.at(i, 0) = f->one();
        FieldMatrix cand = FieldMatrix::hstack(acc, e);
        if (cand.rank() > acc.rank()) {
            acc = cand;
            chosen.push_back(i);
        }
    }
    if (full_out) *full_out = acc;
    return chosen;
}

FieldMatrix retraction_of_monic(const FieldMatrix& monic) {
    if (monic.rank() != monic.cols()) throw domain_error("retraction requires an injective map");
    FieldMatrix full(monic.field(), 0, 0);
    complement_coords(monic, &full);
    FieldMatrix inv = full.inverse();
    // Top block of the inverse: coordinates along the image.
    FieldMatrix r(monic.field(), monic.cols(), monic.rows());
    for (int i = 0; i < monic.cols(); ++i)
        for (int j = 0; j < monic.rows(); ++j) r.at(i, j) = inv.at(i, j);
    return r;
}

}  // namespace tate
