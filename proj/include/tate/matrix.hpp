#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tate/field.hpp"

namespace tate {

// Dense exact matrix over a field.  A morphism k^cols -> k^rows acting on
// column vectors.
class FieldMatrix {
  public:
    FieldMatrix(const FieldInfo* f, int rows, int cols);
    FieldMatrix(const FieldInfo* f, int rows, int cols, std::vector<Scalar> entries);
    static FieldMatrix identity(const FieldInfo* f, int n);

    const FieldInfo* field() const { return f_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    FieldMatrix transpose() const;
    FieldMatrix col(int c) const;
    FieldMatrix cols_slice(int from, int count) const;
    static FieldMatrix hstack(const FieldMatrix& a, const FieldMatrix& b);
    static FieldMatrix vstack(const FieldMatrix& a, const FieldMatrix& b);

    friend FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b);
    friend FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b);
    friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
    FieldMatrix operator*(const Scalar& s) const;
    FieldMatrix operator-() const;
    friend bool operator==(const FieldMatrix& a, const FieldMatrix& b);
    friend bool operator!=(const FieldMatrix& a, const FieldMatrix& b) { return !(a == b); }

    bool is_zero() const;
    int rank() const;

    // Reduced row echelon form; pivot column indices out.
    FieldMatrix rref(std::vector<int>* pivots = nullptr) const;

    // Canonical basis of the null space (one column per free variable, in
    // column order, each with a -1-normalized free slot made +1).
    FieldMatrix kernel_basis() const;

    // Subset of this matrix's columns forming a basis of the column space
    // (first independent columns).
    FieldMatrix column_space_basis(std::vector<int>* chosen = nullptr) const;

    // One solution of this * x = b, if any.
    std::optional<FieldMatrix> solve(const FieldMatrix& b) const;

    FieldMatrix inverse() const;

    FieldMatrix mapped(const FieldInfo* target) const;

    std::string str() const;

  private:
    const FieldInfo* f_;
    int rows_, cols_;
    std::vector<Scalar> e_;
};

// Greedy completion of the columns of m to a basis of k^rows using standard
// basis vectors (first independent wins).  Returns the indices of the chosen
// standard vectors and, via out, the invertible [m | complement] matrix.
std::vector<int> complement_coords(const FieldMatrix& m, FieldMatrix* full_out = nullptr);

// Retraction r with r * monic = identity, built over the complement above.
FieldMatrix retraction_of_monic(const FieldMatrix& monic);

}  // namespace tate
