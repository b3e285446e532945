#pragma once

#include <string>
#include <vector>

#include "tate/laurent.hpp"

namespace tate {

// Matrix of truncated Laurent series over a common field; the common
// precision floor of the entries bounds what any reduction may claim.
class LaurentMatrix {
  public:
    LaurentMatrix(const FieldInfo* f, int rows, int cols, long prec);
    LaurentMatrix(int rows, int cols, std::vector<LaurentSeries> entries);
    static LaurentMatrix identity(const FieldInfo* f, int n, long prec);
    // diag(t^{k_0}, ..., t^{k_{n-1}})
    static LaurentMatrix monomial_diag(const FieldInfo* f, const std::vector<long>& exps, long prec);

    const FieldInfo* field() const { return f_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long prec() const;  // min over entries

    LaurentSeries& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const LaurentSeries& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    LaurentMatrix transpose() const;
    LaurentMatrix col(int c) const;
    static LaurentMatrix hstack(const LaurentMatrix& a, const LaurentMatrix& b);

    friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
    friend LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b);
    friend LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b);
    LaurentMatrix scaled(const LaurentSeries& s) const;
    LaurentMatrix shifted(long k) const;  // multiply every entry by t^k

    // Inverse over the Laurent series field, with tracked precision.
    LaurentMatrix inverse() const;

    // Smallest entry valuation, or nullopt when all entries vanish at
    // precision.
    std::optional<long> min_entry_val() const;

    // True when every entry is zero at its precision.
    bool is_zero_at_prec() const;

    // Digit-level equality ignoring the precision tags (entries must agree
    // as stored coefficient data).
    bool same_digits(const LaurentMatrix& other) const;

    LaurentMatrix mapped(const FieldInfo* target) const;

    std::string str() const;

  private:
    const FieldInfo* f_;
    int rows_, cols_;
    std::vector<LaurentSeries> e_;
};

struct HermiteResult {
    LaurentMatrix basis;        // one column per pivot, canonical
    std::vector<long> pivots;   // exponents, nondecreasing
    std::vector<int> pivot_rows;  // pivot_rows[k] carries t^{pivots[k]} in column k
};

// Canonical column reduction of the k[[t]]-module spanned by the columns.
//
// Pivots are found greedily: each step takes the minimal-valuation entry of
// the module restricted to the rows not yet used (ties by lowest row index),
// normalizes that column so the pivot is the pure power t^a, and clears the
// pivot row from the columns still in play.  A final sweep reduces every
// other column modulo t^a at each pivot row, so entries in a pivot row keep
// only terms below the pivot exponent.  The output depends only on the
// column span, which makes equality of canonical bases equality of modules.
//
// Throws precision_error when a pivot cannot be certified minimal at the
// working precision, singular_error when expect_full_rank is set and fewer
// than rows() pivots exist.
HermiteResult dvr_hermite_reduce(const LaurentMatrix& m, bool expect_full_rank = true);

// Valuation of det(M) = sum of Hermite pivot exponents.
long det_val(const LaurentMatrix& m);

// Membership of the column vector x in the k[[t]]-span of M's columns,
// decided at the working precision.
bool in_dvr_span(const LaurentMatrix& m, const LaurentMatrix& x);

// Elementary exponents of coker(C) = k[[t]]^n / C k[[t]]^n for an integral
// nonsingular C, ascending.  (Smith form over the DVR.)
std::vector<long> dvr_smith_exponents(const LaurentMatrix& c);

}  // namespace tate
