#include "tate/laurent_matrix.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace tate {

LaurentMatrix::LaurentMatrix(const FieldInfo* f, int rows, int cols, long prec)
    : f_(f), rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, LaurentSeries::zero(f, prec)) {
    if (rows < 0 || cols < 0) throw domain_error("negative matrix dimension");
}

LaurentMatrix::LaurentMatrix(int rows, int cols, std::vector<LaurentSeries> entries)
    : f_(entries.empty() ? nullptr : entries[0].field()), rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != static_cast<size_t>(rows) * cols) throw domain_error("entry count does not match shape");
    if (e_.empty()) throw domain_error("empty matrices need the field constructor");
    for (const auto& s : e_)
        if (s.field() != f_) throw field_mismatch("matrix entry field mismatch");
}

LaurentMatrix LaurentMatrix::identity(const FieldInfo* f, int n, long prec) {
    return monomial_diag(f, std::vector<long>(n, 0), prec);
}

LaurentMatrix LaurentMatrix::monomial_diag(const FieldInfo* f, const std::vector<long>& exps, long prec) {
    LaurentMatrix m(f, static_cast<int>(exps.size()), static_cast<int>(exps.size()), prec);
    for (size_t i = 0; i < exps.size(); ++i)
        m.at(static_cast<int>(i), static_cast<int>(i)) = LaurentSeries::monomial(f, exps[i], prec + exps[i]);
    return m;
}

long LaurentMatrix::prec() const {
    long p = std::numeric_limits<long>::max();
    for (const auto& s : e_) p = std::min(p, s.prec());
    return e_.empty() ? 0 : p;
}

LaurentMatrix LaurentMatrix::transpose() const {
    LaurentMatrix r(f_, cols_, rows_, 1);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

LaurentMatrix LaurentMatrix::col(int c) const {
    if (c < 0 || c >= cols_) throw domain_error("column index out of range");
    LaurentMatrix r(f_, rows_, 1, 1);
    for (int i = 0; i < rows_; ++i) r.at(i, 0) = at(i, c);
    return r;
}

LaurentMatrix LaurentMatrix::hstack(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.rows_ != b.rows_ || a.f_ != b.f_) throw domain_error("hstack shape mismatch");
    LaurentMatrix r(a.f_, a.rows_, a.cols_ + b.cols_, 1);
    for (int i = 0; i < a.rows_; ++i) {
        for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
    }
    return r;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.cols_ != b.rows_ || a.f_ != b.f_) throw domain_error("matrix product shape mismatch");
    long pa = a.prec(), pb = b.prec();
    LaurentMatrix r(a.f_, a.rows_, b.cols_, std::min(pa, pb));
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) {
            LaurentSeries acc = a.at(i, 0) * b.at(0, j);
            for (int k = 1; k < a.cols_; ++k) acc = acc + a.at(i, k) * b.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.f_ != b.f_) throw domain_error("matrix sum shape mismatch");
    LaurentMatrix r = a;
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] + b.e_[i];
    return r;
}

LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) {
    LaurentMatrix nb = b;
    for (auto& s : nb.e_) s = -s;
    return a + nb;
}

LaurentMatrix LaurentMatrix::scaled(const LaurentSeries& s) const {
    LaurentMatrix r = *this;
    for (auto& x : r.e_) x = x * s;
    return r;
}

LaurentMatrix LaurentMatrix::shifted(long k) const {
    LaurentMatrix r = *this;
    for (auto& x : r.e_) x = x.shifted(k);
    return r;
}

std::optional<long> LaurentMatrix::min_entry_val() const {
    std::optional<long> best;
    for (const auto& s : e_) {
        auto v = s.val();
        if (v && (!best || *v < *best)) best = v;
    }
    return best;
}

bool LaurentMatrix::is_zero_at_prec() const {
    for (const auto& s : e_)
        if (!s.is_zero_at_prec()) return false;
    return true;
}

bool LaurentMatrix::same_digits(const LaurentMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_ || f_ != other.f_) return false;
    for (size_t i = 0; i < e_.size(); ++i) {
        if (e_[i].is_zero_at_prec() != other.e_[i].is_zero_at_prec()) return false;
        if (!e_[i].is_zero_at_prec() &&
            (e_[i].v() != other.e_[i].v() || e_[i].coeffs() != other.e_[i].coeffs()))
            return false;
    }
    return true;
}

LaurentMatrix LaurentMatrix::mapped(const FieldInfo* target) const {
    LaurentMatrix r(target, rows_, cols_, 1);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].mapped(target);
    return r;
}

std::string LaurentMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).str();
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

// Pivot search over the listed rows and columns.  Returns (row, col, val);
// throws precision_error if some entry that vanishes at its precision could
// still hide a smaller valuation, and reports no pivot when everything in
// range vanishes at precision.
struct PivotScan {
    bool found = false;
    int row = -1, col = -1;
    long val = 0;
};

PivotScan scan_pivot(const std::vector<LaurentSeries>& cols_data, int rows,
                     const std::vector<int>& live_cols, const std::vector<bool>& row_used) {
    PivotScan best;
    for (int c : live_cols) {
        for (int r = 0; r < rows; ++r) {
            if (row_used[r]) continue;
            const LaurentSeries& s = cols_data[static_cast<size_t>(c) * rows + r];
            auto v = s.val();
            if (!v) continue;
            if (!best.found || *v < best.val || (*v == best.val && r < best.row)) {
                best.found = true;
                best.row = r;
                best.col = c;
                best.val = *v;
            }
        }
    }
    if (best.found) {
        // Certify: nothing unseen may undercut the chosen valuation.
        for (int c : live_cols)
            for (int r = 0; r < rows; ++r) {
                if (row_used[r]) continue;
                const LaurentSeries& s = cols_data[static_cast<size_t>(c) * rows + r];
                if (s.is_zero_at_prec() && s.prec() <= best.val)
                    throw precision_error("pivot valuation not certifiable at working precision");
            }
    }
    return best;
}

}  // namespace

HermiteResult dvr_hermite_reduce(const LaurentMatrix& m, bool expect_full_rank) {
    const FieldInfo* f = m.field();
    const int n = m.rows(), mc = m.cols();

    // Column-major working copy.
    std::vector<LaurentSeries> w;
    w.reserve(static_cast<size_t>(n) * mc);
    for (int c = 0; c < mc; ++c)
        for (int r = 0; r < n; ++r) w.push_back(m.at(r, c));
    auto entry = [&](int c, int r) -> LaurentSeries& { return w[static_cast<size_t>(c) * n + r]; };

    std::vector<int> live;
    for (int c = 0; c < mc; ++c) live.push_back(c);
    std::vector<bool> row_used(n, false);

    struct Fixed { int row; long exp; int col; };
    std::vector<Fixed> fixed;

    while (static_cast<int>(fixed.size()) < n && !live.empty()) {
        PivotScan p = scan_pivot(w, n, live, row_used);
        if (!p.found) break;

        // Normalize the pivot column so the pivot entry is exactly t^a.
        LaurentSeries unit = entry(p.col, p.row).shifted(-p.val);  // unit part
        LaurentSeries unit_inv = unit.inverse();
        for (int r = 0; r < n; ++r) entry(p.col, r) = entry(p.col, r) * unit_inv;
        entry(p.col, p.row) = LaurentSeries::monomial(f, p.val, entry(p.col, p.row).prec());

        // Clear the pivot row in the other live columns; their entries there
        // have valuation >= a by minimality.
        for (int c : live) {
            if (c == p.col) continue;
            const LaurentSeries& e = entry(c, p.row);
            if (e.is_zero_at_prec()) continue;
            LaurentSeries q = e.shifted(-p.val);  // in k[[t]]
            for (int r = 0; r < n; ++r) entry(c, r) = entry(c, r) - q * entry(p.col, r);
        }

        row_used[p.row] = true;
        fixed.push_back({p.row, p.val, p.col});
        live.erase(std::find(live.begin(), live.end(), p.col));
    }

    if (expect_full_rank && static_cast<int>(fixed.size()) < n)
        throw singular_error("column module does not have full rank at the working precision");

    // Surplus columns must have reduced to zero at precision.
    for (int c : live)
        for (int r = 0; r < n; ++r)
            if (!entry(c, r).is_zero_at_prec())
                throw singular_error("generating column escapes the pivot span");

    const int k = static_cast<int>(fixed.size());

    // Final reduction sweep, in pivot order: entries of the other columns in
    // pivot row r keep only terms below the pivot exponent.
    for (int j = 0; j < k; ++j) {
        for (int j2 = 0; j2 < k; ++j2) {
            if (j2 == j) continue;
            const LaurentSeries& e = entry(fixed[j2].col, fixed[j].row);
            if (e.is_zero_at_prec()) continue;
            LaurentSeries q = e.integral_above(fixed[j].exp);
            if (q.is_zero_at_prec()) continue;
            for (int r = 0; r < n; ++r)
                entry(fixed[j2].col, r) = entry(fixed[j2].col, r) - q * entry(fixed[j].col, r);
        }
    }

    // Soundness of the canonical claim: each entry in pivot row r is reduced
    // modulo t^{a_r}, which needs the digits through a_r - 1.
    for (int j = 0; j < k; ++j)
        for (int j2 = 0; j2 < k; ++j2)
            if (entry(fixed[j2].col, fixed[j].row).prec() < fixed[j].exp)
                throw precision_error("canonical form digits exceed the working precision");

    HermiteResult res{LaurentMatrix(f, n, k, std::max(m.prec(), 1L)), {}, {}};
    for (int j = 0; j < k; ++j) {
        res.pivots.push_back(fixed[j].exp);
        res.pivot_rows.push_back(fixed[j].row);
        for (int r = 0; r < n; ++r) res.basis.at(r, j) = entry(fixed[j].col, r);
        // Cleared positions are exact zeros of the module, not just
        // zero-at-precision artifacts.
        for (int j2 = 0; j2 < j; ++j2) res.basis.at(fixed[j2].row, j) = LaurentSeries::zero(f, entry(fixed[j].col, fixed[j2].row).prec());
    }
    return res;
}

long det_val(const LaurentMatrix& m) {
    if (m.rows() != m.cols()) throw domain_error("det_val needs a square matrix");
    HermiteResult h = dvr_hermite_reduce(m);
    long s = 0;
    for (long e : h.pivots) s += e;
    return s;
}

bool in_dvr_span(const LaurentMatrix& m, const LaurentMatrix& x) {
    if (x.cols() != 1 || x.rows() != m.rows()) throw domain_error("span test needs a column vector");
    HermiteResult h = dvr_hermite_reduce(m);
    if (static_cast<int>(h.pivots.size()) < m.rows())
        throw singular_error("span test requires a full-rank module");
    LaurentMatrix rem = x;
    for (size_t j = 0; j < h.pivots.size(); ++j) {
        const LaurentSeries& e = rem.at(h.pivot_rows[j], 0);
        if (e.is_zero_at_prec()) {
            if (e.prec() <= h.pivots[j])
                throw precision_error("membership undecidable at working precision");
            continue;
        }
        if (*e.val() < h.pivots[j]) return false;
        LaurentSeries q = e.shifted(-h.pivots[j]);
        for (int r = 0; r < m.rows(); ++r) rem.at(r, 0) = rem.at(r, 0) - q * h.basis.at(r, static_cast<int>(j));
    }
    return rem.is_zero_at_prec();
}

LaurentMatrix LaurentMatrix::inverse() const {
    if (rows_ != cols_) throw domain_error("inverse of a non-square matrix");
    const int n = rows_;
    LaurentMatrix aug = hstack(*this, identity(f_, n, prec()));
    // Elimination over the Laurent field with minimal-valuation pivoting.
    for (int c = 0; c < n; ++c) {
        int sel = -1;
        long best = 0;
        for (int r = c; r < n; ++r) {
            auto v = aug.at(r, c).val();
            if (v && (sel < 0 || *v < best)) { sel = r; best = *v; }
        }
        if (sel < 0) throw singular_error("matrix not invertible at working precision");
        for (int r = c; r < n; ++r)
            if (aug.at(r, c).is_zero_at_prec() && aug.at(r, c).prec() <= best)
                throw precision_error("inversion pivot not certifiable at working precision");
        if (sel != c)
            for (int j = 0; j < 2 * n; ++j) std::swap(aug.at(sel, j), aug.at(c, j));
        LaurentSeries inv = aug.at(c, c).inverse();
        for (int j = 0; j < 2 * n; ++j) aug.at(c, j) = aug.at(c, j) * inv;
        for (int r = 0; r < n; ++r) {
            if (r == c) continue;
            LaurentSeries factor = aug.at(r, c);
            if (factor.is_zero_at_prec()) continue;
            for (int j = 0; j < 2 * n; ++j) aug.at(r, j) = aug.at(r, j) - factor * aug.at(c, j);
        }
    }
    LaurentMatrix out(f_, n, n, 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
    return out;
}

std::vector<long> dvr_smith_exponents(const LaurentMatrix& c0) {
    if (c0.rows() != c0.cols()) throw domain_error("smith exponents need a square matrix");
    const int n = c0.rows();
    LaurentMatrix w = c0;
    // Integrality check.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const LaurentSeries& e = w.at(i, j);
            if (e.is_zero_at_prec()) {
                if (e.prec() <= 0) throw precision_error("integrality undecidable at working precision");
            } else if (*e.val() < 0) {
                throw domain_error("matrix is not integral over k[[t]]");
            }
        }

    std::vector<long> exps;
    std::vector<bool> row_done(n, false), col_done(n, false);
    for (int step = 0; step < n; ++step) {
        int pr = -1, pc = -1;
        long best = 0;
        for (int i = 0; i < n; ++i) {
            if (row_done[i]) continue;
            for (int j = 0; j < n; ++j) {
                if (col_done[j]) continue;
                auto v = w.at(i, j).val();
                if (v && (pr < 0 || *v < best)) { pr = i; pc = j; best = *v; }
            }
        }
        if (pr < 0) throw singular_error("matrix singular at working precision");
        for (int i = 0; i < n; ++i) {
            if (row_done[i]) continue;
            for (int j = 0; j < n; ++j) {
                if (col_done[j]) continue;
                const LaurentSeries& e = w.at(i, j);
                if (e.is_zero_at_prec() && e.prec() <= best)
                    throw precision_error("smith pivot not certifiable at working precision");
            }
        }
        // Normalize the pivot column, then clear the pivot row and column.
        LaurentSeries unit_inv = w.at(pr, pc).shifted(-best).inverse();
        for (int i = 0; i < n; ++i)
            if (!row_done[i]) w.at(i, pc) = w.at(i, pc) * unit_inv;
        w.at(pr, pc) = LaurentSeries::monomial(w.field(), best, w.at(pr, pc).prec());
        for (int j = 0; j < n; ++j) {
            if (col_done[j] || j == pc) continue;
            const LaurentSeries& e = w.at(pr, j);
            if (e.is_zero_at_prec()) continue;
            LaurentSeries q = e.shifted(-best);
            for (int i = 0; i < n; ++i)
                if (!row_done[i]) w.at(i, j) = w.at(i, j) - q * w.at(i, pc);
        }
        for (int i = 0; i < n; ++i) {
            if (row_done[i] || i == pr) continue;
            const LaurentSeries& e = w.at(i, pc);
            if (e.is_zero_at_prec()) continue;
            LaurentSeries q = e.shifted(-best);
            for (int j = 0; j < n; ++j)
                if (!col_done[j]) w.at(i, j) = w.at(i, j) - q * w.at(pr, j);
        }
        row_done[pr] = true;
        col_done[pc] = true;
        exps.push_back(best);
    }
    std::sort(exps.begin(), exps.end());
    return exps;
}

}  // namespace tate
