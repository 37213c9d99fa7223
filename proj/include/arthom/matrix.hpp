// Dense exact matrices over a coefficient field, with deterministic
// Gauss-Jordan elimination: pivots are chosen as the first nonzero entry
// scanning columns left to right, rows top to bottom, so identical inputs
// give bit-identical echelon forms across runs.

#pragma once

#include <optional>
#include <sstream>
#include <vector>

#include "arthom/field.hpp"

namespace arthom {

template <class F>
class Mat {
public:
    using Elem = typename F::Elem;

    Mat() : f_(), r_(0), c_(0) {}
    Mat(F f, int rows, int cols)
        : f_(f), r_(rows), c_(cols), e_(static_cast<size_t>(rows) * cols, f.zero())
    {
    }

    static Mat zero(F f, int rows, int cols) { return Mat(f, rows, cols); }
    static Mat identity(F f, int n)
    {
        Mat m(f, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    const F& field() const { return f_; }

    Elem& at(int i, int j) { return e_[static_cast<size_t>(i) * c_ + j]; }
    const Elem& at(int i, int j) const { return e_[static_cast<size_t>(i) * c_ + j]; }

    bool is_zero() const
    {
        for (const auto& x : e_)
            if (!f_.is_zero(x)) return false;
        return true;
    }

    bool operator==(const Mat& o) const
    {
        if (r_ != o.r_ || c_ != o.c_ || !(f_ == o.f_)) return false;
        for (size_t i = 0; i < e_.size(); ++i)
            if (!f_.eq(e_[i], o.e_[i])) return false;
        return true;
    }

    Mat operator+(const Mat& o) const
    {
        check_same_shape(o);
        Mat m(f_, r_, c_);
        for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = f_.add(e_[i], o.e_[i]);
        return m;
    }
    Mat operator-(const Mat& o) const
    {
        check_same_shape(o);
        Mat m(f_, r_, c_);
        for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = f_.sub(e_[i], o.e_[i]);
        return m;
    }
    Mat operator-() const
    {
        Mat m(f_, r_, c_);
        for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = f_.neg(e_[i]);
        return m;
    }
    Mat operator*(const Mat& o) const
    {
        if (c_ != o.r_) throw error("matrix product shape mismatch");
        Mat m(f_, r_, o.c_);
        for (int i = 0; i < r_; ++i)
            for (int k = 0; k < c_; ++k) {
                const Elem& a = at(i, k);
                if (f_.is_zero(a)) continue;
                for (int j = 0; j < o.c_; ++j)
                    m.at(i, j) = f_.add(m.at(i, j), f_.mul(a, o.at(k, j)));
            }
        return m;
    }
    Mat scaled(const Elem& s) const
    {
        Mat m(f_, r_, c_);
        for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = f_.mul(e_[i], s);
        return m;
    }

    Mat transpose() const
    {
        Mat m(f_, c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    /// In-place reduced row echelon form; returns pivot columns.
    std::vector<int> rref()
    {
        std::vector<int> pivots;
        int row = 0;
        for (int col = 0; col < c_ && row < r_; ++col) {
            int pr = -1;
            for (int i = row; i < r_; ++i)
                if (!f_.is_zero(at(i, col))) {
                    pr = i;
                    break;
                }
            if (pr < 0) continue;
            if (pr != row)
                for (int j = 0; j < c_; ++j) std::swap(at(pr, j), at(row, j));
            Elem s = f_.inv(at(row, col));
            for (int j = col; j < c_; ++j) at(row, j) = f_.mul(at(row, j), s);
            for (int i = 0; i < r_; ++i) {
                if (i == row || f_.is_zero(at(i, col))) continue;
                Elem factor = at(i, col);
                for (int j = col; j < c_; ++j)
                    at(i, j) = f_.sub(at(i, j), f_.mul(factor, at(row, j)));
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    int rank() const
    {
        Mat m = *this;
        return static_cast<int>(m.rref().size());
    }

    /// Basis of the right null space as columns, cols() - rank() of them,
    /// in the canonical form induced by the RREF (free variable = 1,
    /// pivot variables filled in, ordered by free column index).
    Mat kernel_basis() const
    {
        Mat m = *this;
        std::vector<int> pivots = m.rref();
        std::vector<bool> is_pivot(c_, false);
        for (int p : pivots) is_pivot[p] = true;
        int k = c_ - static_cast<int>(pivots.size());
        Mat basis(f_, c_, k);
        int out = 0;
        for (int col = 0; col < c_; ++col) {
            if (is_pivot[col]) continue;
            basis.at(col, out) = f_.one();
            for (size_t pi = 0; pi < pivots.size(); ++pi)
                basis.at(pivots[pi], out) = f_.neg(m.at(static_cast<int>(pi), col));
            ++out;
        }
        return basis;
    }

    /// Some solution x of (*this) * x = b, or nullopt when inconsistent.
    /// Deterministic: free variables are set to zero after RREF.
    std::optional<Mat> solve(const Mat& b) const
    {
        if (b.r_ != r_) throw error("solve: right-hand side has wrong number of rows");
        if (!(b.f_ == f_)) throw error("solve: field mismatch");
        Mat aug(f_, r_, c_ + b.c_);
        for (int i = 0; i < r_; ++i) {
            for (int j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
            for (int j = 0; j < b.c_; ++j) aug.at(i, c_ + j) = b.at(i, j);
        }
        std::vector<int> pivots = aug.rref();
        for (int p : pivots)
            if (p >= c_) return std::nullopt;
        Mat x(f_, c_, b.c_);
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            for (int j = 0; j < b.c_; ++j)
                x.at(pivots[pi], j) = aug.at(static_cast<int>(pi), c_ + j);
        return x;
    }

    /// Basis of the column space, in reduced column echelon form.
    Mat col_space_basis() const
    {
        Mat t = transpose();
        std::vector<int> piv = t.rref();
        Mat basis(f_, r_, static_cast<int>(piv.size()));
        for (size_t i = 0; i < piv.size(); ++i)
            for (int j = 0; j < r_; ++j) basis.at(j, static_cast<int>(i)) = t.at(static_cast<int>(i), j);
        return basis;
    }

    std::optional<Mat> inverse() const
    {
        if (r_ != c_) return std::nullopt;
        auto x = solve(identity(f_, r_));
        return x;
    }
    bool is_invertible() const { return r_ == c_ && rank() == r_; }

    Mat submatrix(int row0, int col0, int nrows, int ncols) const
    {
        Mat m(f_, nrows, ncols);
        for (int i = 0; i < nrows; ++i)
            for (int j = 0; j < ncols; ++j) m.at(i, j) = at(row0 + i, col0 + j);
        return m;
    }

    std::string to_string() const
    {
        std::ostringstream os;
        os << "[";
        for (int i = 0; i < r_; ++i) {
            os << "[";
            for (int j = 0; j < c_; ++j) {
                if (j) os << ",";
                os << f_.to_string(at(i, j));
            }
            os << "]";
            if (i + 1 < r_) os << ",";
        }
        os << "]";
        return os.str();
    }

private:
    void check_same_shape(const Mat& o) const
    {
        if (r_ != o.r_ || c_ != o.c_) throw error("matrix shape mismatch");
    }

    F f_;
    int r_, c_;
    std::vector<Elem> e_;
};

template <class F>
Mat<F> hstack(const Mat<F>& a, const Mat<F>& b)
{
    if (a.rows() != b.rows()) throw error("hstack: row mismatch");
    Mat<F> m(a.field(), a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
    }
    return m;
}

template <class F>
Mat<F> vstack(const Mat<F>& a, const Mat<F>& b)
{
    if (a.cols() != b.cols()) throw error("vstack: column mismatch");
    Mat<F> m(a.field(), a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
    return m;
}

/// Quotient of k^dim by the column span of `basis` (which must be in
/// reduced column echelon form): a projection Q with Q * basis = 0 and a
/// section with Q * section = id on the quotient.
template <class F>
struct QuotientMaps {
    Mat<F> projection;
    Mat<F> section;
};

template <class F>
QuotientMaps<F> quotient_maps(const Mat<F>& basis)
{
    const F& f = basis.field();
    int d = basis.rows(), s = basis.cols();
    std::vector<int> pivot_row(s, -1);
    std::vector<bool> is_pivot(d, false);
    for (int j = 0; j < s; ++j) {
        for (int i = 0; i < d; ++i)
            if (!f.is_zero(basis.at(i, j))) {
                pivot_row[j] = i;
                break;
            }
        if (pivot_row[j] < 0) throw error("quotient_maps: zero basis column");
        is_pivot[pivot_row[j]] = true;
    }
    int q = d - s;
    Mat<F> proj(f, q, d), sec(f, d, q);
    int out = 0;
    for (int i = 0; i < d; ++i) {
        if (is_pivot[i]) continue;
        proj.at(out, i) = f.one();
        // subtract the basis contribution read off at pivot rows
        for (int j = 0; j < s; ++j)
            proj.at(out, pivot_row[j]) = f.neg(basis.at(i, j));
        sec.at(i, out) = f.one();
        ++out;
    }
    return {proj, sec};
}

}  // namespace arthom
