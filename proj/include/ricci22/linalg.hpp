#pragma once

#include <cassert>
#include <vector>

#include "scalar.hpp"
#include "poly.hpp"

namespace ricci22 {

// Dense matrix over an exact or float field element type F. F must provide
// +, -, *, /, unary -, is_zero() and a default constructor yielding zero.
template <class F>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), d_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    F& operator()(int r, int c) { return d_[static_cast<std::size_t>(r) * cols_ + c]; }
    const F& operator()(int r, int c) const { return d_[static_cast<std::size_t>(r) * cols_ + c]; }

    static Mat identity(int n, const F& one) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        Mat r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.d_.size(); ++i) r.d_[i] = a.d_[i] + b.d_[i];
        return r;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        Mat r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.d_.size(); ++i) r.d_[i] = a.d_[i] - b.d_[i];
        return r;
    }
    friend Mat operator*(const Mat& a, const Mat& b) {
        assert(a.cols_ == b.rows_);
        Mat r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const F& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }
    friend Mat operator*(const Mat& a, const F& s) {
        Mat r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.d_.size(); ++i) r.d_[i] = a.d_[i] * s;
        return r;
    }
    Mat operator-() const {
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < d_.size(); ++i) r.d_[i] = -d_[i];
        return r;
    }
    friend bool operator==(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t i = 0; i < a.d_.size(); ++i)
            if (!(a.d_[i] == b.d_[i])) return false;
        return true;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<F> apply(const std::vector<F>& v) const {
        assert(static_cast<int>(v.size()) == cols_);
        std::vector<F> r(rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    F trace() const {
        F t{};
        for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

private:
    int rows_, cols_;
    std::vector<F> d_;
};

template <class F>
Mat<F> mat_pow(Mat<F> base, int e, const F& one) {
    Mat<F> r = Mat<F>::identity(base.rows(), one);
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

// Zero decision policies for elimination. Exact fields decide exactly; the
// float policy uses a relative largest-pivot threshold and reports a pivot in
// the ambiguous band (tol, 10*tol) as IllConditioned rather than guessing.
struct ExactZeroPolicy {
    template <class F>
    bool is_zero(const F& x, double) const {
        return x.is_zero();
    }
    bool band_check(double, double) const { return false; }
};

struct FloatZeroPolicy {
    double zero_tol;
    template <class F>
    bool is_zero(const F& x, double scale) const {
        return pivot_size(x) <= zero_tol * (scale > 0 ? scale : 1.0);
    }
    bool band_check(double p, double scale) const {
        double s = scale > 0 ? scale : 1.0;
        return p > zero_tol * s && p < 10.0 * zero_tol * s;
    }
    static double pivot_size(const Scalar& x) { return std::abs(x.to_double()); }
    static double pivot_size(const CScalar& x) {
        return std::abs(x.re.to_double()) + std::abs(x.im.to_double());
    }
};

inline double approx_size(const Scalar& x) { return std::abs(x.to_double()); }
inline double approx_size(const CScalar& x) {
    return std::abs(x.re.to_double()) + std::abs(x.im.to_double());
}
inline double approx_size(const PolyMod&) { return 1.0; }

namespace detail {

// Row echelon reduction in place. Returns pivot column list.
template <class F, class Zero>
std::vector<int> echelon(Mat<F>& m, const Zero& zero, double scale) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int best = -1;
        double best_sz = -1;
        for (int r = row; r < m.rows(); ++r) {
            if (zero.is_zero(m(r, col), scale)) continue;
            double sz = approx_size(m(r, col));
            if (sz > best_sz) {
                best_sz = sz;
                best = r;
            }
        }
        if (best < 0) continue;
        if (zero.band_check(best_sz, scale))
            throw IllConditioned("pivot inside the ambiguous tolerance band");
        if (best != row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(best, c));
        const F piv = m(row, col);
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            F f = m(r, col) / piv;
            for (int c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
            m(r, col) = F{};
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
double matrix_scale(const Mat<F>& m) {
    double s = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) s = std::max(s, approx_size(m(i, j)));
    return s;
}

}  // namespace detail

template <class F, class Zero>
int rank_of(Mat<F> m, const Zero& zero) {
    double scale = detail::matrix_scale(m);
    return static_cast<int>(detail::echelon(m, zero, scale).size());
}

// Rank with a caller-supplied reference scale; used for powers of a nearly
// nilpotent matrix, whose own entries decay below the meaningful level.
template <class F, class Zero>
int rank_scaled(Mat<F> m, const Zero& zero, double scale) {
    return static_cast<int>(detail::echelon(m, zero, scale).size());
}

template <class F>
int rank_exact(const Mat<F>& m) {
    return rank_of(m, ExactZeroPolicy{});
}

// Basis of the right kernel, one vector per non-pivot column.
template <class F, class Zero>
std::vector<std::vector<F>> kernel_basis(Mat<F> m, const F& one, const Zero& zero) {
    double scale = detail::matrix_scale(m);
    std::vector<int> pivots = detail::echelon(m, zero, scale);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(m.cols());
        v[free] = one;
        for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
            // Row pi has pivot at column pivots[pi].
            v[pivots[pi]] = -(m(static_cast<int>(pi), free) / m(static_cast<int>(pi), pivots[pi]));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F, class Zero>
bool invert(Mat<F> m, Mat<F>& out, const F& one, const Zero& zero) {
    int n = m.rows();
    Mat<F> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = one;
    }
    double scale = detail::matrix_scale(m);
    auto pivots = detail::echelon(aug, zero, scale);
    if (static_cast<int>(pivots.size()) != n) return false;
    for (int i = 0; i < n; ++i)
        if (pivots[i] != i) return false;
    out = Mat<F>(n, n);
    for (int i = 0; i < n; ++i) {
        const F piv = aug(i, i);
        for (int j = 0; j < n; ++j) out(i, j) = aug(i, n + j) / piv;
    }
    return true;
}

template <class F>
F det_of(Mat<F> m, const F& one) {
    int n = m.rows();
    F det = one;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!m(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return F{};
        if (piv != col) {
            for (int c = 0; c < n; ++c) std::swap(m(col, c), m(piv, c));
            det = -det;
        }
        det = det * m(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (m(r, col).is_zero()) continue;
            F f = m(r, col) / m(col, col);
            for (int c = col; c < n; ++c) m(r, c) -= f * m(col, c);
        }
    }
    return det;
}

// Monic characteristic polynomial det(t*I - M) by the trace recursion; the
// only divisions are by the integers 1..n.
inline Poly char_poly_exact(const Mat<Scalar>& m) {
    int n = m.rows();
    std::vector<Rat> coeff(n + 1, Rat(0));
    coeff[n] = Rat(1);
    Mat<Scalar> mk = m;
    std::vector<Scalar> cs;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            Mat<Scalar> adj = mk;
            for (int i = 0; i < n; ++i) adj(i, i) -= cs.back();
            mk = m * adj;
        }
        Scalar ck = mk.trace() / Scalar(k);
        cs.push_back(ck);
        if (!ck.is_rational())
            throw NonRationalInput("characteristic polynomial leaves the rationals");
        coeff[n - k] = -ck.rat();
    }
    // det(tI - M) = t^n - c1 t^{n-1} - c2 t^{n-2} - ... - cn  needs sign fix:
    // the recursion above accumulates c_k so that p(t) = t^n - sum c_k t^{n-k}.
    return Poly(coeff);
}

// Float variant; coefficients as doubles.
inline std::vector<double> char_poly_float(const Mat<Scalar>& m) {
    int n = m.rows();
    std::vector<double> coeff(n + 1, 0.0);
    coeff[n] = 1.0;
    Mat<Scalar> mk = m;
    std::vector<double> cs;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            Mat<Scalar> adj = mk;
            for (int i = 0; i < n; ++i) adj(i, i) -= Scalar::flt(cs.back());
            mk = m * adj;
        }
        double ck = mk.trace().to_double() / k;
        cs.push_back(ck);
        coeff[n - k] = -ck;
    }
    return coeff;
}

using Vec4 = std::vector<Scalar>;
using Mat4 = Mat<Scalar>;
using CVec4 = std::vector<CScalar>;
using CMat4 = Mat<CScalar>;

inline Vec4 vec4(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
    return Vec4{a, b, c, d};
}

inline Mat4 mat4(std::initializer_list<Scalar> vals) {
    Mat4 m(4, 4);
    int i = 0;
    for (const auto& v : vals) {
        m(i / 4, i % 4) = v;
        ++i;
    }
    if (i != 16) throw std::invalid_argument("mat4: want 16 entries");
    return m;
}

inline bool is_exact_mode(const Mat4& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_exact()) return false;
    return true;
}

// Mode guard at API entry: every entry must match the Context mode.
inline void check_mode(const Mat4& m, const Context& ctx) {
    bool ex = is_exact_mode(m);
    if (ctx.mode == Mode::Exact && !ex) throw ModeMismatch();
    if (ctx.mode == Mode::Float && ex) {
        // Exact integers in a float computation are harmless but a whole
        // exact matrix under a float context is a caller mistake.
        throw ModeMismatch();
    }
}

inline Mat4 to_float(const Mat4& m) {
    Mat4 r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = Scalar::flt(m(i, j).to_double());
    return r;
}

}  // namespace ricci22
