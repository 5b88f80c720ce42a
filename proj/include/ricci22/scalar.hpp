#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "rational.hpp"

namespace ricci22 {

enum class Mode { Exact, Float };

// Fixes the arithmetic mode for a whole computation. Tolerances apply to
// float mode only: zero_tol is relative (rank/pivot decisions), cluster_tol
// is absolute (eigenvalue coincidence).
struct Context {
    Mode mode = Mode::Exact;
    double zero_tol = 1e-9;
    double cluster_tol = 1e-6;

    static Context exact() { return Context{Mode::Exact, 1e-9, 1e-6}; }
    static Context flt(double zero = 1e-9, double cluster = 1e-6) {
        return Context{Mode::Float, zero, cluster};
    }
};

struct ModeMismatch : std::logic_error {
    ModeMismatch() : std::logic_error("mixed exact/float operands") {}
};
struct NotSelfAdjoint : std::invalid_argument {
    NotSelfAdjoint() : std::invalid_argument("matrix is not self-adjoint for the given metric") {}
};
struct NotOrthogonal : std::invalid_argument {
    NotOrthogonal() : std::invalid_argument("matrix is not orthogonal for the given metric") {}
};
struct SingularBlock : std::invalid_argument {
    SingularBlock() : std::invalid_argument("vanishing block determinant") {}
};
struct IllConditioned : std::runtime_error {
    explicit IllConditioned(const std::string& what) : std::runtime_error(what) {}
};
struct NonRationalInput : std::invalid_argument {
    explicit NonRationalInput(const std::string& what) : std::invalid_argument(what) {}
};
struct DegenerateFrame : std::invalid_argument {
    DegenerateFrame() : std::invalid_argument("spin frame normalization failed") {}
};
struct BadDeterminant : std::invalid_argument {
    BadDeterminant() : std::invalid_argument("spin factor determinant is not +1 or -1") {}
};
struct NotABasisOfKind : std::invalid_argument {
    NotABasisOfKind() : std::invalid_argument("vectors are not a basis of the stated metric kind") {}
};
struct NotTraceless : std::invalid_argument {
    NotTraceless() : std::invalid_argument("matrix is not traceless") {}
};
struct NotSymmetric : std::invalid_argument {
    NotSymmetric() : std::invalid_argument("tensor is not symmetric") {}
};
struct NotSingular : std::invalid_argument {
    NotSingular() : std::invalid_argument("point is not a singular point of the locus") {}
};
struct InconsistentData : std::logic_error {
    explicit InconsistentData(const std::string& what) : std::logic_error(what) {}
};
struct NoNilpotentPart : std::invalid_argument {
    NoNilpotentPart() : std::invalid_argument("no Jordan block of size >= 2 with real eigenvalue") {}
};
struct NotCanonicalizable : std::runtime_error {
    explicit NotCanonicalizable(const std::string& what) : std::runtime_error(what) {}
};
struct ZeroPolynomial : std::invalid_argument {
    ZeroPolynomial() : std::invalid_argument("zero polynomial has no factorization type") {}
};

// One real number. Exact values live in Q(sqrt 2), stored as a + b*sqrt(2)
// with rational a, b; float values are plain doubles. Binary operations
// promote an exact operand to float when the other operand is float, so a
// float can never leak into an all-exact computation; API entry points
// validate that input matrices match the Context mode.
class Scalar {
public:
    Scalar() : mode_(Mode::Exact), a_(0), b_(0), f_(0) {}
    Scalar(int v) : mode_(Mode::Exact), a_(v), b_(0), f_(0) {}
    Scalar(long long v) : mode_(Mode::Exact), a_(v), b_(0), f_(0) {}
    Scalar(const Rat& r) : mode_(Mode::Exact), a_(r), b_(0), f_(0) {}
    Scalar(const Rat& a, const Rat& b) : mode_(Mode::Exact), a_(a), b_(b), f_(0) {}

    static Scalar flt(double v) {
        Scalar s;
        s.mode_ = Mode::Float;
        s.f_ = v;
        return s;
    }
    static Scalar sqrt2() { return Scalar(Rat(0), Rat(1)); }
    static Scalar of(const Rat& r, const Context& ctx) {
        return ctx.mode == Mode::Exact ? Scalar(r) : flt(r.to_double());
    }

    Mode mode() const { return mode_; }
    bool is_exact() const { return mode_ == Mode::Exact; }
    bool is_rational() const { return mode_ == Mode::Exact && b_.is_zero(); }
    const Rat& rat_part() const { return a_; }
    const Rat& sqrt2_part() const { return b_; }
    const Rat& rat() const {
        if (!is_rational()) throw NonRationalInput("value is not a plain rational");
        return a_;
    }
    double dbl() const { return f_; }

    bool is_zero() const {
        return mode_ == Mode::Exact ? (a_.is_zero() && b_.is_zero()) : f_ == 0.0;
    }

    double to_double() const {
        if (mode_ == Mode::Float) return f_;
        return a_.to_double() + b_.to_double() * 1.4142135623730951;
    }

    // Exact sign for exact values; plain sign of the double otherwise.
    int sign() const {
        if (mode_ == Mode::Float) return f_ > 0 ? 1 : (f_ < 0 ? -1 : 0);
        if (b_.is_zero()) return a_.sign();
        if (a_.is_zero()) return b_.sign();
        if (a_.sign() == b_.sign()) return a_.sign();
        // a + b*sqrt2 with opposite signs: compare a^2 against 2 b^2.
        Rat d = a_ * a_ - Rat(2) * b_ * b_;
        return d.sign() == 0 ? 0 : (d.sign() > 0 ? a_.sign() : b_.sign());
    }

    friend Scalar operator+(const Scalar& x, const Scalar& y) {
        if (x.mode_ == Mode::Exact && y.mode_ == Mode::Exact) return Scalar(x.a_ + y.a_, x.b_ + y.b_);
        return flt(x.to_double() + y.to_double());
    }
    friend Scalar operator-(const Scalar& x, const Scalar& y) {
        if (x.mode_ == Mode::Exact && y.mode_ == Mode::Exact) return Scalar(x.a_ - y.a_, x.b_ - y.b_);
        return flt(x.to_double() - y.to_double());
    }
    friend Scalar operator*(const Scalar& x, const Scalar& y) {
        if (x.mode_ == Mode::Exact && y.mode_ == Mode::Exact)
            return Scalar(x.a_ * y.a_ + Rat(2) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
        return flt(x.to_double() * y.to_double());
    }
    friend Scalar operator/(const Scalar& x, const Scalar& y) {
        if (x.mode_ == Mode::Exact && y.mode_ == Mode::Exact) {
            // 1/(a+b*sqrt2) = (a-b*sqrt2)/(a^2-2b^2)
            Rat n = y.a_ * y.a_ - Rat(2) * y.b_ * y.b_;
            if (n.is_zero()) {
                if (y.is_zero()) throw std::domain_error("Scalar: division by zero");
                throw std::logic_error("Scalar: unreachable, a^2=2b^2 has no rational solution");
            }
            Scalar c(y.a_ / n, -(y.b_ / n));
            return x * c;
        }
        return flt(x.to_double() / y.to_double());
    }
    Scalar operator-() const {
        if (mode_ == Mode::Exact) return Scalar(-a_, -b_);
        return flt(-f_);
    }
    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
    Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        if (x.mode_ == Mode::Exact && y.mode_ == Mode::Exact) return x.a_ == y.a_ && x.b_ == y.b_;
        return x.to_double() == y.to_double();
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
    friend bool operator<(const Scalar& x, const Scalar& y) { return (x - y).sign() < 0; }
    friend bool operator<=(const Scalar& x, const Scalar& y) { return (x - y).sign() <= 0; }
    friend bool operator>(const Scalar& x, const Scalar& y) { return (x - y).sign() > 0; }
    friend bool operator>=(const Scalar& x, const Scalar& y) { return (x - y).sign() >= 0; }

    Scalar abs() const { return sign() < 0 ? -*this : *this; }

    // Exact square root within Q(sqrt 2) when one exists.
    bool sqrt_exact(Scalar& out) const {
        if (mode_ == Mode::Float) {
            if (f_ < 0) return false;
            out = flt(std::sqrt(f_));
            return true;
        }
        if (sign() < 0) return false;
        if (is_zero()) {
            out = Scalar(0);
            return true;
        }
        if (b_.is_zero()) {
            Rat r;
            if (a_.sqrt_exact(r)) {
                out = Scalar(r);
                return true;
            }
            // a = 2 y^2  =>  sqrt = y*sqrt2
            if ((a_ / Rat(2)).sqrt_exact(r)) {
                out = Scalar(Rat(0), r);
                return true;
            }
            return false;
        }
        // (x + y sqrt2)^2 = x^2 + 2 y^2 + 2 x y sqrt2
        Rat disc = a_ * a_ - Rat(2) * b_ * b_, d;
        if (!disc.sqrt_exact(d)) return false;
        for (int branch = 0; branch < 2; ++branch) {
            Rat x2 = (a_ + (branch == 0 ? d : -d)) / Rat(2), x;
            if (x2.sign() <= 0) continue;
            if (!x2.sqrt_exact(x)) continue;
            Rat y = b_ / (Rat(2) * x);
            Scalar cand(x, y);
            if (cand.sign() < 0) cand = -cand;
            if (cand * cand == *this) {
                out = cand;
                return true;
            }
        }
        return false;
    }

    std::string to_string() const {
        if (mode_ == Mode::Float) return std::to_string(f_);
        if (b_.is_zero()) return a_.to_string();
        std::string s2 = b_.to_string() + "*sqrt2";
        if (a_.is_zero()) return s2;
        return a_.to_string() + (b_.sign() > 0 ? "+" : "") + s2;
    }

private:
    Mode mode_;
    Rat a_, b_;
    double f_;
};

// Complex value over Scalar. Conjugation is an involution and
// norm2() = re^2 + im^2 is nonnegative in exact mode by construction.
struct CScalar {
    Scalar re, im;

    CScalar() = default;
    CScalar(const Scalar& r) : re(r), im(Scalar(0)) {}
    CScalar(const Scalar& r, const Scalar& i) : re(r), im(i) {}
    CScalar(int v) : re(v), im(Scalar(0)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }
    CScalar conj() const { return CScalar(re, -im); }
    Scalar norm2() const { return re * re + im * im; }

    friend CScalar operator+(const CScalar& x, const CScalar& y) { return {x.re + y.re, x.im + y.im}; }
    friend CScalar operator-(const CScalar& x, const CScalar& y) { return {x.re - y.re, x.im - y.im}; }
    friend CScalar operator*(const CScalar& x, const CScalar& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend CScalar operator/(const CScalar& x, const CScalar& y) {
        Scalar n = y.norm2();
        CScalar z = x * y.conj();
        return {z.re / n, z.im / n};
    }
    CScalar operator-() const { return {-re, -im}; }
    CScalar& operator+=(const CScalar& y) { return *this = *this + y; }
    CScalar& operator-=(const CScalar& y) { return *this = *this - y; }
    CScalar& operator*=(const CScalar& y) { return *this = *this * y; }

    friend bool operator==(const CScalar& x, const CScalar& y) { return x.re == y.re && x.im == y.im; }
    friend bool operator!=(const CScalar& x, const CScalar& y) { return !(x == y); }

    std::string to_string() const {
        if (im.is_zero()) return re.to_string();
        return "(" + re.to_string() + (im.sign() >= 0 ? "+" : "") + im.to_string() + "i)";
    }
};

}  // namespace ricci22
