#pragma once

#include "spinor.hpp"

namespace ricci22 {

// Bihomogeneous form of bidegree (dx, du) in the spinor variable pairs
// (X, Y) and (U, V). Coefficient of X^(dx-i) Y^i U^(du-j) V^j at (i, j).
template <class F>
struct BiForm {
    int dx = 0, du = 0;
    std::vector<F> c;

    BiForm() : c(1) {}
    BiForm(int dxx, int duu) : dx(dxx), du(duu), c(static_cast<std::size_t>(dxx + 1) * (duu + 1)) {}

    F& at(int i, int j) { return c[static_cast<std::size_t>(i) * (du + 1) + j]; }
    const F& at(int i, int j) const { return c[static_cast<std::size_t>(i) * (du + 1) + j]; }

    bool is_zero() const {
        for (auto& x : c)
            if (!x.is_zero()) return false;
        return true;
    }

    friend BiForm operator+(const BiForm& a, const BiForm& b) {
        BiForm r = a;
        for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
        return r;
    }
    friend BiForm operator-(const BiForm& a, const BiForm& b) {
        BiForm r = a;
        for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
        return r;
    }
    friend BiForm operator*(const BiForm& a, const F& s) {
        BiForm r = a;
        for (auto& x : r.c) x *= s;
        return r;
    }
    friend BiForm operator*(const BiForm& a, const BiForm& b) {
        BiForm r(a.dx + b.dx, a.du + b.du);
        for (int i = 0; i <= a.dx; ++i)
            for (int j = 0; j <= a.du; ++j) {
                if (a.at(i, j).is_zero()) continue;
                for (int k = 0; k <= b.dx; ++k)
                    for (int l = 0; l <= b.du; ++l)
                        r.at(i + k, j + l) += a.at(i, j) * b.at(k, l);
            }
        return r;
    }
    friend bool operator==(const BiForm& a, const BiForm& b) {
        return a.dx == b.dx && a.du == b.du && [&] {
            for (std::size_t i = 0; i < a.c.size(); ++i)
                if (!(a.c[i] == b.c[i])) return false;
            return true;
        }();
    }
    friend bool operator!=(const BiForm& a, const BiForm& b) { return !(a == b); }

    F eval(const F& x, const F& y, const F& u, const F& v) const {
        F acc{};
        for (int i = 0; i <= dx; ++i)
            for (int j = 0; j <= du; ++j) {
                if (at(i, j).is_zero()) continue;
                F term = at(i, j);
                for (int p = 0; p < dx - i; ++p) term *= x;
                for (int p = 0; p < i; ++p) term *= y;
                for (int p = 0; p < du - j; ++p) term *= u;
                for (int p = 0; p < j; ++p) term *= v;
                acc += term;
            }
        return acc;
    }

    // Partial derivatives in the four variables.
    BiForm dX() const {
        if (dx == 0) return BiForm(0, du);
        BiForm r(dx - 1, du);
        for (int i = 0; i < dx; ++i)
            for (int j = 0; j <= du; ++j) r.at(i, j) = at(i, j) * F(dx - i);
        return r;
    }
    BiForm dY() const {
        if (dx == 0) return BiForm(0, du);
        BiForm r(dx - 1, du);
        for (int i = 1; i <= dx; ++i)
            for (int j = 0; j <= du; ++j) r.at(i - 1, j) = at(i, j) * F(i);
        return r;
    }
    BiForm dU() const {
        if (du == 0) return BiForm(dx, 0);
        BiForm r(dx, du - 1);
        for (int i = 0; i <= dx; ++i)
            for (int j = 0; j < du; ++j) r.at(i, j) = at(i, j) * F(du - j);
        return r;
    }
    BiForm dV() const {
        if (du == 0) return BiForm(dx, 0);
        BiForm r(dx, du - 1);
        for (int i = 0; i <= dx; ++i)
            for (int j = 1; j <= du; ++j) r.at(i, j - 1) = at(i, j) * F(j);
        return r;
    }

    std::string to_string() const {
        std::string s;
        for (int i = 0; i <= dx; ++i)
            for (int j = 0; j <= du; ++j) {
                if (at(i, j).is_zero()) continue;
                if (!s.empty()) s += " + ";
                s += at(i, j).to_string();
                auto app = [&](const char* v, int pow) {
                    if (pow == 0) return;
                    s += std::string("*") + v;
                    if (pow > 1) s += "^" + std::to_string(pow);
                };
                app("X", dx - i);
                app("Y", i);
                app("U", du - j);
                app("V", j);
            }
        return s.empty() ? "0" : s;
    }
};

using BiQuadratic = BiForm<Scalar>;
using CBiForm = BiForm<CScalar>;

inline CBiForm complexify(const BiQuadratic& p) {
    CBiForm r(p.dx, p.du);
    for (std::size_t i = 0; i < p.c.size(); ++i) r.c[i] = CScalar(p.c[i]);
    return r;
}

inline CBiForm conj(const CBiForm& p) {
    CBiForm r = p;
    for (auto& x : r.c) x = x.conj();
    return r;
}

inline bool is_real_form(const CBiForm& p) {
    for (auto& x : p.c)
        if (!x.im.is_zero()) return false;
    return true;
}

}  // namespace ricci22
