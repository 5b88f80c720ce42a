#pragma once

#include "linalg.hpp"

namespace ricci22 {

// Basis convention for R^{2,2}: pseudo-orthonormal with Gram diag(1,1,-1,-1),
// or Witt with s(E1,E3) = s(E2,E4) = 1 the only nonzero products.
enum class MetricKind { PsiON, Witt };

enum class OComponent { PlusPlus, PlusMinus, MinusPlus, MinusMinus };

inline const char* to_string(OComponent c) {
    switch (c) {
        case OComponent::PlusPlus: return "O(+,+)";
        case OComponent::PlusMinus: return "O(+,-)";
        case OComponent::MinusPlus: return "O(-,+)";
        case OComponent::MinusMinus: return "O(-,-)";
    }
    return "?";
}

inline Mat4 gram(MetricKind kind) {
    Mat4 g(4, 4);
    if (kind == MetricKind::PsiON) {
        g(0, 0) = Scalar(1);
        g(1, 1) = Scalar(1);
        g(2, 2) = Scalar(-1);
        g(3, 3) = Scalar(-1);
    } else {
        g(0, 2) = g(2, 0) = Scalar(1);
        g(1, 3) = g(3, 1) = Scalar(1);
    }
    return g;
}

inline Scalar inner(const Vec4& v, const Vec4& w, MetricKind kind) {
    Mat4 g = gram(kind);
    Scalar s;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (g(i, j).is_zero()) continue;
            s += v[i] * g(i, j) * w[j];
        }
    return s;
}

// Adjoint with respect to the metric of the given kind: g^{-1} M^T g. Both
// Gram matrices are involutions, so this is g M^T g.
inline Mat4 adjoint(const Mat4& m, MetricKind kind) {
    Mat4 g = gram(kind);
    return g * m.transpose() * g;
}

inline bool is_self_adjoint(const Mat4& m, MetricKind kind, const Context& ctx) {
    Mat4 d = adjoint(m, kind) - m;
    if (ctx.mode == Mode::Exact) {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (!d(i, j).is_zero()) return false;
        return true;
    }
    double scale = detail::matrix_scale(m);
    if (scale == 0) return true;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (std::abs(d(i, j).to_double()) > ctx.zero_tol * scale) return false;
    return true;
}

// Transition with columns holding the standard Witt basis in PsiON
// coordinates. Symmetric and involutive, so it is its own inverse.
inline Mat4 witt_to_psion_transition() {
    Scalar h = Scalar(1) / Scalar::sqrt2();
    Mat4 p(4, 4);
    p(0, 0) = h;
    p(2, 0) = h;
    p(1, 1) = h;
    p(3, 1) = h;
    p(0, 2) = h;
    p(2, 2) = -h;
    p(1, 3) = h;
    p(3, 3) = -h;
    return p;
}

// Conjugates the matrix of an endomorphism from one basis convention to the
// other. All sqrt(2) factors cancel in exact arithmetic for rational input.
inline Mat4 change_kind(const Mat4& m, MetricKind from, MetricKind to) {
    if (from == to) return m;
    Mat4 p = witt_to_psion_transition();
    return p * m * p;
}

inline Vec4 change_kind_vec(const Vec4& v, MetricKind from, MetricKind to) {
    if (from == to) return v;
    return witt_to_psion_transition().apply(v);
}

inline bool is_orthogonal(const Mat4& l, MetricKind kind, const Context& ctx) {
    Mat4 g = gram(kind);
    Mat4 d = l.transpose() * g * l - g;
    if (ctx.mode == Mode::Exact) {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (!d(i, j).is_zero()) return false;
        return true;
    }
    double scale = std::max(1.0, detail::matrix_scale(l));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (std::abs(d(i, j).to_double()) > ctx.zero_tol * scale * scale) return false;
    return true;
}

// Connected component of O(2,2) containing an orthogonal map: the signs of
// det of the time-time and space-space blocks in any PsiON basis.
inline OComponent orthogonal_component(const Mat4& l_in, MetricKind kind, const Context& ctx) {
    if (!is_orthogonal(l_in, kind, ctx)) throw NotOrthogonal();
    Mat4 l = kind == MetricKind::PsiON ? l_in : change_kind(l_in, MetricKind::Witt, MetricKind::PsiON);
    Scalar det_a = l(0, 0) * l(1, 1) - l(0, 1) * l(1, 0);
    Scalar det_d = l(2, 2) * l(3, 3) - l(2, 3) * l(3, 2);
    int t = det_a.sign(), s = det_d.sign();
    if (t == 0 || s == 0) throw SingularBlock();
    if (t > 0) return s > 0 ? OComponent::PlusPlus : OComponent::PlusMinus;
    return s > 0 ? OComponent::MinusPlus : OComponent::MinusMinus;
}

// Monic characteristic polynomial of a 4x4 matrix (exact mode).
inline Poly char_poly(const Mat4& m) { return char_poly_exact(m); }

inline Scalar trace_of(const Mat4& m) { return m.trace(); }

}  // namespace ricci22
