#pragma once

#include "metric.hpp"

namespace ricci22 {

// Component of O(2,2) carrying the standard basis to a given basis; fixes
// which null-tetrad convention applies.
enum class OType { PP, MM, MP, PM };

inline OType otype_of(OComponent c) {
    switch (c) {
        case OComponent::PlusPlus: return OType::PP;
        case OComponent::MinusMinus: return OType::MM;
        case OComponent::MinusPlus: return OType::MP;
        case OComponent::PlusMinus: return OType::PM;
    }
    return OType::PP;
}

inline const char* to_string(OType t) {
    switch (t) {
        case OType::PP: return "pp";
        case OType::MM: return "mm";
        case OType::MP: return "mp";
        case OType::PM: return "pm";
    }
    return "?";
}

// Two-component spinor relative to the distinguished spin frames.
template <class F>
using SpinVec2 = std::vector<F>;
using SpinVec = SpinVec2<Scalar>;
using CSpinVec = SpinVec2<CScalar>;

// Symplectic pairing: contraction of one spinor against the lowered other.
// With the component convention k_A = (-k^1, k^0) this is det[a b].
template <class F>
F spin_pairing(const SpinVec2<F>& a, const SpinVec2<F>& b) {
    return a[0] * b[1] - a[1] * b[0];
}

// The stored 2x2 matrix of a vector carries a factor sqrt(2) relative to the
// true spinor components, so rational vectors have rational matrices:
// (u,v,x,y) |-> [[u+x, y-v], [y+v, u-x]].
template <class F>
Mat<F> vec_to_z_t(const std::vector<F>& v) {
    Mat<F> z(2, 2);
    z(0, 0) = v[0] + v[2];
    z(0, 1) = v[3] - v[1];
    z(1, 0) = v[3] + v[1];
    z(1, 1) = v[0] - v[2];
    return z;
}

template <class F>
std::vector<F> z_to_vec_t(const Mat<F>& z) {
    std::vector<F> v(4);
    F half = F(1) / F(2);
    v[0] = (z(0, 0) + z(1, 1)) * half;
    v[2] = (z(0, 0) - z(1, 1)) * half;
    v[3] = (z(0, 1) + z(1, 0)) * half;
    v[1] = (z(1, 0) - z(0, 1)) * half;
    return v;
}

inline Mat4 vec_to_z(const Vec4& v) { return vec_to_z_t(v); }
inline Vec4 z_to_vec(const Mat<Scalar>& z) { return z_to_vec_t(z); }

// det of the stored matrix equals s_{2,2}(v, v); zero exactly on null vectors
// and exactly on decomposable spinor matrices.
template <class F>
F null_norm_t(const std::vector<F>& v) {
    Mat<F> z = vec_to_z_t(v);
    return z(0, 0) * z(1, 1) - z(0, 1) * z(1, 0);
}
inline Scalar null_norm(const Vec4& v) { return null_norm_t(v); }

// Vector with spinor decomposition xi (x) zeta.
template <class F>
std::vector<F> vec_of_spin_pair_t(const SpinVec2<F>& xi, const SpinVec2<F>& zeta, const F& sqrt2_val) {
    Mat<F> z(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) z(i, j) = sqrt2_val * xi[i] * zeta[j];
    return z_to_vec_t(z);
}
inline Vec4 vec_of_spin_pair(const SpinVec& xi, const SpinVec& zeta) {
    return vec_of_spin_pair_t(xi, zeta, Scalar::sqrt2());
}
inline CVec4 vec_of_spin_pair_c(const CSpinVec& xi, const CSpinVec& zeta) {
    return vec_of_spin_pair_t(xi, zeta, CScalar(Scalar::sqrt2()));
}

struct NullTetrad {
    Vec4 l, mt, n, m;  // all components in the standard PsiON basis
};

// Null tetrad of a pair of spin frames. The two symplectic pairings must
// multiply to 1 (both +1, or both -1 for order-swapped frames, or reciprocal
// scalings); that is exactly the condition for the tetrad scalar products to
// come out right.
inline NullTetrad null_tetrad(const SpinVec& o, const SpinVec& iota, const SpinVec& op,
                              const SpinVec& iotap) {
    if (spin_pairing(o, iota) * spin_pairing(op, iotap) != Scalar(1)) throw DegenerateFrame();
    NullTetrad t;
    t.l = vec_of_spin_pair(o, op);
    t.mt = vec_of_spin_pair(iota, op);
    t.n = vec_of_spin_pair(iota, iotap);
    t.m = vec_of_spin_pair(o, iotap);
    return t;
}

inline std::array<Vec4, 4> psion_from_tetrad(const NullTetrad& t) {
    Scalar inv = Scalar(1) / Scalar::sqrt2();
    std::array<Vec4, 4> b;
    for (int i = 0; i < 4; ++i) b[i].assign(4, Scalar(0));
    for (int c = 0; c < 4; ++c) {
        b[0][c] = (t.l[c] + t.n[c]) * inv;
        b[1][c] = (t.mt[c] - t.m[c]) * inv;
        b[2][c] = (t.l[c] - t.n[c]) * inv;
        b[3][c] = (t.mt[c] + t.m[c]) * inv;
    }
    return b;
}

enum class Chirality { Preserving, Swapping };

// 4x4 matrix (standard PsiON basis) of the vector action of a pair of 2x2
// spin-space maps with determinant +-1. Chirality-preserving pairs act as
// Z -> A1 Z A2^T; swapping pairs compose with the transpose of Z. The result
// is orthogonal when both determinants agree and anti-orthogonal otherwise.
inline Mat4 spin_pair_action(const Mat<Scalar>& a1, const Mat<Scalar>& a2, Chirality ch) {
    auto det2 = [](const Mat<Scalar>& a) { return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0); };
    Scalar d1 = det2(a1), d2 = det2(a2);
    if ((d1 != Scalar(1) && d1 != Scalar(-1)) || (d2 != Scalar(1) && d2 != Scalar(-1)))
        throw BadDeterminant();
    Mat4 out(4, 4);
    for (int col = 0; col < 4; ++col) {
        Vec4 e(4, Scalar(0));
        e[col] = Scalar(1);
        Mat<Scalar> z = vec_to_z(e);
        if (ch == Chirality::Swapping) z = z.transpose();
        Mat<Scalar> zz = a1 * z * a2.transpose();
        Vec4 img = z_to_vec(zz);
        for (int r = 0; r < 4; ++r) out(r, col) = img[r];
    }
    return out;
}

// Determinant of the component matrix, +1 on the standard basis.
inline Scalar volume_form(const Vec4& v1, const Vec4& v2, const Vec4& v3, const Vec4& v4) {
    Mat4 m(4, 4);
    const Vec4* vs[4] = {&v1, &v2, &v3, &v4};
    for (int c = 0; c < 4; ++c)
        for (int r = 0; r < 4; ++r) m(r, c) = (*vs[c])[r];
    return det_of(m, Scalar(1));
}

inline OType otype_of_basis(const std::array<Vec4, 4>& basis, MetricKind kind, const Context& ctx) {
    Mat4 t(4, 4);
    for (int c = 0; c < 4; ++c)
        for (int r = 0; r < 4; ++r) t(r, c) = basis[c][r];
    try {
        return otype_of(orthogonal_component(t, kind, ctx));
    } catch (const NotOrthogonal&) {
        throw NotABasisOfKind();
    }
}

// Spin frames of a null tetrad, unique up to overall sign; the sign is fixed
// by making the first nonzero component of o positive.
inline void frames_from_tetrad(const NullTetrad& t, SpinVec& o, SpinVec& iota, SpinVec& op,
                               SpinVec& iotap) {
    Mat<Scalar> sl = vec_to_z(t.l), smt = vec_to_z(t.mt), sn = vec_to_z(t.n), sm = vec_to_z(t.m);
    auto col_dir = [](const Mat<Scalar>& s) {
        SpinVec d(2);
        int c = (!s(0, 0).is_zero() || !s(1, 0).is_zero()) ? 0 : 1;
        d[0] = s(0, c);
        d[1] = s(1, c);
        return d;
    };
    auto row_dir = [](const Mat<Scalar>& s) {
        SpinVec d(2);
        int r = (!s(0, 0).is_zero() || !s(0, 1).is_zero()) ? 0 : 1;
        d[0] = s(r, 0);
        d[1] = s(r, 1);
        return d;
    };
    SpinVec od = col_dir(sl), id = col_dir(sn), opd = row_dir(sl), ipd = row_dir(sn);
    auto coeff_of = [](const Mat<Scalar>& s, const SpinVec& u, const SpinVec& w) {
        // s = k * sqrt2 * u w^T; recover k from a nonzero entry.
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (!s(i, j).is_zero()) return s(i, j) / (Scalar::sqrt2() * u[i] * w[j]);
        throw DegenerateFrame();
    };
    Scalar ac = coeff_of(sl, od, opd);
    Scalar bc = coeff_of(smt, id, opd);
    Scalar ab = Scalar(1) / spin_pairing(od, id);
    // a^2 = (a/b)(ab) = (ac/bc) ab
    Scalar a2 = ac / bc * ab, a;
    if (!a2.sqrt_exact(a))
        throw NotCanonicalizable("spin frame scale is not exactly representable");
    Scalar b = ab / a, c = ac / a, d;
    Scalar bd = coeff_of(sn, id, ipd);
    d = bd / b;
    o = {od[0] * a, od[1] * a};
    iota = {id[0] * b, id[1] * b};
    op = {opd[0] * c, opd[1] * c};
    iotap = {ipd[0] * d, ipd[1] * d};
    int s = !o[0].is_zero() ? o[0].sign() : o[1].sign();
    if (s < 0)
        for (auto* v : {&o, &iota, &op, &iotap})
            for (auto& x : *v) x = -x;
}

// Stored (sqrt2-scaled) soldering symbol of the i-th standard basis vector,
// both spinor indices up.
inline Mat<Scalar> sigma_stored(int i) {
    Vec4 e(4, Scalar(0));
    e[i] = Scalar(1);
    return vec_to_z(e);
}

// Symplectic form component eps_{AB}: eps_{01} = 1. Lowering acts as
// k_A = k^B eps_{BA}.
inline Scalar epsilon_lower(int a, int b) {
    if (a == 0 && b == 1) return Scalar(1);
    if (a == 1 && b == 0) return Scalar(-1);
    return Scalar(0);
}

}  // namespace ricci22
