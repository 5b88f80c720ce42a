#pragma once

#include "biform.hpp"
#include "classify.hpp"

namespace ricci22 {

// ---------------------------------------------------------------------------
// The Ricci polynomial of a traceless symmetric covariant tensor.

namespace detail {

// The four coordinate functions of the vector with spinor components
// xi (x) zeta, cleared of the common 1/sqrt2: bidegree-(1,1) forms L_a with
// v^a = L_a / sqrt2.
inline std::array<BiForm<Scalar>, 4> coordinate_forms() {
    std::array<BiForm<Scalar>, 4> l;
    for (auto& f : l) f = BiForm<Scalar>(1, 1);
    // order (u, v, x, y); entries at(i, j): X^(1-i) Y^i U^(1-j) V^j
    l[0].at(0, 0) = Scalar(1);  // XU
    l[0].at(1, 1) = Scalar(1);  // YV
    l[1].at(1, 0) = Scalar(1);  // YU
    l[1].at(0, 1) = Scalar(-1);
    l[2].at(0, 0) = Scalar(1);
    l[2].at(1, 1) = Scalar(-1);
    l[3].at(0, 1) = Scalar(1);  // XV
    l[3].at(1, 0) = Scalar(1);
    return l;
}

}  // namespace detail

// Applies the variable substitution attached to the basis O-type.
template <class F>
BiForm<F> apply_otype(const BiForm<F>& p, OType t) {
    if (t == OType::PP) return p;
    // images of (X, Y, U, V) as (sign, variable-index) with 0:X 1:Y 2:U 3:V
    int map[4];
    int sgn[4];
    switch (t) {
        case OType::MM: {
            int m[4] = {1, 0, 3, 2};
            int s[4] = {-1, -1, -1, -1};
            std::copy(m, m + 4, map);
            std::copy(s, s + 4, sgn);
            break;
        }
        case OType::MP: {
            int m[4] = {2, 3, 0, 1};
            int s[4] = {1, 1, 1, 1};
            std::copy(m, m + 4, map);
            std::copy(s, s + 4, sgn);
            break;
        }
        case OType::PM: {
            int m[4] = {3, 2, 1, 0};
            int s[4] = {-1, -1, -1, -1};
            std::copy(m, m + 4, map);
            std::copy(s, s + 4, sgn);
            break;
        }
        default: return p;
    }
    BiForm<F> r(p.dx, p.du);
    for (int i = 0; i <= p.dx; ++i)
        for (int j = 0; j <= p.du; ++j) {
            if (p.at(i, j).is_zero()) continue;
            // exponents of X, Y, U, V in this monomial
            int e[4] = {p.dx - i, i, p.du - j, j};
            int ne[4] = {0, 0, 0, 0};
            int s = 1;
            for (int v = 0; v < 4; ++v) {
                ne[map[v]] += e[v];
                if (sgn[v] < 0 && (e[v] & 1)) s = -s;
            }
            if (ne[0] + ne[1] != p.dx || ne[2] + ne[3] != p.du)
                throw std::logic_error("otype substitution must preserve bidegree");
            F val = p.at(i, j);
            if (s < 0) val = -val;
            r.at(ne[1], ne[3]) += val;
        }
    return r;
}

// P(X,Y,U,V) = Phi_ab v^a v^b on decomposable null directions, for a
// symmetric traceless covariant tensor in PsiON coordinates.
inline BiQuadratic ricci_polynomial(const Mat4& cov, OType otype) {
    // symmetry and tracelessness of the covariant tensor
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!(cov(i, j) == cov(j, i))) throw NotSymmetric();
    Scalar tr = cov(0, 0) + cov(1, 1) - cov(2, 2) - cov(3, 3);  // g^{ab} Phi_ab
    if (!tr.is_zero()) {
        if (tr.is_exact()) throw NotTraceless();
        if (std::abs(tr.to_double()) > 1e-9) throw NotTraceless();
    }
    auto l = detail::coordinate_forms();
    BiQuadratic p(2, 2);
    Scalar half = Scalar(1) / Scalar(2);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            if (cov(a, b).is_zero()) continue;
            p = p + (l[a] * l[b]) * (cov(a, b) * half);
        }
    return apply_otype(p, otype);
}

// Covariant PsiON components of an endomorphism given in `kind` coordinates.
inline Mat4 covariant_psion(const Mat4& endo, MetricKind kind) {
    Mat4 m = kind == MetricKind::PsiON ? endo : change_kind(endo, MetricKind::Witt, MetricKind::PsiON);
    return gram(MetricKind::PsiON) * m;
}

// ---------------------------------------------------------------------------
// Points and curves on the quadric.

struct PPoint {
    CSpinVec xi, zeta;  // normalized: first nonzero coordinate of each is 1
    bool exact = true;

    bool is_real() const {
        for (auto& c : xi)
            if (!c.im.is_zero()) return false;
        for (auto& c : zeta)
            if (!c.im.is_zero()) return false;
        return true;
    }
    PPoint conj() const {
        PPoint r = *this;
        for (auto& c : r.xi) c = c.conj();
        for (auto& c : r.zeta) c = c.conj();
        return r;
    }
    friend bool operator==(const PPoint& a, const PPoint& b) {
        return a.xi[0] == b.xi[0] && a.xi[1] == b.xi[1] && a.zeta[0] == b.zeta[0] &&
               a.zeta[1] == b.zeta[1];
    }
    std::string to_string() const {
        return "([" + xi[0].to_string() + ":" + xi[1].to_string() + "],[" + zeta[0].to_string() +
               ":" + zeta[1].to_string() + "])";
    }
};

inline CSpinVec normalize_proj(CSpinVec v) {
    CScalar lead = !v[0].is_zero() ? v[0] : v[1];
    v[0] = v[0] / lead;
    v[1] = v[1] / lead;
    return v;
}

enum class SingKind { NodeRealTangents, NodeIsolated, NodeComplexPoint, Cusp, Tacnode, TriplePoint };

inline const char* to_string(SingKind k) {
    switch (k) {
        case SingKind::NodeRealTangents: return "node with real tangents";
        case SingKind::NodeIsolated: return "isolated real node";
        case SingKind::NodeComplexPoint: return "complex node";
        case SingKind::Cusp: return "cusp";
        case SingKind::Tacnode: return "tacnode";
        case SingKind::TriplePoint: return "triple point";
    }
    return "?";
}

struct SingularPointInfo {
    PPoint point;
    CScalar chi, alpha, beta, discriminant;
    int order = 2;
    SingKind kind = SingKind::NodeRealTangents;
    bool from_eigenvector = true;
    std::string note;
};

struct CurveComponent {
    enum class Shape { XiFixed, ZetaFixed, Diagonal } shape = Shape::ZetaFixed;
    CSpinVec fixed;   // the fixed projective point for the line shapes
    CBiForm form11;   // the (1,1)-form for Shape::Diagonal
    bool real = true;
    std::string note;
};

struct SingularLocus {
    std::vector<SingularPointInfo> points;
    std::vector<CurveComponent> curves;
    bool everything_singular = false;
};

struct NullEigenPoint {
    PPoint pt;
    CScalar eigenvalue;
    bool exact = true;
};

struct NullEigenData {
    std::vector<NullEigenPoint> points;
    std::vector<CurveComponent> lines;
    bool whole_space = false;
};

namespace detail {

inline bool csqrt_exact(const CScalar& c, CScalar& out) {
    if (c.im.is_zero()) {
        Scalar r;
        if (c.re.sign() >= 0) {
            if (!c.re.sqrt_exact(r)) return false;
            out = CScalar(r, Scalar(0));
            return true;
        }
        if (!(-c.re).sqrt_exact(r)) return false;
        out = CScalar(Scalar(0), r);
        return true;
    }
    Scalar mod;
    if (!c.norm2().sqrt_exact(mod)) return false;
    Scalar p2 = (mod + c.re) / Scalar(2), p;
    if (!p2.sqrt_exact(p) || p.is_zero()) return false;
    out = CScalar(p, c.im / (Scalar(2) * p));
    return true;
}

// Roots of a U,V binary quadratic with CScalar coefficients a U^2 + b UV +
// c V^2; returns projective points, exactness flagged.
inline std::vector<std::pair<CSpinVec, bool>> binary_quadratic_roots(const CScalar& a,
                                                                     const CScalar& b,
                                                                     const CScalar& c) {
    std::vector<std::pair<CSpinVec, bool>> out;
    if (a.is_zero() && b.is_zero() && c.is_zero()) return out;  // identically zero: caller handles
    if (a.is_zero()) {
        out.push_back({normalize_proj({CScalar(Scalar(1)), CScalar(Scalar(0))}), true});
        if (!b.is_zero())
            out.push_back({normalize_proj({-c, b}), true});
        return out;
    }
    CScalar disc = b * b - CScalar(Scalar(4)) * a * c, root;
    if (csqrt_exact(disc, root)) {
        CScalar two_a = CScalar(Scalar(2)) * a;
        out.push_back({normalize_proj({(-b + root) / two_a, CScalar(Scalar(1))}), true});
        if (!root.is_zero())
            out.push_back({normalize_proj({(-b - root) / two_a, CScalar(Scalar(1))}), true});
        return out;
    }
    // float fallback
    std::complex<double> ad(a.re.to_double(), a.im.to_double()),
        bd(b.re.to_double(), b.im.to_double()), cd(c.re.to_double(), c.im.to_double());
    auto rd = std::sqrt(bd * bd - 4.0 * ad * cd);
    for (auto r : {(-bd + rd) / (2.0 * ad), (-bd - rd) / (2.0 * ad)}) {
        out.push_back({{CScalar(Scalar::flt(r.real()), Scalar::flt(r.imag())), CScalar(Scalar::flt(1.0))},
                       false});
        if (rd == std::complex<double>(0, 0)) break;
    }
    return out;
}

inline PPoint point_of_cvec(const CVec4& v) {
    Mat<CScalar> z = vec_to_z_t(v);
    int r = (!z(0, 0).is_zero() || !z(0, 1).is_zero()) ? 0 : 1;
    int c = (!z(0, 0).is_zero() || !z(1, 0).is_zero()) ? 0 : 1;
    PPoint p;
    p.xi = normalize_proj({z(0, c), z(1, c)});
    p.zeta = normalize_proj({z(r, 0), z(r, 1)});
    return p;
}

inline CVec4 to_cvec(const Vec4& v) {
    CVec4 c(4);
    for (int i = 0; i < 4; ++i) c[i] = CScalar(v[i]);
    return c;
}

}  // namespace detail

// Decomposable null eigenvectors of a self-adjoint endomorphism, as points on
// the quadric, together with full lines of them (totally null eigenplanes and
// the null cones of three-dimensional eigenspaces).
inline NullEigenData null_eigenvectors(const Mat4& endo, const Context& ctx,
                                       MetricKind kind = MetricKind::PsiON) {
    NullEigenData out;
    auto recs = eigen_structure(endo, ctx, kind);
    bool exact = ctx.mode == Mode::Exact;

    auto add_point = [&](const PPoint& p, const CScalar& lam, bool ex) {
        for (auto& q : out.points)
            if (q.pt == p) return;
        out.points.push_back({p, lam, ex});
    };

    for (const auto& rec : recs) {
        if (rec.value.is_real()) {
            if (rec.value.kind == EigenValue::Kind::AlgebraicRealRoot) {
                // irrational eigenvalue: approximate point data
                Mat4 shifted = to_float(endo);
                double lam = rec.value.approx_re;
                for (int d = 0; d < 4; ++d) shifted(d, d) -= Scalar::flt(lam);
                auto basis = kernel_basis(shifted, Scalar::flt(1.0), FloatZeroPolicy{1e-9});
                if (basis.size() == 1) {
                    Scalar nn = null_norm_t(basis[0]);
                    if (std::abs(nn.to_double()) < 1e-7)
                        add_point(detail::point_of_cvec(detail::to_cvec(basis[0])),
                                  CScalar(Scalar::flt(lam)), false);
                }
                continue;
            }
            Scalar lam = rec.value.real;
            Mat4 shifted = endo;
            for (int d = 0; d < 4; ++d) shifted(d, d) -= lam;
            std::vector<Vec4> basis;
            if (exact) basis = kernel_basis(shifted, Scalar(1), ExactZeroPolicy{});
            else basis = kernel_basis(shifted, Scalar::flt(1.0), FloatZeroPolicy{ctx.zero_tol});
            int dim = static_cast<int>(basis.size());
            if (dim == 1) {
                Scalar nn = null_norm_t(basis[0]);
                bool isnull = exact ? nn.is_zero() : std::abs(nn.to_double()) <= ctx.zero_tol;
                if (isnull) add_point(detail::point_of_cvec(detail::to_cvec(basis[0])), CScalar(lam), exact);
            } else if (dim == 2) {
                // null directions of s b1 + t b2: binary quadratic in (s, t)
                Scalar n1 = null_norm_t(basis[0]), n2 = null_norm_t(basis[1]);
                Vec4 sum = basis[0];
                for (int i = 0; i < 4; ++i) sum[i] += basis[1][i];
                Scalar mix = null_norm_t(sum) - n1 - n2;
                auto nz = [&](const Scalar& s) {
                    if (exact) return s.is_zero();
                    double bscale = 0;
                    for (auto& bv : basis)
                        for (auto& x : bv) bscale = std::max(bscale, std::abs(x.to_double()));
                    return std::abs(s.to_double()) <= ctx.zero_tol * std::max(1.0, bscale * bscale);
                };
                if (nz(n1) && nz(n2) && nz(mix)) {
                    // totally null eigenplane: a full line on the quadric,
                    // with either the unprimed or the primed point shared
                    PPoint p1 = detail::point_of_cvec(detail::to_cvec(basis[0]));
                    PPoint p2 = detail::point_of_cvec(detail::to_cvec(basis[1]));
                    CurveComponent line;
                    if (p1.xi[0] == p2.xi[0] && p1.xi[1] == p2.xi[1]) {
                        line.shape = CurveComponent::Shape::XiFixed;
                        line.fixed = p1.xi;
                    } else {
                        line.shape = CurveComponent::Shape::ZetaFixed;
                        line.fixed = p1.zeta;
                    }
                    out.lines.push_back(line);
                } else {
                    // roots of n1 s^2 + mix s t + n2 t^2
                    auto roots = detail::binary_quadratic_roots(CScalar(n1), CScalar(mix), CScalar(n2));
                    for (auto& [st, ex] : roots) {
                        CVec4 v(4);
                        for (int i = 0; i < 4; ++i)
                            v[i] = st[0] * CScalar(basis[0][i]) + st[1] * CScalar(basis[1][i]);
                        add_point(detail::point_of_cvec(v), CScalar(lam), exact && ex);
                    }
                }
            } else if (dim == 3) {
                // the projectivized null cone of the eigenspace: zero set of
                // the defining covector pulled back to the quadric. The
                // covector annihilating the basis is the kernel of the 3x4
                // matrix whose rows are the basis vectors.
                Mat<Scalar> rows(3, 4);
                for (int r = 0; r < 3; ++r)
                    for (int c = 0; c < 4; ++c) rows(r, c) = basis[r][c];
                auto phis = exact ? kernel_basis(rows, Scalar(1), ExactZeroPolicy{})
                                  : kernel_basis(rows, Scalar::flt(1.0), FloatZeroPolicy{ctx.zero_tol});
                if (phis.empty()) continue;
                // h(xi,zeta) = phi_a v^a(xi,zeta): a (1,1)-form
                auto l = detail::coordinate_forms();
                BiForm<Scalar> h(1, 1);
                for (int a = 0; a < 4; ++a) h = h + l[a] * phis[0][a];
                CurveComponent conic;
                conic.shape = CurveComponent::Shape::Diagonal;
                conic.form11 = complexify(h);
                out.lines.push_back(conic);
            } else if (dim == 4) {
                out.whole_space = true;
            }
        } else {
            // complex pair: points for the eigenvalue and its conjugate
            CScalar lam = rec.value.complex_value;
            bool ex = rec.value.complex_exact && exact;
            if (rec.geom_mult == 1) {
                if (rec.eigenspace_basis.empty()) continue;
                const CVec4& w = rec.eigenspace_basis[0];
                CScalar nn = null_norm_t(w);
                bool isnull = ex ? nn.is_zero()
                                 : std::abs(nn.re.to_double()) + std::abs(nn.im.to_double()) <= 1e-7;
                if (isnull) {
                    PPoint p = detail::point_of_cvec(w);
                    p.exact = ex;
                    add_point(p, lam, ex);
                    add_point(p.conj(), lam.conj(), ex);
                }
            } else if (rec.geom_mult == 2 && rec.eigenspace_basis.size() >= 2) {
                const CVec4 &w1 = rec.eigenspace_basis[0], &w2 = rec.eigenspace_basis[1];
                CScalar n1 = null_norm_t(w1), n2 = null_norm_t(w2);
                CVec4 sum(4);
                for (int i = 0; i < 4; ++i) sum[i] = w1[i] + w2[i];
                CScalar mix = null_norm_t(sum) - n1 - n2;
                auto roots = detail::binary_quadratic_roots(n1, mix, n2);
                for (auto& [st, exr] : roots) {
                    CVec4 v(4);
                    for (int i = 0; i < 4; ++i) v[i] = st[0] * w1[i] + st[1] * w2[i];
                    PPoint p = detail::point_of_cvec(v);
                    p.exact = ex && exr;
                    add_point(p, lam, p.exact);
                    add_point(p.conj(), lam.conj(), p.exact);
                }
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Second-order data at a singular point.

// chi, alpha, beta of a singular point: the eigenvalue and the two dyad
// coefficients of the second derivative matrices. Consistency of the dyad
// structure is verified.
inline void double_point_data(const BiQuadratic& preal, const PPoint& pt, CScalar& chi,
                              CScalar& alpha, CScalar& beta, double tol = 0) {
    CBiForm p = complexify(preal);
    auto isz = [tol](const CScalar& z) {
        if (tol <= 0) return z.is_zero();
        return std::abs(z.re.to_double()) + std::abs(z.im.to_double()) <= tol;
    };
    const CScalar &x = pt.xi[0], &y = pt.xi[1], &u = pt.zeta[0], &v = pt.zeta[1];
    CScalar px = p.dX().eval(x, y, u, v), py = p.dY().eval(x, y, u, v);
    CScalar pu = p.dU().eval(x, y, u, v), pv = p.dV().eval(x, y, u, v);
    if (!(isz(px) && isz(py) && isz(pu) && isz(pv))) throw NotSingular();

    // lowered spinors of the point
    CScalar mu_a[2] = {-y, x};
    CScalar nu_a[2] = {-v, u};
    CScalar hxx[2][2] = {{p.dX().dX().eval(x, y, u, v), p.dX().dY().eval(x, y, u, v)},
                         {p.dX().dY().eval(x, y, u, v), p.dY().dY().eval(x, y, u, v)}};
    CScalar huu[2][2] = {{p.dU().dU().eval(x, y, u, v), p.dU().dV().eval(x, y, u, v)},
                         {p.dU().dV().eval(x, y, u, v), p.dV().dV().eval(x, y, u, v)}};
    CScalar hmix[2][2] = {{p.dX().dU().eval(x, y, u, v), p.dX().dV().eval(x, y, u, v)},
                          {p.dY().dU().eval(x, y, u, v), p.dY().dV().eval(x, y, u, v)}};
    auto extract = [&](CScalar h[2][2], CScalar a[2], CScalar b[2], const CScalar& scale,
                       CScalar& outv) {
        bool got = false;
        for (int i = 0; i < 2 && !got; ++i)
            for (int j = 0; j < 2 && !got; ++j)
                if (!a[i].is_zero() && !b[j].is_zero()) {
                    outv = h[i][j] / (scale * a[i] * b[j]);
                    got = true;
                }
        // dyad consistency
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                CScalar want = scale * outv * a[i] * b[j];
                if (!(h[i][j] == want)) {
                    double diff = std::abs((h[i][j] - want).re.to_double()) +
                                  std::abs((h[i][j] - want).im.to_double());
                    if (diff > std::max(tol, 1e-7))
                        throw InconsistentData("second derivatives are not dyadic");
                }
            }
    };
    extract(hxx, mu_a, mu_a, CScalar(Scalar(2)), alpha);
    extract(huu, nu_a, nu_a, CScalar(Scalar(2)), beta);
    extract(hmix, mu_a, nu_a, CScalar(Scalar(4)), chi);
}

// The two eigenvalues -chi +- sqrt(alpha beta) forced at a singular point.
inline std::pair<CScalar, CScalar> secondary_eigenvalues(const CScalar& chi, const CScalar& alpha,
                                                         const CScalar& beta) {
    CScalar prod = alpha * beta, root;
    if (!detail::csqrt_exact(prod, root)) {
        std::complex<double> z(prod.re.to_double(), prod.im.to_double());
        auto r = std::sqrt(z);
        root = CScalar(Scalar::flt(r.real()), Scalar::flt(r.imag()));
    }
    return {-chi + root, -chi - root};
}

// Affine Taylor coefficients t[i][j] of the locus near a point, in the chart
// centered there (first nonzero homogeneous coordinate normalized to 1).
inline void affine_expansion(const BiQuadratic& preal, const PPoint& pt, CScalar t[3][3]) {
    CBiForm p = complexify(preal);
    // substitute xi = xi0 + s*dir_xi, zeta = zeta0 + w*dir_zeta where dir is
    // the complementary coordinate direction of the normalized one
    int ix = pt.xi[0].is_zero() ? 1 : 0;    // index of the coordinate fixed at 1
    int iu = pt.zeta[0].is_zero() ? 1 : 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t[i][j] = CScalar(Scalar(0));
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j) {
            if (p.at(i, j).is_zero()) continue;
            // X^(2-i) Y^i factor: with xi = (xi0 + s e), powers in s by binomial
            // expansion around the point
            int ex[2] = {2 - i, i};  // exponents of X, Y
            int eu[2] = {2 - j, j};
            // coefficient of s^a: choose a factors from the varying coord
            for (int a = 0; a <= ex[1 - ix]; ++a) {
                // varying coordinate is the one not normalized; base value of
                // the varying coordinate is pt value
                // (X,Y) = pt + s * e_{1-ix}
                int var = 1 - ix;
                // binomial from the varying coordinate exponents, base^(e-a)
                long long bin = 1;
                for (int q = 0; q < a; ++q) bin = bin * (ex[var] - q) / (q + 1);
                CScalar cb = CScalar(Scalar(static_cast<long long>(bin)));
                CScalar base = pt.xi[var];
                CScalar powc = cb;
                for (int q = 0; q < ex[var] - a; ++q) powc *= base;
                // the fixed coordinate contributes pt.xi[ix]^ex[ix] = 1
                for (int b = 0; b <= eu[1 - iu]; ++b) {
                    int varu = 1 - iu;
                    long long binu = 1;
                    for (int q = 0; q < b; ++q) binu = binu * (eu[varu] - q) / (q + 1);
                    CScalar cu = CScalar(Scalar(static_cast<long long>(binu)));
                    CScalar baseu = pt.zeta[varu];
                    CScalar powu = cu;
                    for (int q = 0; q < eu[varu] - b; ++q) powu *= baseu;
                    t[a][b] += p.at(i, j) * powc * powu;
                }
            }
        }
}

// Classifies a singular point from chi/alpha/beta and the local expansion.
inline SingularPointInfo classify_singularity(const BiQuadratic& p, const PPoint& pt,
                                              const CScalar& chi, const CScalar& alpha,
                                              const CScalar& beta, double tol = 0) {
    SingularPointInfo info;
    info.point = pt;
    info.chi = chi;
    info.alpha = alpha;
    info.beta = beta;
    info.discriminant = CScalar(Scalar(4)) * chi * chi - alpha * beta;
    auto isz = [tol](const CScalar& z) {
        if (tol <= 0) return z.is_zero();
        return std::abs(z.re.to_double()) + std::abs(z.im.to_double()) <= tol;
    };

    CScalar t[3][3];
    affine_expansion(p, pt, t);
    if (!(isz(t[0][0]) && isz(t[1][0]) && isz(t[0][1]))) throw NotSingular();
    bool order2 = !(isz(t[2][0]) && isz(t[1][1]) && isz(t[0][2]));
    if (!order2) {
        info.order = 3;
        info.kind = SingKind::TriplePoint;
        return info;
    }
    info.order = 2;
    bool real_pt = pt.is_real();
    if (tol > 0) {
        real_pt = true;
        for (auto& z : pt.xi)
            if (std::abs(z.im.to_double()) > tol) real_pt = false;
        for (auto& z : pt.zeta)
            if (std::abs(z.im.to_double()) > tol) real_pt = false;
    }
    if (!real_pt) {
        info.kind = SingKind::NodeComplexPoint;
        if (isz(info.discriminant)) info.kind = SingKind::Cusp;
        return info;
    }
    int dsign;
    if (isz(info.discriminant)) dsign = 0;
    else if (std::abs(info.discriminant.im.to_double()) <= tol) dsign = info.discriminant.re.to_double() > 0 ? 1 : -1;
    else dsign = 0;
    if (dsign > 0) {
        info.kind = SingKind::NodeRealTangents;
        return info;
    }
    if (dsign < 0) {
        info.kind = SingKind::NodeIsolated;
        return info;
    }
    // dsign == 0: repeated tangent
    // repeated tangent: cusp, upgraded to tacnode when the cubic term also
    // vanishes along it
    CScalar s0, t0;
    if (!t[2][0].is_zero()) {
        s0 = -t[1][1];
        t0 = CScalar(Scalar(2)) * t[2][0];
    } else {
        s0 = CScalar(Scalar(2)) * t[0][2];
        t0 = -t[1][1];
    }
    // F'''(0)-type term: sum over i+j=3 of t[i][j] s0^i t0^j
    CScalar third;
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j) {
            if (i + j != 3) continue;
            CScalar term = t[i][j];
            for (int q = 0; q < i; ++q) term *= s0;
            for (int q = 0; q < j; ++q) term *= t0;
            third += term;
        }
    info.kind = isz(third) ? SingKind::Tacnode : SingKind::Cusp;
    return info;
}


// ---------------------------------------------------------------------------
// Factorization of the Ricci polynomial into spinor factors.

namespace detail {

// Binary forms in one variable pair, coefficients first-var-major:
// b[j] = coefficient of A^(d-j) B^j.
using BinForm = std::vector<CScalar>;

inline int bin_deg(const BinForm& f) { return static_cast<int>(f.size()) - 1; }
inline bool bin_zero(const BinForm& f) {
    for (auto& c : f)
        if (!c.is_zero()) return false;
    return true;
}
inline int ord_first(const BinForm& f) {
    // power of A dividing f: trailing zero count from the high-j end
    int d = bin_deg(f), k = 0;
    for (int j = d; j >= 0; --j)
        if (f[j].is_zero()) ++k;
        else break;
    return k;
}
inline int ord_second(const BinForm& f) {
    int k = 0;
    for (std::size_t j = 0; j < f.size(); ++j)
        if (f[j].is_zero()) ++k;
        else break;
    return k;
}
inline BinForm bin_mul(const BinForm& a, const BinForm& b) {
    BinForm r(a.size() + b.size() - 1, CScalar(Scalar(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Exact division of binary forms; throws on a nonzero remainder.
inline BinForm bin_div(const BinForm& a, const BinForm& b) {
    int da = bin_deg(a), db = bin_deg(b);
    if (da < db) throw std::logic_error("bin_div: degree mismatch");
    int topb = db;
    while (topb >= 0 && b[topb].is_zero()) --topb;
    if (topb < 0) throw std::logic_error("bin_div: zero divisor");
    int qa = da - db;
    BinForm q(qa + 1, CScalar(Scalar(0)));
    BinForm r = a;
    for (int j = da - (db - topb); j >= topb; --j) {
        int qj = j - topb;
        if (qj > qa || r[j].is_zero()) continue;
        CScalar f = r[j] / b[topb];
        q[qj] = f;
        for (int k = 0; k <= db; ++k) r[qj + k] -= f * b[k];
        r[j] = CScalar(Scalar(0));  // eliminated by construction
    }
    bool flt = false;
    double scale = 0;
    for (auto& c : a) {
        if (!c.re.is_exact() || !c.im.is_exact()) flt = true;
        scale = std::max(scale, std::abs(c.re.to_double()) + std::abs(c.im.to_double()));
    }
    for (auto& c : r) {
        if (c.is_zero()) continue;
        double mag = std::abs(c.re.to_double()) + std::abs(c.im.to_double());
        if (!flt || mag > 1e-9 * std::max(scale, 1.0))
            throw std::logic_error("bin_div: nonzero remainder");
    }
    return q;
}

inline BinForm bin_gcd(BinForm a, BinForm b) {
    if (bin_zero(a)) return b;
    if (bin_zero(b)) return a;
    int common_first = std::min(ord_first(a), ord_first(b));
    int common_second = std::min(ord_second(a), ord_second(b));
    auto strip = [](const BinForm& f) {
        int of = ord_first(f), os = ord_second(f);
        BinForm r(f.size() - of - os);
        for (std::size_t j = 0; j < r.size(); ++j) r[j] = f[j + os];
        return r;
    };
    auto deg = [](const BinForm& f) {
        for (int j = static_cast<int>(f.size()) - 1; j >= 0; --j)
            if (!f[j].is_zero()) return j;
        return -1;
    };
    // stripped parts are honest univariate polynomials in B/A with nonzero
    // constant terms; run Euclid there
    BinForm u = strip(a), v = strip(b);
    if (deg(u) < deg(v)) std::swap(u, v);
    while (deg(v) >= 1) {
        BinForm r = u;
        int du = deg(u), dv = deg(v);
        for (int j = du; j >= dv; --j) {
            if (r[j].is_zero()) continue;
            CScalar f = r[j] / v[dv];
            for (int k = 0; k <= dv; ++k) r[j - dv + k] -= f * v[k];
            r[j] = CScalar(Scalar(0));  // eliminated by construction
        }
        u = v;
        v = r;
    }
    BinForm g = bin_zero(v) ? u : BinForm{CScalar(Scalar(1))};
    int dg = deg(g);
    CScalar lead = g[dg];
    for (auto& c : g) c = c / lead;
    BinForm out(dg + 1 + common_first + common_second, CScalar(Scalar(0)));
    for (int j = 0; j <= dg; ++j) out[j + common_second] = g[j];
    return out;
}

// Linear factors of a binary form of degree <= 2, with exactness flag.
struct BinLinear {
    CScalar ca, cb;  // factor ca*A + cb*B
    bool exact = true;
};

inline std::vector<BinLinear> bin_linear_factors(const BinForm& f, CScalar& constant) {
    std::vector<BinLinear> out;
    int d = bin_deg(f);
    if (d == 0) {
        constant = f[0];
        return out;
    }
    if (d == 1) {
        constant = CScalar(Scalar(1));
        out.push_back({f[0], f[1], true});
        return out;
    }
    // quadratic c0 A^2 + c1 AB + c2 B^2
    const CScalar &c0 = f[0], &c1 = f[1], &c2 = f[2];
    if (c0.is_zero()) {
        // B * (c1 A + c2 B)
        constant = CScalar(Scalar(1));
        out.push_back({CScalar(Scalar(0)), CScalar(Scalar(1)), true});
        out.push_back({c1, c2, true});
        return out;
    }
    CScalar disc = c1 * c1 - CScalar(Scalar(4)) * c0 * c2, root;
    if (csqrt_exact(disc, root)) {
        CScalar two(Scalar(2));
        // c0 (A - r+ B)(A - r- B) with r = (-c1 +- root)/(2 c0) in B/A ...
        // as forms: (2c0 A + (c1 - root) B)(2c0 A + (c1 + root) B) / (4 c0)
        constant = CScalar(Scalar(1)) / (CScalar(Scalar(4)) * c0);
        out.push_back({two * c0, c1 - root, true});
        out.push_back({two * c0, c1 + root, true});
        return out;
    }
    std::complex<double> a(c0.re.to_double(), c0.im.to_double()),
        b(c1.re.to_double(), c1.im.to_double()), c(c2.re.to_double(), c2.im.to_double());
    auto r = std::sqrt(b * b - 4.0 * a * c);
    constant = CScalar(Scalar(1)) / (CScalar(Scalar(4)) * c0);
    out.push_back({CScalar(Scalar::flt(2 * a.real()), Scalar::flt(2 * a.imag())),
                   CScalar(Scalar::flt((b - r).real()), Scalar::flt((b - r).imag())), false});
    out.push_back({CScalar(Scalar::flt(2 * a.real()), Scalar::flt(2 * a.imag())),
                   CScalar(Scalar::flt((b + r).real()), Scalar::flt((b + r).imag())), false});
    return out;
}

}  // namespace detail

// A factor of the Ricci polynomial: bidegree, multiplicity, conjugate-pair
// marker. The payload is the exact contribution of the whole atom to the
// product (factor^multiplicity, or factor*conj(factor) for pairs), so the
// re-expanded product of payloads times the constant reproduces the input
// even when the displayed factor needed a field extension.
struct FactorAtom {
    int dx = 0, du = 0;
    int multiplicity = 1;
    bool conj_pair = false;  // factor together with its complex conjugate
    bool real_pair = false;  // two real factors conjugate over a real surd
    CBiForm factor;
    CBiForm payload;
    bool exact = true;
};

struct SpinorType {
    std::vector<FactorAtom> atoms;
    CScalar constant;
    std::string label;
};

namespace detail {

inline CBiForm biform_of_linear(const BinLinear& l, bool in_xy) {
    CBiForm f = in_xy ? CBiForm(1, 0) : CBiForm(0, 1);
    if (in_xy) {
        f.at(0, 0) = l.ca;
        f.at(1, 0) = l.cb;
    } else {
        f.at(0, 0) = l.ca;
        f.at(0, 1) = l.cb;
    }
    return f;
}

// divide a complex biform exactly by a (0,1) or (1,0) linear factor
inline CBiForm biform_div_linear(const CBiForm& p, const BinLinear& l, bool in_xy) {
    if (!in_xy) {
        CBiForm q(p.dx, p.du - 1);
        for (int i = 0; i <= p.dx; ++i) {
            BinForm row(p.du + 1);
            for (int j = 0; j <= p.du; ++j) row[j] = p.at(i, j);
            BinForm d = bin_div(row, BinForm{l.ca, l.cb});
            for (int j = 0; j <= p.du - 1; ++j) q.at(i, j) = d[j];
        }
        return q;
    }
    CBiForm q(p.dx - 1, p.du);
    for (int j = 0; j <= p.du; ++j) {
        BinForm col(p.dx + 1);
        for (int i = 0; i <= p.dx; ++i) col[i] = p.at(i, j);
        BinForm d = bin_div(col, BinForm{l.ca, l.cb});
        for (int i = 0; i <= p.dx - 1; ++i) q.at(i, j) = d[i];
    }
    return q;
}

inline bool linear_conjugates(const BinLinear& a, const BinLinear& b) {
    // same projective point after conjugating one of them?
    CScalar cross = a.ca * b.cb.conj() - a.cb * b.ca.conj();
    return cross.is_zero();
}
inline bool linear_proportional(const BinLinear& a, const BinLinear& b) {
    CScalar cross = a.ca * b.cb - a.cb * b.ca;
    return cross.is_zero();
}
inline bool linear_real_dir(const BinLinear& l) {
    CScalar cross = l.ca * l.cb.conj() - l.cb * l.ca.conj();
    return cross.is_zero();
}

}  // namespace detail

// All linear spinor factors of P over C, with multiplicities and conjugacy
// tags; the remainder has no linear factor. A (0,1) form divides P exactly
// when it divides the three binary forms attached to the X-monomials, so the
// content is their gcd; symmetrically for (1,0).
inline std::pair<std::vector<FactorAtom>, CBiForm> strip_linear_factors(const BiQuadratic& preal,
                                                                        CScalar& constant) {
    if (preal.is_zero()) throw ZeroPolynomial();
    CBiForm p = complexify(preal);
    constant = CScalar(Scalar(1));
    std::vector<FactorAtom> atoms;

    auto strip_side = [&](bool in_xy) {
        // rows of the other variable pair indexed by this pair's monomials
        int dthis = in_xy ? p.dx : p.du;
        int dother = in_xy ? p.du : p.dx;
        if (dthis == 0) return;
        detail::BinForm content;
        bool first = true;
        for (int o = 0; o <= dother; ++o) {
            detail::BinForm row(dthis + 1);
            for (int t = 0; t <= dthis; ++t) row[t] = in_xy ? p.at(t, o) : p.at(o, t);
            if (detail::bin_zero(row)) continue;
            content = first ? row : detail::bin_gcd(content, row);
            first = false;
        }
        if (first || detail::bin_deg(content) == 0) return;
        CScalar cfac;
        auto lins = detail::bin_linear_factors(content, cfac);
        // divide p by each linear factor; collect
        std::vector<detail::BinLinear> pending = lins;
        std::vector<std::pair<detail::BinLinear, int>> grouped;  // factor, mult
        for (auto& l : pending) {
            bool placed = false;
            for (auto& [g, m] : grouped)
                if (detail::linear_proportional(g, l)) {
                    ++m;
                    placed = true;
                    break;
                }
            if (!placed) grouped.push_back({l, 1});
        }
        // conjugate pairing among grouped factors
        std::vector<bool> used(grouped.size(), false);
        for (std::size_t i = 0; i < grouped.size(); ++i) {
            if (used[i]) continue;
            auto& [l, m] = grouped[i];
            CBiForm f = detail::biform_of_linear(l, in_xy);
            if (!detail::linear_real_dir(l)) {
                // find the conjugate partner
                std::size_t j = i + 1;
                for (; j < grouped.size(); ++j)
                    if (!used[j] && detail::linear_conjugates(l, grouped[j].first)) break;
                if (j < grouped.size()) {
                    used[j] = true;
                    FactorAtom atom;
                    atom.dx = in_xy ? 1 : 0;
                    atom.du = in_xy ? 0 : 1;
                    atom.multiplicity = m;
                    atom.conj_pair = true;
                    atom.factor = f;
                    CBiForm pay = f * detail::biform_of_linear(grouped[j].first, in_xy);
                    atom.payload = pay;
                    for (int q = 1; q < m; ++q) atom.payload = atom.payload * pay;
                    atom.exact = l.exact;
                    atoms.push_back(atom);
                    for (int q = 0; q < m; ++q) {
                        p = detail::biform_div_linear(p, l, in_xy);
                        p = detail::biform_div_linear(p, grouped[j].first, in_xy);
                    }
                    continue;
                }
            }
            FactorAtom atom;
            atom.dx = in_xy ? 1 : 0;
            atom.du = in_xy ? 0 : 1;
            atom.multiplicity = m;
            atom.factor = f;
            atom.payload = f;
            for (int q = 1; q < m; ++q) atom.payload = atom.payload * f;
            atom.exact = l.exact;
            atoms.push_back(atom);
            for (int q = 0; q < m; ++q) p = detail::biform_div_linear(p, l, in_xy);
        }
    };
    strip_side(false);  // (0,1) factors in U,V
    strip_side(true);   // (1,0) factors in X,Y
    return {atoms, p};
}

// Attempts to write a bidegree-(2,2) remainder with no linear factors as a
// product of two (1,1) forms: the UV-discriminant must be the square of a
// quadratic in (X, Y), possibly after a sign flip onto a conjugate pair.
inline bool split_11(const CBiForm& p, FactorAtom& out1, FactorAtom& out2, CScalar& constant) {
    if (p.dx != 2 || p.du != 2) return false;
    if (!is_real_form(p)) return false;
    auto coefquad = [&](int j) {
        detail::BinForm q(3);
        for (int i = 0; i <= 2; ++i) q[i] = p.at(i, j);
        return q;
    };
    detail::BinForm A = coefquad(0), B = coefquad(1), C = coefquad(2);
    detail::BinForm delta = detail::bin_mul(B, B);
    detail::BinForm ac = detail::bin_mul(A, C);
    for (int i = 0; i < 5; ++i) delta[i] -= CScalar(Scalar(4)) * ac[i];

    bool zero_delta = true;
    for (auto& c : delta)
        if (!c.is_zero()) zero_delta = false;

    // Factor extraction for a given square root D of the discriminant: the
    // factor is (2A U + (B - D) V) with its (X,Y) content removed.
    auto extract_factor = [&](const detail::BinForm& droot, CBiForm& f) {
        detail::BinForm twoA = A;
        for (auto& c : twoA) c = CScalar(Scalar(2)) * c;
        detail::BinForm bmd(3);
        for (int i = 0; i < 3; ++i) bmd[i] = B[i] - droot[i];
        bool a_zero = detail::bin_zero(twoA);
        if (a_zero) {
            // no U^2 coefficient: P = V (B U + C V) had a linear factor,
            // excluded by the precondition
            return false;
        }
        detail::BinForm content = detail::bin_gcd(twoA, bmd);
        if (detail::bin_deg(content) != 1) return false;
        detail::BinForm fa = detail::bin_div(twoA, content);
        detail::BinForm fb = detail::bin_div(bmd, content);
        if (detail::bin_deg(fa) != 1 || detail::bin_deg(fb) != 1) return false;
        f = CBiForm(1, 1);
        f.at(0, 0) = fa[0];
        f.at(1, 0) = fa[1];
        f.at(0, 1) = fb[0];
        f.at(1, 1) = fb[1];
        return true;
    };
    auto scale_against = [&](const CBiForm& prod, CScalar& c) {
        for (std::size_t i = 0; i < prod.c.size(); ++i)
            if (!prod.c[i].is_zero()) {
                c = p.c[i] / prod.c[i];
                return prod * c == p;
            }
        return false;
    };

    if (zero_delta) {
        CBiForm f1;
        detail::BinForm dz(3, CScalar(Scalar(0)));
        if (!extract_factor(dz, f1)) return false;
        CBiForm sq = f1 * f1;
        CScalar c;
        if (!scale_against(sq, c)) return false;
        out1 = FactorAtom{};
        out1.dx = out1.du = 1;
        out1.multiplicity = 2;
        out1.factor = f1;
        out1.payload = sq;
        out2 = FactorAtom{};
        out2.multiplicity = 0;
        constant = c;
        return true;
    }

    // Square-class analysis of the real quartic: delta = c * D0^2 for a real
    // monic quadratic D0 and real constant c. Multiple roots of delta are the
    // roots of gcd(delta, delta'), taking both partials to dodge roots at
    // infinity.
    auto formal_dB = [&](const detail::BinForm& f) {
        detail::BinForm d(f.size() - 1, CScalar(Scalar(0)));
        for (std::size_t j = 1; j < f.size(); ++j) d[j - 1] = f[j] * CScalar(Scalar((long long)j));
        return d;
    };
    auto formal_dA = [&](const detail::BinForm& f) {
        int deg = detail::bin_deg(f);
        detail::BinForm d(f.size() - 1, CScalar(Scalar(0)));
        for (int j = 0; j < deg; ++j) d[j] = f[j] * CScalar(Scalar((long long)(deg - j)));
        return d;
    };
    detail::BinForm dmult = detail::bin_gcd(delta, detail::bin_gcd(formal_dA(delta), formal_dB(delta)));
    detail::BinForm d0;
    int dg = detail::bin_deg(dmult);
    if (dg == 2) {
        d0 = dmult;
    } else if (dg == 3) {
        // quadruple root: peel down to the squarefree linear part
        detail::BinForm lin = dmult;
        while (detail::bin_deg(lin) > 1)
            lin = detail::bin_gcd(lin, detail::bin_gcd(formal_dA(lin), formal_dB(lin)));
        if (detail::bin_deg(lin) != 1) return false;
        d0 = detail::bin_mul(lin, lin);
    } else {
        return false;
    }
    detail::BinForm d0sq = detail::bin_mul(d0, d0);
    CScalar cconst;
    bool got = false;
    for (int i = 0; i < 5 && !got; ++i)
        if (!d0sq[i].is_zero()) {
            cconst = delta[i] / d0sq[i];
            got = true;
        }
    if (!got) return false;
    for (int i = 0; i < 5; ++i)
        if (!(delta[i] == cconst * d0sq[i])) return false;
    if (!cconst.im.is_zero()) return false;
    int csign = cconst.re.sign();

    Scalar root_abs;
    bool exact_root = cconst.re.abs().sqrt_exact(root_abs);
    if (exact_root) {
        CScalar rc = csign > 0 ? CScalar(root_abs) : CScalar(Scalar(0), root_abs);
        detail::BinForm droot(3);
        for (int i = 0; i < 3; ++i) droot[i] = rc * d0[i];
        CBiForm f1;
        if (!extract_factor(droot, f1)) return false;
        CBiForm f2;
        if (csign < 0) {
            f2 = conj(f1);
        } else {
            detail::BinForm droot2(3);
            for (int i = 0; i < 3; ++i) droot2[i] = -droot[i];
            if (!extract_factor(droot2, f2)) return false;
        }
        CBiForm prod = f1 * f2;
        CScalar c;
        if (!scale_against(prod, c)) return false;
        out1 = FactorAtom{};
        out1.dx = out1.du = 1;
        out1.factor = f1;
        out1.payload = f1;
        out2 = FactorAtom{};
        out2.dx = out2.du = 1;
        out2.factor = f2;
        out2.payload = f2;
        if (csign < 0) {
            out1.conj_pair = true;
            out1.payload = prod;
            out2.multiplicity = 0;
        }
        constant = c;
        return true;
    }
    // The split exists over a quadratic extension only: the label is decided
    // by the sign of the square class, the payload stays the whole remainder.
    out1 = FactorAtom{};
    out1.dx = out1.du = 1;
    out1.conj_pair = csign < 0;
    out1.real_pair = csign > 0;
    out1.exact = false;
    out1.payload = p;
    {
        // approximate representative factor for display
        double rc = std::sqrt(std::abs(cconst.re.to_double()));
        CBiForm f1(1, 1);
        detail::BinForm twoA = A;
        for (auto& c : twoA) c = CScalar(Scalar(2)) * c;
        detail::BinForm bmd(3);
        for (int i = 0; i < 3; ++i) {
            CScalar dterm = csign > 0 ? CScalar(Scalar::flt(rc * d0[i].re.to_double()))
                                      : CScalar(Scalar::flt(0.0), Scalar::flt(rc * d0[i].re.to_double()));
            bmd[i] = CScalar(Scalar::flt(B[i].re.to_double())) - dterm;
        }
        f1.at(0, 0) = CScalar(Scalar::flt(2 * A[0].re.to_double()));
        f1.at(1, 0) = CScalar(Scalar::flt(2 * A[1].re.to_double()));
        f1.at(0, 1) = bmd[0];
        f1.at(1, 1) = bmd[1];
        out1.factor = f1;
    }
    out2 = FactorAtom{};
    out2.multiplicity = 0;
    constant = CScalar(Scalar(1));
    return true;
}

namespace detail {

inline std::string spinor_label(const std::vector<FactorAtom>& atoms) {
    // sort: first-degree descending, then second-degree ascending; real atoms
    // before conjugate pairs before higher powers within a bidegree
    std::vector<const FactorAtom*> v;
    for (auto& a : atoms)
        if (a.multiplicity > 0) v.push_back(&a);
    std::stable_sort(v.begin(), v.end(), [](const FactorAtom* a, const FactorAtom* b) {
        if (a->dx != b->dx) return a->dx > b->dx;
        if (a->du != b->du) return a->du < b->du;
        if (a->conj_pair != b->conj_pair) return !a->conj_pair;
        return a->multiplicity < b->multiplicity;
    });
    std::string s;
    for (auto* a : v) {
        std::string base = "(" + std::to_string(a->dx) + "," + std::to_string(a->du) + ")";
        if (a->conj_pair) {
            for (int m = 0; m < a->multiplicity; ++m) s += base + "~" + base;
        } else if (a->real_pair) {
            for (int m = 0; m < a->multiplicity; ++m) s += base + base;
        } else if (a->multiplicity == 1) {
            s += base;
        } else {
            s += base + "^" + std::to_string(a->multiplicity);
        }
    }
    return s;
}

}  // namespace detail

// Complete factorization type of a nonzero Ricci polynomial. Linear factors
// come off first; a remaining bidegree-(2,2) part is split into (1,1) forms
// when its discriminant is a perfect square, and remainders of bidegree
// (2,1), (1,2), (1,1) or unsplit (2,2) are irreducible atoms.
inline SpinorType spinor_type(const BiQuadratic& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    SpinorType st;
    auto [atoms, rem] = strip_linear_factors(p, st.constant);
    st.atoms = std::move(atoms);
    // group equal real linear factors that appeared on both passes? (not
    // possible: different bidegrees) -- continue with the remainder.
    bool rem_const = rem.dx == 0 && rem.du == 0;
    if (rem_const) {
        st.constant = rem.at(0, 0);
    } else if (rem.dx == 2 && rem.du == 2) {
        FactorAtom a1, a2;
        CScalar c;
        if (split_11(rem, a1, a2, c)) {
            st.atoms.push_back(a1);
            if (a2.multiplicity > 0) st.atoms.push_back(a2);
            st.constant = c;
        } else {
            FactorAtom whole;
            whole.dx = whole.du = 2;
            whole.factor = rem;
            whole.payload = rem;
            st.atoms.push_back(whole);
            st.constant = CScalar(Scalar(1));
        }
    } else if ((rem.dx == 2 && rem.du == 0) || (rem.dx == 0 && rem.du == 2)) {
        // a one-sided quadratic remainder only survives the gcd pass under
        // float noise; every binary quadratic splits over C
        bool in_xy = rem.dx == 2;
        detail::BinForm q(3);
        for (int t = 0; t <= 2; ++t) q[t] = in_xy ? rem.at(t, 0) : rem.at(0, t);
        CScalar cfac;
        auto lins = detail::bin_linear_factors(q, cfac);
        if (lins.size() == 2) {
            bool conj = !detail::linear_real_dir(lins[0]) &&
                        detail::linear_conjugates(lins[0], lins[1]);
            FactorAtom a;
            a.dx = in_xy ? 1 : 0;
            a.du = in_xy ? 0 : 1;
            a.factor = detail::biform_of_linear(lins[0], in_xy);
            if (conj) {
                a.conj_pair = true;
                a.payload = rem;
                a.exact = lins[0].exact;
                st.atoms.push_back(a);
                st.constant = CScalar(Scalar(1));
            } else if (detail::linear_proportional(lins[0], lins[1])) {
                a.multiplicity = 2;
                a.payload = rem;
                a.exact = lins[0].exact;
                st.atoms.push_back(a);
                st.constant = CScalar(Scalar(1));
            } else {
                a.payload = a.factor;
                a.exact = lins[0].exact;
                FactorAtom b = a;
                b.factor = detail::biform_of_linear(lins[1], in_xy);
                b.payload = b.factor;
                b.exact = lins[1].exact;
                st.atoms.push_back(a);
                st.atoms.push_back(b);
                st.constant = cfac;
            }
        } else {
            FactorAtom whole;
            whole.dx = rem.dx;
            whole.du = rem.du;
            whole.factor = rem;
            whole.payload = rem;
            st.atoms.push_back(whole);
            st.constant = CScalar(Scalar(1));
        }
    } else {
        // (2,1), (1,2) or (1,1) remainder with no linear factor is irreducible
        FactorAtom whole;
        whole.dx = rem.dx;
        whole.du = rem.du;
        whole.factor = rem;
        whole.payload = rem;
        st.atoms.push_back(whole);
        st.constant = CScalar(Scalar(1));
    }
    st.label = detail::spinor_label(st.atoms);
    return st;
}

// Re-expansion of the factorization; equals the input exactly in exact mode.
inline CBiForm expand_spinor_type(const SpinorType& st) {
    CBiForm acc(0, 0);
    acc.at(0, 0) = st.constant;
    for (const auto& a : st.atoms) acc = acc * a.payload;
    return acc;
}

// ---------------------------------------------------------------------------
// The singular locus of the Ricci polynomial of a traceless self-adjoint
// endomorphism: eigen-derived singular points classified through the local
// data, totally null eigenplanes and degenerate null cones as singular curve
// components, and the intersections of repeated components with the rest.
inline SingularLocus singular_locus(const Mat4& endo, OType otype, const Context& ctx,
                                    MetricKind kind = MetricKind::PsiON) {
    if (!is_self_adjoint(endo, kind, ctx)) throw NotSelfAdjoint();
    Scalar tr = endo.trace();
    if (!tr.is_zero()) {
        if (ctx.mode == Mode::Exact || std::abs(tr.to_double()) > ctx.zero_tol) throw NotTraceless();
    }
    SingularLocus loc;
    BiQuadratic p = ricci_polynomial(covariant_psion(endo, kind), otype);
    if (p.is_zero()) {
        loc.everything_singular = true;
        return loc;
    }
    NullEigenData nd = null_eigenvectors(endo, ctx, kind);

    auto transform_point = [&](const PPoint& q) {
        // the O-type substitution acts on points contravariantly: the
        // polynomial was transformed, so eigen-derived points must be mapped
        // into the same chart. Solve sigma(point') = point.
        PPoint r = q;
        CScalar X = q.xi[0], Y = q.xi[1], U = q.zeta[0], V = q.zeta[1];
        switch (otype) {
            case OType::PP: break;
            case OType::MM:
                // substitution X->-Y, Y->-X, U->-V, V->-U is an involution
                r.xi = normalize_proj({-Y, -X});
                r.zeta = normalize_proj({-V, -U});
                break;
            case OType::MP:
                r.xi = normalize_proj({U, V});
                r.zeta = normalize_proj({X, Y});
                break;
            case OType::PM:
                r.xi = normalize_proj({-V, -U});
                r.zeta = normalize_proj({-Y, -X});
                break;
        }
        return r;
    };

    if (nd.whole_space) {
        loc.everything_singular = true;
        return loc;
    }
    double ptol = 0;
    if (ctx.mode == Mode::Float) {
        // points at k-fold eigenvalues carry coordinate error on the order of
        // eps^(1/k); the local data tolerance must absorb that
        double scale = 0;
        for (auto& cc : p.c) scale = std::max(scale, std::abs(cc.to_double()));
        ptol = std::sqrt(ctx.cluster_tol) * std::max(scale, 1.0);
    }
    for (auto& np : nd.points) {
        PPoint q = transform_point(np.pt);
        CScalar chi, alpha, beta;
        if (!q.exact && ctx.mode == Mode::Exact) {
            SingularPointInfo info;
            info.point = q;
            info.note = "approximate point; local data skipped";
            loc.points.push_back(info);
            continue;
        }
        try {
            double_point_data(p, q, chi, alpha, beta, ptol);
            if (!(chi == np.eigenvalue)) {
                double diff = std::abs((chi - np.eigenvalue).re.to_double()) +
                              std::abs((chi - np.eigenvalue).im.to_double());
                if (diff > std::max(ptol, 1e-7))
                    throw InconsistentData(
                        "second-derivative eigenvalue disagrees with the spectrum");
            }
            loc.points.push_back(classify_singularity(p, q, chi, alpha, beta, ptol));
        } catch (const NotSingular&) {
            if (ctx.mode == Mode::Exact) throw;
            throw IllConditioned("singular point data is below float resolution");
        } catch (const InconsistentData&) {
            if (ctx.mode == Mode::Exact) throw;
            throw IllConditioned("singular point data is below float resolution");
        }
    }
    for (auto& line : nd.lines) {
        CurveComponent c = line;
        if (line.shape == CurveComponent::Shape::XiFixed) {
            PPoint q;
            q.xi = line.fixed;
            q.zeta = {CScalar(Scalar(1)), CScalar(Scalar(0))};
            q = transform_point(q);
            // the image line may have the other orientation under MP/PM
            if (otype == OType::MP || otype == OType::PM) {
                c.shape = CurveComponent::Shape::ZetaFixed;
                c.fixed = q.zeta;
            } else {
                c.fixed = q.xi;
            }
        } else if (line.shape == CurveComponent::Shape::ZetaFixed) {
            PPoint q;
            q.xi = {CScalar(Scalar(1)), CScalar(Scalar(0))};
            q.zeta = line.fixed;
            q = transform_point(q);
            if (otype == OType::MP || otype == OType::PM) {
                c.shape = CurveComponent::Shape::XiFixed;
                c.fixed = q.xi;
            } else {
                c.fixed = q.zeta;
            }
        } else {
            c.form11 = apply_otype(line.form11, otype);
        }
        bool real = true;
        if (c.shape != CurveComponent::Shape::Diagonal)
            for (auto& z : c.fixed)
                if (!z.im.is_zero()) real = false;
        c.real = real;
        loc.curves.push_back(c);
    }

    // Repeated factor components are singular along their whole length; their
    // intersections with other components are tacnodes that need not be
    // eigen-derived. Exact mode only: a float factorization is too fuzzy to
    // intersect reliably.
    if (ctx.mode != Mode::Exact) return loc;
    try {
        SpinorType st = spinor_type(p);
        for (const auto& a : st.atoms) {
            if (a.multiplicity < 2 || a.conj_pair) continue;
            if (a.dx + a.du != 1 && !(a.dx == 1 && a.du == 1)) continue;
            for (const auto& b : st.atoms) {
                if (&a == &b) continue;
                // intersect the doubled component with component b
                std::vector<PPoint> hits;
                if (a.dx == 0 && a.du == 1) {
                    CSpinVec zfix = normalize_proj({a.factor.at(0, 1), -a.factor.at(0, 0)});
                    // restrict b to zeta = zfix: binary form in xi
                    detail::BinForm g(b.factor.dx + 1);
                    for (int i = 0; i <= b.factor.dx; ++i) {
                        CScalar acc;
                        for (int j = 0; j <= b.factor.du; ++j) {
                            CScalar term = b.factor.at(i, j);
                            for (int q2 = 0; q2 < b.factor.du - j; ++q2) term *= zfix[0];
                            for (int q2 = 0; q2 < j; ++q2) term *= zfix[1];
                            acc += term;
                        }
                        g[i] = acc;
                    }
                    if (detail::bin_zero(g)) continue;
                    CScalar cfac;
                    for (auto& l : detail::bin_linear_factors(g, cfac)) {
                        PPoint q;
                        q.xi = normalize_proj({l.cb, -l.ca});
                        q.zeta = zfix;
                        q.exact = l.exact;
                        hits.push_back(q);
                    }
                } else if (a.dx == 1 && a.du == 0) {
                    CSpinVec xfix = normalize_proj({a.factor.at(1, 0), -a.factor.at(0, 0)});
                    detail::BinForm g(b.factor.du + 1);
                    for (int j = 0; j <= b.factor.du; ++j) {
                        CScalar acc;
                        for (int i = 0; i <= b.factor.dx; ++i) {
                            CScalar term = b.factor.at(i, j);
                            for (int q2 = 0; q2 < b.factor.dx - i; ++q2) term *= xfix[0];
                            for (int q2 = 0; q2 < i; ++q2) term *= xfix[1];
                            acc += term;
                        }
                        g[j] = acc;
                    }
                    if (detail::bin_zero(g)) continue;
                    CScalar cfac;
                    for (auto& l : detail::bin_linear_factors(g, cfac)) {
                        PPoint q;
                        q.xi = xfix;
                        q.zeta = normalize_proj({l.cb, -l.ca});
                        q.exact = l.exact;
                        hits.push_back(q);
                    }
                }
                // the locus is closed under conjugation: a conjugate-pair
                // component contributes the partner intersections as well
                if (b.conj_pair) {
                    std::vector<PPoint> conj_hits;
                    for (auto& q : hits) conj_hits.push_back(q.conj());
                    hits.insert(hits.end(), conj_hits.begin(), conj_hits.end());
                }
                for (auto& q : hits) {
                    bool known = false;
                    for (auto& existing : loc.points)
                        if (existing.point == q) known = true;
                    if (known) continue;
                    SingularPointInfo info;
                    info.point = q;
                    info.kind = SingKind::Tacnode;
                    info.order = 2;
                    info.from_eigenvector = false;
                    info.note = "intersection of a doubled component with another component";
                    loc.points.push_back(info);
                }
            }
        }
    } catch (const ZeroPolynomial&) {
    }
    return loc;
}


}  // namespace ricci22
