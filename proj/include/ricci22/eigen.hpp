#pragma once

#include <complex>
#include <string>
#include <vector>

#include "metric.hpp"

namespace ricci22 {

// One eigenvalue of a real 4x4 matrix. Real rational and float eigenvalues
// are carried as Scalar; irrational real ones as minimal polynomial plus
// isolating interval; a complex conjugate pair is reported once, with the
// member in the upper half plane.
struct EigenValue {
    enum class Kind { Real, AlgebraicRealRoot, ComplexPair };
    Kind kind = Kind::Real;

    Scalar real;             // Kind::Real
    AlgebraicReal algebraic; // Kind::AlgebraicRealRoot
    CScalar complex_value;   // Kind::ComplexPair; exact when representable
    bool complex_exact = false;
    bool has_pair_data = false;  // quadratic minimal polynomial data below
    Rat pair_re, pair_im_sq;
    Poly minpoly;  // nontrivial for AlgebraicRealRoot and exact ComplexPair

    double approx_re = 0, approx_im = 0;

    bool is_real() const { return kind != Kind::ComplexPair; }
    std::string to_string() const {
        switch (kind) {
            case Kind::Real: return real.to_string();
            case Kind::AlgebraicRealRoot:
                return "root(" + algebraic.minpoly().to_string() + " in (" +
                       algebraic.lo().to_string() + "," + algebraic.hi().to_string() + "))";
            case Kind::ComplexPair: return complex_value.to_string();
        }
        return "?";
    }
};

struct EigenRecord {
    EigenValue value;
    int alg_mult = 0;
    int geom_mult = 0;
    std::vector<int> jordan_blocks;  // descending
    std::vector<CVec4> eigenspace_basis;
    // Signature (p, q, r) of the metric restricted to the real eigenspace;
    // complex pairs carry the radical dimension r only.
    int sig_p = 0, sig_q = 0, sig_r = 0;
};

namespace detail {

inline Mat<Scalar> poly_at_matrix(const Poly& p, const Mat<Scalar>& m) {
    int n = m.rows();
    Mat<Scalar> acc(n, n);
    bool flt = !is_exact_mode(m);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * m;
        if (!p[i].is_zero())
            for (int d = 0; d < n; ++d)
                acc(d, d) += flt ? Scalar::flt(p[i].to_double()) : Scalar(p[i]);
    }
    return acc;
}

// Signature (p, q, r) of a symmetric bilinear form given by its matrix, over
// any field equipped with a sign functional and a zero test.
template <class F, class SignFn, class ZeroFn>
void signature_of_z(Mat<F> b, const SignFn& sgn, const ZeroFn& zero, int& pos, int& neg,
                    int& rad) {
    pos = neg = rad = 0;
    int n = b.rows();
    std::vector<int> live(n);
    for (int i = 0; i < n; ++i) live[i] = i;
    while (!live.empty()) {
        int k = static_cast<int>(live.size());
        int diag = -1;
        for (int i = 0; i < k && diag < 0; ++i)
            if (!zero(b(live[i], live[i]))) diag = i;
        if (diag < 0) {
            int oi = -1, oj = -1;
            for (int i = 0; i < k && oi < 0; ++i)
                for (int j = i + 1; j < k; ++j)
                    if (!zero(b(live[i], live[j]))) {
                        oi = i;
                        oj = j;
                        break;
                    }
            if (oi < 0) {
                rad += k;
                return;
            }
            // Mix basis vector oj into oi so the diagonal entry becomes nonzero.
            int I = live[oi], J = live[oj];
            for (int c = 0; c < n; ++c) b(I, c) += b(J, c);
            for (int r = 0; r < n; ++r) b(r, I) += b(r, J);
            diag = oi;
        }
        int I = live[diag];
        int s = sgn(b(I, I));
        if (s > 0) ++pos;
        else ++neg;
        // Eliminate against the chosen vector.
        for (int r = 0; r < n; ++r) {
            if (r == I || b(r, I).is_zero()) continue;
            F f = b(r, I) / b(I, I);
            for (int c = 0; c < n; ++c) b(r, c) -= f * b(I, c);
        }
        for (int c = 0; c < n; ++c) {
            if (c == I || b(I, c).is_zero()) continue;
            F f = b(I, c) / b(I, I);
            for (int r = 0; r < n; ++r) b(r, c) -= f * b(r, I);
        }
        live.erase(live.begin() + diag);
    }
}

template <class F, class SignFn>
void signature_of(const Mat<F>& b, const SignFn& sgn, int& pos, int& neg, int& rad) {
    signature_of_z(b, sgn, [](const F& x) { return x.is_zero(); }, pos, neg, rad);
}

inline Mat<Scalar> restricted_gram(const std::vector<Vec4>& basis, MetricKind kind) {
    int n = static_cast<int>(basis.size());
    Mat<Scalar> b(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b(i, j) = inner(basis[i], basis[j], kind);
    return b;
}

// Durand-Kerner roots of a monic polynomial with double coefficients.
inline std::vector<std::complex<double>> roots_monic(const std::vector<double>& c) {
    int n = static_cast<int>(c.size()) - 1;
    std::vector<std::complex<double>> z(n);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> acc(1, 0);
    for (int i = 0; i < n; ++i) {
        acc *= seed;
        z[i] = acc;
    }
    auto eval = [&](std::complex<double> x) {
        std::complex<double> v = 0;
        for (int i = n; i >= 0; --i) v = v * x + c[i];
        return v;
    };
    for (int it = 0; it < 400; ++it) {
        double moved = 0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> d(1, 0);
            for (int j = 0; j < n; ++j)
                if (j != i) d *= z[i] - z[j];
            std::complex<double> step = eval(z[i]) / d;
            z[i] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-15) break;
    }
    return z;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Exact eigenstructure.

inline std::vector<EigenRecord> eigen_structure_exact(const Mat4& m, MetricKind kind) {
    Poly chi = char_poly_exact(m);
    auto factors = factor_over_q(chi);
    bool entries_rational = true;
    for (int i = 0; i < 4 && entries_rational; ++i)
        for (int j = 0; j < 4; ++j)
            if (!m(i, j).is_rational()) {
                entries_rational = false;
                break;
            }

    std::vector<EigenRecord> out;
    for (const auto& fac : factors) {
        const Poly& q = fac.poly;
        int mult = fac.multiplicity, deg = q.degree();

        // Jordan data per root of this factor from ranks of q(M)^k.
        std::vector<int> ranks{4};
        Mat4 qm = detail::poly_at_matrix(q, m);
        Mat4 pw = qm;
        for (int k = 1; k <= mult; ++k) {
            ranks.push_back(rank_exact(pw));
            if (k < mult) pw = pw * qm;
        }
        std::vector<int> blocks;  // per individual root
        std::vector<int> cge(mult + 2, 0);
        for (int k = 1; k <= mult; ++k) cge[k] = (ranks[k - 1] - ranks[k]) / deg;
        for (int k = mult; k >= 1; --k)
            for (int c = 0; c < cge[k] - cge[k + 1]; ++c) blocks.push_back(k);
        std::sort(blocks.rbegin(), blocks.rend());
        int geom = cge[1];

        auto real_record = [&](EigenValue val) {
            EigenRecord rec;
            rec.value = std::move(val);
            rec.alg_mult = mult;
            rec.geom_mult = geom;
            rec.jordan_blocks = blocks;
            return rec;
        };

        if (deg == 1) {
            Rat lam = -q[0];
            EigenValue val;
            val.kind = EigenValue::Kind::Real;
            val.real = Scalar(lam);
            val.minpoly = q;
            val.approx_re = lam.to_double();
            EigenRecord rec = real_record(val);
            Mat4 shifted = m;
            for (int d = 0; d < 4; ++d) shifted(d, d) -= Scalar(lam);
            auto basis = kernel_basis(shifted, Scalar(1), ExactZeroPolicy{});
            std::vector<Vec4> rbasis;
            for (auto& v : basis) {
                rbasis.push_back(v);
                CVec4 cv;
                for (auto& x : v) cv.push_back(CScalar(x));
                rec.eigenspace_basis.push_back(cv);
            }
            detail::signature_of(detail::restricted_gram(rbasis, kind),
                                 [](const Scalar& s) { return s.sign(); }, rec.sig_p, rec.sig_q,
                                 rec.sig_r);
            out.push_back(std::move(rec));
            continue;
        }

        auto ivs = isolate_real_roots(q);
        int n_real = static_cast<int>(ivs.size());
        int n_pairs = (deg - n_real) / 2;

        for (auto& iv : ivs) {
            AlgebraicReal root(q, iv.lo, iv.hi);
            EigenValue val;
            val.kind = EigenValue::Kind::AlgebraicRealRoot;
            val.algebraic = root;
            val.minpoly = q;
            val.approx_re = root.to_double();
            EigenRecord rec = real_record(val);
            if (entries_rational) {
                auto mod = std::make_shared<const Poly>(q);
                PolyMod one = PolyMod::constant(Rat(1), mod);
                Mat<PolyMod> shifted(4, 4);
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 4; ++j) {
                        shifted(i, j) = PolyMod::constant(m(i, j).rat(), mod);
                        if (i == j) shifted(i, j) = shifted(i, j) - PolyMod::generator(mod);
                    }
                auto basis = kernel_basis(shifted, one, ExactZeroPolicy{});
                int n = static_cast<int>(basis.size());
                // Restricted Gram over Q[t]/(q); signs decided at this root.
                Mat<PolyMod> b(n, n);
                Mat4 g = gram(kind);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        PolyMod acc;
                        for (int k = 0; k < 4; ++k) {
                            if (g(k, k).is_zero() && kind == MetricKind::PsiON) continue;
                            for (int l = 0; l < 4; ++l) {
                                if (g(k, l).is_zero()) continue;
                                acc = acc + PolyMod::constant(g(k, l).rat(), mod) * basis[i][k] * basis[j][l];
                            }
                        }
                        b(i, j) = acc;
                    }
                detail::signature_of(b, [&](const PolyMod& x) { return root.sign_of(x.rep()); },
                                     rec.sig_p, rec.sig_q, rec.sig_r);
                // Numeric image of the kernel vectors; all decisions above
                // were made exactly.
                root.refine_below(Rat(1, 1000000000));
                double at = root.to_double();
                for (auto& v : basis) {
                    CVec4 cv;
                    for (auto& x : v) cv.push_back(CScalar(Scalar::flt(x.rep().eval_d(at))));
                    rec.eigenspace_basis.push_back(cv);
                }
            } else {
                throw NonRationalInput(
                    "irrational eigenvalues of a matrix with irrational entries are unsupported");
            }
            out.push_back(std::move(rec));
        }

        if (n_pairs > 0 && deg == 2) {
            EigenValue val;
            val.kind = EigenValue::Kind::ComplexPair;
            val.has_pair_data = true;
            val.pair_re = -q[1] / Rat(2);
            val.pair_im_sq = q[0] - q[1] * q[1] / Rat(4);
            val.minpoly = q;
            Scalar im_exact;
            val.complex_exact = Scalar(val.pair_im_sq).sqrt_exact(im_exact);
            if (val.complex_exact) val.complex_value = CScalar(Scalar(val.pair_re), im_exact);
            else
                val.complex_value =
                    CScalar(Scalar::flt(val.pair_re.to_double()),
                            Scalar::flt(std::sqrt(val.pair_im_sq.to_double())));
            val.approx_re = val.pair_re.to_double();
            val.approx_im = std::sqrt(val.pair_im_sq.to_double());
            EigenRecord rec = real_record(val);
            // Radical dimension of the complex eigenspace. With W = ker q(M)
            // over R and K = M - re, a complex eigenvector is u - (i/b) K u;
            // vanishing of the complex products against all of W is the pair
            // of rational conditions below.
            if (entries_rational) {
                Mat4 qm1 = detail::poly_at_matrix(q, m);
                auto wbasis = kernel_basis(qm1, Scalar(1), ExactZeroPolicy{});
                int n = static_cast<int>(wbasis.size());
                Mat4 kmat = m;
                for (int d = 0; d < 4; ++d) kmat(d, d) -= Scalar(val.pair_re);
                Scalar b2 = Scalar(val.pair_im_sq);
                Mat<Scalar> stacked(2 * n, n);
                for (int i = 0; i < n; ++i) {
                    Vec4 ki = kmat.apply(wbasis[i]);
                    for (int j = 0; j < n; ++j) {
                        Vec4 kj = kmat.apply(wbasis[j]);
                        Scalar a = inner(wbasis[i], wbasis[j], kind) -
                                   inner(ki, kj, kind) / b2;
                        Scalar c = inner(ki, wbasis[j], kind) + inner(wbasis[i], kj, kind);
                        stacked(i, j) = a;
                        stacked(n + i, j) = c;
                    }
                }
                int rk = rank_exact(stacked);
                rec.sig_r = (n - rk) / 2;
                // Complex eigenbasis when the imaginary part is representable:
                // u - (i/b) K u for real u, kept while complex rank grows.
                if (val.complex_exact) {
                    Scalar b = im_exact;
                    std::vector<CVec4> chosen;
                    for (auto& u : wbasis) {
                        Vec4 ku = kmat.apply(u);
                        CVec4 w(4);
                        for (int d = 0; d < 4; ++d) w[d] = CScalar(u[d], -(ku[d] / b));
                        Mat<CScalar> span(static_cast<int>(chosen.size()) + 1, 4);
                        for (std::size_t r = 0; r < chosen.size(); ++r)
                            for (int c = 0; c < 4; ++c) span(static_cast<int>(r), c) = chosen[r][c];
                        for (int c = 0; c < 4; ++c) span(static_cast<int>(chosen.size()), c) = w[c];
                        if (rank_exact(span) == static_cast<int>(chosen.size()) + 1)
                            chosen.push_back(w);
                        if (static_cast<int>(chosen.size()) * 2 == n) break;
                    }
                    rec.eigenspace_basis = std::move(chosen);
                }
            }
            out.push_back(std::move(rec));
        } else if (n_pairs > 0) {
            // Irreducible cubic or quartic factor: multiplicity is 1.
            auto approx = detail::roots_monic([&] {
                std::vector<double> c(deg + 1);
                for (int i = 0; i <= deg; ++i) c[i] = q[i].to_double();
                return c;
            }());
            std::vector<std::complex<double>> ups;
            for (auto& z : approx)
                if (z.imag() > 1e-9) ups.push_back(z);
            std::sort(ups.begin(), ups.end(),
                      [](auto a, auto b) { return a.real() < b.real(); });
            for (int pi = 0; pi < n_pairs && pi < static_cast<int>(ups.size()); ++pi) {
                EigenValue val;
                val.kind = EigenValue::Kind::ComplexPair;
                val.minpoly = q;
                val.complex_exact = false;
                val.complex_value = CScalar(Scalar::flt(ups[pi].real()), Scalar::flt(ups[pi].imag()));
                val.approx_re = ups[pi].real();
                val.approx_im = ups[pi].imag();
                EigenRecord rec = real_record(val);
                rec.sig_r = 0;  // simple eigenvalue of the factor: nondegenerate
                out.push_back(std::move(rec));
            }
        }
    }

    // Order: real eigenvalues ascending, then pairs by (re, im).
    std::sort(out.begin(), out.end(), [](const EigenRecord& a, const EigenRecord& b) {
        bool ra = a.value.is_real(), rb = b.value.is_real();
        if (ra != rb) return ra;
        if (ra) {
            const EigenValue &x = a.value, &y = b.value;
            if (x.kind == EigenValue::Kind::Real && y.kind == EigenValue::Kind::Real)
                return x.real < y.real;
            if (x.kind == EigenValue::Kind::Real) return y.algebraic.compare(x.real.rat()) > 0;
            if (y.kind == EigenValue::Kind::Real) return x.algebraic.compare(y.real.rat()) < 0;
            return x.algebraic.compare(y.algebraic) < 0;
        }
        if (a.value.approx_re != b.value.approx_re) return a.value.approx_re < b.value.approx_re;
        return a.value.approx_im < b.value.approx_im;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Float eigenstructure: clustered roots, tolerance-based rank decisions.

inline std::vector<EigenRecord> eigen_structure_float(const Mat4& m_in, const Context& ctx,
                                                      MetricKind kind) {
    Mat4 m = to_float(m_in);
    auto coeff = char_poly_float(m);
    auto roots = detail::roots_monic(coeff);
    double ctol = ctx.cluster_tol;
    for (auto& z : roots)
        if (std::abs(z.imag()) <= ctol) z = {z.real(), 0.0};

    std::vector<int> cluster(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) cluster[i] = static_cast<int>(i);
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (std::abs(roots[i] - roots[j]) <= ctol) {
                int a = cluster[i], b = cluster[j];
                for (auto& c : cluster)
                    if (c == b) c = a;
            }

    std::vector<EigenRecord> out;
    std::vector<int> seen;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (std::find(seen.begin(), seen.end(), cluster[i]) != seen.end()) continue;
        seen.push_back(cluster[i]);
        std::complex<double> sum = 0;
        int count = 0;
        for (std::size_t j = 0; j < roots.size(); ++j)
            if (cluster[j] == cluster[i]) {
                sum += roots[j];
                ++count;
            }
        std::complex<double> lam = sum / static_cast<double>(count);
        if (lam.imag() < -ctol) continue;  // pairs reported once
        bool is_pair = lam.imag() > ctol;

        EigenRecord rec;
        rec.alg_mult = count;
        FloatZeroPolicy zp{ctx.zero_tol};
        if (is_pair) {
            CMat4 shifted(4, 4);
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) {
                    shifted(r, c) = CScalar(m(r, c));
                    if (r == c)
                        shifted(r, c) -= CScalar(Scalar::flt(lam.real()), Scalar::flt(lam.imag()));
                }
            std::vector<int> ranks{4};
            CMat4 pw = shifted;
            double sc = std::max(1.0, detail::matrix_scale(shifted)), sck = sc;
            for (int k = 1; k <= count; ++k) {
                ranks.push_back(rank_scaled(pw, zp, sck));
                if (k < count) {
                    pw = pw * shifted;
                    sck *= sc;
                }
            }
            rec.geom_mult = 4 - ranks[1];
            std::vector<int> cge(count + 2, 0);
            for (int k = 1; k <= count; ++k) cge[k] = ranks[k - 1] - ranks[k];
            for (int k = count; k >= 1; --k)
                for (int c = 0; c < cge[k] - cge[k + 1]; ++c) rec.jordan_blocks.push_back(k);
            std::sort(rec.jordan_blocks.rbegin(), rec.jordan_blocks.rend());
            rec.value.kind = EigenValue::Kind::ComplexPair;
            rec.value.complex_value = CScalar(Scalar::flt(lam.real()), Scalar::flt(lam.imag()));
            rec.value.approx_re = lam.real();
            rec.value.approx_im = lam.imag();
            auto basis = kernel_basis(shifted, CScalar(Scalar::flt(1.0)), zp);
            // Radical of the complex eigenspace under the bilinear product.
            int n = static_cast<int>(basis.size());
            Mat<CScalar> bgram(n, n);
            Mat4 g = gram(kind);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    CScalar acc;
                    for (int k = 0; k < 4; ++k)
                        for (int l = 0; l < 4; ++l) {
                            if (g(k, l).is_zero()) continue;
                            acc += CScalar(g(k, l)) * basis[i][k] * basis[j][l];
                        }
                    bgram(i, j) = acc;
                }
            rec.sig_r = n - rank_of(bgram, zp);
            rec.eigenspace_basis = basis;
        } else {
            Mat4 shifted = m;
            for (int d = 0; d < 4; ++d) shifted(d, d) -= Scalar::flt(lam.real());
            std::vector<int> ranks{4};
            Mat4 pw = shifted;
            double sc = std::max(1.0, detail::matrix_scale(shifted)), sck = sc;
            for (int k = 1; k <= count; ++k) {
                ranks.push_back(rank_scaled(pw, zp, sck));
                if (k < count) {
                    pw = pw * shifted;
                    sck *= sc;
                }
            }
            rec.geom_mult = 4 - ranks[1];
            std::vector<int> cge(count + 2, 0);
            for (int k = 1; k <= count; ++k) cge[k] = ranks[k - 1] - ranks[k];
            for (int k = count; k >= 1; --k)
                for (int c = 0; c < cge[k] - cge[k + 1]; ++c) rec.jordan_blocks.push_back(k);
            std::sort(rec.jordan_blocks.rbegin(), rec.jordan_blocks.rend());
            rec.value.kind = EigenValue::Kind::Real;
            rec.value.real = Scalar::flt(lam.real());
            rec.value.approx_re = lam.real();
            auto basis = kernel_basis(shifted, Scalar::flt(1.0), zp);
            std::vector<Vec4> rbasis = basis;
            double scale = 0;
            Mat<Scalar> bg = detail::restricted_gram(rbasis, kind);
            for (int i = 0; i < bg.rows(); ++i)
                for (int j = 0; j < bg.cols(); ++j) scale = std::max(scale, std::abs(bg(i, j).to_double()));
            double tol = ctx.zero_tol * std::max(scale, 1.0);
            detail::signature_of_z(bg, [](const Scalar& s) { return s.to_double() > 0 ? 1 : -1; },
                                   [tol](const Scalar& s) { return std::abs(s.to_double()) <= tol; },
                                   rec.sig_p, rec.sig_q, rec.sig_r);
            for (auto& v : basis) {
                CVec4 cv;
                for (auto& x : v) cv.push_back(CScalar(x));
                rec.eigenspace_basis.push_back(cv);
            }
        }
        out.push_back(std::move(rec));
    }
    std::sort(out.begin(), out.end(), [](const EigenRecord& a, const EigenRecord& b) {
        bool ra = a.value.is_real(), rb = b.value.is_real();
        if (ra != rb) return ra;
        if (a.value.approx_re != b.value.approx_re) return a.value.approx_re < b.value.approx_re;
        return a.value.approx_im < b.value.approx_im;
    });
    return out;
}

inline std::vector<EigenRecord> eigen_structure(const Mat4& m, const Context& ctx,
                                                MetricKind kind = MetricKind::PsiON) {
    check_mode(m, ctx);
    if (ctx.mode == Mode::Exact) return eigen_structure_exact(m, kind);
    return eigen_structure_float(m, ctx, kind);
}

}  // namespace ricci22
