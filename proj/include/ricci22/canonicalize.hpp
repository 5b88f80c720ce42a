#pragma once

#include <numeric>

#include "classify.hpp"

namespace ricci22 {

struct CanonicalForm {
    std::array<Vec4, 4> basis;  // columns, in the coordinates of the input
    Mat4 canonical;             // matrix of the input with respect to basis
    MetricKind canonical_kind = MetricKind::PsiON;
    Classification cls;
};

namespace detail {

struct CanonCtx {
    const Mat4& m;
    MetricKind kind;
    Context ctx;

    bool isz(const Scalar& s) const {
        if (ctx.mode == Mode::Exact) return s.is_zero();
        return std::abs(s.to_double()) <= ctx.zero_tol;
    }
    Scalar sqrt_or_throw(const Scalar& s) const {
        Scalar r;
        if (ctx.mode == Mode::Float) {
            if (s.to_double() < 0) throw NotCanonicalizable("negative scale");
            return Scalar::flt(std::sqrt(s.to_double()));
        }
        if (!s.sqrt_exact(r))
            throw NotCanonicalizable("normalization needs a square root outside Q(sqrt 2)");
        return r;
    }
    Scalar ip(const Vec4& a, const Vec4& b) const { return inner(a, b, kind); }
    std::vector<Vec4> kernel4(const Mat4& a) const {
        if (ctx.mode == Mode::Exact) return kernel_basis(a, Scalar(1), ExactZeroPolicy{});
        return kernel_basis(a, Scalar::flt(1.0), FloatZeroPolicy{ctx.zero_tol});
    }
};

inline Vec4 axpy(const Vec4& x, const Scalar& a, const Vec4& y) {
    Vec4 r = x;
    for (int i = 0; i < 4; ++i) r[i] += a * y[i];
    return r;
}
inline Vec4 vscale(const Vec4& x, const Scalar& a) {
    Vec4 r = x;
    for (auto& v : r) v *= a;
    return r;
}

// Enumerates primitive integer combinations of the basis by increasing
// height and yields them to the visitor until it returns true.
template <class Fn>
bool search_combos(const std::vector<Vec4>& basis, int height, const Fn& visit) {
    int n = static_cast<int>(basis.size());
    if (n == 0) return false;
    std::vector<int> coef(n, 0);
    for (int h = 1; h <= height; ++h) {
        // iterate over coefficient vectors with max-norm exactly h
        std::vector<int> idx(n, -h);
        for (;;) {
            int mx = 0, g = 0, lead = 0;
            for (int i = 0; i < n; ++i) {
                mx = std::max(mx, std::abs(idx[i]));
                g = static_cast<int>(std::gcd(g, std::abs(idx[i])));
                if (lead == 0 && idx[i] != 0) lead = idx[i];
            }
            if (mx == h && g == 1 && lead > 0) {
                Vec4 v(4, Scalar(0));
                for (int i = 0; i < n; ++i)
                    if (idx[i] != 0) v = axpy(v, Scalar(idx[i]), basis[i]);
                if (visit(v)) return true;
            }
            int p = 0;
            while (p < n && idx[p] == h) idx[p++] = -h;
            if (p == n) break;
            ++idx[p];
        }
    }
    return false;
}

inline int combo_height_for(std::size_t dim) {
    if (dim <= 1) return 1;
    if (dim == 2) return 60;
    if (dim == 3) return 12;
    return 4;
}

// A normalized Jordan chain for a real eigenvalue: vectors bottom..top with
// inner(v_i, v_{k+1-i}) = eps the only nonzero products within the chain.
struct Chain {
    std::vector<Vec4> v;  // v[0] = bottom = N^{k-1} t
    int eps = 1;
};

// Chain construction: pick a top with nonvanishing end pairing from the given
// candidate span, cancel the lower moments, then scale the pairing to +-1.
inline Chain build_chain(const CanonCtx& cc, const Mat4& nmat, int k,
                         const std::vector<Vec4>& cands) {
    auto npow = [&](int e) { return mat_pow(nmat, e, Scalar(1)); };
    Mat4 nk1 = npow(k - 1);
    auto pairing = [&](const Vec4& t) { return cc.ip(t, nk1.apply(t)); };
    Vec4 top;
    bool found = false;
    if (cc.ctx.mode == Mode::Exact) {
        // Prefer a top whose end pairing is an exact square so the final
        // rescale stays inside the field.
        Scalar root;
        search_combos(cands, combo_height_for(cands.size()), [&](const Vec4& t) {
            Scalar p = pairing(t);
            if (p.is_zero() || !p.abs().sqrt_exact(root)) return false;
            top = t;
            found = true;
            return true;
        });
    }
    for (std::size_t i = 0; i < cands.size() && !found; ++i)
        if (!cc.isz(pairing(cands[i]))) {
            top = cands[i];
            found = true;
        }
    for (std::size_t i = 0; i < cands.size() && !found; ++i)
        for (std::size_t j = i + 1; j < cands.size() && !found; ++j) {
            Vec4 t = axpy(cands[i], Scalar(1), cands[j]);
            if (!cc.isz(pairing(t))) {
                top = t;
                found = true;
            }
        }
    if (!found) throw NotCanonicalizable("no chain top with nonzero pairing");

    auto moment = [&](const Vec4& t, int j) { return cc.ip(t, npow(j).apply(t)); };
    Scalar sk1 = moment(top, k - 1);
    if (k == 2) {
        Scalar a = -(moment(top, 0) / (Scalar(2) * sk1));
        top = axpy(top, a, nmat.apply(top));
    } else if (k == 3) {
        Scalar a = -(moment(top, 1) / (Scalar(2) * sk1));
        top = axpy(top, a, nmat.apply(top));
        Scalar b = -(moment(top, 0) / (Scalar(2) * sk1));
        top = axpy(top, b, npow(2).apply(top));
    } else if (k == 4) {
        Scalar a = -(moment(top, 2) / (Scalar(2) * sk1));
        top = axpy(top, a, nmat.apply(top));
        Scalar b = -(moment(top, 1) / (Scalar(2) * sk1));
        top = axpy(top, b, npow(2).apply(top));
        Scalar cpar = -(moment(top, 0) / (Scalar(2) * sk1));
        top = axpy(top, cpar, npow(3).apply(top));
    }
    sk1 = moment(top, k - 1);
    Chain ch;
    ch.eps = sk1.sign() >= 0 ? 1 : -1;
    Scalar gamma = Scalar(1) / cc.sqrt_or_throw(sk1.abs());
    top = vscale(top, gamma);
    ch.v.resize(k);
    ch.v[k - 1] = top;
    for (int i = k - 2; i >= 0; --i) ch.v[i] = nmat.apply(ch.v[i + 1]);
    return ch;
}

// Vector in the span with inner product of the wanted sign (0 = any nonzero)
// whose norm has an exact square root, normalized to norm +-1.
inline std::optional<Vec4> normalized_vector_in(const CanonCtx& cc, const std::vector<Vec4>& space,
                                                int want_sign) {
    if (cc.ctx.mode == Mode::Float) {
        for (auto& v : space) {
            Scalar q = cc.ip(v, v);
            if (!cc.isz(q) && (want_sign == 0 || q.sign() == want_sign))
                return vscale(v, Scalar(1) / cc.sqrt_or_throw(q.abs()));
        }
        for (std::size_t i = 0; i < space.size(); ++i)
            for (std::size_t j = i + 1; j < space.size(); ++j) {
                Vec4 t = axpy(space[i], Scalar(1), space[j]);
                Scalar q = cc.ip(t, t);
                if (!cc.isz(q) && (want_sign == 0 || q.sign() == want_sign))
                    return vscale(t, Scalar(1) / cc.sqrt_or_throw(q.abs()));
            }
        return std::nullopt;
    }
    std::optional<Vec4> hit;
    search_combos(space, combo_height_for(space.size()), [&](const Vec4& v) {
        Scalar q = cc.ip(v, v);
        if (q.is_zero()) return false;
        if (want_sign != 0 && q.sign() != want_sign) return false;
        Scalar root;
        if (!q.abs().sqrt_exact(root)) return false;
        hit = vscale(v, Scalar(1) / root);
        return true;
    });
    return hit;
}

// Unit eigenvector of prescribed character from a simple eigenspace slice.
inline Vec4 unit_vector(const CanonCtx& cc, const std::vector<Vec4>& space, int want_sign) {
    auto v = normalized_vector_in(cc, space, want_sign);
    if (!v) throw NotCanonicalizable("no eigenvector of the required character");
    return *v;
}

// Orthogonal splitting of a simple eigenspace into +-normalized vectors,
// timelike ones first.
inline std::vector<Vec4> diagonalize_space(const CanonCtx& cc, std::vector<Vec4> space) {
    std::vector<Vec4> plus, minus;
    while (!space.empty()) {
        auto got = normalized_vector_in(cc, space, 0);
        if (!got) throw NotCanonicalizable("degenerate eigenspace metric");
        Vec4 u = *got;
        Scalar q = cc.ip(u, u);
        (q.sign() > 0 ? plus : minus).push_back(u);
        // project the rest off u
        std::vector<Vec4> next;
        Scalar uu = cc.ip(u, u);
        for (auto& w : space) {
            Vec4 red = axpy(w, -(cc.ip(w, u) / uu), u);
            bool zero = true;
            for (auto& x : red)
                if (!cc.isz(x)) zero = false;
            if (!zero) next.push_back(red);
        }
        // keep an independent subset of the reductions
        std::vector<Vec4> indep;
        for (auto& w : next) {
            std::vector<Vec4> trial = indep;
            trial.push_back(w);
            Mat<Scalar> probe(static_cast<int>(trial.size()), 4);
            for (std::size_t r = 0; r < trial.size(); ++r)
                for (int ccol = 0; ccol < 4; ++ccol) probe(static_cast<int>(r), ccol) = trial[r][ccol];
            int rk = cc.ctx.mode == Mode::Exact
                         ? rank_exact(probe)
                         : rank_of(probe, FloatZeroPolicy{cc.ctx.zero_tol});
            if (rk == static_cast<int>(trial.size())) indep.push_back(w);
        }
        space = indep;
    }
    std::vector<Vec4> out = plus;
    out.insert(out.end(), minus.begin(), minus.end());
    return out;
}

// Complex square root within the exact field (or float).
inline CScalar csqrt_or_throw(const CanonCtx& cc, const CScalar& c) {
    if (cc.ctx.mode == Mode::Float) {
        std::complex<double> z(c.re.to_double(), c.im.to_double());
        auto w = std::sqrt(z);
        return CScalar(Scalar::flt(w.real()), Scalar::flt(w.imag()));
    }
    if (c.im.is_zero()) {
        Scalar r;
        if (c.re.sign() >= 0) {
            if (!c.re.sqrt_exact(r)) throw NotCanonicalizable("complex sqrt outside the field");
            return CScalar(r, Scalar(0));
        }
        if (!(-c.re).sqrt_exact(r)) throw NotCanonicalizable("complex sqrt outside the field");
        return CScalar(Scalar(0), r);
    }
    Scalar n2 = c.norm2(), mod;
    if (!n2.sqrt_exact(mod)) throw NotCanonicalizable("complex sqrt outside the field");
    Scalar p2 = (mod + c.re) / Scalar(2), p;
    if (!p2.sqrt_exact(p) || p.is_zero()) throw NotCanonicalizable("complex sqrt outside the field");
    Scalar q = c.im / (Scalar(2) * p);
    return CScalar(p, q);
}

inline CScalar cinner(const CanonCtx& cc, const CVec4& a, const CVec4& b) {
    Mat4 g = gram(cc.kind);
    CScalar acc;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (g(i, j).is_zero()) continue;
            acc += CScalar(g(i, j)) * a[i] * b[j];
        }
    return acc;
}

}  // namespace detail

// Constructive orthogonal invariant decomposition: returns a basis with the
// exact Gram pattern of the classified type and the canonical matrix in it.
inline CanonicalForm canonicalize(const Mat4& m, MetricKind kind, const Context& ctx) {
    if (!is_self_adjoint(m, kind, ctx)) throw NotSelfAdjoint();
    CanonicalForm out;
    out.cls = classify(m, kind, ctx);
    detail::CanonCtx cc{m, kind, ctx};
    const auto& recs = out.cls.eigen;

    auto nmat_of = [&](const EigenRecord& r) {
        Mat4 n = m;
        Scalar lam = r.value.kind == EigenValue::Kind::Real
                         ? r.value.real
                         : Scalar::flt(r.value.approx_re);
        if (ctx.mode == Mode::Exact && r.value.kind != EigenValue::Kind::Real)
            throw NotCanonicalizable("irrational eigenvalue in exact canonicalization");
        if (ctx.mode == Mode::Float) lam = Scalar::flt(lam.to_double());
        for (int d = 0; d < 4; ++d) n(d, d) -= lam;
        return n;
    };
    auto gen_space = [&](const EigenRecord& r) {
        Mat4 n = nmat_of(r);
        return cc.kernel4(mat_pow(n, 4, ctx.mode == Mode::Exact ? Scalar(1) : Scalar::flt(1.0)));
    };
    auto eigen_space = [&](const EigenRecord& r) { return cc.kernel4(nmat_of(r)); };

    // Complex pair realized as a PsiON (1,1)-plane from a normalized complex
    // eigenvector: u = Re w, v = Im w with inner(w, w) = 2.
    auto realize_simple_pair = [&](const EigenRecord& r, Vec4& u, Vec4& v,
                                   const CVec4* prefer = nullptr) {
        if (ctx.mode == Mode::Exact && !r.value.complex_exact)
            throw NotCanonicalizable("complex eigenvalue outside Q(sqrt 2)");
        CVec4 w;
        if (prefer) w = *prefer;
        else {
            if (r.eigenspace_basis.empty()) throw NotCanonicalizable("missing complex eigenvector");
            w = r.eigenspace_basis[0];
        }
        CScalar sw = detail::cinner(cc, w, w);
        if (sw.is_zero()) throw NotCanonicalizable("null complex eigenvector in a simple pair");
        CScalar mu = detail::csqrt_or_throw(cc, CScalar(Scalar(2)) / sw);
        CVec4 wn(4);
        for (int i = 0; i < 4; ++i) wn[i] = mu * w[i];
        u.assign(4, Scalar(0));
        v.assign(4, Scalar(0));
        for (int i = 0; i < 4; ++i) {
            u[i] = wn[i].re;
            v[i] = wn[i].im;
        }
    };

    std::array<Vec4, 4> basis;
    MetricKind ckind = MetricKind::PsiON;
    Scalar inv_s2 = ctx.mode == Mode::Exact ? Scalar(1) / Scalar::sqrt2()
                                            : Scalar::flt(1.0 / std::sqrt(2.0));

    switch (out.cls.type) {
        case TypeLabel::I: {
            const auto& r = recs[0];
            Mat4 n = nmat_of(r);
            auto chain = detail::build_chain(cc, n, 4, gen_space(r));
            Scalar e(chain.eps);
            basis = {chain.v[0], chain.v[1], detail::vscale(chain.v[3], e),
                     detail::vscale(chain.v[2], e)};
            ckind = MetricKind::Witt;
            break;
        }
        case TypeLabel::II: {
            const auto& r = recs[0];
            if (ctx.mode == Mode::Exact && !r.value.complex_exact)
                throw NotCanonicalizable("complex eigenvalue outside Q(sqrt 2)");
            // Complex chain w1 = (M - lambda) w2 with s(w1,w2)=2, s(w2,w2)=0.
            CScalar lam = r.value.complex_value;
            if (ctx.mode == Mode::Float)
                lam = CScalar(Scalar::flt(lam.re.to_double()), Scalar::flt(lam.im.to_double()));
            Mat<CScalar> shifted(4, 4);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    shifted(i, j) = CScalar(m(i, j));
                    if (i == j) shifted(i, j) -= lam;
                }
            // top: any vector of ker (M-lambda)^2 outside ker(M-lambda);
            // generic real basis vector complexified works via projection:
            Mat<CScalar> sh2 = shifted * shifted;
            CScalar cone(Scalar(ctx.mode == Mode::Exact ? 1 : 1));
            if (ctx.mode == Mode::Float) cone = CScalar(Scalar::flt(1.0));
            std::vector<CVec4> k2;
            if (ctx.mode == Mode::Exact) k2 = kernel_basis(sh2, cone, ExactZeroPolicy{});
            else k2 = kernel_basis(sh2, cone, FloatZeroPolicy{ctx.zero_tol});
            CVec4 w2, w1;
            bool got = false;
            for (auto& cand : k2) {
                CVec4 img = shifted.apply(cand);
                bool zero = true;
                for (auto& x : img)
                    if (!(cc.isz(x.re) && cc.isz(x.im))) zero = false;
                if (!zero) {
                    w2 = cand;
                    w1 = img;
                    got = true;
                    break;
                }
            }
            if (!got) throw NotCanonicalizable("no complex chain top");
            CScalar kpair = detail::cinner(cc, w1, w2);
            CScalar tau = detail::cinner(cc, w2, w2);
            // w2 += nu * w1 with nu = -tau/(2 kpair) kills s(w2,w2).
            CScalar nu = -(tau / (kpair * CScalar(Scalar(2))));
            for (int i = 0; i < 4; ++i) w2[i] += nu * w1[i];
            kpair = detail::cinner(cc, w1, w2);
            CScalar mu = detail::csqrt_or_throw(cc, CScalar(Scalar(2)) / kpair);
            for (int i = 0; i < 4; ++i) {
                w2[i] = mu * w2[i];
            }
            w1 = shifted.apply(w2);
            Vec4 u1(4), v1(4), u2(4), v2(4);
            for (int i = 0; i < 4; ++i) {
                u1[i] = w1[i].re;
                v1[i] = w1[i].im;
                u2[i] = w2[i].re;
                v2[i] = w2[i].im;
            }
            basis = {u1, v1, u2, detail::vscale(v2, Scalar(-1))};
            ckind = MetricKind::Witt;
            break;
        }
        case TypeLabel::IIIa:
        case TypeLabel::IIIb: {
            bool a_form = out.cls.type == TypeLabel::IIIa;
            const EigenRecord* big = nullptr;
            const EigenRecord* small = nullptr;
            for (auto& r : recs)
                (detail::max_block(r) == 3 ? big : small) = &r;
            if (!small) small = big;  // coincident case: same record
            Mat4 n = nmat_of(*big);
            auto chain = detail::build_chain(cc, n, 3, gen_space(*big));
            // the simple unit vector, orthogonalized against the chain when
            // it shares the eigenvalue
            std::vector<Vec4> esp = eigen_space(*small);
            Vec4 u;
            if (small == big) {
                std::vector<Vec4> cands;
                Scalar cpair = cc.ip(chain.v[0], chain.v[2]);
                for (auto& w : esp) {
                    Vec4 adj = detail::axpy(w, -(cc.ip(w, chain.v[2]) / cpair), chain.v[0]);
                    cands.push_back(adj);
                }
                u = detail::unit_vector(cc, cands, a_form ? 1 : -1);
            } else {
                u = detail::unit_vector(cc, esp, a_form ? 1 : -1);
            }
            Vec4 x, y;
            if (a_form) {
                x = detail::vscale(detail::axpy(chain.v[0], Scalar(-1), chain.v[2]), inv_s2);
                y = detail::vscale(detail::axpy(chain.v[0], Scalar(1), chain.v[2]), inv_s2);
                basis = {u, x, chain.v[1], y};
            } else {
                x = detail::vscale(detail::axpy(chain.v[0], Scalar(1), chain.v[2]), inv_s2);
                y = detail::vscale(detail::axpy(chain.v[0], Scalar(-1), chain.v[2]), inv_s2);
                basis = {x, chain.v[1], y, u};
            }
            break;
        }
        case TypeLabel::IV: {
            const EigenRecord* blk = nullptr;
            for (auto& r : recs)
                if (detail::max_block(r) == 2) blk = &r;
            Mat4 n = nmat_of(*blk);
            auto chain = detail::build_chain(cc, n, 2, gen_space(*blk));
            Scalar e(chain.eps);
            Vec4 x = detail::vscale(detail::axpy(chain.v[0], e, chain.v[1]), inv_s2);
            Vec4 y = detail::vscale(detail::axpy(chain.v[0], -e, chain.v[1]), inv_s2);
            // the two unit summands; may share the eigenvalue of the block or
            // one another
            std::vector<Vec4> tcand, scand;
            for (auto& r : recs) {
                std::vector<Vec4> esp = eigen_space(r);
                std::vector<Vec4> adj;
                for (auto& w : esp) {
                    Vec4 v = w;
                    if (&r == blk) {
                        // remove the chain direction: subtract the pairing
                        // component against chain top
                        Scalar cpair = cc.ip(chain.v[0], chain.v[1]);
                        v = detail::axpy(v, -(cc.ip(v, chain.v[1]) / cpair), chain.v[0]);
                    }
                    bool zero = true;
                    for (auto& xx : v)
                        if (!cc.isz(xx)) zero = false;
                    if (!zero) adj.push_back(v);
                }
                if (adj.empty()) continue;
                auto diag = detail::diagonalize_space(cc, adj);
                for (auto& d : diag) (cc.ip(d, d).sign() > 0 ? tcand : scand).push_back(d);
            }
            if (tcand.empty() || scand.empty())
                throw NotCanonicalizable("missing unit summands");
            basis = {tcand[0], x, y, scand[0]};
            break;
        }
        case TypeLabel::V: {
            const EigenRecord* pr = nullptr;
            std::vector<const EigenRecord*> rl;
            for (auto& r : recs)
                if (!r.value.is_real()) pr = &r;
                else rl.push_back(&r);
            Vec4 u2, v2;
            realize_simple_pair(*pr, u2, v2);
            Vec4 ut, us;
            if (rl.size() == 2) {
                std::vector<Vec4> e1 = eigen_space(*rl[0]), e2 = eigen_space(*rl[1]);
                bool first_time = cc.ip(e1[0], e1[0]).sign() > 0;
                ut = detail::unit_vector(cc, first_time ? e1 : e2, 1);
                us = detail::unit_vector(cc, first_time ? e2 : e1, -1);
            } else {
                auto esp = eigen_space(*rl[0]);
                auto diag = detail::diagonalize_space(cc, esp);
                ut = diag[0];
                us = diag[1];
                if (cc.ip(ut, ut).sign() < 0) std::swap(ut, us);
            }
            basis = {ut, u2, v2, us};
            break;
        }
        case TypeLabel::VI: {
            const EigenRecord* blk = nullptr;
            const EigenRecord* pr = nullptr;
            for (auto& r : recs)
                if (!r.value.is_real()) pr = &r;
                else blk = &r;
            Mat4 n = nmat_of(*blk);
            auto chain = detail::build_chain(cc, n, 2, gen_space(*blk));
            Scalar e(chain.eps);
            Vec4 x = detail::vscale(detail::axpy(chain.v[0], e, chain.v[1]), inv_s2);
            Vec4 y = detail::vscale(detail::axpy(chain.v[0], -e, chain.v[1]), inv_s2);
            Vec4 u2, v2;
            realize_simple_pair(*pr, u2, v2);
            basis = {x, u2, v2, y};
            break;
        }
        case TypeLabel::VII: {
            std::vector<const EigenRecord*> rl;
            for (auto& r : recs) rl.push_back(&r);
            std::sort(rl.begin(), rl.end(), [](const EigenRecord* a, const EigenRecord* b) {
                return detail::compare_real_eigen(a->value, b->value) > 0;
            });
            if (rl.size() == 2) {
                Mat4 n1 = nmat_of(*rl[0]), n2 = nmat_of(*rl[1]);
                auto c1 = detail::build_chain(cc, n1, 2, gen_space(*rl[0]));
                auto c2 = detail::build_chain(cc, n2, 2, gen_space(*rl[1]));
                basis = {c1.v[0], c2.v[0], detail::vscale(c1.v[1], Scalar(c1.eps)),
                         detail::vscale(c2.v[1], Scalar(c2.eps))};
            } else {
                // coincident: two chains at the same eigenvalue
                const auto& r = recs[0];
                Mat4 n = nmat_of(r);
                auto g = gen_space(r);
                auto c1 = detail::build_chain(cc, n, 2, g);
                Scalar cpair = cc.ip(c1.v[0], c1.v[1]);
                std::vector<Vec4> reduced;
                for (auto& w : g) {
                    // strip the first chain: make w orthogonal to both of its
                    // vectors
                    Vec4 v = detail::axpy(w, -(cc.ip(w, c1.v[0]) / cpair), c1.v[1]);
                    v = detail::axpy(v, -(cc.ip(v, c1.v[1]) / cpair), c1.v[0]);
                    bool zero = true;
                    for (auto& xx : v)
                        if (!cc.isz(xx)) zero = false;
                    if (!zero) reduced.push_back(v);
                }
                auto c2 = detail::build_chain(cc, n, 2, reduced);
                basis = {c1.v[0], c2.v[0], detail::vscale(c1.v[1], Scalar(c1.eps)),
                         detail::vscale(c2.v[1], Scalar(c2.eps))};
            }
            ckind = MetricKind::Witt;
            break;
        }
        case TypeLabel::VIII: {
            std::vector<const EigenRecord*> prs;
            for (auto& r : recs) prs.push_back(&r);
            Vec4 u1, v1, u2, v2;
            if (prs.size() == 2) {
                std::sort(prs.begin(), prs.end(), [](const EigenRecord* a, const EigenRecord* b) {
                    if (a->value.approx_re != b->value.approx_re)
                        return a->value.approx_re > b->value.approx_re;
                    return a->value.approx_im > b->value.approx_im;
                });
                realize_simple_pair(*prs[0], u1, v1);
                realize_simple_pair(*prs[1], u2, v2);
            } else {
                const auto& r = recs[0];
                if (r.eigenspace_basis.size() < 2)
                    throw NotCanonicalizable("missing complex eigenbasis");
                CVec4 base1 = r.eigenspace_basis[0], base2 = r.eigenspace_basis[1];
                // Pick a first vector whose self-product has a square root in
                // the field; small complex-integer combinations suffice for
                // conjugates of the canonical form.
                CVec4 w1, w2;
                bool ok2 = false;
                for (int ar = -2; ar <= 2 && !ok2; ++ar)
                    for (int ai = -2; ai <= 2 && !ok2; ++ai)
                        for (int br = -2; br <= 2 && !ok2; ++br)
                            for (int bi = -2; bi <= 2 && !ok2; ++bi) {
                                if (ar == 0 && ai == 0 && br == 0 && bi == 0) continue;
                                CScalar ca{Scalar(ar), Scalar(ai)}, cb{Scalar(br), Scalar(bi)};
                                CVec4 w(4);
                                for (int i = 0; i < 4; ++i) w[i] = ca * base1[i] + cb * base2[i];
                                CScalar sw = detail::cinner(cc, w, w);
                                if (sw.is_zero()) continue;
                                try {
                                    detail::csqrt_or_throw(cc, CScalar(Scalar(2)) / sw);
                                } catch (const NotCanonicalizable&) {
                                    continue;
                                }
                                bool indep = false;  // must keep a complement
                                CVec4 other = (br == 0 && bi == 0) ? base2 : base1;
                                CScalar s12 = detail::cinner(cc, w, other);
                                CScalar sww = sw;
                                CVec4 cmpl(4);
                                for (int i = 0; i < 4; ++i) cmpl[i] = other[i] - (s12 / sww) * w[i];
                                for (int i = 0; i < 4; ++i)
                                    if (!cmpl[i].is_zero()) indep = true;
                                if (!indep) continue;
                                CScalar s22 = detail::cinner(cc, cmpl, cmpl);
                                if (s22.is_zero()) continue;
                                try {
                                    detail::csqrt_or_throw(cc, CScalar(Scalar(2)) / s22);
                                } catch (const NotCanonicalizable&) {
                                    continue;
                                }
                                w1 = w;
                                w2 = cmpl;
                                ok2 = true;
                            }
                if (!ok2) throw NotCanonicalizable("degenerate pair eigenspace");
                realize_simple_pair(r, u1, v1, &w1);
                realize_simple_pair(r, u2, v2, &w2);
            }
            basis = {u1, u2, v1, v2};
            break;
        }
        case TypeLabel::IX: {
            // order eigen spaces into slots: timelike vectors first
            std::vector<Vec4> tv, sv;
            std::vector<std::pair<const EigenRecord*, std::vector<Vec4>>> spaces;
            for (auto& r : recs) spaces.push_back({&r, detail::diagonalize_space(cc, eigen_space(r))});
            std::sort(spaces.begin(), spaces.end(), [](const auto& a, const auto& b) {
                return detail::compare_real_eigen(a.first->value, b.first->value) > 0;
            });
            for (auto& [r, vecs] : spaces)
                for (auto& v : vecs) (cc.ip(v, v).sign() > 0 ? tv : sv).push_back(v);
            if (tv.size() != 2 || sv.size() != 2) throw NotCanonicalizable("slot mismatch");
            basis = {tv[0], tv[1], sv[0], sv[1]};
            break;
        }
    }

    // Express the input in the constructed basis.
    Mat4 t(4, 4);
    for (int c = 0; c < 4; ++c)
        for (int r = 0; r < 4; ++r) t(r, c) = basis[c][r];
    Mat4 tin(4, 4);
    bool ok = ctx.mode == Mode::Exact ? invert(t, tin, Scalar(1), ExactZeroPolicy{})
                                      : invert(t, tin, Scalar::flt(1.0), FloatZeroPolicy{ctx.zero_tol});
    if (!ok) throw NotCanonicalizable("canonical basis is singular");
    out.basis = basis;
    out.canonical = tin * m * t;
    out.canonical_kind = ckind;
    return out;
}

}  // namespace ricci22
