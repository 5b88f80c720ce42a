#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "eigen.hpp"
#include "spinor.hpp"

namespace ricci22 {

enum class TypeLabel { I, II, IIIa, IIIb, IV, V, VI, VII, VIII, IX };

inline const char* to_string(TypeLabel t) {
    switch (t) {
        case TypeLabel::I: return "I";
        case TypeLabel::II: return "II";
        case TypeLabel::IIIa: return "IIIa";
        case TypeLabel::IIIb: return "IIIb";
        case TypeLabel::IV: return "IV";
        case TypeLabel::V: return "V";
        case TypeLabel::VI: return "VI";
        case TypeLabel::VII: return "VII";
        case TypeLabel::VIII: return "VIII";
        case TypeLabel::IX: return "IX";
    }
    return "?";
}

struct OrbitData {
    int orbit_dim = 0;
    int family_params = 0;
    int components_per_orbit = 0;
    int families = 0;
};

struct Classification {
    TypeLabel type = TypeLabel::IX;
    std::string segre;
    std::vector<EigenRecord> eigen;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<int> epsilons;
    std::string coincidence;
    MetricKind kind = MetricKind::PsiON;
    OrbitData orbit;  // filled by orbit_data for traceless input
};

inline Mat4 traceless(const Mat4& m, MetricKind) {
    Mat4 r = m;
    Scalar shift = m.trace() / Scalar(4);
    bool flt = !is_exact_mode(m);
    if (flt) shift = Scalar::flt(shift.to_double());
    for (int i = 0; i < 4; ++i) r(i, i) -= shift;
    return r;
}

namespace detail {

// Comparison of real eigenvalues across representations, exact where both
// sides are exact.
inline int compare_real_eigen(const EigenValue& a, const EigenValue& b) {
    using K = EigenValue::Kind;
    if (a.kind == K::Real && b.kind == K::Real) {
        Scalar d = a.real - b.real;
        return d.sign();
    }
    if (a.kind == K::Real && b.kind == K::AlgebraicRealRoot) return -b.algebraic.compare(a.real.rat());
    if (a.kind == K::AlgebraicRealRoot && b.kind == K::Real) return a.algebraic.compare(b.real.rat());
    if (a.kind == K::AlgebraicRealRoot && b.kind == K::AlgebraicRealRoot)
        return a.algebraic.compare(b.algebraic);
    double d = a.approx_re - b.approx_re;
    return d < 0 ? -1 : (d > 0 ? 1 : 0);
}

// A printable unit of the Segre characteristic tied to the eigen record it
// came from.
struct SegreUnit {
    int record;       // index into the record list
    std::string sym;  // "1", "2", "3", "4", or "1~1" / "2~2" for pairs
};

// Renders with the positional conventions: parentheses around a coincident
// group, non-members inside delimited by vertical bars, and the two
// interleaved two-pair layouts spelled explicitly.
inline std::string render_segre(const std::vector<SegreUnit>& units) {
    int n = static_cast<int>(units.size());
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) groups[units[i].record].push_back(i);
    std::vector<std::vector<int>> multi;
    for (auto& [rec, pos] : groups)
        if (pos.size() >= 2) multi.push_back(pos);
    std::string out = "[";
    if (multi.size() == 2) {
        // Four simple units in two pairs: AABB, ABAB or ABBA.
        const auto &g1 = multi[0], &g2 = multi[1];
        auto pat = [&](std::initializer_list<int> a, std::initializer_list<int> b) {
            return (g1 == std::vector<int>(a) && g2 == std::vector<int>(b)) ||
                   (g2 == std::vector<int>(a) && g1 == std::vector<int>(b));
        };
        if (pat({0, 1}, {2, 3}))
            out += "(" + units[0].sym + units[1].sym + ")(" + units[2].sym + units[3].sym + ")";
        else if (pat({0, 2}, {1, 3}))
            out += "(" + units[0].sym + "|(" + units[1].sym + "|" + units[2].sym + ")|" +
                   units[3].sym + ")";
        else
            out += "(" + units[0].sym + "|(" + units[1].sym + units[2].sym + ")|" + units[3].sym +
                   ")";
        return out + "]";
    }
    int gstart = -1, gend = -1;
    if (multi.size() == 1) {
        gstart = multi[0].front();
        gend = multi[0].back();
    }
    for (int i = 0; i < n; ++i) {
        bool member = multi.size() == 1 &&
                      std::find(multi[0].begin(), multi[0].end(), i) != multi[0].end();
        if (i == gstart) out += "(";
        if (!member && i > gstart && i < gend) {
            bool prev_nonmember =
                i - 1 > gstart &&
                std::find(multi[0].begin(), multi[0].end(), i - 1) == multi[0].end();
            if (!prev_nonmember) out += "|";
            out += units[i].sym;
            bool next_nonmember =
                i + 1 < gend && std::find(multi[0].begin(), multi[0].end(), i + 1) == multi[0].end();
            if (!next_nonmember) out += "|";
        } else {
            out += units[i].sym;
        }
        if (i == gend) out += ")";
    }
    return out + "]";
}

inline int max_block(const EigenRecord& r) {
    return r.jordan_blocks.empty() ? 0 : r.jordan_blocks[0];
}

// Slot layout for spectra consisting of simple blocks only (the Type IX
// family): two timelike slots then two spacelike slots, each side ordered by
// decreasing eigenvalue.
inline std::vector<SegreUnit> ix_slots(const std::vector<EigenRecord>& recs,
                                       const std::vector<int>& real_idx) {
    struct Occ {
        int record;
        const EigenValue* v;
    };
    std::vector<Occ> tslots, sslots;
    for (int idx : real_idx) {
        const auto& r = recs[idx];
        for (int c = 0; c < r.sig_p; ++c) tslots.push_back({idx, &r.value});
        for (int c = 0; c < r.sig_q; ++c) sslots.push_back({idx, &r.value});
    }
    auto desc = [](const Occ& a, const Occ& b) { return compare_real_eigen(*a.v, *b.v) > 0; };
    std::stable_sort(tslots.begin(), tslots.end(), desc);
    std::stable_sort(sslots.begin(), sslots.end(), desc);
    std::vector<SegreUnit> units;
    for (auto& o : tslots) units.push_back({o.record, "1"});
    for (auto& o : sslots) units.push_back({o.record, "1"});
    return units;
}

inline std::string value_string(const EigenValue& v) {
    switch (v.kind) {
        case EigenValue::Kind::Real:
            return v.real.is_exact() ? v.real.to_string() : std::to_string(v.real.to_double());
        case EigenValue::Kind::AlgebraicRealRoot: {
            std::ostringstream os;
            os << v.approx_re << " (root of " << v.minpoly.to_string() << ")";
            return os.str();
        }
        case EigenValue::Kind::ComplexPair: return v.complex_value.to_string();
    }
    return "?";
}

}  // namespace detail

// Signs of the chain pairings for every real eigenvalue carrying a Jordan
// block of size >= 2, in decreasing order of the eigenvalue. Each sign is
// read off the quadratic form w -> inner(w, (M - lambda)^{k-1} w) on the
// generalized eigenspace; for a single chain that form is semidefinite with
// sign equal to the pairing normalization, and for two 2-chains with a
// common eigenvalue the signature counts the two signs.
inline std::vector<int> epsilon_signs(const Mat4& m, MetricKind kind,
                                      const std::vector<EigenRecord>& recs, const Context& ctx) {
    std::vector<int> out;
    std::vector<int> order;
    for (int i = 0; i < static_cast<int>(recs.size()); ++i)
        if (recs[i].value.is_real() && detail::max_block(recs[i]) >= 2) order.push_back(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return detail::compare_real_eigen(recs[a].value, recs[b].value) > 0;
    });
    if (order.empty()) throw NoNilpotentPart();

    for (int idx : order) {
        const auto& rec = recs[idx];
        int k = detail::max_block(rec);
        if (rec.value.kind == EigenValue::Kind::Real) {
            Scalar lam = rec.value.real;
            Mat4 n = m;
            for (int d = 0; d < 4; ++d) n(d, d) -= lam;
            Mat4 npow = mat_pow(n, 4, Scalar(1));
            std::vector<Vec4> basis;
            if (ctx.mode == Mode::Exact) {
                for (auto& v : kernel_basis(npow, Scalar(1), ExactZeroPolicy{})) basis.push_back(v);
            } else {
                FloatZeroPolicy zp{ctx.zero_tol};
                for (auto& v : kernel_basis(npow, Scalar::flt(1.0), zp)) basis.push_back(v);
            }
            Mat4 nk = mat_pow(n, k - 1, Scalar(1));
            int bn = static_cast<int>(basis.size());
            Mat<Scalar> q(bn, bn);
            for (int i = 0; i < bn; ++i) {
                Vec4 ni = nk.apply(basis[i]);
                for (int j = 0; j < bn; ++j) q(i, j) = inner(basis[j], ni, kind);
            }
            // Symmetrize: inner(w, N^{k-1} w') is symmetric for self-adjoint
            // input; enforce against float noise.
            for (int i = 0; i < bn; ++i)
                for (int j = i + 1; j < bn; ++j) {
                    Scalar s = (q(i, j) + q(j, i)) / Scalar(2);
                    if (!q(i, j).is_exact()) {
                        q(i, j) = s;
                        q(j, i) = s;
                    }
                }
            int p = 0, ng = 0, r = 0;
            if (ctx.mode == Mode::Exact) {
                detail::signature_of(q, [](const Scalar& s) { return s.sign(); }, p, ng, r);
            } else {
                double scale = 0;
                for (int i = 0; i < bn; ++i)
                    for (int j = 0; j < bn; ++j) scale = std::max(scale, std::abs(q(i, j).to_double()));
                double tol = ctx.zero_tol * std::max(scale, 1.0);
                detail::signature_of_z(q, [](const Scalar& s) { return s.to_double() > 0 ? 1 : -1; },
                                       [tol](const Scalar& s) { return std::abs(s.to_double()) <= tol; },
                                       p, ng, r);
            }
            // One sign per chain of size >= 2; the form has exactly that rank.
            for (int i = 0; i < p; ++i) out.push_back(1);
            for (int i = 0; i < ng; ++i) out.push_back(-1);
        } else {
            // Chains over an irrational real eigenvalue: decide the signature
            // of the same form through the quotient field.
            const Poly& mp = rec.value.minpoly;
            auto mod = std::make_shared<const Poly>(mp);
            PolyMod one = PolyMod::constant(Rat(1), mod);
            Mat<PolyMod> n(4, 4);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    n(i, j) = PolyMod::constant(m(i, j).rat(), mod);
                    if (i == j) n(i, j) -= PolyMod::generator(mod);
                }
            Mat<PolyMod> npow = mat_pow(n, 4, one);
            auto basis = kernel_basis(npow, one, ExactZeroPolicy{});
            Mat<PolyMod> nk = mat_pow(n, k - 1, one);
            int bn = static_cast<int>(basis.size());
            Mat<PolyMod> q(bn, bn);
            Mat4 g = gram(kind);
            for (int i = 0; i < bn; ++i) {
                auto ni = nk.apply(basis[i]);
                for (int j = 0; j < bn; ++j) {
                    PolyMod acc;
                    for (int a = 0; a < 4; ++a)
                        for (int b = 0; b < 4; ++b) {
                            if (g(a, b).is_zero()) continue;
                            acc += PolyMod::constant(g(a, b).rat(), mod) * basis[j][a] * ni[b];
                        }
                    q(i, j) = acc;
                }
            }
            int p = 0, ng = 0, r = 0;
            const AlgebraicReal& root = rec.value.algebraic;
            detail::signature_of(q, [&](const PolyMod& x) { return root.sign_of(x.rep()); }, p, ng,
                                 r);
            for (int i = 0; i < p; ++i) out.push_back(1);
            for (int i = 0; i < ng; ++i) out.push_back(-1);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

inline Classification classify(const Mat4& m, MetricKind kind, const Context& ctx) {
    if (!is_self_adjoint(m, kind, ctx)) throw NotSelfAdjoint();
    Classification c;
    c.kind = kind;
    c.eigen = eigen_structure(m, ctx, kind);
    const auto& recs = c.eigen;

    std::vector<int> reals, pairs;
    for (int i = 0; i < static_cast<int>(recs.size()); ++i)
        (recs[i].value.is_real() ? reals : pairs).push_back(i);
    // reals are sorted ascending by eigen_structure; convenience order
    // descending for positional work.
    std::vector<int> rdesc(reals.rbegin(), reals.rend());

    using detail::SegreUnit;
    std::vector<SegreUnit> units;
    auto pair_sym = [&](int idx) {
        int b = detail::max_block(recs[idx]);
        std::string s = std::to_string(b);
        return s + "~" + s;
    };
    auto set_params = [&](std::initializer_list<std::pair<const char*, int>> names) {
        for (auto& [nm, idx] : names)
            c.params.push_back({nm, detail::value_string(recs[idx].value)});
    };

    auto simple_char = [&](int idx) {
        // +1 timelike, -1 spacelike for a definite one-dimensional eigenspace
        return recs[idx].sig_p > 0 ? 1 : -1;
    };

    int npairs = static_cast<int>(pairs.size());
    if (npairs == 2) {
        c.type = TypeLabel::VIII;
        units = {{pairs[0], "1~1"}, {pairs[1], "1~1"}};
        set_params({{"a", pairs[0]}, {"b", pairs[0]}, {"c", pairs[1]}, {"d", pairs[1]}});
        c.params[0].second = recs[pairs[0]].value.complex_value.re.to_string();
        c.params[1].second = recs[pairs[0]].value.complex_value.im.to_string();
        c.params[2].second = recs[pairs[1]].value.complex_value.re.to_string();
        c.params[3].second = recs[pairs[1]].value.complex_value.im.to_string();
    } else if (npairs == 1) {
        const auto& pr = recs[pairs[0]];
        if (pr.alg_mult == 2 && detail::max_block(pr) == 2) {
            c.type = TypeLabel::II;
            units = {{pairs[0], "2~2"}};
            set_params({{"a", pairs[0]}, {"b", pairs[0]}});
            c.params[0].second = pr.value.complex_value.re.to_string();
            c.params[1].second = pr.value.complex_value.im.to_string();
        } else if (pr.alg_mult == 2) {
            c.type = TypeLabel::VIII;
            c.coincidence = "lambda=mu";
            units = {{pairs[0], "1~1"}, {pairs[0], "1~1"}};
            set_params({{"a", pairs[0]}, {"b", pairs[0]}});
        } else if (reals.size() == 2) {
            c.type = TypeLabel::V;
            int t = simple_char(reals[0]) > 0 ? reals[0] : reals[1];
            int s = t == reals[0] ? reals[1] : reals[0];
            units = {{t, "1"}, {pairs[0], "1~1"}, {s, "1"}};
            set_params({{"lambda", t}, {"a", pairs[0]}, {"b", pairs[0]}, {"nu", s}});
            c.params[1].second = recs[pairs[0]].value.complex_value.re.to_string();
            c.params[2].second = recs[pairs[0]].value.complex_value.im.to_string();
        } else {
            // one real record of algebraic multiplicity 2
            const auto& rr = recs[reals[0]];
            if (detail::max_block(rr) == 2) {
                c.type = TypeLabel::VI;
                units = {{reals[0], "2"}, {pairs[0], "1~1"}};
                set_params({{"lambda", reals[0]}, {"a", pairs[0]}, {"b", pairs[0]}});
                c.params[1].second = recs[pairs[0]].value.complex_value.re.to_string();
                c.params[2].second = recs[pairs[0]].value.complex_value.im.to_string();
            } else {
                c.type = TypeLabel::V;
                c.coincidence = "lambda=nu";
                units = {{reals[0], "1"}, {pairs[0], "1~1"}, {reals[0], "1"}};
                set_params({{"lambda", reals[0]}, {"a", pairs[0]}, {"b", pairs[0]}});
            }
        }
    } else {
        // Entirely real spectrum.
        std::vector<int> algs;
        for (int i : reals) algs.push_back(recs[i].alg_mult);
        std::sort(algs.rbegin(), algs.rend());
        if (algs == std::vector<int>{4}) {
            int i0 = reals[0];
            const auto& blocks = recs[i0].jordan_blocks;
            if (blocks == std::vector<int>{4}) {
                c.type = TypeLabel::I;
                units = {{i0, "4"}};
                set_params({{"lambda", i0}});
            } else if (blocks == std::vector<int>{3, 1}) {
                bool a_form = recs[i0].sig_p > 0;  // (1,0,1) vs (0,1,1)
                c.type = a_form ? TypeLabel::IIIa : TypeLabel::IIIb;
                c.coincidence = "lambda=mu";
                units = a_form ? std::vector<SegreUnit>{{i0, "1"}, {i0, "3"}}
                               : std::vector<SegreUnit>{{i0, "3"}, {i0, "1"}};
                set_params({{"lambda", i0}});
            } else if (blocks == std::vector<int>{2, 2}) {
                c.type = TypeLabel::VII;
                c.coincidence = "lambda=mu";
                units = {{i0, "2"}, {i0, "2"}};
                set_params({{"lambda", i0}});
            } else if (blocks == std::vector<int>{2, 1, 1}) {
                c.type = TypeLabel::IV;
                c.coincidence = "lambda=mu=nu";
                units = {{i0, "1"}, {i0, "2"}, {i0, "1"}};
                set_params({{"lambda", i0}});
            } else {
                c.type = TypeLabel::IX;
                c.coincidence = "lambda=mu=nu=sigma";
                units = detail::ix_slots(recs, reals);
            }
        } else if (algs == std::vector<int>{3, 1}) {
            int big = recs[reals[0]].alg_mult == 3 ? reals[0] : reals[1];
            int small = big == reals[0] ? reals[1] : reals[0];
            const auto& blocks = recs[big].jordan_blocks;
            if (blocks == std::vector<int>{3}) {
                bool a_form = simple_char(small) > 0;
                c.type = a_form ? TypeLabel::IIIa : TypeLabel::IIIb;
                if (a_form) {
                    units = {{small, "1"}, {big, "3"}};
                    set_params({{"lambda", small}, {"mu", big}});
                } else {
                    units = {{big, "3"}, {small, "1"}};
                    set_params({{"lambda", big}, {"mu", small}});
                }
            } else if (blocks == std::vector<int>{2, 1}) {
                c.type = TypeLabel::IV;
                if (simple_char(small) < 0) {
                    // coincident eigenvalue holds the timelike simple: (12)1
                    c.coincidence = "lambda=mu";
                    units = {{big, "1"}, {big, "2"}, {small, "1"}};
                    set_params({{"lambda", big}, {"nu", small}});
                } else {
                    c.coincidence = "mu=nu";
                    units = {{small, "1"}, {big, "2"}, {big, "1"}};
                    set_params({{"lambda", small}, {"nu", big}});
                }
            } else {
                c.type = TypeLabel::IX;
                units = detail::ix_slots(recs, reals);
                c.coincidence = "three eigenvalues coincide";
            }
        } else if (algs == std::vector<int>{2, 2}) {
            int a = reals[0], b = reals[1];
            auto ba = recs[a].jordan_blocks, bb = recs[b].jordan_blocks;
            bool two_a = ba == std::vector<int>{2}, two_b = bb == std::vector<int>{2};
            if (two_a && two_b) {
                c.type = TypeLabel::VII;
                int hi = detail::compare_real_eigen(recs[a].value, recs[b].value) > 0 ? a : b;
                int lo = hi == a ? b : a;
                units = {{hi, "2"}, {lo, "2"}};
                set_params({{"lambda", hi}, {"mu", lo}});
            } else if (two_a != two_b) {
                c.type = TypeLabel::IV;
                c.coincidence = "lambda=nu";
                int blockrec = two_a ? a : b;
                int simplerec = two_a ? b : a;
                units = {{simplerec, "1"}, {blockrec, "2"}, {simplerec, "1"}};
                set_params({{"lambda", simplerec}, {"mu", blockrec}});
            } else {
                c.type = TypeLabel::IX;
                units = detail::ix_slots(recs, reals);
                c.coincidence = "two pairs coincide";
            }
        } else if (algs == std::vector<int>{2, 1, 1}) {
            int dbl = -1;
            std::vector<int> singles;
            for (int i : reals) {
                if (recs[i].alg_mult == 2) dbl = i;
                else singles.push_back(i);
            }
            if (recs[dbl].jordan_blocks == std::vector<int>{2}) {
                c.type = TypeLabel::IV;
                int t = simple_char(singles[0]) > 0 ? singles[0] : singles[1];
                int s = t == singles[0] ? singles[1] : singles[0];
                units = {{t, "1"}, {dbl, "2"}, {s, "1"}};
                set_params({{"lambda", t}, {"mu", dbl}, {"nu", s}});
            } else {
                c.type = TypeLabel::IX;
                units = detail::ix_slots(recs, reals);
                c.coincidence = "two eigenvalues coincide";
            }
        } else {
            c.type = TypeLabel::IX;
            units = detail::ix_slots(recs, reals);
        }
        if (c.type == TypeLabel::IX && c.params.empty()) {
            const char* names[4] = {"lambda", "mu", "nu", "sigma"};
            for (std::size_t i = 0; i < units.size() && i < 4; ++i)
                c.params.push_back({names[i], detail::value_string(recs[units[i].record].value)});
        }
    }

    if (c.type == TypeLabel::IX && units.size() != 4) {
        if (ctx.mode == Mode::Float)
            throw IllConditioned("eigenvector characters do not fill the four slots");
        throw InconsistentData("eigenvector characters do not fill the four slots");
    }
    c.segre = detail::render_segre(units);
    // Chain signs where a real eigenvalue carries a block of size >= 2.
    bool has_chain = false;
    for (int i : reals)
        if (detail::max_block(recs[i]) >= 2) has_chain = true;
    if (has_chain) c.epsilons = epsilon_signs(m, kind, recs, ctx);
    return c;
}

}  // namespace ricci22
