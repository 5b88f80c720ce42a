#pragma once

#include <random>

#include "canonicalize.hpp"

namespace ricci22 {

// --------------------------------------------------------------------------
// Canonical matrices, one per type, in the basis convention where the form is
// simplest (nilpotent chains in Witt bases, rotations and diagonals in PsiON
// bases).

inline Mat4 canonical_type_I(const Rat& lambda, int eps) {
    Mat4 m(4, 4);
    for (int i = 0; i < 4; ++i) m(i, i) = Scalar(lambda);
    m(0, 1) = Scalar(1);
    m(3, 2) = Scalar(1);
    m(1, 3) = Scalar(eps);
    return m;  // Witt
}

inline Mat4 canonical_type_II(const Rat& a, const Rat& b) {
    Mat4 m(4, 4);
    m(0, 0) = m(1, 1) = m(2, 2) = m(3, 3) = Scalar(a);
    m(0, 1) = Scalar(b);
    m(1, 0) = Scalar(-b);
    m(2, 3) = Scalar(-b);
    m(3, 2) = Scalar(b);
    m(0, 2) = Scalar(1);
    m(1, 3) = Scalar(-1);
    return m;  // Witt
}

inline Mat4 canonical_type_IIIa(const Rat& lambda, const Rat& mu) {
    Scalar s = Scalar(1) / Scalar::sqrt2();
    Mat4 m(4, 4);
    m(0, 0) = Scalar(lambda);
    m(1, 1) = m(2, 2) = m(3, 3) = Scalar(mu);
    m(1, 2) = s;
    m(2, 1) = -s;
    m(2, 3) = s;
    m(3, 2) = s;
    return m;  // PsiON
}

inline Mat4 canonical_type_IIIb(const Rat& lambda, const Rat& mu) {
    Scalar s = Scalar(1) / Scalar::sqrt2();
    Mat4 m(4, 4);
    m(0, 0) = m(1, 1) = m(2, 2) = Scalar(lambda);
    m(3, 3) = Scalar(mu);
    m(0, 1) = s;
    m(1, 0) = s;
    m(1, 2) = -s;
    m(2, 1) = s;
    return m;  // PsiON
}

inline Mat4 canonical_type_IV(const Rat& lambda, const Rat& mu, const Rat& nu, int eps) {
    Mat4 m(4, 4);
    Rat h(eps, 2);
    m(0, 0) = Scalar(lambda);
    m(1, 1) = Scalar(mu + h);
    m(1, 2) = Scalar(-h);
    m(2, 1) = Scalar(h);
    m(2, 2) = Scalar(mu - h);
    m(3, 3) = Scalar(nu);
    return m;  // PsiON
}

inline Mat4 canonical_type_V(const Rat& lambda, const Rat& a, const Rat& b, const Rat& nu) {
    Mat4 m(4, 4);
    m(0, 0) = Scalar(lambda);
    m(1, 1) = m(2, 2) = Scalar(a);
    m(1, 2) = Scalar(b);
    m(2, 1) = Scalar(-b);
    m(3, 3) = Scalar(nu);
    return m;  // PsiON
}

inline Mat4 canonical_type_VI(const Rat& lambda, const Rat& a, const Rat& b, int eps) {
    Mat4 m(4, 4);
    Rat h(eps, 2);
    m(0, 0) = Scalar(lambda + h);
    m(0, 3) = Scalar(-h);
    m(3, 0) = Scalar(h);
    m(3, 3) = Scalar(lambda - h);
    m(1, 1) = m(2, 2) = Scalar(a);
    m(1, 2) = Scalar(b);
    m(2, 1) = Scalar(-b);
    return m;  // PsiON
}

inline Mat4 canonical_type_VII(const Rat& lambda, const Rat& mu, int eps, int omega) {
    Mat4 m(4, 4);
    m(0, 0) = m(2, 2) = Scalar(lambda);
    m(1, 1) = m(3, 3) = Scalar(mu);
    m(0, 2) = Scalar(eps);
    m(1, 3) = Scalar(omega);
    return m;  // Witt
}

inline Mat4 canonical_type_VIII(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    Mat4 m(4, 4);
    m(0, 0) = m(2, 2) = Scalar(a);
    m(1, 1) = m(3, 3) = Scalar(c);
    m(0, 2) = Scalar(b);
    m(2, 0) = Scalar(-b);
    m(1, 3) = Scalar(d);
    m(3, 1) = Scalar(-d);
    return m;  // PsiON
}

inline Mat4 canonical_type_IX(const Rat& l, const Rat& m_, const Rat& n, const Rat& s) {
    Mat4 m(4, 4);
    m(0, 0) = Scalar(l);
    m(1, 1) = Scalar(m_);
    m(2, 2) = Scalar(n);
    m(3, 3) = Scalar(s);
    return m;  // PsiON
}

// --------------------------------------------------------------------------
// The subtype rows: one entry per distinct (type, eigenvalue-multiplicity
// pattern). Rows whose relabelled variants the summary table lists separately
// carry the representative arrangement here; orbit data is keyed by the full
// Segre string and distinguishes the variants.

struct SubtypeRow {
    std::string id;        // "IV:[1(21)]"
    TypeLabel type;
    std::string segre;     // expected for the representative instance
    std::string df;        // family parameters + orbit dimension
    std::string cc;        // connected-component counts, as "families x comps"
    std::string spinor_types;  // summary-table column (by variant where split)
    std::string singularity;
};

inline const std::vector<SubtypeRow>& subtype_rows() {
    static const std::vector<SubtypeRow> rows = {
        {"I:[4]", TypeLabel::I, "[4]", "0+6", "1 x 4",
         "(2,1)(0,1) | (1,0)(1,2)", "tacnode at real null eigenvector"},
        {"II:[2~2]", TypeLabel::II, "[2~2]", "1+6", "2 x 4",
         "(2,1)(0,1) | (1,0)(1,2)", "pair of complex nodes with common tangent"},
        {"IIIa:[13]", TypeLabel::IIIa, "[13]", "1+6", "2 x 2", "(2,2)",
         "cusp at real null eigenvector"},
        {"IIIa:[(13)]", TypeLabel::IIIa, "[(13)]", "0+5", "1 x 2", "(1,0)(1,1)(0,1)",
         "triple point at real null eigenvector"},
        {"IIIb:[31]", TypeLabel::IIIb, "[31]", "1+6", "2 x 2", "(2,2)",
         "cusp at real null eigenvector"},
        {"IIIb:[(31)]", TypeLabel::IIIb, "[(31)]", "0+5", "1 x 2", "(1,0)(1,1)(0,1)",
         "triple point at real null eigenvector"},
        {"IV:[121]", TypeLabel::IV, "[121]", "2+6", "6 x 1", "(2,2)",
         "node at real null eigenvector"},
        {"IV:[1(21)]", TypeLabel::IV, "[1(21)]", "1+5", "2 x 1 | 2 x 1",
         "(1,1)(1,1) | (1,1)~(1,1)", "tacnode at real null eigenvector"},
        {"IV:[(12)1]", TypeLabel::IV, "[(12)1]", "1+5", "2 x 1 | 2 x 1",
         "(1,1)~(1,1) | (1,1)(1,1)", "tacnode at real null eigenvector"},
        {"IV:[(1|2|1)]", TypeLabel::IV, "[(1|2|1)]", "1+5", "2 x 1", "(1,0)(1,1)(0,1)",
         "three real nodes with real tangents"},
        {"IV:[(121)]", TypeLabel::IV, "[(121)]", "0+3", "1 x 1", "(1,0)^2(0,1)^2",
         "Ricci locus is a pair of double lines"},
        {"V:[11~11]", TypeLabel::V, "[11~11]", "3+6", "4 x 1", "(2,2)", "no singularities"},
        {"V:[(1|1~1|1)]", TypeLabel::V, "[(1|1~1|1)]", "2+5", "2 x 1", "(1,1)(1,1)",
         "two real nodes with real tangents"},
        {"VI:[21~1]", TypeLabel::VI, "[21~1]", "2+6", "2 x 2", "(2,2)",
         "a real node with real tangents"},
        {"VII:[22]", TypeLabel::VII, "[22]", "1+6", "2 x 2", "(2,1)(0,1) | (1,0)(1,2)",
         "two real nodes with common tangent"},
        {"VII:[(22)]", TypeLabel::VII, "[(22)]", "0+4", "1 x 2",
         "(1,0)(1,0)(0,1)^2 | (1,0)~(1,0)(0,1)^2 | (1,0)^2(0,1)(0,1) | (1,0)^2(0,1)~(0,1)",
         "double line intersecting two other components"},
        {"VIII:[1~11~1]", TypeLabel::VIII, "[1~11~1]", "3+6", "8 x 2", "(2,2)",
         "no singularities"},
        {"VIII:[(1~11~1)]", TypeLabel::VIII, "[(1~11~1)]", "1+4", "2 x 2",
         "(1,0)~(1,0)(0,1)(0,1) | (1,0)(1,0)(0,1)~(0,1)", "four complex nodes"},
        {"IX:[1111]", TypeLabel::IX, "[1111]", "3+6", "24 x 1", "(2,2)", "no singularities"},
        {"IX:[11(11)]", TypeLabel::IX, "[11(11)]", "2+5", "6 x 1",
         "(1,1)~(1,1) | (1,1)(1,1)", "two complex nodes"},
        {"IX:[(11)(11)]", TypeLabel::IX, "[(11)(11)]", "1+4", "2 x 1",
         "(1,0)~(1,0)(0,1)~(0,1)", "four complex nodes"},
        {"IX:[(111)1]", TypeLabel::IX, "[(111)1]", "1+3", "2 x 1", "(1,1)^2",
         "double projective line"},
        {"IX:[(1111)]", TypeLabel::IX, "[(1111)]", "0+0", "1 x 1", "{-}",
         "everything singular: the whole quadric"},
    };
    return rows;
}

// Orbit geometry for every Segre arrangement, including the relabelled
// variants the summary table tracks as separate rows.
inline OrbitData orbit_lookup(TypeLabel type, const std::string& segre) {
    auto k = [&](const char* s) { return segre == s; };
    switch (type) {
        case TypeLabel::I: return {6, 0, 4, 1};
        case TypeLabel::II: return {6, 1, 4, 2};
        case TypeLabel::IIIa:
        case TypeLabel::IIIb:
            return (segre == "[13]" || segre == "[31]") ? OrbitData{6, 1, 2, 2}
                                                        : OrbitData{5, 0, 2, 1};
        case TypeLabel::IV:
            if (k("[121]")) return {6, 2, 1, 6};
            if (k("[(121)]")) return {3, 0, 1, 1};
            return {5, 1, 1, 2};
        case TypeLabel::V: return k("[11~11]") ? OrbitData{6, 3, 1, 4} : OrbitData{5, 2, 1, 2};
        case TypeLabel::VI: return {6, 2, 2, 2};
        case TypeLabel::VII: return k("[22]") ? OrbitData{6, 1, 2, 2} : OrbitData{4, 0, 2, 1};
        case TypeLabel::VIII:
            return k("[1~11~1]") ? OrbitData{6, 3, 2, 8} : OrbitData{4, 1, 2, 2};
        case TypeLabel::IX:
            if (k("[1111]")) return {6, 3, 1, 24};
            if (k("[(11)(11)]") || k("[(1|(1|1)|1)]") || k("[(1|(11)|1)]")) return {4, 1, 1, 2};
            if (k("[(111)1]") || k("[(11|1|1)]") || k("[(1|1|11)]") || k("[1(111)]"))
                return {3, 1, 1, 2};
            if (k("[(1111)]")) return {0, 0, 1, 1};
            return {5, 2, 1, 6};
    }
    return {};
}

inline OrbitData orbit_data(const Classification& c) {
    // Orbit geometry applies to the traceless representative; the eigenvalue
    // sum must vanish.
    Scalar sum(0);
    bool exact_ok = true;
    double tr = 0;
    for (const auto& r : c.eigen) {
        int mult = r.alg_mult * (r.value.is_real() ? 1 : 2);
        tr += r.value.approx_re * mult;
        if (r.value.kind == EigenValue::Kind::Real && r.value.real.is_exact())
            sum += r.value.real * Scalar(mult);
        else
            exact_ok = false;
    }
    if (exact_ok) {
        if (!sum.is_zero()) throw NotTraceless();
    } else if (std::abs(tr) > 1e-6) {
        throw NotTraceless();
    }
    return orbit_lookup(c.type, c.segre);
}

// --------------------------------------------------------------------------
// Seeded random instances: the canonical matrix with admissible random
// rational parameters, conjugated by a random spin-pair orthogonal map, and
// expressed in the standard PsiON basis.

namespace detail {

inline Rat rand_rat(std::mt19937& rng, int lo = -6, int hi = 6, int maxden = 3) {
    int den = 1 + static_cast<int>(rng() % maxden);
    int num = lo + static_cast<int>(rng() % (hi - lo + 1));
    return Rat(num, den);
}

inline Rat rand_nonzero(std::mt19937& rng, int lo = -6, int hi = 6) {
    for (;;) {
        Rat r = rand_rat(rng, lo, hi);
        if (!r.is_zero()) return r;
    }
}

inline Mat<Scalar> rand_unimodular2(std::mt19937& rng, bool det_minus) {
    Mat<Scalar> a = Mat<Scalar>::identity(2, Scalar(1));
    int steps = 1 + static_cast<int>(rng() % 3);
    for (int s = 0; s < steps; ++s) {
        Mat<Scalar> e = Mat<Scalar>::identity(2, Scalar(1));
        int k = static_cast<int>(rng() % 5) - 2;
        if (rng() % 2) e(0, 1) = Scalar(k);
        else e(1, 0) = Scalar(k);
        a = a * e;
    }
    if (det_minus) {
        Mat<Scalar> f(2, 2);
        f(0, 0) = Scalar(1);
        f(1, 1) = Scalar(-1);
        a = a * f;
    }
    return a;
}

inline Mat4 rand_spin_orthogonal(std::mt19937& rng) {
    bool minus = rng() % 2;
    bool swapping = rng() % 2;
    Mat<Scalar> a1 = rand_unimodular2(rng, minus);
    Mat<Scalar> a2 = rand_unimodular2(rng, minus);
    return spin_pair_action(a1, a2, swapping ? Chirality::Swapping : Chirality::Preserving);
}

}  // namespace detail

// Conjugate a matrix given in `kind` coordinates by an orthogonal map in
// PsiON coordinates; the result is in PsiON coordinates.
inline Mat4 conjugate_to_psion(const Mat4& m, MetricKind kind, const Mat4& l) {
    Mat4 mp = kind == MetricKind::PsiON ? m : change_kind(m, MetricKind::Witt, MetricKind::PsiON);
    Mat4 linv = adjoint(l, MetricKind::PsiON);  // orthogonal: inverse = adjoint
    return l * mp * linv;
}

// Canonical traceless instance of a subtype row with randomized admissible
// parameters (before conjugation). Returns the matrix in its natural kind.
inline std::pair<Mat4, MetricKind> canonical_instance(const std::string& id, std::mt19937& rng) {
    auto nz = [&]() { return detail::rand_nonzero(rng); };
    auto any = [&]() { return detail::rand_rat(rng); };
    int sg = rng() % 2 ? 1 : -1;
    if (id == "I:[4]") return {canonical_type_I(Rat(0), sg), MetricKind::Witt};
    if (id == "II:[2~2]") return {canonical_type_II(Rat(0), nz()), MetricKind::Witt};
    if (id == "IIIa:[13]") {
        Rat mu = nz();
        return {canonical_type_IIIa(-Rat(3) * mu, mu), MetricKind::PsiON};
    }
    if (id == "IIIa:[(13)]") return {canonical_type_IIIa(Rat(0), Rat(0)), MetricKind::PsiON};
    if (id == "IIIb:[31]") {
        Rat l = nz();
        return {canonical_type_IIIb(l, -Rat(3) * l), MetricKind::PsiON};
    }
    if (id == "IIIb:[(31)]") return {canonical_type_IIIb(Rat(0), Rat(0)), MetricKind::PsiON};
    if (id == "IV:[121]") {
        for (;;) {
            Rat l = any(), n = any();
            if ((Rat(3) * l + n).is_zero() || (l + Rat(3) * n).is_zero() || l == n) continue;
            return {canonical_type_IV(l, -(l + n) / Rat(2), n, sg), MetricKind::PsiON};
        }
    }
    if (id == "IV:[1(21)]") {
        Rat n = nz();
        return {canonical_type_IV(-Rat(3) * n, n, n, sg), MetricKind::PsiON};
    }
    if (id == "IV:[(12)1]") {
        Rat l = nz();
        return {canonical_type_IV(l, l, -Rat(3) * l, sg), MetricKind::PsiON};
    }
    if (id == "IV:[(1|2|1)]") {
        Rat l = nz();
        return {canonical_type_IV(l, -l, l, sg), MetricKind::PsiON};
    }
    if (id == "IV:[(121)]") return {canonical_type_IV(Rat(0), Rat(0), Rat(0), sg), MetricKind::PsiON};
    if (id == "V:[11~11]") {
        for (;;) {
            Rat l = any(), n = any();
            if (l == n) continue;
            return {canonical_type_V(l, -(l + n) / Rat(2), nz(), n), MetricKind::PsiON};
        }
    }
    if (id == "V:[(1|1~1|1)]") {
        Rat l = any();
        return {canonical_type_V(l, -l, nz(), l), MetricKind::PsiON};
    }
    if (id == "VI:[21~1]") {
        Rat l = any();
        return {canonical_type_VI(l, -l, nz(), sg), MetricKind::PsiON};
    }
    if (id == "VII:[22]") {
        Rat l = nz();
        int om = rng() % 2 ? 1 : -1;
        return {canonical_type_VII(l, -l, sg, om), MetricKind::Witt};
    }
    if (id == "VII:[(22)]") {
        int om = rng() % 2 ? 1 : -1;
        return {canonical_type_VII(Rat(0), Rat(0), sg, om), MetricKind::Witt};
    }
    if (id == "VIII:[1~11~1]") {
        for (;;) {
            Rat a = any(), b = nz(), d = nz();
            if (a.is_zero() && (b == d || b == -d)) continue;
            return {canonical_type_VIII(a, b, -a, d), MetricKind::PsiON};
        }
    }
    if (id == "VIII:[(1~11~1)]") {
        Rat b = nz();
        return {canonical_type_VIII(Rat(0), b, Rat(0), b), MetricKind::PsiON};
    }
    auto ix = [&](const Rat& l, const Rat& m_, const Rat& n, const Rat& s) {
        return std::pair<Mat4, MetricKind>{canonical_type_IX(l, m_, n, s), MetricKind::PsiON};
    };
    if (id == "IX:[1111]") {
        for (;;) {
            Rat l = any(), m_ = any(), n = any();
            Rat s = -(l + m_ + n);
            std::vector<Rat> v{l, m_, n, s};
            bool distinct = true;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    if (v[i] == v[j]) distinct = false;
            if (distinct) return ix(l, m_, n, s);
        }
    }
    if (id == "IX:[11(11)]" || id == "IX:[(11)11]") {
        bool co_spacelike = id == "IX:[11(11)]";
        for (;;) {
            Rat a = any(), b = any();
            Rat cval = -(a + b) / Rat(2);
            if (a == b || a == cval || b == cval) continue;
            if (co_spacelike) {
                // coincident value on the spacelike slots
                if (a < b) std::swap(a, b);
                return ix(a, b, cval, cval);
            }
            if (a < b) std::swap(a, b);
            return ix(cval, cval, a, b);
        }
    }
    if (id == "IX:[1(11)1]") {
        for (;;) {
            Rat cv = any(), l = any();
            Rat s = -(l + Rat(2) * cv);
            if (l <= cv || s >= cv || l == s) continue;
            return ix(l, cv, cv, s);
        }
    }
    if (id == "IX:[(1|11|1)]") {
        for (;;) {
            Rat cv = any(), mu = any();
            Rat n = -(mu + Rat(2) * cv);
            if (mu >= cv || n <= cv || mu == n) continue;
            return ix(cv, mu, n, cv);
        }
    }
    if (id == "IX:[(1|1|1)1]") {
        for (;;) {
            Rat cv = any(), mu = any();
            Rat s = -(mu + Rat(2) * cv);
            if (mu >= cv || s >= cv || mu == s) continue;
            return ix(cv, mu, cv, s);
        }
    }
    if (id == "IX:[1(1|1|1)]") {
        for (;;) {
            Rat cv = any(), l = any();
            Rat n = -(l + Rat(2) * cv);
            if (l <= cv || n <= cv || l == n) continue;
            return ix(l, cv, n, cv);
        }
    }
    if (id == "IX:[(11)(11)]") {
        Rat cv = nz().abs();
        return ix(cv, cv, -cv, -cv);
    }
    if (id == "IX:[(1|(1|1)|1)]") {
        Rat cv = nz().abs();
        return ix(cv, -cv, cv, -cv);
    }
    if (id == "IX:[(111)1]") {
        Rat cv = nz().abs();
        return ix(cv, cv, cv, -Rat(3) * cv);
    }
    if (id == "IX:[(11|1|1)]") {
        Rat cv = -nz().abs();
        return ix(cv, cv, -Rat(3) * cv, cv);
    }
    if (id == "IX:[(1|1|11)]") {
        Rat cv = nz().abs();
        return ix(cv, -Rat(3) * cv, cv, cv);
    }
    if (id == "IX:[1(111)]") {
        Rat cv = -nz().abs();
        return ix(-Rat(3) * cv, cv, cv, cv);
    }
    if (id == "IX:[(1111)]") return ix(Rat(0), Rat(0), Rat(0), Rat(0));
    throw std::invalid_argument("unknown subtype id: " + id);
}

// Random instance of a subtype: canonical matrix with random parameters,
// conjugated by a random spin-pair orthogonal map; PsiON coordinates.
inline Mat4 random_instance(const std::string& id, unsigned seed) {
    std::mt19937 rng(seed * 2654435761u + 17);
    auto [m, kind] = canonical_instance(id, rng);
    Mat4 l = detail::rand_spin_orthogonal(rng);
    return conjugate_to_psion(m, kind, l);
}

}  // namespace ricci22
