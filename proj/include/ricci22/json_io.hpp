#pragma once

#include <string>

#include <json.hpp>

#include "catalog.hpp"
#include "ricci.hpp"

namespace ricci22 {

using nlohmann::json;

struct InputDocument {
    Mat4 matrix = Mat4(4, 4);
    bool covariant = false;
    MetricKind basis = MetricKind::PsiON;
    Context ctx = Context::exact();
};

struct ValidationError : std::invalid_argument {
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

namespace detail {

// Scalar literals: "p/q", decimals, and sqrt2 terms like "1/2*sqrt2" or
// "3-1/2*sqrt2".
inline Scalar parse_scalar(const json& j, Mode mode, const std::string& where) {
    if (j.is_number()) {
        if (mode == Mode::Exact) {
            if (j.is_number_integer()) return Scalar(Rat(static_cast<long long>(j.get<long long>())));
            throw ValidationError(where + ": non-integer numeric literal needs float mode");
        }
        return Scalar::flt(j.get<double>());
    }
    if (!j.is_string()) throw ValidationError(where + ": matrix entries are strings or numbers");
    std::string s = j.get<std::string>();
    // strings always use the exact grammar; float mode converts at the end
    Rat rat(0), surd(0);
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        while (i < s.size() && (s[i] == '+' || s[i] == '-' || s[i] == ' ')) {
            if (s[i] == '-') sign = -sign;
            ++i;
        }
        std::size_t start = i;
        while (i < s.size() && s[i] != '+' && s[i] != '-') ++i;
        std::string term = s.substr(start, i - start);
        if (term.empty()) throw ValidationError(where + ": bad scalar literal '" + s + "'");
        bool is_surd = false;
        auto pos = term.find("sqrt2");
        if (pos != std::string::npos) {
            is_surd = true;
            term = term.substr(0, pos);
            while (!term.empty() && (term.back() == '*' || term.back() == ' ')) term.pop_back();
            if (term.empty()) term = "1";
        }
        Rat value;
        try {
            value = Rat::from_string(term);
        } catch (const std::exception&) {
            throw ValidationError(where + ": bad scalar literal '" + s + "'");
        }
        if (sign < 0) value = -value;
        (is_surd ? surd : rat) += value;
    }
    Scalar exact(rat, surd);
    return mode == Mode::Exact ? exact : Scalar::flt(exact.to_double());
}

inline json scalar_json(const Scalar& s) {
    if (!s.is_exact()) return json(s.to_double());
    return json(s.to_string());
}

inline json cscalar_json(const CScalar& z) {
    json j;
    j["re"] = scalar_json(z.re);
    j["im"] = scalar_json(z.im);
    j["approx"] = {z.re.to_double(), z.im.to_double()};
    return j;
}

}  // namespace detail

inline InputDocument parse_input(const json& j) {
    InputDocument doc;
    if (!j.is_object()) throw ValidationError("input document must be a JSON object");
    std::string mode = j.value("mode", "exact");
    if (mode == "exact") doc.ctx = Context::exact();
    else if (mode == "float") doc.ctx = Context::flt();
    else throw ValidationError("mode: expected \"exact\" or \"float\"");
    if (j.contains("tolerances")) {
        const auto& t = j["tolerances"];
        if (t.contains("zero_tol")) doc.ctx.zero_tol = t["zero_tol"].get<double>();
        if (t.contains("cluster_tol")) doc.ctx.cluster_tol = t["cluster_tol"].get<double>();
        if (doc.ctx.zero_tol <= 0 || doc.ctx.cluster_tol <= 0)
            throw ValidationError("tolerances: must be positive");
    }
    std::string form = j.value("form", "endomorphism");
    if (form == "covariant") doc.covariant = true;
    else if (form != "endomorphism") throw ValidationError("form: expected \"covariant\" or \"endomorphism\"");
    std::string basis = j.value("basis", "psion");
    if (basis == "witt") doc.basis = MetricKind::Witt;
    else if (basis != "psion") throw ValidationError("basis: expected \"psion\" or \"witt\"");
    if (!j.contains("matrix") || !j["matrix"].is_array() || j["matrix"].size() != 4)
        throw ValidationError("matrix: expected 4 rows");
    for (int r = 0; r < 4; ++r) {
        const auto& row = j["matrix"][r];
        if (!row.is_array() || row.size() != 4)
            throw ValidationError("matrix: row " + std::to_string(r) + " must have 4 entries");
        for (int c = 0; c < 4; ++c)
            doc.matrix(r, c) = detail::parse_scalar(
                row[c], doc.ctx.mode, "matrix[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
    if (doc.covariant) {
        for (int r = 0; r < 4; ++r)
            for (int c = r + 1; c < 4; ++c)
                if (!(doc.matrix(r, c) == doc.matrix(c, r)))
                    throw ValidationError("matrix: covariant form must be symmetric");
    }
    return doc;
}

inline json emit_input(const InputDocument& doc) {
    json j;
    j["schema"] = "ricci22/input/1";
    j["mode"] = doc.ctx.mode == Mode::Exact ? "exact" : "float";
    j["form"] = doc.covariant ? "covariant" : "endomorphism";
    j["basis"] = doc.basis == MetricKind::PsiON ? "psion" : "witt";
    json rows = json::array();
    for (int r = 0; r < 4; ++r) {
        json row = json::array();
        for (int c = 0; c < 4; ++c) row.push_back(detail::scalar_json(doc.matrix(r, c)));
        rows.push_back(row);
    }
    j["matrix"] = rows;
    return j;
}

// The endomorphism of an input document: covariant tensors are raised with
// the inverse gram of the stated basis.
inline Mat4 endomorphism_of(const InputDocument& doc) {
    if (!doc.covariant) return doc.matrix;
    return gram(doc.basis) * doc.matrix;  // both grams are involutions
}

inline json classification_json(const Classification& c) {
    json j;
    j["type"] = to_string(c.type);
    j["segre"] = c.segre;
    json evs = json::array();
    for (const auto& r : c.eigen) {
        json e;
        switch (r.value.kind) {
            case EigenValue::Kind::Real:
                e["value"] = detail::scalar_json(r.value.real);
                e["kind"] = "real";
                break;
            case EigenValue::Kind::AlgebraicRealRoot:
                e["kind"] = "algebraic-real";
                e["minpoly"] = r.value.minpoly.to_string();
                e["interval"] = {r.value.algebraic.lo().to_string(), r.value.algebraic.hi().to_string()};
                e["approx"] = r.value.approx_re;
                break;
            case EigenValue::Kind::ComplexPair:
                e["kind"] = "complex-pair";
                e["value"] = detail::cscalar_json(r.value.complex_value);
                break;
        }
        e["alg_mult"] = r.alg_mult;
        e["geom_mult"] = r.geom_mult;
        e["jordan_blocks"] = r.jordan_blocks;
        e["gram_signature"] = {r.sig_p, r.sig_q, r.sig_r};
        evs.push_back(e);
    }
    j["eigenvalues"] = evs;
    if (!c.epsilons.empty()) j["epsilons"] = c.epsilons;
    if (!c.coincidence.empty()) j["coincidence"] = c.coincidence;
    json params = json::object();
    for (auto& [k, v] : c.params) params[k] = v;
    j["params"] = params;
    return j;
}

inline json locus_json(const SingularLocus& loc) {
    json j;
    j["everything_singular"] = loc.everything_singular;
    json pts = json::array();
    for (const auto& p : loc.points) {
        json q;
        q["xi"] = {detail::cscalar_json(p.point.xi[0]), detail::cscalar_json(p.point.xi[1])};
        q["zeta"] = {detail::cscalar_json(p.point.zeta[0]), detail::cscalar_json(p.point.zeta[1])};
        q["real_point"] = p.point.is_real();
        q["kind"] = to_string(p.kind);
        q["order"] = p.order;
        q["chi"] = detail::cscalar_json(p.chi);
        q["alpha"] = detail::cscalar_json(p.alpha);
        q["beta"] = detail::cscalar_json(p.beta);
        q["discriminant"] = detail::cscalar_json(p.discriminant);
        q["from_eigenvector"] = p.from_eigenvector;
        if (!p.note.empty()) q["note"] = p.note;
        pts.push_back(q);
    }
    j["points"] = pts;
    json curves = json::array();
    for (const auto& c : loc.curves) {
        json q;
        switch (c.shape) {
            case CurveComponent::Shape::XiFixed:
                q["shape"] = "xi-fixed";
                q["fixed"] = {detail::cscalar_json(c.fixed[0]), detail::cscalar_json(c.fixed[1])};
                break;
            case CurveComponent::Shape::ZetaFixed:
                q["shape"] = "zeta-fixed";
                q["fixed"] = {detail::cscalar_json(c.fixed[0]), detail::cscalar_json(c.fixed[1])};
                break;
            case CurveComponent::Shape::Diagonal:
                q["shape"] = "conic";
                q["form"] = c.form11.to_string();
                break;
        }
        q["real"] = c.real;
        if (!c.note.empty()) q["note"] = c.note;
        curves.push_back(q);
    }
    j["curves"] = curves;
    return j;
}

// Full report of the classification pipeline for one input document.
inline json cmd_classify(const InputDocument& doc, OType otype) {
    Mat4 endo = doc.basis == MetricKind::PsiON
                    ? endomorphism_of(doc)
                    : change_kind(endomorphism_of(doc), MetricKind::Witt, MetricKind::PsiON);
    json rep;
    rep["schema"] = "ricci22/report/1";
    Classification cls = classify(endo, MetricKind::PsiON, doc.ctx);
    rep["classification"] = classification_json(cls);
    Mat4 phi = traceless(endo, MetricKind::PsiON);
    Scalar shift = endo.trace() / (doc.ctx.mode == Mode::Exact ? Scalar(4) : Scalar::flt(4.0));
    rep["traceless"] = {{"shift", detail::scalar_json(shift)}};
    Classification pcls = classify(phi, MetricKind::PsiON, doc.ctx);
    OrbitData od = orbit_lookup(pcls.type, pcls.segre);
    rep["orbit"] = {{"orbit_dim", od.orbit_dim},
                    {"family_params", od.family_params},
                    {"components_per_orbit", od.components_per_orbit},
                    {"families", od.families}};
    rep["table2_row"] = std::string(to_string(pcls.type)) + ":" + pcls.segre;
    BiQuadratic p = ricci_polynomial(covariant_psion(phi, MetricKind::PsiON), otype);
    json coeffs = json::array();
    for (int i = 0; i <= 2; ++i) {
        json row = json::array();
        for (int jx = 0; jx <= 2; ++jx) row.push_back(detail::scalar_json(p.at(i, jx)));
        coeffs.push_back(row);
    }
    rep["ricci_polynomial"] = {{"otype", to_string(otype)},
                               {"monomials", "rows X^2,XY,Y^2 by columns U^2,UV,V^2"},
                               {"coefficients", coeffs}};
    if (p.is_zero()) {
        rep["spinor_type"] = "zero";
    } else {
        rep["spinor_type"] = spinor_type(p).label;
    }
    rep["singular_locus"] = locus_json(singular_locus(phi, otype, doc.ctx, MetricKind::PsiON));
    return rep;
}

// Input document carrying a seeded random instance of a subtype.
inline json cmd_gen(const std::string& subtype, unsigned seed) {
    InputDocument doc;
    doc.matrix = random_instance(subtype, seed);
    doc.basis = MetricKind::PsiON;
    doc.covariant = false;
    json j = emit_input(doc);
    j["subtype"] = subtype;
    j["seed"] = seed;
    return j;
}

// Computed summary-table rows: classification, orbit data, spinor type and
// singularity structure of a deterministic representative per subtype row.
inline json cmd_table2() {
    json rows = json::array();
    for (const auto& row : subtype_rows()) {
        std::mt19937 rng(20260501u);
        auto [m, kind] = canonical_instance(row.id, rng);
        Context ctx = Context::exact();
        Classification cls = classify(m, kind, ctx);
        json r;
        r["row"] = row.id;
        r["type"] = to_string(cls.type);
        r["segre"] = cls.segre;
        r["df"] = row.df;
        OrbitData od = orbit_lookup(cls.type, cls.segre);
        r["orbit"] = {{"orbit_dim", od.orbit_dim},
                      {"family_params", od.family_params},
                      {"components_per_orbit", od.components_per_orbit},
                      {"families", od.families}};
        r["cc"] = row.cc;
        Mat4 endo = kind == MetricKind::PsiON ? m : change_kind(m, MetricKind::Witt, MetricKind::PsiON);
        BiQuadratic p = ricci_polynomial(covariant_psion(endo, MetricKind::PsiON), OType::PP);
        r["spinor_type"] = p.is_zero() ? "{-}" : spinor_type(p).label;
        r["spinor_types_by_variant"] = row.spinor_types;
        auto loc = singular_locus(endo, OType::PP, ctx, MetricKind::PsiON);
        json sing;
        if (loc.everything_singular) {
            sing = "KP1 x KP1";
        } else {
            std::string desc;
            for (const auto& pt : loc.points) {
                if (!desc.empty()) desc += ", ";
                desc += to_string(pt.kind);
                if (!pt.from_eigenvector) desc += " (component intersection)";
            }
            for (const auto& c : loc.curves) {
                if (!desc.empty()) desc += ", ";
                desc += "singular curve component";
            }
            if (desc.empty()) desc = "no singularities";
            sing = desc;
        }
        r["singularity_computed"] = sing;
        r["singularity"] = row.singularity;
        rows.push_back(r);
    }
    json out;
    out["schema"] = "ricci22/table2/1";
    out["rows"] = rows;
    return out;
}

inline std::string table2_text() {
    json t = cmd_table2();
    std::string s;
    for (const auto& r : t["rows"]) {
        s += r["row"].get<std::string>() + " | df " + r["df"].get<std::string>() + " | " +
             r["spinor_type"].get<std::string>() + " | " + r["cc"].get<std::string>() + " | " +
             r["singularity"].get<std::string>() + "\n";
    }
    return s;
}

}  // namespace ricci22
