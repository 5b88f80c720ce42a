#pragma once

#include <memory>
#include <utility>
#include <vector>
#include <stdexcept>

#include "rational.hpp"

namespace ricci22 {

// Dense univariate polynomial over Q, low-degree-first coefficients.
class Poly {
public:
    Poly() {}
    explicit Poly(const Rat& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    explicit Poly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }

    static Poly x() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }
    static Poly linear(const Rat& root) { return Poly(std::vector<Rat>{-root, Rat(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& operator[](std::size_t i) const {
        static const Rat zero(0);
        return i < c_.size() ? c_[i] : zero;
    }
    const Rat& lead() const { return c_.back(); }
    const std::vector<Rat>& coeffs() const { return c_; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Rat& s) {
        std::vector<Rat> r = a.c_;
        for (auto& c : r) c *= s;
        return Poly(std::move(r));
    }
    Poly operator-() const { return *this * Rat(-1); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
        if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
        std::vector<Rat> rem = a.c_;
        std::vector<Rat> quo;
        int db = b.degree();
        if (a.degree() >= db) quo.assign(a.degree() - db + 1, Rat(0));
        for (int d = a.degree(); d >= db; --d) {
            Rat f = rem[d] / b.lead();
            if (!f.is_zero()) {
                quo[d - db] = f;
                for (int i = 0; i <= db; ++i) rem[d - db + i] -= f * b[i];
            }
            rem.pop_back();
        }
        q = Poly(std::move(quo));
        r = Poly(std::move(rem));
    }
    friend Poly operator/(const Poly& a, const Poly& b) {
        Poly q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend Poly operator%(const Poly& a, const Poly& b) {
        Poly q, r;
        divmod(a, b, q, r);
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Rat> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long long>(i));
        return Poly(std::move(r));
    }

    Rat eval(const Rat& x) const {
        Rat v(0);
        for (std::size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
        return v;
    }
    double eval_d(double x) const {
        double v = 0;
        for (std::size_t i = c_.size(); i-- > 0;) v = v * x + c_[i].to_double();
        return v;
    }
    // Interval evaluation by Horner; returns [lo, hi] containing the range image.
    void eval_interval(const Rat& lo, const Rat& hi, Rat& out_lo, Rat& out_hi) const {
        Rat vlo(0), vhi(0);
        for (std::size_t i = c_.size(); i-- > 0;) {
            Rat cands[4] = {vlo * lo, vlo * hi, vhi * lo, vhi * hi};
            Rat mn = cands[0], mx = cands[0];
            for (int k = 1; k < 4; ++k) {
                if (cands[k] < mn) mn = cands[k];
                if (cands[k] > mx) mx = cands[k];
            }
            vlo = mn + c_[i];
            vhi = mx + c_[i];
        }
        out_lo = vlo;
        out_hi = vhi;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * (Rat(1) / lead());
    }

    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.is_zero() ? a : a.monic();
    }

    // Cauchy bound: all real roots lie in (-B, B).
    Rat root_bound() const {
        Rat b(0);
        for (int i = 0; i < degree(); ++i) {
            Rat t = (c_[i] / lead()).abs();
            if (t > b) b = t;
        }
        return b + Rat(1);
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += c_[i].sign() > 0 ? " + " : " - ";
            else if (c_[i].sign() < 0) s += "-";
            Rat a = c_[i].abs();
            if (i == 0 || a != Rat(1)) s += a.to_string();
            if (i >= 1) {
                if (a != Rat(1)) s += "*";
                s += "t";
                if (i >= 2) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rat> c_;
};

// ---------------------------------------------------------------------------
// Sturm sequences and real-root isolation.

inline std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    chain.push_back(p);
    Poly d = p.derivative();
    if (!d.is_zero()) chain.push_back(d);
    while (chain.size() >= 2 && !chain.back().is_zero()) {
        Poly r = chain[chain.size() - 2] % chain.back();
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

inline int sturm_variations(const std::vector<Poly>& chain, const Rat& x) {
    int var = 0, prev = 0;
    for (const auto& p : chain) {
        int s = p.eval(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

// Number of distinct real roots in (a, b].
inline int sturm_count(const std::vector<Poly>& chain, const Rat& a, const Rat& b) {
    return sturm_variations(chain, a) - sturm_variations(chain, b);
}

struct RootInterval {
    Rat lo, hi;  // open interval (lo, hi) with p(lo) != 0 != p(hi), exactly one root inside
};

// Isolating intervals for all distinct real roots of a squarefree polynomial,
// in increasing order.
inline std::vector<RootInterval> isolate_real_roots(const Poly& p) {
    std::vector<RootInterval> out;
    if (p.degree() <= 0) return out;
    auto chain = sturm_chain(p);
    Rat bound = p.root_bound();
    struct Seg {
        Rat lo, hi;
        int count;
    };
    std::vector<Seg> work;
    {
        int total = sturm_count(chain, -bound, bound);
        if (total > 0) work.push_back({-bound, bound, total});
    }
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.count == 1) {
            out.push_back({s.lo, s.hi});
            continue;
        }
        Rat mid = (s.lo + s.hi) / Rat(2);
        while (p.eval(mid).sign() == 0) mid = (s.lo + mid) / Rat(2);
        int left = sturm_count(chain, s.lo, mid);
        if (left > 0) work.push_back({s.lo, mid, left});
        if (s.count - left > 0) work.push_back({mid, s.hi, s.count - left});
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

// Simplest rational (smallest denominator) in the closed interval [a, b].
inline Rat simplest_rational_in(const Rat& a, const Rat& b) {
    if (a > b) throw std::logic_error("simplest_rational_in: empty interval");
    if (a.sign() <= 0 && b.sign() >= 0) return Rat(0);
    if (b.sign() <= 0) return -simplest_rational_in(-b, -a);
    // 0 < a <= b
    BigInt q, r;
    BigInt::divmod(a.num(), a.den(), q, r);
    Rat fl(q);  // floor, since a > 0
    if (a.is_integer()) return a;
    if (fl + Rat(1) <= b) return fl + Rat(1);
    Rat inner = simplest_rational_in(Rat(1) / (b - fl), Rat(1) / (a - fl));
    return fl + Rat(1) / inner;
}

// ---------------------------------------------------------------------------
// A real algebraic number: monic irreducible minimal polynomial plus an
// isolating open interval with a sign change across it.
class AlgebraicReal {
public:
    AlgebraicReal() {}
    AlgebraicReal(Poly minpoly, Rat lo, Rat hi)
        : p_(std::make_shared<Poly>(std::move(minpoly))), lo_(std::move(lo)), hi_(std::move(hi)) {
        if (p_->eval(lo_).sign() * p_->eval(hi_).sign() >= 0)
            throw std::logic_error("AlgebraicReal: interval endpoints must straddle the root");
    }

    const Poly& minpoly() const { return *p_; }
    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }

    void refine() const {
        Rat mid = (lo_ + hi_) / Rat(2);
        int s = p_->eval(mid).sign();
        if (s == 0) {
            // Cannot happen for an irreducible minpoly of degree >= 2.
            throw std::logic_error("AlgebraicReal: rational midpoint is a root");
        }
        if (s == p_->eval(lo_).sign()) lo_ = mid;
        else hi_ = mid;
    }
    void refine_below(const Rat& width) const {
        while (hi_ - lo_ >= width) refine();
    }

    // Exact sign of g evaluated at this root, for any rational polynomial g.
    int sign_of(const Poly& g) const {
        Poly r = g % *p_;
        if (r.is_zero()) return 0;
        for (;;) {
            Rat vlo, vhi;
            r.eval_interval(lo_, hi_, vlo, vhi);
            if (vlo.sign() > 0) return 1;
            if (vhi.sign() < 0) return -1;
            refine();
        }
    }

    int compare(const Rat& x) const {
        if (p_->eval(x).sign() == 0) {
            return 0;  // only possible if x is the root itself (degree-1 minpoly)
        }
        for (;;) {
            if (x <= lo_) return 1;
            if (x >= hi_) return -1;
            refine();
        }
    }
    // Works for roots known to be distinct or detectably equal (same minpoly).
    int compare(const AlgebraicReal& o) const {
        if (p_ == o.p_ || *p_ == *o.p_) {
            if (lo_ == o.lo_ && hi_ == o.hi_) return 0;
        }
        for (;;) {
            if (hi_ <= o.lo_) return -1;
            if (lo_ >= o.hi_) return 1;
            refine();
            o.refine();
            if (*p_ == *o.p_ && lo_ == o.lo_ && hi_ == o.hi_) return 0;
        }
    }

    double to_double() const {
        refine_below(Rat(1, 1000000000000LL));
        return ((lo_ + hi_) / Rat(2)).to_double();
    }

private:
    std::shared_ptr<Poly> p_;
    mutable Rat lo_, hi_;
};

// ---------------------------------------------------------------------------
// Factorization over Q for degree <= 4.

// Rational roots of p, each repeated with multiplicity; p is replaced by the
// cofactor with those roots removed. Avoids integer factoring: roots are
// isolated, reconstructed as the simplest rational in a tight interval, and
// verified by exact evaluation.
inline std::vector<Rat> extract_rational_roots(Poly& p) {
    std::vector<Rat> roots;
    for (;;) {
        if (p.degree() < 1) return roots;
        if (p[0].is_zero()) {
            roots.push_back(Rat(0));
            Poly q, r;
            Poly::divmod(p, Poly::x(), q, r);
            p = q;
            continue;
        }
        Poly sf = p / Poly::gcd(p, p.derivative());
        bool found = false;
        // Denominator bound: clear coefficient denominators, then any rational
        // root p/q has q dividing the integer leading coefficient.
        BigInt denbound(1);
        for (const auto& c : sf.coeffs()) denbound = denbound / BigInt::gcd(denbound, c.den()) * c.den();
        Rat lead = (sf.lead() * Rat(denbound)).abs();
        Rat width = Rat(1) / (lead * lead * Rat(2) + Rat(2));
        for (auto& iv : isolate_real_roots(sf)) {
            Rat lo = iv.lo, hi = iv.hi;
            auto chain = sturm_chain(sf);
            while (hi - lo >= width) {
                Rat mid = (lo + hi) / Rat(2);
                if (sf.eval(mid).sign() == 0) {
                    lo = mid;
                    hi = mid;
                    break;
                }
                if (sturm_count(chain, lo, mid) == 1) hi = mid;
                else lo = mid;
            }
            Rat cand = lo == hi ? lo : simplest_rational_in(lo, hi);
            if (p.eval(cand).is_zero()) {
                roots.push_back(cand);
                Poly q, r;
                Poly::divmod(p, Poly::linear(cand), q, r);
                p = q;
                found = true;
                break;
            }
        }
        if (!found) return roots;
    }
}

struct IrreducibleFactor {
    Poly poly;  // monic irreducible over Q
    int multiplicity = 0;
};

namespace detail {

// Splits a monic squarefree quartic with no rational roots into two monic
// rational quadratics if possible.
inline bool split_quartic(const Poly& p, Poly& f1, Poly& f2) {
    // Depress: t = y - p3/4, dep(y) = p(y - shift).
    Rat shift = p[3] / Rat(4);
    Poly sub(std::vector<Rat>{-shift, Rat(1)});
    Poly dep, acc(Rat(1));
    for (int i = 0; i <= p.degree(); ++i) {
        dep = dep + acc * p[i];
        acc = acc * sub;
    }
    Rat P = dep[2], Q = dep[1], R = dep[0];
    auto emit = [&](const Rat& A, const Rat& B, const Rat& C) {
        // (y^2 + A y + B)(y^2 - A y + C) in y; substitute back y = t + shift.
        Poly yy = Poly(std::vector<Rat>{shift, Rat(1)});
        Poly q1 = yy * yy + yy * A + Poly(B);
        Poly q2 = yy * yy + yy * (-A) + Poly(C);
        if (q1 * q2 != p) return false;
        f1 = q1;
        f2 = q2;
        return true;
    };
    if (Q.is_zero()) {
        // Biquadratic: (y^2 - z1)(y^2 - z2) with z roots of z^2 + P z + R,
        // or the symmetric split (y^2 + a y + b)(y^2 - a y + b).
        Poly zq(std::vector<Rat>{R, P, Rat(1)});
        Poly zc = zq;
        auto zroots = extract_rational_roots(zc);
        if (zroots.size() == 2) {
            if (emit(Rat(0), -zroots[0], -zroots[1])) return true;
        }
        Rat b, a2, a;
        if (R.sqrt_exact(b)) {
            for (int sg = 0; sg < 2; ++sg) {
                Rat bb = sg ? -b : b;
                a2 = Rat(2) * bb - P;
                if (a2.sign() >= 0 && a2.sqrt_exact(a)) {
                    if (emit(a, bb, bb)) return true;
                }
            }
        }
        return false;
    }
    // Resolvent cubic in z = a^2: z^3 + 2P z^2 + (P^2 - 4R) z - Q^2 = 0.
    Poly res(std::vector<Rat>{-Q * Q, P * P - Rat(4) * R, Rat(2) * P, Rat(1)});
    Poly rc = res;
    for (const auto& z : extract_rational_roots(rc)) {
        Rat a;
        if (z.sign() > 0 && z.sqrt_exact(a)) {
            for (int sg = 0; sg < 2; ++sg) {
                Rat aa = sg ? -a : a;
                Rat B = (P + z - Q / aa) / Rat(2);
                Rat C = (P + z + Q / aa) / Rat(2);
                if (emit(aa, B, C)) return true;
            }
        }
    }
    return false;
}

}  // namespace detail

// Complete factorization over Q of a polynomial of degree <= 4 into monic
// irreducible factors with multiplicities.
inline std::vector<IrreducibleFactor> factor_over_q(const Poly& input) {
    if (input.degree() > 4) throw std::invalid_argument("factor_over_q: degree > 4 unsupported");
    std::vector<IrreducibleFactor> out;
    if (input.degree() <= 0) return out;
    // Yun squarefree decomposition.
    Poly p = input.monic();
    std::vector<std::pair<Poly, int>> squarefree;
    {
        Poly g = Poly::gcd(p, p.derivative());
        if (g.degree() == 0) {
            squarefree.push_back({p, 1});
        } else {
            Poly w = p / g, y = p.derivative() / g, z = y - w.derivative();
            int i = 1;
            while (w.degree() > 0) {
                Poly gi = Poly::gcd(w, z);
                if (gi.degree() > 0) squarefree.push_back({gi.monic(), i});
                w = w / gi;
                y = z / gi;
                z = y - w.derivative();
                ++i;
            }
        }
    }
    for (auto& [sf, mult] : squarefree) {
        Poly rem = sf;
        for (const auto& root : extract_rational_roots(rem))
            out.push_back({Poly::linear(root), mult});
        if (rem.degree() == 0) continue;
        if (rem.degree() == 1) {
            out.push_back({rem.monic(), mult});
        } else if (rem.degree() == 2 || rem.degree() == 3) {
            // No rational root of degree 2 or 3 means irreducible over Q.
            out.push_back({rem.monic(), mult});
        } else {
            Poly f1, f2;
            if (detail::split_quartic(rem.monic(), f1, f2)) {
                out.push_back({f1.monic(), mult});
                out.push_back({f2.monic(), mult});
            } else {
                out.push_back({rem.monic(), mult});
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Elements of the field Q[t]/(m) for an irreducible modulus m. Used for exact
// kernel computations at algebraic eigenvalues; orderings are decided through
// the isolating interval of the designated real root.
class PolyMod {
public:
    PolyMod() {}
    PolyMod(Poly v, std::shared_ptr<const Poly> m) : v_(std::move(v)), m_(std::move(m)) { reduce(); }

    static PolyMod constant(const Rat& c, std::shared_ptr<const Poly> m) { return PolyMod(Poly(c), std::move(m)); }
    static PolyMod generator(std::shared_ptr<const Poly> m) { return PolyMod(Poly::x(), std::move(m)); }

    const Poly& rep() const { return v_; }
    const std::shared_ptr<const Poly>& modulus() const { return m_; }
    bool is_zero() const { return v_.is_zero(); }

    friend PolyMod operator+(const PolyMod& a, const PolyMod& b) { return PolyMod(a.v_ + b.v_, a.mod(b)); }
    friend PolyMod operator-(const PolyMod& a, const PolyMod& b) { return PolyMod(a.v_ - b.v_, a.mod(b)); }
    friend PolyMod operator*(const PolyMod& a, const PolyMod& b) { return PolyMod(a.v_ * b.v_, a.mod(b)); }
    friend PolyMod operator/(const PolyMod& a, const PolyMod& b) { return a * b.inverse(); }
    PolyMod operator-() const { return PolyMod(-v_, m_); }
    PolyMod& operator+=(const PolyMod& b) { return *this = *this + b; }
    PolyMod& operator-=(const PolyMod& b) { return *this = *this - b; }
    PolyMod& operator*=(const PolyMod& b) { return *this = *this * b; }

    PolyMod inverse() const {
        if (is_zero()) throw std::domain_error("PolyMod: inverse of zero");
        // Extended Euclid on (v, m): u*v + w*m = gcd = const.
        Poly r0 = *m_, r1 = v_, s0, s1(Rat(1));
        while (!r1.is_zero()) {
            Poly q, r;
            Poly::divmod(r0, r1, q, r);
            Poly s = s0 - q * s1;
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s);
        }
        if (r0.degree() != 0) throw std::logic_error("PolyMod: modulus not irreducible");
        return PolyMod(s0 * (Rat(1) / r0[0]), m_);
    }

private:
    std::shared_ptr<const Poly> mod(const PolyMod& o) const { return m_ ? m_ : o.m_; }
    void reduce() {
        if (m_ && v_.degree() >= m_->degree()) v_ = v_ % *m_;
    }
    Poly v_;
    std::shared_ptr<const Poly> m_;
};

}  // namespace ricci22
