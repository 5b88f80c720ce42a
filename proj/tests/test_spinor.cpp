#include "doctest.h"

#include <random>

#include <ricci22/spinor.hpp>

using namespace ricci22;

namespace {
Vec4 e(int i) {
    Vec4 v(4, Scalar(0));
    v[i] = Scalar(1);
    return v;
}
Vec4 scaled(const Vec4& v, const Scalar& s) {
    Vec4 r = v;
    for (auto& x : r) x *= s;
    return r;
}
Vec4 add(const Vec4& a, const Vec4& b) {
    Vec4 r = a;
    for (int i = 0; i < 4; ++i) r[i] += b[i];
    return r;
}
const SpinVec O{Scalar(1), Scalar(0)};
const SpinVec I{Scalar(0), Scalar(1)};
Mat<Scalar> m2(std::initializer_list<long long> v) {
    Mat<Scalar> m(2, 2);
    int i = 0;
    for (auto x : v) {
        m(i / 2, i % 2) = Scalar(x);
        ++i;
    }
    return m;
}
}  // namespace

TEST_CASE("vector to spinor matrix and back") {
    Mat<Scalar> z1 = vec_to_z(e(0));
    CHECK(z1 == Mat<Scalar>::identity(2, Scalar(1)));
    Mat<Scalar> z2 = vec_to_z(e(1));
    CHECK(z2(0, 1) == Scalar(-1));
    CHECK(z2(1, 0) == Scalar(1));
    CHECK(z2(0, 0).is_zero());
    CHECK(vec_to_z(Vec4(4, Scalar(0))) == Mat<Scalar>(2, 2));

    CHECK(z_to_vec(Mat<Scalar>::identity(2, Scalar(1))) == e(0));
    // Solving the four linear equations for [[1,0],[0,0]] and [[0,0],[1,0]].
    Mat<Scalar> a(2, 2);
    a(0, 0) = Scalar(1);
    CHECK(z_to_vec(a) == vec4(Scalar(Rat(1, 2)), Scalar(0), Scalar(Rat(1, 2)), Scalar(0)));
    Mat<Scalar> b(2, 2);
    b(1, 0) = Scalar(1);
    CHECK(z_to_vec(b) == vec4(Scalar(0), Scalar(Rat(1, 2)), Scalar(0), Scalar(Rat(1, 2))));

    std::mt19937 rng(3);
    for (int t = 0; t < 50; ++t) {
        Vec4 v(4);
        for (auto& x : v) x = Scalar(Rat((int)(rng() % 41) - 20, 1 + (int)(rng() % 7)));
        CHECK(z_to_vec(vec_to_z(v)) == v);
        CHECK(null_norm(v) == inner(v, v, MetricKind::PsiON));
    }
}

TEST_CASE("null norms of basis combinations") {
    CHECK(null_norm(e(0)) == Scalar(1));
    CHECK(null_norm(e(2)) == Scalar(-1));
    CHECK(null_norm(add(e(0), e(2))) == Scalar(0));
}

TEST_CASE("distinguished tetrad builds the standard basis") {
    NullTetrad t = null_tetrad(O, I, O, I);
    Scalar inv = Scalar(1) / Scalar::sqrt2();
    CHECK(t.l == scaled(add(e(0), e(2)), inv));
    CHECK(t.mt == scaled(add(e(1), e(3)), inv));
    CHECK(t.n == scaled(add(e(0), scaled(e(2), Scalar(-1))), inv));
    CHECK(t.m == scaled(add(scaled(e(1), Scalar(-1)), e(3)), inv));
    // tetrad scalar products
    CHECK(inner(t.l, t.n, MetricKind::PsiON) == Scalar(1));
    CHECK(inner(t.mt, t.m, MetricKind::PsiON) == Scalar(-1));
    CHECK(inner(t.l, t.mt, MetricKind::PsiON) == Scalar(0));
    CHECK(null_norm(t.l).is_zero());

    auto basis = psion_from_tetrad(t);
    for (int i = 0; i < 4; ++i) CHECK(basis[i] == e(i));
}

TEST_CASE("order-swapped frames give the swapped tetrad") {
    NullTetrad t0 = null_tetrad(O, I, O, I);
    NullTetrad t = null_tetrad(I, O, I, O);
    CHECK(t.l == t0.n);
    CHECK(t.mt == t0.m);
    CHECK(t.n == t0.l);
    CHECK(t.m == t0.mt);
    auto basis = psion_from_tetrad(t);
    CHECK(basis[0] == e(0));
    CHECK(basis[1] == scaled(e(1), Scalar(-1)));
    CHECK(basis[2] == scaled(e(2), Scalar(-1)));
    CHECK(basis[3] == e(3));
    CHECK(otype_of_basis(basis, MetricKind::PsiON, Context::exact()) == OType::MM);
}

TEST_CASE("frame rescaling acts on the tetrad by bilinearity") {
    Scalar t(Rat(3, 2));
    SpinVec ot{O[0] * t, O[1] * t}, it{I[0] / t, I[1] / t};
    NullTetrad base = null_tetrad(O, I, O, I);
    NullTetrad sc = null_tetrad(ot, it, O, I);
    CHECK(sc.l == scaled(base.l, t));
    CHECK(sc.n == scaled(base.n, Scalar(1) / t));
}

TEST_CASE("tetrad bases are always pseudo-orthonormal") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        SpinVec o{Scalar((int)(rng() % 5) + 1), Scalar((int)(rng() % 5) - 2)};
        SpinVec i{Scalar((int)(rng() % 5) - 2), Scalar(1)};
        Scalar p = spin_pairing(o, i);
        if (p.is_zero()) continue;
        for (auto& x : i) x /= p;
        NullTetrad t = null_tetrad(o, i, O, I);
        auto basis = psion_from_tetrad(t);
        Mat4 g(4, 4);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) g(r, c) = inner(basis[r], basis[c], MetricKind::PsiON);
        CHECK(g == gram(MetricKind::PsiON));
    }
}

TEST_CASE("spin pair action fixtures and component table") {
    Context ctx = Context::exact();
    Mat<Scalar> id2 = Mat<Scalar>::identity(2, Scalar(1));
    CHECK(spin_pair_action(id2, id2, Chirality::Preserving) == Mat4::identity(4, Scalar(1)));

    Mat4 sw = spin_pair_action(id2, id2, Chirality::Swapping);
    Mat4 want(4, 4);
    want(0, 0) = Scalar(1);
    want(1, 1) = Scalar(-1);
    want(2, 2) = Scalar(1);
    want(3, 3) = Scalar(1);
    CHECK(sw == want);
    CHECK(orthogonal_component(sw, MetricKind::PsiON, ctx) == OComponent::MinusPlus);

    Mat<Scalar> swap2 = m2({0, 1, 1, 0});
    Mat4 mm = spin_pair_action(swap2, swap2, Chirality::Preserving);
    Mat4 wantmm(4, 4);
    wantmm(0, 0) = Scalar(1);
    wantmm(1, 1) = Scalar(-1);
    wantmm(2, 2) = Scalar(-1);
    wantmm(3, 3) = Scalar(1);
    CHECK(mm == wantmm);
    CHECK(orthogonal_component(mm, MetricKind::PsiON, ctx) == OComponent::MinusMinus);

    // determinant-sign table, both chiralities
    Mat<Scalar> unimod = m2({1, 2, 1, 3});   // det 1
    Mat<Scalar> antimod = m2({2, 3, 1, 1});  // det -1
    auto comp = [&](const Mat<Scalar>& a, const Mat<Scalar>& b, Chirality c) {
        return orthogonal_component(spin_pair_action(a, b, c), MetricKind::PsiON, ctx);
    };
    CHECK(comp(unimod, unimod, Chirality::Preserving) == OComponent::PlusPlus);
    CHECK(comp(antimod, antimod, Chirality::Preserving) == OComponent::MinusMinus);
    CHECK(comp(unimod, unimod, Chirality::Swapping) == OComponent::MinusPlus);
    CHECK(comp(antimod, antimod, Chirality::Swapping) == OComponent::PlusMinus);

    // mixed determinant signs produce anti-orthogonal maps
    Mat4 anti = spin_pair_action(unimod, antimod, Chirality::Preserving);
    Mat4 g = gram(MetricKind::PsiON);
    CHECK(anti.transpose() * g * anti == -g);
    CHECK_THROWS_AS(spin_pair_action(m2({2, 0, 0, 1}), id2, Chirality::Preserving),
                    BadDeterminant);
}

TEST_CASE("volume form normalization and antisymmetry") {
    CHECK(volume_form(e(0), e(1), e(2), e(3)) == Scalar(1));
    CHECK(volume_form(e(1), e(0), e(2), e(3)) == Scalar(-1));
    NullTetrad t = null_tetrad(O, I, O, I);
    CHECK(volume_form(t.l, t.n, t.mt, t.m) == Scalar(1));
}

TEST_CASE("basis O-types") {
    Context ctx = Context::exact();
    std::array<Vec4, 4> std_basis{e(0), e(1), e(2), e(3)};
    CHECK(otype_of_basis(std_basis, MetricKind::PsiON, ctx) == OType::PP);
    std::array<Vec4, 4> mm{e(0), scaled(e(1), Scalar(-1)), scaled(e(2), Scalar(-1)), e(3)};
    CHECK(otype_of_basis(mm, MetricKind::PsiON, ctx) == OType::MM);
    std::array<Vec4, 4> mp{e(0), scaled(e(1), Scalar(-1)), e(2), e(3)};
    CHECK(otype_of_basis(mp, MetricKind::PsiON, ctx) == OType::MP);
    std::array<Vec4, 4> bad{e(0), e(1), e(2), add(e(3), e(0))};
    CHECK_THROWS_AS(otype_of_basis(bad, MetricKind::PsiON, ctx), NotABasisOfKind);
}

TEST_CASE("soldering symbol contraction reproduces the metric") {
    // sigma_i^{AA'} sigma_j_{AA'} = g_ij on the stored sqrt2-scaled symbols,
    // which contributes an overall factor of 2.
    Mat4 g = gram(MetricKind::PsiON);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Mat<Scalar> si = sigma_stored(i), sj = sigma_stored(j);
            Scalar acc;
            for (int a = 0; a < 2; ++a)
                for (int ap = 0; ap < 2; ++ap)
                    for (int b = 0; b < 2; ++b)
                        for (int bp = 0; bp < 2; ++bp)
                            acc += si(a, ap) * sj(b, bp) * epsilon_lower(b, a) * epsilon_lower(bp, ap);
            CHECK(acc == Scalar(2) * g(i, j));
        }
}

TEST_CASE("four-form from epsilon products") {
    // Components of the canonical four-form from its epsilon expression,
    // brute-force over all spinor index tuples.
    auto eps = [](int a, int b) { return (a == 0 && b == 1) ? 1 : ((a == 1 && b == 0) ? -1 : 0); };
    static double E[4][4][4][4];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l) {
                    Mat<Scalar> si = sigma_stored(i), sj = sigma_stored(j), sk = sigma_stored(k),
                                sl = sigma_stored(l);
                    Scalar acc;
                    for (int A = 0; A < 2; ++A)
                        for (int B = 0; B < 2; ++B)
                            for (int C = 0; C < 2; ++C)
                                for (int D = 0; D < 2; ++D)
                                    for (int Ap = 0; Ap < 2; ++Ap)
                                        for (int Bp = 0; Bp < 2; ++Bp)
                                            for (int Cp = 0; Cp < 2; ++Cp)
                                                for (int Dp = 0; Dp < 2; ++Dp) {
                                                    int t1 = eps(A, C) * eps(B, D) * eps(Ap, Dp) *
                                                             eps(Bp, Cp);
                                                    int t2 = eps(A, D) * eps(B, C) * eps(Ap, Cp) *
                                                             eps(Bp, Dp);
                                                    if (t1 == t2) continue;
                                                    Scalar prod = si(A, Ap) * sj(B, Bp) *
                                                                  sk(C, Cp) * sl(D, Dp);
                                                    acc += prod * Scalar(t1 - t2);
                                                }
                    E[i][j][k][l] = (acc / Scalar(4)).to_double();
                }
    CHECK(E[0][1][2][3] == doctest::Approx(1.0));
    CHECK(E[1][0][2][3] == doctest::Approx(-1.0));
    CHECK(E[0][1][2][2] == doctest::Approx(0.0));
    // full contraction with indices raised by the metric
    double total = 0;
    double gd[4] = {1, 1, -1, -1};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l)
                    total += E[i][j][k][l] * E[i][j][k][l] * gd[i] * gd[j] * gd[k] * gd[l];
    CHECK(total == doctest::Approx(24.0));
}

TEST_CASE("decomposable vectors have rank-one matrices and are null") {
    std::mt19937 rng(23);
    for (int t = 0; t < 30; ++t) {
        SpinVec xi{Scalar((int)(rng() % 9) - 4), Scalar((int)(rng() % 9) - 4)};
        SpinVec ze{Scalar((int)(rng() % 9) - 4), Scalar((int)(rng() % 9) - 4)};
        if ((xi[0].is_zero() && xi[1].is_zero()) || (ze[0].is_zero() && ze[1].is_zero())) continue;
        Vec4 v = vec_of_spin_pair(xi, ze);
        CHECK(null_norm(v).is_zero());
        CHECK(rank_exact(vec_to_z(v)) == 1);
    }
}

TEST_CASE("tetrad to frames round trip up to overall sign") {
    std::mt19937 rng(29);
    for (int t = 0; t < 12; ++t) {
        SpinVec o{Scalar((int)(rng() % 7) - 3), Scalar((int)(rng() % 7) - 3)};
        SpinVec i{Scalar((int)(rng() % 7) - 3), Scalar((int)(rng() % 3))};
        Scalar p = spin_pairing(o, i);
        if (p.is_zero()) continue;
        for (auto& x : i) x /= p;
        SpinVec op{Scalar((int)(rng() % 7) - 3), Scalar((int)(rng() % 7) - 3)};
        SpinVec ip{Scalar((int)(rng() % 7) - 3), Scalar((int)(rng() % 3))};
        Scalar q = spin_pairing(op, ip);
        if (q.is_zero()) continue;
        for (auto& x : ip) x /= q;
        NullTetrad tet = null_tetrad(o, i, op, ip);
        SpinVec ro, ri, rop, rip;
        frames_from_tetrad(tet, ro, ri, rop, rip);
        NullTetrad back = null_tetrad(ro, ri, rop, rip);
        CHECK(back.l == tet.l);
        CHECK(back.mt == tet.mt);
        CHECK(back.n == tet.n);
        CHECK(back.m == tet.m);
        int s = !ro[0].is_zero() ? ro[0].sign() : ro[1].sign();
        CHECK(s > 0);
    }
}
