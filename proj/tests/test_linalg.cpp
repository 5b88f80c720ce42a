#include "doctest.h"

#include <random>

#include <ricci22/metric.hpp>

using namespace ricci22;

namespace {
Mat4 mat_i(std::initializer_list<long long> vals) {
    Mat4 m(4, 4);
    int i = 0;
    for (auto v : vals) {
        m(i / 4, i % 4) = Scalar(v);
        ++i;
    }
    return m;
}
Vec4 e(int i) {
    Vec4 v(4, Scalar(0));
    v[i] = Scalar(1);
    return v;
}
}  // namespace

TEST_CASE("gram matrices are symmetric and self-inverse") {
    for (auto kind : {MetricKind::PsiON, MetricKind::Witt}) {
        Mat4 g = gram(kind);
        CHECK(g == g.transpose());
        CHECK(g * g == Mat4::identity(4, Scalar(1)));
    }
    CHECK(gram(MetricKind::PsiON)(0, 0) == Scalar(1));
    CHECK(gram(MetricKind::PsiON)(2, 2) == Scalar(-1));
    CHECK(gram(MetricKind::Witt)(0, 2) == Scalar(1));
    CHECK(gram(MetricKind::Witt)(0, 0) == Scalar(0));
}

TEST_CASE("inner products in both conventions") {
    CHECK(inner(e(0), e(0), MetricKind::PsiON) == Scalar(1));
    CHECK(inner(e(0), e(2), MetricKind::Witt) == Scalar(1));
    Vec4 n = e(0);
    n[2] = Scalar(1);
    CHECK(inner(n, n, MetricKind::PsiON) == Scalar(0));
    // symmetry on random vectors
    std::mt19937 rng(7);
    for (int t = 0; t < 20; ++t) {
        Vec4 v(4), w(4);
        for (int i = 0; i < 4; ++i) {
            v[i] = Scalar(Rat((int)(rng() % 19) - 9, 1 + (int)(rng() % 4)));
            w[i] = Scalar(Rat((int)(rng() % 19) - 9, 1 + (int)(rng() % 4)));
        }
        for (auto kind : {MetricKind::PsiON, MetricKind::Witt})
            CHECK(inner(v, w, kind) == inner(w, v, kind));
    }
}

TEST_CASE("adjoint block structure") {
    Mat4 id = Mat4::identity(4, Scalar(1));
    CHECK(adjoint(id, MetricKind::PsiON) == id);
    CHECK(adjoint(id, MetricKind::Witt) == id);

    // Unit matrix with a single 1 in row 0, column 2 (a C-block entry):
    // the PsiON adjoint puts -1 at row 2, column 0.
    Mat4 u(4, 4);
    u(0, 2) = Scalar(1);
    Mat4 au = adjoint(u, MetricKind::PsiON);
    CHECK(au(2, 0) == Scalar(-1));
    Scalar total;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) total += au(i, j).abs();
    CHECK(total == Scalar(1));

    // Witt adjoint of diag(a,b,c,d) is diag(c,d,a,b).
    Mat4 d = mat_i({2, 0, 0, 0, 0, 3, 0, 0, 0, 0, 5, 0, 0, 0, 0, 7});
    Mat4 ad = adjoint(d, MetricKind::Witt);
    CHECK(ad == mat_i({5, 0, 0, 0, 0, 7, 0, 0, 0, 0, 2, 0, 0, 0, 0, 3}));

    std::mt19937 rng(11);
    for (int t = 0; t < 25; ++t) {
        Mat4 m(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m(i, j) = Scalar(Rat((int)(rng() % 21) - 10, 1 + (int)(rng() % 3)));
        for (auto kind : {MetricKind::PsiON, MetricKind::Witt}) {
            CHECK(adjoint(adjoint(m, kind), kind) == m);
            // inner(Mv, w) == inner(v, adj(M) w)
            Vec4 v(4), w(4);
            for (int i = 0; i < 4; ++i) {
                v[i] = Scalar((int)(rng() % 9) - 4);
                w[i] = Scalar((int)(rng() % 9) - 4);
            }
            CHECK(inner(m.apply(v), w, kind) == inner(v, adjoint(m, kind).apply(w), kind));
        }
    }
}

TEST_CASE("char poly matches direct expansion") {
    CHECK(char_poly(Mat4(4, 4)) == Poly(std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)}));
    Mat4 d = mat_i({1, 0, 0, 0, 0, 2, 0, 0, 0, 0, -3, 0, 0, 0, 0, 0});
    Poly expect = Poly::linear(Rat(1)) * Poly::linear(Rat(2)) * Poly::linear(Rat(-3)) * Poly::x();
    CHECK(char_poly(d) == expect);
}

TEST_CASE("change of basis convention is involutive and matches the grams") {
    Mat4 id = Mat4::identity(4, Scalar(1));
    CHECK(change_kind(id, MetricKind::Witt, MetricKind::PsiON) == id);
    // The metric expressed through the transition: congruence carries one
    // gram to the other.
    Mat4 p = witt_to_psion_transition();
    CHECK(p.transpose() * gram(MetricKind::PsiON) * p == gram(MetricKind::Witt));
    // Conjugation round trip.
    Mat4 m = mat_i({1, 2, 0, -1, 0, 3, 1, 0, 2, 0, 1, 4, 0, 0, 5, 1});
    CHECK(change_kind(change_kind(m, MetricKind::Witt, MetricKind::PsiON), MetricKind::PsiON,
                      MetricKind::Witt) == m);
}

TEST_CASE("orthogonal component signs") {
    Context ctx = Context::exact();
    Mat4 id = Mat4::identity(4, Scalar(1));
    CHECK(orthogonal_component(id, MetricKind::PsiON, ctx) == OComponent::PlusPlus);
    Mat4 k4 = mat_i({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1});
    CHECK(orthogonal_component(k4, MetricKind::PsiON, ctx) == OComponent::PlusMinus);
    Mat4 z3 = mat_i({1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1});
    CHECK(orthogonal_component(z3, MetricKind::PsiON, ctx) == OComponent::MinusMinus);
    Mat4 k1 = mat_i({-1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});
    CHECK(orthogonal_component(k1, MetricKind::PsiON, ctx) == OComponent::MinusPlus);
    Mat4 notorth = mat_i({2, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});
    CHECK_THROWS_AS(orthogonal_component(notorth, MetricKind::PsiON, ctx), NotOrthogonal);
}

TEST_CASE("self-adjointness of the canonical Witt forms") {
    Context ctx = Context::exact();
    // Nilpotent 4-chain form in a Witt basis, lambda = 0, eps = 1.
    Mat4 w = mat_i({0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0});
    CHECK(is_self_adjoint(w, MetricKind::Witt, ctx));
    CHECK(!is_self_adjoint(w, MetricKind::PsiON, ctx));
    Mat4 u(4, 4);
    u(0, 1) = Scalar(1);
    CHECK(!is_self_adjoint(u, MetricKind::PsiON, ctx));
}

TEST_CASE("kernel and rank over the exact field") {
    Mat4 m = mat_i({1, 2, 3, 4, 2, 4, 6, 8, 0, 0, 1, 1, 0, 0, 0, 0});
    CHECK(rank_exact(m) == 2);
    auto basis = kernel_basis(m, Scalar(1), ExactZeroPolicy{});
    CHECK(basis.size() == 2);
    for (auto& v : basis) {
        Vec4 img = m.apply(v);
        for (auto& x : img) CHECK(x.is_zero());
    }
}

TEST_CASE("basis conversion embeds 2-blocks as the half-integer pattern") {
    // a Witt-basis pair of chains converts to the PsiON representation with
    // diagonal lambda +- eps/2 and off-diagonal -+ eps/2 in each plane
    for (int eps : {1, -1})
        for (int om : {1, -1}) {
            Rat l(3), m(-3);
            Mat4 w(4, 4);
            w(0, 0) = w(2, 2) = Scalar(l);
            w(1, 1) = w(3, 3) = Scalar(m);
            w(0, 2) = Scalar(eps);
            w(1, 3) = Scalar(om);
            Mat4 p = change_kind(w, MetricKind::Witt, MetricKind::PsiON);
            Rat he(eps, 2), ho(om, 2);
            Mat4 want(4, 4);
            want(0, 0) = Scalar(l + he);
            want(0, 2) = Scalar(-he);
            want(2, 0) = Scalar(he);
            want(2, 2) = Scalar(l - he);
            want(1, 1) = Scalar(m + ho);
            want(1, 3) = Scalar(-ho);
            want(3, 1) = Scalar(ho);
            want(3, 3) = Scalar(m - ho);
            CHECK(p == want);
        }
}
