#include <random>
#include <set>

#include "doctest.h"
#include "mrd/error.hpp"
#include "mrd/linpoly.hpp"

using namespace mrd;

namespace {

LinPoly random_poly(const TowerPtr& t, std::mt19937_64& rng) {
    std::vector<Elem> c(t->m());
    for (auto& x : c) x = static_cast<Elem>(rng() % t->F().size());
    return LinPoly(t, c);
}

// Direct evaluation from the definition, using repeated multiplication for x^{q^i}.
Elem eval_direct(const LinPoly& L, Elem x) {
    const Field& F = L.T().F();
    Elem acc = 0, xp = x;
    for (std::size_t i = 0; i < L.T().m(); ++i) {
        acc = F.add(acc, F.mul(L.coeff(i), xp));
        Elem y = 1;
        for (std::uint32_t k = 0; k < L.T().q(); ++k) y = F.mul(y, xp);
        xp = y;
    }
    return acc;
}

std::set<Elem> kernel_by_evaluation(const LinPoly& L) {
    std::set<Elem> out;
    for (Elem x = 0; x < L.T().F().size(); ++x)
        if (eval_direct(L, x) == 0) out.insert(x);
    return out;
}

std::set<Elem> as_set(const Tower& t, const Subspace& s) {
    const auto v = subspace_elements(t, s);
    return std::set<Elem>(v.begin(), v.end());
}

} // namespace

TEST_CASE("evaluation examples") {
    auto t16 = Tower::make(2, 1, 4);
    const auto id = LinPoly::identity(t16);
    for (Elem x = 0; x < 16; ++x) CHECK(lp_eval(id, x) == x);
    auto t4 = Tower::make(2, 1, 2);
    CHECK(lp_eval(LinPoly::monomial(t4, 1, 1), 2) == 3);
    std::mt19937_64 rng(2);
    for (int it = 0; it < 50; ++it) {
        const auto L = random_poly(t16, rng);
        for (Elem x = 0; x < 16; ++x) {
            REQUIRE(lp_eval(L, x) == eval_direct(L, x));
            for (Elem a = 0; a < 2; ++a) REQUIRE(lp_eval(L, t16->F().mul(a, x)) == t16->F().mul(a, lp_eval(L, x)));
            for (Elem y = 0; y < 16; ++y)
                REQUIRE(lp_eval(L, t16->F().add(x, y)) == t16->F().add(lp_eval(L, x), lp_eval(L, y)));
        }
    }
    // GF(4)-linearity of GF(4^2) polynomials.
    auto t = Tower::make(2, 2, 2);
    const auto L = random_poly(t, rng);
    for (Elem a = 0; a < 4; ++a)
        for (Elem x = 0; x < 16; ++x)
            REQUIRE(lp_eval(L, t->F().mul(t->embed(a), x)) == t->F().mul(t->embed(a), lp_eval(L, x)));
}

TEST_CASE("folding and text") {
    auto t4 = Tower::make(2, 1, 2);
    // x^{q^2} = x on GF(4).
    CHECK(LinPoly(t4, {0, 0, 1}) == LinPoly::identity(t4));
    CHECK(LinPoly(t4, {3, 1}).text() == "q-poly: 11;10");
    CHECK(LinPoly(t4).text() == "q-poly: 0");
    CHECK(LinPoly(t4).qdegree() == -1);
}

TEST_CASE("composition") {
    auto t4 = Tower::make(2, 1, 2);
    const auto sq = LinPoly::monomial(t4, 1, 1);
    CHECK(lp_compose(sq, sq) == LinPoly::identity(t4));
    auto t16 = Tower::make(2, 1, 4);
    std::mt19937_64 rng(4);
    for (int it = 0; it < 200; ++it) {
        const auto a = random_poly(t16, rng), b = random_poly(t16, rng), c = random_poly(t16, rng);
        const auto ab = lp_compose(a, b);
        for (Elem x = 0; x < 16; ++x) REQUIRE(lp_eval(ab, x) == lp_eval(a, lp_eval(b, x)));
        REQUIRE(lp_compose(a, LinPoly::identity(t16)) == a);
        REQUIRE(lp_compose(LinPoly::identity(t16), a) == a);
        if (it < 50) {
            REQUIRE(lp_compose(ab, c) == lp_compose(a, lp_compose(b, c)));
            const auto lhs = lp_compose(a, b + c), rhs = lp_compose(a, b) + lp_compose(a, c);
            const auto lhs2 = lp_compose(a + b, c), rhs2 = lp_compose(a, c) + lp_compose(b, c);
            for (Elem x = 0; x < 16; ++x) {
                REQUIRE(lp_eval(lhs, x) == lp_eval(rhs, x));
                REQUIRE(lp_eval(lhs2, x) == lp_eval(rhs2, x));
            }
        }
    }
    CHECK_THROWS_AS(lp_compose(LinPoly::identity(t4), LinPoly::identity(t16)), Error);
}

TEST_CASE("annihilators") {
    auto t4 = Tower::make(2, 1, 2);
    CHECK(lp_annihilator(t4, {}) == LinPoly::identity(t4));
    CHECK(lp_annihilator(t4, {1}) == LinPoly(t4, {1, 1}));
    auto t16 = Tower::make(2, 1, 4);
    CHECK(lp_annihilator(t16, subfield_basis(*t16, 2)) == LinPoly(t16, {1, 0, 1}));

    // Root set equals the span exactly, for random subspaces of several fields.
    std::mt19937_64 rng(8);
    for (auto [p, e, m] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>{{2, 1, 4}, {2, 1, 6}, {3, 1, 4}, {2, 2, 3}, {2, 1, 10}}) {
        auto t = Tower::make(p, e, m);
        for (int it = 0; it < 10; ++it) {
            const std::size_t k = rng() % m;
            std::vector<Elem> gens;
            for (std::size_t i = 0; i < k + 1; ++i) gens.push_back(static_cast<Elem>(rng() % t->F().size()));
            const auto W = element_span(*t, gens);
            if (W.dim() == m) continue;
            const auto A = lp_annihilator(t, gens);
            REQUIRE(A.qdegree() == static_cast<int>(W.dim()));
            REQUIRE(A.coeff(W.dim()) == 1);
            for (Elem x = 0; x < t->F().size(); ++x) REQUIRE((lp_eval(A, x) == 0) == W.contains(t->coords(x)));
        }
    }
}

TEST_CASE("kernel and image") {
    auto t16 = Tower::make(2, 1, 4);
    CHECK(lp_kernel(LinPoly::identity(t16)).dim() == 0);
    const auto k = lp_kernel(LinPoly(t16, {1, 0, 1}));
    CHECK(k.dim() == 2);
    std::set<Elem> gf4;
    for (Elem x = 0; x < 16; ++x)
        if (t16->frobenius(x, 2) == x) gf4.insert(x);
    CHECK(as_set(*t16, k) == gf4);

    std::mt19937_64 rng(12);
    for (int it = 0; it < 50; ++it) {
        auto L = random_poly(t16, rng);
        if (it % 5 == 0) L = lp_compose(L, LinPoly(t16, {1, 1})); // force a kernel
        const auto ker = lp_kernel(L);
        const auto img = lp_image_basis(L);
        REQUIRE(ker.dim() + img.size() == 4);
        REQUIRE(as_set(*t16, ker) == kernel_by_evaluation(L));
        std::set<Elem> image;
        for (Elem x = 0; x < 16; ++x) image.insert(lp_eval(L, x));
        REQUIRE(as_set(*t16, element_span(*t16, img)) == image);
        // Root bound: a nonzero polynomial of q-degree k has at most q^k roots.
        if (!L.is_zero()) REQUIRE(ker.dim() <= static_cast<std::size_t>(L.qdegree()));
    }
}

TEST_CASE("matrix representation") {
    auto t16 = Tower::make(2, 1, 4);
    std::vector<Elem> std_basis;
    for (std::uint32_t j = 0; j < 4; ++j) std_basis.push_back(t16->basis(j));
    CHECK(lp_to_matrix(LinPoly(t16), std_basis, std_basis).is_zero());
    CHECK(lp_to_matrix(LinPoly::identity(t16), std_basis, std_basis) == Matrix::identity(t16->base(), 4));

    std::mt19937_64 rng(13);
    for (int it = 0; it < 50; ++it) {
        auto L = random_poly(t16, rng);
        if (it % 3 == 0) L = lp_compose(LinPoly(t16, {1, 1}), L);
        const auto img = lp_image_basis(L);
        const auto M = lp_to_matrix(L, std_basis, img);
        REQUIRE(M.cols() == img.size());
        REQUIRE(mat_rank(M) == 4 - lp_kernel(L).dim());
        for (std::size_t i = 0; i < 4; ++i) {
            Elem acc = 0;
            for (std::size_t j = 0; j < img.size(); ++j) acc = t16->F().add(acc, t16->scale(M(i, j), img[j]));
            REQUIRE(acc == lp_eval(L, std_basis[i]));
        }
    }
    try {
        lp_to_matrix(LinPoly::identity(t16), std_basis, {1, 2});
        FAIL("expected ImageNotContained");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ImageNotContained);
    }
    try {
        lp_to_matrix(LinPoly::identity(t16), {1, 2, 3, 4}, std_basis);
        FAIL("expected NotABasis");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotABasis);
    }
}

TEST_CASE("right division") {
    auto t16 = Tower::make(2, 1, 4);
    const auto A = lp_annihilator(t16, subfield_basis(*t16, 2));
    CHECK(lp_right_divide(A, A) == LinPoly::identity(t16));
    const auto tr = lp_trace_poly(t16, 2);
    CHECK(tr == LinPoly(t16, {1, 0, 1}));
    CHECK(lp_trace_poly(t16, 4) == LinPoly::identity(t16));
    const std::set<Elem> ker = kernel_by_evaluation(tr);
    const auto tk = trace_kernel_basis(*t16, 2);
    CHECK(as_set(*t16, element_span(*t16, tk)) == ker);

    // W1 = ker Tr inside a larger W: A_W = B o Tr.
    auto t64 = Tower::make(2, 1, 6);
    const auto tk6 = trace_kernel_basis(*t64, 3); // dim 3
    std::vector<Elem> w = tk6;
    w.push_back(1);
    for (Elem x = 2; element_span(*t64, w).dim() < 4; ++x) w.back() = x;
    const auto AW = lp_annihilator(t64, w);
    const auto B = lp_right_divide(AW, lp_trace_poly(t64, 3));
    CHECK(lp_compose(B, lp_trace_poly(t64, 3)) == AW);

    std::mt19937_64 rng(1);
    for (int it = 0; it < 20; ++it) {
        const auto X = random_poly(t16, rng);
        const auto Y = LinPoly(t16, {static_cast<Elem>(1 + rng() % 15), static_cast<Elem>(rng() % 16)});
        const auto P = lp_compose(X, Y);
        if (P.qdegree() >= 3 || X.qdegree() + Y.qdegree() >= 4) continue;
        REQUIRE(lp_compose(lp_right_divide(P, Y), Y) == P);
    }
    try {
        lp_right_divide(LinPoly::identity(t16), LinPoly(t16, {1, 1}));
        FAIL("expected NotDivisible");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotDivisible);
    }
    CHECK_THROWS_AS(lp_trace_poly(t16, 3), Error);
}
