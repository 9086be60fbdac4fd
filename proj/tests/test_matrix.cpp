#include <random>
#include <set>

#include "doctest.h"
#include "mrd/error.hpp"
#include "mrd/matrix.hpp"
#include "mrd/simd/rank_gf2.hpp"
#include "oracles.hpp"

using namespace mrd;

namespace {

Matrix gf2(std::size_t r, std::size_t c, unsigned bits) {
    auto f = Field::make(2, 1);
    Matrix x(f, r, c);
    for (std::size_t k = 0; k < r * c; ++k) x(k / c, k % c) = (bits >> k) & 1u;
    return x;
}

Matrix random_matrix(const FieldPtr& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
    Matrix x(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) x(i, j) = static_cast<Elem>(rng() % f->size());
    return x;
}

std::vector<std::vector<std::uint32_t>> as_rows(const Matrix& x) {
    std::vector<std::vector<std::uint32_t>> rows;
    for (std::size_t i = 0; i < x.rows(); ++i) rows.push_back(x.row(i));
    return rows;
}

} // namespace

TEST_CASE("rank examples") {
    auto f = Field::make(2, 1);
    CHECK(mat_rank(Matrix(f, 4, 2)) == 0);
    Matrix x(f, 4, 2, {1, 0, 0, 1, 1, 1, 0, 0});
    CHECK(mat_rank(x) == 2);
    // 3x3 over GF(2): full rank iff the determinant is 1, over all 512 matrices.
    for (unsigned bits = 0; bits < 512; ++bits) {
        std::uint32_t m[9];
        for (int k = 0; k < 9; ++k) m[k] = (bits >> k) & 1u;
        REQUIRE((mat_rank(gf2(3, 3, bits)) == 3) == (oracle::det3_gf2(m) == 1));
    }
}

TEST_CASE("rank agrees with textbook elimination over prime fields") {
    std::mt19937_64 rng(11);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        auto f = Field::make(p, 1);
        for (int it = 0; it < 300; ++it) {
            const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
            Matrix x = random_matrix(f, r, c, rng);
            if (it % 3 == 0 && r > 1) // force dependencies
                for (std::size_t j = 0; j < c; ++j) x(r - 1, j) = f->add(x(0, j), x(r > 2 ? 1 : 0, j));
            REQUIRE(mat_rank(x) == oracle::rank_prime(as_rows(x), p));
        }
    }
    // Wide GF(2) matrices take the column-packed path.
    for (int it = 0; it < 100; ++it) {
        auto f = Field::make(2, 1);
        Matrix x = random_matrix(f, 3, 40, rng);
        REQUIRE(mat_rank(x) == oracle::rank_prime(as_rows(x), 2));
    }
}

TEST_CASE("rank is invariant under elementary row and column operations") {
    std::mt19937_64 rng(5);
    for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {2, 2}, {3, 1}}) {
        auto f = Field::make(p, e);
        for (int it = 0; it < 200; ++it) {
            Matrix x = random_matrix(f, 4, 3, rng);
            const std::size_t r0 = mat_rank(x);
            Matrix y = x;
            const std::size_t i = rng() % 4, k = (i + 1 + rng() % 3) % 4;
            const Elem c = static_cast<Elem>(rng() % f->size());
            for (std::size_t j = 0; j < 3; ++j) y(k, j) = f->add(y(k, j), f->mul(c, y(i, j)));
            REQUIRE(mat_rank(y) == r0);
            const std::size_t a = rng() % 3, b = (a + 1) % 3;
            for (std::size_t r = 0; r < 4; ++r) y(r, b) = f->add(y(r, b), f->mul(c, y(r, a)));
            REQUIRE(mat_rank(y) == r0);
            const Elem s = static_cast<Elem>(1 + rng() % (f->size() - 1));
            for (std::size_t j = 0; j < 3; ++j) y(0, j) = f->mul(s, y(0, j));
            REQUIRE(mat_rank(y) == r0);
        }
    }
}

TEST_CASE("rank distance is a metric on B_2(2,2)") {
    for (unsigned a = 0; a < 16; ++a)
        for (unsigned b = 0; b < 16; ++b) {
            const auto dab = rank_distance(gf2(2, 2, a), gf2(2, 2, b));
            REQUIRE(dab == static_cast<std::size_t>(oracle::rank2x2_gf2(a ^ b)));
            REQUIRE(dab == rank_distance(gf2(2, 2, b), gf2(2, 2, a)));
            REQUIRE((dab == 0) == (a == b));
            for (unsigned c = 0; c < 16; ++c)
                REQUIRE(rank_distance(gf2(2, 2, a), gf2(2, 2, c)) <= dab + rank_distance(gf2(2, 2, b), gf2(2, 2, c)));
        }
}

TEST_CASE("rank distance metric axioms sampled on B_2(4,2)") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 2000; ++it) {
        const unsigned a = rng() % 256, b = rng() % 256, c = rng() % 256;
        const auto x = gf2(4, 2, a), y = gf2(4, 2, b), z = gf2(4, 2, c);
        REQUIRE(rank_distance(x, y) == rank_distance(y, x));
        REQUIRE((rank_distance(x, y) == 0) == (a == b));
        REQUIRE(rank_distance(x, z) <= rank_distance(x, y) + rank_distance(y, z));
    }
}

TEST_CASE("rank distance errors and padding") {
    auto f = Field::make(2, 1);
    Matrix x = Matrix(f, 2, 2);
    CHECK(rank_distance(x, x) == 0);
    CHECK(rank_distance(Matrix(f, 4, 2), Matrix::identity(f, 2).pad_rows(4)) == 2);
    CHECK_THROWS_AS(rank_distance(x, Matrix(f, 3, 2)), Error);
    try {
        rank_distance(x, Matrix(Field::make(2, 2), 2, 2));
        FAIL("expected FieldMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::FieldMismatch);
    }
}

TEST_CASE("stack") {
    auto f = Field::make(2, 1);
    CHECK(stack(Matrix(f, 2, 2), Matrix(f, 2, 2)).is_zero());
    CHECK(mat_rank(stack(Matrix::identity(f, 2), gf2(2, 2, 9))) >= 2);
    for (unsigned a = 0; a < 16; ++a)
        for (unsigned b = 0; b < 16; ++b) {
            const auto s = stack(gf2(2, 2, a), gf2(2, 2, b));
            REQUIRE(s.rows() == 4);
            REQUIRE(mat_rank(s) >= mat_rank(gf2(2, 2, b)));
            REQUIRE(mat_rank(s) >= mat_rank(gf2(2, 2, a)));
        }
    try {
        stack(Matrix(f, 2, 2), Matrix(f, 2, 3));
        FAIL("expected ShapeMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ShapeMismatch);
    }
}

TEST_CASE("matrix text round trip") {
    std::mt19937_64 rng(9);
    for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}, {2, 2}, {11, 1}, {13, 2}}) {
        auto f = Field::make(p, e);
        for (int it = 0; it < 20; ++it) {
            const Matrix x = random_matrix(f, 3, 2, rng);
            REQUIRE(Matrix::parse(f, 3, 2, x.text()) == x);
        }
    }
    auto f4 = Field::make(2, 2);
    Matrix y(f4, 1, 2, {3, 2});
    CHECK(y.text() == "11.01");
    CHECK(gf2(2, 2, 0b1001).text() == "1001");
    CHECK_THROWS_AS(Matrix::parse(Field::make(2, 1), 2, 2, "100"), Error);
}

TEST_CASE("canonical order follows serialized text for small primes") {
    std::mt19937_64 rng(1);
    auto f = Field::make(3, 1);
    for (int it = 0; it < 500; ++it) {
        const Matrix a = random_matrix(f, 2, 3, rng), b = random_matrix(f, 2, 3, rng);
        REQUIRE(canonical_less(a, b) == (a.text() < b.text()));
    }
}

TEST_CASE("subspace operations") {
    auto f = Field::make(2, 1);
    auto U = Subspace::span(f, 4, {{1, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 1, 0}});
    CHECK(U.dim() == 2);
    CHECK(U.intersect(U) == U);
    auto l1 = Subspace::span(f, 2, {{1, 0}}), l2 = Subspace::span(f, 2, {{1, 1}});
    CHECK(l1.intersect(l2).dim() == 0);
    CHECK(U.contains(Vec{0, 1, 1, 0}));
    CHECK_FALSE(U.contains(Vec{0, 0, 0, 1}));
    CHECK_THROWS_AS(U.contains(Vec{1, 0}), Error);

    // dim(U n V) = dim U + dim V - dim(U + V) for every pair of subspaces of GF(2)^4.
    std::vector<Subspace> all;
    for (std::size_t k = 0; k <= 4; ++k)
        for (auto& s : all_subspaces(f, 4, k)) all.push_back(s);
    CHECK(all.size() == 1 + 15 + 35 + 15 + 1);
    for (const auto& a : all)
        for (const auto& b : all) {
            const auto i = a.intersect(b);
            REQUIRE(i.dim() + a.sum(b).dim() == a.dim() + b.dim());
            REQUIRE(a.contains(i));
            REQUIRE(b.contains(i));
        }
}

TEST_CASE("complete_basis and coset representatives") {
    auto f = Field::make(3, 1);
    auto U = Subspace::span(f, 3, {{1, 2, 0}});
    auto V = Subspace::full(f, 3);
    const auto extra = U.complete_basis(V);
    CHECK(extra.size() == 2);
    // Standard basis scanned in order: e2 is dependent once e1 has been adjoined.
    CHECK(extra[0] == Vec{1, 0, 0});
    CHECK(extra[1] == Vec{0, 0, 1});
    const auto reps = U.coset_reps(V);
    CHECK(reps.size() == 9);
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) REQUIRE_FALSE(U.contains(linalg::sub(*f, reps[i], reps[j])));
    auto W = Subspace::span(f, 3, {{0, 0, 1}});
    try {
        U.complete_basis(W);
        FAIL("expected NotASubspace");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotASubspace);
    }
    CHECK(gaussian_binomial(2, 4, 2) == 35);
    CHECK(gaussian_binomial(3, 3, 1) == 13);
    CHECK(all_subspaces(f, 3, 1).size() == 13);
}

TEST_CASE("packed GF(2) rank kernels agree with the reference") {
    std::mt19937_64 rng(42);
    for (std::size_t rows : {1u, 2u, 3u, 4u, 6u, 8u, 17u, 32u}) {
        for (std::uint32_t cols : {1u, 2u, 4u, 5u, 16u, 31u, 32u}) {
            const std::size_t count = 8 * 37 + 5; // full AVX2 batches plus a scalar tail
            std::vector<std::uint32_t> words(count * rows);
            const std::uint32_t mask = cols == 32 ? ~0u : ((1u << cols) - 1);
            for (std::size_t k = 0; k < words.size(); ++k) {
                words[k] = static_cast<std::uint32_t>(rng()) & mask;
                if (rng() % 4 == 0 && k >= rows) words[k] = words[k - rows] ^ words[k - 1];
                if (rng() % 7 == 0) words[k] = 0;
            }
            std::vector<std::uint8_t> ref(count), fast(count);
            simd::rank_gf2_batch(words, rows, cols, ref, simd::Isa::scalar);
            simd::rank_gf2_batch(words, rows, cols, fast, simd::Isa::avx2); // falls back when unsupported
            for (std::size_t i = 0; i < count; ++i) {
                std::vector<std::uint32_t> one(words.begin() + i * rows, words.begin() + (i + 1) * rows);
                REQUIRE(ref[i] == oracle::rank_gf2_words(one));
                REQUIRE(fast[i] == ref[i]);
            }
        }
    }
    INFO("active ISA: " << simd::isa_name(simd::active_isa()));
    CHECK(simd::isa_supported(simd::Isa::scalar));
}
