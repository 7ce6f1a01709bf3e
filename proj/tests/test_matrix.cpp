#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "centra/oracle.hpp"
#include "centra/poly_matrix.hpp"
#include "test_support.hpp"

using namespace centra;

namespace {
const FieldSpec f2 = FieldSpec::prime(2);
const FieldSpec f5 = FieldSpec::prime(5);
const FieldSpec q = FieldSpec::rationals();
}  // namespace

TEST_CASE("companion matrix layout: subdiagonal ones, negated coefficients last") {
    CHECK(companion(Polynomial::of(f2, {1, 0, 1})) == Matrix::of(f2, 2, 2, {0, 1, 1, 0}));
    CHECK(companion(Polynomial::of(f2, {1, 1, 1, 1})) ==
          Matrix::of(f2, 3, 3, {0, 0, 1, 1, 0, 1, 0, 1, 1}));
    CHECK(companion(Polynomial::of(f5, {-3, 1})) == Matrix::of(f5, 1, 1, {3}));
    CHECK(companion(Polynomial::of(q, {2, -3, 1})) ==
          Matrix::of(q, 2, 2, {0, -2, 1, 3}));
    CHECK_THROWS_AS(companion(Polynomial::of(f5, {1, 2})), error);   // not monic
    CHECK_THROWS_AS(companion(Polynomial::one(f5)), error);          // degree zero
}

TEST_CASE("direct sum") {
    const Matrix a = companion(Polynomial::of(f2, {1, 0, 1}));
    const Matrix b = companion(Polynomial::of(f2, {1, 1, 1, 1}));
    // the 5x5 block matrix of the worked F2 example
    CHECK(direct_sum(a, b) == Matrix::of(f2, 5, 5,
                                         {0, 1, 0, 0, 0,
                                          1, 0, 0, 0, 0,
                                          0, 0, 0, 0, 1,
                                          0, 0, 1, 0, 1,
                                          0, 0, 0, 1, 1}));
    CHECK(direct_sum(Matrix::of(f5, 1, 1, {1}), Matrix::of(f5, 1, 1, {2})) ==
          Matrix::of(f5, 2, 2, {1, 0, 0, 2}));
    CHECK_THROWS_AS(direct_sum(a, Matrix::identity(f5, 2)), error);  // spec mismatch
    CHECK_THROWS_AS(direct_sum(a, Matrix::zeros(f2, 2, 3)), error);  // non-square
}

TEST_CASE("inverse examples") {
    CHECK(inverse(Matrix::identity(f5, 3)) == Matrix::identity(f5, 3));
    const Matrix swap2 = Matrix::of(f5, 2, 2, {0, 1, 1, 0});
    CHECK(inverse(swap2) == swap2);
    const Matrix singular = Matrix::of(f5, 2, 2, {1, 2, 2, 4});
    CHECK_THROWS_AS(inverse(singular), error);
    CHECK_FALSE(try_inverse(singular).has_value());
    try {
        inverse(singular);
    } catch (const error& e) {
        CHECK(e.code() == errc::singular_matrix);
    }
}

TEST_CASE("inverse on random invertible matrices") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        const FieldSpec spec = (t % 4 == 3) ? q : testsupport::random_prime_field(rng);
        const std::size_t n = 1 + rng() % 5;
        const Matrix a = testsupport::random_invertible(spec, n, rng);
        const Matrix ai = inverse(a);
        CHECK(a * ai == Matrix::identity(spec, n));
        CHECK(ai * a == Matrix::identity(spec, n));
    }
}

TEST_CASE("rref and kernel") {
    SUBCASE("identity has an empty kernel") {
        const auto r = rref_kernel(Matrix::identity(f5, 4));
        CHECK(r.kernel.empty());
        CHECK(r.rank() == 4);
        CHECK(r.rref == Matrix::identity(f5, 4));
    }
    SUBCASE("zero 2x3 has three generators") {
        const auto r = rref_kernel(Matrix::zeros(f5, 2, 3));
        CHECK(r.kernel.size() == 3);
        CHECK(r.rank() == 0);
    }
    SUBCASE("the worked-example F5 matrix has full rank") {
        const Matrix a = Matrix::of(f5, 3, 3, {0, 1, 3, 3, 2, 4, 0, 0, 4});
        CHECK(rref_kernel(a).rank() == 3);
    }
    SUBCASE("rref is idempotent and rank+nullity = cols") {
        std::mt19937_64 rng(11);
        for (int t = 0; t < 200; ++t) {
            const FieldSpec spec = testsupport::random_prime_field(rng);
            const Matrix a = testsupport::random_matrix(spec, 1 + rng() % 5, 1 + rng() % 5, rng);
            const auto r = rref_kernel(a);
            CHECK(rref_kernel(r.rref).rref == r.rref);
            CHECK(r.rank() + r.kernel.size() == a.cols());
            for (const auto& gen : r.kernel) {
                bool zero = true;
                for (const Scalar& s : mat_vec(a, gen)) zero = zero && s.is_zero();
                CHECK(zero);
            }
            // one unit free variable per generator
            std::vector<bool> is_pivot(a.cols(), false);
            for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
            std::size_t k = 0;
            for (std::size_t c = 0; c < a.cols(); ++c) {
                if (is_pivot[c]) continue;
                for (std::size_t g = 0; g < r.kernel.size(); ++g)
                    CHECK(r.kernel[g][c] == (g == k ? Scalar::one(spec) : Scalar::zero(spec)));
                ++k;
            }
        }
    }
}

TEST_CASE("vectorize round trip") {
    const Matrix m = Matrix::of(f5, 2, 2, {1, 2, 3, 4});
    const auto v = vectorize(m);
    CHECK(v.size() == 4);
    CHECK(v[0] == Scalar::from_integer(1, f5));
    CHECK(v[1] == Scalar::from_integer(2, f5));
    CHECK(v[2] == Scalar::from_integer(3, f5));
    CHECK(v[3] == Scalar::from_integer(4, f5));
    CHECK(devectorize(f5, v, 2, 2) == m);

    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        const FieldSpec spec = testsupport::random_prime_field(rng);
        const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        const Matrix a = testsupport::random_matrix(spec, r, c, rng);
        CHECK(devectorize(spec, vectorize(a), r, c) == a);
    }
    CHECK(vectorize(Matrix::zeros(f5, 2, 3)) == std::vector<Scalar>(6, Scalar::zero(f5)));
}

TEST_CASE("characteristic polynomial of a companion matrix is the polynomial") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 50; ++t) {
        const FieldSpec spec = (t % 5 == 4) ? q : testsupport::random_prime_field(rng);
        const int deg = 1 + static_cast<int>(rng() % 5);
        const Polynomial f = testsupport::random_monic(spec, deg, rng);
        CHECK(oracle::det_laplace(char_matrix(companion(f))) == f);
    }
}

TEST_CASE("direct sum is associative up to block layout") {
    std::mt19937_64 rng(17);
    const Matrix a = testsupport::random_matrix(f5, 2, 2, rng);
    const Matrix b = testsupport::random_matrix(f5, 1, 1, rng);
    const Matrix c = testsupport::random_matrix(f5, 3, 3, rng);
    CHECK(direct_sum(direct_sum(a, b), c) == direct_sum(a, direct_sum(b, c)));
}

TEST_CASE("matrices reject zero dimensions") {
    CHECK_THROWS_AS(Matrix::zeros(f5, 0, 2), error);
    CHECK_THROWS_AS(Matrix::zeros(f5, 2, 0), error);
}
