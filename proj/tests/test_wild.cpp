#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "centra/oracle.hpp"
#include "centra/wild.hpp"
#include "test_support.hpp"

using namespace centra;

namespace {
const FieldSpec f2 = FieldSpec::prime(2);
const FieldSpec f3 = FieldSpec::prime(3);
const FieldSpec f5 = FieldSpec::prime(5);

bool intertwines(const Matrix& u, const Matrix& a, const Matrix& a_prime) {
    return u * a == a_prime * u;
}
}  // namespace

TEST_CASE("one-sided intertwiners") {
    SUBCASE("identical identity matrices: all of M_2") {
        const auto s = one_sided_intertwiners(Matrix::identity(f3, 2), Matrix::identity(f3, 2));
        CHECK(s.dimension() == 4);
        CHECK(s.method == IntertwinerMethod::coset_via_rcf);
    }
    SUBCASE("zero versus identity: only the zero map") {
        const auto s = one_sided_intertwiners(Matrix::zeros(f2, 2, 2), Matrix::identity(f2, 2));
        CHECK(s.dimension() == 0);
        CHECK(s.method == IntertwinerMethod::brute_kernel);
    }
    SUBCASE("conjugated matrix: the space contains the conjugator") {
        std::mt19937_64 rng(71);
        for (int t = 0; t < 25; ++t) {
            const FieldSpec spec = testsupport::random_prime_field(rng);
            const std::size_t n = 1 + rng() % 4;
            const Matrix a = testsupport::random_matrix(spec, n, n, rng);
            const Matrix s = testsupport::random_invertible(spec, n, rng);
            const Matrix a_prime = s * a * inverse(s);

            const auto space = one_sided_intertwiners(a, a_prime);
            CHECK(space.method == IntertwinerMethod::coset_via_rcf);
            CHECK(space.dimension() == centralizer_basis(a).elements.size());
            CHECK(oracle::span_contains(space.basis, s));
            for (const Matrix& u : space.basis) CHECK(intertwines(u, a, a_prime));
        }
    }
    SUBCASE("size and field mismatches are rejected") {
        CHECK_THROWS_AS(one_sided_intertwiners(Matrix::identity(f2, 2), Matrix::identity(f2, 3)),
                        error);
        CHECK_THROWS_AS(one_sided_intertwiners(Matrix::identity(f2, 2), Matrix::identity(f3, 2)),
                        error);
    }
}

TEST_CASE("both routes produce the same space on similar pairs") {
    std::mt19937_64 rng(72);
    for (int t = 0; t < 20; ++t) {
        const FieldSpec spec = testsupport::random_prime_field(rng);
        const std::size_t n = 1 + rng() % 5;
        const Matrix a = testsupport::random_matrix(spec, n, n, rng);
        const Matrix s = testsupport::random_invertible(spec, n, rng);
        const Matrix a_prime = s * a * inverse(s);

        const auto coset = one_sided_intertwiners(a, a_prime);
        const auto brute = one_sided_intertwiners_brute(a, a_prime);
        CHECK(coset.method == IntertwinerMethod::coset_via_rcf);
        CHECK(brute.method == IntertwinerMethod::brute_kernel);
        CHECK(coset.dimension() == brute.dimension());
        CHECK(oracle::span_equal(coset.basis, brute.basis));
        for (const Matrix& u : brute.basis) CHECK(intertwines(u, a, a_prime));
    }
}

TEST_CASE("simultaneous intertwiners") {
    SUBCASE("conjugated pair contains the conjugator") {
        std::mt19937_64 rng(73);
        for (int t = 0; t < 20; ++t) {
            const FieldSpec spec = testsupport::random_prime_field(rng);
            const std::size_t n = 1 + rng() % 4;
            const Matrix a = testsupport::random_matrix(spec, n, n, rng);
            const Matrix b = testsupport::random_matrix(spec, n, n, rng);
            const Matrix s = testsupport::random_invertible(spec, n, rng);
            const Matrix si = inverse(s);

            const auto space = simultaneous_intertwiners(a, b, s * a * si, s * b * si);
            CHECK(space.dimension() >= 1);
            CHECK(oracle::span_contains(space.basis, s));
            for (const Matrix& u : space.basis) {
                CHECK(intertwines(u, a, s * a * si));
                CHECK(intertwines(u, b, s * b * si));
            }
        }
    }
    SUBCASE("identity pairs: the whole matrix algebra") {
        const Matrix i3 = Matrix::identity(f5, 3);
        CHECK(simultaneous_intertwiners(i3, i3, i3, i3).dimension() == 9);
    }
    SUBCASE("diag(0,1) with E12 over F2: the scalar line, and brute agreement") {
        const Matrix a = Matrix::of(f2, 2, 2, {0, 0, 0, 1});
        const Matrix b = Matrix::of(f2, 2, 2, {0, 1, 0, 0});
        const auto space = simultaneous_intertwiners(a, b, a, b);
        CHECK(oracle::span_equal(space.basis, {Matrix::identity(f2, 2)}));

        // independent route: stack both commutator systems and take the kernel
        Matrix system(f2, 8, 4);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c) {
                Matrix u = Matrix::zeros(f2, 2, 2);
                u.at(r, c) = Scalar::one(f2);
                const auto da = vectorize(u * a - a * u);
                const auto db = vectorize(u * b - b * u);
                for (std::size_t k = 0; k < 4; ++k) {
                    system.at(k, r * 2 + c) = da[k];
                    system.at(4 + k, r * 2 + c) = db[k];
                }
            }
        std::vector<Matrix> brute;
        for (const auto& v : rref_kernel(system).kernel) brute.push_back(devectorize(f2, v, 2, 2));
        CHECK(oracle::span_equal(space.basis, brute));
    }
}

TEST_CASE("invertible witness search") {
    SUBCASE("the full matrix algebra over F5 yields a witness quickly") {
        std::vector<Matrix> all;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                Matrix e = Matrix::zeros(f5, 2, 2);
                e.at(i, j) = Scalar::one(f5);
                all.push_back(e);
            }
        const IntertwinerSpace space{f5, 2, all, IntertwinerMethod::brute_kernel};
        const auto w = invertible_witness_search(space, 50, 7);
        REQUIRE(w.has_value());
        CHECK(try_inverse(*w).has_value());
        CHECK(oracle::span_contains(space.basis, *w));
    }
    SUBCASE("a nilpotent line has no invertible elements") {
        const IntertwinerSpace space{f5, 2, {Matrix::of(f5, 2, 2, {0, 1, 0, 0})},
                                     IntertwinerMethod::brute_kernel};
        CHECK_FALSE(invertible_witness_search(space, 200, 1).has_value());
    }
    SUBCASE("the scalar line yields a nonzero scalar matrix") {
        const IntertwinerSpace space{f5, 2, {Matrix::identity(f5, 2)},
                                     IntertwinerMethod::brute_kernel};
        const auto w = invertible_witness_search(space, 50, 3);
        REQUIRE(w.has_value());
        CHECK(w->at(0, 1).is_zero());
        CHECK(w->at(0, 0) == w->at(1, 1));
        CHECK_FALSE(w->at(0, 0).is_zero());
    }
    SUBCASE("rationals are rejected") {
        const IntertwinerSpace space{FieldSpec::rationals(), 2,
                                     {Matrix::identity(FieldSpec::rationals(), 2)},
                                     IntertwinerMethod::brute_kernel};
        CHECK_THROWS_AS(invertible_witness_search(space, 10, 1), error);
    }
    SUBCASE("searches are reproducible for a fixed seed") {
        const IntertwinerSpace space{f5, 2,
                                     {Matrix::identity(f5, 2), Matrix::of(f5, 2, 2, {0, 1, 0, 0})},
                                     IntertwinerMethod::brute_kernel};
        const auto w1 = invertible_witness_search(space, 20, 42);
        const auto w2 = invertible_witness_search(space, 20, 42);
        REQUIRE(w1.has_value());
        REQUIRE(w2.has_value());
        CHECK(*w1 == *w2);
    }
}
