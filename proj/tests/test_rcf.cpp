#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "centra/oracle.hpp"
#include "centra/rcf.hpp"
#include "test_support.hpp"

using namespace centra;

namespace {
const FieldSpec f2 = FieldSpec::prime(2);
const FieldSpec f3 = FieldSpec::prime(3);
const FieldSpec f5 = FieldSpec::prime(5);
const FieldSpec q = FieldSpec::rationals();

const Matrix example_f5() { return Matrix::of(f5, 3, 3, {0, 1, 3, 3, 2, 4, 0, 0, 4}); }
}  // namespace

TEST_CASE("phi truncation map") {
    std::mt19937_64 rng(5);
    const Matrix a = testsupport::random_matrix(f5, 3, 3, rng);

    SUBCASE("constant columns are fixed") {
        std::vector<Polynomial> v;
        std::vector<Scalar> expect;
        for (int i = 0; i < 3; ++i) {
            const Scalar s = testsupport::random_scalar(f5, rng);
            v.push_back(Polynomial::constant(s));
            expect.push_back(s);
        }
        CHECK(apply_phi(v, a) == expect);
    }
    SUBCASE("x * e1 maps to A * e1") {
        std::vector<Polynomial> v{Polynomial::of(f5, {0, 1}), Polynomial::zero(f5),
                                  Polynomial::zero(f5)};
        const auto got = apply_phi(v, a);
        for (int i = 0; i < 3; ++i) CHECK(got[i] == a.at(i, 0));
    }
    SUBCASE("the column space of xI-A lies in the kernel") {
        for (int t = 0; t < 50; ++t) {
            PolyMatrix w(f5, 3, 1);
            for (int i = 0; i < 3; ++i) w.at(i, 0) = testsupport::random_poly(f5, 3, rng);
            const PolyMatrix prod = char_matrix(a) * w;
            std::vector<Polynomial> v;
            for (int i = 0; i < 3; ++i) v.push_back(prod.at(i, 0));
            for (const Scalar& s : apply_phi(v, a)) CHECK(s.is_zero());
        }
    }
    SUBCASE("length mismatch is rejected") {
        std::vector<Polynomial> v{Polynomial::one(f5)};
        CHECK_THROWS_AS(apply_phi(v, a), error);
    }
}

TEST_CASE("invariant factor examples") {
    SUBCASE("worked F5 example: (x+1, x^2+3x+2)") {
        const auto fs = invariant_factors(example_f5());
        REQUIRE(fs.size() == 2);
        CHECK(fs[0] == Polynomial::of(f5, {1, 1}));
        CHECK(fs[1] == Polynomial::of(f5, {2, 3, 1}));
        // cross-checks: divisibility, degree sum, product = char poly
        CHECK(divides(fs[0], fs[1]));
        CHECK(fs[0] * fs[1] == oracle::det_laplace(char_matrix(example_f5())));
    }
    SUBCASE("identity over F3: x-1 twice") {
        const auto fs = invariant_factors(Matrix::identity(f3, 2));
        REQUIRE(fs.size() == 2);
        CHECK(fs[0] == Polynomial::of(f3, {2, 1}));
        CHECK(fs[1] == Polynomial::of(f3, {2, 1}));
    }
    SUBCASE("a companion matrix has its polynomial as the only factor") {
        const Polynomial f = Polynomial::of(f2, {1, 0, 1});
        const auto fs = invariant_factors(companion(f));
        REQUIRE(fs.size() == 1);
        CHECK(fs[0] == f);
        CHECK(oracle::minor_gcd_invariants(char_matrix(companion(f))).back() == f);
    }
}

TEST_CASE("rcf_transform examples") {
    SUBCASE("already in canonical form") {
        const Matrix a = direct_sum(companion(Polynomial::of(f2, {1, 0, 1})),
                                    companion(Polynomial::of(f2, {1, 1, 1, 1})));
        const RcfResult r = rcf_transform(a);
        REQUIRE(r.factors.size() == 2);
        CHECK(r.factors[0] == Polynomial::of(f2, {1, 0, 1}));
        CHECK(r.factors[1] == Polynomial::of(f2, {1, 1, 1, 1}));
        CHECK(r.R == a);
        CHECK(inverse(r.P) * a * r.P == r.R);  // P need not be the identity
    }
    SUBCASE("scalar matrix") {
        const RcfResult r = rcf_transform(Matrix::identity(f5, 3));
        REQUIRE(r.factors.size() == 3);
        for (const auto& f : r.factors) CHECK(f == Polynomial::of(f5, {4, 1}));
        CHECK(r.R == Matrix::identity(f5, 3));
    }
    SUBCASE("worked F5 example lands on C(x+1) + C(x^2+3x+2)") {
        const RcfResult r = rcf_transform(example_f5());
        CHECK(r.R == direct_sum(companion(Polynomial::of(f5, {1, 1})),
                                companion(Polynomial::of(f5, {2, 3, 1}))));
        CHECK(inverse(r.P) * example_f5() * r.P == r.R);
    }
}

TEST_CASE("random pipeline: P conjugates A onto the canonical form") {
    std::mt19937_64 rng(808);
    for (int t = 0; t < 80; ++t) {
        const FieldSpec spec = (t % 8 == 7) ? q : testsupport::random_prime_field(rng);
        const std::size_t n = 1 + rng() % ((spec == q) ? 4 : 6);
        const Matrix a = testsupport::random_matrix(spec, n, n, rng);
        const RcfResult r = rcf_transform(a);

        std::size_t total_deg = 0;
        for (std::size_t i = 0; i < r.factors.size(); ++i) {
            CHECK(r.factors[i].is_monic());
            total_deg += static_cast<std::size_t>(r.factors[i].degree().value());
            if (i + 1 < r.factors.size()) CHECK(divides(r.factors[i], r.factors[i + 1]));
        }
        CHECK(total_deg == n);
        CHECK(inverse(r.P) * a * r.P == r.R);
    }
}

TEST_CASE("invariant factors are similarity invariants") {
    std::mt19937_64 rng(909);
    for (int t = 0; t < 40; ++t) {
        const FieldSpec spec = testsupport::random_prime_field(rng);
        const std::size_t n = 1 + rng() % 5;
        const Matrix a = testsupport::random_matrix(spec, n, n, rng);
        const Matrix s = testsupport::random_invertible(spec, n, rng);
        CHECK(invariant_factors(s * a * inverse(s)) == invariant_factors(a));
    }
}

TEST_CASE("factors agree with the determinantal-divisor oracle") {
    std::mt19937_64 rng(910);
    for (int t = 0; t < 30; ++t) {
        const FieldSpec spec = testsupport::random_prime_field(rng);
        const std::size_t n = 1 + rng() % 4;
        const Matrix a = testsupport::random_matrix(spec, n, n, rng);
        const auto oracle_diag = oracle::minor_gcd_invariants(char_matrix(a));
        std::vector<Polynomial> nonconstant;
        for (const Polynomial& d : oracle_diag)
            if (d.degree() > Degree(0)) nonconstant.push_back(d);
        CHECK(invariant_factors(a) == nonconstant);
    }
}
