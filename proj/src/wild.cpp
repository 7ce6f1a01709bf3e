#include "centra/wild.hpp"

#include <random>

namespace centra {

const char* method_name(IntertwinerMethod m) noexcept {
    return m == IntertwinerMethod::coset_via_rcf ? "coset_via_rcf" : "brute_kernel";
}

namespace {

void require_pair(const Matrix& a, const Matrix& a_prime) {
    if (a.spec() != a_prime.spec())
        throw error(errc::spec_mismatch, "intertwiner operands over different fields");
    if (!a.is_square() || !a_prime.is_square() || a.rows() != a_prime.rows())
        throw error(errc::size_mismatch, "intertwiner operands must be square and equal-sized");
}

}  // namespace

IntertwinerSpace one_sided_intertwiners_brute(const Matrix& a, const Matrix& a_prime) {
    require_pair(a, a_prime);
    const std::size_t n = a.rows();
    const FieldSpec& spec = a.spec();

    // Kernel of U -> U A - A' U over vectorized U. Column for E_rc: row r
    // picks up row c of A, column c subtracts column r of A'.
    Matrix system(spec, n * n, n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            Matrix d = Matrix::zeros(spec, n, n);
            for (std::size_t k = 0; k < n; ++k) d.at(r, k) += a.at(c, k);
            for (std::size_t k = 0; k < n; ++k) d.at(k, c) -= a_prime.at(k, r);
            const std::vector<Scalar> col = vectorize(d);
            for (std::size_t k = 0; k < n * n; ++k) system.at(k, r * n + c) = col[k];
        }

    IntertwinerSpace space{spec, n, {}, IntertwinerMethod::brute_kernel};
    for (const std::vector<Scalar>& v : rref_kernel(system).kernel)
        space.basis.push_back(devectorize(spec, v, n, n));
    return space;
}

IntertwinerSpace one_sided_intertwiners(const Matrix& a, const Matrix& a_prime) {
    require_pair(a, a_prime);
    std::vector<Polynomial> fa = invariant_factors(a);
    std::vector<Polynomial> fa_prime = invariant_factors(a_prime);
    if (fa != fa_prime) return one_sided_intertwiners_brute(a, a_prime);

    // Similar inputs: P A P^-1 = A' from composing the two transforms, and
    // the space is the coset P * C(A).
    const RcfResult ra = rcf_transform(a);
    const RcfResult ra_prime = rcf_transform(a_prime);
    const Matrix p = ra_prime.P * inverse(ra.P);

    IntertwinerSpace space{a.spec(), a.rows(), {}, IntertwinerMethod::coset_via_rcf};
    for (const Matrix& e : centralizer_basis(a).elements) space.basis.push_back(p * e);
    return space;
}

IntertwinerSpace simultaneous_intertwiners(const Matrix& a, const Matrix& b,
                                           const Matrix& a_prime, const Matrix& b_prime) {
    require_pair(a, a_prime);
    require_pair(b, b_prime);
    require_pair(a, b);
    const std::size_t n = a.rows();
    const FieldSpec& spec = a.spec();

    const IntertwinerSpace s1 = one_sided_intertwiners(a, a_prime);
    const IntertwinerSpace s2 = one_sided_intertwiners(b, b_prime);
    const IntertwinerMethod method =
        (s1.method == IntertwinerMethod::coset_via_rcf &&
         s2.method == IntertwinerMethod::coset_via_rcf)
            ? IntertwinerMethod::coset_via_rcf
            : IntertwinerMethod::brute_kernel;

    IntertwinerSpace out{spec, n, {}, method};
    if (s1.basis.empty() || s2.basis.empty()) return out;

    const std::size_t d1 = s1.basis.size(), d2 = s2.basis.size();
    Matrix stacked(spec, n * n, d1 + d2);
    for (std::size_t j = 0; j < d1; ++j) {
        const std::vector<Scalar> v = vectorize(s1.basis[j]);
        for (std::size_t r = 0; r < n * n; ++r) stacked.at(r, j) = v[r];
    }
    for (std::size_t j = 0; j < d2; ++j) {
        const std::vector<Scalar> v = vectorize(s2.basis[j]);
        for (std::size_t r = 0; r < n * n; ++r) stacked.at(r, d1 + j) = -v[r];
    }

    // Each kernel vector's basis1 coefficients recombine to one intersection
    // element; independence is inherited from the kernel basis.
    for (const std::vector<Scalar>& coeff : rref_kernel(stacked).kernel) {
        Matrix u = Matrix::zeros(spec, n, n);
        for (std::size_t j = 0; j < d1; ++j) {
            if (!coeff[j].is_zero()) u = u + s1.basis[j].scaled(coeff[j]);
        }
        out.basis.push_back(std::move(u));
    }
    return out;
}

std::optional<Matrix> invertible_witness_search(const IntertwinerSpace& space,
                                                std::uint64_t trials, std::uint64_t seed) {
    if (!space.spec.is_prime_field())
        throw error(errc::unsupported_field, "witness search requires a finite prime field");
    if (space.basis.empty()) return std::nullopt;

    const std::uint64_t p = space.spec.modulus();
    std::mt19937_64 rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        Matrix candidate = Matrix::zeros(space.spec, space.n, space.n);
        for (const Matrix& b : space.basis) {
            const Scalar c = Scalar::from_integer(static_cast<long long>(rng() % p), space.spec);
            if (!c.is_zero()) candidate = candidate + b.scaled(c);
        }
        if (try_inverse(candidate)) return candidate;
    }
    return std::nullopt;
}

}  // namespace centra
