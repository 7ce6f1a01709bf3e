#ifndef CENTRA_WILD_HPP
#define CENTRA_WILD_HPP

#include <cstdint>
#include <optional>

#include "centra/centralizer.hpp"

namespace centra {

enum class IntertwinerMethod { coset_via_rcf, brute_kernel };

const char* method_name(IntertwinerMethod m) noexcept;

// Basis of a space of intertwiners {U : U A = A' U} (one-sided) or
// {U : U A = A' U and U B = B' U} (simultaneous). The zero matrix always
// belongs to these spaces; emptiness questions are answered by dimension.
struct IntertwinerSpace {
    FieldSpec spec;
    std::size_t n;
    std::vector<Matrix> basis;
    IntertwinerMethod method;

    std::size_t dimension() const noexcept { return basis.size(); }
};

// All U with U A = A' U. When A and A' share invariant factors the space is
// the coset P * C(A) with P A P^-1 = A' (method coset_via_rcf); otherwise it
// falls back to the kernel of U -> U A - A' U (method brute_kernel).
IntertwinerSpace one_sided_intertwiners(const Matrix& a, const Matrix& a_prime);

// The kernel route unconditionally; exposed so both routes can be compared.
IntertwinerSpace one_sided_intertwiners_brute(const Matrix& a, const Matrix& a_prime);

// All U satisfying both intertwining identities: the intersection of the two
// one-sided spaces, computed from the kernel of the stacked system
// [B1 | -B2] with the coefficients on basis1 recombined.
IntertwinerSpace simultaneous_intertwiners(const Matrix& a, const Matrix& b,
                                           const Matrix& a_prime, const Matrix& b_prime);

// Randomized hunt for an invertible element of the space: samples seeded
// k-linear combinations of the basis and returns the first invertible one.
// An empty result means UNKNOWN, never "no". Finite prime fields only.
std::optional<Matrix> invertible_witness_search(const IntertwinerSpace& space,
                                                std::uint64_t trials, std::uint64_t seed);

}  // namespace centra

#endif
