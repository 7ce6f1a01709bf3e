#ifndef CENTRA_CENTRALIZER_HPP
#define CENTRA_CENTRALIZER_HPP

#include "centra/rcf.hpp"

namespace centra {

// Origin of a centralizer basis element: block (i, j) of the canonical-form
// block decomposition (1-based) and the companion power t applied inside it.
struct BlockProvenance {
    std::size_t i;
    std::size_t j;
    std::size_t power;
};

struct CentralizerBasis {
    FieldSpec spec;
    std::size_t n;
    std::vector<Matrix> elements;
    std::vector<BlockProvenance> provenance;  // parallel to elements
    std::vector<Polynomial> factors;
};

// q_ij: 1 for i <= j, the exact quotient f_i / f_j for i > j. Indices are
// 1-based. Throws non_divisible if the chain is corrupted.
Polynomial generating_polynomial(std::size_t i, std::size_t j,
                                 const std::vector<Polynomial>& factors);

// Coefficient vector of q_ij padded to length deg f_i (e_k <-> x^{k-1}).
std::vector<Scalar> generating_vector(std::size_t i, std::size_t j,
                                      const std::vector<Polynomial>& factors);

// deg f_i x deg f_j matrix with columns q_ij, C(f_i) q_ij, C(f_i)^2 q_ij, ...
Matrix generating_matrix(std::size_t i, std::size_t j, const std::vector<Polynomial>& factors);

// Explicit basis of the centralizer of the canonical form R = (+) C(f_i):
// for every block (i, j) in row-major order, min(deg f_i, deg f_j) elements
// C(f_i)^t Q_ij placed in block position, powers t ascending.
CentralizerBasis rcf_centralizer_basis(const std::vector<Polynomial>& factors);

// Basis of the centralizer of an arbitrary square A: the canonical-form
// basis conjugated by the transformation matrix, order preserved.
CentralizerBasis centralizer_basis(const Matrix& a);

// Centralizer dimension as the pairwise-min sum over factor degrees.
std::size_t frobenius_dimension(const std::vector<Polynomial>& factors);

// The same dimension by the closed form sum (2i+1) deg f_{m-i}; kept as an
// independent implementation for cross-checks.
std::size_t frobenius_dimension_closed_form(const std::vector<Polynomial>& factors);

}  // namespace centra

#endif
