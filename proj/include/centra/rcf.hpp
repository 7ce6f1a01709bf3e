#ifndef CENTRA_RCF_HPP
#define CENTRA_RCF_HPP

#include "centra/poly_matrix.hpp"

namespace centra {

// Rational canonical form data of a square matrix A: the nonconstant
// invariant factors f_1 | f_2 | ... (monic, ascending divisibility), an
// invertible P with P^-1 A P = R, and R = direct sum of companion blocks.
struct RcfResult {
    std::vector<Polynomial> factors;
    Matrix P;
    Matrix R;
};

// Evaluates the truncation map sum x^i v_i -> sum A^i v_i on a polynomial
// column vector of length dim A.
std::vector<Scalar> apply_phi(const std::vector<Polynomial>& v, const Matrix& a);

// Nonconstant diagonal of snf(xI - A), ascending divisibility; the product
// equals the characteristic polynomial of A.
std::vector<Polynomial> invariant_factors(const Matrix& a);

// Full transformation: factors, P, R. Self-verifies P^-1 A P = R and throws
// internal_inconsistency if the identity fails (an implementation bug, not
// bad input).
RcfResult rcf_transform(const Matrix& a);

}  // namespace centra

#endif
