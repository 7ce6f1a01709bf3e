#ifndef CENTRA_ORACLE_HPP
#define CENTRA_ORACLE_HPP

#include "centra/poly_matrix.hpp"

namespace centra {
// Brute-force cross-check implementations. They deliberately share only the
// field/polynomial/matrix primitives with the main pipeline, never the
// smith/rcf/centralizer code paths.
namespace oracle {

// Kernel basis of the linear map X -> XA - AX over vectorized X; the
// centralizer of A computed as a plain linear system.
std::vector<Matrix> commutant_kernel_basis(const Matrix& a);

// Determinant by Laplace expansion along the first column. Exponential;
// intended for small matrices only.
Polynomial det_laplace(const PolyMatrix& m);

// Determinantal-divisor invariants: d_i = Delta_i / Delta_{i-1} where
// Delta_i is the monic gcd of all i x i minors. Square nonsingular input;
// practical only for n <= 5. Throws singular_input when det = 0.
std::vector<Polynomial> minor_gcd_invariants(const PolyMatrix& m);

// True iff the row spaces of the vectorized spans coincide. Empty spans are
// the zero space. Throws shape_mismatch on incompatible shapes or fields.
bool span_equal(const std::vector<Matrix>& basis1, const std::vector<Matrix>& basis2);

// True iff m lies in the span of basis (rank comparison after stacking).
bool span_contains(const std::vector<Matrix>& basis, const Matrix& m);

}  // namespace oracle
}  // namespace centra

#endif
