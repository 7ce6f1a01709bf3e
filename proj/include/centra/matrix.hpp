#ifndef CENTRA_MATRIX_HPP
#define CENTRA_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "centra/poly.hpp"

namespace centra {

// Dense matrix over an exact field, row-major. Dimensions are always >= 1.
class Matrix {
public:
    Matrix(const FieldSpec& spec, std::size_t rows, std::size_t cols);

    static Matrix zeros(const FieldSpec& spec, std::size_t rows, std::size_t cols) {
        return Matrix(spec, rows, cols);
    }
    static Matrix identity(const FieldSpec& spec, std::size_t n);
    // test/fixture convenience: row-major integer entries embedded into the field
    static Matrix of(const FieldSpec& spec, std::size_t rows, std::size_t cols,
                     std::initializer_list<long long> row_major);
    static Matrix from_columns(const FieldSpec& spec,
                               const std::vector<std::vector<Scalar>>& columns);

    const FieldSpec& spec() const noexcept { return spec_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Scalar& at(std::size_t i, std::size_t j);
    const Scalar& at(std::size_t i, std::size_t j) const;
    Scalar& operator()(std::size_t i, std::size_t j) { return at(i, j); }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return at(i, j); }

    Matrix operator-() const;
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Matrix scaled(const Scalar& s) const;

    friend bool operator==(const Matrix& a, const Matrix& b) noexcept;
    friend bool operator!=(const Matrix& a, const Matrix& b) noexcept { return !(a == b); }

    bool is_zero() const noexcept;

private:
    static void require_same_spec(const Matrix& a, const Matrix& b);

    FieldSpec spec_;
    std::size_t rows_, cols_;
    std::vector<Scalar> entries_;
};

// Companion matrix of a monic polynomial of degree >= 1: ones on the
// subdiagonal, negated coefficients in the last column.
Matrix companion(const Polynomial& f);

// Block-diagonal sum of two square matrices over the same field.
Matrix direct_sum(const Matrix& a, const Matrix& b);

// Gauss-Jordan inverse with exact arithmetic; throws singular_matrix.
Matrix inverse(const Matrix& a);
// Same computation, but reports singularity as an empty optional.
std::optional<Matrix> try_inverse(const Matrix& a);

struct RrefResult {
    Matrix rref;
    std::vector<std::size_t> pivot_cols;
    std::vector<std::vector<Scalar>> kernel;  // one generator per free column
    std::size_t rank() const noexcept { return pivot_cols.size(); }
};

// Reduced row echelon form plus a kernel basis with one unit free variable
// per generator. Deterministic: pivots are the first nonzero entry per column.
RrefResult rref_kernel(const Matrix& a);

// Row-major flattening and its inverse.
std::vector<Scalar> vectorize(const Matrix& a);
Matrix devectorize(const FieldSpec& spec, const std::vector<Scalar>& v, std::size_t rows,
                   std::size_t cols);

// Matrix-vector product.
std::vector<Scalar> mat_vec(const Matrix& a, const std::vector<Scalar>& v);

// Horner evaluation sum c_i M^i of a polynomial at a square matrix.
Matrix eval_at_matrix(const Polynomial& p, const Matrix& m);

}  // namespace centra

#endif
