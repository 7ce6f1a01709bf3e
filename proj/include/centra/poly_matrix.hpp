#ifndef CENTRA_POLY_MATRIX_HPP
#define CENTRA_POLY_MATRIX_HPP

#include "centra/matrix.hpp"
#include "centra/poly.hpp"

namespace centra {

// Dense matrix over k[x], row-major.
class PolyMatrix {
public:
    PolyMatrix(const FieldSpec& spec, std::size_t rows, std::size_t cols);

    static PolyMatrix identity(const FieldSpec& spec, std::size_t n);
    // Rectangular diagonal: entry (i,i) = diag[i], zero elsewhere.
    static PolyMatrix diagonal(const FieldSpec& spec, std::size_t rows, std::size_t cols,
                               const std::vector<Polynomial>& diag);

    const FieldSpec& spec() const noexcept { return spec_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Polynomial& at(std::size_t i, std::size_t j);
    const Polynomial& at(std::size_t i, std::size_t j) const;

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) noexcept;
    friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) noexcept { return !(a == b); }

private:
    FieldSpec spec_;
    std::size_t rows_, cols_;
    std::vector<Polynomial> entries_;
};

// The characteristic matrix xI - A of a square scalar matrix.
PolyMatrix char_matrix(const Matrix& a);

// Smith Normal Form decomposition: input = gamma1 * diag * gamma2 with
// unimodular gamma1, gamma2 and a monic divisibility chain on the diagonal
// (zeros trailing).
struct SnfResult {
    PolyMatrix gamma1;
    std::vector<Polynomial> diag;
    PolyMatrix gamma2;
};

SnfResult snf(const PolyMatrix& m);

}  // namespace centra

#endif
