#include "centra/matrix.hpp"

namespace centra {

Matrix::Matrix(const FieldSpec& spec, std::size_t rows, std::size_t cols)
    : spec_(spec), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(spec)) {
    if (rows == 0 || cols == 0)
        throw error(errc::dimension_mismatch, "matrix dimensions must be positive");
}

Matrix Matrix::identity(const FieldSpec& spec, std::size_t n) {
    Matrix m(spec, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(spec);
    return m;
}

Matrix Matrix::of(const FieldSpec& spec, std::size_t rows, std::size_t cols,
                  std::initializer_list<long long> row_major) {
    Matrix m(spec, rows, cols);
    if (row_major.size() != rows * cols)
        throw error(errc::dimension_mismatch, "entry count does not match dimensions");
    std::size_t k = 0;
    for (long long v : row_major) m.entries_[k++] = Scalar::from_integer(v, spec);
    return m;
}

Matrix Matrix::from_columns(const FieldSpec& spec,
                            const std::vector<std::vector<Scalar>>& columns) {
    if (columns.empty() || columns.front().empty())
        throw error(errc::dimension_mismatch, "from_columns needs at least one nonempty column");
    Matrix m(spec, columns.front().size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != m.rows_)
            throw error(errc::dimension_mismatch, "column lengths differ");
        for (std::size_t i = 0; i < m.rows_; ++i) m.at(i, j) = columns[j][i];
    }
    return m;
}

Scalar& Matrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw error(errc::index_out_of_range, "matrix index");
    return entries_[i * cols_ + j];
}

const Scalar& Matrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw error(errc::index_out_of_range, "matrix index");
    return entries_[i * cols_ + j];
}

void Matrix::require_same_spec(const Matrix& a, const Matrix& b) {
    if (a.spec_ != b.spec_)
        throw error(errc::spec_mismatch, a.spec_.to_string() + " vs " + b.spec_.to_string());
}

Matrix Matrix::operator-() const {
    Matrix m(spec_, rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = -entries_[k];
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix::require_same_spec(a, b);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw error(errc::dimension_mismatch, "matrix addition shapes differ");
    Matrix m(a.spec_, a.rows_, a.cols_);
    for (std::size_t k = 0; k < m.entries_.size(); ++k) m.entries_[k] = a.entries_[k] + b.entries_[k];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix::require_same_spec(a, b);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw error(errc::dimension_mismatch, "matrix subtraction shapes differ");
    Matrix m(a.spec_, a.rows_, a.cols_);
    for (std::size_t k = 0; k < m.entries_.size(); ++k) m.entries_[k] = a.entries_[k] - b.entries_[k];
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix::require_same_spec(a, b);
    if (a.cols_ != b.rows_)
        throw error(errc::dimension_mismatch, "matrix product inner dimensions differ");
    Matrix m(a.spec_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t t = 0; t < a.cols_; ++t) {
            const Scalar& av = a.at(i, t);
            if (av.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                m.at(i, j) += av * b.at(t, j);
        }
    }
    return m;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix m(spec_, rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k] * s;
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) noexcept {
    if (a.spec_ != b.spec_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
        if (a.entries_[k] != b.entries_[k]) return false;
    return true;
}

bool Matrix::is_zero() const noexcept {
    for (const Scalar& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

Matrix companion(const Polynomial& f) {
    if (f.degree() < Degree(1))
        throw error(errc::degree_zero, "companion matrix needs degree >= 1");
    if (!f.is_monic()) throw error(errc::not_monic, "companion matrix needs a monic polynomial");
    const std::size_t n = static_cast<std::size_t>(f.degree().value());
    Matrix c(f.spec(), n, n);
    for (std::size_t i = 1; i < n; ++i) c.at(i, i - 1) = Scalar::one(f.spec());
    for (std::size_t i = 0; i < n; ++i) c.at(i, n - 1) = -f.coeff(i);
    return c;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    if (a.spec() != b.spec())
        throw error(errc::spec_mismatch, "direct_sum operands over different fields");
    if (!a.is_square() || !b.is_square())
        throw error(errc::non_square, "direct_sum needs square operands");
    Matrix m(a.spec(), a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return m;
}

std::optional<Matrix> try_inverse(const Matrix& a) {
    if (!a.is_square()) throw error(errc::non_square, "inverse needs a square matrix");
    const std::size_t n = a.rows();
    Matrix work = a;
    Matrix inv = Matrix::identity(a.spec(), n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && work.at(piv, col).is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work.at(col, j), work.at(piv, j));
                std::swap(inv.at(col, j), inv.at(piv, j));
            }
        }
        const Scalar s = work.at(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            work.at(col, j) *= s;
            inv.at(col, j) *= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || work.at(r, col).is_zero()) continue;
            const Scalar f = work.at(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                work.at(r, j) -= f * work.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

Matrix inverse(const Matrix& a) {
    auto inv = try_inverse(a);
    if (!inv) throw error(errc::singular_matrix, "matrix is singular");
    return *std::move(inv);
}

RrefResult rref_kernel(const Matrix& a) {
    Matrix work = a;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && work.at(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(work.at(r, j), work.at(piv, j));
        const Scalar s = work.at(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j) work.at(r, j) *= s;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || work.at(i, c).is_zero()) continue;
            const Scalar f = work.at(i, c);
            for (std::size_t j = c; j < cols; ++j) work.at(i, j) -= f * work.at(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }

    std::vector<std::vector<Scalar>> kernel;
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Scalar> gen(cols, Scalar::zero(a.spec()));
        gen[c] = Scalar::one(a.spec());
        for (std::size_t k = 0; k < pivot_cols.size(); ++k)
            gen[pivot_cols[k]] = -work.at(k, c);
        kernel.push_back(std::move(gen));
    }
    return {std::move(work), std::move(pivot_cols), std::move(kernel)};
}

std::vector<Scalar> vectorize(const Matrix& a) {
    std::vector<Scalar> v;
    v.reserve(a.rows() * a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) v.push_back(a.at(i, j));
    return v;
}

Matrix devectorize(const FieldSpec& spec, const std::vector<Scalar>& v, std::size_t rows,
                   std::size_t cols) {
    if (v.size() != rows * cols)
        throw error(errc::dimension_mismatch, "vector length does not match matrix shape");
    Matrix m(spec, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = v[i * cols + j];
    return m;
}

std::vector<Scalar> mat_vec(const Matrix& a, const std::vector<Scalar>& v) {
    if (v.size() != a.cols())
        throw error(errc::dimension_mismatch, "mat_vec dimensions differ");
    std::vector<Scalar> out(a.rows(), Scalar::zero(a.spec()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!a.at(i, j).is_zero()) out[i] += a.at(i, j) * v[j];
        }
    return out;
}

Matrix eval_at_matrix(const Polynomial& p, const Matrix& m) {
    if (!m.is_square()) throw error(errc::non_square, "polynomial evaluation needs a square matrix");
    if (p.spec() != m.spec())
        throw error(errc::spec_mismatch, "polynomial and matrix over different fields");
    const std::size_t n = m.rows();
    if (p.is_zero()) return Matrix::zeros(m.spec(), n, n);
    const int deg = p.degree().value();
    Matrix acc = Matrix::identity(m.spec(), n).scaled(p.coeff(static_cast<std::size_t>(deg)));
    for (int d = deg - 1; d >= 0; --d) {
        acc = acc * m;
        const Scalar c = p.coeff(static_cast<std::size_t>(d));
        if (!c.is_zero())
            for (std::size_t i = 0; i < n; ++i) acc.at(i, i) += c;
    }
    return acc;
}

}  // namespace centra
