#include "centra/poly_matrix.hpp"

namespace centra {

PolyMatrix::PolyMatrix(const FieldSpec& spec, std::size_t rows, std::size_t cols)
    : spec_(spec), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial::zero(spec)) {
    if (rows == 0 || cols == 0)
        throw error(errc::dimension_mismatch, "polynomial matrix dimensions must be positive");
}

PolyMatrix PolyMatrix::identity(const FieldSpec& spec, std::size_t n) {
    PolyMatrix m(spec, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Polynomial::one(spec);
    return m;
}

PolyMatrix PolyMatrix::diagonal(const FieldSpec& spec, std::size_t rows, std::size_t cols,
                                const std::vector<Polynomial>& diag) {
    PolyMatrix m(spec, rows, cols);
    if (diag.size() != std::min(rows, cols))
        throw error(errc::dimension_mismatch, "diagonal length must be min(rows, cols)");
    for (std::size_t i = 0; i < diag.size(); ++i) m.at(i, i) = diag[i];
    return m;
}

Polynomial& PolyMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw error(errc::index_out_of_range, "polynomial matrix index");
    return entries_[i * cols_ + j];
}

const Polynomial& PolyMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw error(errc::index_out_of_range, "polynomial matrix index");
    return entries_[i * cols_ + j];
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.spec_ != b.spec_)
        throw error(errc::spec_mismatch, "polynomial matrix product over different fields");
    if (a.cols_ != b.rows_)
        throw error(errc::dimension_mismatch, "polynomial matrix product inner dimensions differ");
    PolyMatrix m(a.spec_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t t = 0; t < a.cols_; ++t) {
            const Polynomial& av = a.at(i, t);
            if (av.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (b.at(t, j).is_zero()) continue;
                m.at(i, j) += av * b.at(t, j);
            }
        }
    return m;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) noexcept {
    if (a.spec_ != b.spec_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
        if (a.entries_[k] != b.entries_[k]) return false;
    return true;
}

PolyMatrix char_matrix(const Matrix& a) {
    if (!a.is_square()) throw error(errc::non_square, "char_matrix needs a square matrix");
    const FieldSpec& spec = a.spec();
    PolyMatrix m(spec, a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            std::vector<Scalar> cs;
            if (i == j) cs = {-a.at(i, j), Scalar::one(spec)};
            else cs = {-a.at(i, j)};
            m.at(i, j) = Polynomial::from_coeffs(spec, std::move(cs));
        }
    return m;
}

namespace {

// Working state for the Smith reduction. Elementary operations are applied
// to W and mirrored (inverted) into gamma1 / gamma2 so that the invariant
// input = gamma1 * W * gamma2 holds at every step.
class SmithReducer {
public:
    explicit SmithReducer(const PolyMatrix& input)
        : w_(input),
          g1_(PolyMatrix::identity(input.spec(), input.rows())),
          g2_(PolyMatrix::identity(input.spec(), input.cols())),
          rows_(input.rows()),
          cols_(input.cols()) {}

    SnfResult run() {
        diagonalize(0);
        enforce_chain();
        normalize_monic();
        std::vector<Polynomial> diag;
        diag.reserve(std::min(rows_, cols_));
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) diag.push_back(w_.at(i, i));
        return {std::move(g1_), std::move(diag), std::move(g2_)};
    }

private:
    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(w_.at(i, c), w_.at(j, c));
        for (std::size_t r = 0; r < rows_; ++r) std::swap(g1_.at(r, i), g1_.at(r, j));
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < rows_; ++r) std::swap(w_.at(r, i), w_.at(r, j));
        for (std::size_t c = 0; c < cols_; ++c) std::swap(g2_.at(i, c), g2_.at(j, c));
    }

    // row_i -= q * row_j; inverse op adds q * column_i to column_j of gamma1
    void row_op(std::size_t i, std::size_t j, const Polynomial& q) {
        if (q.is_zero()) return;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (!w_.at(j, c).is_zero()) w_.at(i, c) -= q * w_.at(j, c);
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            if (!g1_.at(r, i).is_zero()) g1_.at(r, j) += q * g1_.at(r, i);
        }
    }

    // col_i -= q * col_j; inverse op adds q * row_i to row_j of gamma2
    void col_op(std::size_t i, std::size_t j, const Polynomial& q) {
        if (q.is_zero()) return;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (!w_.at(r, j).is_zero()) w_.at(r, i) -= q * w_.at(r, j);
        }
        for (std::size_t c = 0; c < cols_; ++c) {
            if (!g2_.at(i, c).is_zero()) g2_.at(j, c) += q * g2_.at(i, c);
        }
    }

    // row_i *= s; column i of gamma1 absorbs s^{-1}
    void scale_row(std::size_t i, const Scalar& s) {
        for (std::size_t c = 0; c < cols_; ++c) w_.at(i, c) = w_.at(i, c).scaled(s);
        const Scalar sinv = s.inverse();
        for (std::size_t r = 0; r < rows_; ++r) g1_.at(r, i) = g1_.at(r, i).scaled(sinv);
    }

    struct Pivot {
        std::size_t row, col;
    };

    // Minimal-degree nonzero entry of the trailing submatrix; ties break to
    // the smallest (row, col) in lexicographic order.
    std::optional<Pivot> select_pivot(std::size_t k) const {
        std::optional<Pivot> best;
        Degree best_deg = Degree::neg_infinity();
        for (std::size_t r = k; r < rows_; ++r)
            for (std::size_t c = k; c < cols_; ++c) {
                const Polynomial& e = w_.at(r, c);
                if (e.is_zero()) continue;
                if (!best || e.degree() < best_deg) {
                    best = Pivot{r, c};
                    best_deg = e.degree();
                }
            }
        return best;
    }

    void diagonalize(std::size_t k0) {
        const Polynomial minus_one = -Polynomial::one(w_.spec());
        std::size_t k = k0;
        while (k < std::min(rows_, cols_)) {
            auto sel = select_pivot(k);
            if (!sel) break;
            swap_rows(k, sel->row);
            swap_cols(k, sel->col);

            bool dirty = false;
            for (std::size_t r = k + 1; r < rows_; ++r) {
                if (w_.at(r, k).is_zero()) continue;
                DivRem d = divrem(w_.at(r, k), w_.at(k, k));
                row_op(r, k, d.quotient);
                if (!d.remainder.is_zero()) dirty = true;
            }
            for (std::size_t c = k + 1; c < cols_; ++c) {
                if (w_.at(k, c).is_zero()) continue;
                DivRem d = divrem(w_.at(k, c), w_.at(k, k));
                col_op(c, k, d.quotient);
                if (!d.remainder.is_zero()) dirty = true;
            }
            if (dirty) continue;  // smaller-degree remainders become the next pivot

            // Row and column are clear. A non-unit pivot must also divide the
            // remaining submatrix; fold in an offending row and keep reducing.
            if (w_.at(k, k).degree() > Degree(0)) {
                std::optional<std::size_t> fold;
                for (std::size_t r = k + 1; r < rows_ && !fold; ++r)
                    for (std::size_t c = k + 1; c < cols_; ++c) {
                        if (!divides(w_.at(k, k), w_.at(r, c))) {
                            fold = r;
                            break;
                        }
                    }
                if (fold) {
                    row_op(k, *fold, minus_one);  // row_k += row_fold
                    continue;
                }
            }
            ++k;
        }
    }

    void enforce_chain() {
        const Polynomial minus_one = -Polynomial::one(w_.spec());
        const std::size_t d = std::min(rows_, cols_);
        for (;;) {
            std::optional<std::size_t> bad;
            for (std::size_t i = 0; i + 1 < d; ++i) {
                const Polynomial& a = w_.at(i, i);
                const Polynomial& b = w_.at(i + 1, i + 1);
                if (b.is_zero()) continue;
                if (a.is_zero() || !divides(a, b)) {
                    bad = i;
                    break;
                }
            }
            if (!bad) return;
            row_op(*bad, *bad + 1, minus_one);
            diagonalize(*bad);
        }
    }

    void normalize_monic() {
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
            const Polynomial& d = w_.at(i, i);
            if (!d.is_zero() && !d.is_monic()) scale_row(i, d.leading().inverse());
        }
    }

    PolyMatrix w_, g1_, g2_;
    std::size_t rows_, cols_;
};

}  // namespace

SnfResult snf(const PolyMatrix& m) { return SmithReducer(m).run(); }

}  // namespace centra
