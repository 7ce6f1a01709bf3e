#include "centra/oracle.hpp"

namespace centra {
namespace oracle {

namespace {

// Column of the commutator system for unit matrix E_ab: vectorize(E_ab A - A E_ab).
// Filled directly: row a picks up row b of A, column b subtracts column a of A.
std::vector<Scalar> commutator_column(const Matrix& a, std::size_t ra, std::size_t cb) {
    const std::size_t n = a.rows();
    Matrix d = Matrix::zeros(a.spec(), n, n);
    for (std::size_t c = 0; c < n; ++c) d.at(ra, c) += a.at(cb, c);
    for (std::size_t r = 0; r < n; ++r) d.at(r, cb) -= a.at(r, ra);
    return vectorize(d);
}

Matrix stack_rows(const std::vector<std::vector<Scalar>>& rows, const FieldSpec& spec) {
    Matrix m(spec, rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

std::size_t span_rank(const std::vector<std::vector<Scalar>>& rows, const FieldSpec& spec) {
    if (rows.empty()) return 0;
    return rref_kernel(stack_rows(rows, spec)).rank();
}

void require_same_shape(const std::vector<Matrix>& basis, const Matrix& first) {
    for (const Matrix& m : basis) {
        if (m.spec() != first.spec() || m.rows() != first.rows() || m.cols() != first.cols())
            throw error(errc::shape_mismatch, "span members have differing shapes or fields");
    }
}

}  // namespace

std::vector<Matrix> commutant_kernel_basis(const Matrix& a) {
    if (!a.is_square()) throw error(errc::non_square, "commutant needs a square matrix");
    const std::size_t n = a.rows();
    const FieldSpec& spec = a.spec();

    // n^2 x n^2 system; column (a,b) is the commutator of E_ab with A.
    Matrix system(spec, n * n, n * n);
    for (std::size_t ra = 0; ra < n; ++ra)
        for (std::size_t cb = 0; cb < n; ++cb) {
            const std::vector<Scalar> col = commutator_column(a, ra, cb);
            for (std::size_t r = 0; r < n * n; ++r) system.at(r, ra * n + cb) = col[r];
        }

    std::vector<Matrix> basis;
    for (const std::vector<Scalar>& v : rref_kernel(system).kernel)
        basis.push_back(devectorize(spec, v, n, n));
    return basis;
}

Polynomial det_laplace(const PolyMatrix& m) {
    if (!m.is_square()) throw error(errc::non_square, "determinant needs a square matrix");
    const std::size_t n = m.rows();
    if (n == 1) return m.at(0, 0);
    Polynomial out = Polynomial::zero(m.spec());
    for (std::size_t i = 0; i < n; ++i) {
        if (m.at(i, 0).is_zero()) continue;
        PolyMatrix sub(m.spec(), n - 1, n - 1);
        for (std::size_t r = 0, sr = 0; r < n; ++r) {
            if (r == i) continue;
            for (std::size_t c = 1; c < n; ++c) sub.at(sr, c - 1) = m.at(r, c);
            ++sr;
        }
        Polynomial term = m.at(i, 0) * det_laplace(sub);
        out = (i % 2 == 0) ? out + term : out - term;
    }
    return out;
}

std::vector<Polynomial> minor_gcd_invariants(const PolyMatrix& m) {
    if (!m.is_square()) throw error(errc::non_square, "minor invariants need a square matrix");
    const std::size_t n = m.rows();
    const FieldSpec& spec = m.spec();
    if (det_laplace(m).is_zero())
        throw error(errc::singular_input, "minor invariants need a nonsingular matrix");

    // all k-subsets of 0..n-1 in lexicographic order
    auto subsets = [n](std::size_t k) {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> cur(k);
        for (std::size_t i = 0; i < k; ++i) cur[i] = i;
        for (;;) {
            out.push_back(cur);
            std::size_t i = k;
            while (i-- > 0) {
                if (cur[i] + (k - i) < n) break;
                if (i == 0) return out;
            }
            ++cur[i];
            for (std::size_t j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
        }
    };

    std::vector<Polynomial> diag;
    Polynomial prev_delta = Polynomial::one(spec);
    for (std::size_t k = 1; k <= n; ++k) {
        Polynomial delta = Polynomial::zero(spec);
        for (const auto& rset : subsets(k)) {
            for (const auto& cset : subsets(k)) {
                PolyMatrix sub(spec, k, k);
                for (std::size_t r = 0; r < k; ++r)
                    for (std::size_t c = 0; c < k; ++c) sub.at(r, c) = m.at(rset[r], cset[c]);
                const Polynomial minor = det_laplace(sub);
                if (minor.is_zero()) continue;
                delta = delta.is_zero() ? minor.monic() : gcd_monic(delta, minor);
                if (delta.is_one()) break;
            }
            if (delta.is_one()) break;
        }
        if (delta.is_zero())
            throw error(errc::singular_input, "vanishing determinantal divisor");
        DivRem d = divrem(delta, prev_delta);
        if (!d.remainder.is_zero())
            throw error(errc::internal_inconsistency,
                        "determinantal divisors violate divisibility");
        diag.push_back(d.quotient.monic());
        prev_delta = delta;
    }
    return diag;
}

bool span_equal(const std::vector<Matrix>& basis1, const std::vector<Matrix>& basis2) {
    if (basis1.empty() && basis2.empty()) return true;
    const Matrix& first = basis1.empty() ? basis2.front() : basis1.front();
    require_same_shape(basis1, first);
    require_same_shape(basis2, first);

    std::vector<std::vector<Scalar>> rows1, rows2, joint;
    for (const Matrix& m : basis1) rows1.push_back(vectorize(m));
    for (const Matrix& m : basis2) rows2.push_back(vectorize(m));
    joint = rows1;
    joint.insert(joint.end(), rows2.begin(), rows2.end());

    const FieldSpec& spec = first.spec();
    const std::size_t r1 = span_rank(rows1, spec);
    const std::size_t r2 = span_rank(rows2, spec);
    return r1 == r2 && r1 == span_rank(joint, spec);
}

bool span_contains(const std::vector<Matrix>& basis, const Matrix& m) {
    if (basis.empty()) return m.is_zero();
    require_same_shape(basis, m);
    std::vector<std::vector<Scalar>> rows;
    for (const Matrix& b : basis) rows.push_back(vectorize(b));
    const std::size_t r = span_rank(rows, m.spec());
    rows.push_back(vectorize(m));
    return span_rank(rows, m.spec()) == r;
}

}  // namespace oracle
}  // namespace centra
