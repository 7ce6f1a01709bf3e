#include "centra/centralizer.hpp"

namespace centra {

namespace {

void require_valid_indices(std::size_t i, std::size_t j, std::size_t m) {
    if (i < 1 || j < 1 || i > m || j > m)
        throw error(errc::index_out_of_range, "factor index outside 1..m");
}

std::size_t factor_degree(const Polynomial& f) {
    if (f.degree() < Degree(1))
        throw error(errc::non_divisible, "invariant factors must be nonconstant");
    return static_cast<std::size_t>(f.degree().value());
}

}  // namespace

Polynomial generating_polynomial(std::size_t i, std::size_t j,
                                 const std::vector<Polynomial>& factors) {
    require_valid_indices(i, j, factors.size());
    const FieldSpec& spec = factors.front().spec();
    if (i <= j) return Polynomial::one(spec);
    DivRem d = divrem(factors[i - 1], factors[j - 1]);
    if (!d.remainder.is_zero())
        throw error(errc::non_divisible, "f_j does not divide f_i; factor chain is corrupted");
    return d.quotient;
}

std::vector<Scalar> generating_vector(std::size_t i, std::size_t j,
                                      const std::vector<Polynomial>& factors) {
    const Polynomial q = generating_polynomial(i, j, factors);
    const std::size_t ni = factor_degree(factors[i - 1]);
    std::vector<Scalar> v;
    v.reserve(ni);
    for (std::size_t t = 0; t < ni; ++t) v.push_back(q.coeff(t));
    return v;
}

Matrix generating_matrix(std::size_t i, std::size_t j, const std::vector<Polynomial>& factors) {
    const std::size_t nj = factor_degree(factors[j - 1]);
    const Matrix ci = companion(factors[i - 1]);
    std::vector<std::vector<Scalar>> cols;
    cols.reserve(nj);
    std::vector<Scalar> v = generating_vector(i, j, factors);
    for (std::size_t t = 0; t < nj; ++t) {
        cols.push_back(v);
        if (t + 1 < nj) v = mat_vec(ci, v);
    }
    return Matrix::from_columns(factors.front().spec(), cols);
}

CentralizerBasis rcf_centralizer_basis(const std::vector<Polynomial>& factors) {
    if (factors.empty())
        throw error(errc::zero_polynomial_argument, "factor chain must be nonempty");
    const FieldSpec& spec = factors.front().spec();
    const std::size_t m = factors.size();

    std::vector<std::size_t> degs, offsets;
    degs.reserve(m);
    offsets.reserve(m);
    std::size_t n = 0;
    for (const Polynomial& f : factors) {
        offsets.push_back(n);
        degs.push_back(factor_degree(f));
        n += degs.back();
    }

    CentralizerBasis basis{spec, n, {}, {}, factors};
    for (std::size_t i = 1; i <= m; ++i) {
        const Matrix ci = companion(factors[i - 1]);
        for (std::size_t j = 1; j <= m; ++j) {
            Matrix block = generating_matrix(i, j, factors);
            const std::size_t count = std::min(degs[i - 1], degs[j - 1]);
            for (std::size_t t = 0; t < count; ++t) {
                Matrix element = Matrix::zeros(spec, n, n);
                for (std::size_t r = 0; r < degs[i - 1]; ++r)
                    for (std::size_t c = 0; c < degs[j - 1]; ++c)
                        element.at(offsets[i - 1] + r, offsets[j - 1] + c) = block.at(r, c);
                basis.elements.push_back(std::move(element));
                basis.provenance.push_back({i, j, t});
                if (t + 1 < count) block = ci * block;
            }
        }
    }
    return basis;
}

CentralizerBasis centralizer_basis(const Matrix& a) {
    RcfResult rcf = rcf_transform(a);
    CentralizerBasis basis = rcf_centralizer_basis(rcf.factors);
    const Matrix p_inv = inverse(rcf.P);
    for (Matrix& e : basis.elements) e = rcf.P * e * p_inv;
    return basis;
}

std::size_t frobenius_dimension(const std::vector<Polynomial>& factors) {
    std::size_t total = 0;
    for (const Polynomial& f : factors)
        for (const Polynomial& g : factors)
            total += std::min(factor_degree(f), factor_degree(g));
    return total;
}

std::size_t frobenius_dimension_closed_form(const std::vector<Polynomial>& factors) {
    const std::size_t m = factors.size();
    std::size_t total = 0;
    for (std::size_t i = 0; i < m; ++i)
        total += (2 * i + 1) * factor_degree(factors[m - 1 - i]);
    return total;
}

}  // namespace centra
