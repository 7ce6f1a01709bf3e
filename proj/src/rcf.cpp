#include "centra/rcf.hpp"

namespace centra {

std::vector<Scalar> apply_phi(const std::vector<Polynomial>& v, const Matrix& a) {
    if (!a.is_square()) throw error(errc::non_square, "apply_phi needs a square matrix");
    const std::size_t n = a.rows();
    if (v.size() != n)
        throw error(errc::dimension_mismatch, "polynomial column length differs from dim A");
    const FieldSpec& spec = a.spec();

    int deg = -1;
    for (const Polynomial& e : v) {
        if (e.spec() != spec) throw error(errc::spec_mismatch, "column entry over a different field");
        if (!e.is_zero()) deg = std::max(deg, e.degree().value());
    }
    std::vector<Scalar> acc(n, Scalar::zero(spec));
    if (deg < 0) return acc;

    // Horner on coefficient slices: acc = v_deg; acc = A*acc + v_{d-1}; ...
    for (std::size_t r = 0; r < n; ++r) acc[r] = v[r].coeff(static_cast<std::size_t>(deg));
    for (int d = deg - 1; d >= 0; --d) {
        acc = mat_vec(a, acc);
        for (std::size_t r = 0; r < n; ++r) acc[r] += v[r].coeff(static_cast<std::size_t>(d));
    }
    return acc;
}

namespace {

struct PositionedFactor {
    std::size_t diag_index;
    Polynomial factor;
};

std::vector<PositionedFactor> nonconstant_snf_diag(const Matrix& a, SnfResult* out_snf) {
    SnfResult s = snf(char_matrix(a));
    std::vector<PositionedFactor> factors;
    for (std::size_t i = 0; i < s.diag.size(); ++i) {
        const Polynomial& d = s.diag[i];
        if (d.is_zero())
            throw error(errc::internal_inconsistency,
                        "snf(xI - A) produced a zero diagonal entry");
        if (d.degree() > Degree(0)) factors.push_back({i, d});
    }
    if (out_snf) *out_snf = std::move(s);
    return factors;
}

}  // namespace

std::vector<Polynomial> invariant_factors(const Matrix& a) {
    if (!a.is_square()) throw error(errc::non_square, "invariant_factors needs a square matrix");
    std::vector<Polynomial> out;
    for (auto& pf : nonconstant_snf_diag(a, nullptr)) out.push_back(std::move(pf.factor));
    return out;
}

RcfResult rcf_transform(const Matrix& a) {
    if (!a.is_square()) throw error(errc::non_square, "rcf_transform needs a square matrix");
    const std::size_t n = a.rows();
    const FieldSpec& spec = a.spec();

    SnfResult s{PolyMatrix::identity(spec, 1), {}, PolyMatrix::identity(spec, 1)};
    std::vector<PositionedFactor> positioned = nonconstant_snf_diag(a, &s);
    if (positioned.empty())
        throw error(errc::internal_inconsistency, "no nonconstant invariant factors for n >= 1");

    // P columns: for each factor f at diagonal position i, take y = column i
    // of gamma1 and contribute phi(y), A phi(y), ..., A^{deg f - 1} phi(y).
    std::vector<std::vector<Scalar>> columns;
    columns.reserve(n);
    for (const PositionedFactor& pf : positioned) {
        std::vector<Polynomial> y;
        y.reserve(n);
        for (std::size_t r = 0; r < n; ++r) y.push_back(s.gamma1.at(r, pf.diag_index));
        std::vector<Scalar> col = apply_phi(y, a);
        const int deg = pf.factor.degree().value();
        for (int t = 0; t < deg; ++t) {
            columns.push_back(col);
            if (t + 1 < deg) col = mat_vec(a, col);
        }
    }
    if (columns.size() != n)
        throw error(errc::internal_inconsistency, "factor degrees do not sum to dim A");

    RcfResult result{{}, Matrix::from_columns(spec, columns), Matrix::identity(spec, 1)};
    for (const PositionedFactor& pf : positioned) result.factors.push_back(pf.factor);

    Matrix r = companion(result.factors.front());
    for (std::size_t i = 1; i < result.factors.size(); ++i)
        r = direct_sum(r, companion(result.factors[i]));
    result.R = std::move(r);

    auto p_inv = try_inverse(result.P);
    if (!p_inv)
        throw error(errc::internal_inconsistency, "assembled transformation matrix is singular");
    if (*p_inv * a * result.P != result.R)
        throw error(errc::internal_inconsistency, "P^-1 A P does not equal the canonical form");
    return result;
}

}  // namespace centra
