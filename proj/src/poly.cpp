#include "centra/poly.hpp"

#include <sstream>

namespace centra {

Polynomial Polynomial::constant(const Scalar& c) {
    Polynomial p(c.spec());
    if (!c.is_zero()) p.coeffs_.push_back(c);
    return p;
}

Polynomial Polynomial::monomial(const FieldSpec& spec, std::size_t k) {
    Polynomial p(spec);
    p.coeffs_.assign(k + 1, Scalar::zero(spec));
    p.coeffs_.back() = Scalar::one(spec);
    return p;
}

Polynomial Polynomial::from_coeffs(const FieldSpec& spec, std::vector<Scalar> coeffs) {
    Polynomial p(spec);
    for (const Scalar& c : coeffs) {
        if (c.spec() != spec) throw error(errc::spec_mismatch, "coefficient spec differs");
    }
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

Polynomial Polynomial::of(const FieldSpec& spec, std::initializer_list<long long> ascending) {
    std::vector<Scalar> cs;
    cs.reserve(ascending.size());
    for (long long v : ascending) cs.push_back(Scalar::from_integer(v, spec));
    return from_coeffs(spec, std::move(cs));
}

const Scalar& Polynomial::leading() const {
    if (coeffs_.empty())
        throw error(errc::zero_polynomial_argument, "zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Polynomial Polynomial::monic() const {
    if (is_zero() || is_monic()) return *this;
    return scaled(leading().inverse());
}

Polynomial Polynomial::scaled(const Scalar& s) const {
    if (s.spec() != spec_) throw error(errc::spec_mismatch, "scalar spec differs");
    Polynomial p(spec_);
    if (s.is_zero()) return p;
    p.coeffs_.reserve(coeffs_.size());
    for (const Scalar& c : coeffs_) p.coeffs_.push_back(c * s);
    p.trim();
    return p;
}

Polynomial Polynomial::operator-() const {
    Polynomial p(spec_);
    p.coeffs_.reserve(coeffs_.size());
    for (const Scalar& c : coeffs_) p.coeffs_.push_back(-c);
    return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial::require_same_spec(a, b);
    Polynomial p(a.spec_);
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    p.coeffs_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) p.coeffs_.push_back(a.coeff(i) + b.coeff(i));
    p.trim();
    return p;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial::require_same_spec(a, b);
    Polynomial p(a.spec_);
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    p.coeffs_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) p.coeffs_.push_back(a.coeff(i) - b.coeff(i));
    p.trim();
    return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial::require_same_spec(a, b);
    Polynomial p(a.spec_);
    if (a.is_zero() || b.is_zero()) return p;
    p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(a.spec_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    p.trim();
    return p;
}

bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
    if (a.spec_ != b.spec_ || a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        if (a.coeffs_[i] != b.coeffs_[i]) return false;
    return true;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Polynomial::require_same_spec(const Polynomial& a, const Polynomial& b) {
    if (a.spec_ != b.spec_)
        throw error(errc::spec_mismatch, a.spec_.to_string() + " vs " + b.spec_.to_string());
}

DivRem divrem(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw error(errc::division_by_zero_poly, "polynomial division by zero");
    const FieldSpec& spec = a.spec();
    if (spec != b.spec())
        throw error(errc::spec_mismatch, "divrem operands over different fields");
    if (a.is_zero() || a.degree() < b.degree()) return {Polynomial::zero(spec), a};

    const Scalar lead_inv = b.leading().inverse();
    std::vector<Scalar> rem(a.coeffs().begin(), a.coeffs().end());
    const std::size_t db = static_cast<std::size_t>(b.degree().value());
    std::vector<Scalar> quot(rem.size() - db, Scalar::zero(spec));

    for (std::size_t top = rem.size(); top-- > db;) {
        if (rem[top].is_zero()) continue;
        const Scalar c = rem[top] * lead_inv;
        quot[top - db] = c;
        for (std::size_t i = 0; i <= db; ++i)
            rem[top - db + i] -= c * b.coeffs()[i];
    }
    rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(db), rem.end());  // zeros by construction
    return {Polynomial::from_coeffs(spec, std::move(quot)),
            Polynomial::from_coeffs(spec, std::move(rem))};
}

Polynomial gcd_monic(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero())
        throw error(errc::both_zero_polynomials, "gcd(0, 0) is undefined");
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = divrem(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Polynomial lcm_monic(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        throw error(errc::zero_polynomial_argument, "lcm requires nonzero arguments");
    const Polynomial g = gcd_monic(a, b);
    return divrem(a * b, g).quotient.monic();
}

bool divides(const Polynomial& divisor, const Polynomial& a) {
    if (a.is_zero()) return true;
    if (divisor.is_zero()) return false;
    return divrem(a, divisor).remainder.is_zero();
}

std::string Polynomial::to_pretty_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Scalar& c = coeffs_[k];
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        std::string term;
        if (k == 0) {
            term = cs;
        } else {
            std::string xpart = k == 1 ? "x" : "x^" + std::to_string(k);
            if (cs == "1") term = xpart;
            else if (cs == "-1") term = "-" + xpart;
            else term = cs + "*" + xpart;
        }
        if (!first && term.front() != '-') out << '+';
        out << term;
        first = false;
    }
    return out.str();
}

}  // namespace centra
