#ifndef CENTRA_POLY_HPP
#define CENTRA_POLY_HPP

#include <initializer_list>
#include <limits>
#include <string>
#include <vector>

#include "centra/field.hpp"

namespace centra {

// Degree of a univariate polynomial. The zero polynomial has a dedicated
// minus-infinity value that compares below every finite degree, so pivot
// selection on degrees cannot be spoofed by an integer sentinel.
class Degree {
public:
    static constexpr Degree neg_infinity() noexcept { return Degree(); }
    explicit constexpr Degree(int v) : raw_(v) {}

    constexpr bool finite() const noexcept { return raw_ != kNegInf; }
    int value() const {
        if (!finite()) throw error(errc::degree_zero, "degree of the zero polynomial is -inf");
        return raw_;
    }

    friend constexpr bool operator==(Degree a, Degree b) noexcept { return a.raw_ == b.raw_; }
    friend constexpr bool operator!=(Degree a, Degree b) noexcept { return a.raw_ != b.raw_; }
    friend constexpr bool operator<(Degree a, Degree b) noexcept { return a.raw_ < b.raw_; }
    friend constexpr bool operator<=(Degree a, Degree b) noexcept { return a.raw_ <= b.raw_; }
    friend constexpr bool operator>(Degree a, Degree b) noexcept { return a.raw_ > b.raw_; }
    friend constexpr bool operator>=(Degree a, Degree b) noexcept { return a.raw_ >= b.raw_; }

private:
    static constexpr int kNegInf = std::numeric_limits<int>::min();
    constexpr Degree() : raw_(kNegInf) {}
    int raw_;
};

// Dense univariate polynomial over an exact field, ascending coefficients,
// no trailing zeros (the zero polynomial has an empty coefficient vector).
class Polynomial {
public:
    explicit Polynomial(const FieldSpec& spec) : spec_(spec) {}

    static Polynomial zero(const FieldSpec& spec) { return Polynomial(spec); }
    static Polynomial one(const FieldSpec& spec) { return constant(Scalar::one(spec)); }
    static Polynomial constant(const Scalar& c);
    // x^k with unit coefficient
    static Polynomial monomial(const FieldSpec& spec, std::size_t k);
    static Polynomial from_coeffs(const FieldSpec& spec, std::vector<Scalar> coeffs);
    // test/fixture convenience: integer coefficients embedded via from_integer
    static Polynomial of(const FieldSpec& spec, std::initializer_list<long long> ascending);

    const FieldSpec& spec() const noexcept { return spec_; }
    const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    Degree degree() const noexcept {
        return coeffs_.empty() ? Degree::neg_infinity()
                               : Degree(static_cast<int>(coeffs_.size()) - 1);
    }
    // coefficient of x^i, zero beyond the stored range
    Scalar coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Scalar::zero(spec_);
    }
    const Scalar& leading() const;
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }

    Polynomial monic() const;      // unit-scale to leading coefficient 1; zero stays zero
    Polynomial scaled(const Scalar& s) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept;
    friend bool operator!=(const Polynomial& a, const Polynomial& b) noexcept { return !(a == b); }

    // compact human-readable form, e.g. "x^3+2*x+1"; used for text output only
    std::string to_pretty_string() const;

private:
    void trim();
    static void require_same_spec(const Polynomial& a, const Polynomial& b);

    FieldSpec spec_;
    std::vector<Scalar> coeffs_;
};

struct DivRem {
    Polynomial quotient;
    Polynomial remainder;
};

// Euclidean division: a = q*b + r with deg r < deg b. Throws
// division_by_zero_poly when b = 0.
DivRem divrem(const Polynomial& a, const Polynomial& b);

// Monic gcd; gcd(a, 0) = monic(a). Throws both_zero_polynomials when a = b = 0.
Polynomial gcd_monic(const Polynomial& a, const Polynomial& b);

// Monic lcm = monic(a*b / gcd). Throws zero_polynomial_argument when a or b = 0.
Polynomial lcm_monic(const Polynomial& a, const Polynomial& b);

// True iff divisor divides a with zero remainder (convention: anything divides 0).
bool divides(const Polynomial& divisor, const Polynomial& a);

}  // namespace centra

#endif
