#include "centra/field.hpp"

#include <sstream>

namespace centra {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::non_prime_modulus: return "non_prime_modulus";
        case errc::zero_inversion: return "zero_inversion";
        case errc::spec_mismatch: return "spec_mismatch";
        case errc::division_by_zero_poly: return "division_by_zero_poly";
        case errc::both_zero_polynomials: return "both_zero_polynomials";
        case errc::zero_polynomial_argument: return "zero_polynomial_argument";
        case errc::non_square: return "non_square";
        case errc::not_monic: return "not_monic";
        case errc::degree_zero: return "degree_zero";
        case errc::singular_matrix: return "singular_matrix";
        case errc::singular_input: return "singular_input";
        case errc::non_divisible: return "non_divisible";
        case errc::dimension_mismatch: return "dimension_mismatch";
        case errc::size_mismatch: return "size_mismatch";
        case errc::shape_mismatch: return "shape_mismatch";
        case errc::index_out_of_range: return "index_out_of_range";
        case errc::internal_inconsistency: return "internal_inconsistency";
        case errc::unsupported_field: return "unsupported_field";
        case errc::parse_error: return "parse_error";
    }
    return "unknown_error";
}

namespace {

// Deterministic trial division; moduli are small in this problem domain.
bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
        if (n == d) return true;
        if (n % d == 0) return false;
    }
    for (std::uint64_t d = 11; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on signed 128-bit-free arithmetic; p < 2^32 so i64 is ample
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p > 0xFFFFFFFFull)
        throw error(errc::non_prime_modulus,
                    "modulus " + std::to_string(p) + " exceeds the supported 32-bit range");
    if (!is_prime_u64(p))
        throw error(errc::non_prime_modulus, "modulus " + std::to_string(p) + " is not prime");
    return FieldSpec(Kind::prime_field, p);
}

std::string FieldSpec::to_string() const {
    return is_prime_field() ? "Z/" + std::to_string(modulus_) : "Q";
}

Scalar Scalar::from_integer(long long n, const FieldSpec& spec) {
    Scalar s(spec);
    if (spec.is_prime_field()) {
        const auto p = static_cast<std::int64_t>(spec.modulus());
        std::int64_t r = n % p;
        if (r < 0) r += p;
        s.residue_ = static_cast<std::uint64_t>(r);
    } else {
        s.rational_ = n;
    }
    return s;
}

Scalar Scalar::from_integer(const Integer& n, const FieldSpec& spec) {
    Scalar s(spec);
    if (spec.is_prime_field()) {
        Integer r = n % Integer(spec.modulus());
        if (r < 0) r += Integer(spec.modulus());
        s.residue_ = r.convert_to<std::uint64_t>();
    } else {
        s.rational_ = n;
    }
    return s;
}

Scalar Scalar::from_fraction(const Integer& num, const Integer& den, const FieldSpec& spec) {
    if (spec.is_prime_field())
        throw error(errc::unsupported_field, "fractional literals are only valid over Q");
    if (den == 0) throw error(errc::zero_inversion, "fraction with zero denominator");
    Scalar s(spec);
    s.rational_ = Rational(num) / Rational(den);  // normalizes sign and gcd
    return s;
}

void Scalar::require_same_spec(const Scalar& a, const Scalar& b) {
    if (a.spec_ != b.spec_)
        throw error(errc::spec_mismatch,
                    a.spec_.to_string() + " vs " + b.spec_.to_string());
}

bool Scalar::is_zero() const noexcept {
    return spec_.is_prime_field() ? residue_ == 0 : rational_.is_zero();
}

bool Scalar::is_one() const noexcept {
    return spec_.is_prime_field() ? residue_ == 1 : rational_ == 1;
}

Scalar Scalar::operator-() const {
    Scalar s(spec_);
    if (spec_.is_prime_field()) {
        s.residue_ = residue_ == 0 ? 0 : spec_.modulus() - residue_;
    } else {
        s.rational_ = -rational_;
    }
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw error(errc::zero_inversion, "zero has no multiplicative inverse");
    Scalar s(spec_);
    if (spec_.is_prime_field()) {
        s.residue_ = mod_inverse(residue_, spec_.modulus());
    } else {
        s.rational_ = Rational(1) / rational_;
    }
    return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar::require_same_spec(a, b);
    Scalar s(a.spec_);
    if (a.spec_.is_prime_field()) {
        std::uint64_t r = a.residue_ + b.residue_;
        const std::uint64_t p = a.spec_.modulus();
        s.residue_ = r >= p ? r - p : r;
    } else {
        s.rational_ = a.rational_ + b.rational_;
    }
    return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    Scalar::require_same_spec(a, b);
    Scalar s(a.spec_);
    if (a.spec_.is_prime_field()) {
        const std::uint64_t p = a.spec_.modulus();
        s.residue_ = a.residue_ >= b.residue_ ? a.residue_ - b.residue_
                                              : a.residue_ + p - b.residue_;
    } else {
        s.rational_ = a.rational_ - b.rational_;
    }
    return s;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar::require_same_spec(a, b);
    Scalar s(a.spec_);
    if (a.spec_.is_prime_field()) {
        s.residue_ = (a.residue_ * b.residue_) % a.spec_.modulus();  // p < 2^32: no overflow
    } else {
        s.rational_ = a.rational_ * b.rational_;
    }
    return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) noexcept {
    if (a.spec_ != b.spec_) return false;
    return a.spec_.is_prime_field() ? a.residue_ == b.residue_ : a.rational_ == b.rational_;
}

std::string Scalar::to_string() const {
    if (spec_.is_prime_field()) return std::to_string(residue_);
    std::ostringstream out;
    out << numerator(rational_);
    if (denominator(rational_) != 1) out << '/' << denominator(rational_);
    return out.str();
}

std::uint64_t Scalar::residue() const {
    if (!spec_.is_prime_field())
        throw error(errc::unsupported_field, "residue() requires a prime field scalar");
    return residue_;
}

const Rational& Scalar::rational() const {
    if (spec_.is_prime_field())
        throw error(errc::unsupported_field, "rational() requires a scalar over Q");
    return rational_;
}

}  // namespace centra
