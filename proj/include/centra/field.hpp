#ifndef CENTRA_FIELD_HPP
#define CENTRA_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "centra/error.hpp"

namespace centra {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Descriptor of the coefficient field: Z/p for a prime p, or Q.
// Two specs are compatible for arithmetic iff they compare equal.
class FieldSpec {
public:
    enum class Kind { prime_field, rationals };

    // Throws non_prime_modulus if p is composite, < 2, or does not fit
    // the 32-bit working range used by the modular arithmetic kernel.
    static FieldSpec prime(std::uint64_t p);
    static FieldSpec rationals() noexcept { return FieldSpec(Kind::rationals, 0); }

    Kind kind() const noexcept { return kind_; }
    bool is_prime_field() const noexcept { return kind_ == Kind::prime_field; }
    std::uint64_t modulus() const noexcept { return modulus_; }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
        return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
    }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) noexcept { return !(a == b); }

    std::string to_string() const;

private:
    FieldSpec(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

    Kind kind_;
    std::uint64_t modulus_;  // meaningful only for prime_field
};

// An exact field element in canonical form: a residue in [0, p) for Z/p,
// a reduced fraction with positive denominator for Q. Equality is
// representational equality.
class Scalar {
public:
    static Scalar zero(const FieldSpec& spec) { return from_integer(0, spec); }
    static Scalar one(const FieldSpec& spec) { return from_integer(1, spec); }
    static Scalar from_integer(long long n, const FieldSpec& spec);
    static Scalar from_integer(const Integer& n, const FieldSpec& spec);
    // Rationals only; canonicalizes num/den. Throws zero_inversion when den = 0
    // and unsupported_field for prime fields (the text grammar has no fractions there).
    static Scalar from_fraction(const Integer& num, const Integer& den, const FieldSpec& spec);

    const FieldSpec& spec() const noexcept { return spec_; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    Scalar operator-() const;
    Scalar inverse() const;  // throws zero_inversion on 0

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    friend bool operator==(const Scalar& a, const Scalar& b) noexcept;
    friend bool operator!=(const Scalar& a, const Scalar& b) noexcept { return !(a == b); }

    // Canonical text form: decimal residue for Z/p; "a" or "a/b" for Q.
    std::string to_string() const;

    // Prime-field residue in [0, p); only valid for prime_field specs.
    std::uint64_t residue() const;
    // Rational value; only valid for the rationals spec.
    const Rational& rational() const;

private:
    explicit Scalar(const FieldSpec& spec) : spec_(spec) {}

    static void require_same_spec(const Scalar& a, const Scalar& b);

    FieldSpec spec_;
    std::uint64_t residue_ = 0;  // prime_field payload
    Rational rational_;          // rationals payload
};

}  // namespace centra

#endif
