#ifndef CENTRA_ERROR_HPP
#define CENTRA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace centra {

// Reason codes for everything the library can reject. Kept in one enum so
// callers (and tests) can discriminate failures without string matching.
enum class errc {
    non_prime_modulus,
    zero_inversion,
    spec_mismatch,
    division_by_zero_poly,
    both_zero_polynomials,
    zero_polynomial_argument,
    non_square,
    not_monic,
    degree_zero,
    singular_matrix,
    singular_input,
    non_divisible,
    dimension_mismatch,
    size_mismatch,
    shape_mismatch,
    index_out_of_range,
    internal_inconsistency,
    unsupported_field,
    parse_error,
};

const char* errc_name(errc code) noexcept;

class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

}  // namespace centra

#endif
