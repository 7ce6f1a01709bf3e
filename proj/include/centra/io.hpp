#ifndef CENTRA_IO_HPP
#define CENTRA_IO_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "centra/poly_matrix.hpp"

namespace centra {

// A parsed input file: one field declaration and a set of named matrices
// over that field, in declaration order.
struct InputDocument {
    FieldSpec field;
    std::vector<std::pair<std::string, Matrix>> matrices;

    const Matrix* find(std::string_view name) const;
};

// Grammar: optional '#'-comments and blank lines anywhere; first a line
// `field <p>` or `field Q`; then blocks `matrix <name> <rows> <cols>`
// followed by <rows> lines of <cols> whitespace-separated scalars.
// Throws parse_error (with line number), non_prime_modulus, or
// dimension_mismatch.
InputDocument parse_input(std::string_view text);

// Scalar literals: decimal integer over Z/p; `a` or `a/b` over Q.
Scalar scalar_from_string(std::string_view text, const FieldSpec& spec);

// Text rendering in the same block format the parser accepts.
std::string matrix_to_text(const Matrix& m, std::string_view name);
std::string poly_matrix_to_text(const PolyMatrix& m, std::string_view name);

std::string field_to_string(const FieldSpec& spec);
FieldSpec field_from_string(std::string_view text);

// JSON forms: scalars as strings ("3", "-2/5"), polynomials as ascending
// coefficient arrays, matrices as arrays of row arrays.
nlohmann::ordered_json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const nlohmann::json& j, const FieldSpec& spec);
nlohmann::ordered_json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, const FieldSpec& spec);
nlohmann::ordered_json poly_matrix_to_json(const PolyMatrix& m);
PolyMatrix poly_matrix_from_json(const nlohmann::json& j, const FieldSpec& spec);

}  // namespace centra

#endif
