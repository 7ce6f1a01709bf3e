#include "centra/io.hpp"

#include <sstream>

namespace centra {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

Integer integer_from(std::string_view s) { return Integer(std::string(s)); }

[[noreturn]] void fail_at(std::size_t line, const std::string& what) {
    throw error(errc::parse_error, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> tokens_of(std::string_view line) {
    std::istringstream in{std::string(line)};
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

const Matrix* InputDocument::find(std::string_view name) const {
    for (const auto& [n, m] : matrices)
        if (n == name) return &m;
    return nullptr;
}

Scalar scalar_from_string(std::string_view text, const FieldSpec& spec) {
    if (spec.is_prime_field()) {
        if (!is_integer_literal(text))
            throw error(errc::parse_error,
                        "'" + std::string(text) + "' is not an integer literal");
        return Scalar::from_integer(integer_from(text), spec);
    }
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_literal(text))
            throw error(errc::parse_error,
                        "'" + std::string(text) + "' is not a rational literal");
        return Scalar::from_integer(integer_from(text), spec);
    }
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den))
        throw error(errc::parse_error, "'" + std::string(text) + "' is not a rational literal");
    return Scalar::from_fraction(integer_from(num), integer_from(den), spec);
}

InputDocument parse_input(std::string_view text) {
    // split into lines, keeping 1-based numbering; strip comments
    std::vector<std::pair<std::size_t, std::vector<std::string>>> lines;
    {
        std::size_t lineno = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t nl = text.find('\n', pos);
            std::string_view raw =
                text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
            ++lineno;
            const std::size_t hash = raw.find('#');
            if (hash != std::string_view::npos) raw = raw.substr(0, hash);
            auto toks = tokens_of(raw);
            if (!toks.empty()) lines.emplace_back(lineno, std::move(toks));
            if (nl == std::string_view::npos) break;
            pos = nl + 1;
        }
    }

    std::size_t cursor = 0;
    if (cursor == lines.size()) throw error(errc::parse_error, "empty input: expected a field line");

    const auto& [field_line, field_toks] = lines[cursor];
    if (field_toks[0] != "field" || field_toks.size() != 2)
        fail_at(field_line, "expected 'field <p>' or 'field Q'");
    FieldSpec spec = field_from_string(field_toks[1]);
    ++cursor;

    InputDocument doc{spec, {}};
    while (cursor < lines.size()) {
        const auto& [header_line, header] = lines[cursor];
        if (header[0] != "matrix")
            fail_at(header_line, "expected 'matrix <name> <rows> <cols>', got '" + header[0] + "'");
        if (header.size() != 4) fail_at(header_line, "matrix header needs name, rows, cols");
        const std::string& name = header[1];
        if (doc.find(name)) fail_at(header_line, "duplicate matrix name '" + name + "'");

        unsigned long rows = 0, cols = 0;
        try {
            rows = std::stoul(header[2]);
            cols = std::stoul(header[3]);
        } catch (const std::exception&) {
            fail_at(header_line, "matrix dimensions must be decimal integers");
        }
        if (rows == 0 || cols == 0) fail_at(header_line, "matrix dimensions must be positive");
        ++cursor;

        Matrix m(spec, rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            if (cursor == lines.size())
                throw error(errc::dimension_mismatch,
                            "matrix '" + name + "' ends after " + std::to_string(r) + " of " +
                                std::to_string(rows) + " rows");
            const auto& [row_line, row_toks] = lines[cursor];
            if (row_toks.size() != cols)
                throw error(errc::dimension_mismatch,
                            "line " + std::to_string(row_line) + ": row has " +
                                std::to_string(row_toks.size()) + " entries, expected " +
                                std::to_string(cols));
            for (std::size_t c = 0; c < cols; ++c) {
                try {
                    m.at(r, c) = scalar_from_string(row_toks[c], spec);
                } catch (const error& e) {
                    if (e.code() == errc::parse_error) fail_at(row_line, e.what());
                    throw;
                }
            }
            ++cursor;
        }
        doc.matrices.emplace_back(name, std::move(m));
    }
    if (doc.matrices.empty())
        throw error(errc::parse_error, "input declares no matrices");
    return doc;
}

std::string field_to_string(const FieldSpec& spec) {
    return spec.is_prime_field() ? std::to_string(spec.modulus()) : "Q";
}

FieldSpec field_from_string(std::string_view text) {
    if (text == "Q") return FieldSpec::rationals();
    if (!is_integer_literal(text) || text.front() == '-' || text.front() == '+')
        throw error(errc::parse_error,
                    "field must be 'Q' or a prime modulus, got '" + std::string(text) + "'");
    const Integer p = integer_from(text);
    if (p > Integer(0xFFFFFFFFull))
        throw error(errc::non_prime_modulus, "modulus '" + std::string(text) + "' is too large");
    return FieldSpec::prime(p.convert_to<std::uint64_t>());
}

std::string matrix_to_text(const Matrix& m, std::string_view name) {
    std::ostringstream out;
    out << "matrix " << name << ' ' << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m.at(i, j).to_string();
        }
        out << '\n';
    }
    return out.str();
}

std::string poly_matrix_to_text(const PolyMatrix& m, std::string_view name) {
    std::ostringstream out;
    out << "polymatrix " << name << ' ' << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m.at(i, j).to_pretty_string();
        }
        out << '\n';
    }
    return out.str();
}

nlohmann::ordered_json poly_to_json(const Polynomial& p) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Scalar& c : p.coeffs()) arr.push_back(c.to_string());
    return arr;
}

Polynomial poly_from_json(const nlohmann::json& j, const FieldSpec& spec) {
    if (!j.is_array()) throw error(errc::parse_error, "polynomial JSON must be an array");
    std::vector<Scalar> cs;
    for (const auto& e : j) cs.push_back(scalar_from_string(e.get<std::string>(), spec));
    return Polynomial::from_coeffs(spec, std::move(cs));
}

nlohmann::ordered_json matrix_to_json(const Matrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const nlohmann::json& j, const FieldSpec& spec) {
    if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
        throw error(errc::parse_error, "matrix JSON must be a nonempty array of rows");
    Matrix m(spec, j.size(), j[0].size());
    for (std::size_t r = 0; r < j.size(); ++r) {
        if (j[r].size() != m.cols())
            throw error(errc::dimension_mismatch, "matrix JSON rows have differing lengths");
        for (std::size_t c = 0; c < m.cols(); ++c)
            m.at(r, c) = scalar_from_string(j[r][c].get<std::string>(), spec);
    }
    return m;
}

nlohmann::ordered_json poly_matrix_to_json(const PolyMatrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(poly_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

PolyMatrix poly_matrix_from_json(const nlohmann::json& j, const FieldSpec& spec) {
    if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
        throw error(errc::parse_error, "polynomial matrix JSON must be a nonempty array of rows");
    PolyMatrix m(spec, j.size(), j[0].size());
    for (std::size_t r = 0; r < j.size(); ++r) {
        if (j[r].size() != m.cols())
            throw error(errc::dimension_mismatch,
                        "polynomial matrix JSON rows have differing lengths");
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = poly_from_json(j[r][c], spec);
    }
    return m;
}

}  // namespace centra
