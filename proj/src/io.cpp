#include "ellidh/io.hpp"

#include "ellidh/error.hpp"

namespace ellidh {

Json element_to_json(const Field& f, Elem e) {
    if (f.is_prime_field()) return e;
    return f.coefficients(e);
}

Elem element_from_json(const Field& f, const Json& j) {
    if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
    require(j.is_array() && j.size() == f.degree(), ErrorCode::InvalidConfig,
            "field element must be an integer or an array of " + std::to_string(f.degree()) + " coefficients");
    std::vector<std::uint32_t> coeffs;
    for (const auto& c : j) {
        require(c.is_number_integer(), ErrorCode::InvalidConfig, "coefficient must be an integer");
        coeffs.push_back(static_cast<std::uint32_t>(f.from_int(c.get<std::int64_t>())));
    }
    return f.from_coefficients(coeffs);
}

Json vector_to_json(const Field& f, const Vector& v) {
    Json out = Json::array();
    for (Elem e : v) out.push_back(element_to_json(f, e));
    return out;
}

Vector vector_from_json(const Field& f, const Json& j) {
    require(j.is_array(), ErrorCode::InvalidConfig, "vector must be an array");
    Vector v;
    for (const auto& e : j) v.push_back(element_from_json(f, e));
    return v;
}

Json matrix_to_json(const Field& f, const Matrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(f, m.row_vector(r)));
    return out;
}

Json point_to_json(const Field& f, const CurvePoint& p) {
    if (p.infinity) return "O";
    return Json::array({element_to_json(f, p.x), element_to_json(f, p.y)});
}

CurvePoint point_from_json(const Field& f, const Json& j) {
    if (j.is_string()) {
        require(j.get<std::string>() == "O", ErrorCode::InvalidConfig, "point string must be \"O\"");
        return CurvePoint::at_infinity();
    }
    require(j.is_array() && j.size() == 2, ErrorCode::InvalidConfig, "point must be [x, y] or \"O\"");
    return CurvePoint::affine(element_from_json(f, j[0]), element_from_json(f, j[1]));
}

FieldPtr field_from_json(const Json& j) {
    require(j.is_object() && j.contains("p") && j["p"].is_number_integer() && j["p"].get<std::int64_t>() > 0, ErrorCode::InvalidConfig,
            "field needs a positive integer \"p\"");
    const auto p = j["p"].get<std::uint32_t>();
    std::uint32_t m = 1;
    if (j.contains("m")) {
        require(j["m"].is_number_integer() && j["m"].get<std::int64_t>() > 0, ErrorCode::InvalidConfig, "\"m\" must be a positive integer");
        m = j["m"].get<std::uint32_t>();
    }
    std::optional<std::vector<std::uint32_t>> modulus;
    if (j.contains("modulus") && !j["modulus"].is_null()) {
        require(j["modulus"].is_array(), ErrorCode::InvalidConfig, "\"modulus\" must be a coefficient array");
        modulus = j["modulus"].get<std::vector<std::uint32_t>>();
    }
    return Field::make(p, m, modulus);
}

Json field_to_json(const Field& f) {
    Json out{{"p", f.characteristic()}, {"m", f.degree()}};
    if (!f.is_prime_field()) out["modulus"] = f.spec().modulus;
    return out;
}

}  // namespace ellidh
