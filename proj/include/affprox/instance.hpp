#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "affprox/approx.hpp"
#include "affprox/errors.hpp"
#include "affprox/geometry.hpp"
#include "affprox/rational.hpp"

namespace affprox {

using ordered_json = nlohmann::ordered_json;

/// One problem instance as read from a file. An absent D_vertices block means
/// D is the image of C under the map, which makes surjectivity automatic.
struct Instance {
    std::size_t dim_c = 0;
    std::size_t dim_d = 0;
    Polytope domain;
    AffineMap map;
    std::optional<Polytope> codomain;
    AffineFunctional functional;

    Polytope effective_codomain() const {
        return codomain ? *codomain : image_polytope(map, domain);
    }

    bool operator==(const Instance&) const = default;
};

namespace detail {

inline const ordered_json& json_field(const ordered_json& obj, const char* name,
                                      const std::string& path) {
    if (!obj.is_object()) {
        throw ParseError("'" + path + "' must be an object");
    }
    const auto it = obj.find(name);
    if (it == obj.end()) {
        throw ParseError("missing field '" + path + name + "'");
    }
    return *it;
}

inline Rational json_rational(const ordered_json& value, const std::string& path) {
    if (value.is_number_integer()) {
        return Rational(value.get<std::int64_t>());
    }
    if (value.is_string()) {
        try {
            return parse_rational(value.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError("field '" + path + "': " + e.what());
        }
    }
    throw ParseError("field '" + path + "' must be a rational string or an integer");
}

inline std::size_t json_positive_size(const ordered_json& value, const std::string& path) {
    if (!value.is_number_integer() || value.is_number_float()) {
        throw ParseError("field '" + path + "' must be an integer");
    }
    const std::int64_t v = value.get<std::int64_t>();
    if (v < 1) {
        throw ValidationError("field '" + path + "' must be positive");
    }
    return static_cast<std::size_t>(v);
}

inline std::vector<Rational> json_vector(const ordered_json& value, const std::string& path,
                                         std::size_t expected_dim) {
    if (!value.is_array()) {
        throw ParseError("field '" + path + "' must be an array");
    }
    std::vector<Rational> out;
    out.reserve(value.size());
    for (std::size_t i = 0; i < value.size(); ++i) {
        out.push_back(json_rational(value[i], path + "[" + std::to_string(i) + "]"));
    }
    if (out.size() != expected_dim) {
        throw ValidationError("field '" + path + "' must have length " +
                              std::to_string(expected_dim));
    }
    return out;
}

inline std::vector<Point> json_points(const ordered_json& value, const std::string& path,
                                      std::size_t expected_dim) {
    if (!value.is_array()) {
        throw ParseError("field '" + path + "' must be an array");
    }
    if (value.empty()) {
        throw ValidationError("field '" + path + "' must not be empty");
    }
    std::vector<Point> out;
    out.reserve(value.size());
    for (std::size_t i = 0; i < value.size(); ++i) {
        out.push_back(Point(
            json_vector(value[i], path + "[" + std::to_string(i) + "]", expected_dim)));
    }
    return out;
}

inline ordered_json json_of_vector(const std::vector<Rational>& values) {
    ordered_json arr = ordered_json::array();
    for (const Rational& v : values) arr.push_back(format_rational(v));
    return arr;
}

inline ordered_json json_of_point(const Point& p) { return json_of_vector(p.coords); }

inline ordered_json json_of_points(const std::vector<Point>& points) {
    ordered_json arr = ordered_json::array();
    for (const Point& p : points) arr.push_back(json_of_point(p));
    return arr;
}

}  // namespace detail

/// Parses and fully validates an instance: dimensions, shapes, and (when
/// D_vertices is present) surjectivity of the map onto D. Malformed text or
/// tokens raise ParseError; structurally sound but invalid data raises
/// ValidationError.
inline Instance parse_instance(const std::string& text) {
    ordered_json root;
    try {
        root = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) {
        throw ParseError("instance must be a JSON object");
    }

    Instance inst;
    inst.dim_c = detail::json_positive_size(detail::json_field(root, "dim_C", ""), "dim_C");
    inst.dim_d = detail::json_positive_size(detail::json_field(root, "dim_D", ""), "dim_D");

    inst.domain = Polytope(
        inst.dim_c,
        detail::json_points(detail::json_field(root, "C_vertices", ""), "C_vertices",
                            inst.dim_c));

    const ordered_json& map_obj = detail::json_field(root, "map", "");
    std::vector<std::vector<Rational>> matrix;
    {
        const ordered_json& rows = detail::json_field(map_obj, "matrix", "map.");
        if (!rows.is_array()) throw ParseError("field 'map.matrix' must be an array");
        if (rows.size() != inst.dim_d) {
            throw ValidationError("field 'map.matrix' must have dim_D rows");
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            matrix.push_back(detail::json_vector(
                rows[r], "map.matrix[" + std::to_string(r) + "]", inst.dim_c));
        }
    }
    Point offset(detail::json_vector(detail::json_field(map_obj, "offset", "map."),
                                     "map.offset", inst.dim_d));
    inst.map = AffineMap(std::move(matrix), std::move(offset));

    if (root.contains("D_vertices")) {
        inst.codomain = Polytope(
            inst.dim_d,
            detail::json_points(root["D_vertices"], "D_vertices", inst.dim_d));
    }

    const ordered_json& f_obj = detail::json_field(root, "f", "");
    inst.functional = AffineFunctional(
        detail::json_vector(detail::json_field(f_obj, "coeffs", "f."), "f.coeffs",
                            inst.dim_c),
        detail::json_rational(detail::json_field(f_obj, "constant", "f."), "f.constant"));

    if (inst.codomain) {
        const SurjectivityResult sur = check_surjective(inst.map, inst.domain, *inst.codomain);
        if (!sur.surjective) {
            std::string side =
                sur.failure == SurjectivityResult::Failure::codomain_generator_outside_image
                    ? "D_vertices"
                    : "the image of C";
            std::string detail_msg =
                sur.failure == SurjectivityResult::Failure::codomain_generator_outside_image
                    ? "lies outside the image of C"
                    : "lies outside D";
            std::string coords;
            for (std::size_t i = 0; i < sur.witness->coords.size(); ++i) {
                coords += (i == 0 ? "" : ", ") + format_rational(sur.witness->coords[i]);
            }
            throw ValidationError("non-surjective map: generator " +
                                  std::to_string(sur.witness_index) + " of " + side +
                                  " (" + coords + ") " + detail_msg);
        }
    }
    return inst;
}

/// Canonical serialization: fixed field order, every scalar written as an
/// exact rational string. parse . serialize is the identity, and
/// serialize . parse is byte-stable after one normalization pass.
inline std::string serialize_instance(const Instance& inst) {
    ordered_json root;
    root["dim_C"] = inst.dim_c;
    root["dim_D"] = inst.dim_d;
    root["C_vertices"] = detail::json_of_points(inst.domain.generators);
    ordered_json map_obj;
    ordered_json rows = ordered_json::array();
    for (const auto& row : inst.map.matrix) rows.push_back(detail::json_of_vector(row));
    map_obj["matrix"] = std::move(rows);
    map_obj["offset"] = detail::json_of_point(inst.map.offset);
    root["map"] = std::move(map_obj);
    if (inst.codomain) {
        root["D_vertices"] = detail::json_of_points(inst.codomain->generators);
    }
    ordered_json f_obj;
    f_obj["coeffs"] = detail::json_of_vector(inst.functional.coeffs);
    f_obj["constant"] = format_rational(inst.functional.constant);
    root["f"] = std::move(f_obj);
    return root.dump(2) + "\n";
}

/// Exit code the command-line tool maps an error condition to:
/// 2 invalid or non-surjective instance, 3 parse error, 4 internal
/// verification failure (success is 0).
inline int cli_exit_code(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e) != nullptr) return 3;
    if (dynamic_cast<const ValidationError*>(&e) != nullptr) return 2;
    return 4;
}

/// Solution report for the solve subcommand; mathematical payload is exact,
/// timing is metadata.
struct SolutionReport {
    BestApproximation approximation;
    std::int64_t elapsed_us = 0;
};

inline std::string serialize_report(const SolutionReport& report) {
    const BestApproximation& r = report.approximation;
    ordered_json root;
    root["status"] = "ok";
    root["d"] = format_rational(r.d);
    root["c"] = format_rational(r.c);
    ordered_json h0;
    h0["coeffs"] = detail::json_of_vector(r.h0.coeffs);
    h0["constant"] = format_rational(r.h0.constant);
    root["h0"] = std::move(h0);
    ordered_json witness;
    witness["x"] = detail::json_of_point(r.gap_witness.x);
    witness["x_prime"] = detail::json_of_point(r.gap_witness.x_prime);
    witness["y"] = detail::json_of_point(r.gap_witness.y);
    root["gap_witness"] = std::move(witness);
    ordered_json residuals = ordered_json::array();
    for (const GeneratorResidual& res : r.residuals) {
        ordered_json entry;
        entry["generator"] = detail::json_of_point(res.generator);
        entry["residual"] = format_rational(res.residual);
        residuals.push_back(std::move(entry));
    }
    root["residuals"] = std::move(residuals);
    root["timing"] = ordered_json{{"elapsed_us", report.elapsed_us}};
    return root.dump(2) + "\n";
}

}  // namespace affprox
