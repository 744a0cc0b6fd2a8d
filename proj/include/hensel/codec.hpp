#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hensel/cylinder.hpp"
#include "hensel/khomology.hpp"
#include "hensel/operators.hpp"

namespace hensel {

using json = nlohmann::json;

/// Malformed or schema-violating JSON. The message names the offending field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// s-adic digits: integer array, least significant digit first.
json to_json(const SAdic& x);
SAdic sadic_from_json(const json& j, int s);

// {"s", "level", "domain": "full"|"units", "ring": "int"|"rat"|"cfloat", "values": [strings]}
json to_json(const IntCylinder& f);
json to_json(const RatCylinder& f);
json to_json(const ComplexCylinder& f);
json to_json(const AnyCylinder& f);
AnyCylinder cylinder_from_json(const json& j);
/// Accepts "int" only, or "rat" when every value is an integer.
IntCylinder int_cylinder_from_json(const json& j);
/// Accepts "int" or "rat".
RatCylinder rat_cylinder_from_json(const json& j);

// {"s", "coeffs": [{"y": int, "phi": int}]}; y must be in T.
json to_json(const HomT& phi);
HomT hom_from_json(const json& j);

// {"ring": "rat"|"cfloat", "coeffs": [{"m": int, "phi": string}]}
json to_json(const ToeplitzSymbol<Rational>& phi);
json to_json(const ToeplitzSymbol<Complex>& phi);
ToeplitzSymbol<Rational> rat_symbol_from_json(const json& j);
ToeplitzSymbol<Complex> complex_symbol_from_json(const json& j);

// {"window": M, "ring", "rows": [..], "cols": [..], "vals": [strings], "safe_cols": [..]}
// Triplets are emitted column-major, rows ascending.
json to_json(const RatOp& op);
json to_json(const ComplexOp& op);
RatOp rat_op_from_json(const json& j);
ComplexOp complex_op_from_json(const json& j);

json read_json_file(const std::string& path);

}  // namespace hensel
