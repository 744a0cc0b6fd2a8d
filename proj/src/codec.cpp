#include "hensel/codec.hpp"

#include <fstream>

namespace hensel {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

Integer int_field(const json& j, const char* name) {
  const auto& v = field(j, name);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + name + "' must be an integer");
  return v.get<Integer>();
}

std::string string_field(const json& j, const char* name) {
  const auto& v = field(j, name);
  if (!v.is_string()) throw ParseError(std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

const json& array_field(const json& j, const char* name) {
  const auto& v = field(j, name);
  if (!v.is_array()) throw ParseError(std::string("field '") + name + "' must be an array");
  return v;
}

template <class T>
T wrap(const char* name, auto&& fn) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("field '") + name + "': " + e.what());
  }
}

const char* ring_name(ScalarRing r) {
  switch (r) {
    case ScalarRing::integer:
      return "int";
    case ScalarRing::rational:
      return "rat";
    case ScalarRing::complex:
      return "cfloat";
  }
  return "?";
}

template <Scalar S>
json cylinder_json(const CylinderFunction<S>& f) {
  json values = json::array();
  for (const auto& v : f.values()) values.push_back(format_scalar(v));
  return json{{"s", f.base()},
              {"level", f.level()},
              {"domain", to_string(f.domain())},
              {"ring", ring_name(ScalarTraits<S>::ring)},
              {"values", values}};
}

template <Scalar S>
CylinderFunction<S> cylinder_values(const json& j) {
  const auto s = static_cast<int>(int_field(j, "s"));
  const auto level = static_cast<int>(int_field(j, "level"));
  const auto domain_text = string_field(j, "domain");
  Domain domain;
  if (domain_text == "full") {
    domain = Domain::full;
  } else if (domain_text == "units") {
    domain = Domain::units;
  } else {
    throw ParseError("field 'domain' must be \"full\" or \"units\"");
  }
  const auto& raw = array_field(j, "values");
  std::vector<S> values;
  values.reserve(raw.size());
  for (const auto& v : raw) {
    if (!v.is_string()) throw ParseError("field 'values' must hold scalar strings");
    values.push_back(wrap<S>("values", [&] { return parse_scalar<S>(v.get<std::string>()); }));
  }
  return wrap<CylinderFunction<S>>("values", [&] { return CylinderFunction<S>(s, level, domain, std::move(values)); });
}

template <Scalar S>
json symbol_json(const ToeplitzSymbol<S>& phi) {
  json coeffs = json::array();
  for (const auto& [m, c] : phi) coeffs.push_back({{"m", m}, {"phi", format_scalar(c)}});
  return json{{"ring", ring_name(ScalarTraits<S>::ring)}, {"coeffs", coeffs}};
}

template <Scalar S>
ToeplitzSymbol<S> symbol_from(const json& j, std::initializer_list<const char*> rings) {
  const auto ring = string_field(j, "ring");
  if (std::find_if(rings.begin(), rings.end(), [&](const char* r) { return ring == r; }) == rings.end()) {
    throw ParseError("field 'ring' has unsupported value \"" + ring + "\"");
  }
  ToeplitzSymbol<S> out;
  for (const auto& entry : array_field(j, "coeffs")) {
    const Integer m = int_field(entry, "m");
    if (out.contains(m)) throw ParseError("field 'coeffs' repeats m=" + std::to_string(m));
    out[m] = wrap<S>("phi", [&] { return parse_scalar<S>(string_field(entry, "phi")); });
  }
  return out;
}

template <Scalar S>
json op_json(const TruncOp<S>& op) {
  json rows = json::array(), cols = json::array(), vals = json::array(), safe = json::array();
  for (const auto& [c, col] : op.matrix.columns()) {
    for (const auto& [r, v] : col) {
      rows.push_back(r);
      cols.push_back(c);
      vals.push_back(format_scalar(v));
    }
  }
  for (Integer c : op.safe_cols) safe.push_back(c);
  return json{{"window", op.window.half_width()},
              {"ring", ring_name(ScalarTraits<S>::ring)},
              {"rows", rows},
              {"cols", cols},
              {"vals", vals},
              {"safe_cols", safe}};
}

template <Scalar S>
TruncOp<S> op_from(const json& j, const char* ring) {
  if (string_field(j, "ring") != ring) throw ParseError(std::string("field 'ring' must be \"") + ring + "\"");
  const Window w = wrap<Window>("window", [&] { return Window(int_field(j, "window")); });
  const auto& rows = array_field(j, "rows");
  const auto& cols = array_field(j, "cols");
  const auto& vals = array_field(j, "vals");
  if (rows.size() != cols.size() || rows.size() != vals.size()) {
    throw ParseError("fields 'rows', 'cols', 'vals' must have equal length");
  }
  TruncOp<S> op{w, {}, {}};
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (!rows[k].is_number_integer()) throw ParseError("field 'rows' must hold integers");
    if (!cols[k].is_number_integer()) throw ParseError("field 'cols' must hold integers");
    if (!vals[k].is_string()) throw ParseError("field 'vals' must hold scalar strings");
    const auto r = rows[k].get<Integer>();
    const auto c = cols[k].get<Integer>();
    if (!w.contains(r)) throw ParseError("field 'rows' has an index outside the window");
    if (!w.contains(c)) throw ParseError("field 'cols' has an index outside the window");
    op.matrix.set(r, c, wrap<S>("vals", [&] { return parse_scalar<S>(vals[k].get<std::string>()); }));
  }
  for (const auto& c : array_field(j, "safe_cols")) {
    if (!c.is_number_integer() || !w.contains(c.get<Integer>())) {
      throw ParseError("field 'safe_cols' must hold window indices");
    }
    op.safe_cols.insert(c.get<Integer>());
  }
  return op;
}

}  // namespace

json to_json(const SAdic& x) {
  json out = json::array();
  for (int d : x.digits()) out.push_back(d);
  return out;
}

SAdic sadic_from_json(const json& j, int s) {
  if (!j.is_array()) throw ParseError("s-adic digits must be an array");
  std::vector<int> digits;
  for (const auto& d : j) {
    if (!d.is_number_integer()) throw ParseError("s-adic digits must be integers");
    digits.push_back(d.get<int>());
  }
  return wrap<SAdic>("digits", [&] { return SAdic::from_digits(std::move(digits), s); });
}

json to_json(const IntCylinder& f) { return cylinder_json(f); }
json to_json(const RatCylinder& f) { return cylinder_json(f); }
json to_json(const ComplexCylinder& f) { return cylinder_json(f); }
json to_json(const AnyCylinder& f) {
  return std::visit([](const auto& g) { return to_json(g); }, f);
}

AnyCylinder cylinder_from_json(const json& j) {
  const auto ring = string_field(j, "ring");
  if (ring == "int") return cylinder_values<Integer>(j);
  if (ring == "rat") return cylinder_values<Rational>(j);
  if (ring == "cfloat") return cylinder_values<Complex>(j);
  throw ParseError("field 'ring' must be \"int\", \"rat\" or \"cfloat\"");
}

IntCylinder int_cylinder_from_json(const json& j) {
  auto any = cylinder_from_json(j);
  if (auto* f = std::get_if<IntCylinder>(&any)) return *f;
  if (auto* f = std::get_if<RatCylinder>(&any)) {
    std::vector<Integer> values;
    for (const auto& v : f->values()) {
      if (v.get_den() != 1 || !v.get_num().fits_slong_p()) throw ParseError("field 'values' must be integers");
      values.push_back(v.get_num().get_si());
    }
    return IntCylinder(f->base(), f->level(), f->domain(), std::move(values));
  }
  throw ParseError("field 'ring' must be \"int\" for an integer function");
}

RatCylinder rat_cylinder_from_json(const json& j) {
  auto any = cylinder_from_json(j);
  if (auto* f = std::get_if<IntCylinder>(&any)) return f->cast<Rational>();
  if (auto* f = std::get_if<RatCylinder>(&any)) return *f;
  throw ParseError("field 'ring' must be \"int\" or \"rat\" for an exact function");
}

json to_json(const HomT& phi) {
  json coeffs = json::array();
  for (const auto& [y, c] : phi.coeffs()) coeffs.push_back({{"y", y}, {"phi", c}});
  return json{{"s", phi.base()}, {"coeffs", coeffs}};
}

HomT hom_from_json(const json& j) {
  const auto s = static_cast<int>(int_field(j, "s"));
  HomT out = wrap<HomT>("s", [&] { return HomT(s); });
  for (const auto& entry : array_field(j, "coeffs")) {
    const Integer y = int_field(entry, "y");
    const Integer phi = int_field(entry, "phi");
    if (!in_T(y, s)) throw ParseError("field 'y': " + std::to_string(y) + " is not in T for s=" + std::to_string(s));
    if (out.coeffs().contains(y)) throw ParseError("field 'y': repeated index " + std::to_string(y));
    out.add(y, phi);
  }
  return out;
}

json to_json(const ToeplitzSymbol<Rational>& phi) { return symbol_json(phi); }
json to_json(const ToeplitzSymbol<Complex>& phi) { return symbol_json(phi); }
ToeplitzSymbol<Rational> rat_symbol_from_json(const json& j) { return symbol_from<Rational>(j, {"rat", "int"}); }
ToeplitzSymbol<Complex> complex_symbol_from_json(const json& j) {
  return symbol_from<Complex>(j, {"cfloat", "rat", "int"});
}

json to_json(const RatOp& op) { return op_json(op); }
json to_json(const ComplexOp& op) { return op_json(op); }
RatOp rat_op_from_json(const json& j) { return op_from<Rational>(j, "rat"); }
ComplexOp complex_op_from_json(const json& j) { return op_from<Complex>(j, "cfloat"); }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace hensel
