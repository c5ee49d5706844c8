#include "tcshift/instance_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tcshift/error.hpp"

namespace tcshift {
namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& object, const char* name) {
  const auto it = object.find(name);
  if (it == object.end()) parse_error(std::string("missing field \"") + name + "\"");
  return *it;
}

double number(const json& value, const std::string& what) {
  if (!value.is_number()) parse_error(what + " must be a number");
  return value.get<double>();
}

double number_field(const json& object, const char* name) {
  return number(field(object, name), std::string("\"") + name + "\"");
}

AtomicMeasure1D measure_literal(const json& value, const std::string& name) {
  if (!value.is_object()) parse_error("\"" + name + "\" must be an object with an \"atoms\" array");
  const auto it = value.find("atoms");
  if (it == value.end() || !it->is_array()) parse_error("\"" + name + "\" needs an \"atoms\" array");
  std::vector<Atom1D> atoms;
  for (const auto& atom : *it) {
    if (!atom.is_array() || atom.size() != 2) {
      parse_error("atoms of \"" + name + "\" must be [location, mass] pairs");
    }
    atoms.push_back({number(atom[0], name + " atom location"), number(atom[1], name + " atom mass")});
  }
  for (const auto& a : atoms) {
    if (!(a.mass > 0.0)) {
      throw Error(ErrorCode::InvalidMeasure, name + " has a non-positive mass");
    }
  }
  try {
    return AtomicMeasure1D(std::move(atoms));
  } catch (const Error& e) {
    throw Error(e.code(), name + ": " + e.what());
  }
}

std::optional<AtomicMeasure1D> optional_measure(const json& object, const char* name) {
  const auto it = object.find(name);
  if (it == object.end() || it->is_null()) return std::nullopt;
  return measure_literal(*it, name);
}

InstanceOptions parse_options(const json& object) {
  InstanceOptions options;
  const auto it = object.find("options");
  if (it == object.end()) return options;
  if (!it->is_object()) parse_error("\"options\" must be an object");
  if (const auto tol = it->find("tol"); tol != it->end()) options.tol = number(*tol, "options.tol");
  auto integer = [&](const char* name) -> std::optional<int> {
    const auto v = it->find(name);
    if (v == it->end()) return std::nullopt;
    if (!v->is_number_integer()) parse_error(std::string("options.") + name + " must be an integer");
    return v->get<int>();
  };
  options.order = integer("order");
  options.window = integer("window");
  return options;
}

}  // namespace

InstanceFile parse_instance_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) parse_error("instance file must contain a JSON object");
  const auto& kind = field(doc, "kind");
  if (!kind.is_string()) parse_error("\"kind\" must be a string");

  InstanceFile file;
  file.options = parse_options(doc);
  if (kind == "tc") {
    TcSpec spec;
    spec.xi_x = measure_literal(field(doc, "xi_x"), "xi_x");
    spec.eta_y = measure_literal(field(doc, "eta_y"), "eta_y");
    spec.xi = measure_literal(field(doc, "xi"), "xi");
    spec.eta = measure_literal(field(doc, "eta"), "eta");
    spec.a = number_field(doc, "a");
    file.spec = std::move(spec);
  } else if (kind == "flat") {
    FlatInstance flat;
    flat.p = number_field(doc, "p");
    flat.q = number_field(doc, "q");
    flat.l = number_field(doc, "l");
    flat.m = number_field(doc, "m");
    flat.b = number_field(doc, "b");
    flat.a = number_field(doc, "a");
    flat.rho = optional_measure(doc, "rho");
    flat.sigma = optional_measure(doc, "sigma");
    file.spec = std::move(flat);
  } else {
    parse_error("\"kind\" must be \"tc\" or \"flat\"");
  }
  return file;
}

InstanceFile parse_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  auto file = parse_instance_text(buffer.str());
  (void)file.build();
  return file;
}

TCInstance InstanceFile::build(int depth) const {
  if (const auto* tc = std::get_if<TcSpec>(&spec)) {
    return TCInstance::build(tc->xi_x, tc->eta_y, tc->xi, tc->eta, tc->a, depth);
  }
  return flat().to_tc(depth);
}

InstanceFile InstanceFile::with_parameter(std::string_view name, double value) const {
  InstanceFile copy = *this;
  if (auto* tc = std::get_if<TcSpec>(&copy.spec)) {
    if (name != "a") parse_error("tc instances can only sweep \"a\"");
    tc->a = value;
    return copy;
  }
  auto& f = std::get<FlatInstance>(copy.spec);
  if (name == "a") f.a = value;
  else if (name == "b") f.b = value;
  else if (name == "p") f.p = value;
  else if (name == "q") f.q = value;
  else if (name == "l") f.l = value;
  else if (name == "m") f.m = value;
  else parse_error("unknown flat parameter \"" + std::string(name) + "\"");
  return copy;
}

}  // namespace tcshift
