#include <json.hpp>

#include "uipc/syntax.hpp"

namespace uipc {

using Json = nlohmann::ordered_json;

JsonDecodeError::JsonDecodeError(std::string path, const std::string& message)
    : std::runtime_error(path + ": " + message), path_(std::move(path)) {}

namespace {

Json encode(const Formula& f) {
  switch (f.kind()) {
    case Kind::Bot:
      return Json{{"k", "bot"}};
    case Kind::Var:
      return Json{{"k", "var"}, {"v", f.name()}};
    case Kind::Box:
      return Json{{"k", "box"}, {"a", encode(f.arg())}};
    case Kind::And:
      return Json{{"k", "and"}, {"l", encode(f.left())}, {"r", encode(f.right())}};
    case Kind::Or:
      return Json{{"k", "or"}, {"l", encode(f.left())}, {"r", encode(f.right())}};
    case Kind::Imp:
      return Json{{"k", "imp"}, {"l", encode(f.left())}, {"r", encode(f.right())}};
  }
  return {};
}

Json encode(const FMultiset& m) {
  Json arr = Json::array();
  for (const Formula& f : m) arr.push_back(encode(f));
  return arr;
}

void require_keys(const Json& j, const std::string& path,
                  std::initializer_list<const char*> keys) {
  if (!j.is_object()) throw JsonDecodeError(path, "expected an object");
  for (const char* k : keys)
    if (!j.contains(k)) throw JsonDecodeError(path, std::string("missing key '") + k + "'");
  for (const auto& [key, _] : j.items()) {
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) throw JsonDecodeError(path, "unknown key '" + key + "'");
  }
}

Formula decode_formula(const Json& j, const std::string& path) {
  if (!j.is_object()) throw JsonDecodeError(path, "expected an object");
  auto kit = j.find("k");
  if (kit == j.end() || !kit->is_string())
    throw JsonDecodeError(path, "missing string key 'k'");
  const std::string tag = kit->get<std::string>();
  if (tag == "bot") {
    require_keys(j, path, {"k"});
    return Formula::bot();
  }
  if (tag == "var") {
    require_keys(j, path, {"k", "v"});
    const Json& v = j.at("v");
    if (!v.is_string() || !is_identifier(v.get<std::string>()))
      throw JsonDecodeError(path + ".v", "expected an identifier");
    return Formula::var(v.get<std::string>());
  }
  if (tag == "box") {
    require_keys(j, path, {"k", "a"});
    return Formula::box(decode_formula(j.at("a"), path + ".a"));
  }
  if (tag == "and" || tag == "or" || tag == "imp") {
    require_keys(j, path, {"k", "l", "r"});
    Formula l = decode_formula(j.at("l"), path + ".l");
    Formula r = decode_formula(j.at("r"), path + ".r");
    if (tag == "and") return Formula::conj(l, r);
    if (tag == "or") return Formula::disj(l, r);
    return Formula::imp(l, r);
  }
  throw JsonDecodeError(path + ".k", "unknown formula kind '" + tag + "'");
}

FMultiset decode_side(const Json& j, const std::string& path) {
  if (!j.is_array()) throw JsonDecodeError(path, "expected an array");
  std::vector<Formula> items;
  for (std::size_t i = 0; i < j.size(); ++i)
    items.push_back(decode_formula(j[i], path + "[" + std::to_string(i) + "]"));
  return FMultiset(std::move(items));
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw JsonDecodeError("$", e.what());
  }
}

}  // namespace

std::string to_json(const Formula& f) { return encode(f).dump(); }

std::string to_json(const Sequent& s) {
  Json j{{"left", encode(s.left)}, {"right", encode(s.right)}};
  return j.dump();
}

Formula formula_from_json(std::string_view text) {
  return decode_formula(parse_json(text), "$");
}

Sequent sequent_from_json(std::string_view text) {
  Json j = parse_json(text);
  require_keys(j, "$", {"left", "right"});
  return Sequent{decode_side(j.at("left"), "$.left"),
                 decode_side(j.at("right"), "$.right")};
}

}  // namespace uipc
