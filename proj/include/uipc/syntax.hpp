#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "uipc/formula.hpp"
#include "uipc/sequent.hpp"

namespace uipc {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  // Byte offset into the input.
  std::size_t position() const { return position_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

// Grammar, loosest first:  a -> b (right assoc)  |  a | b  |  a & b  |
// prefix ~ [] <>  |  F T identifiers ( ).  Unicode →, □, ◇, ⊥, ⊤, ¬, ∧, ∨ and
// ⇒ are accepted as synonyms.
Formula parse_formula(std::string_view text);
// "Γ => Δ", both sides comma-separated and possibly empty.
Sequent parse_sequent(std::string_view text);

enum class PrintStyle {
  Ascii,      // the raw tree
  Resugared,  // also prints ⊤, ¬x and ◇x patterns as T, ~x, <>x
};

std::string print(const Formula& f, PrintStyle style = PrintStyle::Ascii);
std::string print(const Sequent& s, PrintStyle style = PrintStyle::Ascii);

class JsonDecodeError : public std::runtime_error {
 public:
  JsonDecodeError(std::string path, const std::string& message);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// {"k":"bot"} | {"k":"var","v":NAME} | {"k":"and"|"or"|"imp","l":F,"r":F} |
// {"k":"box","a":F}
std::string to_json(const Formula& f);
// {"left":[F...],"right":[F...]}, repeats listed in canonical order.
std::string to_json(const Sequent& s);
Formula formula_from_json(std::string_view text);
Sequent sequent_from_json(std::string_view text);

}  // namespace uipc
