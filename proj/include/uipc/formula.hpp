#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace uipc {

// Node kinds, declared in canonical rank order: Bot < Var < And < Or < Imp < Box.
enum class Kind : std::uint8_t { Bot, Var, And, Or, Imp, Box };

enum class Dialect { Classical, Intuitionistic };

// Immutable formula tree shared by the classical and intuitionistic
// languages. Copies are cheap (one shared pointer); subtrees may be shared.
class Formula {
 public:
  // Default-constructed formulas are ⊥.
  Formula();

  static Formula bot();
  // Throws std::invalid_argument unless name matches [a-z][a-zA-Z0-9_]*.
  static Formula var(std::string_view name);
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula imp(Formula l, Formula r);
  static Formula box(Formula a);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }
  // Only meaningful for Var.
  const std::string& name() const;
  // Left child of a binary node, or the argument of a box.
  const Formula& left() const;
  const Formula& right() const;
  const Formula& arg() const { return left(); }

  // Sum of symbol weights: ∧ counts 2, ∨ counts 3, everything else 1.
  std::uint64_t weight() const;
  // Plain symbol count.
  std::uint64_t size() const;
  std::size_t hash() const;

  friend bool operator==(const Formula& a, const Formula& b);
  // Canonical total order: weight, then kind rank, then variable name or
  // children left-to-right.
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Kind k, std::string name, const Formula* l,
                      const Formula* r);

  std::shared_ptr<const Node> node_;
};

bool is_identifier(std::string_view s);

std::uint64_t weight(const Formula& f);
std::set<std::string> vars(const Formula& f);
void collect_vars(const Formula& f, std::set<std::string>& out);
std::set<Formula> subformulas(const Formula& f);
void collect_subformulas(const Formula& f, std::set<Formula>& out);
bool contains_box(const Formula& f);
// True if the formula has no ∧ or ∨ nodes.
bool is_classical_core(const Formula& f);
unsigned modal_depth(const Formula& f);

// Sugar constructors.
Formula neg(Formula f);
Formula top();
Formula dia(Formula f);
Formula big_and(std::span<const Formula> fs);
Formula big_or(std::span<const Formula> fs);
// Replaces ∧/∨ bottom-up by their classical →/⊥ abbreviations.
Formula desugar_classical(const Formula& f);

// Sugar pattern recognisers; on success the operand is written to `inner`.
bool is_top(const Formula& f);
bool match_neg(const Formula& f, Formula& inner);
bool match_dia(const Formula& f, Formula& inner);

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

inline void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace uipc
