#include "uipc/formula.hpp"

#include <functional>
#include <stdexcept>

namespace uipc {

struct Formula::Node {
  Kind kind;
  std::string name;
  Formula left;   // valid for And/Or/Imp/Box
  Formula right;  // valid for And/Or/Imp
  std::uint64_t weight;
  std::uint64_t size;
  std::size_t hash;
};

namespace {

std::uint64_t symbol_weight(Kind k) {
  switch (k) {
    case Kind::And:
      return 2;
    case Kind::Or:
      return 3;
    default:
      return 1;
  }
}

int compare(const Formula& a, const Formula& b);

}  // namespace

Formula Formula::make(Kind k, std::string name, const Formula* l,
                      const Formula* r) {
  // Children of leaf nodes are never read; a null node_ there avoids
  // recursing into the default constructor.
  auto node = std::make_shared<Node>(Node{k, std::move(name),
                                          Formula(std::shared_ptr<const Node>()),
                                          Formula(std::shared_ptr<const Node>()),
                                          symbol_weight(k), 1, 0});
  std::size_t h = static_cast<std::size_t>(k) * 0x51ed27u;
  if (k == Kind::Var) hash_combine(h, std::hash<std::string>{}(node->name));
  if (l != nullptr) {
    node->left = *l;
    node->weight += l->weight();
    node->size += l->size();
    hash_combine(h, l->hash());
  }
  if (r != nullptr) {
    node->right = *r;
    node->weight += r->weight();
    node->size += r->size();
    hash_combine(h, r->hash());
  }
  node->hash = h;
  return Formula(std::move(node));
}

Formula::Formula() : Formula(bot()) {}

Formula Formula::bot() {
  static const Formula instance = make(Kind::Bot, {}, nullptr, nullptr);
  return instance;
}

Formula Formula::var(std::string_view name) {
  if (!is_identifier(name))
    throw std::invalid_argument("invalid variable name '" + std::string(name) +
                                "'");
  return make(Kind::Var, std::string(name), nullptr, nullptr);
}

Formula Formula::conj(Formula l, Formula r) { return make(Kind::And, {}, &l, &r); }
Formula Formula::disj(Formula l, Formula r) { return make(Kind::Or, {}, &l, &r); }
Formula Formula::imp(Formula l, Formula r) { return make(Kind::Imp, {}, &l, &r); }
Formula Formula::box(Formula a) { return make(Kind::Box, {}, &a, nullptr); }

Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
const Formula& Formula::left() const { return node_->left; }
const Formula& Formula::right() const { return node_->right; }
std::uint64_t Formula::weight() const { return node_->weight; }
std::uint64_t Formula::size() const { return node_->size; }
std::size_t Formula::hash() const { return node_->hash; }

namespace {

int compare(const Formula& a, const Formula& b) {
  if (&a == &b) return 0;
  if (a.weight() != b.weight()) return a.weight() < b.weight() ? -1 : 1;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case Kind::Bot:
      return 0;
    case Kind::Var:
      return a.name().compare(b.name()) < 0   ? -1
             : a.name().compare(b.name()) > 0 ? 1
                                              : 0;
    case Kind::Box:
      return compare(a.arg(), b.arg());
    default:
      if (int c = compare(a.left(), b.left()); c != 0) return c;
      return compare(a.right(), b.right());
  }
}

}  // namespace

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  return compare(a, b) == 0;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  int c = compare(a, b);
  return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
  for (char c : s.substr(1)) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

std::uint64_t weight(const Formula& f) { return f.weight(); }

void collect_vars(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Kind::Bot:
      return;
    case Kind::Var:
      out.insert(f.name());
      return;
    case Kind::Box:
      collect_vars(f.arg(), out);
      return;
    default:
      collect_vars(f.left(), out);
      collect_vars(f.right(), out);
  }
}

std::set<std::string> vars(const Formula& f) {
  std::set<std::string> out;
  collect_vars(f, out);
  return out;
}

void collect_subformulas(const Formula& f, std::set<Formula>& out) {
  if (!out.insert(f).second) return;
  switch (f.kind()) {
    case Kind::Bot:
    case Kind::Var:
      return;
    case Kind::Box:
      collect_subformulas(f.arg(), out);
      return;
    default:
      collect_subformulas(f.left(), out);
      collect_subformulas(f.right(), out);
  }
}

std::set<Formula> subformulas(const Formula& f) {
  std::set<Formula> out;
  collect_subformulas(f, out);
  return out;
}

bool contains_box(const Formula& f) {
  switch (f.kind()) {
    case Kind::Bot:
    case Kind::Var:
      return false;
    case Kind::Box:
      return true;
    default:
      return contains_box(f.left()) || contains_box(f.right());
  }
}

bool is_classical_core(const Formula& f) {
  switch (f.kind()) {
    case Kind::Bot:
    case Kind::Var:
      return true;
    case Kind::And:
    case Kind::Or:
      return false;
    case Kind::Box:
      return is_classical_core(f.arg());
    default:
      return is_classical_core(f.left()) && is_classical_core(f.right());
  }
}

unsigned modal_depth(const Formula& f) {
  switch (f.kind()) {
    case Kind::Bot:
    case Kind::Var:
      return 0;
    case Kind::Box:
      return 1 + modal_depth(f.arg());
    default:
      return std::max(modal_depth(f.left()), modal_depth(f.right()));
  }
}

Formula neg(Formula f) { return Formula::imp(std::move(f), Formula::bot()); }

Formula top() {
  static const Formula t = Formula::imp(Formula::bot(), Formula::bot());
  return t;
}

Formula dia(Formula f) { return neg(Formula::box(neg(std::move(f)))); }

namespace {

Formula fold_right(std::span<const Formula> fs, Formula unit,
                   Formula (*op)(Formula, Formula)) {
  if (fs.empty()) return unit;
  Formula acc = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) acc = op(fs[i], acc);
  return acc;
}

}  // namespace

Formula big_and(std::span<const Formula> fs) {
  return fold_right(fs, top(), &Formula::conj);
}

Formula big_or(std::span<const Formula> fs) {
  return fold_right(fs, Formula::bot(), &Formula::disj);
}

Formula desugar_classical(const Formula& f) {
  switch (f.kind()) {
    case Kind::Bot:
    case Kind::Var:
      return f;
    case Kind::Box:
      return Formula::box(desugar_classical(f.arg()));
    case Kind::Imp:
      return Formula::imp(desugar_classical(f.left()),
                          desugar_classical(f.right()));
    case Kind::And: {
      // φ ∧ ψ := (φ → (ψ → ⊥)) → ⊥
      Formula l = desugar_classical(f.left());
      Formula r = desugar_classical(f.right());
      return neg(Formula::imp(std::move(l), neg(std::move(r))));
    }
    case Kind::Or: {
      // φ ∨ ψ := (φ → ⊥) → ψ
      Formula l = desugar_classical(f.left());
      Formula r = desugar_classical(f.right());
      return Formula::imp(neg(std::move(l)), std::move(r));
    }
  }
  return f;
}

bool is_top(const Formula& f) {
  return f.is(Kind::Imp) && f.left().is(Kind::Bot) && f.right().is(Kind::Bot);
}

bool match_neg(const Formula& f, Formula& inner) {
  if (!f.is(Kind::Imp) || !f.right().is(Kind::Bot)) return false;
  inner = f.left();
  return true;
}

bool match_dia(const Formula& f, Formula& inner) {
  Formula boxed;
  if (!match_neg(f, boxed) || !boxed.is(Kind::Box)) return false;
  return match_neg(boxed.arg(), inner);
}

}  // namespace uipc
