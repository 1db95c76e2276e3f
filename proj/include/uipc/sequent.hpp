#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "uipc/formula.hpp"

namespace uipc {

// Finite multiset of formulas. Stored as a sorted vector with repeats, so
// iteration follows the canonical formula order and equality is multiset
// equality.
class FMultiset {
 public:
  using const_iterator = std::vector<Formula>::const_iterator;

  FMultiset() = default;
  FMultiset(std::initializer_list<Formula> items);
  explicit FMultiset(std::vector<Formula> items);

  void insert(Formula f);
  void insert(const FMultiset& other);
  // Removes one occurrence; returns false if f is absent.
  bool erase_one(const Formula& f);

  FMultiset with(Formula f) const;
  FMultiset with(std::initializer_list<Formula> fs) const;
  FMultiset without(const Formula& f) const;

  std::size_t count(const Formula& f) const;
  bool contains(const Formula& f) const { return count(f) > 0; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const_iterator begin() const { return items_.begin(); }
  const_iterator end() const { return items_.end(); }
  const std::vector<Formula>& items() const { return items_; }
  // Each element once, canonical order.
  std::vector<Formula> distinct() const;
  std::size_t hash() const;

  friend bool operator==(const FMultiset&, const FMultiset&) = default;
  friend std::strong_ordering operator<=>(const FMultiset& a,
                                          const FMultiset& b);

 private:
  std::vector<Formula> items_;
};

FMultiset operator+(FMultiset a, const FMultiset& b);

struct FMultisetHash {
  std::size_t operator()(const FMultiset& m) const { return m.hash(); }
};

struct Sequent {
  FMultiset left;
  FMultiset right;

  bool empty() const { return left.empty() && right.empty(); }
  // Intuitionistic sequents carry exactly one succedent formula.
  bool is_singleton() const { return right.size() == 1; }
  // Requires is_singleton(); throws ContractError otherwise.
  const Formula& succedent() const;
  std::size_t hash() const;

  friend bool operator==(const Sequent&, const Sequent&) = default;
  friend std::strong_ordering operator<=>(const Sequent& a, const Sequent& b);
};

struct SequentHash {
  std::size_t operator()(const Sequent& s) const { return s.hash(); }
};

// Γ ⇒ φ with a single succedent formula.
Sequent isequent(FMultiset left, Formula right);

std::set<std::string> vars(const FMultiset& m);
std::set<std::string> vars(const Sequent& s);
// Total number of symbols in the sequent.
std::uint64_t size(const Sequent& s);

// Elementwise □⁻¹: strips one box, identity on non-boxed formulas.
Formula unbox(const Formula& f);
FMultiset unbox(const FMultiset& m);

// Every count set to one.
FMultiset contract(const FMultiset& m);
Sequent contract(const Sequent& s);

// No top-level implication on either side.
bool is_critical(const Sequent& s);

enum class ClassicalCalculus { KS, GLS };

// Requires a critical sequent (ContractError otherwise). KS: ⊥ on the left or
// a variable on both sides. GLS additionally accepts a boxed formula on both
// sides (IdB).
bool is_initial(const Sequent& s, ClassicalCalculus calc);

// Θ measure for GLS strategy termination.
struct Theta {
  std::uint64_t imp_count = 0;
  std::uint64_t usable_boxes = 0;
  friend bool operator==(const Theta&, const Theta&) = default;
};

// β: |{□φ ∈ Sub(Γ ∪ Δ)} \ {□φ ∈ Γ}| with set semantics.
std::uint64_t usable_boxes(const Sequent& s);
Theta theta(const Sequent& s);

// Lexicographic ≪ with usable_boxes as the major component.
bool theta_less(const Theta& a, const Theta& b);

// Dershowitz–Manna extension of φ ≺ ψ iff weight(φ) < weight(ψ).
bool weight_ms_less(const FMultiset& a, const FMultiset& b);

// Γ ⊎ {φ, φ} for Γ ⇒ φ; requires a singleton succedent.
FMultiset isl_measure(const Sequent& s);
// Γ ⇒ φ ≺ Δ ⇒ ψ iff Γ,φ,φ is weight_ms-smaller than Δ,ψ,ψ.
bool isl_seq_less(const Sequent& a, const Sequent& b);

}  // namespace uipc
