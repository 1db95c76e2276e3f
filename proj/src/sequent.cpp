#include "uipc/sequent.hpp"

#include <algorithm>

#include "uipc/errors.hpp"

namespace uipc {

FMultiset::FMultiset(std::initializer_list<Formula> items)
    : FMultiset(std::vector<Formula>(items)) {}

FMultiset::FMultiset(std::vector<Formula> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
}

void FMultiset::insert(Formula f) {
  auto pos = std::upper_bound(items_.begin(), items_.end(), f);
  items_.insert(pos, std::move(f));
}

void FMultiset::insert(const FMultiset& other) {
  std::vector<Formula> merged;
  merged.reserve(items_.size() + other.items_.size());
  std::merge(items_.begin(), items_.end(), other.items_.begin(),
             other.items_.end(), std::back_inserter(merged));
  items_ = std::move(merged);
}

bool FMultiset::erase_one(const Formula& f) {
  auto pos = std::lower_bound(items_.begin(), items_.end(), f);
  if (pos == items_.end() || !(*pos == f)) return false;
  items_.erase(pos);
  return true;
}

FMultiset FMultiset::with(Formula f) const {
  FMultiset out = *this;
  out.insert(std::move(f));
  return out;
}

FMultiset FMultiset::with(std::initializer_list<Formula> fs) const {
  FMultiset out = *this;
  for (const Formula& f : fs) out.insert(f);
  return out;
}

FMultiset FMultiset::without(const Formula& f) const {
  FMultiset out = *this;
  out.erase_one(f);
  return out;
}

std::size_t FMultiset::count(const Formula& f) const {
  auto range = std::equal_range(items_.begin(), items_.end(), f);
  return static_cast<std::size_t>(range.second - range.first);
}

std::vector<Formula> FMultiset::distinct() const {
  std::vector<Formula> out;
  for (const Formula& f : items_)
    if (out.empty() || !(out.back() == f)) out.push_back(f);
  return out;
}

std::size_t FMultiset::hash() const {
  std::size_t h = items_.size();
  for (const Formula& f : items_) hash_combine(h, f.hash());
  return h;
}

std::strong_ordering operator<=>(const FMultiset& a, const FMultiset& b) {
  return std::lexicographical_compare_three_way(
      a.items_.begin(), a.items_.end(), b.items_.begin(), b.items_.end());
}

FMultiset operator+(FMultiset a, const FMultiset& b) {
  a.insert(b);
  return a;
}

const Formula& Sequent::succedent() const {
  if (!is_singleton())
    throw ContractError("intuitionistic sequent needs exactly one succedent");
  return *right.begin();
}

std::size_t Sequent::hash() const {
  std::size_t h = left.hash();
  hash_combine(h, right.hash());
  return h;
}

std::strong_ordering operator<=>(const Sequent& a, const Sequent& b) {
  if (auto c = a.left <=> b.left; c != 0) return c;
  return a.right <=> b.right;
}

Sequent isequent(FMultiset left, Formula right) {
  return Sequent{std::move(left), FMultiset{std::move(right)}};
}

std::set<std::string> vars(const FMultiset& m) {
  std::set<std::string> out;
  for (const Formula& f : m) collect_vars(f, out);
  return out;
}

std::set<std::string> vars(const Sequent& s) {
  std::set<std::string> out = vars(s.left);
  for (const Formula& f : s.right) collect_vars(f, out);
  return out;
}

std::uint64_t size(const Sequent& s) {
  std::uint64_t n = 0;
  for (const Formula& f : s.left) n += f.size();
  for (const Formula& f : s.right) n += f.size();
  return n;
}

Formula unbox(const Formula& f) { return f.is(Kind::Box) ? f.arg() : f; }

FMultiset unbox(const FMultiset& m) {
  std::vector<Formula> out;
  out.reserve(m.size());
  for (const Formula& f : m) out.push_back(unbox(f));
  return FMultiset(std::move(out));
}

FMultiset contract(const FMultiset& m) { return FMultiset(m.distinct()); }

Sequent contract(const Sequent& s) {
  return Sequent{contract(s.left), contract(s.right)};
}

bool is_critical(const Sequent& s) {
  auto is_imp = [](const Formula& f) { return f.is(Kind::Imp); };
  return std::none_of(s.left.begin(), s.left.end(), is_imp) &&
         std::none_of(s.right.begin(), s.right.end(), is_imp);
}

bool is_initial(const Sequent& s, ClassicalCalculus calc) {
  if (!is_critical(s))
    throw ContractError("initiality is only defined for critical sequents");
  for (const Formula& f : s.left) {
    if (f.is(Kind::Bot)) return true;
    if (f.is(Kind::Var) && s.right.contains(f)) return true;
    if (calc == ClassicalCalculus::GLS && f.is(Kind::Box) &&
        s.right.contains(f))
      return true;
  }
  return false;
}

std::uint64_t usable_boxes(const Sequent& s) {
  std::set<Formula> subs;
  for (const Formula& f : s.left) collect_subformulas(f, subs);
  for (const Formula& f : s.right) collect_subformulas(f, subs);
  std::uint64_t n = 0;
  for (const Formula& f : subs)
    if (f.is(Kind::Box) && !s.left.contains(f)) ++n;
  return n;
}

namespace {

std::uint64_t count_imps(const Formula& f) {
  switch (f.kind()) {
    case Kind::Bot:
    case Kind::Var:
      return 0;
    case Kind::Box:
      return count_imps(f.arg());
    case Kind::Imp:
      return 1 + count_imps(f.left()) + count_imps(f.right());
    default:
      return count_imps(f.left()) + count_imps(f.right());
  }
}

}  // namespace

Theta theta(const Sequent& s) {
  Theta t;
  for (const Formula& f : s.left) t.imp_count += count_imps(f);
  for (const Formula& f : s.right) t.imp_count += count_imps(f);
  t.usable_boxes = usable_boxes(s);
  return t;
}

bool theta_less(const Theta& a, const Theta& b) {
  if (a.usable_boxes != b.usable_boxes) return a.usable_boxes < b.usable_boxes;
  return a.imp_count < b.imp_count;
}

bool weight_ms_less(const FMultiset& a, const FMultiset& b) {
  // a < b iff a ≠ b and every element of a \ b is dominated by some
  // element of b \ a.
  std::vector<Formula> only_a, only_b;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(only_a));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(),
                      std::back_inserter(only_b));
  if (only_a.empty() && only_b.empty()) return false;
  std::uint64_t max_b = 0;
  for (const Formula& f : only_b) max_b = std::max(max_b, f.weight());
  return std::all_of(only_a.begin(), only_a.end(),
                     [&](const Formula& f) { return f.weight() < max_b; });
}

FMultiset isl_measure(const Sequent& s) {
  const Formula& rhs = s.succedent();
  return s.left.with({rhs, rhs});
}

bool isl_seq_less(const Sequent& a, const Sequent& b) {
  return weight_ms_less(isl_measure(a), isl_measure(b));
}

}  // namespace uipc
