#include <algorithm>
#include <functional>
#include <sstream>

#include "uipc/errors.hpp"
#include "uipc/oracle.hpp"

namespace uipc {

namespace {

// Tree shape: children shapes in non-decreasing order, so each unordered
// tree appears once.
struct Shape {
  std::vector<Shape> kids;
  std::size_t nodes() const {
    std::size_t n = 1;
    for (const Shape& k : kids) n += k.nodes();
    return n;
  }
  std::string key() const {
    std::string s = "(";
    for (const Shape& k : kids) s += k.key();
    return s + ")";
  }
};

std::vector<Shape> shapes(unsigned depth, unsigned branching) {
  std::vector<Shape> out{Shape{}};
  if (depth == 0 || branching == 0) return out;
  std::vector<Shape> sub = shapes(depth - 1, branching);
  // Multisets of sub-shapes of size 1..branching, as non-decreasing index lists.
  std::vector<std::size_t> idx;
  std::function<void(std::size_t)> grow = [&](std::size_t start) {
    if (!idx.empty()) {
      Shape s;
      for (std::size_t i : idx) s.kids.push_back(sub[i]);
      out.push_back(std::move(s));
    }
    if (idx.size() == branching) return;
    for (std::size_t i = start; i < sub.size(); ++i) {
      idx.push_back(i);
      grow(i);
      idx.pop_back();
    }
  };
  grow(0);
  return out;
}

KripkeTree build(const Shape& shape, const std::vector<std::string>& vars) {
  KripkeTree t;
  t.vars = vars;
  std::vector<std::pair<const Shape*, int>> queue{{&shape, -1}};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto [s, parent] = queue[head];
    int id = static_cast<int>(t.parent.size());
    t.parent.push_back(parent);
    t.children.emplace_back();
    if (parent >= 0) t.children[static_cast<std::size_t>(parent)].push_back(id);
    for (const Shape& k : s->kids) queue.push_back({&k, id});
  }
  t.valuation.assign(t.parent.size(), 0);
  return t;
}

void successors(const KripkeTree& t, Frames frames, int node, std::vector<int>& out) {
  for (int c : t.children[static_cast<std::size_t>(node)]) {
    out.push_back(c);
    if (frames == Frames::GL) successors(t, frames, c, out);
  }
}

bool forced(const KripkeTree& t, Frames frames, int node, const Formula& f,
            const std::vector<std::vector<int>>& succ) {
  switch (f.kind()) {
    case Kind::Bot:
      return false;
    case Kind::Var: {
      auto it = std::find(t.vars.begin(), t.vars.end(), f.name());
      if (it == t.vars.end()) return false;
      auto bit = static_cast<unsigned>(it - t.vars.begin());
      return (t.valuation[static_cast<std::size_t>(node)] >> bit) & 1U;
    }
    case Kind::And:
      return forced(t, frames, node, f.left(), succ) &&
             forced(t, frames, node, f.right(), succ);
    case Kind::Or:
      return forced(t, frames, node, f.left(), succ) ||
             forced(t, frames, node, f.right(), succ);
    case Kind::Imp:
      return !forced(t, frames, node, f.left(), succ) ||
             forced(t, frames, node, f.right(), succ);
    case Kind::Box:
      for (int s : succ[static_cast<std::size_t>(node)])
        if (!forced(t, frames, s, f.arg(), succ)) return false;
      return true;
  }
  return false;
}

std::vector<std::vector<int>> successor_table(const KripkeTree& t, Frames frames) {
  std::vector<std::vector<int>> succ(t.parent.size());
  for (std::size_t n = 0; n < succ.size(); ++n)
    successors(t, frames, static_cast<int>(n), succ[n]);
  return succ;
}

}  // namespace

bool holds(const KripkeTree& t, Frames frames, int node, const Formula& f) {
  return forced(t, frames, node, f, successor_table(t, frames));
}

std::optional<Countermodel> semantic_check(Frames frames, const Sequent& s,
                                           unsigned depth, unsigned branching) {
  std::set<std::string> vs = vars(s);
  std::vector<std::string> var_list(vs.begin(), vs.end());
  if (var_list.size() > 8) throw ContractError("too many variables for the model search");
  std::vector<Shape> all = shapes(depth, branching);
  // Larger trees first; ties by shape key for a fixed order.
  std::stable_sort(all.begin(), all.end(), [](const Shape& a, const Shape& b) {
    if (a.nodes() != b.nodes()) return a.nodes() > b.nodes();
    return a.key() < b.key();
  });
  const std::size_t nv = var_list.size();
  for (const Shape& shape : all) {
    KripkeTree t = build(shape, var_list);
    auto succ = successor_table(t, frames);
    const std::size_t n = t.parent.size();
    const std::size_t bits = n * nv;
    if (bits >= 63) throw ContractError("model search bounds too large");
    const std::uint64_t total = std::uint64_t{1} << bits;
    const std::uint32_t mask = nv == 0 ? 0 : ((1U << nv) - 1U);
    for (std::uint64_t code = 0; code < total; ++code) {
      for (std::size_t i = 0; i < n; ++i)
        t.valuation[i] = static_cast<std::uint32_t>(code >> (i * nv)) & mask;
      bool refutes = std::all_of(s.left.begin(), s.left.end(),
                                 [&](const Formula& f) { return forced(t, frames, 0, f, succ); }) &&
                     std::none_of(s.right.begin(), s.right.end(),
                                  [&](const Formula& f) { return forced(t, frames, 0, f, succ); });
      if (refutes) return Countermodel{t, 0};
    }
  }
  return std::nullopt;
}

std::string describe(const KripkeTree& t) {
  std::ostringstream out;
  for (std::size_t n = 0; n < t.parent.size(); ++n) {
    if (n) out << "; ";
    out << n << ":{";
    bool first = true;
    for (std::size_t v = 0; v < t.vars.size(); ++v) {
      if (!((t.valuation[n] >> v) & 1U)) continue;
      out << (first ? "" : ",") << t.vars[v];
      first = false;
    }
    out << "}";
    if (!t.children[n].empty()) {
      out << "->[";
      for (std::size_t i = 0; i < t.children[n].size(); ++i)
        out << (i ? "," : "") << t.children[n][i];
      out << "]";
    }
  }
  return out.str();
}

}  // namespace uipc
