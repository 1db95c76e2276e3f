#include "uipc/interpolation.hpp"

namespace uipc {

namespace {

// One bottom-up pass.
Formula rewrite(const Formula& f) {
  switch (f.kind()) {
    case Kind::Bot:
    case Kind::Var:
      return f;
    case Kind::Box:
      return Formula::box(rewrite(f.arg()));
    case Kind::And: {
      Formula l = rewrite(f.left());
      Formula r = rewrite(f.right());
      if (is_top(l)) return r;
      if (is_top(r)) return l;
      if (l.is(Kind::Bot) || r.is(Kind::Bot)) return Formula::bot();
      if (l == r) return l;
      return Formula::conj(l, r);
    }
    case Kind::Or: {
      Formula l = rewrite(f.left());
      Formula r = rewrite(f.right());
      if (l.is(Kind::Bot)) return r;
      if (r.is(Kind::Bot)) return l;
      if (is_top(l) || is_top(r)) return top();
      if (l == r) return l;
      return Formula::disj(l, r);
    }
    case Kind::Imp: {
      Formula l = rewrite(f.left());
      Formula r = rewrite(f.right());
      if (is_top(r) || l.is(Kind::Bot)) return top();
      return Formula::imp(l, r);
    }
  }
  return f;
}

}  // namespace

Formula simplify(const Formula& f) {
  Formula cur = f;
  for (;;) {
    Formula next = rewrite(cur);
    if (next == cur) return next;
    cur = next;
  }
}

}  // namespace uipc
