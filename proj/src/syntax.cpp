#include "uipc/syntax.hpp"

#include <vector>

namespace uipc {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("parse error at offset " + std::to_string(position) +
                         ": " + message),
      position_(position),
      detail_(message) {}

namespace {

enum class Tok {
  Ident,
  Bot,
  Top,
  Not,
  Box,
  Dia,
  And,
  Or,
  Imp,
  LParen,
  RParen,
  Comma,
  Turnstile,
  End,
};

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

struct Synonym {
  std::string_view spelling;
  Tok kind;
};

// Longest spellings first where prefixes overlap.
constexpr Synonym kSymbols[] = {
    {"->", Tok::Imp},      {"=>", Tok::Turnstile}, {"[]", Tok::Box},
    {"<>", Tok::Dia},      {"~", Tok::Not},        {"&", Tok::And},
    {"|", Tok::Or},        {"(", Tok::LParen},     {")", Tok::RParen},
    {",", Tok::Comma},     {"F", Tok::Bot},        {"T", Tok::Top},
    {"→", Tok::Imp},  {"⇒", Tok::Turnstile},
    {"□", Tok::Box},  {"◇", Tok::Dia},   {"¬", Tok::Not},
    {"∧", Tok::And},  {"∨", Tok::Or},    {"⊥", Tok::Bot},
    {"⊤", Tok::Top},
};

bool ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

std::vector<Token> lex(std::string_view in) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < in.size()) {
    char c = in[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t j = i + 1;
      while (j < in.size() && ident_char(in[j])) ++j;
      out.push_back({Tok::Ident, i, std::string(in.substr(i, j - i))});
      i = j;
      continue;
    }
    bool matched = false;
    for (const Synonym& s : kSymbols) {
      if (in.substr(i, s.spelling.size()) == s.spelling) {
        // F and T are keywords only when not followed by identifier chars.
        if ((s.kind == Tok::Bot || s.kind == Tok::Top) &&
            s.spelling.size() == 1 && i + 1 < in.size() &&
            ident_char(in[i + 1]))
          break;
        out.push_back({s.kind, i, std::string(s.spelling)});
        i += s.spelling.size();
        matched = true;
        break;
      }
    }
    if (!matched) throw ParseError(i, "unexpected character");
  }
  out.push_back({Tok::End, in.size(), {}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Formula formula() { return implication(); }

  Sequent sequent() {
    Sequent s;
    s.left = side(Tok::Turnstile);
    expect(Tok::Turnstile, "expected '=>'");
    s.right = side(Tok::End);
    return s;
  }

  void finish() {
    if (peek().kind != Tok::End) throw ParseError(peek().pos, "trailing input");
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  const Token& next() { return toks_[at_++]; }

  void expect(Tok k, const char* msg) {
    if (peek().kind != k) throw ParseError(peek().pos, msg);
    ++at_;
  }

  FMultiset side(Tok terminator) {
    std::vector<Formula> items;
    if (peek().kind == terminator) return FMultiset(std::move(items));
    items.push_back(formula());
    while (peek().kind == Tok::Comma) {
      ++at_;
      items.push_back(formula());
    }
    if (peek().kind != terminator)
      throw ParseError(peek().pos, terminator == Tok::End
                                       ? "expected ',' or end of input"
                                       : "expected ',' or '=>'");
    return FMultiset(std::move(items));
  }

  Formula implication() {
    Formula l = disjunction();
    if (peek().kind != Tok::Imp) return l;
    ++at_;
    return Formula::imp(std::move(l), implication());
  }

  Formula disjunction() {
    Formula l = conjunction();
    if (peek().kind != Tok::Or) return l;
    ++at_;
    return Formula::disj(std::move(l), disjunction());
  }

  Formula conjunction() {
    Formula l = prefix();
    if (peek().kind != Tok::And) return l;
    ++at_;
    return Formula::conj(std::move(l), conjunction());
  }

  Formula prefix() {
    switch (peek().kind) {
      case Tok::Not:
        ++at_;
        return neg(prefix());
      case Tok::Box:
        ++at_;
        return Formula::box(prefix());
      case Tok::Dia:
        ++at_;
        return dia(prefix());
      default:
        return atom();
    }
  }

  Formula atom() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Bot:
        return Formula::bot();
      case Tok::Top:
        return top();
      case Tok::Ident:
        return Formula::var(t.text);
      case Tok::LParen: {
        Formula f = implication();
        expect(Tok::RParen, "expected ')'");
        return f;
      }
      case Tok::End:
        throw ParseError(t.pos, "unexpected end of input");
      default:
        throw ParseError(t.pos, "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

// Binding strength used for minimal parenthesisation.
enum Prec { kImp = 1, kOr = 2, kAnd = 3, kPrefix = 4, kAtom = 5 };

void emit(const Formula& f, PrintStyle style, int min_prec, std::string& out);

void emit_prefix(const char* op, const Formula& operand, PrintStyle style,
                 int min_prec, std::string& out) {
  bool paren = kPrefix < min_prec;
  if (paren) out += '(';
  out += op;
  emit(operand, style, kPrefix, out);
  if (paren) out += ')';
}

void emit_binary(const char* op, int prec, const Formula& l, const Formula& r,
                 PrintStyle style, int min_prec, std::string& out) {
  bool paren = prec < min_prec;
  if (paren) out += '(';
  emit(l, style, prec + 1, out);
  out += op;
  emit(r, style, prec, out);
  if (paren) out += ')';
}

void emit(const Formula& f, PrintStyle style, int min_prec, std::string& out) {
  if (style == PrintStyle::Resugared) {
    Formula inner;
    if (match_dia(f, inner)) return emit_prefix("<>", inner, style, min_prec, out);
    if (is_top(f)) {
      out += 'T';
      return;
    }
    if (match_neg(f, inner)) return emit_prefix("~", inner, style, min_prec, out);
  }
  switch (f.kind()) {
    case Kind::Bot:
      out += 'F';
      return;
    case Kind::Var:
      out += f.name();
      return;
    case Kind::Box:
      return emit_prefix("[]", f.arg(), style, min_prec, out);
    case Kind::And:
      return emit_binary(" & ", kAnd, f.left(), f.right(), style, min_prec, out);
    case Kind::Or:
      return emit_binary(" | ", kOr, f.left(), f.right(), style, min_prec, out);
    case Kind::Imp:
      return emit_binary(" -> ", kImp, f.left(), f.right(), style, min_prec,
                         out);
  }
}

void emit_side(const FMultiset& m, PrintStyle style, std::string& out) {
  bool first = true;
  for (const Formula& f : m) {
    if (!first) out += ", ";
    first = false;
    emit(f, style, kImp, out);
  }
}

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser p(text);
  Formula f = p.formula();
  p.finish();
  return f;
}

Sequent parse_sequent(std::string_view text) {
  Parser p(text);
  return p.sequent();
}

std::string print(const Formula& f, PrintStyle style) {
  std::string out;
  emit(f, style, kImp, out);
  return out;
}

std::string print(const Sequent& s, PrintStyle style) {
  std::string out;
  emit_side(s.left, style, out);
  out += out.empty() ? "=>" : " =>";
  if (!s.right.empty()) {
    out += ' ';
    emit_side(s.right, style, out);
  }
  return out;
}

}  // namespace uipc
