#include "gpi/parser.hpp"

#include <cctype>

namespace gpi {

std::map<char, int> default_prefixes() { return {{'y', 0}, {'z', 1}}; }

namespace {

// Element of the free algebra extended by the span of the acting basis, so
// border-only factors like "w1" can appear mid-expression.
struct PExpr {
  GenPolynomial poly;
  std::map<int, Scalar> borders;  // acting basis index -> coefficient
};

PExpr px_add(const PExpr& a, const PExpr& b) {
  PExpr out = a;
  gp_accumulate_all(out.poly, b.poly);
  for (const auto& [w, c] : b.borders) {
    auto& slot = out.borders[w];
    slot += c;
    if (slot == 0) out.borders.erase(w);
  }
  return out;
}

PExpr px_scale(const Scalar& c, const PExpr& a) {
  PExpr out;
  if (c == 0) return out;
  out.poly = gp_scale(c, a.poly);
  for (const auto& [w, v] : a.borders) out.borders.emplace(w, c * v);
  return out;
}

PExpr px_mul(const ActingAlgebra& W, const PExpr& a, const PExpr& b) {
  PExpr out;
  out.poly = gp_mul(W, a.poly, b.poly);
  for (const auto& [w, c] : a.borders)
    gp_accumulate_all(out.poly, gp_scale(c, left_act(W, w, b.poly)));
  for (const auto& [w, c] : b.borders)
    gp_accumulate_all(out.poly, gp_scale(c, right_act(W, a.poly, w)));
  for (const auto& [wa, ca] : a.borders)
    for (const auto& [wb, cb] : b.borders)
      for (const auto& [w, c] : W.product(wa, wb)) {
        auto& slot = out.borders[w];
        slot += ca * cb * c;
        if (slot == 0) out.borders.erase(w);
      }
  return out;
}

struct Parser {
  const ActingAlgebra& W;
  const std::map<char, int>& prefixes;
  const std::string& text;
  std::size_t pos = 0;

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos); }

  int number() {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    return std::stoi(text.substr(start, pos - start));
  }

  PExpr factor() {
    skip();
    if (pos >= text.size()) fail("unexpected end of input");
    const char c = text[pos];
    if (c == '(') {
      ++pos;
      PExpr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Scalar num(number());
      if (eat('/')) num /= Scalar(number());
      PExpr e;
      e.borders.emplace(0, num);  // rational literal = multiple of the unit
      return e;
    }
    if (c == 'w') {
      ++pos;
      const int i = number();
      PExpr e;
      if (i < W.dim()) e.borders.emplace(i, Scalar(1));
      // Indices beyond the acting basis act as zero (kernel convention).
      return e;
    }
    auto it = prefixes.find(c);
    if (it != prefixes.end()) {
      ++pos;
      const int j = number();
      if (j < 1) fail("variable indices start at 1");
      PExpr e;
      e.poly = gp_var(j, it->second);
      return e;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  PExpr term() {
    PExpr e = factor();
    for (;;) {
      skip();
      if (eat('*'))
        e = px_mul(W, e, factor());
      else
        return e;
    }
  }

  PExpr expr() {
    skip();
    PExpr e;
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    e = term();
    if (neg) e = px_scale(Scalar(-1), e);
    for (;;) {
      skip();
      if (eat('+'))
        e = px_add(e, term());
      else if (eat('-'))
        e = px_add(e, px_scale(Scalar(-1), term()));
      else
        return e;
    }
  }
};

}  // namespace

GenPolynomial parse_polynomial(const ActingAlgebra& W, const std::string& text,
                               const std::map<char, int>& prefixes) {
  Parser p{W, prefixes, text};
  PExpr e = p.expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  if (!e.borders.empty())
    throw ParseError("border-only term is not a free-algebra element", text.size());
  return e.poly;
}

}  // namespace gpi
