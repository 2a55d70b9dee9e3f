#include <cctype>

#include "creg/polynomial.hpp"

namespace creg {

namespace {

struct Parser {
  const RingPtr& ring;
  MonomialOrder order;
  const std::string& s;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
  }

  long long integer() {
    skip();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return std::stoll(s.substr(start, pos - start));
  }

  Polynomial base() {
    skip();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      Polynomial e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial::constant(ring, integer()).with_order(order);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
      std::string name = s.substr(start, pos - start);
      for (int i = 0; i < ring->nvars; ++i)
        if (ring->names[i] == name) return Polynomial::variable(ring, i).with_order(order);
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected character");
  }

  Polynomial factor() {
    Polynomial b = base();
    if (eat('^')) {
      long long e = integer();
      if (e < 0) fail("negative exponent");
      Polynomial r = Polynomial::constant(ring, 1).with_order(order);
      for (long long i = 0; i < e; ++i) r = r * b;
      return r;
    }
    return b;
  }

  Polynomial term() {
    Polynomial f = factor();
    while (eat('*')) f = f * factor();
    return f;
  }

  Polynomial expr() {
    skip();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Polynomial acc = term();
    if (neg) acc = -acc;
    while (true) {
      skip();
      if (pos >= s.size()) break;
      if (s[pos] == '+') {
        ++pos;
        acc = acc + term();
      } else if (s[pos] == '-') {
        ++pos;
        acc = acc - term();
      } else {
        break;
      }
    }
    return acc;
  }
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& r, const std::string& text, std::optional<MonomialOrder> order) {
  MonomialOrder ord = order.value_or(MonomialOrder::grevlex(r->nvars));
  Parser p{r, ord, text};
  Polynomial f = p.expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return f;
}

}  // namespace creg
