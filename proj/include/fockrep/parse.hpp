#pragma once

// Element expressions:
//   gl      E[i,j]
//   loop    E[i,j]*t^m
//   witt    L[m]
//   qtorus  E[i,j]*x^m*y^n
//   weyl    E[i,j]*q^k*p^l     (l >= 0)
// combined linearly with rational coefficients, e.g. "3/2*E[1,2]*t^-1 - E[2,1]*t^1".
// Omitted factors have exponent 0; a bare variable means exponent 1.

#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fockrep/algebra.hpp"

namespace fockrep {

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, std::string token, const std::string& what)
      : std::invalid_argument("at position " + std::to_string(position) + " near '" + token + "': " + what),
        position_(position),
        token_(std::move(token)) {}

  [[nodiscard]] std::size_t position() const { return position_; }
  [[nodiscard]] const std::string& token() const { return token_; }

 private:
  std::size_t position_;
  std::string token_;
};

namespace detail {

class ElementParser {
 public:
  ElementParser(std::string_view text, const Realization& R) : text_(text), R_(R) {}

  LieElement parse() {
    LieElement out;
    skip_ws();
    if (at_end()) fail("empty expression");
    if (peek() == '0') {
      std::size_t save = pos_;
      ++pos_;
      skip_ws();
      if (at_end()) return out;
      pos_ = save;
    }
    bool first = true;
    while (true) {
      skip_ws();
      Scalar sign(1);
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        if (peek() == '-') sign = Scalar(-1);
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [sym, c] = term();
      R_.model().validate(sym);
      out.add(sym, sign * c);
      skip_ws();
      if (at_end()) break;
    }
    return out;
  }

 private:
  [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
  [[nodiscard]] char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    std::size_t end = pos_;
    while (end < text_.size() && !std::isspace(static_cast<unsigned char>(text_[end])) && end - pos_ < 8) ++end;
    std::string token = at_end() ? std::string("<end>") : std::string(text_.substr(pos_, std::max<std::size_t>(1, end - pos_)));
    throw ParseError(pos_, token, what);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::int64_t integer(bool allow_sign) {
    skip_ws();
    bool neg = false;
    if (allow_sign && !at_end() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++pos_;
      skip_ws();
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    std::int64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > 100000000000LL) fail("integer too large");
      v = v * 10 + (peek() - '0');
      ++pos_;
    }
    return neg ? -v : v;
  }

  std::pair<BasisSymbol, Scalar> term() {
    skip_ws();
    Scalar coeff(1);
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num(static_cast<long>(integer(false)));
      Integer den(1);
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        std::size_t at = pos_;
        den = Integer(static_cast<long>(integer(false)));
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
      }
      coeff = Scalar(num, den);
      expect('*');
    }
    return {symbol(), coeff};
  }

  BasisSymbol symbol() {
    skip_ws();
    const AlgebraKind kind = R_.kind();
    if (kind == AlgebraKind::witt) {
      if (at_end() || peek() != 'L') fail("expected 'L[m]'");
      ++pos_;
      expect('[');
      std::int64_t m = integer(true);
      expect(']');
      return BasisSymbol::witt(m);
    }
    if (at_end() || peek() != 'E') fail("expected 'E[i,j]'");
    ++pos_;
    expect('[');
    const std::size_t row_at = pos_;
    std::int64_t i = integer(false);
    expect(',');
    std::int64_t j = integer(false);
    expect(']');
    if (i < 1 || j < 1 || i > R_.config().n || j > R_.config().n) {
      pos_ = row_at;
      fail("matrix subscript out of range 1.." + std::to_string(R_.config().n));
    }

    // Allowed variables, in the order they must appear.
    std::string vars;
    switch (kind) {
      case AlgebraKind::gl: vars = ""; break;
      case AlgebraKind::loop: vars = "t"; break;
      case AlgebraKind::qtorus: vars = "xy"; break;
      case AlgebraKind::weyl: vars = "qp"; break;
      case AlgebraKind::witt: break;
    }
    std::int64_t exps[2] = {0, 0};
    std::size_t next = 0;
    while (true) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      std::size_t star = pos_;
      ++pos_;
      skip_ws();
      if (at_end()) fail("expected a variable after '*'");
      auto slot = vars.find(peek(), next);
      if (slot == std::string::npos) {
        if (vars.find(peek()) != std::string::npos) fail("variable repeated or out of order");
        pos_ = star;
        fail("unexpected factor for algebra '" + to_string(kind) + "'");
      }
      ++pos_;
      skip_ws();
      std::int64_t e = 1;
      std::size_t exp_at = pos_;
      if (!at_end() && peek() == '^') {
        ++pos_;
        exp_at = pos_;
        e = integer(true);
      }
      if (kind == AlgebraKind::weyl && slot == 1 && e < 0) {
        pos_ = exp_at;
        fail("p exponent must be non-negative");
      }
      exps[slot] = e;
      next = slot + 1;
    }
    return {kind, static_cast<int>(i), static_cast<int>(j), exps[0], exps[1]};
  }

  std::string_view text_;
  const Realization& R_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline LieElement parse_element(const Realization& R, std::string_view text) {
  return detail::ElementParser(text, R).parse();
}

inline std::string render(const BasisSymbol& s) {
  auto e = [](char v, std::int64_t n) { return std::string("*") + v + "^" + std::to_string(n); };
  std::string head = "E[" + std::to_string(s.i) + "," + std::to_string(s.j) + "]";
  switch (s.kind) {
    case AlgebraKind::gl: return head;
    case AlgebraKind::loop: return head + e('t', s.a);
    case AlgebraKind::witt: return "L[" + std::to_string(s.a) + "]";
    case AlgebraKind::qtorus: return head + e('x', s.a) + e('y', s.b);
    case AlgebraKind::weyl: return head + e('q', s.a) + e('p', s.b);
  }
  return head;
}

inline std::string render(const LieElement& x) {
  if (x.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : x) {
    Scalar mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (mag != Scalar(1)) out += mag.str() + "*";
    out += render(s);
    first = false;
  }
  return out;
}

}  // namespace fockrep
