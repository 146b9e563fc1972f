#include "sexakit/expr.hpp"

#include "sexakit/errors.hpp"
#include "sexakit/procedures.hpp"

#include <string>

namespace sexakit {

namespace {

enum class Tok { Number, Plus, Minus, Times, Divide, LParen, RParen, End };

class Parser {
 public:
  Parser(std::string_view src, DivisionMode mode) : src_(src), mode_(mode) { advance(); }

  Sexa run() {
    Sexa v = expression();
    if (tok_ != Tok::End) fail("unexpected input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ExpressionSyntax,
                what + " at offset " + std::to_string(tok_start_) + " in '" +
                    std::string(src_) + "'");
  }

  static bool literal_char(char c) {
    return (c >= '0' && c <= '9') || c == ',' || c == ';' || c == ':';
  }

  void advance() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
    tok_start_ = pos_;
    if (pos_ == src_.size()) {
      tok_ = Tok::End;
      return;
    }
    char c = src_[pos_];
    if (literal_char(c)) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && literal_char(src_[pos_])) ++pos_;
      number_ = Sexa::parse(src_.substr(start, pos_ - start));
      tok_ = Tok::Number;
      return;
    }
    auto starts = [&](std::string_view s) { return src_.substr(pos_, s.size()) == s; };
    if (starts("\xC3\x97")) {
      pos_ += 2;
      tok_ = Tok::Times;
      return;
    }
    if (starts("\xC3\xB7")) {
      pos_ += 2;
      tok_ = Tok::Divide;
      return;
    }
    ++pos_;
    switch (c) {
      case '+': tok_ = Tok::Plus; return;
      case '-': tok_ = Tok::Minus; return;
      case '*':
      case 'x': tok_ = Tok::Times; return;
      case '/': tok_ = Tok::Divide; return;
      case '(': tok_ = Tok::LParen; return;
      case ')': tok_ = Tok::RParen; return;
      default: break;
    }
    --pos_;
    fail(std::string("unexpected character '") + c + "'");
  }

  Sexa expression() {
    Sexa v = term();
    while (tok_ == Tok::Plus || tok_ == Tok::Minus) {
      Tok op = tok_;
      advance();
      Sexa rhs = term();
      v = op == Tok::Plus ? v + rhs : v - rhs;
    }
    return v;
  }

  Sexa term() {
    Sexa v = unary();
    while (tok_ == Tok::Times || tok_ == Tok::Divide) {
      Tok op = tok_;
      advance();
      Sexa rhs = unary();
      v = op == Tok::Times ? v * rhs : divide(v, rhs);
    }
    return v;
  }

  Sexa unary() {
    if (tok_ == Tok::Minus) {
      advance();
      return -unary();
    }
    return primary();
  }

  Sexa primary() {
    if (tok_ == Tok::Number) {
      Sexa v = number_;
      advance();
      return v;
    }
    if (tok_ == Tok::LParen) {
      advance();
      Sexa v = expression();
      if (tok_ != Tok::RParen) fail("expected ')'");
      advance();
      return v;
    }
    fail(tok_ == Tok::End ? "unexpected end of expression" : "expected a number");
  }

  Sexa divide(const Sexa& n, const Sexa& d) const {
    switch (mode_) {
      case DivisionMode::Scribal: return n * reciprocal(d);
      case DivisionMode::Recognize: return divide_by_recognition(n, d);
      case DivisionMode::Oracle:
        if (d.is_zero()) throw Error(ErrorKind::ZeroDivisor, "division by 0");
        return n * exact_inverse(d);
    }
    return n;
  }

  std::string_view src_;
  DivisionMode mode_;
  std::size_t pos_ = 0;
  std::size_t tok_start_ = 0;
  Tok tok_ = Tok::End;
  Sexa number_;
};

}  // namespace

Sexa evaluate(std::string_view expression, DivisionMode mode) {
  return Parser(expression, mode).run();
}

}  // namespace sexakit
