#include "parabose/parse.hpp"

#include <cctype>
#include <limits>

namespace parabose {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Element parse() {
    Element e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  // Raw lookahead without skipping whitespace.
  char at(std::size_t k) const { return k < text_.size() ? text_[k] : '\0'; }

  static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

  Element expr() {
    Element out;
    Scalar sign = 1;
    char c = peek();
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      ++pos_;
    }
    out += term() * sign;
    for (;;) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      out += term() * Scalar(c == '-' ? -1 : 1);
    }
    return out;
  }

  bool starts_factor(char c) const {
    return is_digit(c) || c == '(' || c == 'i' || c == 'B' || c == 'E' || c == 'g' || c == 'K' ||
           c == 'I';
  }

  Element term() {
    Element out = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        out = out * factor();
      } else if (starts_factor(c)) {
        out = out * factor();
      } else {
        break;
      }
    }
    return out;
  }

  std::uint64_t integer() {
    if (!is_digit(at(pos_))) fail("expected digits");
    std::uint64_t value = 0;
    while (is_digit(at(pos_))) {
      std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) fail("integer too large");
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  std::uint32_t mode_index() {
    std::uint64_t v = integer();
    if (v > std::numeric_limits<std::uint32_t>::max()) fail("mode index too large");
    if (v == 0) fail("mode indices start at 1");
    return static_cast<std::uint32_t>(v);
  }

  Sign sign_token() {
    char c = at(pos_);
    if (c != '+' && c != '-') fail("expected '+' or '-'");
    ++pos_;
    return c == '+' ? Sign::Plus : Sign::Minus;
  }

  Element number() {
    mpz_class num;
    std::size_t start = pos_;
    while (is_digit(at(pos_))) ++pos_;
    num.set_str(std::string(text_.substr(start, pos_ - start)), 10);
    mpq_class q(num);
    if (at(pos_) == '/') {
      ++pos_;
      start = pos_;
      if (!is_digit(at(pos_))) fail("expected denominator");
      while (is_digit(at(pos_))) ++pos_;
      mpz_class den(std::string(text_.substr(start, pos_ - start)), 10);
      if (den == 0) fail("zero denominator");
      q = mpq_class(num, den);
    }
    return Element::scalar(Scalar(q));
  }

  Element factor() {
    char c = peek();
    if (c == '\0') fail("unexpected end of expression");
    if (is_digit(c)) return number();
    if (c == '(') {
      ++pos_;
      Element inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    ++pos_;
    switch (c) {
      case 'i':
        return Element::scalar(Scalar::imaginary_unit());
      case 'I':
        return Element::unit();
      case 'g':
        return Generator::g();
      case 'K':
        return sign_token() == Sign::Plus ? Generator::k_plus() : Generator::k_minus();
      case 'B': {
        Sign s = sign_token();
        return Generator::b(s, mode_index());
      }
      case 'E': {
        if (at(pos_) != '(') fail("expected '(' after E");
        ++pos_;
        std::uint32_t i = mode_index();
        Sign si = sign_token();
        if (at(pos_) != ',') fail("expected ','");
        ++pos_;
        std::uint32_t j = mode_index();
        Sign sj = sign_token();
        if (at(pos_) != ')') fail("expected ')'");
        ++pos_;
        return Generator::e(i, si, j, sj);
      }
      default:
        --pos_;
        fail("unexpected character '" + std::string(1, c) + "'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(std::string_view text) { return Parser(text).parse(); }

}  // namespace parabose
