#include "multlab/parser.hpp"

#include <algorithm>
#include <cctype>

namespace multlab {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

template <ExactField F>
class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars, const F& field)
      : text_(text), vars_(vars), field_(field) {}

  Polynomial<F> run() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    Polynomial<F> p = expr();
    skip_ws();
    if (pos_ != text_.size()) unexpected();
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  [[noreturn]] void unexpected() {
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (ident_start(c) || digit(c) || c == '(') {
      throw ParseError("implicit multiplication is not allowed; use '*'", pos_);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  Polynomial<F> expr() {
    bool negate = false;
    char c = peek();
    if (c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    Polynomial<F> acc = term();
    if (negate) acc = -acc;
    for (;;) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial<F> t = term();
      acc = c == '+' ? acc + t : acc - t;
    }
    return acc;
  }

  Polynomial<F> term() {
    Polynomial<F> acc = factor();
    while (peek() == '*') {
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial<F> factor() {
    Polynomial<F> b = base();
    if (peek() != '^') return b;
    const std::size_t caret = pos_;
    ++pos_;
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !digit(text_[pos_])) {
      throw ParseError("expected a non-negative integer exponent", pos_);
    }
    std::uint64_t k = 0;
    while (pos_ < text_.size() && digit(text_[pos_])) {
      k = k * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (k > kMaxExponent) {
        throw ExponentOverflow("exponent exceeds " + std::to_string(kMaxExponent), start);
      }
      ++pos_;
    }
    const long deg = b.degree();
    if (deg > 0 && static_cast<std::uint64_t>(deg) * k > kMaxExponent) {
      throw ExponentOverflow("power raises the degree beyond " + std::to_string(kMaxExponent),
                             caret);
    }
    return b.pow(static_cast<std::uint32_t>(k));
  }

  Polynomial<F> base() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial<F> inner = expr();
      if (peek() != ')') {
        if (pos_ >= text_.size()) throw ParseError("missing ')'", pos_);
        unexpected();
      }
      ++pos_;
      return inner;
    }
    if (digit(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
      mpz_class n(std::string(text_.substr(start, pos_ - start)), 10);
      return Polynomial<F>::constant(field_, vars_, field_.from_integer(n));
    }
    if (ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) throw UnknownVariable("unknown variable '" + name + "'", start);
      return Polynomial<F>::variable(field_, vars_, static_cast<std::size_t>(it - vars_.begin()));
    }
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  const F& field_;
  std::size_t pos_ = 0;
};

}  // namespace

template <ExactField F>
Polynomial<F> parse_polynomial(std::string_view text, const std::vector<std::string>& vars,
                               const F& field) {
  return Parser<F>(text, vars, field).run();
}

template Polynomial<PrimeField> parse_polynomial(std::string_view, const std::vector<std::string>&,
                                                 const PrimeField&);
template Polynomial<RationalField> parse_polynomial(std::string_view,
                                                    const std::vector<std::string>&,
                                                    const RationalField&);

}  // namespace multlab
