#include "deq/literal.hpp"

#include <cctype>

namespace deq {

namespace {

class LiteralParser {
 public:
  LiteralParser(const Field& field, std::string_view text) : field_(field), text_(text) {}

  Scalar parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty literal");
    Scalar value = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw LiteralError(msg, pos_ + 1); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar value = term();
    for (;;) {
      if (accept('+')) value += term();
      else if (accept('-')) value -= term();
      else return value;
    }
  }

  Scalar term() {
    Scalar value = unary();
    for (;;) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Scalar d = unary();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        value /= d;
      } else {
        return value;
      }
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = primary();
    if (!accept('^')) return base;
    const bool negative = accept('-');
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    if (pos_ - start > 6) fail("exponent too large");
    const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
    Scalar result = field_.one();
    for (unsigned long i = 0; i < e; ++i) result *= base;
    if (negative) {
      if (result.is_zero()) fail("negative power of zero");
      result = result.inverse();
    }
    return result;
  }

  Scalar primary() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of literal");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar value = expr();
      if (!accept(')')) fail("expected ')'");
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return field_.from_rational(mpq_class(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const auto name = text_.substr(start, pos_ - start);
      if (field_.kind() != FieldKind::rational_functions) {
        pos_ = start;
        fail("symbol '" + std::string(name) + "' is not allowed in field " + field_.header());
      }
      try {
        return field_.variable(name);
      } catch (const std::invalid_argument& e) {
        pos_ = start;
        fail(e.what());
      }
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const Field& field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(const Field& field, std::string_view text) { return LiteralParser(field, text).parse(); }

}  // namespace deq
