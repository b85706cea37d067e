#include <cctype>
#include <string>

#include "lehmer/error.hpp"
#include "lehmer/quadring.hpp"

namespace lehmer {

namespace {

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  QuadInt parse() {
    skip_space();
    Integer x, y, d;
    if (peek() == '(') {
      ++pos_;
      parse_body(x, y, d);
      expect(')');
      expect('/');
      skip_space();
      const std::size_t at = pos_;
      if (unsigned_integer() != 2) fail(at, "expected denominator 2");
    } else {
      parse_body(x, y, d);
      x *= 2;
      y *= 2;
    }
    skip_space();
    if (pos_ != text_.size()) fail(pos_, "unexpected trailing input");
    return QuadInt::make(d, x, y);
  }

 private:
  [[noreturn]] void fail(std::size_t at, const std::string& why) const {
    throw Error(ErrorCode::ParseError,
                "column " + std::to_string(at) + ": " + why + " in '" + std::string(text_) + "'");
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  void expect_word(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) fail(pos_, "expected '" + std::string(word) + "'");
    pos_ += word.size();
  }

  Integer unsigned_integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(start, "expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  // [sign] integer
  Integer signed_integer() {
    skip_space();
    int sign = 1;
    while (peek() == '+' || peek() == '-') {
      if (peek() == '-') sign = -sign;
      ++pos_;
      skip_space();
    }
    Integer v = unsigned_integer();
    return sign < 0 ? Integer(-v) : v;
  }

  // [sign] a (+|-) [sign] b * sqrt ( d )
  void parse_body(Integer& a, Integer& b, Integer& d) {
    a = signed_integer();
    skip_space();
    if (peek() != '+' && peek() != '-') fail(pos_, "expected '+' or '-' before the surd term");
    b = signed_integer();
    expect('*');
    expect_word("sqrt");
    expect('(');
    skip_space();
    d = unsigned_integer();
    expect(')');
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

QuadInt parse_quad(std::string_view text) { return LiteralParser(text).parse(); }

}  // namespace lehmer
