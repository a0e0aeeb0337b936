#include "ga/cli/lexer.hpp"

#include <cctype>
#include <charconv>
#include <system_error>

namespace ga::cli {
namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

class Lexer {
 public:
  Lexer(std::string_view src, int dim) : src_(src), dim_(dim) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\n') {
        if (depth_ == 0) out.push_back(make(TokKind::separator, "\n", here(), 1));
        advance();
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
        continue;
      }
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
        continue;
      }
      if (is_digit(c) || (c == '.' && pos_ + 1 < src_.size() && is_digit(src_[pos_ + 1]))) {
        out.push_back(number());
        continue;
      }
      if (is_ident_start(c)) {
        out.push_back(word());
        continue;
      }
      out.push_back(symbol());
    }
    out.push_back(make(TokKind::end, "", here(), 0));
    return out;
  }

 private:
  Span here() const { return Span{line_, col_, pos_, 0}; }

  void advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++col_;  // count code points, not UTF-8 continuation bytes
    }
  }

  Token make(TokKind kind, std::string lexeme, Span s, std::size_t len) const {
    s.length = len;
    Token t;
    t.kind = kind;
    t.lexeme = std::move(lexeme);
    t.span = s;
    return t;
  }

  [[noreturn]] void fail(const std::string& what, Span s, std::size_t len) const {
    s.length = len;
    throw CliError(what, s);
  }

  Token number() {
    const Span start = here();
    const std::size_t begin = pos_;
    while (pos_ < src_.size() && is_digit(src_[pos_])) advance();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      advance();
      if (pos_ >= src_.size() || !is_digit(src_[pos_])) fail("malformed number: digits expected after '.'", start, pos_ - begin);
      while (pos_ < src_.size() && is_digit(src_[pos_])) advance();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) ++look;
      if (look >= src_.size() || !is_digit(src_[look])) fail("malformed number: exponent digits expected", start, look - begin);
      while (pos_ < look) advance();
      while (pos_ < src_.size() && is_digit(src_[pos_])) advance();
    }
    if (pos_ < src_.size() && (is_ident_char(src_[pos_]) || src_[pos_] == '.')) {
      while (pos_ < src_.size() && (is_ident_char(src_[pos_]) || src_[pos_] == '.')) advance();
      fail("malformed number '" + std::string(src_.substr(begin, pos_ - begin)) + "'", start, pos_ - begin);
    }
    const std::string_view text = src_.substr(begin, pos_ - begin);
    Token t = make(TokKind::number, std::string(text), start, text.size());
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), t.number);
    if (ec != std::errc() || ptr != text.data() + text.size()) fail("malformed number '" + std::string(text) + "'", start, text.size());
    return t;
  }

  /// Adds 1-based index i to a blade literal, tracking the reordering sign.
  void add_index(Token& t, long i, Span s, std::size_t len) const {
    if (i < 1 || i > dim_) {
      fail("blade index " + std::to_string(i) + " outside 1.." + std::to_string(dim_), s, len);
    }
    const BladeMask bit = BladeMask{1} << (i - 1);
    if (t.mask & bit) fail("repeated index " + std::to_string(i) + " in blade literal", s, len);
    if (std::popcount(t.mask & ~((bit << 1) - 1)) & 1) t.sign = -t.sign;
    t.mask |= bit;
  }

  Token word() {
    const Span start = here();
    const std::size_t begin = pos_;
    while (pos_ < src_.size() && is_ident_char(src_[pos_])) advance();
    const std::string_view text = src_.substr(begin, pos_ - begin);

    if (text == "e" && pos_ < src_.size() && src_[pos_] == '[') return bracket_blade(start, begin);

    const bool digits_only = text.size() > 1 && text[0] == 'e' &&
                             text.substr(1).find_first_not_of("0123456789") == std::string_view::npos;
    if (!digits_only) return make(TokKind::ident, std::string(text), start, text.size());

    Token t = make(TokKind::blade, std::string(text), start, text.size());
    if (dim_ >= 10 && text.size() > 2) {
      fail("ambiguous blade literal '" + std::string(text) + "' for dim " + std::to_string(dim_) +
               "; write it as e[" + std::string(text.substr(1, 1)) + ",...]",
           start, text.size());
    }
    for (char d : text.substr(1)) add_index(t, d - '0', start, text.size());
    return t;
  }

  Token bracket_blade(Span start, std::size_t begin) {
    Token t = make(TokKind::blade, "", start, 0);
    advance();  // '['
    bool need_index = true;
    while (true) {
      while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) advance();
      if (pos_ >= src_.size()) fail("unterminated blade literal", start, pos_ - begin);
      const char c = src_[pos_];
      if (need_index) {
        if (!is_digit(c)) fail("blade index expected", here(), 1);
        const Span is = here();
        const std::size_t ib = pos_;
        while (pos_ < src_.size() && is_digit(src_[pos_])) advance();
        long idx = 0;
        const auto digits = src_.substr(ib, pos_ - ib);
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), idx);
        if (ec != std::errc() || ptr != digits.data() + digits.size()) idx = -1;
        add_index(t, idx, is, digits.size());
        need_index = false;
      } else if (c == ',') {
        advance();
        need_index = true;
      } else if (c == ']') {
        advance();
        break;
      } else {
        fail("',' or ']' expected in blade literal", here(), 1);
      }
    }
    t.lexeme = std::string(src_.substr(begin, pos_ - begin));
    t.span.length = pos_ - begin;
    return t;
  }

  Token symbol() {
    const Span start = here();
    const char c = src_[pos_];
    // U+00B7 MIDDLE DOT, the printed product sign, reads as '*'.
    if (static_cast<unsigned char>(c) == 0xC2 && pos_ + 1 < src_.size() &&
        static_cast<unsigned char>(src_[pos_ + 1]) == 0xB7) {
      advance();
      advance();
      return make(TokKind::op, "*", start, 2);
    }
    auto two = [&](char second) { return pos_ + 1 < src_.size() && src_[pos_ + 1] == second; };
    switch (c) {
      case '+': case '-': case '*': case '^': case '|': case '=':
        advance();
        return make(TokKind::op, std::string(1, c), start, 1);
      case '<': case '>':
        if (two(c)) {
          advance();
          advance();
          return make(TokKind::op, std::string(2, c), start, 2);
        }
        fail(std::string("unexpected character '") + c + "'; did you mean '" + std::string(2, c) + "'?", start, 1);
      case '(': case '[':
        ++depth_;
        advance();
        return make(TokKind::punct, std::string(1, c), start, 1);
      case ')': case ']':
        if (depth_ > 0) --depth_;
        advance();
        return make(TokKind::punct, std::string(1, c), start, 1);
      case ',':
        advance();
        return make(TokKind::punct, ",", start, 1);
      case ';':
        advance();
        return make(TokKind::separator, ";", start, 1);
      default:
        break;
    }
    if (static_cast<unsigned char>(c) >= 0x80) fail("illegal character (non-ASCII)", start, 1);
    if (std::isprint(static_cast<unsigned char>(c))) fail(std::string("illegal character '") + c + "'", start, 1);
    fail("illegal character (code " + std::to_string(static_cast<unsigned char>(c)) + ")", start, 1);
  }

  std::string_view src_;
  int dim_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  int depth_ = 0;
};

}  // namespace

std::vector<Token> tokenize(std::string_view input, int dim) { return Lexer(input, dim).run(); }

}  // namespace ga::cli
