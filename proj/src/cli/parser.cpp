#include "ga/cli/parser.hpp"

#include <cstdio>
#include <initializer_list>

namespace ga::cli {
namespace {

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokKind::end: return "end of input";
    case TokKind::separator: return t.lexeme == ";" ? "';'" : "end of line";
    default: return "'" + t.lexeme + "'";
  }
}

Span join(const Span& a, const Span& b) {
  Span s = a;
  s.length = b.offset + b.length > a.offset ? b.offset + b.length - a.offset : a.length;
  return s;
}

class Parser {
 public:
  explicit Parser(const std::vector<Token>& toks) : toks_(toks) {}

  std::vector<NodePtr> program() {
    std::vector<NodePtr> out;
    while (true) {
      while (peek().kind == TokKind::separator) ++pos_;
      if (peek().kind == TokKind::end) break;
      out.push_back(statement());
      if (peek().kind != TokKind::separator && peek().kind != TokKind::end) {
        fail("expected ';', end of line or end of input");
      }
    }
    return out;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool is(TokKind k, const char* lex) const { return peek().kind == k && peek().lexeme == lex; }

  [[noreturn]] void fail(const std::string& expected) const {
    throw CliError(expected + ", found " + describe(peek()), peek().span);
  }

  void expect(TokKind k, const char* lex) {
    if (!is(k, lex)) fail(std::string("expected '") + lex + "'");
    ++pos_;
  }

  NodePtr statement() {
    if (peek().kind == TokKind::ident && peek(1).kind == TokKind::op && peek(1).lexeme == "=") {
      auto n = std::make_unique<Node>();
      n->kind = NodeKind::assign;
      n->name = peek().lexeme;
      n->span = peek().span;
      pos_ += 2;
      n->children.push_back(expr());
      n->span = join(n->span, n->children.back()->span);
      return n;
    }
    return expr();
  }

  /// Keeps pathological nesting from exhausting the stack.
  struct DepthGuard {
    explicit DepthGuard(Parser& p) : p_(p) {
      if (++p_.depth_ > kMaxDepth) p_.fail("expression nested too deeply");
    }
    ~DepthGuard() { --p_.depth_; }
    Parser& p_;
  };

  NodePtr expr() {
    DepthGuard guard(*this);
    return sum();
  }

  template <typename Next>
  NodePtr left_assoc(std::initializer_list<const char*> ops, Next next) {
    NodePtr lhs = (this->*next)();
    while (true) {
      const char* hit = nullptr;
      for (const char* op : ops)
        if (is(TokKind::op, op)) hit = op;
      if (!hit) return lhs;
      ++pos_;
      NodePtr rhs = (this->*next)();
      auto n = std::make_unique<Node>();
      n->kind = NodeKind::binary;
      n->name = hit;
      n->span = join(lhs->span, rhs->span);
      n->children.push_back(std::move(lhs));
      n->children.push_back(std::move(rhs));
      lhs = std::move(n);
    }
  }

  NodePtr sum() { return left_assoc({"+", "-"}, &Parser::dot); }
  NodePtr dot() { return left_assoc({"|"}, &Parser::contraction); }
  NodePtr contraction() { return left_assoc({"<<", ">>"}, &Parser::wedge); }
  NodePtr wedge() { return left_assoc({"^"}, &Parser::product); }
  NodePtr product() { return left_assoc({"*"}, &Parser::unary); }

  NodePtr unary() {
    if (is(TokKind::op, "-")) {
      DepthGuard guard(*this);
      const Span s = take().span;
      auto n = std::make_unique<Node>();
      n->kind = NodeKind::negate;
      n->children.push_back(unary());
      n->span = join(s, n->children.back()->span);
      return n;
    }
    return postfix();
  }

  NodePtr postfix() {
    NodePtr callee = primary();
    while (is(TokKind::punct, "(")) {
      ++pos_;
      auto n = std::make_unique<Node>();
      n->kind = NodeKind::call;
      if (callee->kind == NodeKind::variable) n->name = callee->name;
      n->span = callee->span;
      n->children.push_back(std::move(callee));
      if (!is(TokKind::punct, ")")) {
        n->children.push_back(expr());
        while (is(TokKind::punct, ",")) {
          ++pos_;
          n->children.push_back(expr());
        }
      }
      if (!is(TokKind::punct, ")")) fail("expected ',' or ')'");
      n->span = join(n->span, take().span);
      callee = std::move(n);
    }
    return callee;
  }

  NodePtr primary() {
    const Token& t = peek();
    auto n = std::make_unique<Node>();
    n->span = t.span;
    switch (t.kind) {
      case TokKind::number:
        n->kind = NodeKind::number;
        n->number = t.number;
        ++pos_;
        return n;
      case TokKind::blade:
        n->kind = NodeKind::blade;
        n->mask = t.mask;
        n->sign = t.sign;
        n->name = t.lexeme;
        ++pos_;
        return n;
      case TokKind::ident:
        if (t.lexeme == "mat" && peek(1).kind == TokKind::punct && peek(1).lexeme == "[") return matrix();
        n->kind = NodeKind::variable;
        n->name = t.lexeme;
        ++pos_;
        return n;
      case TokKind::punct:
        if (t.lexeme == "(") {
          ++pos_;
          NodePtr inner = expr();
          if (!is(TokKind::punct, ")")) fail("expected ')'");
          ++pos_;
          return inner;
        }
        break;
      default:
        break;
    }
    fail("expected a number, blade, name, '(' or '-'");
  }

  NodePtr matrix() {
    auto n = std::make_unique<Node>();
    n->kind = NodeKind::matrix;
    n->span = take().span;  // mat
    expect(TokKind::punct, "[");
    do {
      if (is(TokKind::punct, ",")) ++pos_;
      const Span row_start = peek().span;
      expect(TokKind::punct, "[");
      std::size_t count = 0;
      if (!is(TokKind::punct, "]")) {
        n->children.push_back(expr());
        ++count;
        while (is(TokKind::punct, ",")) {
          ++pos_;
          n->children.push_back(expr());
          ++count;
        }
      }
      if (!is(TokKind::punct, "]")) fail("expected ',' or ']' in matrix row");
      ++pos_;
      if (count == 0) throw CliError("empty matrix row", row_start);
      if (n->rows == 0) {
        n->cols = count;
      } else if (count != n->cols) {
        throw CliError("matrix row " + std::to_string(n->rows + 1) + " has " + std::to_string(count) +
                           " entries, expected " + std::to_string(n->cols),
                       row_start);
      }
      ++n->rows;
    } while (is(TokKind::punct, ","));
    if (!is(TokKind::punct, "]")) fail("expected ',' or ']' after matrix row");
    n->span = join(n->span, take().span);
    return n;
  }

  static constexpr int kMaxDepth = 200;

  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

std::string number_text(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::vector<NodePtr> parse_program(const std::vector<Token>& tokens) { return Parser(tokens).program(); }

std::vector<NodePtr> parse_program(std::string_view source, int dim) {
  return parse_program(tokenize(source, dim));
}

std::string to_string(const Node& n) {
  switch (n.kind) {
    case NodeKind::number: return number_text(n.number);
    case NodeKind::blade: return n.name;
    case NodeKind::variable: return n.name;
    case NodeKind::negate: return "(-" + to_string(*n.children[0]) + ")";
    case NodeKind::binary:
      return "(" + to_string(*n.children[0]) + " " + n.name + " " + to_string(*n.children[1]) + ")";
    case NodeKind::assign: return n.name + " = " + to_string(*n.children[0]);
    case NodeKind::call: {
      std::string s = to_string(*n.children[0]) + "(";
      for (std::size_t i = 1; i < n.children.size(); ++i) s += (i > 1 ? ", " : "") + to_string(*n.children[i]);
      return s + ")";
    }
    case NodeKind::matrix: {
      std::string s = "mat[";
      for (std::size_t r = 0; r < n.rows; ++r) {
        s += r ? ", [" : "[";
        for (std::size_t c = 0; c < n.cols; ++c) s += (c ? ", " : "") + to_string(*n.children[r * n.cols + c]);
        s += "]";
      }
      return s + "]";
    }
  }
  return "?";
}

}  // namespace ga::cli
