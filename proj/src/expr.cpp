#include "cusp/expr.hpp"

#include <cctype>

namespace cusp {

namespace {

[[noreturn]] void parse_fail(size_t pos, const std::string& msg) {
  fail(Err::ParseError, "parse error at " + std::to_string(pos) + ": " + msg);
}

struct Token {
  enum class Type { Int, Ident, Op, End };
  Type type = Type::End;
  std::string text;
  size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& cur() const { return cur_; }

  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    cur_.pos = i_;
    if (i_ >= s_.size()) {
      cur_ = Token{Token::Type::End, "", i_};
      return;
    }
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      cur_ = Token{Token::Type::Int, s_.substr(i_, j - i_), i_};
      i_ = j;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i_;
      while (j < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) {
        ++j;
      }
      cur_ = Token{Token::Type::Ident, s_.substr(i_, j - i_), i_};
      i_ = j;
      return;
    }
    if (std::string("+-*/^()").find(c) != std::string::npos) {
      cur_ = Token{Token::Type::Op, std::string(1, c), i_};
      ++i_;
      return;
    }
    parse_fail(i_, std::string("unexpected character '") + c + "'");
  }

 private:
  const std::string& s_;
  size_t i_ = 0;
  Token cur_;
};

class Parser {
 public:
  explicit Parser(const std::string& s) : lex_(s) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    if (lex_.cur().type != Token::Type::End) {
      parse_fail(lex_.cur().pos, "trailing input '" + lex_.cur().text + "'");
    }
    return e;
  }

 private:
  Lexer lex_;

  bool is_op(const char* t) const {
    return lex_.cur().type == Token::Type::Op && lex_.cur().text == t;
  }

  ExprPtr node(ExprNode::Kind k, size_t pos) {
    auto n = std::make_unique<ExprNode>();
    n->kind = k;
    n->pos = pos;
    return n;
  }

  ExprPtr expr() {
    size_t pos = lex_.cur().pos;
    ExprPtr acc;
    if (is_op("-")) {
      lex_.advance();
      acc = node(ExprNode::Kind::Neg, pos);
      acc->kids.push_back(term());
    } else {
      acc = term();
    }
    while (is_op("+") || is_op("-")) {
      bool plus = lex_.cur().text == "+";
      size_t p = lex_.cur().pos;
      lex_.advance();
      ExprPtr rhs = term();
      ExprPtr sum = node(plus ? ExprNode::Kind::Sum : ExprNode::Kind::Sub, p);
      sum->kids.push_back(std::move(acc));
      sum->kids.push_back(std::move(rhs));
      acc = std::move(sum);
    }
    return acc;
  }

  ExprPtr term() {
    ExprPtr acc = factor();
    while (is_op("*")) {
      size_t p = lex_.cur().pos;
      lex_.advance();
      ExprPtr rhs = factor();
      ExprPtr mul = node(ExprNode::Kind::Mul, p);
      mul->kids.push_back(std::move(acc));
      mul->kids.push_back(std::move(rhs));
      acc = std::move(mul);
    }
    return acc;
  }

  ExprPtr factor() {
    ExprPtr b = base();
    if (is_op("^")) {
      size_t p = lex_.cur().pos;
      lex_.advance();
      if (lex_.cur().type != Token::Type::Int) {
        parse_fail(lex_.cur().pos, "exponent must be an unsigned integer");
      }
      unsigned long e = 0;
      for (char c : lex_.cur().text) {
        e = e * 10 + static_cast<unsigned long>(c - '0');
        if (e > 64) parse_fail(lex_.cur().pos, "exponent overflow (> 64)");
      }
      lex_.advance();
      ExprPtr pw = node(ExprNode::Kind::Pow, p);
      pw->exponent = static_cast<unsigned>(e);
      pw->kids.push_back(std::move(b));
      return pw;
    }
    return b;
  }

  ExprPtr base() {
    const Token& t = lex_.cur();
    if (t.type == Token::Type::Int) {
      size_t pos = t.pos;
      std::string num = t.text;
      lex_.advance();
      std::string lit = num;
      if (is_op("/")) {
        lex_.advance();
        if (lex_.cur().type != Token::Type::Int) {
          parse_fail(lex_.cur().pos, "denominator must be an unsigned integer");
        }
        lit += "/" + lex_.cur().text;
        lex_.advance();
      }
      ExprPtr n = node(ExprNode::Kind::Literal, pos);
      n->lit = Rational::from_string(lit);
      return n;
    }
    if (t.type == Token::Type::Ident) {
      size_t pos = t.pos;
      std::string name = t.text;
      lex_.advance();
      if (name == "w") {
        ExprPtr n = node(ExprNode::Kind::Gen, pos);
        return n;
      }
      ExprPtr n = node(ExprNode::Kind::Var, pos);
      n->name = name;
      return n;
    }
    if (is_op("(")) {
      lex_.advance();
      ExprPtr e = expr();
      if (!is_op(")")) parse_fail(lex_.cur().pos, "expected ')'");
      lex_.advance();
      return e;
    }
    parse_fail(t.pos, t.type == Token::Type::End ? "unexpected end of input"
                                                 : "unexpected token '" + t.text + "'");
  }
};

}  // namespace

ExprPtr parse_expr_text(const std::string& text) { return Parser(text).parse(); }

MPoly to_mpoly(const ExprNode& ast, const std::optional<MinPoly>& field,
               const std::vector<std::string>& allowed_vars) {
  switch (ast.kind) {
    case ExprNode::Kind::Literal:
      return MPoly(Scalar(ast.lit));
    case ExprNode::Kind::Gen:
      if (!field) {
        fail(Err::ParseError, "parse error at " + std::to_string(ast.pos) +
                                  ": unknown symbol 'w' (no field declared)");
      }
      return MPoly(Scalar(QuadExt::generator(*field)));
    case ExprNode::Kind::Var: {
      bool ok = false;
      for (const auto& v : allowed_vars) {
        if (v == ast.name) { ok = true; break; }
      }
      if (!ok) {
        fail(Err::ParseError,
             "parse error at " + std::to_string(ast.pos) + ": unknown symbol '" + ast.name + "'");
      }
      return MPoly::variable(ast.name);
    }
    case ExprNode::Kind::Neg:
      return -to_mpoly(*ast.kids[0], field, allowed_vars);
    case ExprNode::Kind::Sum:
      return to_mpoly(*ast.kids[0], field, allowed_vars) +
             to_mpoly(*ast.kids[1], field, allowed_vars);
    case ExprNode::Kind::Sub:
      return to_mpoly(*ast.kids[0], field, allowed_vars) -
             to_mpoly(*ast.kids[1], field, allowed_vars);
    case ExprNode::Kind::Mul:
      return to_mpoly(*ast.kids[0], field, allowed_vars) *
             to_mpoly(*ast.kids[1], field, allowed_vars);
    case ExprNode::Kind::Pow:
      return to_mpoly(*ast.kids[0], field, allowed_vars).pow(ast.exponent);
  }
  fail(Err::Internal, "unreachable expression kind");
}

MPoly parse_poly(const std::string& text, const std::optional<MinPoly>& field,
                 const std::vector<std::string>& allowed_vars) {
  ExprPtr ast = parse_expr_text(text);
  return to_mpoly(*ast, field, allowed_vars);
}

Scalar parse_scalar(const std::string& text, const std::optional<MinPoly>& field) {
  MPoly p = parse_poly(text, field, {});
  return p.constant_value();
}

}  // namespace cusp
