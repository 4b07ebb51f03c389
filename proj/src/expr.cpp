#include "tmodext/expr.hpp"

#include <cctype>
#include <set>

namespace tmodext {

namespace {

constexpr int64_t kMaxExponent = 1 << 20;

struct Token {
  enum Kind { Ident, Int, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Kind kind;
  std::string text;
  int64_t value = 0;
  int col = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    tok_.col = static_cast<int>(pos_) + 1;
    if (pos_ >= s_.size()) {
      tok_.kind = Token::End;
      return;
    }
    char ch = s_[pos_];
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
              s_[pos_] == '_'))
        ++pos_;
      tok_.kind = Token::Ident;
      tok_.text = s_.substr(start, pos_ - start);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      int64_t v = 0;
      size_t start = pos_;
      while (pos_ < s_.size() &&
             std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        v = v * 10 + (s_[pos_] - '0');
        if (v > kMaxExponent * kMaxExponent)
          throw ParseError("integer literal too large", 1, tok_.col);
        ++pos_;
      }
      tok_.kind = Token::Int;
      tok_.text = s_.substr(start, pos_ - start);
      tok_.value = v;
      return;
    }
    ++pos_;
    switch (ch) {
      case '+': tok_.kind = Token::Plus; return;
      case '-': tok_.kind = Token::Minus; return;
      case '*': tok_.kind = Token::Star; return;
      case '/': tok_.kind = Token::Slash; return;
      case '^': tok_.kind = Token::Caret; return;
      case '(': tok_.kind = Token::LParen; return;
      case ')': tok_.kind = Token::RParen; return;
      default:
        throw ParseError(std::string("unexpected character '") + ch + "'", 1,
                         tok_.col);
    }
  }

  const std::string& s_;
  size_t pos_ = 0;
  Token tok_;
};

class Parser {
 public:
  Parser(const std::string& text, const ParseContext& ctx)
      : lex_(text), ctx_(ctx), declared_(ctx.symbols.begin(), ctx.symbols.end()) {}

  SkewPoly parse() {
    SkewPoly v = expr();
    if (lex_.peek().kind != Token::End)
      throw ParseError("trailing input after expression", 1, lex_.peek().col);
    return v;
  }

 private:
  SkewPoly expr() {
    SkewPoly v = term();
    while (true) {
      Token::Kind k = lex_.peek().kind;
      if (k == Token::Plus) {
        lex_.take();
        v = v + term();
      } else if (k == Token::Minus) {
        lex_.take();
        v = v - term();
      } else {
        return v;
      }
    }
  }

  SkewPoly term() {
    SkewPoly v = factor();
    while (true) {
      Token::Kind k = lex_.peek().kind;
      if (k == Token::Star) {
        lex_.take();
        v = v * factor();
      } else if (k == Token::Slash) {
        Token op = lex_.take();
        SkewPoly d = factor();
        if (d.deg() > 0)
          throw ParseError("division by an operator expression", 1, op.col);
        if (d.is_zero()) throw ParseError("division by zero", 1, op.col);
        v = v * SkewPoly::constant(d.constant_coeff().inv(), ctx_.side);
      } else {
        return v;
      }
    }
  }

  SkewPoly factor() {
    if (lex_.peek().kind == Token::Minus) {
      lex_.take();
      return -factor();
    }
    SkewPoly v = atom();
    while (lex_.peek().kind == Token::Caret) {
      lex_.take();
      if (lex_.peek().kind == Token::LParen) {
        lex_.take();
        int64_t k = signed_int();
        expect(Token::RParen, "')'");
        v = v.twisted(static_cast<int32_t>(k));
      } else {
        Token e = expect(Token::Int, "exponent");
        v = power(v, e.value, e.col);
      }
    }
    return v;
  }

  SkewPoly atom() {
    Token t = lex_.take();
    switch (t.kind) {
      case Token::Int:
        return SkewPoly::constant(
            RationalCoeff::from_int(ctx_.field, t.value), ctx_.side);
      case Token::LParen: {
        SkewPoly v = expr();
        expect(Token::RParen, "')'");
        return v;
      }
      case Token::Ident:
        return ident(t);
      default:
        throw ParseError("expected an identifier, number, or '('", 1, t.col);
    }
  }

  SkewPoly ident(const Token& t) {
    const std::string& n = t.text;
    if (n == "T" || n == "S") {
      Side s = n == "T" ? Side::Tau : Side::Sigma;
      if (s != ctx_.side)
        throw ParseError("operator '" + n + "' does not belong to this ring",
                         1, t.col);
      return SkewPoly::monomial(RationalCoeff::from_int(ctx_.field, 1), 1,
                                ctx_.side);
    }
    if (n == "theta")
      return SkewPoly::constant(RationalCoeff::theta(ctx_.field), ctx_.side);
    if (n == "c")
      throw ParseError("'c' is reserved", 1, t.col);
    if (n == "w") {
      if (ctx_.field.e <= 1)
        throw ParseError("'w' is reserved for the field generator", 1, t.col);
      return SkewPoly::constant(
          RationalCoeff::of(Poly::constant(field_generator())), ctx_.side);
    }
    if (!declared_.count(n))
      throw ParseError("undeclared symbol '" + n + "'", 1, t.col);
    uint32_t sym = Symbols::intern(n);
    return SkewPoly::constant(
        RationalCoeff::variable(ctx_.field, Var{sym, 0}), ctx_.side);
  }

  Fq field_generator() const {
    std::vector<uint64_t> digits(2, 0);
    digits[1] = 1;
    return Fq::from_digits(ctx_.field, digits);
  }

  SkewPoly power(const SkewPoly& base, int64_t e, int col) {
    if (e > kMaxExponent) throw ParseError("exponent too large", 1, col);
    SkewPoly acc = SkewPoly::one(ctx_.field, ctx_.side);
    SkewPoly b = base;
    while (e > 0) {
      if (e & 1) acc = acc * b;
      b = b * b;
      e >>= 1;
    }
    return acc;
  }

  int64_t signed_int() {
    bool neg = false;
    if (lex_.peek().kind == Token::Minus) {
      lex_.take();
      neg = true;
    } else if (lex_.peek().kind == Token::Plus) {
      lex_.take();
    }
    Token t = expect(Token::Int, "integer");
    if (t.value > kMaxExponent)
      throw ParseError("twist too large", 1, t.col);
    return neg ? -t.value : t.value;
  }

  Token expect(Token::Kind k, const char* what) {
    Token t = lex_.take();
    if (t.kind != k)
      throw ParseError(std::string("expected ") + what, 1, t.col);
    return t;
  }

  Lexer lex_;
  const ParseContext& ctx_;
  std::set<std::string> declared_;
};

}  // namespace

SkewPoly parse_skew(const std::string& text, const ParseContext& ctx) {
  for (const std::string& s : ctx.symbols) {
    if (s == "theta" || s == "T" || s == "S" || s == "c" || s == "w")
      throw ParseError("'" + s + "' is reserved and cannot be declared");
  }
  return Parser(text, ctx).parse();
}

RationalCoeff parse_scalar(const std::string& text, const ParseContext& ctx) {
  SkewPoly p = parse_skew(text, ctx);
  if (p.deg() > 0)
    throw ParseError("operator not allowed in a scalar context");
  return p.constant_coeff();
}

}  // namespace tmodext
