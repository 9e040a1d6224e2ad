#include "conway/ratexpr.hpp"

#include <cctype>
#include <limits>

namespace conway {

RatExpr RatExpr::constant(std::uint64_t value) {
  return RatExpr(std::make_shared<const Node>(Node{Kind::Const, value, 0, nullptr, nullptr}));
}

RatExpr RatExpr::letter(char symbol) {
  return RatExpr(std::make_shared<const Node>(Node{Kind::Letter, 0, symbol, nullptr, nullptr}));
}

RatExpr RatExpr::add(RatExpr left, RatExpr right) {
  return RatExpr(std::make_shared<const Node>(Node{Kind::Add, 0, 0, std::make_shared<const RatExpr>(std::move(left)),
                                                   std::make_shared<const RatExpr>(std::move(right))}));
}

RatExpr RatExpr::mul(RatExpr left, RatExpr right) {
  return RatExpr(std::make_shared<const Node>(Node{Kind::Mul, 0, 0, std::make_shared<const RatExpr>(std::move(left)),
                                                   std::make_shared<const RatExpr>(std::move(right))}));
}

RatExpr RatExpr::plus(RatExpr operand) {
  return RatExpr(std::make_shared<const Node>(
      Node{Kind::Plus, 0, 0, std::make_shared<const RatExpr>(std::move(operand)), nullptr}));
}

RatExpr RatExpr::star(RatExpr operand) {
  return RatExpr(std::make_shared<const Node>(
      Node{Kind::Star, 0, 0, std::make_shared<const RatExpr>(std::move(operand)), nullptr}));
}

std::size_t RatExpr::depth() const {
  switch (kind()) {
    case Kind::Const:
    case Kind::Letter:
      return 0;
    case Kind::Add:
    case Kind::Mul:
      return 1 + std::max(left().depth(), right().depth());
    case Kind::Plus:
    case Kind::Star:
      return 1 + operand().depth();
  }
  return 0;
}

std::size_t RatExpr::size() const {
  switch (kind()) {
    case Kind::Const:
    case Kind::Letter:
      return 1;
    case Kind::Add:
    case Kind::Mul:
      return 1 + left().size() + right().size();
    case Kind::Plus:
    case Kind::Star:
      return 1 + operand().size();
  }
  return 1;
}

namespace {

// Binding strength: sums 1, products 2, postfix 3, atoms 4.
int precedence(RatExpr::Kind kind) {
  switch (kind) {
    case RatExpr::Kind::Add:
      return 1;
    case RatExpr::Kind::Mul:
      return 2;
    case RatExpr::Kind::Plus:
    case RatExpr::Kind::Star:
      return 3;
    default:
      return 4;
  }
}

void print(const RatExpr& e, int min_prec, std::string& out) {
  const bool paren = precedence(e.kind()) < min_prec;
  if (paren) out += '(';
  switch (e.kind()) {
    case RatExpr::Kind::Const:
      out += std::to_string(e.value());
      break;
    case RatExpr::Kind::Letter:
      out += e.symbol();
      break;
    case RatExpr::Kind::Add:
      print(e.left(), 1, out);
      out += " + ";
      print(e.right(), 2, out);
      break;
    case RatExpr::Kind::Mul:
      print(e.left(), 2, out);
      out += '.';
      print(e.right(), 3, out);
      break;
    case RatExpr::Kind::Plus:
      print(e.operand(), 3, out);
      out += "^+";
      break;
    case RatExpr::Kind::Star:
      print(e.operand(), 3, out);
      out += "^*";
      break;
  }
  if (paren) out += ')';
}

class Parser {
 public:
  Parser(std::string_view text, std::string_view alphabet) : text_(text), alphabet_(alphabet) {}

  RatExpr run() {
    RatExpr e = expr();
    skip_space();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  RatExpr expr() {
    RatExpr e = prod();
    while (accept('+')) e = RatExpr::add(std::move(e), prod());
    return e;
  }

  RatExpr prod() {
    RatExpr e = post();
    while (accept('.')) e = RatExpr::mul(std::move(e), post());
    return e;
  }

  RatExpr post() {
    RatExpr e = atom();
    for (;;) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != '^') return e;
      ++pos_;
      skip_space();
      if (accept('*')) e = RatExpr::star(std::move(e));
      else if (accept('+')) e = RatExpr::plus(std::move(e));
      else fail("expected '*' or '+' after '^'");
    }
  }

  RatExpr atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatExpr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      std::uint64_t value = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        const std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
        if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
          throw SyntaxError("constant does not fit in 64 bits", start);
        value = value * 10 + digit;
        ++pos_;
      }
      return RatExpr::constant(value);
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      if (alphabet_.find(c) == std::string_view::npos)
        fail(std::string("letter '") + c + "' is not in alphabet \"" + std::string(alphabet_) + "\"");
      ++pos_;
      return RatExpr::letter(c);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

  std::string_view text_;
  std::string_view alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string RatExpr::to_string() const {
  std::string out;
  print(*this, 0, out);
  return out;
}

bool operator==(const RatExpr& a, const RatExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case RatExpr::Kind::Const:
      return a.value() == b.value();
    case RatExpr::Kind::Letter:
      return a.symbol() == b.symbol();
    case RatExpr::Kind::Add:
    case RatExpr::Kind::Mul:
      return a.left() == b.left() && a.right() == b.right();
    case RatExpr::Kind::Plus:
    case RatExpr::Kind::Star:
      return a.operand() == b.operand();
  }
  return false;
}

RatExpr parse_expression(std::string_view text, std::string_view alphabet) { return Parser(text, alphabet).run(); }

}  // namespace conway
