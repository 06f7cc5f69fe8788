#include "qseries/expr.hpp"

#include <cctype>
#include <stdexcept>

#include "qseries/repcount.hpp"

namespace qs::expr {

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eof() {
    skip();
    return pos >= s.size();
  }

  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }

  [[noreturn]] void fail() {
    skip();
    std::string tok = pos < s.size() ? std::string(1, s[pos]) : "end of input";
    throw std::runtime_error("syntax error at offset " + std::to_string(pos) + ": " + tok);
  }

  void expect(char c) {
    if (!consume(c)) fail();
  }

  long integer() {
    skip();
    size_t start = pos;
    bool neg = pos < s.size() && s[pos] == '-';
    if (neg) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) {
      pos = start;
      fail();
    }
    return std::stol(s.substr(start, pos - start));
  }

  // "-"? "q" ("^" INT)?
  Monomial monomial() {
    skip();
    int sign = 1;
    if (consume('-')) sign = -1;
    if (!consume('q')) fail();
    long e = 1;
    if (consume('^')) e = integer();
    if (e < 1) throw std::runtime_error("invalid monomial");
    return {sign, e};
  }

  bool name_ahead() {
    skip();
    if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos]))) return false;
    size_t end = pos;
    while (end < s.size() && std::isalpha(static_cast<unsigned char>(s[end]))) ++end;
    // a bare "q" starts a monomial, not a call
    return s.substr(pos, end - pos) != "q";
  }

  NodePtr call() {
    skip();
    size_t end = pos;
    while (end < s.size() && std::isalpha(static_cast<unsigned char>(s[end]))) ++end;
    std::string name = s.substr(pos, end - pos);
    static const char* known[] = {"E", "phi", "psi", "f", "G", "H", "QF"};
    bool ok = false;
    for (const char* k : known) ok = ok || name == k;
    if (!ok) fail();
    pos = end;
    expect('(');
    auto node = std::make_shared<Node>();
    node->kind = Kind::Call;
    node->name = name;
    if (name == "QF") {
      for (int i = 0; i < 3; ++i) {
        if (i > 0 && !consume(',')) throw std::runtime_error("arity error");
        node->form[i] = integer();
      }
    } else if (name == "f") {
      node->args.push_back(monomial());
      if (!consume(',')) throw std::runtime_error("arity error");
      node->args.push_back(monomial());
    } else {
      Monomial m = monomial();
      if (m.sign != 1) throw std::runtime_error("invalid monomial");
      node->args.push_back(m);
    }
    if (peek() == ',') throw std::runtime_error("arity error");
    expect(')');
    return node;
  }

  NodePtr atom() {
    char c = peek();
    if (c == '(') {
      ++pos;
      NodePtr e = expression();
      expect(')');
      return e;
    }
    if (c == 'q' || (c == '-' && pos + 1 < s.size())) {
      if (c == 'q') {
        auto node = std::make_shared<Node>();
        node->kind = Kind::MonomialNode;
        node->mono = monomial();
        return node;
      }
      // '-' may only begin a monomial at atom position
      size_t save = pos;
      ++pos;
      if (peek() == 'q') {
        pos = save;
        auto node = std::make_shared<Node>();
        node->kind = Kind::MonomialNode;
        node->mono = monomial();
        return node;
      }
      pos = save;
      fail();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto node = std::make_shared<Node>();
      node->kind = Kind::Scalar;
      node->scalar = Rat(integer());
      return node;
    }
    if (name_ahead()) return call();
    fail();
  }

  NodePtr factor() {
    NodePtr base = atom();
    if (consume('^')) {
      long e = integer();
      auto node = std::make_shared<Node>();
      node->kind = Kind::Power;
      node->lhs = base;
      node->exponent = e;
      return node;
    }
    return base;
  }

  NodePtr term() {
    NodePtr acc = factor();
    for (;;) {
      char c = peek();
      if (c != '*' && c != '/') return acc;
      ++pos;
      auto node = std::make_shared<Node>();
      node->kind = c == '*' ? Kind::Product : Kind::Quotient;
      node->lhs = acc;
      node->rhs = factor();
      acc = node;
    }
  }

  NodePtr expression() {
    NodePtr acc = term();
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos;
      auto node = std::make_shared<Node>();
      node->kind = Kind::Sum;
      node->subtract = c == '-';
      node->lhs = acc;
      node->rhs = term();
      acc = node;
    }
  }
};

int prec(Kind k) {
  switch (k) {
    case Kind::Sum: return 1;
    case Kind::Product:
    case Kind::Quotient: return 2;
    case Kind::Power: return 3;
    default: return 4;
  }
}

std::string mono_text(const Monomial& m) {
  std::string t = m.sign < 0 ? "-q" : "q";
  if (m.exp != 1) t += "^" + std::to_string(m.exp);
  return t;
}

// min_prec: wrap in parens when this node binds looser than the context needs
void print(const NodePtr& n, int min_prec, std::string& out) {
  int p = prec(n->kind);
  bool parens = p < min_prec;
  if (parens) out += "(";
  switch (n->kind) {
    case Kind::Sum:
      print(n->lhs, p, out);
      out += n->subtract ? " - " : " + ";
      print(n->rhs, p + 1, out);
      break;
    case Kind::Product:
    case Kind::Quotient:
      print(n->lhs, p, out);
      out += n->kind == Kind::Product ? "*" : "/";
      print(n->rhs, p + 1, out);
      break;
    case Kind::Power:
      print(n->lhs, p + 1, out);
      out += "^" + std::to_string(n->exponent);
      break;
    case Kind::Scalar:
      out += numerator(n->scalar).str();
      break;
    case Kind::MonomialNode:
      out += mono_text(n->mono);
      break;
    case Kind::Call:
      out += n->name + "(";
      if (n->name == "QF") {
        for (int i = 0; i < 3; ++i) out += (i ? "," : "") + std::to_string(n->form[i]);
      } else {
        for (size_t i = 0; i < n->args.size(); ++i) out += (i ? ", " : "") + mono_text(n->args[i]);
      }
      out += ")";
      break;
  }
  if (parens) out += ")";
}

}  // namespace

NodePtr parse_expr(const std::string& text) {
  Parser p(text);
  NodePtr ast = p.expression();
  if (!p.eof()) p.fail();
  return ast;
}

std::string pretty(const NodePtr& ast) {
  std::string out;
  print(ast, 0, out);
  return out;
}

Series eval_expr(const NodePtr& ast, long N) {
  switch (ast->kind) {
    case Kind::Sum: {
      Series a = eval_expr(ast->lhs, N), b = eval_expr(ast->rhs, N);
      return ast->subtract ? sub(a, b) : add(a, b);
    }
    case Kind::Product:
      return mul(eval_expr(ast->lhs, N), eval_expr(ast->rhs, N));
    case Kind::Quotient:
      return divide(eval_expr(ast->lhs, N), eval_expr(ast->rhs, N));
    case Kind::Power:
      return pow(eval_expr(ast->lhs, N), ast->exponent);
    case Kind::Scalar:
      return add_const(Series::zero(N), ast->scalar);
    case Kind::MonomialNode:
      return Series::monomial(Rat(ast->mono.sign), ast->mono.exp, N);
    case Kind::Call: {
      if (ast->name == "QF")
        return repcount::bqf_theta({ast->form[0], ast->form[1], ast->form[2]}, N);
      if (ast->name == "f") return theta_f(ast->args[0], ast->args[1], N);
      long k = ast->args[0].exp;
      if (ast->name == "E") return euler_E(k, N);
      if (ast->name == "phi") return phi(k, N);
      if (ast->name == "psi") return psi(k, N);
      if (ast->name == "G") return compose_power(rr_G(N), k);
      return compose_power(rr_H(N), k);
    }
  }
  throw std::logic_error("eval_expr: bad node");
}

}  // namespace qs::expr
