#include "crwb/expr.hpp"

#include <cctype>
#include <cstdio>

namespace crwb {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

class ExprParser {
 public:
  ExprParser(const std::string& src, int dim, CoefficientExpr& out)
      : src_(src), dim_(dim), out_(out) {}

  int run() {
    int root = parse_expr();
    skip_ws();
    if (pos_ != src_.size()) throw ParseError("unexpected trailing input", pos_);
    return root;
  }

 private:
  const std::string& src_;
  int dim_;
  CoefficientExpr& out_;
  size_t pos_ = 0;

  using Node = CoefficientExpr::Node;
  using Op = CoefficientExpr::Op;

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  int parse_expr() {
    int lhs = parse_term();
    for (;;) {
      if (accept('+')) {
        int rhs = parse_term();
        lhs = out_.add_node({Op::Add, lhs, rhs, 0.0, 0});
      } else if (accept('-')) {
        int rhs = parse_term();
        lhs = out_.add_node({Op::Sub, lhs, rhs, 0.0, 0});
      } else {
        return lhs;
      }
    }
  }

  int parse_term() {
    int lhs = parse_factor();
    for (;;) {
      if (accept('*')) {
        int rhs = parse_factor();
        lhs = out_.add_node({Op::Mul, lhs, rhs, 0.0, 0});
      } else if (accept('/')) {
        int rhs = parse_factor();
        lhs = out_.add_node({Op::Div, lhs, rhs, 0.0, 0});
      } else {
        return lhs;
      }
    }
  }

  int parse_factor() {
    bool neg = false;
    for (;;) {
      if (accept('-')) {
        neg = !neg;
      } else if (accept('+')) {
        // no-op
      } else {
        break;
      }
    }
    int operand = parse_power();
    if (neg) operand = out_.add_node({Op::Neg, operand, -1, 0.0, 0});
    return operand;
  }

  int parse_power() {
    int base = parse_atom();
    if (accept('^')) {
      skip_ws();
      bool neg = accept('-');
      skip_ws();
      size_t start = pos_;
      long exp = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        exp = exp * 10 + (src_[pos_] - '0');
        ++pos_;
      }
      if (pos_ == start) throw ParseError("expected integer exponent after '^'", pos_);
      if (exp > 64) throw ParseError("exponent too large", start);
      int e = static_cast<int>(neg ? -exp : exp);
      base = out_.add_node({Op::Pow, base, -1, 0.0, e});
    }
    return base;
  }

  int parse_atom() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      int inner = parse_expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_ident();
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  int parse_number() {
    size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.')) {
      ++pos_;
    }
    const std::string text = src_.substr(start, pos_ - start);
    size_t used = 0;
    double v;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      throw ParseError("malformed number '" + text + "'", start);
    }
    if (used != text.size()) throw ParseError("malformed number '" + text + "'", start);
    return out_.add_node({Op::Const, -1, -1, v, 0});
  }

  int parse_ident() {
    size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])))) {
      ++pos_;
    }
    const std::string name = src_.substr(start, pos_ - start);
    if (name.size() >= 2 && name[0] == 'y' &&
        std::isdigit(static_cast<unsigned char>(name[1]))) {
      long idx = 0;
      for (size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i])))
          throw ParseError("unknown identifier '" + name + "'", start);
        idx = idx * 10 + (name[i] - '0');
      }
      if (idx < 1 || idx > dim_)
        throw ParseError("coordinate '" + name + "' out of range for dimension " +
                             std::to_string(dim_),
                         start);
      return out_.add_node({Op::Var, -1, -1, 0.0, static_cast<int>(idx - 1)});
    }
    Op op;
    if (name == "sin") {
      op = Op::Sin;
    } else if (name == "cos") {
      op = Op::Cos;
    } else if (name == "exp") {
      op = Op::Exp;
    } else {
      throw ParseError("unknown identifier '" + name + "'", start);
    }
    expect('(');
    int inner = parse_expr();
    expect(')');
    return out_.add_node({op, inner, -1, 0.0, 0});
  }
};

CoefficientExpr CoefficientExpr::parse(const std::string& source, int dim) {
  if (source.empty()) throw ParseError("empty expression", 0);
  CoefficientExpr e;
  e.dim_ = dim;
  e.source_ = source;
  ExprParser parser(source, dim, e);
  e.root_ = parser.run();
  return e;
}

CoefficientExpr CoefficientExpr::constant(double v, int dim) {
  CoefficientExpr e;
  e.dim_ = dim;
  e.root_ = e.add_node({Op::Const, -1, -1, v, 0});
  e.source_ = format_double(v);
  return e;
}

CoefficientExpr CoefficientExpr::coordinate(int axis, int dim) {
  CoefficientExpr e;
  e.dim_ = dim;
  e.root_ = e.add_node({Op::Var, -1, -1, 0.0, axis});
  e.source_ = "y" + std::to_string(axis + 1);
  return e;
}

bool CoefficientExpr::is_zero() const {
  return root_ >= 0 && nodes_[root_].op == Op::Const && nodes_[root_].value == 0.0;
}

double CoefficientExpr::eval(const Vec& p) const {
  if (root_ < 0) throw EvalError("empty expression");
  double v = eval_node(root_, p);
  if (!std::isfinite(v)) throw EvalError("non-finite value in expression evaluation");
  return v;
}

double CoefficientExpr::eval_node(int idx, const Vec& p) const {
  const Node& n = nodes_[idx];
  switch (n.op) {
    case Op::Const: return n.value;
    case Op::Var: return p[n.axis];
    case Op::Add: return eval_node(n.a, p) + eval_node(n.b, p);
    case Op::Sub: return eval_node(n.a, p) - eval_node(n.b, p);
    case Op::Mul: return eval_node(n.a, p) * eval_node(n.b, p);
    case Op::Div: {
      double d = eval_node(n.b, p);
      if (d == 0.0) throw EvalError("division by zero");
      return eval_node(n.a, p) / d;
    }
    case Op::Neg: return -eval_node(n.a, p);
    case Op::Pow: return std::pow(eval_node(n.a, p), n.axis);
    case Op::Sin: return std::sin(eval_node(n.a, p));
    case Op::Cos: return std::cos(eval_node(n.a, p));
    case Op::Exp: return std::exp(eval_node(n.a, p));
  }
  throw EvalError("corrupt expression node");
}

Jet2 CoefficientExpr::eval_jet(const Vec& p) const {
  if (root_ < 0) throw EvalError("empty expression");
  Jet2 j = jet_node(root_, p);
  if (!j.finite()) throw EvalError("non-finite jet in expression evaluation");
  return j;
}

Jet2 CoefficientExpr::jet_node(int idx, const Vec& p) const {
  const Node& n = nodes_[idx];
  const int d = dim_;
  switch (n.op) {
    case Op::Const: return Jet2::constant(n.value, d);
    case Op::Var: return Jet2::variable(p[n.axis], n.axis, d);
    case Op::Add: return jet_node(n.a, p) + jet_node(n.b, p);
    case Op::Sub: return jet_node(n.a, p) - jet_node(n.b, p);
    case Op::Mul: return jet_node(n.a, p) * jet_node(n.b, p);
    case Op::Div: return jet_node(n.a, p) / jet_node(n.b, p);
    case Op::Neg: return -jet_node(n.a, p);
    case Op::Pow: return pow(jet_node(n.a, p), n.axis);
    case Op::Sin: return sin(jet_node(n.a, p));
    case Op::Cos: return cos(jet_node(n.a, p));
    case Op::Exp: return exp(jet_node(n.a, p));
  }
  throw EvalError("corrupt expression node");
}

int CoefficientExpr::copy_node(int idx, CoefficientExpr& out) const {
  Node n = nodes_[idx];
  if (n.a >= 0) n.a = copy_node(n.a, out);
  if (n.b >= 0) n.b = copy_node(n.b, out);
  return out.add_node(n);
}

// d/dy_axis as a fresh tree; no simplification beyond dropping exact zeros.
int CoefficientExpr::derive_node(int idx, int axis, CoefficientExpr& out) const {
  const Node& n = nodes_[idx];
  auto zero = [&]() { return out.add_node({Op::Const, -1, -1, 0.0, 0}); };
  switch (n.op) {
    case Op::Const: return zero();
    case Op::Var: return out.add_node({Op::Const, -1, -1, n.axis == axis ? 1.0 : 0.0, 0});
    case Op::Add: {
      int da = derive_node(n.a, axis, out);
      int db = derive_node(n.b, axis, out);
      return out.add_node({Op::Add, da, db, 0.0, 0});
    }
    case Op::Sub: {
      int da = derive_node(n.a, axis, out);
      int db = derive_node(n.b, axis, out);
      return out.add_node({Op::Sub, da, db, 0.0, 0});
    }
    case Op::Mul: {
      int da = derive_node(n.a, axis, out);
      int db = derive_node(n.b, axis, out);
      int a = copy_node(n.a, out);
      int b = copy_node(n.b, out);
      int t1 = out.add_node({Op::Mul, da, b, 0.0, 0});
      int t2 = out.add_node({Op::Mul, a, db, 0.0, 0});
      return out.add_node({Op::Add, t1, t2, 0.0, 0});
    }
    case Op::Div: {
      // (a/b)' = a'/b - a b'/b^2
      int da = derive_node(n.a, axis, out);
      int db = derive_node(n.b, axis, out);
      int a = copy_node(n.a, out);
      int b1 = copy_node(n.b, out);
      int b2 = copy_node(n.b, out);
      int t1 = out.add_node({Op::Div, da, b1, 0.0, 0});
      int num = out.add_node({Op::Mul, a, db, 0.0, 0});
      int bsq = out.add_node({Op::Pow, b2, -1, 0.0, 2});
      int t2 = out.add_node({Op::Div, num, bsq, 0.0, 0});
      return out.add_node({Op::Sub, t1, t2, 0.0, 0});
    }
    case Op::Neg: {
      int da = derive_node(n.a, axis, out);
      return out.add_node({Op::Neg, da, -1, 0.0, 0});
    }
    case Op::Pow: {
      if (n.axis == 0) return zero();
      int da = derive_node(n.a, axis, out);
      int a = copy_node(n.a, out);
      int c = out.add_node({Op::Const, -1, -1, double(n.axis), 0});
      int pw = out.add_node({Op::Pow, a, -1, 0.0, n.axis - 1});
      int t = out.add_node({Op::Mul, c, pw, 0.0, 0});
      return out.add_node({Op::Mul, t, da, 0.0, 0});
    }
    case Op::Sin: {
      int da = derive_node(n.a, axis, out);
      int a = copy_node(n.a, out);
      int ca = out.add_node({Op::Cos, a, -1, 0.0, 0});
      return out.add_node({Op::Mul, ca, da, 0.0, 0});
    }
    case Op::Cos: {
      int da = derive_node(n.a, axis, out);
      int a = copy_node(n.a, out);
      int sa = out.add_node({Op::Sin, a, -1, 0.0, 0});
      int m = out.add_node({Op::Mul, sa, da, 0.0, 0});
      return out.add_node({Op::Neg, m, -1, 0.0, 0});
    }
    case Op::Exp: {
      int da = derive_node(n.a, axis, out);
      int a = copy_node(n.a, out);
      int ea = out.add_node({Op::Exp, a, -1, 0.0, 0});
      return out.add_node({Op::Mul, ea, da, 0.0, 0});
    }
  }
  throw EvalError("corrupt expression node");
}

CoefficientExpr CoefficientExpr::derivative(int axis) const {
  CoefficientExpr out;
  out.dim_ = dim_;
  out.root_ = derive_node(root_, axis, out);
  out.source_ = out.print();
  return out;
}

void CoefficientExpr::print_node(int idx, std::string& s) const {
  const Node& n = nodes_[idx];
  switch (n.op) {
    case Op::Const:
      if (n.value < 0) {
        s += "(" + format_double(n.value) + ")";
      } else {
        s += format_double(n.value);
      }
      return;
    case Op::Var: s += "y" + std::to_string(n.axis + 1); return;
    case Op::Add:
      s += "(";
      print_node(n.a, s);
      s += " + ";
      print_node(n.b, s);
      s += ")";
      return;
    case Op::Sub:
      s += "(";
      print_node(n.a, s);
      s += " - ";
      print_node(n.b, s);
      s += ")";
      return;
    case Op::Mul:
      s += "(";
      print_node(n.a, s);
      s += "*";
      print_node(n.b, s);
      s += ")";
      return;
    case Op::Div:
      s += "(";
      print_node(n.a, s);
      s += "/";
      print_node(n.b, s);
      s += ")";
      return;
    case Op::Neg:
      s += "(-";
      print_node(n.a, s);
      s += ")";
      return;
    case Op::Pow:
      print_node(n.a, s);
      s += "^";
      if (n.axis < 0) s += "-";
      s += std::to_string(n.axis < 0 ? -n.axis : n.axis);
      return;
    case Op::Sin:
      s += "sin(";
      print_node(n.a, s);
      s += ")";
      return;
    case Op::Cos:
      s += "cos(";
      print_node(n.a, s);
      s += ")";
      return;
    case Op::Exp:
      s += "exp(";
      print_node(n.a, s);
      s += ")";
      return;
  }
}

std::string CoefficientExpr::print() const {
  std::string s;
  if (root_ >= 0) print_node(root_, s);
  return s;
}

}  // namespace crwb
