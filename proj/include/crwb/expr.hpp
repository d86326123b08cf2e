#ifndef CRWB_EXPR_HPP
#define CRWB_EXPR_HPP

#include <string>
#include <vector>

#include "crwb/jet.hpp"

namespace crwb {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Closed-form scalar expression in chart coordinates y1..yN.
///
/// Grammar (EBNF):
///   expr    = term { ("+" | "-") term } ;
///   term    = factor { ("*" | "/") factor } ;
///   factor  = { "+" | "-" } power ;
///   power   = atom [ "^" [ "-" ] integer ] ;
///   atom    = number | coordinate | function "(" expr ")" | "(" expr ")" ;
///   function   = "sin" | "cos" | "exp" ;
///   coordinate = "y" integer ;                    (* 1-based, <= dim *)
///   number     = digits [ "." digits ] ;
///
/// Anything else is a parse error. Evaluation carries exact first and second
/// derivatives through the tree.
class CoefficientExpr {
 public:
  CoefficientExpr() = default;

  static CoefficientExpr parse(const std::string& source, int dim);
  static CoefficientExpr constant(double v, int dim);
  static CoefficientExpr coordinate(int axis, int dim);

  double eval(const Vec& p) const;
  Jet2 eval_jet(const Vec& p) const;

  /// Exact partial derivative with respect to coordinate axis (0-based),
  /// as a new expression in the same grammar.
  CoefficientExpr derivative(int axis) const;

  /// Stable textual form; parse(print()) reproduces the same tree.
  std::string print() const;

  int dim() const { return dim_; }
  bool empty() const { return nodes_.empty(); }
  bool is_zero() const;  // structurally the constant 0

  const std::string& source() const { return source_; }

 private:
  enum class Op : uint8_t { Const, Var, Add, Sub, Mul, Div, Neg, Pow, Sin, Cos, Exp };

  struct Node {
    Op op;
    int a = -1;       // left child / operand
    int b = -1;       // right child
    double value = 0.0;  // Const
    int axis = 0;     // Var (0-based) or Pow exponent
  };

  int dim_ = 0;
  int root_ = -1;
  std::vector<Node> nodes_;
  std::string source_;

  double eval_node(int idx, const Vec& p) const;
  Jet2 jet_node(int idx, const Vec& p) const;
  int derive_node(int idx, int axis, CoefficientExpr& out) const;
  int copy_node(int idx, CoefficientExpr& out) const;
  void print_node(int idx, std::string& out) const;

  int add_node(Node n) {
    nodes_.push_back(n);
    return static_cast<int>(nodes_.size()) - 1;
  }

  friend class ExprParser;
};

}  // namespace crwb

#endif
