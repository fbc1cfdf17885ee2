#ifndef DEPTH2_FORMULA_HPP
#define DEPTH2_FORMULA_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace depth2 {

enum class NodeKind { Var, Top, Bottom, Not, And, Or, Implies, Iff, Diamond, Box };

/// Immutable modal formula. Copies share structure; equality is structural.
class Formula {
 public:
  static Formula var(std::string name);
  static Formula top();
  static Formula bottom();
  static Formula negation(Formula a);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula iff(Formula a, Formula b);
  static Formula diamond(Formula a);
  static Formula box(Formula a);

  NodeKind kind() const;
  /// Variable name; empty for other nodes.
  const std::string& name() const;
  /// Operand of a unary node, or left operand of a binary one.
  Formula left() const;
  Formula right() const;

  bool is_unary() const;
  bool is_binary() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Grammar, loosest first: <->, -> (right associative), |, &, then the
/// prefix operators ~ <> []. Atoms are variables [a-z][a-zA-Z0-9_]*, 1, 0
/// and parenthesized formulas. Throws SyntaxError.
Formula parse_formula(std::string_view text);
std::string print_formula(const Formula& f);

/// Variable names in order of first occurrence.
std::vector<std::string> variables(const Formula& f);
int formula_depth(const Formula& f);

/// Catalog axioms: K D T 4 B B2 Dum Grz M G2 H3 R1, also .1 .2 .3 G H.
Formula axiom(std::string_view name);
/// Primary catalog names in display order.
const std::vector<std::string>& axiom_names();

/// [](φ') | [](ψ') with the variables of φ and then ψ renamed to v0, v1, ...
Formula meet_axiom(const Formula& phi, const Formula& psi);

struct Rule {
  std::vector<Formula> premises;
  Formula conclusion;
};

/// <>p & <>~p / 0
Rule rule_P2();
std::string print_rule(const Rule& r);

}  // namespace depth2

#endif  // DEPTH2_FORMULA_HPP
