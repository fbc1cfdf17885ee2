#include "depth2/formula.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <unordered_map>

#include "depth2/errors.hpp"

namespace depth2 {

struct Formula::Node {
  NodeKind kind;
  std::string name;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

enum class Tok { Var, One, Zero, Not, And, Or, Implies, Iff, Diamond, Box, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

const std::vector<std::string> kOperandStart = {"~", "<>", "[]", "(", "1", "0", "variable"};
const std::vector<std::string> kBinaryOps = {"&", "|", "->", "<->"};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto at = [&](std::size_t k) { return k < s.size() ? s[k] : '\0'; };
  while (i < s.size()) {
    const char c = s[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t j = i + 1;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Var, std::string(s.substr(i, j - i)), col});
      i = j;
      continue;
    }
    switch (c) {
      case '~': out.push_back({Tok::Not, "~", col}); ++i; continue;
      case '&': out.push_back({Tok::And, "&", col}); ++i; continue;
      case '|': out.push_back({Tok::Or, "|", col}); ++i; continue;
      case '(': out.push_back({Tok::LParen, "(", col}); ++i; continue;
      case ')': out.push_back({Tok::RParen, ")", col}); ++i; continue;
      case '1': out.push_back({Tok::One, "1", col}); ++i; continue;
      case '0': out.push_back({Tok::Zero, "0", col}); ++i; continue;
      case '-':
        if (at(i + 1) == '>') {
          out.push_back({Tok::Implies, "->", col});
          i += 2;
          continue;
        }
        throw SyntaxError("unexpected '-' at column " + std::to_string(col), col, {"->"});
      case '<':
        if (at(i + 1) == '>') {
          out.push_back({Tok::Diamond, "<>", col});
          i += 2;
          continue;
        }
        if (at(i + 1) == '-' && at(i + 2) == '>') {
          out.push_back({Tok::Iff, "<->", col});
          i += 3;
          continue;
        }
        throw SyntaxError("unexpected '<' at column " + std::to_string(col), col, {"<>", "<->"});
      case '[':
        if (at(i + 1) == ']') {
          out.push_back({Tok::Box, "[]", col});
          i += 2;
          continue;
        }
        throw SyntaxError("unexpected '[' at column " + std::to_string(col), col, {"[]"});
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "' at column " + std::to_string(col),
                          col, kOperandStart);
    }
  }
  out.push_back({Tok::End, "end of input", s.size() + 1});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Formula parse() {
    Formula f = iff();
    if (peek().kind != Tok::End) {
      std::vector<std::string> expected = kBinaryOps;
      expected.push_back("end of input");
      unexpected(expected);
    }
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void unexpected(const std::vector<std::string>& expected) const {
    const Token& t = peek();
    throw SyntaxError("unexpected " + (t.kind == Tok::End ? t.text : "'" + t.text + "'") + " at column " +
                          std::to_string(t.column),
                      t.column, expected);
  }

  Formula iff() {
    Formula f = imp();
    while (peek().kind == Tok::Iff) {
      next();
      f = Formula::iff(f, imp());
    }
    return f;
  }

  Formula imp() {
    Formula f = disj();
    if (peek().kind == Tok::Implies) {
      next();
      return Formula::implies(f, imp());
    }
    return f;
  }

  Formula disj() {
    Formula f = conj();
    while (peek().kind == Tok::Or) {
      next();
      f = Formula::disj(f, conj());
    }
    return f;
  }

  Formula conj() {
    Formula f = unary();
    while (peek().kind == Tok::And) {
      next();
      f = Formula::conj(f, unary());
    }
    return f;
  }

  Formula unary() {
    switch (peek().kind) {
      case Tok::Not: next(); return Formula::negation(unary());
      case Tok::Diamond: next(); return Formula::diamond(unary());
      case Tok::Box: next(); return Formula::box(unary());
      default: return atom();
    }
  }

  Formula atom() {
    switch (peek().kind) {
      case Tok::Var: return Formula::var(next().text);
      case Tok::One: next(); return Formula::top();
      case Tok::Zero: next(); return Formula::bottom();
      case Tok::LParen: {
        next();
        Formula f = iff();
        if (peek().kind != Tok::RParen) {
          std::vector<std::string> expected = kBinaryOps;
          expected.push_back(")");
          unexpected(expected);
        }
        next();
        return f;
      }
      default: unexpected(kOperandStart);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

int precedence(NodeKind k) {
  switch (k) {
    case NodeKind::Iff: return 1;
    case NodeKind::Implies: return 2;
    case NodeKind::Or: return 3;
    case NodeKind::And: return 4;
    case NodeKind::Not:
    case NodeKind::Diamond:
    case NodeKind::Box: return 5;
    default: return 6;
  }
}

void print_into(const Formula& f, int required, std::string& out) {
  const int p = precedence(f.kind());
  const bool parens = p < required;
  if (parens) out += '(';
  switch (f.kind()) {
    case NodeKind::Var: out += f.name(); break;
    case NodeKind::Top: out += '1'; break;
    case NodeKind::Bottom: out += '0'; break;
    case NodeKind::Not: out += '~'; print_into(f.left(), p, out); break;
    case NodeKind::Diamond: out += "<>"; print_into(f.left(), p, out); break;
    case NodeKind::Box: out += "[]"; print_into(f.left(), p, out); break;
    case NodeKind::Implies:
      print_into(f.left(), p + 1, out);
      out += " -> ";
      print_into(f.right(), p, out);
      break;
    default: {
      const char* op = f.kind() == NodeKind::And ? " & " : f.kind() == NodeKind::Or ? " | " : " <-> ";
      print_into(f.left(), p, out);
      out += op;
      print_into(f.right(), p + 1, out);
      break;
    }
  }
  if (parens) out += ')';
}

void collect_variables(const Formula& f, std::vector<std::string>& out) {
  if (f.kind() == NodeKind::Var) {
    if (std::find(out.begin(), out.end(), f.name()) == out.end()) out.push_back(f.name());
    return;
  }
  if (f.is_unary() || f.is_binary()) collect_variables(f.left(), out);
  if (f.is_binary()) collect_variables(f.right(), out);
}

Formula rename(const Formula& f, const std::unordered_map<std::string, std::string>& names) {
  switch (f.kind()) {
    case NodeKind::Var: return Formula::var(names.at(f.name()));
    case NodeKind::Top:
    case NodeKind::Bottom: return f;
    case NodeKind::Not: return Formula::negation(rename(f.left(), names));
    case NodeKind::Diamond: return Formula::diamond(rename(f.left(), names));
    case NodeKind::Box: return Formula::box(rename(f.left(), names));
    case NodeKind::And: return Formula::conj(rename(f.left(), names), rename(f.right(), names));
    case NodeKind::Or: return Formula::disj(rename(f.left(), names), rename(f.right(), names));
    case NodeKind::Implies: return Formula::implies(rename(f.left(), names), rename(f.right(), names));
    case NodeKind::Iff: return Formula::iff(rename(f.left(), names), rename(f.right(), names));
  }
  return f;
}

}  // namespace

Formula Formula::var(std::string name) {
  return Formula(std::make_shared<const Node>(Node{NodeKind::Var, std::move(name), nullptr, nullptr}));
}
Formula Formula::top() { return Formula(std::make_shared<const Node>(Node{NodeKind::Top, {}, nullptr, nullptr})); }
Formula Formula::bottom() {
  return Formula(std::make_shared<const Node>(Node{NodeKind::Bottom, {}, nullptr, nullptr}));
}
Formula Formula::negation(Formula a) {
  return Formula(std::make_shared<const Node>(Node{NodeKind::Not, {}, a.node_, nullptr}));
}
Formula Formula::diamond(Formula a) {
  return Formula(std::make_shared<const Node>(Node{NodeKind::Diamond, {}, a.node_, nullptr}));
}
Formula Formula::box(Formula a) {
  return Formula(std::make_shared<const Node>(Node{NodeKind::Box, {}, a.node_, nullptr}));
}
Formula Formula::conj(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{NodeKind::And, {}, a.node_, b.node_}));
}
Formula Formula::disj(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{NodeKind::Or, {}, a.node_, b.node_}));
}
Formula Formula::implies(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{NodeKind::Implies, {}, a.node_, b.node_}));
}
Formula Formula::iff(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{NodeKind::Iff, {}, a.node_, b.node_}));
}

NodeKind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
Formula Formula::left() const {
  if (!node_->lhs) throw DomainError("formula node has no operand");
  return Formula(node_->lhs);
}
Formula Formula::right() const {
  if (!node_->rhs) throw DomainError("formula node has no right operand");
  return Formula(node_->rhs);
}

bool Formula::is_unary() const {
  return node_->kind == NodeKind::Not || node_->kind == NodeKind::Diamond || node_->kind == NodeKind::Box;
}
bool Formula::is_binary() const { return node_->rhs != nullptr; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.name() != b.name()) return false;
  if (a.is_unary() || a.is_binary()) {
    if (!(a.left() == b.left())) return false;
  }
  return !a.is_binary() || a.right() == b.right();
}

Formula parse_formula(std::string_view text) { return Parser(tokenize(text)).parse(); }

std::string print_formula(const Formula& f) {
  std::string out;
  print_into(f, 0, out);
  return out;
}

std::vector<std::string> variables(const Formula& f) {
  std::vector<std::string> out;
  collect_variables(f, out);
  return out;
}

int formula_depth(const Formula& f) {
  int d = 0;
  if (f.is_unary() || f.is_binary()) d = formula_depth(f.left());
  if (f.is_binary()) d = std::max(d, formula_depth(f.right()));
  return d + 1;
}

const std::vector<std::string>& axiom_names() {
  static const std::vector<std::string> names = {"K", "D", "T", "4", "B", "B2",
                                                 "Dum", "Grz", "M", "G2", "H3", "R1"};
  return names;
}

Formula axiom(std::string_view name) {
  static const std::map<std::string, std::string, std::less<>> catalog = {
      {"K", "[](p -> q) -> ([]p -> []q)"},
      {"D", "[]p -> <>p"},
      {"T", "p -> <>p"},
      {"4", "<><>p -> <>p"},
      {"B", "p -> []<>p"},
      {"B2", "<>([]q & <>[]p & ~p) -> q"},
      {"Dum", "[]([](p -> []p) -> p) & <>[]p -> p"},
      {"Grz", "[](<>(p & <>~p) | p) -> p"},
      {"M", "[]<>p -> <>[]p"},
      {"G2", "<>[]p -> []<>p"},
      {"H3", "[]([]p -> q) | []([]q -> p)"},
      {"R1", "p & <>[]p -> []p"},
  };
  static const std::map<std::string, std::string, std::less<>> aliases = {
      {".1", "M"}, {".2", "G2"}, {"G", "G2"}, {".3", "H3"}, {"H", "H3"}};
  std::string_view key = name;
  if (const auto a = aliases.find(name); a != aliases.end()) key = a->second;
  const auto it = catalog.find(key);
  if (it == catalog.end()) throw LookupError("unknown axiom '" + std::string(name) + "'");
  return parse_formula(it->second);
}

Formula meet_axiom(const Formula& phi, const Formula& psi) {
  int next = 0;
  auto fresh = [&](const Formula& f) {
    std::unordered_map<std::string, std::string> names;
    for (const std::string& v : variables(f)) names[v] = "v" + std::to_string(next++);
    return rename(f, names);
  };
  Formula a = fresh(phi);
  Formula b = fresh(psi);
  return Formula::disj(Formula::box(a), Formula::box(b));
}

Rule rule_P2() { return Rule{{parse_formula("<>p & <>~p")}, Formula::bottom()}; }

std::string print_rule(const Rule& r) {
  std::string out;
  for (std::size_t i = 0; i < r.premises.size(); ++i) {
    if (i > 0) out += ", ";
    out += print_formula(r.premises[i]);
  }
  return out + " / " + print_formula(r.conclusion);
}

}  // namespace depth2
