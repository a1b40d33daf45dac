#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "forestda/algebra.hpp"

namespace fda {

/// First-order formulas over forests with label tests, the strict
/// ancestor order x<y, the lexicographic order x<lex y, and equality.
struct Formula {
  enum class Kind { Label, Less, LessLex, Eq, Not, And, Or, Exists, Forall };

  Kind kind;
  std::string label;  // Label
  std::string var1;   // Label / Less / LessLex / Eq / quantifiers
  std::string var2;   // Less / LessLex / Eq
  std::vector<std::shared_ptr<const Formula>> children;
};

using FormulaPtr = std::shared_ptr<const Formula>;

/// Parses prefix-quantifier formula syntax:
///   Formula := ("E"|"A") VAR Formula | Disj
///   Disj    := Conj ("|" Conj)*
///   Conj    := Unary ("&" Unary)*
///   Unary   := "!" Unary | "(" Formula ")" | Atom
///   Atom    := LABEL "(" VAR ")" | VAR "<" VAR | VAR "<lex" VAR | VAR "=" VAR
FormulaPtr parse_formula(const std::string& text);

std::string render_formula(const Formula& f);

std::vector<std::string> free_variables(const Formula& f);

/// Tarskian evaluation by exhaustive quantifier expansion over the node
/// set; the empty forest is a legal (empty-domain) structure.
bool eval_formula(const Formula& f, const Forest& t,
                  const std::map<std::string, int>& assignment = {});

/// Evaluation on a context: the designated free variable is mapped to the
/// hole, which carries no label.
bool eval_formula_on_context(const Formula& f, const Context& t,
                             const std::string& hole_var);

enum class PrenexClass { Sigma0, Sigma1, Pi1, Sigma2, Pi2, Higher };

const char* prenex_class_name(PrenexClass cls);

/// Counts quantifier blocks of a prenex formula; NotPrenex if a
/// quantifier occurs below a connective.
PrenexClass classify_prenex(const Formula& f);

/// Sigma-2 forest and context expressions: bases are piece-closed
/// languages (finite forbidden-piece sets), the letter contexts {a[]} and
/// {[]}; combinators are composition, concatenation, application, union
/// and intersection (kind-homogeneous).
class Sigma2Expr {
 public:
  static Sigma2Expr base_forest(Alphabet alphabet,
                                std::vector<Forest> forbidden_pieces);
  static Sigma2Expr base_context(Alphabet alphabet,
                                 std::vector<Context> forbidden_pieces);
  static Sigma2Expr letter_context(Alphabet alphabet, std::string label);
  static Sigma2Expr hole_singleton(Alphabet alphabet);
  static Sigma2Expr compose(Sigma2Expr k, Sigma2Expr k2);      // K K'
  static Sigma2Expr concat(Sigma2Expr l, Sigma2Expr l2);       // L + L'
  static Sigma2Expr apply(Sigma2Expr k, Sigma2Expr l);         // K L
  static Sigma2Expr unite(Sigma2Expr a, Sigma2Expr b);
  static Sigma2Expr intersect(Sigma2Expr a, Sigma2Expr b);

  TermKind kind() const;

  bool member(const Forest& t) const;   // KindMismatch on context exprs
  bool member(const Context& t) const;

  struct Node;

 private:
  Sigma2Expr() = default;
  std::shared_ptr<const Node> root_;
};

/// Compares a closed formula against a recognized language on every
/// forest of at most max_nodes nodes; returns the first difference in
/// enumeration order, if any.
std::optional<Forest> formula_language_equal(const Formula& f,
                                             const Recognizer& rec,
                                             std::size_t max_nodes);

}  // namespace fda
