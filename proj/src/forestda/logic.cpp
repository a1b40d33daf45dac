#include "forestda/logic.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace fda {

namespace {

FormulaPtr make(Formula f) {
  return std::make_shared<const Formula>(std::move(f));
}

class FormulaParser {
 public:
  explicit FormulaParser(const std::string& text) : text_(text) {}

  FormulaPtr parse() {
    FormulaPtr f = formula();
    skip_ws();
    if (pos_ != text_.size())
      raise(ErrorCode::Syntax,
            "unexpected input at position " + std::to_string(pos_));
    return f;
  }

 private:
  FormulaPtr formula() {
    skip_ws();
    const std::size_t mark = pos_;
    std::string word = ident();
    if ((word == "E" || word == "A") && peek_ident()) {
      std::string var = ident();
      FormulaPtr body = formula();
      Formula f;
      f.kind = word == "E" ? Formula::Kind::Exists : Formula::Kind::Forall;
      f.var1 = std::move(var);
      f.children.push_back(std::move(body));
      return make(std::move(f));
    }
    pos_ = mark;
    return disjunction();
  }

  FormulaPtr disjunction() {
    FormulaPtr lhs = conjunction();
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == '|') {
      ++pos_;
      FormulaPtr rhs = conjunction();
      Formula f;
      f.kind = Formula::Kind::Or;
      f.children = {std::move(lhs), std::move(rhs)};
      lhs = make(std::move(f));
      skip_ws();
    }
    return lhs;
  }

  FormulaPtr conjunction() {
    FormulaPtr lhs = unary();
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == '&') {
      ++pos_;
      FormulaPtr rhs = unary();
      Formula f;
      f.kind = Formula::Kind::And;
      f.children = {std::move(lhs), std::move(rhs)};
      lhs = make(std::move(f));
      skip_ws();
    }
    return lhs;
  }

  FormulaPtr unary() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '!') {
      ++pos_;
      Formula f;
      f.kind = Formula::Kind::Not;
      f.children = {unary()};
      return make(std::move(f));
    }
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      FormulaPtr inner = formula();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')')
        raise(ErrorCode::Syntax,
              "expected ')' at position " + std::to_string(pos_));
      ++pos_;
      return inner;
    }
    return atom();
  }

  FormulaPtr atom() {
    skip_ws();
    std::string first = ident();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      std::string var = ident();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')')
        raise(ErrorCode::Syntax,
              "expected ')' at position " + std::to_string(pos_));
      ++pos_;
      Formula f;
      f.kind = Formula::Kind::Label;
      f.label = std::move(first);
      f.var1 = std::move(var);
      return make(std::move(f));
    }
    if (pos_ < text_.size() && text_[pos_] == '=') {
      ++pos_;
      Formula f;
      f.kind = Formula::Kind::Eq;
      f.var1 = std::move(first);
      f.var2 = ident();
      return make(std::move(f));
    }
    if (pos_ < text_.size() && text_[pos_] == '<') {
      ++pos_;
      Formula f;
      f.kind = Formula::Kind::Less;
      // "<lex" when the three letters form a standalone keyword.
      if (text_.compare(pos_, 3, "lex") == 0) {
        const std::size_t after = pos_ + 3;
        const bool ident_continues =
            after < text_.size() &&
            (std::isalnum(static_cast<unsigned char>(text_[after])) ||
             text_[after] == '_');
        if (!ident_continues) {
          f.kind = Formula::Kind::LessLex;
          pos_ = after;
        }
      }
      f.var1 = std::move(first);
      f.var2 = ident();
      return make(std::move(f));
    }
    raise(ErrorCode::Syntax,
          "expected an atom at position " + std::to_string(pos_));
  }

  std::string ident() {
    skip_ws();
    if (pos_ >= text_.size() ||
        !std::isalpha(static_cast<unsigned char>(text_[pos_])))
      raise(ErrorCode::Syntax,
            "expected an identifier at position " + std::to_string(pos_));
    std::string out;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      out.push_back(text_[pos_++]);
    return out;
  }

  bool peek_ident() {
    const std::size_t mark = pos_;
    skip_ws();
    const bool ok =
        pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]));
    pos_ = mark;
    return ok;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
  return FormulaParser(text).parse();
}

std::string render_formula(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Label:
      return f.label + "(" + f.var1 + ")";
    case Formula::Kind::Less:
      return f.var1 + "<" + f.var2;
    case Formula::Kind::LessLex:
      return f.var1 + "<lex " + f.var2;
    case Formula::Kind::Eq:
      return f.var1 + "=" + f.var2;
    case Formula::Kind::Not:
      return "!(" + render_formula(*f.children[0]) + ")";
    case Formula::Kind::And:
      return "(" + render_formula(*f.children[0]) + " & " +
             render_formula(*f.children[1]) + ")";
    case Formula::Kind::Or:
      return "(" + render_formula(*f.children[0]) + " | " +
             render_formula(*f.children[1]) + ")";
    case Formula::Kind::Exists:
      return "E " + f.var1 + " " + render_formula(*f.children[0]);
    case Formula::Kind::Forall:
      return "A " + f.var1 + " " + render_formula(*f.children[0]);
  }
  raise(ErrorCode::Internal, "unknown formula kind");
}

namespace {

void free_vars_into(const Formula& f, std::set<std::string>& bound,
                    std::vector<std::string>& out) {
  switch (f.kind) {
    case Formula::Kind::Label:
      if (!bound.count(f.var1)) out.push_back(f.var1);
      return;
    case Formula::Kind::Less:
    case Formula::Kind::LessLex:
    case Formula::Kind::Eq:
      if (!bound.count(f.var1)) out.push_back(f.var1);
      if (!bound.count(f.var2)) out.push_back(f.var2);
      return;
    case Formula::Kind::Not:
    case Formula::Kind::And:
    case Formula::Kind::Or:
      for (const auto& c : f.children) free_vars_into(*c, bound, out);
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      const bool fresh = bound.insert(f.var1).second;
      free_vars_into(*f.children[0], bound, out);
      if (fresh) bound.erase(f.var1);
      return;
    }
  }
}

}  // namespace

std::vector<std::string> free_variables(const Formula& f) {
  std::set<std::string> bound;
  std::vector<std::string> out;
  free_vars_into(f, bound, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Flattened node structure of a forest (or context): preorder ids with
// parent links and sibling positions. The hole, when present, is an
// ordinary unlabelled node.
struct Structure {
  std::vector<std::string> labels;
  std::vector<int> parent;       // -1 for roots
  std::vector<int> child_index;  // position among siblings
  int hole = -1;

  int size() const { return static_cast<int>(labels.size()); }

  bool strict_ancestor(int x, int y) const {
    for (int p = parent[static_cast<std::size_t>(y)]; p != -1; p = parent[static_cast<std::size_t>(p)])
      if (p == x) return true;
    return false;
  }

  bool ancestor_or_self(int x, int y) const {
    return x == y || strict_ancestor(x, y);
  }

  // x <lex y iff x < y, or some x' <= x and y' <= y are siblings with x'
  // to the left of y'. Roots of distinct trees count as siblings.
  bool lex_less(int x, int y) const {
    if (strict_ancestor(x, y)) return true;
    for (int xa = x; xa != -1; xa = parent[static_cast<std::size_t>(xa)])
      for (int ya = y; ya != -1; ya = parent[static_cast<std::size_t>(ya)])
        if (xa != ya &&
            parent[static_cast<std::size_t>(xa)] == parent[static_cast<std::size_t>(ya)] &&
            child_index[static_cast<std::size_t>(xa)] < child_index[static_cast<std::size_t>(ya)])
          return true;
    return false;
  }
};

void flatten(const TreeSeq& seq, int parent, Structure& s) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const int id = s.size();
    s.labels.push_back(seq[i].label);
    s.parent.push_back(parent);
    s.child_index.push_back(static_cast<int>(i));
    if (seq[i].is_hole()) s.hole = id;
    flatten(seq[i].children, id, s);
  }
}

bool eval_on(const Structure& s, const Formula& f,
             std::map<std::string, int>& env) {
  switch (f.kind) {
    case Formula::Kind::Label: {
      auto it = env.find(f.var1);
      if (it == env.end())
        raise(ErrorCode::UnboundVariable, "variable '" + f.var1 + "'");
      return s.labels[static_cast<std::size_t>(it->second)] == f.label;
    }
    case Formula::Kind::Less:
    case Formula::Kind::LessLex:
    case Formula::Kind::Eq: {
      auto it1 = env.find(f.var1);
      auto it2 = env.find(f.var2);
      if (it1 == env.end())
        raise(ErrorCode::UnboundVariable, "variable '" + f.var1 + "'");
      if (it2 == env.end())
        raise(ErrorCode::UnboundVariable, "variable '" + f.var2 + "'");
      if (f.kind == Formula::Kind::Eq) return it1->second == it2->second;
      if (f.kind == Formula::Kind::Less)
        return s.strict_ancestor(it1->second, it2->second);
      return s.lex_less(it1->second, it2->second);
    }
    case Formula::Kind::Not:
      return !eval_on(s, *f.children[0], env);
    case Formula::Kind::And:
      return eval_on(s, *f.children[0], env) &&
             eval_on(s, *f.children[1], env);
    case Formula::Kind::Or:
      return eval_on(s, *f.children[0], env) ||
             eval_on(s, *f.children[1], env);
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      const bool exists = f.kind == Formula::Kind::Exists;
      const auto previous = env.find(f.var1) == env.end()
                                ? std::optional<int>()
                                : std::optional<int>(env[f.var1]);
      for (int node = 0; node < s.size(); ++node) {
        env[f.var1] = node;
        const bool value = eval_on(s, *f.children[0], env);
        if (value == exists) {
          if (previous)
            env[f.var1] = *previous;
          else
            env.erase(f.var1);
          return exists;
        }
      }
      if (previous)
        env[f.var1] = *previous;
      else
        env.erase(f.var1);
      return !exists;  // empty domain: E false, A true
    }
  }
  raise(ErrorCode::Internal, "unknown formula kind");
}

}  // namespace

bool eval_formula(const Formula& f, const Forest& t,
                  const std::map<std::string, int>& assignment) {
  Structure s;
  flatten(t.trees, -1, s);
  std::map<std::string, int> env = assignment;
  for (const auto& [var, node] : env)
    if (node < 0 || node >= s.size())
      raise(ErrorCode::ForeignNode,
            "assignment for '" + var + "' is not a node of the forest");
  return eval_on(s, f, env);
}

bool eval_formula_on_context(const Formula& f, const Context& t,
                             const std::string& hole_var) {
  Structure s;
  flatten(t.trees, -1, s);
  if (s.hole < 0) raise(ErrorCode::Internal, "context without hole");
  std::map<std::string, int> env;
  env[hole_var] = s.hole;
  return eval_on(s, f, env);
}

const char* prenex_class_name(PrenexClass cls) {
  switch (cls) {
    case PrenexClass::Sigma0: return "Sigma0";
    case PrenexClass::Sigma1: return "Sigma1";
    case PrenexClass::Pi1: return "Pi1";
    case PrenexClass::Sigma2: return "Sigma2";
    case PrenexClass::Pi2: return "Pi2";
    case PrenexClass::Higher: return "higher";
  }
  return "?";
}

namespace {

bool quantifier_free(const Formula& f) {
  if (f.kind == Formula::Kind::Exists || f.kind == Formula::Kind::Forall)
    return false;
  for (const auto& c : f.children)
    if (!quantifier_free(*c)) return false;
  return true;
}

}  // namespace

PrenexClass classify_prenex(const Formula& f) {
  int blocks = 0;
  bool first_is_exists = false;
  Formula::Kind current = Formula::Kind::Label;  // no block yet
  const Formula* cursor = &f;
  while (cursor->kind == Formula::Kind::Exists ||
         cursor->kind == Formula::Kind::Forall) {
    if (blocks == 0 || cursor->kind != current) {
      if (blocks == 0) first_is_exists = cursor->kind == Formula::Kind::Exists;
      current = cursor->kind;
      ++blocks;
    }
    cursor = cursor->children[0].get();
  }
  if (!quantifier_free(*cursor))
    raise(ErrorCode::NotPrenex, "quantifier below a connective");
  if (blocks == 0) return PrenexClass::Sigma0;
  if (blocks == 1) return first_is_exists ? PrenexClass::Sigma1 : PrenexClass::Pi1;
  if (blocks == 2) return first_is_exists ? PrenexClass::Sigma2 : PrenexClass::Pi2;
  return PrenexClass::Higher;
}

// ---------------------------------------------------------------------------
// Sigma-2 expressions

struct Sigma2Expr::Node {
  enum class Op {
    BaseForest,
    BaseContext,
    LetterContext,
    HoleSingleton,
    Compose,
    Concat,
    Apply,
    Union,
    Inter,
  };

  Op op;
  Alphabet alphabet;
  std::vector<Forest> forbidden_forests;
  std::vector<Context> forbidden_contexts;
  std::string label;
  std::shared_ptr<const Node> left, right;

  TermKind kind() const {
    switch (op) {
      case Op::BaseForest:
      case Op::Concat:
      case Op::Apply:
        return TermKind::Forest;
      case Op::BaseContext:
      case Op::LetterContext:
      case Op::HoleSingleton:
      case Op::Compose:
        return TermKind::Context;
      case Op::Union:
      case Op::Inter:
        return left->kind();
    }
    raise(ErrorCode::Internal, "unknown expression node");
  }
};

namespace {

using ExprNode = Sigma2Expr::Node;

}  // namespace

Sigma2Expr Sigma2Expr::base_forest(Alphabet alphabet,
                                   std::vector<Forest> forbidden_pieces) {
  auto node = std::make_shared<ExprNode>();
  node->op = ExprNode::Op::BaseForest;
  node->alphabet = std::move(alphabet);
  node->forbidden_forests = std::move(forbidden_pieces);
  Sigma2Expr e;
  e.root_ = std::move(node);
  return e;
}

Sigma2Expr Sigma2Expr::base_context(Alphabet alphabet,
                                    std::vector<Context> forbidden_pieces) {
  auto node = std::make_shared<ExprNode>();
  node->op = ExprNode::Op::BaseContext;
  node->alphabet = std::move(alphabet);
  node->forbidden_contexts = std::move(forbidden_pieces);
  Sigma2Expr e;
  e.root_ = std::move(node);
  return e;
}

Sigma2Expr Sigma2Expr::letter_context(Alphabet alphabet, std::string label) {
  if (!alphabet_contains(alphabet, label))
    raise(ErrorCode::UnknownLabel, "label '" + label + "' not in alphabet");
  auto node = std::make_shared<ExprNode>();
  node->op = ExprNode::Op::LetterContext;
  node->alphabet = std::move(alphabet);
  node->label = std::move(label);
  Sigma2Expr e;
  e.root_ = std::move(node);
  return e;
}

Sigma2Expr Sigma2Expr::hole_singleton(Alphabet alphabet) {
  auto node = std::make_shared<ExprNode>();
  node->op = ExprNode::Op::HoleSingleton;
  node->alphabet = std::move(alphabet);
  Sigma2Expr e;
  e.root_ = std::move(node);
  return e;
}

namespace {

void require_kind(const ExprNode& node, TermKind want, const char* side) {
  if (node.kind() != want)
    raise(ErrorCode::KindMismatch,
          std::string(side) + " operand has the wrong kind");
}

}  // namespace

Sigma2Expr Sigma2Expr::compose(Sigma2Expr k, Sigma2Expr k2) {
  require_kind(*k.root_, TermKind::Context, "left");
  require_kind(*k2.root_, TermKind::Context, "right");
  auto node = std::make_shared<ExprNode>();
  node->op = ExprNode::Op::Compose;
  node->alphabet = k.root_->alphabet;
  node->left = std::move(k.root_);
  node->right = std::move(k2.root_);
  Sigma2Expr e;
  e.root_ = std::move(node);
  return e;
}

Sigma2Expr Sigma2Expr::concat(Sigma2Expr l, Sigma2Expr l2) {
  require_kind(*l.root_, TermKind::Forest, "left");
  require_kind(*l2.root_, TermKind::Forest, "right");
  auto node = std::make_shared<ExprNode>();
  node->op = ExprNode::Op::Concat;
  node->alphabet = l.root_->alphabet;
  node->left = std::move(l.root_);
  node->right = std::move(l2.root_);
  Sigma2Expr e;
  e.root_ = std::move(node);
  return e;
}

Sigma2Expr Sigma2Expr::apply(Sigma2Expr k, Sigma2Expr l) {
  require_kind(*k.root_, TermKind::Context, "left");
  require_kind(*l.root_, TermKind::Forest, "right");
  auto node = std::make_shared<ExprNode>();
  node->op = ExprNode::Op::Apply;
  node->alphabet = k.root_->alphabet;
  node->left = std::move(k.root_);
  node->right = std::move(l.root_);
  Sigma2Expr e;
  e.root_ = std::move(node);
  return e;
}

Sigma2Expr Sigma2Expr::unite(Sigma2Expr a, Sigma2Expr b) {
  if (a.root_->kind() != b.root_->kind())
    raise(ErrorCode::KindMismatch, "set operations need matching kinds");
  auto node = std::make_shared<ExprNode>();
  node->op = ExprNode::Op::Union;
  node->alphabet = a.root_->alphabet;
  node->left = std::move(a.root_);
  node->right = std::move(b.root_);
  Sigma2Expr e;
  e.root_ = std::move(node);
  return e;
}

Sigma2Expr Sigma2Expr::intersect(Sigma2Expr a, Sigma2Expr b) {
  if (a.root_->kind() != b.root_->kind())
    raise(ErrorCode::KindMismatch, "set operations need matching kinds");
  auto node = std::make_shared<ExprNode>();
  node->op = ExprNode::Op::Inter;
  node->alphabet = a.root_->alphabet;
  node->left = std::move(a.root_);
  node->right = std::move(b.root_);
  Sigma2Expr e;
  e.root_ = std::move(node);
  return e;
}

TermKind Sigma2Expr::kind() const { return root_->kind(); }

namespace {

struct MemoKey {
  const ExprNode* node;
  std::string term;

  bool operator<(const MemoKey& other) const {
    return node != other.node ? node < other.node : term < other.term;
  }
};

using Memo = std::map<MemoKey, bool>;

bool member_forest(const ExprNode& e, const Forest& t, Memo& memo);
bool member_context(const ExprNode& e, const Context& t, Memo& memo);

// All ways of writing t = q s: pick a node (or the root level) and a
// contiguous, possibly empty range of its child sequence as s.
void forest_decompositions(const TreeSeq& t,
                           std::vector<std::pair<Context, Forest>>& out) {
  for (std::size_t i = 0; i <= t.size(); ++i) {
    for (std::size_t j = i; j <= t.size(); ++j) {
      TreeSeq inner(t.begin() + static_cast<std::ptrdiff_t>(i),
                    t.begin() + static_cast<std::ptrdiff_t>(j));
      TreeSeq outer(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i));
      outer.push_back(Tree{});
      outer.insert(outer.end(), t.begin() + static_cast<std::ptrdiff_t>(j), t.end());
      out.emplace_back(Context{std::move(outer)}, Forest{std::move(inner)});
    }
  }
  for (std::size_t k = 0; k < t.size(); ++k) {
    std::vector<std::pair<Context, Forest>> sub;
    forest_decompositions(t[k].children, sub);
    for (auto& [outer_sub, inner] : sub) {
      TreeSeq outer = t;
      outer[k] = Tree{t[k].label, std::move(outer_sub.trees)};
      out.emplace_back(Context{std::move(outer)}, std::move(inner));
    }
  }
}

// All ways of writing context t = q q': the inner slice is a contiguous
// sibling range containing the hole path, at any level along it.
void context_decompositions(const TreeSeq& t,
                            std::vector<std::pair<Context, Context>>& out) {
  std::size_t k = t.size();
  for (std::size_t i = 0; i < t.size(); ++i)
    if (hole_count({t[i]}) > 0) {
      k = i;
      break;
    }
  if (k == t.size()) raise(ErrorCode::Internal, "context without hole");
  for (std::size_t i = 0; i <= k; ++i) {
    for (std::size_t j = k + 1; j <= t.size(); ++j) {
      TreeSeq inner(t.begin() + static_cast<std::ptrdiff_t>(i),
                    t.begin() + static_cast<std::ptrdiff_t>(j));
      TreeSeq outer(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i));
      outer.push_back(Tree{});
      outer.insert(outer.end(), t.begin() + static_cast<std::ptrdiff_t>(j), t.end());
      out.emplace_back(Context{std::move(outer)}, Context{std::move(inner)});
    }
  }
  if (!t[k].is_hole()) {
    std::vector<std::pair<Context, Context>> sub;
    context_decompositions(t[k].children, sub);
    for (auto& [outer_sub, inner] : sub) {
      TreeSeq outer = t;
      outer[k] = Tree{t[k].label, std::move(outer_sub.trees)};
      out.emplace_back(Context{std::move(outer)}, std::move(inner));
    }
  }
}

bool member_forest(const ExprNode& e, const Forest& t, Memo& memo) {
  if (e.kind() != TermKind::Forest)
    raise(ErrorCode::KindMismatch, "context expression applied to a forest");
  const MemoKey key{&e, render(t)};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  bool value = false;
  switch (e.op) {
    case ExprNode::Op::BaseForest: {
      value = true;
      for (const Forest& f : e.forbidden_forests)
        if (is_piece_term(f, t)) {
          value = false;
          break;
        }
      break;
    }
    case ExprNode::Op::Concat: {
      for (std::size_t i = 0; i <= t.trees.size() && !value; ++i) {
        Forest left{TreeSeq(t.trees.begin(), t.trees.begin() + static_cast<std::ptrdiff_t>(i))};
        Forest right{TreeSeq(t.trees.begin() + static_cast<std::ptrdiff_t>(i), t.trees.end())};
        value = member_forest(*e.left, left, memo) &&
                member_forest(*e.right, right, memo);
      }
      break;
    }
    case ExprNode::Op::Apply: {
      std::vector<std::pair<Context, Forest>> decomps;
      forest_decompositions(t.trees, decomps);
      for (const auto& [q, s] : decomps) {
        if (member_context(*e.left, q, memo) &&
            member_forest(*e.right, s, memo)) {
          value = true;
          break;
        }
      }
      break;
    }
    case ExprNode::Op::Union:
      value = member_forest(*e.left, t, memo) || member_forest(*e.right, t, memo);
      break;
    case ExprNode::Op::Inter:
      value = member_forest(*e.left, t, memo) && member_forest(*e.right, t, memo);
      break;
    default:
      raise(ErrorCode::Internal, "bad forest expression");
  }
  memo.emplace(key, value);
  return value;
}

bool member_context(const ExprNode& e, const Context& t, Memo& memo) {
  if (e.kind() != TermKind::Context)
    raise(ErrorCode::KindMismatch, "forest expression applied to a context");
  const MemoKey key{&e, render(t)};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  bool value = false;
  switch (e.op) {
    case ExprNode::Op::BaseContext: {
      value = true;
      for (const Context& f : e.forbidden_contexts)
        if (is_piece_term(f, t)) {
          value = false;
          break;
        }
      break;
    }
    case ExprNode::Op::LetterContext:
      value = t.trees.size() == 1 && !t.trees[0].is_hole() &&
              t.trees[0].label == e.label && t.trees[0].children.size() == 1 &&
              t.trees[0].children[0].is_hole();
      break;
    case ExprNode::Op::HoleSingleton:
      value = t == identity_context();
      break;
    case ExprNode::Op::Compose: {
      std::vector<std::pair<Context, Context>> decomps;
      context_decompositions(t.trees, decomps);
      for (const auto& [q, inner] : decomps) {
        if (member_context(*e.left, q, memo) &&
            member_context(*e.right, inner, memo)) {
          value = true;
          break;
        }
      }
      break;
    }
    case ExprNode::Op::Union:
      value = member_context(*e.left, t, memo) ||
              member_context(*e.right, t, memo);
      break;
    case ExprNode::Op::Inter:
      value = member_context(*e.left, t, memo) &&
              member_context(*e.right, t, memo);
      break;
    default:
      raise(ErrorCode::Internal, "bad context expression");
  }
  memo.emplace(key, value);
  return value;
}

}  // namespace

bool Sigma2Expr::member(const Forest& t) const {
  Memo memo;
  return member_forest(*root_, t, memo);
}

bool Sigma2Expr::member(const Context& t) const {
  Memo memo;
  return member_context(*root_, t, memo);
}

std::optional<Forest> formula_language_equal(const Formula& f,
                                             const Recognizer& rec,
                                             std::size_t max_nodes) {
  if (!free_variables(f).empty())
    raise(ErrorCode::UnboundVariable, "oracle formulas must be closed");
  if (max_nodes > 14)
    raise(ErrorCode::Arg, "oracle comparison capped at 14 nodes");
  for (const Forest& t : enumerate_forests(rec.alphabet, max_nodes))
    if (eval_formula(f, t) != member(rec, t)) return t;
  return std::nullopt;
}

}  // namespace fda
