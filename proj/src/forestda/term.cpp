#include "forestda/term.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace fda {

bool alphabet_contains(const Alphabet& alphabet, const std::string& label) {
  return std::find(alphabet.begin(), alphabet.end(), label) != alphabet.end();
}

std::size_t node_count(const TreeSeq& seq) {
  std::size_t n = 0;
  for (const Tree& t : seq) {
    if (!t.is_hole()) n += 1 + node_count(t.children);
  }
  return n;
}

std::size_t node_count(const Forest& f) { return node_count(f.trees); }
std::size_t node_count(const Context& c) { return node_count(c.trees); }

std::size_t hole_count(const TreeSeq& seq) {
  std::size_t n = 0;
  for (const Tree& t : seq) {
    if (t.is_hole())
      ++n;
    else
      n += hole_count(t.children);
  }
  return n;
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const Alphabet& alphabet)
      : text_(text), alphabet_(alphabet) {}

  TreeSeq parse_term() {
    skip_ws();
    TreeSeq seq = parse_seq();
    skip_ws();
    if (pos_ != text_.size())
      raise(ErrorCode::Syntax,
            "unexpected input at position " + std::to_string(pos_));
    return seq;
  }

 private:
  TreeSeq parse_seq() {
    skip_ws();
    if (peek() == '0') {
      ++pos_;
      skip_ws();
      // "0" denotes the empty forest and stands alone.
      if (pos_ != text_.size() && peek() != ')')
        raise(ErrorCode::Syntax,
              "'0' must stand alone as the empty forest (position " +
                  std::to_string(pos_) + ")");
      return {};
    }
    TreeSeq seq;
    seq.push_back(parse_tree());
    skip_ws();
    while (pos_ < text_.size() && peek() == '+') {
      ++pos_;
      seq.push_back(parse_tree());
      skip_ws();
    }
    return seq;
  }

  Tree parse_tree() {
    skip_ws();
    if (pos_ >= text_.size())
      raise(ErrorCode::Syntax, "unexpected end of input");
    if (peek() == '[') {
      ++pos_;
      if (pos_ >= text_.size() || text_[pos_] != ']')
        raise(ErrorCode::Syntax,
              "expected ']' at position " + std::to_string(pos_));
      ++pos_;
      return Tree{};
    }
    if (!std::isalpha(static_cast<unsigned char>(peek())))
      raise(ErrorCode::Syntax,
            "expected label at position " + std::to_string(pos_));
    std::string label;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      label.push_back(text_[pos_++]);
    }
    if (!alphabet_contains(alphabet_, label))
      raise(ErrorCode::UnknownLabel, "label '" + label + "' not in alphabet");
    Tree t{label, {}};
    skip_ws();
    if (pos_ < text_.size() && peek() == '(') {
      ++pos_;
      t.children = parse_seq();
      skip_ws();
      if (pos_ >= text_.size() || peek() != ')')
        raise(ErrorCode::Syntax,
              "expected ')' at position " + std::to_string(pos_));
      ++pos_;
    }
    return t;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  const std::string& text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

Forest parse_forest(const std::string& text, const Alphabet& alphabet) {
  TreeSeq seq = Parser(text, alphabet).parse_term();
  if (hole_count(seq) != 0)
    raise(ErrorCode::HoleCount, "forest must not contain a hole");
  return Forest{std::move(seq)};
}

Context parse_context(const std::string& text, const Alphabet& alphabet) {
  TreeSeq seq = Parser(text, alphabet).parse_term();
  const std::size_t holes = hole_count(seq);
  if (holes != 1)
    raise(ErrorCode::HoleCount, "context must contain exactly one hole, found " +
                                    std::to_string(holes));
  return Context{std::move(seq)};
}

namespace {

void render_seq(const TreeSeq& seq, std::string& out) {
  if (seq.empty()) {
    out += '0';
    return;
  }
  bool first = true;
  for (const Tree& t : seq) {
    if (!first) out += '+';
    first = false;
    if (t.is_hole()) {
      out += "[]";
      continue;
    }
    out += t.label;
    if (!t.children.empty()) {
      out += '(';
      render_seq(t.children, out);
      out += ')';
    }
  }
}

}  // namespace

std::string render(const TreeSeq& seq) {
  std::string out;
  render_seq(seq, out);
  return out;
}

std::string render(const Forest& f) { return render(f.trees); }
std::string render(const Context& c) { return render(c.trees); }

namespace {

// Replaces the unique hole in `seq` by `fill`, splicing at the hole's
// position among its siblings. Returns true when the hole was found.
bool splice_hole(TreeSeq& seq, const TreeSeq& fill) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i].is_hole()) {
      seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(i));
      seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(i), fill.begin(),
                 fill.end());
      return true;
    }
    if (splice_hole(seq[i].children, fill)) return true;
  }
  return false;
}

}  // namespace

Forest apply_context(const Context& p, const Forest& s) {
  TreeSeq seq = p.trees;
  if (!splice_hole(seq, s.trees))
    raise(ErrorCode::Internal, "context without hole");
  return Forest{std::move(seq)};
}

Context compose_contexts(const Context& q, const Context& p) {
  TreeSeq seq = q.trees;
  if (!splice_hole(seq, p.trees))
    raise(ErrorCode::Internal, "context without hole");
  return Context{std::move(seq)};
}

Forest concat_forests(const Forest& s, const Forest& t) {
  Forest out = s;
  out.trees.insert(out.trees.end(), t.trees.begin(), t.trees.end());
  return out;
}

Context identity_context() { return Context{{Tree{}}}; }

namespace {

// Lists the nodes of `seq` in preorder; used to index deletion subsets.
void collect_paths(const TreeSeq& seq, std::vector<const Tree*>& nodes) {
  for (const Tree& t : seq) {
    if (t.is_hole()) continue;
    nodes.push_back(&t);
    collect_paths(t.children, nodes);
  }
}

// Rebuilds the term induced by the kept nodes: a deleted node's children
// splice into its position, in order. Deletions commute, so the deletion
// closure is exactly the set of induced terms over all keep-subsets.
TreeSeq induce(const TreeSeq& seq, const std::set<const Tree*>& kept) {
  TreeSeq out;
  for (const Tree& t : seq) {
    if (t.is_hole()) {
      out.push_back(t);
      continue;
    }
    TreeSeq sub = induce(t.children, kept);
    if (kept.count(&t)) {
      out.push_back(Tree{t.label, std::move(sub)});
    } else {
      for (Tree& c : sub) out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<TreeSeq> closure_seqs(const TreeSeq& seq) {
  std::vector<const Tree*> nodes;
  collect_paths(seq, nodes);
  const std::size_t n = nodes.size();
  if (n > 20)
    raise(ErrorCode::SizeLimit,
          "piece closure limited to terms with at most 20 nodes, got " +
              std::to_string(n));
  std::set<std::pair<std::size_t, std::string>> seen;
  std::vector<TreeSeq> out;
  for (std::size_t mask = 0; mask < (1ull << n); ++mask) {
    std::set<const Tree*> kept;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ull << i)) kept.insert(nodes[i]);
    TreeSeq piece = induce(seq, kept);
    auto key = std::make_pair(node_count(piece), render(piece));
    if (seen.insert(key).second) out.push_back(std::move(piece));
  }
  std::sort(out.begin(), out.end(), [](const TreeSeq& a, const TreeSeq& b) {
    auto ka = std::make_pair(node_count(a), render(a));
    auto kb = std::make_pair(node_count(b), render(b));
    return ka < kb;
  });
  return out;
}

}  // namespace

std::vector<Forest> piece_closure(const Forest& t) {
  std::vector<Forest> out;
  for (TreeSeq& s : closure_seqs(t.trees)) out.push_back(Forest{std::move(s)});
  return out;
}

std::vector<Context> piece_closure(const Context& t) {
  std::vector<Context> out;
  for (TreeSeq& s : closure_seqs(t.trees)) out.push_back(Context{std::move(s)});
  return out;
}

namespace {

template <typename T>
bool is_piece_impl(const T& s, const T& t) {
  if (node_count(s) > node_count(t)) return false;
  const std::string want = render(s);
  for (const T& piece : piece_closure(t))
    if (render(piece) == want) return true;
  return false;
}

}  // namespace

bool is_piece_term(const Forest& s, const Forest& t) {
  return is_piece_impl(s, t);
}

bool is_piece_term(const Context& s, const Context& t) {
  return is_piece_impl(s, t);
}

namespace {

// forests_exact[n] and context-forests with exactly n labelled nodes.
class Enumerator {
 public:
  explicit Enumerator(const Alphabet& alphabet) : alphabet_(alphabet) {}

  const std::vector<TreeSeq>& forests(std::size_t n) {
    grow_forests(n);
    return forests_[n];
  }

  const std::vector<TreeSeq>& ctx_forests(std::size_t n) {
    grow_ctx(n);
    return ctx_forests_[n];
  }

 private:
  void grow_forests(std::size_t n) {
    while (forests_.size() <= n) {
      const std::size_t k = forests_.size();
      std::vector<TreeSeq> out;
      if (k == 0) {
        out.push_back({});
      } else {
        // First tree uses i nodes, rest of the sequence uses k-i.
        for (std::size_t i = 1; i <= k; ++i) {
          for (const Tree& first : trees(i)) {
            for (const TreeSeq& rest : forests_[k - i]) {
              TreeSeq seq{first};
              seq.insert(seq.end(), rest.begin(), rest.end());
              out.push_back(std::move(seq));
            }
          }
        }
      }
      forests_.push_back(std::move(out));
    }
  }

  const std::vector<Tree>& trees(std::size_t n) {
    grow_forests(n - 1);
    while (trees_.size() <= n) {
      const std::size_t k = trees_.size();
      std::vector<Tree> out;
      if (k >= 1) {
        for (const std::string& label : alphabet_)
          for (const TreeSeq& children : forests_[k - 1])
            out.push_back(Tree{label, children});
      }
      trees_.push_back(std::move(out));
    }
    return trees_[n];
  }

  void grow_ctx(std::size_t n) {
    while (ctx_forests_.size() <= n) {
      const std::size_t k = ctx_forests_.size();
      grow_forests(k);
      std::vector<TreeSeq> out;
      // Split k nodes as left forest + context tree + right forest.
      for (std::size_t i = 0; i <= k; ++i) {
        for (std::size_t j = 0; i + j <= k; ++j) {
          const std::size_t l = k - i - j;
          for (const TreeSeq& left : forests_[i]) {
            for (const Tree& ct : ctx_trees(j)) {
              for (const TreeSeq& right : forests_[l]) {
                TreeSeq seq = left;
                seq.push_back(ct);
                seq.insert(seq.end(), right.begin(), right.end());
                out.push_back(std::move(seq));
              }
            }
          }
        }
      }
      ctx_forests_.push_back(std::move(out));
    }
  }

  const std::vector<Tree>& ctx_trees(std::size_t n) {
    if (n > 0) grow_ctx(n - 1);
    while (ctx_trees_.size() <= n) {
      const std::size_t k = ctx_trees_.size();
      std::vector<Tree> out;
      if (k == 0) {
        out.push_back(Tree{});
      } else {
        for (const std::string& label : alphabet_)
          for (const TreeSeq& children : ctx_forests_[k - 1])
            out.push_back(Tree{label, children});
      }
      ctx_trees_.push_back(std::move(out));
    }
    return ctx_trees_[n];
  }

  const Alphabet& alphabet_;
  std::vector<std::vector<TreeSeq>> forests_;
  std::vector<std::vector<Tree>> trees_;
  std::vector<std::vector<TreeSeq>> ctx_forests_;
  std::vector<std::vector<Tree>> ctx_trees_;
};

template <typename T>
std::vector<T> sorted_terms(std::vector<std::vector<TreeSeq>> by_count) {
  std::vector<T> out;
  for (auto& bucket : by_count) {
    std::sort(bucket.begin(), bucket.end(),
              [](const TreeSeq& a, const TreeSeq& b) {
                return render(a) < render(b);
              });
    for (TreeSeq& seq : bucket) out.push_back(T{std::move(seq)});
  }
  return out;
}

}  // namespace

std::vector<Forest> enumerate_forests(const Alphabet& alphabet,
                                      std::size_t max_nodes) {
  Enumerator e(alphabet);
  std::vector<std::vector<TreeSeq>> buckets;
  for (std::size_t n = 0; n <= max_nodes; ++n) buckets.push_back(e.forests(n));
  return sorted_terms<Forest>(std::move(buckets));
}

std::vector<Context> enumerate_contexts(const Alphabet& alphabet,
                                        std::size_t max_nodes) {
  Enumerator e(alphabet);
  std::vector<std::vector<TreeSeq>> buckets;
  for (std::size_t n = 0; n <= max_nodes; ++n)
    buckets.push_back(e.ctx_forests(n));
  return sorted_terms<Context>(std::move(buckets));
}

unsigned long long count_forests_exact(std::size_t alphabet_size,
                                       std::size_t n) {
  std::vector<unsigned long long> f(n + 1, 0), t(n + 1, 0);
  f[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    t[k] = alphabet_size * f[k - 1];
    unsigned long long sum = 0;
    for (std::size_t i = 1; i <= k; ++i) sum += t[i] * f[k - i];
    f[k] = sum;
  }
  return f[n];
}

}  // namespace fda
