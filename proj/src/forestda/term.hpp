#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "forestda/errors.hpp"

namespace fda {

using Alphabet = std::vector<std::string>;

bool alphabet_contains(const Alphabet& alphabet, const std::string& label);

/// One node of an unranked ordered tree. An empty label marks the context
/// hole; hole nodes never have children.
struct Tree;
using TreeSeq = std::vector<Tree>;

struct Tree {
  std::string label;
  TreeSeq children;

  bool is_hole() const { return label.empty(); }
  bool operator==(const Tree& other) const = default;
};

/// A forest: a finite ordered sequence of trees. The empty sequence is the
/// empty forest, written 0.
struct Forest {
  TreeSeq trees;

  bool operator==(const Forest& other) const = default;
};

/// A context: a forest in which exactly one leaf is the hole, written [].
struct Context {
  TreeSeq trees;

  bool operator==(const Context& other) const = default;
};

enum class TermKind { Forest, Context };

std::size_t node_count(const TreeSeq& seq);
std::size_t node_count(const Forest& f);
std::size_t node_count(const Context& c);
std::size_t hole_count(const TreeSeq& seq);

/// Parses the term grammar:
///   Forest  := "0" | Tree ("+" Tree)*
///   Tree    := LABEL ["(" Forest ")"] | "[]"
///   LABEL   := [A-Za-z][A-Za-z0-9_]*
/// Contexts use the same grammar with exactly one "[]" leaf.
Forest parse_forest(const std::string& text, const Alphabet& alphabet);
Context parse_context(const std::string& text, const Alphabet& alphabet);

std::string render(const TreeSeq& seq);
std::string render(const Forest& f);
std::string render(const Context& c);

/// ps: the forest obtained by substituting s for the hole of p.
Forest apply_context(const Context& p, const Forest& s);

/// qp: the context obtained by replacing the hole of q with p.
Context compose_contexts(const Context& q, const Context& p);

/// s+t: root sequences concatenated; 0 is a two-sided identity.
Forest concat_forests(const Forest& s, const Forest& t);

Context identity_context();

/// All pieces of a term: the closure of the term under deleting a single
/// node (the deleted node's children splice into its position, preserving
/// order; the hole of a context is never deleted). Result is deduplicated
/// and listed in enumeration order (node count, then rendered text).
std::vector<Forest> piece_closure(const Forest& t);
std::vector<Context> piece_closure(const Context& t);

bool is_piece_term(const Forest& s, const Forest& t);
bool is_piece_term(const Context& s, const Context& t);

/// All forests (contexts) over the alphabet with at most max_nodes nodes,
/// each exactly once, ordered by node count and then lexicographically by
/// rendered text.
std::vector<Forest> enumerate_forests(const Alphabet& alphabet, std::size_t max_nodes);
std::vector<Context> enumerate_contexts(const Alphabet& alphabet, std::size_t max_nodes);

/// Number of forests with exactly n nodes, by the recurrence
///   t(n) = |A| * f(n-1),  f(n) = sum_{i=1..n} t(i) * f(n-i),  f(0) = 1.
/// Used as an independent cross-check of the enumerator.
unsigned long long count_forests_exact(std::size_t alphabet_size, std::size_t n);

}  // namespace fda
