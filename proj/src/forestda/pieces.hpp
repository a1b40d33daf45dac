#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "forestda/algebra.hpp"

namespace fda {

/// The piece relation on algebra elements, as the least fixpoint of:
///   seed ([], []); for each letter a: (a[], a[]) and ([], a[]);
///   (g, h) in P_H  =>  (g+[], h+[]) and ([]+g, []+h);
///   close P_V under pointwise composition;
///   P_H = { (v 0, w 0) : (v, w) in P_V }.
/// Pairs are ordered (piece, container).
struct PieceRelation {
  int nv = 0;
  int nh = 0;
  std::vector<char> pv;  // nv x nv, pv[piece * nv + container]
  std::vector<char> ph;  // nh x nh
  int rounds = 0;        // productive fixpoint rounds

  bool v_piece(int piece, int container) const {
    return pv[static_cast<std::size_t>(piece) * static_cast<std::size_t>(nv) + static_cast<std::size_t>(container)] != 0;
  }
  bool h_piece(int piece, int container) const {
    return ph[static_cast<std::size_t>(piece) * static_cast<std::size_t>(nh) + static_cast<std::size_t>(container)] != 0;
  }

  std::vector<std::pair<int, int>> v_pairs() const;  // sorted
  std::vector<std::pair<int, int>> h_pairs() const;
};

struct PieceOptions {
  bool transitive = false;  // additionally close under transitivity
};

PieceRelation compute_pieces(const Recognizer& rec,
                             const PieceOptions& options = {});

/// True iff no piece of a member of X escapes X; otherwise reports the
/// first violating (piece, container) pair in canonical order.
struct DownwardClosure {
  bool closed = true;
  std::pair<int, int> violation{-1, -1};
};
DownwardClosure is_downward_closed(const PieceRelation& rel,
                                   const std::vector<char>& x);

/// Shortest realizing terms for every reachable algebra element: minimal
/// node count, ties broken lexicographically by rendered text.
struct WitnessTable {
  std::vector<std::optional<Forest>> h_witness;
  std::vector<std::optional<Context>> v_witness;

  const Forest& forest_for(int h) const;    // ElementUnrealized if absent
  const Context& context_for(int v) const;
  std::string v_name(int v) const;          // rendered witness, for reports
  std::string h_name_term(int h) const;
};

WitnessTable build_witness_table(const Recognizer& rec);

/// Bounded realization search: terms p piece-of q with eval p = piece and
/// eval q = container, where q has at most max_q_nodes nodes.
std::optional<std::pair<Context, Context>> realize_v_pair(
    const Recognizer& rec, int piece, int container, std::size_t max_q_nodes);

}  // namespace fda
