#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "forestda/pieces.hpp"

namespace fda {

enum class Order { Desc, Lex };

const char* order_name(Order order);
Order parse_order(const std::string& text);  // Arg error on anything else

struct IdentityWitness {
  int v = -1;  // container element whose omega power swallows no piece
  int w = -1;  // the offending piece, (w, v) in P_V
};

struct CommutativityWitness {
  int g = -1;
  int h = -1;
};

/// Outcome of the definability check, with the first violation in
/// canonical element order when negative.
struct Verdict {
  Order order = Order::Lex;
  bool definable = true;
  std::optional<IdentityWitness> identity_witness;
  std::optional<CommutativityWitness> commutativity_witness;
  std::vector<std::string> warnings;
};

struct CheckOptions {
  // Set by the pipeline when the recognizer is the syntactic algebra; a
  // bare check on an unminimized recognizer is flagged, not refused.
  bool input_is_syntactic = true;
};

/// Tests the definability identity: for every (w, v) in P_V,
/// v^w w v^w = v^w, and for Order::Desc additionally g+h = h+g on H.
Verdict check_delta2(const Recognizer& rec, const PieceRelation& rel,
                     Order order, const CheckOptions& options = {});

/// Independent re-evaluation of a witness against the tables.
bool recheck_identity_violation(const Recognizer& rec,
                                const IdentityWitness& witness);

/// Reachability pre-order on H: g <= h iff h = v g for some context type.
struct ReachabilityOrder {
  std::vector<char> reach;  // nh x nh, reach[g*nh+h] iff h reachable from g
  std::vector<int> cls;     // mutual-reachability class per element
  int nh = 0;

  bool reachable(int from, int to) const {
    return reach[static_cast<std::size_t>(from) * static_cast<std::size_t>(nh) + static_cast<std::size_t>(to)] != 0;
  }
  bool equivalent(int a, int b) const { return cls[static_cast<std::size_t>(a)] == cls[static_cast<std::size_t>(b)]; }
};

ReachabilityOrder reachability_classes(const Recognizer& rec);

/// Types reachable from every type; never empty.
std::vector<int> h_bottom(const Recognizer& rec);

/// stab(h) = { v : v h ~ h } under mutual reachability.
std::vector<char> stabilizer(const Recognizer& rec, int h);

/// Lemma-level structural checks that must hold whenever the identity
/// check passes; each returns violation messages (empty = pass).
std::vector<std::string> check_stabilizer_lemmas(const Recognizer& rec,
                                                 const PieceRelation& rel);

/// A concrete replacement counterexample: membership differs between
/// r p^{2n} s and r p^n q p^n s for a term-level piece q of p.
struct LiftedCounterexample {
  Context r;
  Context p;
  Context q;
  Forest s;
  int n = 1;
  bool member_base = false;      // member(r p^{2n} s)
  bool member_replaced = false;  // member(r p^n q p^n s)
};

struct CounterexampleOptions {
  int max_n = 3;
  std::size_t max_total_nodes = 12;  // cap on nodes of r p^{2n} s
  std::size_t r_max_nodes = 6;
  std::size_t s_max_nodes = 6;
  std::size_t realization_slack = 4;  // q-piece fallback search headroom
};

/// Best-effort lifting of an identity-violation witness into a concrete
/// membership-changing replacement. Absence of a find is inconclusive.
std::optional<LiftedCounterexample> semantic_counterexample(
    const Recognizer& rec, const WitnessTable& witnesses,
    const IdentityWitness& witness, const CounterexampleOptions& options = {});

/// Exhaustive replacement search over all context pairs q piece-of p with
/// p of at most p_max_nodes nodes; used as a no-violation oracle for
/// languages that pass the check.
std::optional<LiftedCounterexample> search_replacement_violation(
    const Recognizer& rec, const WitnessTable& witnesses,
    std::size_t p_max_nodes, const CounterexampleOptions& options = {});

}  // namespace fda
