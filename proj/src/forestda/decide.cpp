#include "forestda/decide.hpp"

#include <algorithm>

namespace fda {

const char* order_name(Order order) {
  return order == Order::Lex ? "lex" : "desc";
}

Order parse_order(const std::string& text) {
  if (text == "lex") return Order::Lex;
  if (text == "desc") return Order::Desc;
  raise(ErrorCode::Arg, "order must be 'lex' or 'desc', got '" + text + "'");
}

Verdict check_delta2(const Recognizer& rec, const PieceRelation& rel,
                     Order order, const CheckOptions& options) {
  Verdict verdict;
  verdict.order = order;
  if (!options.input_is_syntactic)
    verdict.warnings.push_back(
        "input is not the syntactic algebra; a positive verdict is not "
        "meaningful for the recognized language");

  const int nv = rec.alg.v.size();
  // First violation in canonical order: container-major, then piece.
  for (int v = 0; v < nv && !verdict.identity_witness; ++v) {
    const int e = rec.alg.v.omega(v);
    for (int w = 0; w < nv; ++w) {
      if (!rel.v_piece(w, v)) continue;
      if (rec.alg.v.op(rec.alg.v.op(e, w), e) != e) {
        verdict.identity_witness = IdentityWitness{v, w};
        verdict.definable = false;
        break;
      }
    }
  }

  if (order == Order::Desc) {
    const int nh = rec.alg.h.size();
    for (int g = 0; g < nh && !verdict.commutativity_witness; ++g)
      for (int h = 0; h < nh; ++h)
        if (rec.alg.h.op(g, h) != rec.alg.h.op(h, g)) {
          verdict.commutativity_witness = CommutativityWitness{g, h};
          verdict.definable = false;
          break;
        }
  }
  return verdict;
}

bool recheck_identity_violation(const Recognizer& rec,
                                const IdentityWitness& witness) {
  const int e = rec.alg.v.omega(witness.v);
  return rec.alg.v.op(rec.alg.v.op(e, witness.w), e) != e;
}

ReachabilityOrder reachability_classes(const Recognizer& rec) {
  const int nh = rec.alg.h.size();
  const int nv = rec.alg.v.size();
  ReachabilityOrder out;
  out.nh = nh;
  out.reach.assign(static_cast<std::size_t>(nh) * static_cast<std::size_t>(nh), 0);
  // h is reachable from g iff h = v g for some v; V is a monoid, so this
  // single application is already reflexive-transitive.
  for (int g = 0; g < nh; ++g)
    for (int v = 0; v < nv; ++v)
      out.reach[static_cast<std::size_t>(g) * static_cast<std::size_t>(nh) +
                static_cast<std::size_t>(rec.alg.act(v, g))] = 1;
  out.cls.assign(static_cast<std::size_t>(nh), -1);
  int next = 0;
  for (int g = 0; g < nh; ++g) {
    if (out.cls[static_cast<std::size_t>(g)] >= 0) continue;
    out.cls[static_cast<std::size_t>(g)] = next;
    for (int h = g + 1; h < nh; ++h)
      if (out.reachable(g, h) && out.reachable(h, g))
        out.cls[static_cast<std::size_t>(h)] = next;
    ++next;
  }
  return out;
}

std::vector<int> h_bottom(const Recognizer& rec) {
  const ReachabilityOrder order = reachability_classes(rec);
  const int nh = rec.alg.h.size();
  std::vector<int> out;
  for (int h = 0; h < nh; ++h) {
    bool from_all = true;
    for (int g = 0; g < nh && from_all; ++g) from_all = order.reachable(g, h);
    if (from_all) out.push_back(h);
  }
  if (out.empty()) {
    // The sum of all types is reachable from every type, so this cannot
    // happen on a valid algebra.
    raise(ErrorCode::Internal, "H-bottom is empty");
  }
  return out;
}

std::vector<char> stabilizer(const Recognizer& rec, int h) {
  const ReachabilityOrder order = reachability_classes(rec);
  const int nv = rec.alg.v.size();
  std::vector<char> out(static_cast<std::size_t>(nv), 0);
  for (int v = 0; v < nv; ++v)
    out[static_cast<std::size_t>(v)] = order.equivalent(rec.alg.act(v, h), h) ? 1 : 0;
  return out;
}

std::vector<std::string> check_stabilizer_lemmas(const Recognizer& rec,
                                                 const PieceRelation& rel) {
  std::vector<std::string> violations;
  const int nh = rec.alg.h.size();
  const int nv = rec.alg.v.size();
  const ReachabilityOrder order = reachability_classes(rec);
  std::vector<std::vector<char>> stab(static_cast<std::size_t>(nh));
  for (int h = 0; h < nh; ++h) stab[static_cast<std::size_t>(h)] = stabilizer(rec, h);

  // Stabilizers depend only on the mutual-reachability class and form
  // submonoids of V.
  for (int g = 0; g < nh; ++g)
    for (int h = g + 1; h < nh; ++h)
      if (order.equivalent(g, h) && stab[static_cast<std::size_t>(g)] != stab[static_cast<std::size_t>(h)])
        violations.push_back("stab(" + rec.alg.h.name(g) + ") != stab(" +
                             rec.alg.h.name(h) + ") within one class");
  for (int h = 0; h < nh; ++h) {
    const auto& s = stab[static_cast<std::size_t>(h)];
    if (!s[static_cast<std::size_t>(rec.alg.box())])
      violations.push_back("stab(" + rec.alg.h.name(h) + ") misses []");
    for (int v = 0; v < nv; ++v)
      for (int w = 0; w < nv; ++w)
        if (s[static_cast<std::size_t>(v)] && s[static_cast<std::size_t>(w)] &&
            !s[static_cast<std::size_t>(rec.alg.v.op(v, w))]) {
          violations.push_back("stab(" + rec.alg.h.name(h) +
                               ") not closed under composition");
          v = nv;
          break;
        }
  }

  // Stabilizers are closed under pieces.
  for (int h = 0; h < nh; ++h) {
    const auto& s = stab[static_cast<std::size_t>(h)];
    for (int v = 0; v < nv; ++v)
      for (int w = 0; w < nv; ++w)
        if (s[static_cast<std::size_t>(w)] && rel.v_piece(v, w) && !s[static_cast<std::size_t>(v)]) {
          violations.push_back("stab(" + rec.alg.h.name(h) +
                               ") not closed under pieces");
          v = nv;
          break;
        }
  }

  // For h outside H-bottom with h+h ~ h, the pieces G of h support a
  // subalgebra: G+G in G, stab(h) G in G, insertions of G stabilize h.
  std::vector<char> bottom(static_cast<std::size_t>(nh), 0);
  for (int h : h_bottom(rec)) bottom[static_cast<std::size_t>(h)] = 1;
  for (int h = 0; h < nh; ++h) {
    if (bottom[static_cast<std::size_t>(h)]) continue;
    if (!order.equivalent(rec.alg.h.op(h, h), h)) continue;
    const auto& s = stab[static_cast<std::size_t>(h)];
    std::vector<int> pieces;
    for (int g = 0; g < nh; ++g)
      if (rel.h_piece(g, h)) pieces.push_back(g);
    auto in_pieces = [&](int g) {
      return std::find(pieces.begin(), pieces.end(), g) != pieces.end();
    };
    for (int g1 : pieces)
      for (int g2 : pieces)
        if (!in_pieces(rec.alg.h.op(g1, g2)))
          violations.push_back("pieces of " + rec.alg.h.name(h) +
                               " not closed under +");
    for (int v = 0; v < nv; ++v)
      if (s[static_cast<std::size_t>(v)])
        for (int g : pieces)
          if (!in_pieces(rec.alg.act(v, g)))
            violations.push_back("pieces of " + rec.alg.h.name(h) +
                                 " not closed under stab action");
    for (int g : pieces) {
      if (!s[static_cast<std::size_t>(rec.alg.ins_left[static_cast<std::size_t>(g)])] ||
          !s[static_cast<std::size_t>(rec.alg.ins_right[static_cast<std::size_t>(g)])])
        violations.push_back("insertion of a piece of " + rec.alg.h.name(h) +
                             " does not stabilize it");
    }
  }
  return violations;
}

namespace {

Context repeat_context(const Context& p, int n) {
  Context out = identity_context();
  for (int i = 0; i < n; ++i) out = compose_contexts(out, p);
  return out;
}

// Elements realizable by terms of at most the given size, with their
// minimal witnesses, in canonical element order.
std::vector<int> realizable_h(const WitnessTable& witnesses, std::size_t cap) {
  std::vector<int> out;
  for (std::size_t h = 0; h < witnesses.h_witness.size(); ++h)
    if (witnesses.h_witness[h] && node_count(*witnesses.h_witness[h]) <= cap)
      out.push_back(static_cast<int>(h));
  return out;
}

std::vector<int> realizable_v(const WitnessTable& witnesses, std::size_t cap) {
  std::vector<int> out;
  for (std::size_t v = 0; v < witnesses.v_witness.size(); ++v)
    if (witnesses.v_witness[v] && node_count(*witnesses.v_witness[v]) <= cap)
      out.push_back(static_cast<int>(v));
  return out;
}

// Scans n, then surrounding context and forest in canonical element
// order. Membership factors through the morphism, so scanning realized
// element pairs is exhaustive over all terms within the size bounds; a
// hit is lifted through minimal witnesses and rechecked on actual terms.
std::optional<LiftedCounterexample> scan_candidates(
    const Recognizer& rec, const WitnessTable& witnesses,
    const std::vector<std::pair<Context, Context>>& pq_candidates,
    const CounterexampleOptions& options) {
  const std::vector<int> rs = realizable_v(witnesses, options.r_max_nodes);
  const std::vector<int> ss = realizable_h(witnesses, options.s_max_nodes);
  for (int n = 1; n <= options.max_n; ++n) {
    for (const auto& [p, q] : pq_candidates) {
      const int vp = eval_context(rec, p);
      const int vq = eval_context(rec, q);
      const int vp_n = rec.alg.v.power(vp, static_cast<unsigned>(n));
      const int base_mid = rec.alg.v.op(vp_n, vp_n);
      const int replaced_mid =
          rec.alg.v.op(rec.alg.v.op(vp_n, vq), vp_n);
      const std::size_t p_nodes = node_count(p);
      for (int vr : rs) {
        const std::size_t r_nodes = node_count(*witnesses.v_witness[static_cast<std::size_t>(vr)]);
        for (int hs : ss) {
          const std::size_t total =
              r_nodes + 2 * static_cast<std::size_t>(n) * p_nodes +
              node_count(*witnesses.h_witness[static_cast<std::size_t>(hs)]);
          if (total > options.max_total_nodes) continue;
          const bool base = rec.accepting[static_cast<std::size_t>(
              rec.alg.act(rec.alg.v.op(vr, base_mid), hs))] != 0;
          const bool replaced = rec.accepting[static_cast<std::size_t>(
              rec.alg.act(rec.alg.v.op(vr, replaced_mid), hs))] != 0;
          if (base == replaced) continue;

          LiftedCounterexample cex;
          cex.r = *witnesses.v_witness[static_cast<std::size_t>(vr)];
          cex.p = p;
          cex.q = q;
          cex.s = *witnesses.h_witness[static_cast<std::size_t>(hs)];
          cex.n = n;
          const Context pn = repeat_context(cex.p, n);
          const Forest base_term = apply_context(
              compose_contexts(cex.r, compose_contexts(pn, pn)), cex.s);
          const Forest replaced_term = apply_context(
              compose_contexts(
                  cex.r, compose_contexts(pn, compose_contexts(cex.q, pn))),
              cex.s);
          cex.member_base = member(rec, base_term);
          cex.member_replaced = member(rec, replaced_term);
          if (cex.member_base == cex.member_replaced)
            raise(ErrorCode::Internal,
                  "lifted counterexample failed its membership recheck");
          return cex;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<LiftedCounterexample> semantic_counterexample(
    const Recognizer& rec, const WitnessTable& witnesses,
    const IdentityWitness& witness, const CounterexampleOptions& options) {
  std::vector<std::pair<Context, Context>> candidates;
  const Context& p = witnesses.context_for(witness.v);
  const Context& q = witnesses.context_for(witness.w);
  if (is_piece_term(q, p)) {
    candidates.emplace_back(p, q);
  } else {
    // The minimal witnesses are unrelated as terms; look for a small
    // realization of the pair instead.
    auto realized =
        realize_v_pair(rec, witness.w, witness.v,
                       node_count(p) + options.realization_slack);
    if (realized) candidates.emplace_back(realized->second, realized->first);
  }
  if (candidates.empty()) return std::nullopt;
  return scan_candidates(rec, witnesses, candidates, options);
}

std::optional<LiftedCounterexample> search_replacement_violation(
    const Recognizer& rec, const WitnessTable& witnesses,
    std::size_t p_max_nodes, const CounterexampleOptions& options) {
  std::vector<std::pair<Context, Context>> candidates;
  for (const Context& p : enumerate_contexts(rec.alphabet, p_max_nodes))
    for (const Context& q : piece_closure(p)) candidates.emplace_back(p, q);
  return scan_candidates(rec, witnesses, candidates, options);
}

}  // namespace fda
