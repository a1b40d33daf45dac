#include "forestda/pieces.hpp"

#include <algorithm>
#include <deque>

namespace fda {

std::vector<std::pair<int, int>> PieceRelation::v_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < nv; ++a)
    for (int b = 0; b < nv; ++b)
      if (v_piece(a, b)) out.emplace_back(a, b);
  return out;
}

std::vector<std::pair<int, int>> PieceRelation::h_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < nh; ++a)
    for (int b = 0; b < nh; ++b)
      if (h_piece(a, b)) out.emplace_back(a, b);
  return out;
}

namespace {

void close_transitively(std::vector<char>& rel, int n) {
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!rel[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(k)]) continue;
      for (int j = 0; j < n; ++j)
        if (rel[static_cast<std::size_t>(k) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)])
          rel[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] = 1;
    }
}

}  // namespace

PieceRelation compute_pieces(const Recognizer& rec,
                             const PieceOptions& options) {
  const int nv = rec.alg.v.size();
  const int nh = rec.alg.h.size();
  PieceRelation rel;
  rel.nv = nv;
  rel.nh = nh;
  rel.pv.assign(static_cast<std::size_t>(nv) * static_cast<std::size_t>(nv), 0);
  rel.ph.assign(static_cast<std::size_t>(nh) * static_cast<std::size_t>(nh), 0);

  // Generators of P_V as a submonoid of V x V. Insertion pairs join as
  // their source pairs appear in P_H.
  std::vector<std::pair<int, int>> gens;
  gens.emplace_back(rec.alg.box(), rec.alg.box());
  for (int image : rec.letter_image) {
    gens.emplace_back(image, image);
    gens.emplace_back(rec.alg.box(), image);
  }

  auto ph_at = [&](int g, int h) -> char& {
    return rel.ph[static_cast<std::size_t>(g) * static_cast<std::size_t>(nh) + static_cast<std::size_t>(h)];
  };
  auto pv_at = [&](int v, int w) -> char& {
    return rel.pv[static_cast<std::size_t>(v) * static_cast<std::size_t>(nv) + static_cast<std::size_t>(w)];
  };

  bool grew = false;
  auto add_v = [&](int piece, int container) {
    char& cell = pv_at(piece, container);
    if (cell) return;
    cell = 1;
    grew = true;
    // Project to P_H and, for fresh H pairs, extend the generator set by
    // the two insertion pairs.
    const int gp = rec.alg.act(piece, rec.alg.zero());
    const int gc = rec.alg.act(container, rec.alg.zero());
    if (!ph_at(gp, gc)) {
      ph_at(gp, gc) = 1;
      gens.emplace_back(rec.alg.ins_left[static_cast<std::size_t>(gp)],
                        rec.alg.ins_left[static_cast<std::size_t>(gc)]);
      gens.emplace_back(rec.alg.ins_right[static_cast<std::size_t>(gp)],
                        rec.alg.ins_right[static_cast<std::size_t>(gc)]);
    }
  };

  add_v(rec.alg.box(), rec.alg.box());
  // Iterate to the least fixpoint. Every member of P_V is a product of
  // generator pairs, so multiplying all known pairs by all known
  // generators on the right until nothing changes reaches closure, even
  // as projection keeps adding insertion generators.
  do {
    grew = false;
    ++rel.rounds;
    std::vector<std::pair<int, int>> known;
    for (int v = 0; v < nv; ++v)
      for (int w = 0; w < nv; ++w)
        if (rel.v_piece(v, w)) known.emplace_back(v, w);
    for (const auto& [piece, container] : known)
      for (std::size_t g = 0; g < gens.size(); ++g)
        add_v(rec.alg.v.op(piece, gens[g].first),
              rec.alg.v.op(container, gens[g].second));
  } while (grew);

  // Definitional recomputation of P_H from the final P_V.
  std::vector<char> ph(static_cast<std::size_t>(nh) * static_cast<std::size_t>(nh), 0);
  for (int v = 0; v < nv; ++v)
    for (int w = 0; w < nv; ++w)
      if (rel.v_piece(v, w))
        ph[static_cast<std::size_t>(rec.alg.act(v, rec.alg.zero())) * static_cast<std::size_t>(nh) +
           static_cast<std::size_t>(rec.alg.act(w, rec.alg.zero()))] = 1;
  if (ph != rel.ph)
    raise(ErrorCode::Internal, "piece projection law violated");

  if (options.transitive) {
    close_transitively(rel.pv, nv);
    close_transitively(rel.ph, nh);
  }
  return rel;
}

DownwardClosure is_downward_closed(const PieceRelation& rel,
                                   const std::vector<char>& x) {
  for (int piece = 0; piece < rel.nh; ++piece)
    for (int container = 0; container < rel.nh; ++container)
      if (rel.h_piece(piece, container) &&
          x[static_cast<std::size_t>(container)] && !x[static_cast<std::size_t>(piece)])
        return DownwardClosure{false, {piece, container}};
  return DownwardClosure{};
}

const Forest& WitnessTable::forest_for(int h) const {
  const auto& w = h_witness[static_cast<std::size_t>(h)];
  if (!w)
    raise(ErrorCode::ElementUnrealized,
          "no realizing forest for H element " + std::to_string(h));
  return *w;
}

const Context& WitnessTable::context_for(int v) const {
  const auto& w = v_witness[static_cast<std::size_t>(v)];
  if (!w)
    raise(ErrorCode::ElementUnrealized,
          "no realizing context for V element " + std::to_string(v));
  return *w;
}

std::string WitnessTable::v_name(int v) const {
  return render(context_for(v));
}

std::string WitnessTable::h_name_term(int h) const {
  return render(forest_for(h));
}

WitnessTable build_witness_table(const Recognizer& rec) {
  const int nh = rec.alg.h.size();
  const int nv = rec.alg.v.size();
  WitnessTable table;
  table.h_witness.resize(static_cast<std::size_t>(nh));
  table.v_witness.resize(static_cast<std::size_t>(nv));

  // Scan terms in enumeration order (node count, then rendered text); the
  // first term evaluating to an element is its witness, which makes the
  // table minimal with the documented tie-break.
  int missing = nh + nv;
  const std::size_t enumeration_cap = 10;
  for (std::size_t bound = 0; bound <= enumeration_cap && missing > 0; ++bound) {
    for (const Forest& f : enumerate_forests(rec.alphabet, bound)) {
      if (node_count(f) != bound) continue;
      const int h = eval_forest(rec, f);
      if (!table.h_witness[static_cast<std::size_t>(h)]) {
        table.h_witness[static_cast<std::size_t>(h)] = f;
        --missing;
      }
    }
    for (const Context& c : enumerate_contexts(rec.alphabet, bound)) {
      if (node_count(c) != bound) continue;
      const int v = eval_context(rec, c);
      if (!table.v_witness[static_cast<std::size_t>(v)]) {
        table.v_witness[static_cast<std::size_t>(v)] = c;
        --missing;
      }
    }
  }

  if (missing > 0) {
    // Fallback for elements whose shortest realization is larger than the
    // enumeration cap: relax over generator moves (letters in alphabet
    // order, then insertions by H order) until sizes stabilize.
    bool changed = true;
    while (changed) {
      changed = false;
      auto improve_v = [&](int v, const Context& candidate) {
        auto& slot = table.v_witness[static_cast<std::size_t>(v)];
        if (!slot || node_count(candidate) < node_count(*slot)) {
          slot = candidate;
          changed = true;
        }
      };
      auto improve_h = [&](int h, const Forest& candidate) {
        auto& slot = table.h_witness[static_cast<std::size_t>(h)];
        if (!slot || node_count(candidate) < node_count(*slot)) {
          slot = candidate;
          changed = true;
        }
      };
      for (int v = 0; v < nv; ++v) {
        if (!table.v_witness[static_cast<std::size_t>(v)]) continue;
        const Context& p = *table.v_witness[static_cast<std::size_t>(v)];
        for (std::size_t a = 0; a < rec.alphabet.size(); ++a) {
          Context wrapped{{Tree{rec.alphabet[a], p.trees}}};
          improve_v(rec.alg.v.op(rec.letter_image[a], v), wrapped);
        }
        for (int g = 0; g < nh; ++g) {
          if (!table.h_witness[static_cast<std::size_t>(g)]) continue;
          const Forest& wg = *table.h_witness[static_cast<std::size_t>(g)];
          Context left{wg.trees};
          left.trees.insert(left.trees.end(), p.trees.begin(), p.trees.end());
          improve_v(rec.alg.v.op(rec.alg.ins_left[static_cast<std::size_t>(g)], v), left);
          Context right{p.trees};
          right.trees.insert(right.trees.end(), wg.trees.begin(), wg.trees.end());
          improve_v(rec.alg.v.op(rec.alg.ins_right[static_cast<std::size_t>(g)], v), right);
        }
        improve_h(rec.alg.act(v, rec.alg.zero()), apply_context(p, Forest{}));
      }
    }
  }
  return table;
}

std::optional<std::pair<Context, Context>> realize_v_pair(
    const Recognizer& rec, int piece, int container,
    std::size_t max_q_nodes) {
  for (const Context& q : enumerate_contexts(rec.alphabet, max_q_nodes)) {
    if (eval_context(rec, q) != container) continue;
    for (const Context& p : piece_closure(q)) {
      if (eval_context(rec, p) == piece) return std::make_pair(p, q);
    }
  }
  return std::nullopt;
}

}  // namespace fda
