#include "forestda/syntactic.hpp"

#include <algorithm>
#include <map>

namespace fda {

namespace {

// Assigns class ids in order of first appearance, so classes end up
// ordered by their smallest member identifier (reproducible numbering).
std::vector<int> partition_by_signature(
    const std::vector<std::vector<int>>& signatures) {
  std::map<std::vector<int>, int> ids;
  std::vector<int> cls(signatures.size());
  for (std::size_t i = 0; i < signatures.size(); ++i)
    cls[i] = ids.emplace(signatures[i], static_cast<int>(ids.size()))
                 .first->second;
  return cls;
}

}  // namespace

QuotientMap syntactic_quotient(const Recognizer& rec) {
  if (!is_reachable_restricted(rec))
    raise(ErrorCode::NotReachableRestricted,
          "syntactic quotient requires a reachable-restricted recognizer");

  const int nh = rec.alg.h.size();
  const int nv = rec.alg.v.size();

  // h ~ h' iff every context type sends both inside or both outside the
  // accepting set. V is exactly the realized context types here, which is
  // why reachable restriction is a hard precondition.
  std::vector<std::vector<int>> h_sig(static_cast<std::size_t>(nh));
  for (int h = 0; h < nh; ++h) {
    h_sig[static_cast<std::size_t>(h)].resize(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v)
      h_sig[static_cast<std::size_t>(h)][static_cast<std::size_t>(v)] =
          rec.accepting[static_cast<std::size_t>(rec.alg.act(v, h))] ? 1 : 0;
  }
  std::vector<int> h_class = partition_by_signature(h_sig);
  const int nh_l = 1 + *std::max_element(h_class.begin(), h_class.end());

  std::vector<std::vector<int>> v_sig(static_cast<std::size_t>(nv));
  for (int v = 0; v < nv; ++v) {
    v_sig[static_cast<std::size_t>(v)].resize(static_cast<std::size_t>(nh));
    for (int h = 0; h < nh; ++h)
      v_sig[static_cast<std::size_t>(v)][static_cast<std::size_t>(h)] =
          h_class[static_cast<std::size_t>(rec.alg.act(v, h))];
  }
  std::vector<int> v_class = partition_by_signature(v_sig);
  const int nv_l = 1 + *std::max_element(v_class.begin(), v_class.end());

  auto fill = [](std::vector<int>& table, std::size_t at, int value,
                 const char* what) {
    if (table[at] == -1) {
      table[at] = value;
    } else if (table[at] != value) {
      raise(ErrorCode::Internal,
            std::string("syntactic congruence is ill-defined on ") + what);
    }
  };

  std::vector<int> plus_l(static_cast<std::size_t>(nh_l) * static_cast<std::size_t>(nh_l), -1);
  for (int g = 0; g < nh; ++g)
    for (int h = 0; h < nh; ++h)
      fill(plus_l,
           static_cast<std::size_t>(h_class[static_cast<std::size_t>(g)]) * static_cast<std::size_t>(nh_l) +
               static_cast<std::size_t>(h_class[static_cast<std::size_t>(h)]),
           h_class[static_cast<std::size_t>(rec.alg.h.op(g, h))], "H addition");

  std::vector<int> comp_l(static_cast<std::size_t>(nv_l) * static_cast<std::size_t>(nv_l), -1);
  for (int v = 0; v < nv; ++v)
    for (int w = 0; w < nv; ++w)
      fill(comp_l,
           static_cast<std::size_t>(v_class[static_cast<std::size_t>(v)]) * static_cast<std::size_t>(nv_l) +
               static_cast<std::size_t>(v_class[static_cast<std::size_t>(w)]),
           v_class[static_cast<std::size_t>(rec.alg.v.op(v, w))], "V composition");

  std::vector<int> action_l(static_cast<std::size_t>(nv_l) * static_cast<std::size_t>(nh_l), -1);
  for (int v = 0; v < nv; ++v)
    for (int h = 0; h < nh; ++h)
      fill(action_l,
           static_cast<std::size_t>(v_class[static_cast<std::size_t>(v)]) * static_cast<std::size_t>(nh_l) +
               static_cast<std::size_t>(h_class[static_cast<std::size_t>(h)]),
           h_class[static_cast<std::size_t>(rec.alg.act(v, h))], "the action");

  std::vector<int> ins_left_l(static_cast<std::size_t>(nh_l), -1);
  std::vector<int> ins_right_l(static_cast<std::size_t>(nh_l), -1);
  for (int g = 0; g < nh; ++g) {
    fill(ins_left_l, static_cast<std::size_t>(h_class[static_cast<std::size_t>(g)]),
         v_class[static_cast<std::size_t>(rec.alg.ins_left[static_cast<std::size_t>(g)])], "left insertion");
    fill(ins_right_l, static_cast<std::size_t>(h_class[static_cast<std::size_t>(g)]),
         v_class[static_cast<std::size_t>(rec.alg.ins_right[static_cast<std::size_t>(g)])], "right insertion");
  }

  // Accepting classes; saturation means no class mixes accepting and
  // non-accepting members.
  std::vector<int> accepting_l(static_cast<std::size_t>(nh_l), -1);
  for (int h = 0; h < nh; ++h)
    fill(accepting_l, static_cast<std::size_t>(h_class[static_cast<std::size_t>(h)]),
         rec.accepting[static_cast<std::size_t>(h)] ? 1 : 0, "the accepting set");

  // Class names: the name of the smallest original member.
  std::vector<std::string> h_names(static_cast<std::size_t>(nh_l));
  std::vector<char> h_named(static_cast<std::size_t>(nh_l), 0);
  for (int h = 0; h < nh; ++h) {
    const int c = h_class[static_cast<std::size_t>(h)];
    if (!h_named[static_cast<std::size_t>(c)]) {
      h_named[static_cast<std::size_t>(c)] = 1;
      h_names[static_cast<std::size_t>(c)] = rec.alg.h.name(h);
    }
  }
  std::vector<std::string> v_names;
  for (int i = 0; i < nv_l; ++i) v_names.push_back("v" + std::to_string(i));

  QuotientMap out;
  out.h_class = h_class;
  out.v_class = v_class;
  out.quotient.alphabet = rec.alphabet;
  out.quotient.alg.h = FiniteMonoid(std::move(h_names), std::move(plus_l),
                                    h_class[static_cast<std::size_t>(rec.alg.h.identity())],
                                    FiniteMonoid::Trust::Validate);
  out.quotient.alg.v = FiniteMonoid(std::move(v_names), std::move(comp_l),
                                    v_class[static_cast<std::size_t>(rec.alg.v.identity())],
                                    FiniteMonoid::Trust::Composition);
  out.quotient.alg.action = std::move(action_l);
  out.quotient.alg.ins_left = std::move(ins_left_l);
  out.quotient.alg.ins_right = std::move(ins_right_l);
  for (int image : rec.letter_image)
    out.quotient.letter_image.push_back(v_class[static_cast<std::size_t>(image)]);
  out.quotient.accepting.assign(static_cast<std::size_t>(nh_l), 0);
  for (int c = 0; c < nh_l; ++c)
    out.quotient.accepting[static_cast<std::size_t>(c)] = accepting_l[static_cast<std::size_t>(c)] == 1;

  // The quotient must stay faithful: distinct V classes differ on some H
  // class by construction of the signatures.
  for (int v = 0; v < nv_l; ++v)
    for (int w = v + 1; w < nv_l; ++w) {
      bool distinct = false;
      for (int h = 0; h < nh_l; ++h)
        if (out.quotient.alg.act(v, h) != out.quotient.alg.act(w, h)) {
          distinct = true;
          break;
        }
      if (!distinct)
        raise(ErrorCode::Internal, "quotient collapsed faithfulness");
    }
  return out;
}

bool isomorphic_canonical(const Recognizer& a, const Recognizer& b) {
  if (a.alphabet != b.alphabet) return false;
  const int nh = a.alg.h.size();
  const int nv = a.alg.v.size();
  if (nh != b.alg.h.size() || nv != b.alg.v.size()) return false;
  if (a.alg.h.identity() != b.alg.h.identity()) return false;
  if (a.alg.v.identity() != b.alg.v.identity()) return false;
  for (int x = 0; x < nh; ++x)
    for (int y = 0; y < nh; ++y)
      if (a.alg.h.op(x, y) != b.alg.h.op(x, y)) return false;
  for (int x = 0; x < nv; ++x)
    for (int y = 0; y < nv; ++y)
      if (a.alg.v.op(x, y) != b.alg.v.op(x, y)) return false;
  for (int v = 0; v < nv; ++v)
    for (int h = 0; h < nh; ++h)
      if (a.alg.act(v, h) != b.alg.act(v, h)) return false;
  return a.alg.ins_left == b.alg.ins_left &&
         a.alg.ins_right == b.alg.ins_right &&
         a.letter_image == b.letter_image && a.accepting == b.accepting;
}

}  // namespace fda
