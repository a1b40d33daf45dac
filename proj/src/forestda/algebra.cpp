#include "forestda/algebra.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace fda {

int Recognizer::letter(const std::string& label) const {
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    if (alphabet[i] == label) return letter_image[i];
  raise(ErrorCode::AlphabetMismatch, "label '" + label + "' not in alphabet");
}

void AutomatonSpec::validate() const {
  const int n = static_cast<int>(h_names.size());
  if (n == 0) raise(ErrorCode::SpecInvalid, "H must be non-empty");
  if (static_cast<int>(plus.size()) != n * n)
    raise(ErrorCode::SpecInvalid, "plus table has wrong shape");
  if (delta.size() != alphabet.size())
    raise(ErrorCode::SpecInvalid, "delta must cover every letter");
  for (const auto& row : delta)
    if (static_cast<int>(row.size()) != n)
      raise(ErrorCode::SpecInvalid, "delta must be total on H");
  // Monoid axioms for plus, including associativity.
  FiniteMonoid check(h_names, plus, zero, FiniteMonoid::Trust::Validate);
  for (int a : accepting)
    if (a < 0 || a >= n) raise(ErrorCode::SpecInvalid, "accepting element out of range");
}

namespace {

// Closure machinery shared by build_transition_algebra and
// restrict_reachable: everything is derived from (H table, letter maps).
struct HCore {
  std::vector<std::string> names;
  int zero;
  std::vector<int> plus;  // n x n
  std::vector<std::vector<int>> letter_map;
  std::vector<char> accepting;

  int n() const { return static_cast<int>(names.size()); }
  int add(int a, int b) const { return plus[static_cast<std::size_t>(a) * static_cast<std::size_t>(n()) + static_cast<std::size_t>(b)]; }
};

HCore reachable_restrict(const HCore& core) {
  const int n = core.n();
  std::vector<char> reach(static_cast<std::size_t>(n), 0);
  std::deque<int> queue;
  reach[static_cast<std::size_t>(core.zero)] = 1;
  queue.push_back(core.zero);
  // Closure of {0} under the letter transitions and addition.
  while (!queue.empty()) {
    const int g = queue.front();
    queue.pop_front();
    auto push = [&](int x) {
      if (!reach[static_cast<std::size_t>(x)]) {
        reach[static_cast<std::size_t>(x)] = 1;
        queue.push_back(x);
      }
    };
    for (const auto& map : core.letter_map) push(map[static_cast<std::size_t>(g)]);
    for (int other = 0; other < n; ++other) {
      if (!reach[static_cast<std::size_t>(other)]) continue;
      push(core.add(g, other));
      push(core.add(other, g));
    }
  }

  std::vector<int> old_of;
  std::vector<int> new_of(static_cast<std::size_t>(n), -1);
  for (int g = 0; g < n; ++g)
    if (reach[static_cast<std::size_t>(g)]) {
      new_of[static_cast<std::size_t>(g)] = static_cast<int>(old_of.size());
      old_of.push_back(g);
    }

  HCore out;
  out.zero = new_of[static_cast<std::size_t>(core.zero)];
  const int m = static_cast<int>(old_of.size());
  out.plus.resize(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    out.names.push_back(core.names[static_cast<std::size_t>(old_of[static_cast<std::size_t>(a)])]);
    for (int b = 0; b < m; ++b)
      out.plus[static_cast<std::size_t>(a) * static_cast<std::size_t>(m) + static_cast<std::size_t>(b)] =
          new_of[static_cast<std::size_t>(core.add(old_of[static_cast<std::size_t>(a)], old_of[static_cast<std::size_t>(b)]))];
  }
  for (const auto& map : core.letter_map) {
    std::vector<int> restricted(static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a)
      restricted[static_cast<std::size_t>(a)] = new_of[static_cast<std::size_t>(map[static_cast<std::size_t>(old_of[static_cast<std::size_t>(a)])])];
    out.letter_map.push_back(std::move(restricted));
  }
  out.accepting.resize(static_cast<std::size_t>(m), 0);
  for (int a = 0; a < m; ++a)
    out.accepting[static_cast<std::size_t>(a)] = core.accepting[static_cast<std::size_t>(old_of[static_cast<std::size_t>(a)])];
  return out;
}

Recognizer build_from_core(const Alphabet& alphabet, const HCore& reachable,
                           const BuildOptions& options) {
  const int n = reachable.n();

  // Generators of V, in spec order: letter actions, then insertions of
  // each H element on the left, then on the right.
  std::vector<std::vector<int>> gens;
  for (const auto& map : reachable.letter_map) gens.push_back(map);
  for (int g = 0; g < n; ++g) {
    std::vector<int> ins(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) ins[static_cast<std::size_t>(x)] = reachable.add(g, x);
    gens.push_back(std::move(ins));
  }
  for (int g = 0; g < n; ++g) {
    std::vector<int> ins(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) ins[static_cast<std::size_t>(x)] = reachable.add(x, g);
    gens.push_back(std::move(ins));
  }

  std::vector<std::vector<int>> elems;
  std::map<std::vector<int>, int> index;
  auto intern = [&](const std::vector<int>& t) {
    auto it = index.find(t);
    if (it != index.end()) return it->second;
    if (elems.size() >= options.v_size_limit)
      raise(ErrorCode::SizeLimit,
            "transformation monoid exceeds the size cap of " +
                std::to_string(options.v_size_limit));
    const int id = static_cast<int>(elems.size());
    elems.push_back(t);
    index.emplace(t, id);
    return id;
  };

  std::vector<int> identity(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) identity[static_cast<std::size_t>(x)] = x;
  intern(identity);

  // Every element is a product of generators, so closing under right
  // multiplication from the identity reaches all of V.
  for (std::size_t head = 0; head < elems.size(); ++head) {
    const std::vector<int> cur = elems[head];
    for (const auto& gen : gens) {
      std::vector<int> composed(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x)
        composed[static_cast<std::size_t>(x)] = cur[static_cast<std::size_t>(gen[static_cast<std::size_t>(x)])];
      intern(composed);
    }
  }

  const int nv = static_cast<int>(elems.size());
  std::vector<int> vtable(static_cast<std::size_t>(nv) * static_cast<std::size_t>(nv));
  for (int a = 0; a < nv; ++a)
    for (int b = 0; b < nv; ++b) {
      std::vector<int> composed(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x)
        composed[static_cast<std::size_t>(x)] =
            elems[static_cast<std::size_t>(a)][static_cast<std::size_t>(elems[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)])];
      vtable[static_cast<std::size_t>(a) * static_cast<std::size_t>(nv) + static_cast<std::size_t>(b)] = index.at(composed);
    }

  std::vector<std::string> vnames;
  vnames.reserve(static_cast<std::size_t>(nv));
  for (int i = 0; i < nv; ++i) vnames.push_back("v" + std::to_string(i));

  Recognizer rec;
  rec.alphabet = alphabet;
  rec.alg.h = FiniteMonoid(reachable.names, reachable.plus, reachable.zero,
                           FiniteMonoid::Trust::Validate);
  rec.alg.v = FiniteMonoid(std::move(vnames), std::move(vtable), 0,
                           FiniteMonoid::Trust::Composition);
  rec.alg.action.resize(static_cast<std::size_t>(nv) * static_cast<std::size_t>(n));
  for (int a = 0; a < nv; ++a)
    for (int x = 0; x < n; ++x)
      rec.alg.action[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(x)] =
          elems[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)];
  rec.alg.ins_left.resize(static_cast<std::size_t>(n));
  rec.alg.ins_right.resize(static_cast<std::size_t>(n));
  const std::size_t num_letters = reachable.letter_map.size();
  for (int g = 0; g < n; ++g) {
    rec.alg.ins_left[static_cast<std::size_t>(g)] = index.at(gens[num_letters + static_cast<std::size_t>(g)]);
    rec.alg.ins_right[static_cast<std::size_t>(g)] =
        index.at(gens[num_letters + static_cast<std::size_t>(n) + static_cast<std::size_t>(g)]);
  }
  for (std::size_t a = 0; a < num_letters; ++a)
    rec.letter_image.push_back(index.at(gens[a]));
  rec.accepting = reachable.accepting;
  return rec;
}

HCore core_of_recognizer(const Recognizer& rec) {
  HCore core;
  core.names = rec.alg.h.names();
  core.zero = rec.alg.h.identity();
  const int n = rec.alg.h.size();
  core.plus.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      core.plus[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)] = rec.alg.h.op(a, b);
  for (int image : rec.letter_image) {
    std::vector<int> map(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) map[static_cast<std::size_t>(x)] = rec.alg.act(image, x);
    core.letter_map.push_back(std::move(map));
  }
  core.accepting = rec.accepting;
  return core;
}

}  // namespace

Recognizer build_transition_algebra(const AutomatonSpec& spec,
                                    const BuildOptions& options) {
  spec.validate();
  HCore core;
  core.names = spec.h_names;
  core.zero = spec.zero;
  core.plus = spec.plus;
  core.letter_map = spec.delta;
  core.accepting.assign(spec.h_names.size(), 0);
  for (int a : spec.accepting) core.accepting[static_cast<std::size_t>(a)] = 1;
  return build_from_core(spec.alphabet, reachable_restrict(core), options);
}

Recognizer restrict_reachable(const Recognizer& rec,
                              const BuildOptions& options) {
  return build_from_core(rec.alphabet, reachable_restrict(core_of_recognizer(rec)),
                         options);
}

bool is_reachable_restricted(const Recognizer& rec) {
  const Recognizer restricted = restrict_reachable(rec);
  return restricted.alg.h.size() == rec.alg.h.size() &&
         restricted.alg.v.size() == rec.alg.v.size();
}

namespace {

int eval_seq_forest(const Recognizer& rec, const TreeSeq& seq);

int eval_tree(const Recognizer& rec, const Tree& t) {
  return rec.alg.act(rec.letter(t.label), eval_seq_forest(rec, t.children));
}

int eval_seq_forest(const Recognizer& rec, const TreeSeq& seq) {
  int acc = rec.alg.zero();
  for (const Tree& t : seq) acc = rec.alg.h.op(acc, eval_tree(rec, t));
  return acc;
}

bool tree_has_hole(const Tree& t) {
  if (t.is_hole()) return true;
  for (const Tree& c : t.children)
    if (tree_has_hole(c)) return true;
  return false;
}

int eval_seq_context(const Recognizer& rec, const TreeSeq& seq);

int eval_ctx_tree(const Recognizer& rec, const Tree& t) {
  if (t.is_hole()) return rec.alg.box();
  return rec.alg.v.op(rec.letter(t.label), eval_seq_context(rec, t.children));
}

// p = left + ct + right evaluates to ins_left(left) ins_right(right) ct.
int eval_seq_context(const Recognizer& rec, const TreeSeq& seq) {
  std::size_t hole_index = seq.size();
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (tree_has_hole(seq[i])) {
      hole_index = i;
      break;
    }
  }
  if (hole_index == seq.size())
    raise(ErrorCode::Internal, "context without hole");
  int left = rec.alg.zero();
  for (std::size_t i = 0; i < hole_index; ++i)
    left = rec.alg.h.op(left, eval_tree(rec, seq[i]));
  int right = rec.alg.zero();
  for (std::size_t i = hole_index + 1; i < seq.size(); ++i)
    right = rec.alg.h.op(right, eval_tree(rec, seq[i]));
  int out = rec.alg.v.op(rec.alg.ins_left[static_cast<std::size_t>(left)],
                         rec.alg.ins_right[static_cast<std::size_t>(right)]);
  return rec.alg.v.op(out, eval_ctx_tree(rec, seq[hole_index]));
}

}  // namespace

int eval_forest(const Recognizer& rec, const Forest& t) {
  return eval_seq_forest(rec, t.trees);
}

int eval_context(const Recognizer& rec, const Context& t) {
  return eval_seq_context(rec, t.trees);
}

bool member(const Recognizer& rec, const Forest& t) {
  return rec.accepting[static_cast<std::size_t>(eval_forest(rec, t))] != 0;
}

std::vector<std::string> validate_axioms(const ForestAlgebra& alg) {
  std::vector<std::string> report;
  for (const std::string& msg : alg.h.check_axioms())
    report.push_back("H: " + msg);
  for (const std::string& msg : alg.v.check_axioms())
    report.push_back("V: " + msg);

  const int nh = alg.h.size();
  const int nv = alg.v.size();

  // Monoidal action: [] h = h.
  for (int h = 0; h < nh; ++h)
    if (alg.act(alg.box(), h) != h) {
      report.push_back("action not monoidal at '" + alg.h.name(h) + "'");
      break;
    }
  // Action law: w(vh) = (wv)h.
  bool action_ok = true;
  for (int w = 0; w < nv && action_ok; ++w)
    for (int v = 0; v < nv && action_ok; ++v)
      for (int h = 0; h < nh && action_ok; ++h)
        if (alg.act(w, alg.act(v, h)) != alg.act(alg.v.op(w, v), h)) {
          report.push_back("action law fails at (" + alg.v.name(w) + ", " +
                           alg.v.name(v) + ", " + alg.h.name(h) + ")");
          action_ok = false;
        }
  // Faithfulness: distinct context types act differently.
  for (int v = 0; v < nv; ++v)
    for (int w = v + 1; w < nv; ++w) {
      bool distinct = false;
      for (int h = 0; h < nh; ++h)
        if (alg.act(v, h) != alg.act(w, h)) {
          distinct = true;
          break;
        }
      if (!distinct) {
        report.push_back("action not faithful: (" + alg.v.name(v) + ", " +
                         alg.v.name(w) + ") act identically");
        v = nv;  // one witness is enough
        break;
      }
    }
  // Insertion semantics: (g+[])h = g+h and ([]+g)h = h+g.
  bool ins_ok = true;
  for (int g = 0; g < nh && ins_ok; ++g)
    for (int h = 0; h < nh && ins_ok; ++h) {
      if (alg.act(alg.ins_left[static_cast<std::size_t>(g)], h) != alg.h.op(g, h)) {
        report.push_back("ins_left(" + alg.h.name(g) + ") misbehaves on '" +
                         alg.h.name(h) + "'");
        ins_ok = false;
      } else if (alg.act(alg.ins_right[static_cast<std::size_t>(g)], h) !=
                 alg.h.op(h, g)) {
        report.push_back("ins_right(" + alg.h.name(g) + ") misbehaves on '" +
                         alg.h.name(h) + "'");
        ins_ok = false;
      }
    }
  return report;
}

}  // namespace fda
