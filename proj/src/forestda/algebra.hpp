#pragma once

#include <optional>
#include <string>
#include <vector>

#include "forestda/monoid.hpp"
#include "forestda/term.hpp"

namespace fda {

/// A finite forest algebra: a pair (H, V) of finite monoids, a monoidal
/// faithful left action of V on H, and insertion elements g+[] and []+g
/// for every g in H.
struct ForestAlgebra {
  FiniteMonoid h;                // additive, identity is the 0 element
  FiniteMonoid v;                // multiplicative, identity is []
  std::vector<int> action;       // |V| x |H|, act(v, h)
  std::vector<int> ins_left;     // g -> element acting as h |-> g+h
  std::vector<int> ins_right;    // g -> element acting as h |-> h+g

  int act(int vi, int hi) const {
    return action[static_cast<std::size_t>(vi) * static_cast<std::size_t>(h.size()) + static_cast<std::size_t>(hi)];
  }
  int zero() const { return h.identity(); }
  int box() const { return v.identity(); }
};

/// A recognizer: algebra, morphism (letter images in V) and accepting set.
struct Recognizer {
  Alphabet alphabet;
  ForestAlgebra alg;
  std::vector<int> letter_image;  // aligned with alphabet
  std::vector<char> accepting;    // |H| characteristic vector

  int letter(const std::string& label) const;
};

/// User-facing source format: finite H with addition and per-letter
/// transition function; V is derived as a transformation monoid.
struct AutomatonSpec {
  Alphabet alphabet;
  std::vector<std::string> h_names;
  int zero = 0;
  std::vector<int> plus;                  // |H| x |H|
  std::vector<std::vector<int>> delta;    // [letter][h]
  std::vector<int> accepting;

  void validate() const;  // SpecInvalid on violation
};

struct BuildOptions {
  std::size_t v_size_limit = 20000;
};

/// Builds the transition algebra of a spec: H restricted to the elements
/// reachable from 0 under + and the letter transitions, V realized as the
/// monoid of transformations of H generated by the letter actions and the
/// insertions of reachable elements. Faithfulness holds by construction.
Recognizer build_transition_algebra(const AutomatonSpec& spec,
                                    const BuildOptions& options = {});

/// Rebuilds a recognizer on its reachable part; identity when the input is
/// already reachable-restricted.
Recognizer restrict_reachable(const Recognizer& rec,
                              const BuildOptions& options = {});

bool is_reachable_restricted(const Recognizer& rec);

int eval_forest(const Recognizer& rec, const Forest& t);
int eval_context(const Recognizer& rec, const Context& t);

bool member(const Recognizer& rec, const Forest& t);

/// Checks every forest-algebra axiom on explicit tables; returns one
/// witness message per violated axiom (empty report = pass).
std::vector<std::string> validate_axioms(const ForestAlgebra& alg);

}  // namespace fda
