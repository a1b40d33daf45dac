#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "forestda/decide.hpp"
#include "forestda/monoid.hpp"

namespace fda {

/// A finite monoid with a pre-order satisfying m^w n m^w = m^w whenever
/// n is below m. The given relation is closed reflexively-transitively
/// and the stratification identity is asserted on the closure.
class StratifiedMonoid {
 public:
  StratifiedMonoid(FiniteMonoid mon, std::vector<char> pre);

  /// Trivial stratification: the identity pre-order.
  explicit StratifiedMonoid(FiniteMonoid mon);

  const FiniteMonoid& mon() const { return mon_; }
  bool below(int n, int m) const {
    return pre_[static_cast<std::size_t>(n) * static_cast<std::size_t>(mon_.size()) + static_cast<std::size_t>(m)] != 0;
  }

 private:
  FiniteMonoid mon_;
  std::vector<char> pre_;
};

struct DAVerdict {
  bool holds = true;
  int m = -1;  // first pair violating (mn)^w m (mn)^w = (mn)^w
  int n = -1;
};

DAVerdict check_da(const FiniteMonoid& mon);

/// A finite union of blocks A0* B1 A1* ... Bk Ak*. Letter sets are bit
/// masks over the expression alphabet; every filler additionally records
/// the downward-closed element set it is the beta-preimage of.
struct WordExpr {
  struct Monomial {
    std::vector<std::uint64_t> fillers;        // k+1 letter masks
    std::vector<std::uint64_t> anchors;        // k letter masks, none empty
    std::vector<std::uint64_t> filler_images;  // k+1 element masks

    bool operator==(const Monomial& other) const = default;
    bool operator<(const Monomial& other) const;
  };

  std::vector<std::string> alphabet;
  std::vector<Monomial> monomials;
};

/// Membership of a word (letter indices) in a block expression.
bool word_expr_member(const WordExpr& expr, const std::vector<int>& word);

/// Membership with letters given by name; UnknownLabel on foreign letters.
bool word_expr_member(const WordExpr& expr,
                      const std::vector<std::string>& word);

/// A monoid recognizing words via a letter assignment.
struct WordLanguage {
  std::vector<std::string> alphabet;
  std::vector<int> beta;  // letter -> element
};

/// Constructive synthesis of a block expression for beta^{-1}(target)
/// over a stratified monoid satisfying the DA identity. Every filler is
/// the preimage of a downward-closed element set.
WordExpr synth_sigma2_word(const WordLanguage& lang,
                           const StratifiedMonoid& strat, int target);

int eval_word(const FiniteMonoid& mon, const WordLanguage& lang,
              const std::vector<int>& word);

/// Violations of the filler downward-closure invariant (empty = pass).
std::vector<std::string> check_expr_downward_closed(
    const WordExpr& expr, const WordLanguage& lang,
    const StratifiedMonoid& strat);

/// The context-type decomposition: contexts factor as words over the
/// generator alphabet {a[]} + {h+[], []+h}, and V acts as a stratified
/// monoid under the piece relation. The expression matches exactly the
/// factor sequences of contexts of the requested type.
struct ContextDecomposition {
  std::vector<int> letter_velem;          // abstract letter -> V element
  std::vector<std::string> letter_names;  // display form of each letter
  WordExpr expr;
};

ContextDecomposition decompose_context_types(const Recognizer& rec,
                                             const PieceRelation& rel,
                                             const WitnessTable& witnesses,
                                             int v);

/// The factor sequence of a context as abstract letters of a
/// decomposition (outermost factor first).
std::vector<int> factorize_context(const Recognizer& rec,
                                   const ContextDecomposition& decomp,
                                   const Context& p);

}  // namespace fda
