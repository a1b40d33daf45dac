#pragma once

#include <vector>

#include "forestda/algebra.hpp"

namespace fda {

/// The syntactic quotient of a reachable-restricted recognizer: classes of
/// the coarsest congruence saturating the accepting set, with the quotient
/// recognizer and the class maps.
struct QuotientMap {
  std::vector<int> h_class;  // original H element -> quotient class
  std::vector<int> v_class;  // original V element -> quotient class
  Recognizer quotient;
};

/// Quotients by the syntactic congruence: h ~ h' iff vh and vh' agree on
/// acceptance for every context type v, and v ~ v' iff vh ~ v'h for every
/// h. Requires a reachable-restricted input so that V is exactly the set
/// of realized context types.
QuotientMap syntactic_quotient(const Recognizer& rec);

/// True when the two recognizers are isomorphic under canonical class
/// numbering (equal sizes, identical tables and distinguished data).
bool isomorphic_canonical(const Recognizer& a, const Recognizer& b);

}  // namespace fda
