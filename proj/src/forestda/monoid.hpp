#pragma once

#include <string>
#include <vector>

#include "forestda/errors.hpp"

namespace fda {

/// A finite monoid with elements 0..size-1, a total operation table and a
/// two-sided identity. Raw tables are validated on construction (full
/// associativity triple check); tables produced by transformation closure
/// are composition tables and skip the check.
class FiniteMonoid {
 public:
  enum class Trust { Validate, Composition };

  FiniteMonoid() = default;
  FiniteMonoid(std::vector<std::string> names, std::vector<int> table,
               int identity, Trust trust = Trust::Validate);

  int size() const { return static_cast<int>(names_.size()); }
  int identity() const { return identity_; }
  int op(int a, int b) const { return table_[static_cast<std::size_t>(a) * names_.size() + static_cast<std::size_t>(b)]; }
  const std::string& name(int x) const { return names_[static_cast<std::size_t>(x)]; }
  const std::vector<std::string>& names() const { return names_; }

  int index_of(const std::string& name) const;  // NotFound if absent

  /// The unique idempotent in the cyclic sub-semigroup {x, x^2, ...}.
  int omega(int x) const;

  int power(int x, unsigned n) const;

  /// First associativity violation (a,b,c) or identity violation, if any.
  std::vector<std::string> check_axioms() const;

 private:
  std::vector<std::string> names_;
  std::vector<int> table_;
  int identity_ = 0;
};

struct GreenClasses {
  // r_class[x] == r_class[y] iff x and y are mutually right-divisible.
  std::vector<int> r_class;
  std::vector<int> l_class;
};

/// Green's relations: m ~R n iff m = nk and n = ml for some k,l; dually ~L.
GreenClasses green_classes(const FiniteMonoid& m);

bool green_r_equiv(const FiniteMonoid& m, int a, int b);
bool green_l_equiv(const FiniteMonoid& m, int a, int b);

}  // namespace fda
