#include "forestda/monoid.hpp"

#include <algorithm>
#include <numeric>

namespace fda {

FiniteMonoid::FiniteMonoid(std::vector<std::string> names,
                           std::vector<int> table, int identity, Trust trust)
    : names_(std::move(names)), table_(std::move(table)), identity_(identity) {
  const std::size_t n = names_.size();
  if (table_.size() != n * n)
    raise(ErrorCode::SpecInvalid, "operation table has wrong shape");
  for (int x : table_)
    if (x < 0 || x >= static_cast<int>(n))
      raise(ErrorCode::SpecInvalid, "operation table entry out of range");
  if (identity_ < 0 || identity_ >= static_cast<int>(n))
    raise(ErrorCode::SpecInvalid, "identity out of range");
  if (trust == Trust::Validate) {
    auto violations = check_axioms();
    if (!violations.empty()) raise(ErrorCode::SpecInvalid, violations.front());
  }
}

int FiniteMonoid::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
    raise(ErrorCode::NotFound, "unknown element '" + name + "'");
  return static_cast<int>(it - names_.begin());
}

int FiniteMonoid::omega(int x) const {
  // Walk x, x^2, ... until the cycle closes; the cycle contains exactly one
  // idempotent in a finite monoid.
  std::vector<int> seen;
  std::vector<char> mark(static_cast<std::size_t>(size()), 0);
  int p = x;
  while (!mark[static_cast<std::size_t>(p)]) {
    mark[static_cast<std::size_t>(p)] = 1;
    seen.push_back(p);
    p = op(p, x);
  }
  for (int e : seen)
    if (op(e, e) == e) return e;
  raise(ErrorCode::Internal, "no idempotent power found for '" + name(x) + "'");
}

int FiniteMonoid::power(int x, unsigned n) const {
  int acc = identity_;
  for (unsigned i = 0; i < n; ++i) acc = op(acc, x);
  return acc;
}

std::vector<std::string> FiniteMonoid::check_axioms() const {
  std::vector<std::string> out;
  const int n = size();
  for (int a = 0; a < n; ++a) {
    if (op(identity_, a) != a || op(a, identity_) != a) {
      out.push_back("identity '" + name(identity_) + "' is not neutral on '" +
                    name(a) + "'");
      return out;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (op(op(a, b), c) != op(a, op(b, c))) {
          out.push_back("operation not associative at (" + name(a) + ", " +
                        name(b) + ", " + name(c) + ")");
          return out;
        }
  return out;
}

namespace {

// right_ideal[x] = characteristic vector of xM.
std::vector<std::vector<char>> right_ideals(const FiniteMonoid& m) {
  const int n = m.size();
  std::vector<std::vector<char>> ideal(
      static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (int x = 0; x < n; ++x)
    for (int k = 0; k < n; ++k)
      ideal[static_cast<std::size_t>(x)][static_cast<std::size_t>(m.op(x, k))] = 1;
  return ideal;
}

std::vector<std::vector<char>> left_ideals(const FiniteMonoid& m) {
  const int n = m.size();
  std::vector<std::vector<char>> ideal(
      static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (int x = 0; x < n; ++x)
    for (int k = 0; k < n; ++k)
      ideal[static_cast<std::size_t>(x)][static_cast<std::size_t>(m.op(k, x))] = 1;
  return ideal;
}

std::vector<int> classes_from_ideals(
    const std::vector<std::vector<char>>& ideal) {
  const int n = static_cast<int>(ideal.size());
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int x = 0; x < n; ++x) {
    if (cls[static_cast<std::size_t>(x)] >= 0) continue;
    cls[static_cast<std::size_t>(x)] = next;
    for (int y = x + 1; y < n; ++y)
      if (ideal[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] &&
          ideal[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)])
        cls[static_cast<std::size_t>(y)] = next;
    ++next;
  }
  return cls;
}

}  // namespace

GreenClasses green_classes(const FiniteMonoid& m) {
  return GreenClasses{classes_from_ideals(right_ideals(m)),
                      classes_from_ideals(left_ideals(m))};
}

bool green_r_equiv(const FiniteMonoid& m, int a, int b) {
  bool a_in_bM = false, b_in_aM = false;
  for (int k = 0; k < m.size(); ++k) {
    if (m.op(b, k) == a) a_in_bM = true;
    if (m.op(a, k) == b) b_in_aM = true;
  }
  return a_in_bM && b_in_aM;
}

bool green_l_equiv(const FiniteMonoid& m, int a, int b) {
  bool a_in_Mb = false, b_in_Ma = false;
  for (int k = 0; k < m.size(); ++k) {
    if (m.op(k, b) == a) a_in_Mb = true;
    if (m.op(k, a) == b) b_in_Ma = true;
  }
  return a_in_Mb && b_in_Ma;
}

}  // namespace fda
