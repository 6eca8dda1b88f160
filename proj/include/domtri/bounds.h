#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "domtri/accounting.h"

namespace domtri {

/// Which computed value a bound constrains.
enum class Quantity { Combinator, Combinator6, StackedMinClass, Iota, Gamma };

/// theorem: proved, a failure is a breach. conjecture: audited, never a
/// breach. finding: stated without proof, failures are reported only.
enum class BoundKind { Theorem, Conjecture, Finding };

std::string_view to_string(Quantity q);
std::string_view to_string(BoundKind k);

/// quantity (relation) (a n + b) / d. The right-hand side depends on n only.
struct BoundSpec {
  std::string name;
  Quantity quantity;
  Relation relation;
  long long a, b, d;
  BoundKind kind;

  Rational rhs(int n) const { return Rational(a * n + b, d); }
  std::string expression() const;
};

const std::vector<BoundSpec>& bound_registry();
/// Throws domtri::Error for unknown names.
const BoundSpec& find_bound(std::string_view name);

}  // namespace domtri
