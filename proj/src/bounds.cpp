#include "domtri/bounds.h"

#include <sstream>

#include "domtri/error.h"

namespace domtri {

std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::Combinator: return "combinator";
    case Quantity::Combinator6: return "combinator6";
    case Quantity::StackedMinClass: return "stacked_min_class";
    case Quantity::Iota: return "iota";
    case Quantity::Gamma: return "gamma";
  }
  return "combinator";
}

std::string_view to_string(BoundKind k) {
  switch (k) {
    case BoundKind::Theorem: return "theorem";
    case BoundKind::Conjecture: return "conjecture";
    case BoundKind::Finding: return "finding";
  }
  return "theorem";
}

std::string BoundSpec::expression() const {
  std::ostringstream os;
  if (b != 0) os << '(';
  if (a != 1) os << a;
  os << 'n';
  if (b > 0) os << '+' << b;
  if (b < 0) os << b;
  if (b != 0) os << ')';
  if (d != 1) os << '/' << d;
  return os.str();
}

const std::vector<BoundSpec>& bound_registry() {
  using Q = Quantity;
  using R = Relation;
  using K = BoundKind;
  static const std::vector<BoundSpec> registry{
      {"combinator_le_5n/12", Q::Combinator, R::Le, 5, 0, 12, K::Theorem},
      {"combinator_lt_3n/8", Q::Combinator, R::Lt, 3, 0, 8, K::Theorem},
      {"combinator_le_n/3_delta5", Q::Combinator, R::Le, 1, 0, 3, K::Theorem},
      {"iota_le_5n/12", Q::Iota, R::Le, 5, 0, 12, K::Theorem},
      {"iota_lt_3n/8", Q::Iota, R::Lt, 3, 0, 8, K::Theorem},
      {"iota_le_n/3_delta5", Q::Iota, R::Le, 1, 0, 3, K::Theorem},
      {"iota_eq_2n/7", Q::Iota, R::Eq, 2, 0, 7, K::Theorem},
      {"stacked_min_class_le_n/4", Q::StackedMinClass, R::Le, 1, 0, 4, K::Theorem},
      {"iota_le_n/4_3tree", Q::Iota, R::Le, 1, 0, 4, K::Theorem},
      {"combinator6_le_(13n-12)/42", Q::Combinator6, R::Le, 13, -12, 42, K::Theorem},
      {"iota_lt_13n/42", Q::Iota, R::Lt, 13, 0, 42, K::Theorem},
      {"combinator_le_n/4_odd", Q::Combinator, R::Le, 1, 0, 4, K::Theorem},
      {"iota_le_n/4_odd", Q::Iota, R::Le, 1, 0, 4, K::Theorem},
      {"iota_le_n/3_two_thirds_odd", Q::Iota, R::Le, 1, 0, 3, K::Finding},
      {"gamma_le_n/3", Q::Gamma, R::Le, 1, 0, 3, K::Theorem},
      {"gamma_eq_n/4_k4chain", Q::Gamma, R::Eq, 1, 0, 4, K::Theorem},
      {"gamma_le_n/4_conjecture", Q::Gamma, R::Le, 1, 0, 4, K::Conjecture},
      {"iota_le_n/3_conjecture", Q::Iota, R::Le, 1, 0, 3, K::Conjecture},
  };
  return registry;
}

const BoundSpec& find_bound(std::string_view name) {
  for (const BoundSpec& b : bound_registry())
    if (b.name == name) return b;
  throw Error("unknown bound '" + std::string(name) + "'");
}

}  // namespace domtri
