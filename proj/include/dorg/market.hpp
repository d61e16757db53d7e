#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "dorg/types.hpp"

namespace dorg {

// External transaction cost of one transaction: factor charges inflated by
// the expected price uncertainty.
inline Money etc_compose(const CostBreakdown& b) {
  b.validate();
  return (1.0 + b.price_uncertainty) * (b.land + b.labour + b.capital);
}

// Internal transaction cost of one transaction.
inline Money itc_compose(const CostBreakdown& b) {
  b.validate();
  return b.legal_cost + b.organisation_cost + b.operational_uncertainty;
}

// Price as the sum of per-transaction total costs. On the open market the
// internal component does not exist, so market_side drops it.
inline Money price_from_costs(const std::vector<CostBreakdown>& breakdowns,
                              bool market_side) {
  if (breakdowns.empty()) {
    throw std::domain_error("price_from_costs requires at least one breakdown");
  }
  Money total = 0.0;
  for (const auto& b : breakdowns) {
    total += etc_compose(b);
    if (!market_side) total += itc_compose(b);
  }
  return total;
}

struct EquilibriumPrice {
  Money price = 0.0;
  bool negative = false;  // the linear model admits it; flagged, not rejected

  bool operator==(const EquilibriumPrice&) const = default;
};

// Clearing price of the linear supply/demand pair. Throws only when the
// combined slope vanishes and no equilibrium exists.
inline EquilibriumPrice equilibrium_price(const MarketParams& m) {
  m.validate();
  const double slope = m.b + m.d;
  if (slope == 0.0) {
    throw std::domain_error("singular market: b + d = 0 has no equilibrium");
  }
  const Money p = (m.c + m.e * m.inflation_expectation - m.a) / slope;
  return {p, p < 0.0};
}

// Supply minus demand at price p; zero exactly at the equilibrium price.
inline double equilibrium_residual(const MarketParams& m, Money p) {
  m.validate();
  detail::check_finite(p, "price");
  return (m.a + m.b * p) - (m.c - m.d * p + m.e * m.inflation_expectation);
}

// One candidate outcome under the Hurwicz criterion: the payoff if things go
// well and the payoff if they do not.
struct PayoffRange {
  Money optimistic = 0.0;
  Money pessimistic = 0.0;
};

struct HurwiczChoice {
  std::size_t index = 0;
  Money value = 0.0;
};

// Blends each option's best and worst payoff with the given degree of
// optimism and picks the maximum; ties resolve to the lowest index. With
// optimism 1 this is maximax, with 0 it is maximin.
inline HurwiczChoice hurwicz_select(const std::vector<PayoffRange>& options,
                                    double optimism) {
  if (options.empty()) {
    throw std::domain_error("hurwicz_select requires at least one option");
  }
  detail::check_finite(optimism, "optimism");
  if (optimism < 0.0 || optimism > 1.0) {
    throw std::domain_error("optimism must lie in [0, 1], got " +
                            std::to_string(optimism));
  }
  for (std::size_t i = 0; i < options.size(); ++i) {
    detail::check_finite(options[i].optimistic, "optimistic payoff");
    detail::check_finite(options[i].pessimistic, "pessimistic payoff");
    if (options[i].optimistic < options[i].pessimistic) {
      throw std::domain_error("option " + std::to_string(i) +
                              ": optimistic payoff below pessimistic payoff");
    }
  }
  HurwiczChoice best{0, optimism * options[0].optimistic +
                            (1.0 - optimism) * options[0].pessimistic};
  for (std::size_t i = 1; i < options.size(); ++i) {
    const Money h = optimism * options[i].optimistic +
                    (1.0 - optimism) * options[i].pessimistic;
    if (h > best.value) best = {i, h};
  }
  return best;
}

// Uncertainty surcharge fed into CostBreakdown::operational_uncertainty: the
// nonnegative gap between what the firm expected and the Hurwicz-selected
// value. Zero under certainty.
inline Money operational_uncertainty_from_hurwicz(Money expected_payoff,
                                                  Money hurwicz_value) {
  detail::check_finite(expected_payoff, "expected_payoff");
  detail::check_finite(hurwicz_value, "hurwicz_value");
  return std::max(0.0, expected_payoff - hurwicz_value);
}

}  // namespace dorg
