#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dorg/allocation.hpp"
#include "dorg/types.hpp"

namespace dorg {

inline Money total_transaction_cost(Money etc, Money itc) {
  detail::check_non_negative(etc, "etc");
  detail::check_non_negative(itc, "itc");
  return etc + itc;
}

enum class ViabilityFailure { CostInversion, ZeroUncertainty };

inline const char* to_string(ViabilityFailure f) {
  return f == ViabilityFailure::CostInversion ? "cost-inversion"
                                              : "zero-uncertainty";
}

struct Viability {
  std::optional<ViabilityFailure> failure;  // empty means viable

  bool viable() const { return !failure.has_value(); }
  explicit operator bool() const { return viable(); }

  bool operator==(const Viability&) const = default;
};

// A firm can exist only while internal coordination is no dearer than the
// market and some operating uncertainty remains; with perfect knowledge there
// is nothing left for management to do. Cost inversion is reported first when
// both conditions fail.
inline Viability firm_viability(Money etc, Money itc, double u_e) {
  detail::check_non_negative(etc, "etc");
  detail::check_non_negative(itc, "itc");
  detail::check_non_negative(u_e, "u_e");
  if (etc < itc) return {ViabilityFailure::CostInversion};
  if (u_e == 0.0) return {ViabilityFailure::ZeroUncertainty};
  return {};
}

enum class Verdict { Expand, Stop };

// Marginal rule: keep pulling transactions inside while organising one more
// costs no more than buying it on the market. Equality still expands.
inline Verdict expansion_decision(Money mitc, Money metc) {
  detail::check_non_negative(mitc, "mitc");
  detail::check_non_negative(metc, "metc");
  return mitc <= metc ? Verdict::Expand : Verdict::Stop;
}

enum class BudgetViolationKind {
  InvestorOverBudget,     // investor budget exceeds the firm's total TTC
  CustomerOverBudget,     // customer budget exceeds the equilibrium price
  WorkerBelowReservation  // paid wage falls short of the worker's reservation
};

inline const char* to_string(BudgetViolationKind k) {
  switch (k) {
    case BudgetViolationKind::InvestorOverBudget: return "investor-over-budget";
    case BudgetViolationKind::CustomerOverBudget: return "customer-over-budget";
    default: return "worker-below-reservation";
  }
}

struct BudgetViolation {
  BudgetViolationKind kind;
  std::string member_id;  // set for worker violations only
  Money limit = 0.0;
  Money amount = 0.0;

  bool operator==(const BudgetViolation&) const = default;
};

// Role-budget constraints. Investors may commit at most the firm's total
// transaction cost, customers at most the going price, and every employee's
// paid wage must clear that worker's reservation budget. Returns one entry
// per violated constraint; scenarios without a budget block pass trivially.
inline std::vector<BudgetViolation> check_budgets(const FirmScenario& scenario,
                                                  Money ttc_sum, Money price) {
  scenario.validate();
  detail::check_non_negative(ttc_sum, "ttc_sum");
  detail::check_non_negative(price, "price");

  std::vector<BudgetViolation> violations;
  if (!scenario.budgets) return violations;
  const BudgetSet& b = *scenario.budgets;

  if (b.investor_budget > ttc_sum) {
    violations.push_back(
        {BudgetViolationKind::InvestorOverBudget, {}, ttc_sum, b.investor_budget});
  }
  if (b.customer_budget > price) {
    violations.push_back(
        {BudgetViolationKind::CustomerOverBudget, {}, price, b.customer_budget});
  }
  for (const auto& m : scenario.members) {
    if (!m.is_employee()) continue;
    const Money paid = employee_wage(m.market_wage(), m.effort());
    if (paid < b.worker_reservation) {
      violations.push_back({BudgetViolationKind::WorkerBelowReservation, m.id(),
                            b.worker_reservation, paid});
    }
  }
  return violations;
}

}  // namespace dorg
