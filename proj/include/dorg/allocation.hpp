#pragma once

#include <map>
#include <string>
#include <vector>

#include "dorg/normal.hpp"
#include "dorg/types.hpp"

namespace dorg {

// Game-theoretic wage: the outside-market wage grossed up by the employee's
// effort share. Diverges as effort approaches 1, collapses to the market wage
// as effort approaches 0.
inline Money employee_wage(Money market_wage, double effort) {
  detail::check_non_negative(market_wage, "market_wage");
  detail::check_finite(effort, "effort");
  if (!(effort > 0.0 && effort < 1.0)) {
    throw std::domain_error("effort must lie in the open interval (0, 1), got " +
                            std::to_string(effort));
  }
  return market_wage / (1.0 - effort);
}

// Profit weight of one hierarchy level. The weights partition the unit mass
// across levels through nested central intervals of the standard normal
// distribution (the empirical 3-sigma rule): level 1 takes the one-sigma
// band, each level above takes the next band out, and the top level takes
// whatever tail mass is left, so the weights always sum to 1.
inline double level_weight(int level, int total_levels) {
  if (total_levels < 1) {
    throw std::domain_error("total_levels must be >= 1");
  }
  if (level < 1 || level > total_levels) {
    throw std::domain_error("level " + std::to_string(level) +
                            " out of range [1, " +
                            std::to_string(total_levels) + "]");
  }
  if (total_levels == 1) return 1.0;
  if (level == total_levels) {
    return normal_central_complement(static_cast<double>(total_levels - 1));
  }
  if (level == 1) return normal_central_interval(1.0);
  return normal_central_interval(static_cast<double>(level)) -
         normal_central_interval(static_cast<double>(level - 1));
}

// Wage plus dividend share of profit. Callers pass beta = 0 whenever
// sales <= costs; allocate() enforces that upstream.
inline Money value_to_individual(Money wage, double beta, Money sales,
                                 Money costs) {
  detail::check_non_negative(wage, "wage");
  detail::check_finite(sales, "sales");
  detail::check_finite(costs, "costs");
  detail::check_finite(beta, "beta");
  if (beta < 0.0 || beta > 1.0) {
    throw std::domain_error("beta must lie in [0, 1], got " +
                            std::to_string(beta));
  }
  return wage + beta * (sales - costs);
}

struct MemberAllocation {
  std::string member_id;
  Role role = Role::Employee;
  int level = 0;  // 0 for investors
  double beta = 0.0;
  Money wage = 0.0;
  Money value = 0.0;

  bool operator==(const MemberAllocation&) const = default;
};

// Outcome of one dividend round. residual_beta is the share of profit nobody
// holds a claim on: the royalty fraction investors did not fund plus the
// weight of hierarchy levels that have no employees. Betas and the residual
// sum to 1 whenever there is a profit to divide.
struct AllocationResult {
  std::vector<MemberAllocation> members;  // same order as scenario.members
  Money profit_pool = 0.0;
  std::map<int, double> level_weights;
  double residual_beta = 0.0;

  bool operator==(const AllocationResult&) const = default;
};

// Splits the profit pool. Investors receive the royalty rate in proportion to
// the share of the cost base they funded; employees split the remaining
// (1 - r) by per-level performance samples weighted with level_weight(). A
// loss zeroes every dividend and leaves members with their wage alone.
inline AllocationResult allocate(const FirmScenario& scenario) {
  scenario.validate();
  const double r = scenario.royalty_rate;

  Money total_investment = 0.0;
  std::map<int, long> tau_by_level;
  for (const auto& m : scenario.members) {
    if (m.is_investor()) {
      total_investment += m.investment();
    } else {
      tau_by_level[m.level()] += m.perf_samples();
    }
  }
  if (total_investment > scenario.costs) {
    throw std::domain_error("total investment " +
                            std::to_string(total_investment) +
                            " exceeds firm costs " +
                            std::to_string(scenario.costs));
  }

  AllocationResult out;
  out.profit_pool = scenario.profit_pool();
  for (int n = 1; n <= scenario.levels; ++n) {
    out.level_weights[n] = level_weight(n, scenario.levels);
  }

  if (out.profit_pool <= 0.0) {
    for (const auto& m : scenario.members) {
      MemberAllocation a;
      a.member_id = m.id();
      a.role = m.role();
      if (m.is_employee()) {
        a.level = m.level();
        a.wage = employee_wage(m.market_wage(), m.effort());
        a.value = a.wage;
      }
      out.members.push_back(std::move(a));
    }
    out.residual_beta = 1.0;
    return out;
  }

  for (const auto& m : scenario.members) {
    MemberAllocation a;
    a.member_id = m.id();
    a.role = m.role();
    if (m.is_investor()) {
      a.beta = r * m.investment() / scenario.costs;
    } else {
      const long tau_level = tau_by_level.at(m.level());
      a.level = m.level();
      a.beta = (static_cast<double>(m.perf_samples()) /
                static_cast<double>(tau_level)) *
               out.level_weights.at(m.level()) * (1.0 - r);
      a.wage = employee_wage(m.market_wage(), m.effort());
    }
    a.value = value_to_individual(a.wage, a.beta, scenario.sales, scenario.costs);
    out.members.push_back(std::move(a));
  }

  const double funded_fraction =
      scenario.costs > 0.0 ? total_investment / scenario.costs : 0.0;
  double unstaffed_weight = 0.0;
  for (int n = 1; n <= scenario.levels; ++n) {
    if (tau_by_level.find(n) == tau_by_level.end()) {
      unstaffed_weight += out.level_weights.at(n);
    }
  }
  out.residual_beta = r * (1.0 - funded_fraction) + (1.0 - r) * unstaffed_weight;
  return out;
}

}  // namespace dorg
