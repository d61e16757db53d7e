#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace dorg {

// Monetary quantities are plain doubles in abstract currency units. Display
// rounding is a presentation concern; the engine never rounds internally.
using Money = double;

enum class Role { Investor, Employee };

inline const char* to_string(Role role) {
  return role == Role::Investor ? "investor" : "employee";
}

namespace detail {

inline void check_finite(double value, const std::string& what) {
  if (!std::isfinite(value)) {
    throw std::domain_error(what + " must be finite");
  }
}

inline void check_non_negative(double value, const std::string& what) {
  check_finite(value, what);
  if (value < 0.0) {
    throw std::domain_error(what + " must be non-negative, got " +
                            std::to_string(value));
  }
}

}  // namespace detail

// One participant in the firm. Role-tagged: an investor carries a positive
// stake and nothing else, an employee carries wage/effort/performance/level
// fields and no stake. Validation happens once, at construction; everything
// downstream can assume a well-formed member.
class Member {
 public:
  static Member investor(std::string id, Money investment) {
    if (id.empty()) throw std::invalid_argument("member id must not be empty");
    detail::check_finite(investment, "investment");
    if (investment <= 0.0) {
      throw std::invalid_argument("investor '" + id +
                                  "': investment must be > 0");
    }
    Member m(std::move(id), Role::Investor);
    m.investment_ = investment;
    return m;
  }

  static Member employee(std::string id, Money market_wage, double effort,
                         int perf_samples, int level) {
    if (id.empty()) throw std::invalid_argument("member id must not be empty");
    detail::check_finite(market_wage, "market_wage");
    detail::check_finite(effort, "effort");
    if (market_wage <= 0.0) {
      throw std::invalid_argument("employee '" + id +
                                  "': market_wage must be > 0");
    }
    if (!(effort > 0.0 && effort < 1.0)) {
      throw std::invalid_argument(
          "employee '" + id + "': effort must lie in the open interval (0, 1), got " +
          std::to_string(effort));
    }
    if (perf_samples < 1) {
      throw std::invalid_argument("employee '" + id +
                                  "': perf_samples must be >= 1");
    }
    if (level < 1) {
      throw std::invalid_argument("employee '" + id + "': level must be >= 1");
    }
    Member m(std::move(id), Role::Employee);
    m.market_wage_ = market_wage;
    m.effort_ = effort;
    m.perf_samples_ = perf_samples;
    m.level_ = level;
    return m;
  }

  const std::string& id() const { return id_; }
  Role role() const { return role_; }
  bool is_investor() const { return role_ == Role::Investor; }
  bool is_employee() const { return role_ == Role::Employee; }

  // Investor-only field; zero for employees.
  Money investment() const { return investment_; }

  // Employee-only fields; zero for investors.
  Money market_wage() const { return market_wage_; }
  double effort() const { return effort_; }
  int perf_samples() const { return perf_samples_; }
  int level() const { return level_; }

 private:
  Member(std::string id, Role role) : id_(std::move(id)), role_(role) {}

  std::string id_;
  Role role_;
  Money investment_ = 0.0;
  Money market_wage_ = 0.0;
  double effort_ = 0.0;
  int perf_samples_ = 0;
  int level_ = 0;
};

// Per-transaction cost components. The first block feeds the external cost,
// the second the internal one.
struct CostBreakdown {
  Money land = 0.0;
  Money labour = 0.0;
  Money capital = 0.0;
  double price_uncertainty = 0.0;  // expected market inflation over the period

  Money legal_cost = 0.0;
  Money organisation_cost = 0.0;
  Money operational_uncertainty = 0.0;

  void validate() const {
    detail::check_non_negative(land, "land");
    detail::check_non_negative(labour, "labour");
    detail::check_non_negative(capital, "capital");
    detail::check_non_negative(price_uncertainty, "price_uncertainty");
    detail::check_non_negative(legal_cost, "legal_cost");
    detail::check_non_negative(organisation_cost, "organisation_cost");
    detail::check_non_negative(operational_uncertainty,
                               "operational_uncertainty");
  }

  bool operator==(const CostBreakdown&) const = default;
};

// Linear supply/demand behaviour. Supply a + b*P meets demand
// c - d*P + e*IE; the behavioural constants are unrestricted in sign.
struct MarketParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double e = 0.0;
  double inflation_expectation = 0.0;

  void validate() const {
    detail::check_finite(a, "market.a");
    detail::check_finite(b, "market.b");
    detail::check_finite(c, "market.c");
    detail::check_finite(d, "market.d");
    detail::check_finite(e, "market.e");
    detail::check_finite(inflation_expectation, "market.inflation_expectation");
  }

  bool operator==(const MarketParams&) const = default;
};

struct BudgetSet {
  Money investor_budget = 0.0;
  Money customer_budget = 0.0;
  Money worker_reservation = 0.0;

  void validate() const {
    detail::check_finite(investor_budget, "budgets.investor");
    detail::check_finite(customer_budget, "budgets.customer");
    detail::check_finite(worker_reservation, "budgets.worker_reservation");
  }

  bool operator==(const BudgetSet&) const = default;
};

// Firm-wide parameters for one contractual cycle. The profit pool is always
// derived from sales and costs, never stored, and may be negative.
struct FirmScenario {
  std::vector<Member> members;
  int levels = 1;
  double royalty_rate = 0.0;  // fraction of profit promised to investors
  Money sales = 0.0;
  Money costs = 0.0;
  std::vector<CostBreakdown> cost_breakdowns;
  MarketParams market;
  double existence_uncertainty = 0.0;
  std::optional<BudgetSet> budgets;

  Money profit_pool() const { return sales - costs; }

  void validate() const {
    if (levels < 1) throw std::domain_error("levels must be >= 1");
    detail::check_finite(royalty_rate, "royalty_rate");
    if (royalty_rate < 0.0 || royalty_rate > 1.0) {
      throw std::domain_error("royalty_rate must lie in [0, 1], got " +
                              std::to_string(royalty_rate));
    }
    detail::check_non_negative(sales, "sales");
    detail::check_non_negative(costs, "costs");
    detail::check_non_negative(existence_uncertainty, "existence_uncertainty");
    market.validate();
    if (budgets) budgets->validate();
    for (const auto& b : cost_breakdowns) b.validate();

    std::unordered_set<std::string> seen;
    for (const auto& m : members) {
      if (!seen.insert(m.id()).second) {
        throw std::domain_error("duplicate member id '" + m.id() + "'");
      }
      if (m.is_employee() && m.level() > levels) {
        throw std::domain_error("member '" + m.id() + "': level " +
                                std::to_string(m.level()) +
                                " exceeds firm levels " +
                                std::to_string(levels));
      }
    }
  }
};

}  // namespace dorg
