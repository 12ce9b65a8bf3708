#pragma once

#include "searchgame/prices.hpp"
#include "searchgame/profits.hpp"

#include <cstddef>
#include <vector>

namespace searchgame {

/// The symmetric single-price first-order condition under Hotelling costs is
/// quadratic in the price; the two variants differ in how the cost enters
/// the linear coefficient. HalfSqrtC, sqrt(c)/2, is the one consistent with
/// the profit calculus; SqrtHalfC, sqrt(c/2), is kept for comparison.
enum class FocVariant { HalfSqrtC, SqrtHalfC };

/// Unique positive root of p*(1 + k) + p^2/2 - 1/2 = 0 with k the cost term
/// of the chosen variant: p* = sqrt(1 + (1+k)^2) - (1+k). Uniform valuations.
double solve_single_price_foc(double c, FocVariant variant = FocVariant::HalfSqrtC);

/// Derivative of a deviating firm's total profit with respect to its price
/// cut, evaluated at zero cut: p*(1 + sqrt(c)/2) + p^2/2 - 1/2. Zero at the
/// FOC price.
double verify_foc_stationarity(double p_star, double c);

/// Inclusive triangular price grid: pairs (low, high) with low <= high drawn
/// from {lo, lo + step, ..., hi}, all within [0, 1].
struct GridSpec {
    double lo;
    double hi;
    double step;

    GridSpec(double lo_, double hi_, double step_);
    std::vector<double> values() const;
};

struct DeviationReport {
    PricePolicy candidate;
    double candidate_payoff;
    PricePolicy best_deviation;
    double best_payoff;
    bool profitable;
    GridSpec grid;
    std::vector<std::pair<PricePolicy, double>> table;
};

/// Exhaustive best-response check: evaluates the deviation payoff at every
/// triangular grid point against an opponent fixed at `candidate`, excluding
/// the candidate pair itself. The argmax tie-break is the lexicographically
/// smallest (low, high), so the result is independent of worker count.
/// `profitable` means the best grid payoff exceeds the candidate's own payoff
/// by more than 1e-12.
DeviationReport grid_deviation_search(const PricePolicy& candidate, const MarketConfig& config,
                                      const GridSpec& grid, unsigned workers = 0);

/// Zero-cost, uniform-valuation equilibrium verification at the single price
/// sqrt(2) - 1: runs the grid search and additionally checks the
/// undercutting condition at every discriminating returns-possible grid
/// point (strictly negative for positive first prices). Throws numeric_error
/// if any check fails.
struct SinglePriceEquilibriumCheck {
    DeviationReport report;
    std::size_t condition_points;
    double max_condition; // largest condition value seen at first_price > 0
};
SinglePriceEquilibriumCheck verify_single_price_equilibrium(const GridSpec& grid,
                                                            unsigned workers = 0);

} // namespace searchgame
