#pragma once

#include "searchgame/buyer.hpp"
#include "searchgame/prices.hpp"

namespace searchgame {

/// A seller's expected profit split by the buyer's visit order, with the
/// associated demand masses. `total` weights the two sides by the buyer's
/// first-visit choice (1, 0, or 1/2 on indifference).
struct ProfitBreakdown {
    double profit_first;
    double profit_second;
    double total;
    double demand_first;
    double demand_second;
    double weight_first;
};

/// Per-firm profit when both firms post the single price p at zero cost:
/// p * (1 - F(p)^2) / 2. The buyer inspects both and takes the better draw.
double single_price_profit(double p, const ValuationDistribution& dist);

/// Zero-cost profit decomposition of `policy` against `opp`, by exact region
/// integration (closed form for uniform valuations, quadrature otherwise).
ProfitBreakdown visit_order_profits(const PricePolicy& policy, const PricePolicy& opp,
                                    const ValuationDistribution& dist);

/// LHS - RHS of the discriminatory-equilibrium deviation condition: negative
/// means undercutting to the uniform first price beats being visited second.
/// Requires the returns-possible regime (throws std::invalid_argument when
/// the reservation value sits at or below the return price). For uniform
/// valuations the value collapses to first * (first - return).
double undercutting_condition(const PricePolicy& policy, const ValuationDistribution& dist);

/// No-return-regime profit bound: a symmetric pair whose reservation value
/// never reaches the return price earns strictly less than the uniform-price
/// deviation payoff first * (1 - F(first)^2) / 2.
struct NoReturnBound {
    double bound;
    double pre_deviation_profit;
};
NoReturnBound no_return_profit_bound(const PricePolicy& policy, const ValuationDistribution& dist);

/// First-order accounting of a small first-visit bonus delta_p off the single
/// price p, holding the rival at p. The indifferent type v solves
/// expect_excess(v) = delta_p; the gain comes from search deterred on
/// [v, V], the discount leak from buyers who bought anyway.
struct BonusDecomposition {
    double delta_p;
    double v_indiff;
    double gain_deter;     // sales gained by stopping the buyer at the door
    double loss_discount;  // delta_p handed to buyers who would have bought at p
    double net_first;      // gain_deter - loss_discount
    double loss_second;    // profit drop when visited second, from posting p - delta_p
    bool large_bonus;      // v_indiff fell below p: beyond the first-order regime
};
BonusDecomposition bonus_decomposition(double p, double delta_p,
                                       const ValuationDistribution& dist);

/// Literal per-location profit expressions for the single-price deviation
/// game under travel costs (firm 1 at p_star - delta_p, firm 2 at p_star),
/// valid while the stopping cutoffs stay interior.
struct HotellingProfits {
    double first;   // firm 1's profit density when visited first
    double second;  // firm 1's profit density when visited second
};
HotellingProfits hotelling_profit_formulas(double p_star, double delta_p, double x,
                                           const MarketConfig& config);

/// The same expressions integrated over locations on both sides of the
/// indifference point x_star (closed form).
double hotelling_total_profit(double p_star, double delta_p, const MarketConfig& config);
double hotelling_total_profit_at(double p_star, double delta_p, double x_star,
                                 const MarketConfig& config);

/// Expected profit of `self` against `opp` with an optimally searching buyer.
/// At zero travel cost this is the visit-order total; with cost it integrates
/// over buyer locations, splitting at the first-visit switch point and at
/// every cutoff-regime boundary (self sits at location 0, opp at 1).
double expected_profit(const PricePolicy& self, const PricePolicy& opp,
                       const MarketConfig& config);

/// Profit of a deviating firm posting `dev` against a rival committed to the
/// single price `opp_price`.
double deviation_payoff(const PricePolicy& dev, double opp_price, const MarketConfig& config);

} // namespace searchgame
