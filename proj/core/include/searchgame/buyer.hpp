#pragma once

#include "searchgame/engine.hpp"
#include "searchgame/prices.hpp"

#include <functional>

namespace searchgame {

enum class Regime { ReturnsPossible, NoReturn };

/// Symmetric-play reservation value under zero search cost: the draw at which
/// a buyer visiting either firm first is indifferent between buying on the
/// spot and inspecting the rival.
struct SearchCutoffs {
    double v_star;
    Regime regime;
    bool participation;
};

/// Solves v - first = E[max(V - first, v - ret, 0)] for symmetric two-part
/// prices at zero cost. Uniform valuations hit the closed-form quadratic
/// root; other distributions go through the expect_excess inversion.
SearchCutoffs reservation_cutoff(const PricePolicy& policy, const ValuationDistribution& dist);

/// Independent route to the same number: bracketed bisection directly on the
/// indifference equation over [first_price, support_max].
double solve_reservation_equation(const PricePolicy& policy, const ValuationDistribution& dist);

/// Buyer's expected surplus from inspecting `visited` first at zero cost,
/// then continuing optimally (buy now, or see the rival and take the best of
/// buying there, returning, or leaving).
double buyer_value_visit_first(const PricePolicy& visited, const PricePolicy& other,
                               const ValuationDistribution& dist);

enum class FirstVisit { Firm1, Firm2, Indifferent };

/// Which firm the buyer inspects first at zero cost. Indifferent when the
/// two commitment values agree within 1e-12.
FirstVisit first_visit_choice(const PricePolicy& policy1, const PricePolicy& policy2,
                              const ValuationDistribution& dist);

/// Location-indexed stopping cutoffs for the single-price deviation game
/// under travel costs: firm 1 posts p_star - delta_p, firm 2 posts p_star.
/// Cutoff maps are clamped to [0, 1]; x_star is the first-visit indifference
/// location, solved from the buyer indifference condition. `corner` flags a
/// gap large enough to push the indifference off [0, 1] (x_star is then the
/// clamped endpoint).
struct HotellingCutoffs {
    std::function<double(double)> v1_of_x;
    std::function<double(double)> v2_of_x;
    double x_star;
    bool corner;
};

HotellingCutoffs hotelling_cutoffs(double p_star, double delta_p, const MarketConfig& config);

/// Expected surplus of a buyer at location x committed to inspecting `first`
/// (located at 0, so the trip costs cost*x) before `second` (at 1, trip
/// cost*(1-x)), floored at zero: a buyer who expects a loss stays home.
double sequential_value_at_location(double x, const PricePolicy& first, const PricePolicy& second,
                                    const MarketConfig& config);

} // namespace searchgame
