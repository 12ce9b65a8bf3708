#pragma once

#include "searchgame/prices.hpp"
#include "searchgame/valuation.hpp"

namespace searchgame::engine {

/// E[max(V - other_price, w, 0)]: what the buyer expects from standing at the
/// second seller's door holding a fall-back surplus w (buying back at the
/// first seller, or walking away). Equals w^+ + expect_excess(other_price + w^+).
double option_value(const ValuationDistribution& dist, double w, double other_first_price);

struct StoppingCutoff {
    double value;           // raw cutoff; may fall outside the support
    bool returns_possible;  // cutoff above the return price: first seller is revisited
};

/// Stopping threshold for a buyer standing at the (first, return)-priced firm
/// she visited first, facing `other_first_price` at the rival and paying
/// `second_visit_cost` to get there. She buys on the spot iff her draw is at
/// or above the cutoff. Exact for the uniform distribution; one-dimensional
/// inversion of expect_excess otherwise.
StoppingCutoff stopping_cutoff(const ValuationDistribution& dist, const PricePolicy& visited,
                               double other_first_price, double second_visit_cost);

/// Expected surplus committed to visiting `visited` first and searching
/// optimally afterwards. Costs may push this negative; callers decide
/// participation. The rival enters only through its first-visit price:
/// its return price can never be paid by a buyer who goes there second.
double value_visit_first(const ValuationDistribution& dist, const PricePolicy& visited,
                         double other_first_price, double first_visit_cost,
                         double second_visit_cost);

/// Probability split of the buyer's terminal action when `visited` is seen
/// first, given the stopping cutoff. Ties are null events under a continuous
/// valuation distribution.
struct FirstVisitMasses {
    double buy_now;     // pays visited.first_price
    double buy_return;  // comes back, pays visited.return_price
    double buy_other;   // buys from the rival at its first price
    double no_buy;
};
FirstVisitMasses first_visit_masses(const ValuationDistribution& dist, const PricePolicy& visited,
                                    double other_first_price, double raw_cutoff);

/// Probability that the firm visited second sells (at its first-visit price
/// `own_first_price`), given the first firm's return price and cutoff.
double second_firm_sale_mass(const ValuationDistribution& dist, double own_first_price,
                             double first_return_price, double first_raw_cutoff);

/// Left-hand side of the buyer indifference equation behind the symmetric
/// reservation value: \int_0^V max(x - first, v - ret, 0) dF(x), in closed
/// form up to expect_excess evaluations.
double reservation_equation_lhs(const ValuationDistribution& dist, const PricePolicy& policy,
                                double v);

} // namespace searchgame::engine
