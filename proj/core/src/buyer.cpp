#include "searchgame/buyer.hpp"

#include "searchgame/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace searchgame {

namespace {

SearchCutoffs reservation_cutoffs_impl(const PricePolicy& policy,
                                       const ValuationDistribution& dist) {
    const auto stop = engine::stopping_cutoff(dist, policy, policy.first_price, 0.0);
    const double v = std::min(stop.value, dist.support_max());
    const Regime regime = (v > policy.return_price + 1e-12) ? Regime::ReturnsPossible
                                                            : Regime::NoReturn;
    return {v, regime, true};
}

} // namespace

SearchCutoffs reservation_cutoff(const PricePolicy& policy, const ValuationDistribution& dist) {
    SearchCutoffs cut = reservation_cutoffs_impl(policy, dist);
    if (!(cut.v_star >= policy.first_price - 1e-9) || !(cut.v_star <= dist.support_max() + 1e-9))
        throw numeric_error("reservation_cutoff: no root in [first_price, support_max]");
    return cut;
}

double solve_reservation_equation(const PricePolicy& policy, const ValuationDistribution& dist) {
    const double V = dist.support_max();
    const double a = policy.first_price;
    auto g = [&](double v) {
        return engine::reservation_equation_lhs(dist, policy, v) - (v - a);
    };
    if (a >= V) return V;
    return numeric::find_root(g, a, V, {.x_tol = 1e-14, .f_tol = 0.0, .max_iter = 300});
}

double buyer_value_visit_first(const PricePolicy& visited, const PricePolicy& other,
                               const ValuationDistribution& dist) {
    return engine::value_visit_first(dist, visited, other.first_price, 0.0, 0.0);
}

FirstVisit first_visit_choice(const PricePolicy& policy1, const PricePolicy& policy2,
                              const ValuationDistribution& dist) {
    const double v1 = buyer_value_visit_first(policy1, policy2, dist);
    const double v2 = buyer_value_visit_first(policy2, policy1, dist);
    if (std::abs(v1 - v2) < 1e-12) return FirstVisit::Indifferent;
    return v1 > v2 ? FirstVisit::Firm1 : FirstVisit::Firm2;
}

HotellingCutoffs hotelling_cutoffs(double p_star, double delta_p, const MarketConfig& config) {
    // the anchor price cancels out of both cutoffs and the indifference
    // condition; only the gap and the cost matter
    (void)p_star;
    const double c = config.cost;
    if (!(c > 0.0))
        throw std::invalid_argument("hotelling_cutoffs: requires a positive travel cost");

    auto v1 = [=](double x) {
        return std::clamp(1.0 - delta_p - std::sqrt(2.0 * c * (1.0 - x)), 0.0, 1.0);
    };
    auto v2 = [=](double x) {
        return std::clamp(1.0 + delta_p - std::sqrt(2.0 * c * x), 0.0, 1.0);
    };

    // indifference between first visits:
    //   c(1-x) dp + (2/3) c(1-x) sqrt(2c(1-x)) = -c x dp + (2/3) c x sqrt(2cx) + dp^3/6
    const double coef = std::sqrt(2.0 * c) * (2.0 * c) / 3.0; // (1/3)(2c)^{3/2}
    const double constant = c * delta_p - delta_p * delta_p * delta_p / 6.0;
    auto h = [&](double x) {
        return constant + coef * (std::pow(1.0 - x, 1.5) - std::pow(x, 1.5));
    };
    auto dh = [&](double x) {
        return -1.5 * coef * (std::sqrt(1.0 - x) + std::sqrt(x));
    };

    HotellingCutoffs out{v1, v2, 0.5, false};
    const double h0 = h(0.0);
    const double h1 = h(1.0);
    if (h0 <= 0.0) {
        out.x_star = 0.0;
        out.corner = h0 < 0.0;
    } else if (h1 >= 0.0) {
        out.x_star = 1.0;
        out.corner = h1 > 0.0;
    } else {
        out.x_star = numeric::find_root_newton(h, dh, 0.0, 1.0, {.x_tol = 1e-15});
    }
    return out;
}

double sequential_value_at_location(double x, const PricePolicy& first, const PricePolicy& second,
                                    const MarketConfig& config) {
    if (x < 0.0 || x > 1.0)
        throw std::invalid_argument("sequential_value_at_location: x outside [0, 1]");
    const double c = config.cost;
    const double raw = engine::value_visit_first(config.dist, first, second.first_price,
                                                 c * x, c * (1.0 - x));
    return std::max(raw, 0.0);
}

} // namespace searchgame
