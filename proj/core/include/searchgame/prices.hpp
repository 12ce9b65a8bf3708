#pragma once

#include "searchgame/valuation.hpp"

#include <stdexcept>

namespace searchgame {

/// A committed price pair: what a buyer pays on her first visit and what she
/// pays if she comes back later. Construction enforces first <= return; a
/// pair with first > return is pointless since the buyer could always refuse
/// and re-enter at the lower price.
struct PricePolicy {
    double first_price;
    double return_price;

    PricePolicy(double first, double ret) : first_price(first), return_price(ret) {
        if (!(first >= 0.0))
            throw std::invalid_argument("PricePolicy: first price must be nonnegative");
        if (!(ret >= first))
            throw std::invalid_argument("PricePolicy: return price must be >= first price");
    }

    static PricePolicy uniform(double p) { return PricePolicy(p, p); }

    bool is_uniform() const { return first_price == return_price; }

    friend bool operator==(const PricePolicy& a, const PricePolicy& b) {
        return a.first_price == b.first_price && a.return_price == b.return_price;
    }
};

/// Valuation distribution plus the Hotelling travel-cost parameter c.
/// c == 0 is the frictionless model; c > 0 puts the buyer at a random
/// location x with visit costs c*x (firm 1) and c*(1-x) (firm 2).
struct MarketConfig {
    ValuationDistribution dist;
    double cost;

    MarketConfig(ValuationDistribution d, double c) : dist(std::move(d)), cost(c) {
        if (!(c >= 0.0))
            throw std::invalid_argument("MarketConfig: cost must be nonnegative");
    }

    static MarketConfig frictionless() {
        return MarketConfig(ValuationDistribution::uniform01(), 0.0);
    }
    static MarketConfig uniform_with_cost(double c) {
        return MarketConfig(ValuationDistribution::uniform01(), c);
    }
};

} // namespace searchgame
