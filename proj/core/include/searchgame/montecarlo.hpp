#pragma once

#include "searchgame/prices.hpp"

#include <array>
#include <cstdint>

namespace searchgame {

/// Seeded simulation summary. Outcome counts partition the draws exactly;
/// standard errors are sample standard deviation over sqrt(n). The
/// order-conditional streams pool both firms: `order_first` is the profit
/// collected by whichever firm was visited first on each participating draw.
struct SimulationResult {
    std::uint64_t n = 0;
    std::uint64_t seed = 0;

    std::array<double, 2> profit_mean{};
    std::array<double, 2> profit_se{};

    double order_first_mean = 0.0; // per participating draw, firm seen first
    double order_first_se = 0.0;
    double order_second_mean = 0.0;
    double order_second_se = 0.0;
    std::uint64_t participating = 0;

    std::array<std::uint64_t, 2> first_visits{};
    std::uint64_t buy_first_visit = 0;
    std::uint64_t buy_on_return = 0;
    std::uint64_t buy_from_second = 0;
    std::uint64_t no_purchase = 0;

    double share_buy_first_visit() const { return double(buy_first_visit) / double(n); }
    double share_buy_on_return() const { return double(buy_on_return) / double(n); }
    double share_buy_from_second() const { return double(buy_from_second) / double(n); }
    double share_no_purchase() const { return double(no_purchase) / double(n); }
};

/// Simulates n buyer draws (valuations, and a location when travel costs are
/// positive) under the exact optimal-search decision rules: same cutoffs,
/// same participation rule, same tie-breaks as the analytic machinery, with
/// exact first-visit indifference resolved by draw parity. Reproducible for
/// a given (inputs, seed) and independent of the worker count: draws are
/// carved into fixed shards with derived RNG streams, merged in shard order.
SimulationResult simulate(const PricePolicy& policy1, const PricePolicy& policy2,
                          const MarketConfig& config, std::uint64_t n, std::uint64_t seed,
                          unsigned workers = 0);

} // namespace searchgame
