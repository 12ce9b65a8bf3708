#include "searchgame/montecarlo.hpp"

#include "searchgame/engine.hpp"
#include "searchgame/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace searchgame {

namespace {

using numeric::mix64;
using numeric::SplitMix64;

constexpr std::uint64_t kShardSize = 1ull << 16;

struct ShardTotals {
    std::array<double, 2> profit_sum{};
    std::array<double, 2> profit_sumsq{};
    double first_sum = 0.0, first_sumsq = 0.0;
    double second_sum = 0.0, second_sumsq = 0.0;
    std::uint64_t participating = 0;
    std::array<std::uint64_t, 2> first_visits{};
    std::uint64_t buy_first_visit = 0, buy_on_return = 0, buy_from_second = 0, no_purchase = 0;
};

struct Decision {
    double u1, u2;            // commitment value of each first-visit choice
    double cutoff1, cutoff2;  // stopping cutoff given that choice
};

} // namespace

SimulationResult simulate(const PricePolicy& policy1, const PricePolicy& policy2,
                          const MarketConfig& config, std::uint64_t n, std::uint64_t seed,
                          unsigned workers) {
    if (n < 1)
        throw std::invalid_argument("simulate: need at least one draw");
    const auto& dist = config.dist;
    const double c = config.cost;
    const PricePolicy pol[2] = {policy1, policy2};

    auto decide = [&](double x) {
        Decision d{};
        d.u1 = engine::value_visit_first(dist, policy1, policy2.first_price, c * x,
                                         c * (1.0 - x));
        d.u2 = engine::value_visit_first(dist, policy2, policy1.first_price, c * (1.0 - x),
                                         c * x);
        d.cutoff1 = engine::stopping_cutoff(dist, policy1, policy2.first_price,
                                            c * (1.0 - x)).value;
        d.cutoff2 = engine::stopping_cutoff(dist, policy2, policy1.first_price, c * x).value;
        return d;
    };
    // frictionless decisions do not depend on the location
    const Decision fixed = c == 0.0 ? decide(0.5) : Decision{};

    const std::uint64_t nshards = (n + kShardSize - 1) / kShardSize;
    std::vector<ShardTotals> shards(nshards);

    numeric::parallel_for(nshards, workers, [&](std::size_t s) {
        ShardTotals t{};
        SplitMix64 rng{mix64(seed + 0x9E3779B97F4A7C15ull * (std::uint64_t(s) + 1))};
        const std::uint64_t begin = std::uint64_t(s) * kShardSize;
        const std::uint64_t end = std::min(n, begin + kShardSize);
        for (std::uint64_t i = begin; i < end; ++i) {
            const double v1 = rng.next_unit();
            const double v2 = rng.next_unit();
            const Decision d = c == 0.0 ? fixed : decide(rng.next_unit());

            if (std::max(d.u1, d.u2) < 0.0) {
                ++t.no_purchase;
                continue;
            }
            int first;
            if (d.u1 > d.u2) first = 0;
            else if (d.u2 > d.u1) first = 1;
            else first = int(i & 1); // exact indifference alternates by draw parity
            const int other = 1 - first;
            const double vf = first == 0 ? v1 : v2;
            const double vs = first == 0 ? v2 : v1;
            const double cutoff = first == 0 ? d.cutoff1 : d.cutoff2;

            ++t.participating;
            ++t.first_visits[std::size_t(first)];
            double gain_first = 0.0;
            double gain_second = 0.0;
            if (vf >= cutoff) {
                gain_first = pol[first].first_price;
                ++t.buy_first_visit;
            } else if (vs - pol[other].first_price >= std::max(vf - pol[first].return_price, 0.0)) {
                gain_second = pol[other].first_price;
                ++t.buy_from_second;
            } else if (vf - pol[first].return_price >= 0.0) {
                gain_first = pol[first].return_price;
                ++t.buy_on_return;
            } else {
                ++t.no_purchase;
            }
            t.profit_sum[std::size_t(first)] += gain_first;
            t.profit_sumsq[std::size_t(first)] += gain_first * gain_first;
            t.profit_sum[std::size_t(other)] += gain_second;
            t.profit_sumsq[std::size_t(other)] += gain_second * gain_second;
            t.first_sum += gain_first;
            t.first_sumsq += gain_first * gain_first;
            t.second_sum += gain_second;
            t.second_sumsq += gain_second * gain_second;
        }
        shards[s] = t;
    });

    // merge in shard order so the result is bit-identical for any worker count
    ShardTotals total{};
    for (const auto& t : shards) {
        for (int j = 0; j < 2; ++j) {
            total.profit_sum[j] += t.profit_sum[j];
            total.profit_sumsq[j] += t.profit_sumsq[j];
            total.first_visits[j] += t.first_visits[j];
        }
        total.first_sum += t.first_sum;
        total.first_sumsq += t.first_sumsq;
        total.second_sum += t.second_sum;
        total.second_sumsq += t.second_sumsq;
        total.participating += t.participating;
        total.buy_first_visit += t.buy_first_visit;
        total.buy_on_return += t.buy_on_return;
        total.buy_from_second += t.buy_from_second;
        total.no_purchase += t.no_purchase;
    }

    auto mean_se = [](double sum, double sumsq, std::uint64_t count) {
        if (count == 0) return std::pair<double, double>{0.0, 0.0};
        const double mean = sum / double(count);
        if (count == 1) return std::pair<double, double>{mean, 0.0};
        const double var = std::max(0.0, (sumsq - double(count) * mean * mean) / double(count - 1));
        return std::pair<double, double>{mean, std::sqrt(var / double(count))};
    };

    SimulationResult r{};
    r.n = n;
    r.seed = seed;
    for (int j = 0; j < 2; ++j) {
        auto [m, se] = mean_se(total.profit_sum[j], total.profit_sumsq[j], n);
        r.profit_mean[j] = m;
        r.profit_se[j] = se;
        r.first_visits[j] = total.first_visits[j];
    }
    std::tie(r.order_first_mean, r.order_first_se) =
        mean_se(total.first_sum, total.first_sumsq, total.participating);
    std::tie(r.order_second_mean, r.order_second_se) =
        mean_se(total.second_sum, total.second_sumsq, total.participating);
    r.participating = total.participating;
    r.buy_first_visit = total.buy_first_visit;
    r.buy_on_return = total.buy_on_return;
    r.buy_from_second = total.buy_from_second;
    r.no_purchase = total.no_purchase;
    return r;
}

} // namespace searchgame
