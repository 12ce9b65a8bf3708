#include "searchgame/equilibrium.hpp"

#include "searchgame/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>
#include <stdexcept>

namespace searchgame {

double solve_single_price_foc(double c, FocVariant variant) {
    if (!(c >= 0.0))
        throw std::invalid_argument("solve_single_price_foc: cost must be nonnegative");
    const double k = variant == FocVariant::HalfSqrtC ? 0.5 * std::sqrt(c)
                                                      : std::sqrt(0.5 * c);
    const double b = 1.0 + k;
    return std::sqrt(1.0 + b * b) - b;
}

double verify_foc_stationarity(double p_star, double c) {
    if (!(c >= 0.0))
        throw std::invalid_argument("verify_foc_stationarity: cost must be nonnegative");
    return p_star * (1.0 + 0.5 * std::sqrt(c)) + 0.5 * p_star * p_star - 0.5;
}

GridSpec::GridSpec(double lo_, double hi_, double step_) : lo(lo_), hi(hi_), step(step_) {
    if (!(lo <= hi))
        throw std::invalid_argument("GridSpec: lo > hi");
    if (!(step > 0.0))
        throw std::invalid_argument("GridSpec: step must be positive");
    if (lo < 0.0 || hi > 1.0)
        throw std::invalid_argument("GridSpec: grid must lie within [0, 1]");
}

std::vector<double> GridSpec::values() const {
    std::vector<double> v;
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
    v.reserve(count + 1);
    for (std::size_t i = 0; i <= count; ++i)
        v.push_back(lo + static_cast<double>(i) * step);
    return v;
}

DeviationReport grid_deviation_search(const PricePolicy& candidate, const MarketConfig& config,
                                      const GridSpec& grid, unsigned workers) {
    const auto vals = grid.values();

    std::vector<PricePolicy> policies;
    policies.reserve(vals.size() * (vals.size() + 1) / 2);
    for (std::size_t i = 0; i < vals.size(); ++i) {
        for (std::size_t j = i; j < vals.size(); ++j) {
            if (std::abs(vals[i] - candidate.first_price) <= 1e-12 &&
                std::abs(vals[j] - candidate.return_price) <= 1e-12)
                continue; // the candidate itself is not a deviation
            policies.emplace_back(vals[i], vals[j]);
        }
    }

    const double candidate_payoff = expected_profit(candidate, candidate, config);

    std::vector<double> payoffs(policies.size(), 0.0);
    std::vector<std::exception_ptr> errors(policies.size());
    numeric::parallel_for(policies.size(), workers, [&](std::size_t i) {
        try {
            payoffs[i] = expected_profit(policies[i], candidate, config);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    });
    for (std::size_t i = 0; i < errors.size(); ++i) {
        if (errors[i]) {
            std::ostringstream msg;
            msg << "grid_deviation_search: failure at grid point (" << policies[i].first_price
                << ", " << policies[i].return_price << ")";
            try {
                std::rethrow_exception(errors[i]);
            } catch (const std::exception& e) {
                msg << ": " << e.what();
            } catch (...) {
            }
            throw numeric_error(msg.str());
        }
    }

    DeviationReport report{candidate, candidate_payoff, candidate,
                           candidate_payoff, false, grid, {}};
    report.table.reserve(policies.size());
    bool have_best = false;
    double best = 0.0;
    std::size_t best_idx = 0;
    // enumeration order is lexicographic in (low, high); strict improvement
    // keeps the first maximizer, which implements the tie-break
    for (std::size_t i = 0; i < policies.size(); ++i) {
        report.table.emplace_back(policies[i], payoffs[i]);
        if (!have_best || payoffs[i] > best) {
            have_best = true;
            best = payoffs[i];
            best_idx = i;
        }
    }
    if (have_best) {
        report.best_deviation = policies[best_idx];
        report.best_payoff = best;
        report.profitable = best > candidate_payoff + 1e-12;
    }
    return report;
}

SinglePriceEquilibriumCheck verify_single_price_equilibrium(const GridSpec& grid,
                                                            unsigned workers) {
    const MarketConfig config = MarketConfig::frictionless();
    const double p_star = std::sqrt(2.0) - 1.0;
    const PricePolicy candidate = PricePolicy::uniform(p_star);

    SinglePriceEquilibriumCheck out{grid_deviation_search(candidate, config, grid, workers),
                                    0, -1.0};
    if (out.report.profitable)
        throw numeric_error("verify_single_price_equilibrium: profitable deviation found");

    const auto vals = grid.values();
    std::vector<std::pair<double, double>> pairs;
    for (std::size_t i = 0; i < vals.size(); ++i)
        for (std::size_t j = i + 1; j < vals.size(); ++j)
            pairs.emplace_back(vals[i], vals[j]);

    std::vector<double> cond(pairs.size(), 0.0);
    std::vector<char> applicable(pairs.size(), 0);
    numeric::parallel_for(pairs.size(), workers, [&](std::size_t i) {
        const PricePolicy policy(pairs[i].first, pairs[i].second);
        const auto cut = reservation_cutoff(policy, config.dist);
        if (cut.regime != Regime::ReturnsPossible) return;
        applicable[i] = 1;
        cond[i] = undercutting_condition(policy, config.dist);
    });

    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (!applicable[i]) continue;
        ++out.condition_points;
        if (pairs[i].first > 0.0) {
            out.max_condition = std::max(out.max_condition, cond[i]);
            if (!(cond[i] < 0.0)) {
                std::ostringstream msg;
                msg << "verify_single_price_equilibrium: undercutting condition not negative at ("
                    << pairs[i].first << ", " << pairs[i].second << ")";
                throw numeric_error(msg.str());
            }
        } else if (std::abs(cond[i]) > 1e-10) {
            throw numeric_error(
                "verify_single_price_equilibrium: zero-first-price condition not null");
        }
    }
    return out;
}

} // namespace searchgame
