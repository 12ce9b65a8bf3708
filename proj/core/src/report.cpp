#include "searchgame/report.hpp"

#include "searchgame/buyer.hpp"
#include "searchgame/equilibrium.hpp"
#include "searchgame/montecarlo.hpp"
#include "searchgame/numeric.hpp"
#include "searchgame/profits.hpp"
#include "searchgame/valuation.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace searchgame {

namespace {

class Checker {
public:
    explicit Checker(int id, std::string name) : id_(id), name_(std::move(name)) {
        detail_ << std::setprecision(11);
    }

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok_ = false;
            detail_ << "[FAIL " << what << "] ";
        }
    }
    void expect_near(double got, double want, double tol, const std::string& what) {
        const double err = std::abs(got - want);
        if (!(err <= tol)) {
            ok_ = false;
            detail_ << "[FAIL " << what << ": got " << got << ", want " << want << " +/- " << tol
                    << "] ";
        }
    }
    std::ostringstream& note() { return detail_; }

    CriterionResult finish() { return {id_, name_, ok_, detail_.str()}; }

private:
    int id_;
    std::string name_;
    bool ok_ = true;
    std::ostringstream detail_;
};

const double kRoot2Price = std::sqrt(2.0) - 1.0;

CriterionResult criterion_foc_zero_cost() {
    Checker c(1, "single-price FOC at zero cost");
    const double p = solve_single_price_foc(0.0);
    c.expect_near(p, kRoot2Price, 1e-12, "p*(0)");
    c.note() << "p*(0) = " << p;
    return c.finish();
}

CriterionResult criterion_foc_small_cost() {
    Checker c(2, "single-price FOC and profit at c = 0.01");
    const double p = solve_single_price_foc(0.01);
    c.expect_near(p, 0.4, 1e-12, "p*(0.01)");
    const auto uniform = ValuationDistribution::uniform01();
    const double profit = single_price_profit(0.4, uniform);
    c.expect_near(profit, 0.168, 1e-12, "single_price_profit(0.4)");
    const MarketConfig cfg = MarketConfig::uniform_with_cost(0.01);
    const double total = hotelling_total_profit(0.4, 0.0, cfg);
    c.expect_near(total, 0.168, 1e-12, "location-integrated total at zero gap");
    c.note() << "p* = " << p << ", profit = " << profit << ", integrated total = " << total;
    return c.finish();
}

CriterionResult criterion_reservation_value() {
    Checker c(3, "reservation value at (0.45, 0.51)");
    const auto cut = reservation_cutoff(PricePolicy(0.45, 0.51),
                                        ValuationDistribution::uniform01());
    c.expect_near(cut.v_star, 0.71359, 1e-5, "v*");
    c.expect(cut.regime == Regime::ReturnsPossible, "returns-possible regime");
    c.note() << "v* = " << cut.v_star;
    return c.finish();
}

CriterionResult criterion_visit_order_profits() {
    Checker c(4, "visit-order profits at (0.45, 0.51)");
    const auto uniform = ValuationDistribution::uniform01();
    const PricePolicy policy(0.45, 0.51);
    const auto br = visit_order_profits(policy, policy, uniform);

    // independent oracle: direct region integration of the uniform model,
    // written from the closed-form antiderivatives
    const double a = 0.45, A = 0.51, d = A - a;
    const double v = 1.0 + d - std::sqrt(2.0 * d);
    const double pf_oracle =
        a * (1.0 - v) + A * ((v * v - A * A) / 2.0 - (A - a) * (v - A));
    const double ps_oracle = a * ((1.0 - a) * v - 0.5 * (v - A) * (v - A));

    c.expect_near(br.profit_second, 0.16729, 1e-5, "profit when visited second");
    c.expect_near(br.profit_first, 0.18627, 2e-4, "profit when visited first");
    c.expect_near(br.profit_first, pf_oracle, 1e-9, "profit_first vs oracle");
    c.expect_near(br.profit_second, ps_oracle, 1e-9, "profit_second vs oracle");
    c.expect_near(pf_oracle, 0.1861778903, 1e-9, "oracle pin");
    c.note() << "profit_first = " << br.profit_first << " (oracle " << pf_oracle
             << "), profit_second = " << br.profit_second;
    return c.finish();
}

CriterionResult criterion_undercutting_condition() {
    Checker c(5, "undercutting condition closed form and sign");
    const auto uniform = ValuationDistribution::uniform01();
    numeric::SplitMix64 rng{numeric::mix64(20240517ull)};
    int checked = 0;
    double worst = 0.0;
    while (checked < 1000) {
        const double pl = 0.01 + 0.94 * rng.next_unit();
        const double span = 0.5 * (1.0 - pl) * (1.0 - pl);
        const double ph = pl + (0.02 + 0.93 * rng.next_unit()) * span;
        const PricePolicy policy(pl, ph);
        if (reservation_cutoff(policy, uniform).regime != Regime::ReturnsPossible) continue;
        const double value = undercutting_condition(policy, uniform);
        const double closed = pl * (pl - ph);
        worst = std::max(worst, std::abs(value - closed));
        if (std::abs(value - closed) > 1e-10) {
            c.expect_near(value, closed, 1e-10, "quadrature vs closed form");
            break;
        }
        if (!(value < 0.0)) {
            c.expect(false, "condition strictly negative for first price > 0");
            break;
        }
        ++checked;
    }
    c.expect(checked == 1000, "1000 returns-possible pairs checked");
    c.note() << checked << " pairs, max |quadrature - closed| = " << worst;
    return c.finish();
}

CriterionResult criterion_grid_search(unsigned workers) {
    Checker c(6, "deviation grid search at c = 0.01");
    const MarketConfig cfg = MarketConfig::uniform_with_cost(0.01);
    const PricePolicy candidate = PricePolicy::uniform(0.4);

    const auto coarse = grid_deviation_search(candidate, cfg, GridSpec(0.0, 1.0, 0.01), workers);
    c.expect_near(coarse.best_deviation.first_price, 0.41, 1e-9, "coarse argmax low");
    c.expect_near(coarse.best_deviation.return_price, 0.41, 1e-9, "coarse argmax high");
    c.expect_near(coarse.best_payoff, 0.1679067794, 1e-6, "coarse best payoff");
    c.expect(!coarse.profitable, "coarse grid not profitable");
    c.expect(coarse.best_payoff < 0.168 + 1e-12, "no grid point exceeds 0.168");

    const auto fine = grid_deviation_search(candidate, cfg, GridSpec(0.35, 0.45, 0.005), workers);
    c.expect_near(fine.best_deviation.first_price, 0.405, 1e-9, "fine argmax low");
    c.expect_near(fine.best_deviation.return_price, 0.405, 1e-9, "fine argmax high");
    c.expect_near(fine.best_payoff, 0.1679769081, 1e-6, "fine best payoff");
    c.expect(!fine.profitable, "fine grid not profitable");

    c.note() << "coarse best (" << coarse.best_deviation.first_price << ", "
             << coarse.best_deviation.return_price << ") -> " << coarse.best_payoff
             << "; fine best (" << fine.best_deviation.first_price << ", "
             << fine.best_deviation.return_price << ") -> " << fine.best_payoff;
    return c.finish();
}

CriterionResult criterion_zero_cost_equilibrium(unsigned workers) {
    Checker c(7, "single-price equilibrium survives two-part deviations at zero cost");
    try {
        const auto check = verify_single_price_equilibrium(GridSpec(0.0, 1.0, 0.01), workers);
        c.expect(!check.report.profitable, "no profitable deviation");
        const double oracle = kRoot2Price * (1.0 - kRoot2Price * kRoot2Price) / 2.0;
        c.expect_near(check.report.candidate_payoff, oracle, 1e-9, "candidate payoff vs oracle");
        c.expect_near(check.report.candidate_payoff, 0.1715729, 5e-8,
                      "candidate payoff, printed target");
        c.note() << "candidate payoff = " << check.report.candidate_payoff << ", best deviation ("
                 << check.report.best_deviation.first_price << ", "
                 << check.report.best_deviation.return_price << ") -> "
                 << check.report.best_payoff << "; condition checked at "
                 << check.condition_points << " discriminating points, max value "
                 << check.max_condition;
    } catch (const std::exception& e) {
        c.expect(false, std::string("verification threw: ") + e.what());
    }
    return c.finish();
}

CriterionResult criterion_return_price_monotonicity() {
    Checker c(8, "buyer value strictly decreasing in the return price");
    const auto uniform = ValuationDistribution::uniform01();
    numeric::SplitMix64 rng{numeric::mix64(7042ull)};
    bool all_ok = true;
    for (int s = 0; s < 100 && all_ok; ++s) {
        const double pl = 0.05 + 0.85 * rng.next_unit();
        const double span = 0.5 * (1.0 - pl) * (1.0 - pl);
        const double lo = pl + 0.02 * span;
        const double hi = pl + 0.90 * span; // interior of the returns-possible range
        const PricePolicy other(pl, pl + 0.5 * span);
        double prev = 0.0;
        for (int k = 0; k < 100; ++k) {
            const double ph = lo + (hi - lo) * double(k) / 99.0;
            const double val = buyer_value_visit_first(PricePolicy(pl, ph), other, uniform);
            if (k > 0 && !(val < prev - 1e-10)) {
                all_ok = false;
                c.note() << "[non-decreasing at pl = " << pl << ", ph = " << ph << "] ";
                break;
            }
            prev = val;
        }
    }
    c.expect(all_ok, "strict decrease on 100 sampled policies");
    return c.finish();
}

CriterionResult criterion_bonus_orders() {
    Checker c(9, "bonus-game first-order gain and lower-order losses");
    const auto uniform = ValuationDistribution::uniform01();
    const double p = kRoot2Price;
    const double dps[3] = {1e-2, 1e-3, 1e-4};
    double gain_ratio[3], disc_ratio[3], second_ratio[3];
    for (int i = 0; i < 3; ++i) {
        const auto b = bonus_decomposition(p, dps[i], uniform);
        gain_ratio[i] = b.gain_deter / dps[i];
        disc_ratio[i] = b.loss_discount / dps[i];
        second_ratio[i] = b.loss_second / dps[i];
    }
    for (int i = 0; i < 3; ++i) {
        const double rel = gain_ratio[i] / gain_ratio[2];
        c.expect(rel >= 0.5 && rel <= 2.0, "gain/dp stable across decades");
    }
    for (int i = 0; i + 1 < 3; ++i) {
        c.expect(disc_ratio[i] >= 5.0 * disc_ratio[i + 1],
                 "loss_discount/dp shrinks >= 5x per decade");
        c.expect(second_ratio[i] >= 5.0 * second_ratio[i + 1],
                 "loss_second/dp shrinks >= 5x per decade");
    }
    c.note() << "gain/dp = {" << gain_ratio[0] << ", " << gain_ratio[1] << ", " << gain_ratio[2]
             << "}, loss_discount/dp = {" << disc_ratio[0] << ", " << disc_ratio[1] << ", "
             << disc_ratio[2] << "} (per-decade shrink " << disc_ratio[0] / disc_ratio[1] << ", "
             << disc_ratio[1] / disc_ratio[2] << "), loss_second/dp = {" << second_ratio[0]
             << ", " << second_ratio[1] << ", " << second_ratio[2] << "}";
    return c.finish();
}

CriterionResult criterion_location_identities() {
    Checker c(10, "location-model identities");
    for (double cost : {0.01, 0.04}) {
        const MarketConfig cfg = MarketConfig::uniform_with_cost(cost);
        const double h = 1e-6;
        const double up = hotelling_cutoffs(0.4, h, cfg).x_star;
        const double dn = hotelling_cutoffs(0.4, -h, cfg).x_star;
        const double slope = (up - dn) / (2.0 * h);
        c.expect_near(slope, 1.0 / (2.0 * std::sqrt(cost)), 1e-4, "dx*/d(dp) at dp = 0");
    }

    numeric::SplitMix64 rng{numeric::mix64(90210ull)};
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double p = 0.2 + 0.4 * rng.next_unit();
        const double dp = -0.05 + 0.1 * rng.next_unit();
        const double cost = 0.005 + 0.035 * rng.next_unit();
        const MarketConfig cfg = MarketConfig::uniform_with_cost(cost);
        const auto cuts = hotelling_cutoffs(p, dp, cfg);
        if (cuts.corner) continue;
        const double X = cuts.x_star;
        // integrate the two displayed linear profiles directly
        const double q = p - dp;
        const double common = 0.5 + dp - 0.5 * p * p;
        const double left = q * (common * X + cost * (X - 0.5 * X * X));
        const double right = q * ((common + 0.5 * dp * dp) * (1.0 - X) -
                                  0.5 * cost * (1.0 - X * X));
        const double total = hotelling_total_profit_at(p, dp, X, cfg);
        worst = std::max(worst, std::abs(left + right - total));
    }
    c.expect(worst <= 1e-12, "piecewise integrals match the closed-form total");

    double worst_foc = 0.0;
    for (double cost : {0.0, 0.005, 0.01, 0.02, 0.04}) {
        const double p = solve_single_price_foc(cost);
        worst_foc = std::max(worst_foc, std::abs(verify_foc_stationarity(p, cost)));
    }
    c.expect(worst_foc <= 1e-12, "stationarity at each solved price");
    c.note() << "max |integral - total| = " << worst << ", max |FOC residual| = " << worst_foc;
    return c.finish();
}

CriterionResult criterion_monte_carlo(unsigned workers) {
    Checker c(11, "Monte Carlo agreement with analytic profits");
    const std::uint64_t n = 1000000;
    const auto uniform = ValuationDistribution::uniform01();

    // same region-integration oracle as criterion 4
    const double a = 0.45, A = 0.51;
    const double v = 1.0 + (A - a) - std::sqrt(2.0 * (A - a));
    const double pf_target = a * (1.0 - v) + A * ((v * v - A * A) / 2.0 - (A - a) * (v - A));
    const double ps_target = a * ((1.0 - a) * v - 0.5 * (v - A) * (v - A));
    struct Setup {
        PricePolicy p1;
        PricePolicy p2;
        double cost;
        bool by_order; // compare the order-conditional streams
        double target_a;
        double target_b;
        const char* what;
    };
    const Setup setups[] = {
        {PricePolicy::uniform(0.4), PricePolicy::uniform(0.4), 0.01, false, 0.168, 0.168,
         "symmetric 0.4 at c = 0.01"},
        {PricePolicy(0.45, 0.51), PricePolicy(0.45, 0.51), 0.0, true, pf_target, ps_target,
         "visit-order profits at (0.45, 0.51)"},
        {PricePolicy::uniform(kRoot2Price), PricePolicy::uniform(kRoot2Price), 0.0, false,
         3.0 - 2.0 * std::sqrt(2.0), 3.0 - 2.0 * std::sqrt(2.0), "frictionless equilibrium"},
    };

    double worst_z = 0.0;
    for (const auto& s : setups) {
        const MarketConfig cfg(uniform, s.cost);
        for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
            const auto r = simulate(s.p1, s.p2, cfg, n, seed, workers);
            const double za = s.by_order
                ? std::abs(r.order_first_mean - s.target_a) / r.order_first_se
                : std::abs(r.profit_mean[0] - s.target_a) / r.profit_se[0];
            const double zb = s.by_order
                ? std::abs(r.order_second_mean - s.target_b) / r.order_second_se
                : std::abs(r.profit_mean[1] - s.target_b) / r.profit_se[1];
            worst_z = std::max({worst_z, za, zb});
            if (za > 3.0 || zb > 3.0) {
                std::ostringstream what;
                what << s.what << " seed " << seed << " (z = " << za << ", " << zb << ")";
                c.expect(false, what.str());
            }
        }
    }
    c.note() << "worst |z| over 3 seeds x 3 setups = " << worst_z;
    return c.finish();
}

} // namespace

std::vector<CriterionResult> run_reproduction_suite(unsigned workers) {
    std::vector<CriterionResult> out;
    out.push_back(criterion_foc_zero_cost());
    out.push_back(criterion_foc_small_cost());
    out.push_back(criterion_reservation_value());
    out.push_back(criterion_visit_order_profits());
    out.push_back(criterion_undercutting_condition());
    out.push_back(criterion_grid_search(workers));
    out.push_back(criterion_zero_cost_equilibrium(workers));
    out.push_back(criterion_return_price_monotonicity());
    out.push_back(criterion_bonus_orders());
    out.push_back(criterion_location_identities());
    out.push_back(criterion_monte_carlo(workers));
    return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

} // namespace searchgame
