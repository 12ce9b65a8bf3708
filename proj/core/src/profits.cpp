#include "searchgame/profits.hpp"

#include "searchgame/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace searchgame {

double single_price_profit(double p, const ValuationDistribution& dist) {
    if (p < 0.0)
        throw std::invalid_argument("single_price_profit: negative price");
    const double F = dist.cdf(p);
    return p * (1.0 - F * F) / 2.0;
}

ProfitBreakdown visit_order_profits(const PricePolicy& policy, const PricePolicy& opp,
                                    const ValuationDistribution& dist) {
    const auto stop_self = engine::stopping_cutoff(dist, policy, opp.first_price, 0.0);
    const auto masses = engine::first_visit_masses(dist, policy, opp.first_price, stop_self.value);
    const double profit_first =
        policy.first_price * masses.buy_now + policy.return_price * masses.buy_return;

    const auto stop_opp = engine::stopping_cutoff(dist, opp, policy.first_price, 0.0);
    const double demand_second =
        engine::second_firm_sale_mass(dist, policy.first_price, opp.return_price, stop_opp.value);
    const double profit_second = policy.first_price * demand_second;

    double weight_first = 0.5;
    switch (first_visit_choice(policy, opp, dist)) {
        case FirstVisit::Firm1: weight_first = 1.0; break;
        case FirstVisit::Firm2: weight_first = 0.0; break;
        case FirstVisit::Indifferent: weight_first = 0.5; break;
    }

    ProfitBreakdown out{};
    out.profit_first = profit_first;
    out.profit_second = profit_second;
    out.demand_first = masses.buy_now + masses.buy_return;
    out.demand_second = demand_second;
    out.weight_first = weight_first;
    out.total = weight_first * profit_first + (1.0 - weight_first) * profit_second;
    return out;
}

double undercutting_condition(const PricePolicy& policy, const ValuationDistribution& dist) {
    const SearchCutoffs cut = reservation_cutoff(policy, dist);
    if (cut.regime != Regime::ReturnsPossible)
        throw std::invalid_argument(
            "undercutting_condition: reservation value at or below the return price");
    const double pl = policy.first_price;
    const double ph = policy.return_price;
    const double vs = cut.v_star;
    const double V = dist.support_max();
    const double Fpl = dist.cdf(pl);

    const double lhs_low = ph <= pl ? 0.0
        : integrate(dist, [&](double x) { return dist.cdf(x) - Fpl; }, pl, ph, 1e-12);
    const double lhs_high = vs <= ph ? 0.0
        : integrate(dist, [&](double x) { return dist.cdf(x) - dist.cdf(x - ph + pl); },
                    ph, vs, 1e-12);
    const double rhs = vs >= V ? 0.0
        : integrate(dist, [&](double x) { return 1.0 - dist.cdf(x); }, vs, V, 1e-12);
    return lhs_low + lhs_high - rhs;
}

NoReturnBound no_return_profit_bound(const PricePolicy& policy, const ValuationDistribution& dist) {
    const SearchCutoffs cut = reservation_cutoff(policy, dist);
    if (cut.regime != Regime::NoReturn)
        throw std::invalid_argument("no_return_profit_bound: requires the no-return regime");
    const double bound = single_price_profit(policy.first_price, dist);
    const double pre = visit_order_profits(policy, policy, dist).total;
    if (!(pre < bound))
        throw numeric_error("no_return_profit_bound: bound is not strict");
    return {bound, pre};
}

BonusDecomposition bonus_decomposition(double p, double delta_p,
                                       const ValuationDistribution& dist) {
    if (!(delta_p > 0.0) || !(delta_p < p))
        throw std::invalid_argument("bonus_decomposition: need 0 < delta_p < p");
    const double V = dist.support_max();

    BonusDecomposition out{};
    out.delta_p = delta_p;
    out.v_indiff = expect_excess_inverse(dist, delta_p);
    out.large_bonus = out.v_indiff < p;

    const double v = out.v_indiff;
    const double m = std::max(v, p);
    if (dist.is_uniform()) {
        out.gain_deter = (p - delta_p) * 0.5 * (1.0 - v) * (1.0 - v);
        out.loss_discount = delta_p * 0.5 * (1.0 - m * m);
    } else {
        out.gain_deter = (p - delta_p) *
            integrate(dist, [&](double t) { return 1.0 - dist.cdf(t); }, v, V, 1e-12);
        out.loss_discount = delta_p *
            integrate(dist, [&](double t) { return dist.cdf(t); }, m, V, 1e-12);
    }
    out.net_first = out.gain_deter - out.loss_discount;

    // visited second only the first-visit price matters; the rival posts (p, p)
    auto second_profit = [&](double q) {
        const auto stop = engine::stopping_cutoff(dist, PricePolicy::uniform(p), q, 0.0);
        return q * engine::second_firm_sale_mass(dist, q, p, stop.value);
    };
    out.loss_second = second_profit(p) - second_profit(p - delta_p);
    return out;
}

HotellingProfits hotelling_profit_formulas(double p_star, double delta_p, double x,
                                           const MarketConfig& config) {
    const double c = config.cost;
    if (!(c > 0.0))
        throw std::invalid_argument("hotelling_profit_formulas: requires positive travel cost");
    const double q = p_star - delta_p;
    const double common = 0.5 + delta_p - 0.5 * p_star * p_star;
    return {q * (common + c * (1.0 - x)),
            q * (common + 0.5 * delta_p * delta_p - c * x)};
}

double hotelling_total_profit_at(double p_star, double delta_p, double x_star,
                                 const MarketConfig& config) {
    const double c = config.cost;
    return (p_star - delta_p) *
           (0.5 + delta_p - 0.5 * p_star * p_star + c * x_star +
            0.5 * delta_p * delta_p * (1.0 - x_star) - 0.5 * c);
}

double hotelling_total_profit(double p_star, double delta_p, const MarketConfig& config) {
    const double x_star = hotelling_cutoffs(p_star, delta_p, config).x_star;
    return hotelling_total_profit_at(p_star, delta_p, x_star, config);
}

namespace {

// ---------------------------------------------------------------------------
// Location integration for positive travel costs. `self` sits at 0 (trip
// costs c*x), `opp` at 1 (trip costs c*(1-x)). The integrand is piecewise
// analytic in sqrt(2c*x) or sqrt(2c*(1-x)); each region is integrated in the
// matching sqrt variable so the quadrature sees a smooth function.
// ---------------------------------------------------------------------------
class LocationEngine {
public:
    LocationEngine(const PricePolicy& self, const PricePolicy& opp, const MarketConfig& config)
        : self_(self), opp_(opp), dist_(config.dist), c_(config.cost) {}

    double payoff() const {
        const double d0 = delta(0.0);
        const double d1 = delta(1.0);
        double x_switch;
        if (d0 <= 0.0)
            x_switch = 0.0;
        else if (d1 >= 0.0)
            x_switch = 1.0;
        else
            x_switch = numeric::find_root([&](double x) { return delta(x); }, 0.0, 1.0,
                                          {.x_tol = 1e-14});

        // participation: u_self decreases in x, u_opp increases, so each
        // no-visit set is a half interval
        double r1;
        if (u_self(1.0) >= 0.0) r1 = 1.0;
        else if (u_self(0.0) < 0.0) r1 = 0.0;
        else r1 = numeric::find_root([&](double x) { return u_self(x); }, 0.0, 1.0,
                                     {.x_tol = 1e-14});
        double r2;
        if (u_opp(0.0) >= 0.0) r2 = 0.0;
        else if (u_opp(1.0) < 0.0) r2 = 1.0;
        else r2 = numeric::find_root([&](double x) { return u_opp(x); }, 0.0, 1.0,
                                     {.x_tol = 1e-14});

        const double first_end = std::min(x_switch, r1);
        const double second_start = std::max(x_switch, r2);

        double total = 0.0;
        if (first_end > 0.0)
            total += integrate_region(0.0, first_end, /*self_first=*/true);
        if (second_start < 1.0)
            total += integrate_region(second_start, 1.0, /*self_first=*/false);
        return total;
    }

    double profit_when_first(double x) const {
        const auto stop = engine::stopping_cutoff(dist_, self_, opp_.first_price, c_ * (1.0 - x));
        const auto m = engine::first_visit_masses(dist_, self_, opp_.first_price, stop.value);
        return self_.first_price * m.buy_now + self_.return_price * m.buy_return;
    }

    double profit_when_second(double x) const {
        const auto stop = engine::stopping_cutoff(dist_, opp_, self_.first_price, c_ * x);
        return self_.first_price *
               engine::second_firm_sale_mass(dist_, self_.first_price, opp_.return_price,
                                             stop.value);
    }

private:
    double u_self(double x) const {
        return engine::value_visit_first(dist_, self_, opp_.first_price, c_ * x, c_ * (1.0 - x));
    }
    double u_opp(double x) const {
        return engine::value_visit_first(dist_, opp_, self_.first_price, c_ * (1.0 - x), c_ * x);
    }
    double delta(double x) const { return u_self(x) - u_opp(x); }

    // kink locations of the stopping cutoff, expressed as second-visit costs
    std::vector<double> cutoff_breakpoints(const PricePolicy& visited,
                                           double other_first) const {
        const double a = visited.first_price;
        const double A = visited.return_price;
        const double V = dist_.support_max();
        const double ee_b = other_first >= V ? 0.0 : expect_excess(dist_, other_first);
        std::vector<double> ts;
        ts.push_back(ee_b - (A - a));            // regime switch
        const double arg = 1.0 + other_first - A; // cutoff reaches the support top
        if (arg >= 0.0)
            ts.push_back((arg >= V ? 0.0 : expect_excess(dist_, arg)) - (A - a));
        ts.push_back(a + ee_b - V);              // no-return cutoff reaches the top
        ts.push_back(a + ee_b);                  // no-return cutoff reaches zero
        return ts;
    }

    double integrate_region(double lo, double hi, bool self_first) const {
        // breakpoints in x from cutoff kinks of the firm visited first
        std::vector<double> xs{lo, hi};
        const auto ts = self_first ? cutoff_breakpoints(self_, opp_.first_price)
                                   : cutoff_breakpoints(opp_, self_.first_price);
        for (double t : ts) {
            if (t <= 0.0 || t >= c_) continue;
            const double x = self_first ? 1.0 - t / c_ : t / c_;
            if (x > lo && x < hi) xs.push_back(x);
        }
        std::sort(xs.begin(), xs.end());

        double sum = 0.0;
        for (std::size_t i = 0; i + 1 < xs.size(); ++i)
            sum += integrate_segment(xs[i], xs[i + 1], self_first);
        return sum;
    }

    double integrate_segment(double lo, double hi, bool self_first) const {
        if (hi - lo < 1e-15) return 0.0;
        const double tol = 1e-12;
        if (self_first) {
            // u = sqrt(2c(1-x))
            const double ulo = std::sqrt(2.0 * c_ * (1.0 - hi));
            const double uhi = std::sqrt(2.0 * c_ * (1.0 - lo));
            return numeric::adaptive_simpson(
                [&](double u) {
                    const double x = 1.0 - u * u / (2.0 * c_);
                    return profit_when_first(x) * (u / c_);
                },
                ulo, uhi, tol, 50);
        }
        const double ulo = std::sqrt(2.0 * c_ * lo);
        const double uhi = std::sqrt(2.0 * c_ * hi);
        return numeric::adaptive_simpson(
            [&](double u) {
                const double x = u * u / (2.0 * c_);
                return profit_when_second(x) * (u / c_);
            },
            ulo, uhi, tol, 50);
    }

    PricePolicy self_;
    PricePolicy opp_;
    ValuationDistribution dist_;
    double c_;
};

} // namespace

double expected_profit(const PricePolicy& self, const PricePolicy& opp,
                       const MarketConfig& config) {
    if (config.cost == 0.0)
        return visit_order_profits(self, opp, config.dist).total;
    return LocationEngine(self, opp, config).payoff();
}

double deviation_payoff(const PricePolicy& dev, double opp_price, const MarketConfig& config) {
    return expected_profit(dev, PricePolicy::uniform(opp_price), config);
}

} // namespace searchgame
