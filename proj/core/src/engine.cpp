#include "searchgame/engine.hpp"

#include "searchgame/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace searchgame::engine {

namespace {

double clamp01(double x, double hi) { return std::clamp(x, 0.0, hi); }

// \int_{lo}^{hi} clamp(m*u + k, 0, 1) du with exact breakpoint handling.
double integral_clamped_affine(double m, double k, double lo, double hi) {
    if (hi <= lo) return 0.0;
    if (m == 0.0) return std::clamp(k, 0.0, 1.0) * (hi - lo);
    // crossing points of m*u + k with 0 and 1
    double u0 = (0.0 - k) / m;
    double u1 = (1.0 - k) / m;
    if (u0 > u1) std::swap(u0, u1);
    const double a = std::clamp(u0, lo, hi);
    const double b = std::clamp(u1, lo, hi);
    auto raw = [&](double l, double r) {
        return 0.5 * m * (r * r - l * l) + k * (r - l);
    };
    auto flat = [&](double u) { return std::clamp(m * u + k, 0.0, 1.0); };
    return flat(lo) * (a - lo) + raw(a, b) + flat(hi) * (hi - b);
}

} // namespace

double option_value(const ValuationDistribution& dist, double w, double other_first_price) {
    const double wp = std::max(w, 0.0);
    const double arg = other_first_price + wp;
    const double excess = arg >= dist.support_max() ? 0.0 : expect_excess(dist, arg);
    return wp + excess;
}

StoppingCutoff stopping_cutoff(const ValuationDistribution& dist, const PricePolicy& visited,
                               double other_first_price, double second_visit_cost) {
    const double a = visited.first_price;
    const double A = visited.return_price;
    const double b = other_first_price;
    const double ee_b = b >= dist.support_max() ? 0.0 : expect_excess(dist, b);
    const double gap = (A - a) + second_visit_cost;
    if (gap >= ee_b) {
        // the return option is never exercised: indifference reduces to
        // v - a = -cost + E[(V - b)^+]
        return {a - second_visit_cost + ee_b, false};
    }
    const double z = expect_excess_inverse(dist, gap, b);
    return {A + (z - b), true};
}

double value_visit_first(const ValuationDistribution& dist, const PricePolicy& visited,
                         double other_first_price, double first_visit_cost,
                         double second_visit_cost) {
    const double a = visited.first_price;
    const double A = visited.return_price;
    const double b = other_first_price;
    const double V = dist.support_max();
    const double t1 = first_visit_cost;
    const double t2 = second_visit_cost;

    const StoppingCutoff stop = stopping_cutoff(dist, visited, b, t2);
    const double vhat = clamp01(stop.value, V);

    if (dist.is_uniform()) {
        const double A0 = std::min(A, vhat);
        const double s = vhat - A0; // length of the region where the return option is live
        const double beta = std::max(1.0 - b, 0.0);
        const double ee_b = 0.5 * beta * beta;
        auto cube = [](double x) { return x * x * x; };
        const double part_w = 0.5 * s * s;
        const double hi_excess = std::max(beta - s, 0.0);
        const double part_ee = A0 * ee_b + (cube(beta) - cube(hi_excess)) / 6.0;
        const double tail = 0.5 * ((1.0 - a) * (1.0 - a) - (vhat - a) * (vhat - a));
        return -t1 - t2 * vhat + part_w + part_ee + tail;
    }

    const double cont = vhat <= 0.0 ? 0.0
        : integrate(dist, [&](double v) { return -t2 + option_value(dist, v - A, b); },
                    0.0, vhat, 1e-11);
    const double tail = vhat >= V ? 0.0
        : integrate(dist, [&](double v) { return v - a; }, vhat, V, 1e-11);
    return -t1 + cont + tail;
}

FirstVisitMasses first_visit_masses(const ValuationDistribution& dist, const PricePolicy& visited,
                                    double other_first_price, double raw_cutoff) {
    const double A = visited.return_price;
    const double b = other_first_price;
    const double V = dist.support_max();
    const double vhat = clamp01(raw_cutoff, V);

    FirstVisitMasses m{};
    m.buy_now = 1.0 - dist.cdf(vhat);

    const double A0 = std::min(A, vhat);
    if (dist.is_uniform()) {
        const double s = vhat - A0;
        const double beta = std::max(1.0 - b, 0.0);
        // returns: v in (A, vhat), rival draw below v - A + b
        m.buy_return = integral_clamped_affine(1.0, b, 0.0, s);
        // rival sale: v below the cutoff with V_other - b >= (v - A)^+
        m.buy_other = A0 * beta + (s <= beta ? beta * s - 0.5 * s * s : 0.5 * beta * beta);
        m.no_buy = A0 * std::min(b, 1.0);
    } else {
        m.buy_return = vhat <= A0 ? 0.0
            : integrate(dist, [&](double v) { return dist.cdf(v - A + b); }, A0, vhat, 1e-11);
        m.buy_other = vhat <= 0.0 ? 0.0
            : integrate(dist, [&](double v) {
                  return 1.0 - dist.cdf(b + std::max(v - A, 0.0));
              }, 0.0, vhat, 1e-11);
        m.no_buy = dist.cdf(std::min(vhat, A)) * dist.cdf(b);
    }
    return m;
}

double second_firm_sale_mass(const ValuationDistribution& dist, double own_first_price,
                             double first_return_price, double first_raw_cutoff) {
    const double a = own_first_price;
    const double Af = first_return_price;
    const double V = dist.support_max();
    const double vhat = clamp01(first_raw_cutoff, V);
    if (vhat <= 0.0) return 0.0;

    if (dist.is_uniform()) {
        const double U0 = std::min(Af, vhat);
        const double s = vhat - U0;
        const double alpha = std::max(1.0 - a, 0.0);
        return U0 * alpha + (s <= alpha ? alpha * s - 0.5 * s * s : 0.5 * alpha * alpha);
    }
    return integrate(dist, [&](double u) {
        return 1.0 - dist.cdf(a + std::max(u - Af, 0.0));
    }, 0.0, vhat, 1e-11);
}

double reservation_equation_lhs(const ValuationDistribution& dist, const PricePolicy& policy,
                                double v) {
    const double V = dist.support_max();
    const double k = std::max(v - policy.return_price, 0.0);
    const double z = policy.first_price + k;
    if (z >= V) return k;
    // \int_0^z k dF + \int_z^V (x - first) dF
    return k * dist.cdf(z) + expect_excess(dist, z) + (z - policy.first_price) * (1.0 - dist.cdf(z));
}

} // namespace searchgame::engine
