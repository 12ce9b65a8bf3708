#include "searchgame/valuation.hpp"

#include "searchgame/numeric.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace searchgame {

ValuationDistribution::ValuationDistribution(Kind kind, double support_max,
                                             std::function<double(double)> cdf,
                                             std::function<double(double)> density)
    : kind_(kind), support_max_(support_max), cdf_(std::move(cdf)), density_(std::move(density)) {}

ValuationDistribution ValuationDistribution::uniform01() {
    return ValuationDistribution(Kind::Uniform01, 1.0, nullptr, nullptr);
}

ValuationDistribution ValuationDistribution::custom(std::function<double(double)> cdf,
                                                    double support_max,
                                                    std::function<double(double)> density) {
    if (!cdf)
        throw std::invalid_argument("ValuationDistribution::custom: cdf callable required");
    if (!(support_max > 0.0))
        throw std::invalid_argument("ValuationDistribution::custom: support_max must be positive");
    return ValuationDistribution(Kind::Custom, support_max, std::move(cdf), std::move(density));
}

double ValuationDistribution::cdf(double x) const {
    if (x <= 0.0) return 0.0;
    if (x >= support_max_) return 1.0;
    if (kind_ == Kind::Uniform01) return x;
    return cdf_(x);
}

double ValuationDistribution::density(double x) const {
    if (x < 0.0 || x > support_max_) return 0.0;
    if (kind_ == Kind::Uniform01) return 1.0;
    if (density_) return density_(x);
    const double h = 1e-6;
    const double lo = std::max(0.0, x - h);
    const double hi = std::min(support_max_, x + h);
    return (cdf(hi) - cdf(lo)) / (hi - lo);
}

double expect_excess(const ValuationDistribution& dist, double threshold) {
    if (threshold < 0.0)
        throw std::invalid_argument("expect_excess: threshold must be nonnegative");
    const double V = dist.support_max();
    if (threshold >= V) return 0.0;
    if (dist.is_uniform()) {
        const double s = 1.0 - threshold;
        return 0.5 * s * s;
    }
    // integration by parts: \int_t^V (x - t) dF = \int_t^V (1 - F(x)) dx
    return numeric::adaptive_simpson([&](double x) { return 1.0 - dist.cdf(x); },
                                     threshold, V, 1e-12);
}

double expect_excess_inverse(const ValuationDistribution& dist, double target, double floor_at) {
    const double V = dist.support_max();
    if (target < 0.0)
        throw std::invalid_argument("expect_excess_inverse: target must be nonnegative");
    if (target == 0.0) return V;
    if (dist.is_uniform())
        return 1.0 - std::sqrt(2.0 * target);
    const double top = expect_excess(dist, std::max(0.0, floor_at));
    if (target >= top) return std::max(0.0, floor_at);
    // expect_excess is continuous and strictly decreasing on the support
    return numeric::find_root([&](double z) { return expect_excess(dist, z) - target; },
                              std::max(0.0, floor_at), V);
}

double integrate(const ValuationDistribution& dist,
                 const std::function<double(double)>& integrand,
                 double lo, double hi, double tol) {
    if (!(lo <= hi))
        throw std::invalid_argument("integrate: lo > hi");
    if (lo < 0.0 || hi > dist.support_max())
        throw std::invalid_argument("integrate: bounds outside the support");
    return numeric::adaptive_simpson(
        [&](double x) { return integrand(x) * dist.density(x); }, lo, hi, tol);
}

} // namespace searchgame
