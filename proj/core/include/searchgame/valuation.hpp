#pragma once

#include <functional>

namespace searchgame {

/// Buyer valuation distribution F on [0, support_max]. The uniform case is
/// exact (closed forms everywhere); custom distributions are supplied as a
/// CDF callable, with the density taken by central differences when no
/// density callable is given.
class ValuationDistribution {
public:
    enum class Kind { Uniform01, Custom };

    static ValuationDistribution uniform01();
    static ValuationDistribution custom(std::function<double(double)> cdf,
                                        double support_max = 1.0,
                                        std::function<double(double)> density = nullptr);

    Kind kind() const { return kind_; }
    bool is_uniform() const { return kind_ == Kind::Uniform01; }
    double support_max() const { return support_max_; }

    /// F(x), clamped to 0 below the support and 1 above it.
    double cdf(double x) const;
    /// f(x); central difference at step 1e-6 for custom CDFs without a density.
    double density(double x) const;

private:
    ValuationDistribution(Kind kind, double support_max,
                          std::function<double(double)> cdf,
                          std::function<double(double)> density);

    Kind kind_;
    double support_max_;
    std::function<double(double)> cdf_;
    std::function<double(double)> density_;
};

/// E[(V - threshold)^+] = \int_t^V (x - t) dF(x). Computed as
/// \int_t^V (1 - F(x)) dx, which needs no density. Zero at or above the
/// support maximum; threshold must be nonnegative.
double expect_excess(const ValuationDistribution& dist, double threshold);

/// Inverse of expect_excess on [floor_at, support_max]: the threshold z with
/// expect_excess(z) == target. Requires 0 <= target <= expect_excess(floor_at).
double expect_excess_inverse(const ValuationDistribution& dist, double target,
                             double floor_at = 0.0);

/// \int_lo^hi integrand(x) dF(x) by adaptive Simpson on integrand * density.
/// Bounds must satisfy 0 <= lo <= hi <= support_max.
double integrate(const ValuationDistribution& dist,
                 const std::function<double(double)>& integrand,
                 double lo, double hi, double tol = 1e-10);

} // namespace searchgame
