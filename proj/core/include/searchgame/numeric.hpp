#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace searchgame {

/// Thrown when an iterative routine fails to converge or loses its bracket.
/// Distinct from std::invalid_argument so callers can map precondition
/// violations and numeric breakdowns to different exit paths.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

namespace numeric {

inline constexpr int kDefaultQuadDepth = 40;

/// splitmix64: counter-based stream, so shard/substream states derive
/// cheaply and reproducibly from (seed, index). Used wherever determinism
/// across platforms and worker counts matters; std::uniform_real_distribution
/// is implementation-defined and deliberately avoided.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    double next_unit() { return double(next() >> 11) * 0x1.0p-53; }
};

inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 33;
    z *= 0xFF51AFD7ED558CCDull;
    z ^= z >> 33;
    z *= 0xC4CEB9FE1A85EC53ull;
    z ^= z >> 33;
    return z;
}

/// Adaptive Simpson quadrature with Richardson extrapolation on accept.
/// `tol` is an absolute tolerance on the whole interval; refinement that
/// exceeds `max_depth` throws numeric_error.
double adaptive_simpson(const std::function<double(double)>& f, double lo, double hi,
                        double tol = 1e-10, int max_depth = kDefaultQuadDepth);

struct RootOptions {
    double x_tol = 1e-13;   // bracket width at which bisection stops
    double f_tol = 0.0;     // early exit on |f| <= f_tol (0 disables)
    int max_iter = 200;
};

/// Bracketed root of a continuous function: bisection, then a short secant
/// polish inside the final bracket. Requires f(lo) and f(hi) of opposite
/// sign (or zero); throws numeric_error otherwise.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 const RootOptions& opts = RootOptions{});

/// Bisection with an analytic derivative: same contract as find_root but
/// finishes with Newton steps, for 1e-14-grade roots of smooth functions.
double find_root_newton(const std::function<double(double)>& f,
                        const std::function<double(double)>& df, double lo, double hi,
                        const RootOptions& opts = RootOptions{});

/// Deterministic parallel map over [0, n): results land at their own index,
/// so the outcome is identical for any worker count. workers == 0 picks
/// hardware concurrency (or the SEARCHGAME_WORKERS env var when set).
void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& body);

/// Worker count from the environment / hardware, used when callers pass 0.
unsigned default_workers();

} // namespace numeric
} // namespace searchgame
