#include "searchgame/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>
#include <vector>

namespace searchgame::numeric {

namespace {

double simpson(double fa, double fm, double fb, double lo, double hi) {
    return (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
}

double simpson_rec(const std::function<double(double)>& f, double lo, double hi,
                   double fa, double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (lo + hi);
    const double lm = 0.5 * (lo + m);
    const double rm = 0.5 * (m + hi);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(fa, flm, fm, lo, m);
    const double right = simpson(fm, frm, fb, m, hi);
    const double err = left + right - whole;
    if (std::abs(err) <= 15.0 * tol)
        return left + right + err / 15.0;
    if (depth <= 0)
        throw numeric_error("adaptive_simpson: refinement depth exhausted");
    return simpson_rec(f, lo, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
         + simpson_rec(f, m, hi, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double lo, double hi,
                        double tol, int max_depth) {
    if (!(lo <= hi))
        throw std::invalid_argument("adaptive_simpson: lo > hi");
    if (lo == hi)
        return 0.0;
    const double fa = f(lo);
    const double fb = f(hi);
    const double fm = f(0.5 * (lo + hi));
    const double whole = simpson(fa, fm, fb, lo, hi);
    return simpson_rec(f, lo, hi, fa, fm, fb, whole, tol, max_depth);
}

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 const RootOptions& opts) {
    double fl = f(lo);
    double fh = f(hi);
    if (fl == 0.0) return lo;
    if (fh == 0.0) return hi;
    if ((fl > 0.0) == (fh > 0.0))
        throw numeric_error("find_root: endpoints do not bracket a sign change");
    for (int it = 0; it < opts.max_iter && (hi - lo) > opts.x_tol; ++it) {
        const double m = 0.5 * (lo + hi);
        if (m <= lo || m >= hi) break; // bracket at floating point resolution
        const double fm = f(m);
        if (fm == 0.0 || (opts.f_tol > 0.0 && std::abs(fm) <= opts.f_tol)) return m;
        if ((fm > 0.0) == (fl > 0.0)) {
            lo = m;
            fl = fm;
        } else {
            hi = m;
            fh = fm;
        }
    }
    // secant polish within the final bracket
    if (fh != fl) {
        const double s = lo - fl * (hi - lo) / (fh - fl);
        if (s > lo && s < hi) return s;
    }
    return 0.5 * (lo + hi);
}

double find_root_newton(const std::function<double(double)>& f,
                        const std::function<double(double)>& df, double lo, double hi,
                        const RootOptions& opts) {
    // coarse bisection to get a tight, safe starting point
    RootOptions coarse = opts;
    coarse.x_tol = std::max(opts.x_tol, 1e-6 * (hi - lo));
    double x = find_root(f, lo, hi, coarse);
    for (int it = 0; it < 8; ++it) {
        const double fx = f(x);
        const double dfx = df(x);
        if (dfx == 0.0) break;
        const double step = fx / dfx;
        const double next = x - step;
        if (!(next > lo && next < hi)) break;
        x = next;
        if (std::abs(step) <= opts.x_tol) break;
    }
    return x;
}

unsigned default_workers() {
    if (const char* env = std::getenv("SEARCHGAME_WORKERS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1u : hw;
}

void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& body) {
    if (workers == 0) workers = default_workers();
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace searchgame::numeric
