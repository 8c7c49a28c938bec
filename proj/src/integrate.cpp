#include "chemobound/integrate.hpp"

#include <cmath>

namespace chemobound {

namespace {

struct Worker {
    const std::function<double(double)>& f;
    double abs_tol;
    double err = 0.0;

    double simpson(double a, double fa, double fm, double b, double fb) const {
        return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    }

    double run(double a, double fa, double m, double fm, double b, double fb, double whole,
               double tol, int depth) {
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        const double flm = f(lm);
        const double frm = f(rm);
        const double left = simpson(a, fa, flm, m, fm);
        const double right = simpson(m, fm, frm, b, fb);
        const double delta = left + right - whole;
        if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
            err += std::abs(delta) / 15.0;
            return left + right + delta / 15.0;
        }
        return run(a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1) +
               run(m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1);
    }
};

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double rel_tol, int max_depth) {
    if (a == b) return {0.0, 0.0};
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    // coarse magnitude estimate to anchor the absolute tolerance
    double coarse = std::abs((b - a) / 6.0 * (fa + 4.0 * fm + fb));
    if (!(coarse > 0.0)) coarse = 1.0;
    Worker w{f, rel_tol * coarse};
    const double whole = w.simpson(a, fa, fm, b, fb);
    const double v = w.run(a, fa, m, fm, b, fb, whole, rel_tol * coarse, max_depth);
    return {v, w.err};
}

}  // namespace chemobound
