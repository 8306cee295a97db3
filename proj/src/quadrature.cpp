#include "tauber/quadrature.hpp"

#include <cmath>
#include <cstdint>

#include "tauber/errors.hpp"
#include "tauber/summation.hpp"

namespace tauber {

namespace {

constexpr int kMaxDepth = 48;

struct SimpsonWorker {
    const std::function<double(double)>& f;
    std::int64_t evals_left;

    double eval(double x) {
        if (--evals_left < 0) throw numeric_error("quadrature: evaluation budget exhausted");
        const double y = f(x);
        if (!std::isfinite(y)) throw numeric_error("quadrature: integrand not finite");
        return y;
    }

    double recurse(double a, double b, double fa, double fm, double fb, double whole,
                   double tol, int depth) {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        const double flm = eval(lm);
        const double frm = eval(rm);
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        const double refined = left + right;
        const double err = refined - whole;
        if (std::fabs(err) <= 15.0 * tol || (b - a) < 1e-15 * (std::fabs(a) + 1.0))
            return refined + err / 15.0;
        if (depth <= 0) throw numeric_error("quadrature: did not converge");
        return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
               recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
    }
};

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    if (!(b >= a)) throw numeric_error("quadrature: inverted interval");
    if (a == b) return 0.0;
    SimpsonWorker worker{f, std::int64_t{1} << 26};
    const double fa = worker.eval(a);
    const double m = 0.5 * (a + b);
    const double fm = worker.eval(m);
    const double fb = worker.eval(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return worker.recurse(a, b, fa, fm, fb, whole, tol, kMaxDepth);
}

double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        double max_panel, double tol) {
    if (!(b >= a)) throw numeric_error("quadrature: inverted interval");
    if (a == b) return 0.0;
    if (!(max_panel > 0)) throw numeric_error("quadrature: panel width must be positive");
    const auto panels = static_cast<std::uint64_t>(std::ceil((b - a) / max_panel));
    if (panels > 2'000'000) throw numeric_error("quadrature: too many panels");
    const double per_panel_tol = tol / static_cast<double>(panels);
    NeumaierSum acc;
    for (std::uint64_t i = 0; i < panels; ++i) {
        const double lo = a + (b - a) * static_cast<double>(i) / static_cast<double>(panels);
        const double hi =
            i + 1 == panels
                ? b
                : a + (b - a) * static_cast<double>(i + 1) / static_cast<double>(panels);
        acc.add(integrate(f, lo, hi, per_panel_tol));
    }
    return acc.value();
}

}  // namespace tauber
