#include "qshutter/quad.hpp"
#include "qshutter/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qshutter {

namespace {

using cplx = std::complex<double>;

// Gauss-Kronrod 7-15 nodes and weights (positive half)
constexpr double xgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
constexpr double wgk[8] = {
    0.0229353220105292, 0.0630920926299785, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278};
constexpr double wg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694};

struct panel {
    double a, b;
    cplx value;
    double err;
};

panel gk15(const integrand& f, double a, double b)
{
    double mid = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    cplx fc = f(mid);
    cplx kron = wgk[7] * fc;
    cplx gauss = wg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        double dx = half * xgk[i];
        cplx lo = f(mid - dx);
        cplx hi = f(mid + dx);
        kron += wgk[i] * (lo + hi);
        if (i % 2 == 1)
            gauss += wg[i / 2] * (lo + hi);
    }
    kron *= half;
    gauss *= half;
    return {a, b, kron, std::abs(kron - gauss)};
}

// non-throwing adaptive core; ok=false when the panel budget ran out first
struct adaptive_out {
    cplx value;
    double err;
    int panels;
    bool ok;
};

adaptive_out adaptive_core(const integrand& f, double a, double b, double abs_tol,
                           double rel_tol, int max_panels)
{
    std::vector<panel> panels;
    panels.reserve(64);
    panels.push_back(gk15(f, a, b));
    while (true) {
        cplx total = 0.0;
        double err = 0.0;
        for (const panel& p : panels) {
            total += p.value;
            err += p.err;
        }
        double tol = std::max(abs_tol, rel_tol * std::abs(total));
        if (err <= tol || int(panels.size()) >= max_panels) {
            // fixed summation order for determinism no matter how we got here
            std::sort(panels.begin(), panels.end(),
                      [](const panel& u, const panel& v) { return u.a < v.a; });
            cplx v = 0.0;
            double e = 0.0;
            for (const panel& p : panels) {
                v += p.value;
                e += p.err;
            }
            return {v, e, int(panels.size()), err <= tol};
        }
        std::size_t worst = 0;
        for (std::size_t i = 1; i < panels.size(); ++i)
            if (panels[i].err > panels[worst].err)
                worst = i;
        panel w = panels[worst];
        double mid = 0.5 * (w.a + w.b);
        panels[worst] = gk15(f, w.a, mid);
        panels.push_back(gk15(f, mid, w.b));
    }
}

} // namespace

osc_result integrate_adaptive(const integrand& f, double a, double b, const quad_config& cfg)
{
    if (!(a < b))
        throw domain_error("integrate_adaptive: interval is empty or reversed");
    adaptive_out out = adaptive_core(f, a, b, cfg.abs_tol, cfg.rel_tol, cfg.max_segments);
    if (!out.ok)
        throw quadrature_error("integrate_adaptive: panel budget exhausted", out.value, out.err);
    return {out.value, out.err, out.panels, true};
}

quadratic_phase_zeros::quadratic_phase_zeros(double c, double d, double start)
    : c_(c), d_(d), start_(start), stationary_(-std::numeric_limits<double>::infinity())
{
    if (c_ != 0.0) {
        double ys = -d_ / (2.0 * c_);
        if (ys > start_ + 1e-12)
            stationary_ = ys;
    }
    bounds_.push_back(start_);
}

double quadratic_phase_zeros::operator()(int n) const
{
    while (int(bounds_.size()) <= n)
        extend();
    return bounds_[std::size_t(n)];
}

void quadratic_phase_zeros::extend() const
{
    double y = bounds_.back();
    double best = std::numeric_limits<double>::infinity();
    for (double target : {phi(y) + M_PI, phi(y) - M_PI}) {
        if (c_ == 0.0) {
            if (d_ != 0.0) {
                double r = target / d_;
                if (r > y + 1e-12 && r < best)
                    best = r;
            }
            continue;
        }
        double disc = d_ * d_ + 4.0 * c_ * target;
        if (disc >= 0.0) {
            double sq = std::sqrt(disc);
            for (double r : {(-d_ + sq) / (2.0 * c_), (-d_ - sq) / (2.0 * c_)}) {
                if (r > y + 1e-12 && r < best)
                    best = r;
            }
        }
    }
    if (stationary_ > y + 1e-12)
        best = std::min(best, stationary_); // split the monotone pieces of phi
    if (!std::isfinite(best))
        best = y + 1.0; // degenerate phase (c = d = 0): fixed stride
    bounds_.push_back(best);
}

namespace {

// iterated averaging (Euler transform) of the tail of the partial-sum sequence
std::pair<cplx, double> euler_tail(const std::vector<cplx>& partials, int depth, int window)
{
    int n = int(partials.size());
    int lo = std::max(0, n - window);
    std::vector<cplx> s(partials.begin() + lo, partials.end());
    for (int d = 0; d < depth && s.size() >= 2; ++d) {
        for (std::size_t i = 0; i + 1 < s.size(); ++i)
            s[i] = 0.5 * (s[i] + s[i + 1]);
        s.pop_back();
    }
    double inc = s.size() >= 2 ? std::abs(s.back() - s[s.size() - 2])
                               : std::numeric_limits<double>::infinity();
    return {s.back(), inc};
}

} // namespace

osc_result integrate_oscillatory_halfline(const integrand& f, const zero_locator& zeros,
                                          const quad_config& cfg)
{
    const int window = 60;
    std::vector<cplx> partials;
    partials.reserve(std::size_t(std::min(cfg.max_segments, 4096)));
    cplx total = 0.0;
    cplx prev_seg = 0.0;
    int nonalt_run = 0;
    bool alternating = true;

    for (int n = 0; n < cfg.max_segments; ++n) {
        double a = zeros(n);
        double b = zeros(n + 1);
        adaptive_out seg = adaptive_core(f, a, b, cfg.abs_tol * 0.1, 1e-14, 40);
        total += seg.value;
        partials.push_back(total);

        if (n > 0) {
            // opposite-pointing consecutive segments are what the averaging needs
            double dot = (seg.value * std::conj(prev_seg)).real();
            if (dot >= 0.0 && std::abs(seg.value) > cfg.abs_tol)
                ++nonalt_run;
            else
                nonalt_run = 0;
            if (nonalt_run >= 6)
                alternating = false;
        }
        prev_seg = seg.value;

        if (!alternating) {
            // plain truncation: ride the decay until segments stop mattering
            double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
            if (std::abs(seg.value) < tol)
                return {total, std::abs(seg.value), n + 1, false};
            continue;
        }

        if (int(partials.size()) >= 16 && (n & 3) == 3) {
            auto [acc, inc] = euler_tail(partials, cfg.acceleration_depth, window);
            double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(acc));
            if (inc < tol)
                return {acc, inc, n + 1, true};
        }
    }

    if (!alternating)
        throw quadrature_error("integrate_oscillatory_halfline: segment budget exhausted "
                               "on a non-alternating tail",
                               total, std::abs(prev_seg));
    auto [acc, inc] = euler_tail(partials, cfg.acceleration_depth, window);
    double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(acc));
    if (inc > tol)
        throw quadrature_error("integrate_oscillatory_halfline: segment budget exhausted",
                               acc, inc);
    return {acc, inc, cfg.max_segments, true};
}

std::complex<double> richardson_extrapolate(const std::vector<std::pair<double, cplx>>& samples)
{
    std::size_t n = samples.size();
    if (n < 2)
        throw domain_error("richardson_extrapolate: need at least two (eps, value) samples");
    std::vector<double> x(n);
    std::vector<cplx> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = samples[i].first;
        y[i] = samples[i].second;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (x[i] == x[j])
                throw domain_error("richardson_extrapolate: repeated eps node");
    for (std::size_t m = 1; m < n; ++m)
        for (std::size_t i = 0; i + m < n; ++i)
            y[i] = y[i] + (y[i] - y[i + 1]) * (x[i] / (x[i + m] - x[i]));
    return y[0];
}

} // namespace qshutter
