#include <rsd/dominance.hpp>

#include <algorithm>
#include <cmath>

namespace rsd {

double r_kernel(int j, double y, double x) {
    if (j < 0) throw config_error("r_kernel: j must be >= 0");
    if (y > x) return 0.0;
    if (j == 0) return 1.0;
    double v = 1.0;
    for (int i = 1; i <= j; ++i) v *= (x - y) / i;
    return v;
}

WeightedEmpirical WeightedEmpirical::from_values(const std::vector<double>& values) {
    WeightedEmpirical d;
    d.points.reserve(values.size());
    for (double v : values) d.points.emplace_back(v, 1.0);
    d.total_weight = static_cast<double>(values.size());
    return d;
}

WeightedEmpirical WeightedEmpirical::from_weighted(const std::vector<double>& values,
                                                   const std::vector<double>& weights) {
    if (values.size() != weights.size())
        throw data_error("weighted empirical: value/weight size mismatch");
    WeightedEmpirical d;
    d.points.reserve(values.size());
    double tw = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (weights[i] < 0.0) throw data_error("weighted empirical: negative weight");
        d.points.emplace_back(values[i], weights[i]);
        tw += weights[i];
    }
    d.total_weight = tw;
    return d;
}

double dominance_fn(const WeightedEmpirical& dist, DominanceOrder s, double x) {
    if (!(dist.total_weight > 0.0))
        throw data_error("dominance_fn: total weight must be positive");
    double acc = 0.0;
    for (const auto& [y, w] : dist.points) acc += w * r_kernel(s.s - 1, y, x);
    return acc / dist.total_weight;
}

CdfHandle CdfHandle::arcsine(double xi, double lo, double hi) {
    special::GeneralizedArcsine g(xi, lo, hi);
    CdfHandle h;
    h.fn_ = [g](double x) { return g.cdf(x); };
    h.lo_ = lo;
    return h;
}

CdfHandle CdfHandle::uniform(double lo, double hi) {
    if (!(lo < hi)) throw config_error("uniform cdf: lo < hi required");
    special::UniformCdf u{lo, hi};
    CdfHandle h;
    h.fn_ = [u](double x) { return u.cdf(x); };
    h.lo_ = lo;
    return h;
}

CdfHandle CdfHandle::step_at(double c) {
    CdfHandle h;
    h.fn_ = [c](double x) { return x >= c ? 1.0 : 0.0; };
    h.lo_ = c;
    h.is_step_ = true;
    h.step_point_ = c;
    return h;
}

CdfHandle CdfHandle::table(std::vector<double> xs, std::vector<double> ps) {
    if (xs.size() != ps.size() || xs.size() < 2)
        throw config_error("table cdf: need matching x/p columns with >= 2 rows");
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (!(xs[i] > xs[i - 1])) throw config_error("table cdf: x column not increasing");
        if (ps[i] < ps[i - 1]) throw config_error("table cdf: p column not monotone");
    }
    if (ps.front() < 0.0 || ps.back() > 1.0)
        throw config_error("table cdf: p values outside [0,1]");
    const double lo = xs.front();
    CdfHandle h;
    h.fn_ = [xs = std::move(xs), ps = std::move(ps)](double x) {
        if (x <= xs.front()) return x < xs.front() ? 0.0 : ps.front();
        if (x >= xs.back()) return ps.back();
        auto it = std::upper_bound(xs.begin(), xs.end(), x);
        const std::size_t i = static_cast<std::size_t>(it - xs.begin());
        const double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
        return ps[i - 1] + t * (ps[i] - ps[i - 1]);
    };
    h.lo_ = lo;
    return h;
}

CdfHandle CdfHandle::from_function(std::function<double(double)> f, double lo) {
    CdfHandle h;
    h.fn_ = std::move(f);
    h.lo_ = lo;
    return h;
}

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double fa, double fm, double fb, double whole, double tol,
                        int depth, bool& converged) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * tol || depth <= 0) {
        if (depth <= 0 && std::fabs(delta) > 15.0 * tol) converged = false;
        return left + right + delta / 15.0;
    }
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, converged) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, converged);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec) {
    if (!(b > a)) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    bool converged = true;
    const double v =
        adaptive_simpson(f, a, b, fa, fm, fb, whole, spec.abs_tol, spec.max_depth, converged);
    if (!converged)
        throw numeric_error("dominance_fn_parametric: quadrature did not reach abs tol " +
                            std::to_string(spec.abs_tol));
    return v;
}

}  // namespace

double dominance_fn_parametric(const CdfHandle& cdf, DominanceOrder s, double x,
                               const QuadratureSpec& spec) {
    if (s.s == 1) return cdf(x);
    if (cdf.is_step()) return r_kernel(s.s - 1, cdf.step_point(), x);
    const double lo = cdf.support_lo();
    if (x <= lo) return 0.0;
    const int j = s.s - 2;
    auto integrand = [&](double u) { return r_kernel(j, u, x) * cdf(u); };
    return integrate(integrand, lo, x, spec);
}

}  // namespace rsd
