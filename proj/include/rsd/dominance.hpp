#pragma once

#include <rsd/common.hpp>
#include <rsd/special_functions.hpp>

#include <functional>
#include <utility>
#include <vector>

namespace rsd {

struct DominanceOrder {
    int s = 1;
    explicit DominanceOrder(int order) : s(order) {
        if (s < 1) throw config_error("dominance order s must be >= 1");
    }
};

// (x-y)^j / j! * 1[y <= x], with 0^0 := 1 so j=0 reduces to the indicator.
double r_kernel(int j, double y, double x);

// Weighted empirical distribution; holds the conditional CDFs the bounds
// formulas average over.
struct WeightedEmpirical {
    std::vector<std::pair<double, double>> points;  // (value, weight)
    double total_weight = 0.0;

    static WeightedEmpirical from_values(const std::vector<double>& values);
    static WeightedEmpirical from_weighted(const std::vector<double>& values,
                                           const std::vector<double>& weights);
};

// D^s(x) = sum_i w_i (x - y_i)^{s-1}/(s-1)! 1[y_i <= x] / total_weight
double dominance_fn(const WeightedEmpirical& dist, DominanceOrder s, double x);

struct QuadratureSpec {
    double abs_tol = 1e-9;
    int max_depth = 48;
};

// A CDF usable as a bound parameter: closed-form families, a step function,
// or a tabulated monotone interpolant. support_lo marks where mass can start;
// the cdf must be 0 below it.
class CdfHandle {
public:
    static CdfHandle arcsine(double xi, double lo, double hi);
    static CdfHandle uniform(double lo, double hi);
    static CdfHandle step_at(double c);
    static CdfHandle table(std::vector<double> xs, std::vector<double> ps);
    static CdfHandle from_function(std::function<double(double)> f, double lo);

    double operator()(double x) const { return fn_(x); }
    double support_lo() const { return lo_; }

    // Step CDFs have an exact s-fold integral; quadrature is skipped for them.
    bool is_step() const { return is_step_; }
    double step_point() const { return step_point_; }

private:
    std::function<double(double)> fn_;
    double lo_ = 0.0;
    bool is_step_ = false;
    double step_point_ = 0.0;
};

// s-th dominance function of a parametric CDF: cdf(x) for s=1, and for s>1
// the iterated integral collapsed to a single weighted integral
//   int_{lo}^{x} (x-u)^{s-2}/(s-2)! cdf(u) du,
// evaluated by adaptive quadrature to spec.abs_tol.
double dominance_fn_parametric(const CdfHandle& cdf, DominanceOrder s, double x,
                               const QuadratureSpec& spec = {});

}  // namespace rsd
