#pragma once

#include <rsd/common.hpp>
#include <rsd/data_model.hpp>
#include <rsd/dominance.hpp>

#include <functional>
#include <optional>
#include <vector>

namespace rsd {

enum class AssumptionFamily { WorstCase, McarUnit, PropensityBounds, KsNeighborhood };
enum class Direction { ADominatesB, BDominatesA };

struct KsParams {
    double gamma_a = 0.0;
    double gamma_b00 = 0.0;
    double gamma_b10 = 0.0;
};

// Pointwise bounds on the nonresponse propensities, given as CDFs with
// L <= U on the common support.
struct PropensityParams {
    CdfHandle l_a00;
    CdfHandle u_a00;
    CdfHandle l_b00;
    CdfHandle u_b00;
    CdfHandle l_10;
    CdfHandle u_10;
};

struct AssumptionSpec {
    AssumptionFamily family = AssumptionFamily::WorstCase;
    Direction direction = Direction::ADominatesB;
    KsParams ks;
    std::optional<PropensityParams> propensity;
    // Uses the literal phi_2 = 1 for the MCAR-unit family (A dominates B)
    // instead of the form consistent with the family's displayed upper bound.
    bool strict_paper_phi2 = false;
};

// phi(x) = [phi_1..phi_4], each uniformly bounded on the testing range.
struct PhiVector {
    std::function<double(double)> phi1;
    std::function<double(double)> phi2;
    std::function<double(double)> phi3;
    std::function<double(double)> phi4;
};

struct PhiAt {
    double phi1, phi2, phi3, phi4;
};

inline PhiAt eval_phi(const PhiVector& phi, double x) {
    return {phi.phi1(x), phi.phi2(x), phi.phi3(x), phi.phi4(x)};
}

struct ThetaCurve {
    std::vector<double> grid;
    std::vector<double> theta;
    std::vector<std::size_t> nonzero_h;  // units with H_i != 0 per grid point
};

// Realizes the maintained nonresponse assumption as the nuisance vector.
// Plug-in conditional expectations (propensity family, s > 1) are
// Hajek-weighted means over the relevant response subsamples.
PhiVector build_phi(const AssumptionSpec& spec, const ResponseShares& shares,
                    DominanceOrder s, const PairedSample& sample);

// H_i(x; phi(x)) for a responder record.
double moment_fn(const ObservationRecord& record, double x, const PhiAt& phi,
                 DominanceOrder s);
double moment_fn(const ObservationRecord& record, double x, const PhiVector& phi,
                 DominanceOrder s);

// theta_hat(x) = n^{-1} sum_U W'_i H_i(x)
ThetaCurve theta_hat(const PairedSample& sample, const ResponderWeights& weights,
                     const PhiVector& phi, DominanceOrder s,
                     const std::vector<double>& grid);

// Per-unit moment values at one x; the building block shared by the curve,
// the PEL solve and the variance estimators.
std::vector<double> moment_values(const PairedSample& sample, const PhiVector& phi,
                                  DominanceOrder s, double x);
std::vector<double> moment_values(const PairedSample& sample, const PhiAt& phi,
                                  DominanceOrder s, double x);

// A paired finite population with full response indicators (simulation use:
// both outcomes are known for every unit, response only masks them).
struct PairedPopulation {
    std::vector<double> y_a;
    std::vector<double> y_b;
    std::vector<Pattern> pattern;
    Interval support_a;
    Interval support_b;

    std::size_t size() const { return y_a.size(); }
    ResponseShares shares() const;
};

struct BoundCurves {
    std::vector<double> grid;
    std::vector<double> lower_a, upper_a;
    std::vector<double> lower_b, upper_b;
};

// Closed-form identified sets of D^s_{N_A}, D^s_{N_B} for the four families.
BoundCurves population_bounds(const PairedPopulation& population,
                              const AssumptionSpec& spec, DominanceOrder s,
                              const std::vector<double>& grid);

// Bound contrast the test targets: upper_A - lower_B, or upper_B - lower_A
// for the mirrored direction.
std::vector<double> bound_contrast(const BoundCurves& curves, Direction direction);

// True population contrast D^s_A - D^s_B (or mirrored), ignoring response.
std::vector<double> population_contrast(const PairedPopulation& population,
                                        Direction direction, DominanceOrder s,
                                        const std::vector<double>& grid);

std::vector<double> make_grid(double lo, double hi, std::size_t size);

}  // namespace rsd
