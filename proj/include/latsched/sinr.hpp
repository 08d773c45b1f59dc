#pragma once

#include "latsched/lattice.hpp"
#include "latsched/scheduler.hpp"

#include <optional>
#include <span>

namespace latsched {

/// Parameters of the SINR analysis under uniform transmit power and polynomial path loss.
struct SinrParams {
    double beta = 1.0;   ///< SINR threshold
    double gamma = 3.0;  ///< path-loss exponent, > 2
    double eta = 1.0;    ///< noise power
    InterferenceK k{1};
    double d = 1.0;      ///< minimum neighbor distance
    double D = 1.0;      ///< maximum neighbor distance
    double P = 1.0;      ///< transmit power

    /// Throws ErrorCode::Domain for gamma <= 2, InvalidArgument for the rest.
    void validate() const;
};

/// Channel gain dist^-gamma.
double path_gain(double distance, double gamma);

/// P g(s,r) / (sum_i P g(i,r) + eta) with `interferers` excluding the sender.
double sinr_at(Point receiver, Point sender, std::span<const Point> interferers, const SinrParams& params);

/// P / D^gamma.
double min_signal(const SinrParams& params);

/// Closed-form hexagonal bound: (6P/((k+1)d)^gamma) (2/sqrt3)^gamma (gamma-1)/(gamma-2).
double hex_interference_bound(const SinrParams& params);

struct SquareShapeFactors {
    double nu;
    double phi;
    double alpha;  ///< nu^gamma + phi^gamma
};

/// 1/nu = 1/sqrt2 - (1/sqrt2)/(k+1), 1/phi = sqrt5/sqrt8 - (3/sqrt40)/(k+1).
SquareShapeFactors square_shape_factors(int k, double gamma);

/// Closed-form square bound: (4P/((k+1)d)^gamma) alpha (gamma-1)/(gamma-2).
double square_interference_bound(const SinrParams& params);

double interference_bound(LatticeKind kind, const SinrParams& params);

constexpr int kDefaultRings = 200;

/// Finite double sum over `rings` concentric rings of worst-case regular transmitters, each
/// term P/(s_{i,n} - d)^gamma with s_{i,n} the distance of the i-th transmitter on ring n.
/// Hexagonal: 6 hextants, n transmitters per ring. Square: 4 sides, 2n per side.
double exact_regular_interference(LatticeKind kind, const SinrParams& params, int rings = kDefaultRings);

/// Largest D/d for which the schedule meets beta everywhere (strict bound).
double dd_max(LatticeKind kind, double beta, double gamma, InterferenceK k);
/// Largest beta admitting any D/d >= 1.
double beta_max(LatticeKind kind, double gamma, InterferenceK k);

struct FeasibilityRegion {
    double dd_max = 0.0;
    double beta_max = 0.0;
    std::optional<double> p_min;  ///< set only when computed from full parameters and feasible
    bool feasible = false;        ///< dd_max > 1, equivalently beta < beta_max
};

FeasibilityRegion feasibility(LatticeKind kind, double beta, double gamma, InterferenceK k);
/// Same, and additionally evaluates p_min at the configured (eta, d, D).
FeasibilityRegion feasibility(LatticeKind kind, const SinrParams& params);

/// Open lower bound on transmit power: beta eta D^gamma / (1 - beta I_bound(P=1) D^gamma).
/// nullopt when the denominator is not positive.
std::optional<double> power_threshold(LatticeKind kind, const SinrParams& params);

}  // namespace latsched
