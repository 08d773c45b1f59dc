#include "latsched/sinr.hpp"

#include "latsched/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace latsched {

namespace {

void require_gamma(double gamma)
{
    if (!(gamma > 2.0))
        fail(ErrorCode::Domain, "path-loss exponent gamma must exceed 2 (got " + std::to_string(gamma) + ")");
}

double tail_factor(double gamma) { return (gamma - 1.0) / (gamma - 2.0); }

// Interference bound per unit power and unit D, i.e. bound(P=1) * D^gamma expressed via D/d.
double normalized_bound(LatticeKind kind, double ratio, double gamma, int k)
{
    const int kp = k + 1;
    if (kind == LatticeKind::Hexagonal)
        return 6.0 * std::pow(2.0 * ratio / (std::numbers::sqrt3 * kp), gamma) * tail_factor(gamma);
    return 4.0 * square_shape_factors(k, gamma).alpha * std::pow(ratio / kp, gamma) * tail_factor(gamma);
}

}  // namespace

void SinrParams::validate() const
{
    require_gamma(gamma);
    if (!(beta > 0.0))
        fail(ErrorCode::InvalidArgument, "SINR threshold beta must be positive");
    if (!(eta >= 0.0))
        fail(ErrorCode::InvalidArgument, "noise eta must be nonnegative");
    if (!(d > 0.0) || !(D >= d))
        fail(ErrorCode::InvalidArgument, "neighbor distances need 0 < d <= D");
    if (!(P > 0.0))
        fail(ErrorCode::InvalidArgument, "transmit power P must be positive");
}

double path_gain(double distance, double gamma)
{
    if (!(distance > 0.0))
        fail(ErrorCode::Domain, "channel gain undefined at zero distance");
    return std::pow(distance, -gamma);
}

double sinr_at(Point receiver, Point sender, std::span<const Point> interferers, const SinrParams& params)
{
    const double signal = params.P * path_gain(euclidean_distance(sender, receiver), params.gamma);
    double interference = 0.0;
    for (const Point& i : interferers)
        interference += params.P * path_gain(euclidean_distance(i, receiver), params.gamma);
    return signal / (interference + params.eta);
}

double min_signal(const SinrParams& params) { return params.P / std::pow(params.D, params.gamma); }

double hex_interference_bound(const SinrParams& params)
{
    require_gamma(params.gamma);
    const double l = (params.k.value() + 1) * params.d;
    return 6.0 * params.P / std::pow(l, params.gamma) * std::pow(2.0 / std::numbers::sqrt3, params.gamma) *
           tail_factor(params.gamma);
}

SquareShapeFactors square_shape_factors(int k, double gamma)
{
    if (k < 1)
        fail(ErrorCode::InvalidArgument, "square shape factors need k >= 1");
    const double inv = 1.0 / (k + 1);
    const double inv_nu = (1.0 / std::numbers::sqrt2) * (1.0 - inv);
    const double inv_phi = std::sqrt(5.0) / std::sqrt(8.0) - (3.0 / std::sqrt(40.0)) * inv;
    const double nu = 1.0 / inv_nu;
    const double phi = 1.0 / inv_phi;
    return {nu, phi, std::pow(nu, gamma) + std::pow(phi, gamma)};
}

double square_interference_bound(const SinrParams& params)
{
    require_gamma(params.gamma);
    const double l = (params.k.value() + 1) * params.d;
    const double alpha = square_shape_factors(params.k.value(), params.gamma).alpha;
    return 4.0 * params.P / std::pow(l, params.gamma) * alpha * tail_factor(params.gamma);
}

double interference_bound(LatticeKind kind, const SinrParams& params)
{
    return kind == LatticeKind::Hexagonal ? hex_interference_bound(params) : square_interference_bound(params);
}

double exact_regular_interference(LatticeKind kind, const SinrParams& params, int rings)
{
    if (rings < 1)
        fail(ErrorCode::InvalidArgument, "exact interference needs at least one ring");
    if (!(params.d > 0.0))
        fail(ErrorCode::InvalidArgument, "spacing d must be positive");
    const double l = (params.k.value() + 1) * params.d;
    const bool hex = kind == LatticeKind::Hexagonal;
    double total = 0.0;
    for (int n = 1; n <= rings; ++n) {
        const int per_side = hex ? n : 2 * n;
        double ring = 0.0;
        for (int i = 1; i <= per_side; ++i) {
            const double j = i - 1;
            const double nn = n;
            const double q = hex ? nn * nn + j * j - j * nn : nn * nn + j * j / 2.0 - j * nn;
            const double gap = l * std::sqrt(q) - params.d;
            if (!(gap > 0.0))
                fail(ErrorCode::Domain, "interferer closer than d to the receiver (s - d <= 0)");
            ring += params.P / std::pow(gap, params.gamma);
        }
        total += ring;
    }
    return (hex ? 6.0 : 4.0) * total;
}

double dd_max(LatticeKind kind, double beta, double gamma, InterferenceK k)
{
    require_gamma(gamma);
    if (!(beta > 0.0))
        fail(ErrorCode::InvalidArgument, "beta must be positive");
    const int kp = k.value() + 1;
    const double tail = (gamma - 2.0) / (gamma - 1.0);
    if (kind == LatticeKind::Hexagonal)
        return std::numbers::sqrt3 * kp / 2.0 * std::pow(tail / (6.0 * beta), 1.0 / gamma);
    const double alpha = square_shape_factors(k.value(), gamma).alpha;
    return kp * std::pow(tail / (4.0 * alpha * beta), 1.0 / gamma);
}

double beta_max(LatticeKind kind, double gamma, InterferenceK k)
{
    require_gamma(gamma);
    const int kp = k.value() + 1;
    const double tail = (gamma - 2.0) / (gamma - 1.0);
    if (kind == LatticeKind::Hexagonal)
        return std::pow(std::numbers::sqrt3 * kp / 2.0, gamma) * tail / 6.0;
    const double alpha = square_shape_factors(k.value(), gamma).alpha;
    return std::pow(kp, gamma) * tail / (4.0 * alpha);
}

FeasibilityRegion feasibility(LatticeKind kind, double beta, double gamma, InterferenceK k)
{
    FeasibilityRegion region;
    region.dd_max = dd_max(kind, beta, gamma, k);
    region.beta_max = beta_max(kind, gamma, k);
    region.feasible = region.dd_max > 1.0;
    return region;
}

FeasibilityRegion feasibility(LatticeKind kind, const SinrParams& params)
{
    FeasibilityRegion region = feasibility(kind, params.beta, params.gamma, params.k);
    if (region.feasible)
        region.p_min = power_threshold(kind, params);
    return region;
}

std::optional<double> power_threshold(LatticeKind kind, const SinrParams& params)
{
    params.validate();
    const double ratio = params.D / params.d;
    // Same strict boundary as feasibility(), so the two never disagree through rounding.
    if (!(ratio < dd_max(kind, params.beta, params.gamma, params.k)))
        return std::nullopt;
    const double denominator =
        1.0 - params.beta * normalized_bound(kind, ratio, params.gamma, params.k.value());
    if (!(denominator > 0.0))
        return std::nullopt;
    return params.beta * params.eta * std::pow(params.D, params.gamma) / denominator;
}

}  // namespace latsched
