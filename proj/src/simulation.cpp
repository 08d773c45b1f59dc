#include "latsched/simulation.hpp"

#include "latsched/error.hpp"

#include <string>

namespace latsched {

SimulationResult simulate(const SimulationConfig& config)
{
    if (!(config.power_margin >= 0.0))
        fail(ErrorCode::InvalidArgument, "power margin must be nonnegative");
    if (config.extent.empty())
        fail(ErrorCode::InvalidArgument, "simulation needs a non-empty extent");

    SimulationResult result;
    result.point = operating_point(config.kind, config.gamma, config.k, config.f);
    if (config.fixed_beta && config.fixed_dd) {
        result.beta = *config.fixed_beta;
        result.dd = *config.fixed_dd;
    } else {
        if (!result.point.interior())
            fail(ErrorCode::Infeasible, "operating point f=" + std::to_string(config.f) + " is " +
                                            std::string(to_string(result.point.status)));
        result.beta = result.point.beta;
        result.dd = result.point.dd;
    }

    SinrParams params;
    params.beta = result.beta;
    params.gamma = config.gamma;
    params.eta = config.eta;
    params.k = config.k;
    params.D = 1.0;
    params.d = 1.0 / result.dd;
    params.P = 1.0;
    const auto threshold = power_threshold(config.kind, params);
    if (!threshold)
        fail(ErrorCode::Infeasible, "no finite transmit power satisfies the SINR bound at D/d=" +
                                        std::to_string(result.dd) + ", beta=" + std::to_string(result.beta));
    params.P = *threshold * (1.0 + config.power_margin);
    if (!(params.P > 0.0))
        fail(ErrorCode::Infeasible, "power threshold is zero (eta = 0); set a positive noise level");
    result.power = params.P;
    result.params = params;

    const Schedule schedule = build_schedule(config.kind, config.k, config.extent);
    result.deployment = generate(config.kind, config.extent, result.dd, config.seed);
    result.realized = result.deployment.realized_neighbor_range();
    result.report = evaluate(result.deployment, schedule, params);
    return result;
}

}  // namespace latsched
