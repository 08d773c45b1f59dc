#pragma once

#include "run_config.hpp"

namespace cli {

int cmd_schedule(const RunConfig& config);
int cmd_verify(const RunConfig& config);
int cmd_clique(const RunConfig& config);
int cmd_feasibility(const RunConfig& config);
int cmd_simulate(const RunConfig& config);
int cmd_sweep(const RunConfig& config);

}  // namespace cli
