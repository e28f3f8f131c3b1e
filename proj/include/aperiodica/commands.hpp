#pragma once

#include <string>

#include "aperiodica/config.hpp"

namespace aperiodica {

/// Subcommand bodies. Each writes its result to config.output (or stdout
/// when no path is given) and returns a process exit code:
/// 0 success, 1 usage/config error, 2 verification failure.
/// Configuration errors are thrown as std::invalid_argument and mapped to
/// exit code 1 by the caller.
int cmd_generate(const ExperimentConfig& config);
int cmd_autocorrelate(const ExperimentConfig& config);
int cmd_npoint(const ExperimentConfig& config);
int cmd_diffract(const ExperimentConfig& config);
int cmd_freq(const ExperimentConfig& config);
int cmd_inequality(const ExperimentConfig& config);
int cmd_verify(const ExperimentConfig& config);

}  // namespace aperiodica
