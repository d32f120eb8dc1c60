#pragma once

#include "wsn/config.hpp"

namespace wsn {

/// Runs every (protocol, seed) pair of the spec, writing one CSV per run and
/// one summary table for the batch. Returns a process exit status: 0 on
/// success, 1 on I/O failure.
int run_batch(const RunSpec& spec);

}  // namespace wsn
