#pragma once

namespace covelm {

/// Applies the COVELM_THREADS environment variable to the OpenMP runtime.
/// No-op when the variable is unset or not a positive integer.
void apply_thread_cap_from_env();

}  // namespace covelm
