#pragma once

namespace boolspec {

/// Number of workers for parallel kernels. A positive `requested` wins;
/// otherwise the BOOLSPEC_WORKERS environment variable applies, where 0 or
/// an unset/invalid value means auto (all hardware threads). Always >= 1;
/// 1 when built without OpenMP.
int worker_count(int requested = 0);

}  // namespace boolspec
