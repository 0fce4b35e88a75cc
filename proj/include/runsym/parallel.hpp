#pragma once

namespace runsym {

/// Environment variable that caps the OpenMP team size of the kernels.
inline constexpr const char* kThreadsEnvVar = "RUNSYM_THREADS";

/// Applies RUNSYM_THREADS (if set to a positive integer) and returns the
/// thread count the parallel kernels will use. Returns 1 without OpenMP.
int configure_threads_from_env();

int max_threads() noexcept;
bool openmp_enabled() noexcept;

}  // namespace runsym
