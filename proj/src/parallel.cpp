#include "runsym/parallel.hpp"

#include <cstdlib>
#include <string>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace runsym {

int configure_threads_from_env() {
  if (const char* value = std::getenv(kThreadsEnvVar)) {
    try {
      const int n = std::stoi(value);
#if defined(_OPENMP)
      if (n > 0) omp_set_num_threads(n);
#else
      (void)n;
#endif
    } catch (const std::exception&) {
      // malformed value: keep the runtime default
    }
  }
  return max_threads();
}

int max_threads() noexcept {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

bool openmp_enabled() noexcept {
#if defined(_OPENMP)
  return true;
#else
  return false;
#endif
}

}  // namespace runsym
