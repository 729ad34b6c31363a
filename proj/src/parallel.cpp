#include "dsmc/parallel.hpp"

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dsmc {

namespace {
int g_override = 0;
}

int worker_count() {
  if (g_override > 0) return g_override;
#ifdef _OPENMP
  int n = omp_get_max_threads();
  if (const char* env = std::getenv("DSMC_THREADS")) {
    int cap = std::atoi(env);
    if (cap > 0 && cap < n) n = cap;
  }
  return n;
#else
  return 1;
#endif
}

void set_worker_count(int n) { g_override = n > 0 ? n : 0; }

}  // namespace dsmc
