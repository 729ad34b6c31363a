#ifndef DSMC_PARALLEL_HPP
#define DSMC_PARALLEL_HPP

namespace dsmc {

// Worker count: min(omp_get_max_threads, DSMC_THREADS) when the env var is
// set; 1 when built without OpenMP.
int worker_count();

// Explicit override (used by benchmarks and single-threaded runs); 0 resets
// to the environment default.
void set_worker_count(int n);

}  // namespace dsmc

#endif  // DSMC_PARALLEL_HPP
