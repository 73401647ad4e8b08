#include "boolspec/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef BOOLSPEC_HAVE_OPENMP
#include <omp.h>
#endif

namespace boolspec {

namespace {

int hardware_workers() {
#ifdef BOOLSPEC_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace

int worker_count(int requested) {
  if (requested > 0) return requested;
  int workers = 0;
  if (const char* env = std::getenv("BOOLSPEC_WORKERS")) {
    try {
      workers = std::stoi(env);
    } catch (const std::exception&) {
      workers = 0;
    }
  }
  if (workers <= 0) workers = hardware_workers();
#ifndef BOOLSPEC_HAVE_OPENMP
  workers = 1;
#endif
  return workers < 1 ? 1 : workers;
}

}  // namespace boolspec
