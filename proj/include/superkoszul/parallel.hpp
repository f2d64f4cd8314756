#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace superkoszul {

/// Worker count used by the per-degree rank computations. Results never
/// depend on it.
int jobs();
void set_jobs(int n);

/// Runs fn(0..n-1) on up to jobs() threads; fn writes to its own slot.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace superkoszul
