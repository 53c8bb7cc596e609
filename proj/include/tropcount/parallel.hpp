#pragma once

#include <cstddef>
#include <functional>

namespace tropcount {

/// Worker count: hardware concurrency capped by TROPCOUNT_THREADS when set.
std::size_t thread_budget();

/// Runs body(i) for i in [0, count) on up to thread_budget() threads. Work is
/// handed out dynamically; the first exception is rethrown after joining.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace tropcount
