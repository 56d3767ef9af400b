#pragma once

#include <cstddef>
#include <functional>

namespace charcone {

/// Worker count used by quadrature and grid kernels. Resolution order:
/// set_thread_count() > CHARCONE_THREADS > hardware concurrency.
int thread_count();

/// 0 restores automatic selection.
void set_thread_count(int threads);

/// Runs body(i) for i in [0, tasks) on up to thread_count() threads. The
/// assignment of tasks to threads is unspecified; callers that need
/// reproducible results must make each task independent.
void parallel_for(std::size_t tasks, const std::function<void(std::size_t)>& body);

}  // namespace charcone
