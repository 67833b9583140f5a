#ifndef INTQUANT_PARALLEL_HPP
#define INTQUANT_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace intquant {

// 0 means "pick for me" (hardware concurrency, at least 1).
std::size_t resolve_threads(std::size_t requested);

// Runs body(i) for i in [0, count) on up to `threads` workers.  Each index
// must write only to its own output slot; callers reduce the slots in index
// order afterwards, so results do not depend on the thread count.  The first
// exception thrown by any worker is rethrown after all workers join.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace intquant

#endif
