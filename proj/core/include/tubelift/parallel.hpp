#pragma once

#include <cstddef>
#include <functional>

namespace tubelift::parallel {

// 0 means "all hardware threads".
void set_max_threads(unsigned count);
unsigned max_threads();

// Runs body(i) for i in [0, count) on up to max_threads() workers. Callers
// write results by index, so output never depends on the thread count.
void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace tubelift::parallel
