#pragma once

#include <cstddef>
#include <functional>

namespace cedille {

inline constexpr std::size_t kDeepStackBytes = std::size_t{1} << 29;

// Runs `work` to completion on a thread with a large stack and rethrows
// whatever it throws. Reduction and printing recurse over term depth, and
// terms grown by a long reduction can be deep.
void run_with_deep_stack(const std::function<void()>& work, std::size_t stack_bytes = kDeepStackBytes);

}  // namespace cedille
