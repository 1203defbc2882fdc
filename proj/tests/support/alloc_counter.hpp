#pragma once

// Global allocation accounting for space tests. operator new is replaced
// process-wide; tracking is off unless an AllocScope is alive.

#include <cstddef>

namespace alloc_counter {

struct Stats {
  std::size_t calls = 0;
  std::size_t bytes = 0;
};

void start();
Stats stop();

/// Records every allocation made while in scope.
class AllocScope {
 public:
  AllocScope() { start(); }
  AllocScope(const AllocScope&) = delete;
  AllocScope& operator=(const AllocScope&) = delete;
  ~AllocScope() {
    if (!done_) stop();
  }
  Stats finish() {
    done_ = true;
    return stop();
  }

 private:
  bool done_ = false;
};

}  // namespace alloc_counter
