#include "cmlab/log.hpp"

#include <atomic>
#include <iostream>
#include <mutex>

namespace cmlab {
namespace {

std::atomic<int> g_verbosity{0};
std::mutex g_stderr_mutex;

}  // namespace

void set_verbosity(int level) noexcept { g_verbosity.store(level, std::memory_order_relaxed); }

int verbosity() noexcept { return g_verbosity.load(std::memory_order_relaxed); }

void log_line(int level, std::string_view message) {
  if (level > verbosity()) return;
  std::lock_guard lock(g_stderr_mutex);
  std::cerr << message << '\n';
}

}  // namespace cmlab
