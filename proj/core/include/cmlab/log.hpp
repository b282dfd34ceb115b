#pragma once

#include <string_view>

namespace cmlab {

/// 0 = silent, 1 = progress, 2 = numerical diagnostics, 3 = trace.
void set_verbosity(int level) noexcept;
int verbosity() noexcept;

/// Writes one line to stderr when `level <= verbosity()`. Thread-safe.
void log_line(int level, std::string_view message);

}  // namespace cmlab
