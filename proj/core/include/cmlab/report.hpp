#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>

#include "cmlab/diagnostics.hpp"

namespace cmlab {

// Long-format CSV writers. Floats use format_double (17 significant digits).

/// converge.csv: one row per (replica, n, interval, pair).
void write_converge_csv(std::ostream& os, std::span<const ConvergenceReport> reports);

struct NormRow {
  std::size_t replica = 0;
  NormPoint point;
};

/// norm.csv: replica, n, norm_over_n, bound, pass.
void write_norm_csv(std::ostream& os, std::span<const NormRow> rows);

/// moments.csv: n, r, empirical, oracle, z.
void write_moments_csv(std::ostream& os, std::span<const MomentCheck> checks);

/// Plot-ready (n, error) series: columns series, replica, interval_lo,
/// interval_hi, a, b, n, error. Throws PreconditionViolation for an empty
/// report set and IoFailure if `path` cannot be written.
void emit_plotdata(std::span<const ConvergenceReport> reports, const std::filesystem::path& path);

}  // namespace cmlab
