#include "cmlab/report.hpp"

#include <fstream>
#include <ostream>

#include "cmlab/error.hpp"
#include "cmlab/format.hpp"

namespace cmlab {

void write_converge_csv(std::ostream& os, std::span<const ConvergenceReport> reports) {
  os << "replica,n,interval_lo,interval_hi,a,b,lambda_n,lambda_inf,sigma_re,sigma_im,"
        "sigma_inf_re,sigma_inf_im,abs_err_lambda,abs_err_sigma\n";
  for (const ConvergenceReport& report : reports) {
    const std::size_t per_interval =
        report.lambda.empty() ? 0 : report.sigma.size() / report.lambda.size();
    for (std::size_t g = 0; g < report.n_grid.size(); ++g) {
      for (std::size_t i = 0; i < report.lambda.size(); ++i) {
        const LambdaSeries& lambda = report.lambda[i];
        const auto prefix = std::to_string(report.replica) + ',' + std::to_string(report.n_grid[g]) +
                            ',' + format_double(lambda.interval.lo) + ',' +
                            format_double(lambda.interval.hi) + ',';
        const auto lambda_cells =
            format_double(lambda.values[g]) + ',' + format_double(lambda.target) + ',';
        if (per_interval == 0) {
          os << prefix << ",," << lambda_cells << ",,,," << format_double(lambda.abs_err[g])
             << ",\n";
          continue;
        }
        for (std::size_t p = 0; p < per_interval; ++p) {
          const SigmaSeries& sigma = report.sigma[i * per_interval + p];
          os << prefix << sigma.pair.first << ',' << sigma.pair.second << ',' << lambda_cells
             << format_double(sigma.values[g].real()) << ','
             << format_double(sigma.values[g].imag()) << ','
             << format_double(sigma.target.real()) << ',' << format_double(sigma.target.imag())
             << ',' << format_double(lambda.abs_err[g]) << ',' << format_double(sigma.abs_err[g])
             << '\n';
        }
      }
    }
  }
}

void write_norm_csv(std::ostream& os, std::span<const NormRow> rows) {
  os << "replica,n,norm_over_n,bound,pass\n";
  for (const NormRow& row : rows) {
    os << row.replica << ',' << row.point.n << ',' << format_double(row.point.norm_over_n) << ','
       << format_double(row.point.bound) << ',' << (row.point.pass ? 1 : 0) << '\n';
  }
}

void write_moments_csv(std::ostream& os, std::span<const MomentCheck> checks) {
  os << "n,r,empirical,oracle,z\n";
  for (const MomentCheck& check : checks) {
    os << check.n << ',' << check.r << ',' << format_double(check.empirical) << ','
       << format_double(check.oracle) << ',' << format_double(check.z) << '\n';
  }
}

void emit_plotdata(std::span<const ConvergenceReport> reports, const std::filesystem::path& path) {
  if (reports.empty() || reports.front().n_grid.empty()) {
    throw Error(Errc::PreconditionViolation, "emit_plotdata needs a nonempty report");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoFailure, "cannot open " + path.string());

  out << "series,replica,interval_lo,interval_hi,a,b,n,error\n";
  for (const ConvergenceReport& report : reports) {
    for (const LambdaSeries& series : report.lambda) {
      for (std::size_t g = 0; g < report.n_grid.size(); ++g) {
        out << "lambda," << report.replica << ',' << format_double(series.interval.lo) << ','
            << format_double(series.interval.hi) << ",,," << report.n_grid[g] << ','
            << format_double(series.abs_err[g]) << '\n';
      }
    }
    for (const SigmaSeries& series : report.sigma) {
      for (std::size_t g = 0; g < report.n_grid.size(); ++g) {
        out << "sigma," << report.replica << ',' << format_double(series.interval.lo) << ','
            << format_double(series.interval.hi) << ',' << series.pair.first << ','
            << series.pair.second << ',' << report.n_grid[g] << ','
            << format_double(series.abs_err[g]) << '\n';
      }
    }
  }
  if (!out.flush()) throw Error(Errc::IoFailure, "failed writing " + path.string());
}

}  // namespace cmlab
