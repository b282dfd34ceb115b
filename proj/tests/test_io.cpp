#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cmlab/cayley.hpp"
#include "cmlab/diagnostics.hpp"
#include "cmlab/format.hpp"
#include "cmlab/matrix_io.hpp"
#include "cmlab/report.hpp"
#include "support.hpp"

namespace fs = std::filesystem;

namespace {

std::vector<std::string> lines_of(const fs::path& path) {
  std::ifstream in(path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("format_double round-trips") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> mantissa(-1.0, 1.0);
  std::uniform_int_distribution<int> exponent(-300, 300);
  for (int i = 0; i < 10000; ++i) {
    const double x = std::ldexp(mantissa(gen), exponent(gen));
    CHECK(cmlab::parse_double(cmlab::format_double(x)) == x);
  }
  CHECK(cmlab::format_double(0.1) == "0.10000000000000001");
  CHECK(cmlab::format_double(1.0) == "1");
  CHECK(cmlab::parse_double("inf") == std::numeric_limits<double>::infinity());
  CHECK(cmlab::parse_double("+2.5") == 2.5);
  CHECK_ERRC(cmlab::parse_double("2.5x"), cmlab::Errc::IoFailure);
  CHECK_ERRC(cmlab::parse_double(""), cmlab::Errc::IoFailure);
}

TEST_CASE("matrix text round-trip") {
  const auto p = cmlab::ErgodicParams::validate({0.3, 1.0, {2.0, -1.0}, {}});
  const auto m = cmlab::minor(cmlab::CoupledSample(p, 6), 7);
  std::stringstream hermitian;
  cmlab::write_matrix_text(hermitian, m);
  CHECK(hermitian.str().rfind("n 7\n", 0) == 0);
  auto parsed = cmlab::read_matrix_text(hermitian);
  CHECK_FALSE(parsed.unitary);
  CHECK(parsed.entries == m.matrix());

  std::stringstream unitary;
  const auto u = cmlab::cayley(m);
  cmlab::write_matrix_text(unitary, u);
  CHECK(unitary.str().rfind("n 7 unitary\n", 0) == 0);
  parsed = cmlab::read_matrix_text(unitary);
  CHECK(parsed.unitary);
  CHECK(parsed.entries == u.matrix());
}

TEST_CASE("matrix text errors") {
  for (const char* text : {"", "m 2\n", "n 2\n1:0 0:0\n", "n 1\n1;0\n", "n 1\n1:0 2:0\n"}) {
    std::istringstream is(text);
    CHECK_ERRC(cmlab::read_matrix_text(is), cmlab::Errc::IoFailure);
  }
}

TEST_CASE("plot data row counts") {
  const auto p = cmlab::ErgodicParams::validate({0, 0, {2.0, -1.0}, {}});
  const std::vector<cmlab::ConvergenceReport> reports{cmlab::convergence_run(
      p, 1, {8, 16, 24, 32, 40}, {{1.5, 2.5}, {-1.5, -0.5}}, {{1, 1}}, 1e-3)};
  const fs::path dir = fs::temp_directory_path() / "cmlab_test_io";
  fs::create_directories(dir);
  const fs::path path = dir / "plot.csv";
  cmlab::emit_plotdata(reports, path);
  const auto lines = lines_of(path);
  REQUIRE(lines.size() == 21);
  CHECK(lines[0] == "series,replica,interval_lo,interval_hi,a,b,n,error");
  int lambda = 0, sigma = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    lambda += lines[i].rfind("lambda,", 0) == 0;
    sigma += lines[i].rfind("sigma,", 0) == 0;
  }
  CHECK(lambda == 10);
  CHECK(sigma == 10);

  CHECK_ERRC(cmlab::emit_plotdata({}, path), cmlab::Errc::PreconditionViolation);
  CHECK_ERRC(cmlab::emit_plotdata(reports, dir / "missing" / "plot.csv"), cmlab::Errc::IoFailure);
  fs::remove_all(dir);
}

TEST_CASE("converge and moments CSV layout") {
  const auto p = cmlab::ErgodicParams::validate({0, 0, {2.0, -1.0}, {}});
  const std::vector<cmlab::ConvergenceReport> reports{
      cmlab::convergence_run(p, 1, {8, 16}, {{1.5, 2.5}}, {{1, 2}}, 1e-3)};
  std::ostringstream os;
  cmlab::write_converge_csv(os, reports);
  std::istringstream is(os.str());
  std::string header;
  std::getline(is, header);
  CHECK(header ==
        "replica,n,interval_lo,interval_hi,a,b,lambda_n,lambda_inf,sigma_re,sigma_im,sigma_inf_re,"
        "sigma_inf_im,abs_err_lambda,abs_err_sigma");
  int rows = 0;
  for (std::string line; std::getline(is, line);) ++rows;
  CHECK(rows == 2);

  std::ostringstream moments;
  const std::vector<cmlab::MomentCheck> checks{cmlab::moment_mc_check(3, 2, 100, 1)};
  cmlab::write_moments_csv(moments, checks);
  CHECK(moments.str().rfind("n,r,empirical,oracle,z\n3,2,", 0) == 0);
}
