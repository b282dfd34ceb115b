#include "cmlab/matrix_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "cmlab/error.hpp"
#include "cmlab/format.hpp"

namespace cmlab {
namespace {

void write_entries(std::ostream& os, const Matrix& m, bool unitary) {
  os << "n " << m.rows();
  if (unitary) os << " unitary";
  os << '\n';
  for (Eigen::Index j = 0; j < m.rows(); ++j) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      if (k > 0) os << ' ';
      os << format_double(m(j, k).real()) << ':' << format_double(m(j, k).imag());
    }
    os << '\n';
  }
}

}  // namespace

void write_matrix_text(std::ostream& os, const HermitianMinor& m) {
  write_entries(os, m.matrix(), false);
}

void write_matrix_text(std::ostream& os, const UnitaryMinor& u) {
  write_entries(os, u.matrix(), true);
}

TextMatrix read_matrix_text(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw Error(Errc::IoFailure, "missing matrix header");
  std::istringstream header(line);
  std::string tag;
  long dim = 0;
  std::string kind;
  if (!(header >> tag >> dim) || tag != "n" || dim < 1) {
    throw Error(Errc::IoFailure, "malformed matrix header '" + line + "'");
  }
  TextMatrix out;
  if (header >> kind) {
    if (kind != "unitary") throw Error(Errc::IoFailure, "unknown matrix tag '" + kind + "'");
    out.unitary = true;
  }
  out.entries.resize(dim, dim);
  for (long j = 0; j < dim; ++j) {
    if (!std::getline(is, line)) throw Error(Errc::IoFailure, "matrix has too few rows");
    std::istringstream row(line);
    std::string cell;
    long k = 0;
    for (; row >> cell; ++k) {
      const auto colon = cell.find(':');
      if (colon == std::string::npos || k >= dim) {
        throw Error(Errc::IoFailure, "malformed matrix row " + std::to_string(j + 1));
      }
      out.entries(j, k) = {parse_double(cell.substr(0, colon)), parse_double(cell.substr(colon + 1))};
    }
    if (k != dim) throw Error(Errc::IoFailure, "row " + std::to_string(j + 1) + " has wrong width");
  }
  return out;
}

}  // namespace cmlab
