#pragma once

#include <iosfwd>

#include "cmlab/matrix.hpp"

namespace cmlab {

// Text format: a header line "n <dim>" (Hermitian) or "n <dim> unitary",
// then <dim> rows of space-separated "re:im" pairs, 17 significant digits.

void write_matrix_text(std::ostream& os, const HermitianMinor& m);
void write_matrix_text(std::ostream& os, const UnitaryMinor& u);

struct TextMatrix {
  Matrix entries;
  bool unitary = false;
};

/// Throws IoFailure on malformed input.
TextMatrix read_matrix_text(std::istream& is);

}  // namespace cmlab
