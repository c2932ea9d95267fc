#pragma once

#include <string>

#include "randurv/matrix.hpp"

namespace randurv {

// On-disk format: a header line "rows cols" followed by the entries in
// row-major order, whitespace separated.  Writing uses 17 significant digits
// so that a write/read cycle reproduces every double bit for bit.

Matrix read_matrix(const std::string& path);
void write_matrix(const std::string& path, const Matrix& m);

// %.17g rendering shared by the matrix and CSV writers.
std::string format_double(double v);

}  // namespace randurv
