#pragma once

#include <iosfwd>

#include <Eigen/Dense>

#include "maniquery/corpus.hpp"

namespace maniquery {

/// Coordinate format, `real general`, 1-based, non-zero entries only, in
/// row-major order. Values are written in shortest round-trip form.
void write_matrix_market(std::ostream& out, const Eigen::MatrixXd& m);
void write_matrix_market(std::ostream& out, const SentenceWordMatrix& m);

/// Reads back a `coordinate real general` file into a dense matrix.
Eigen::MatrixXd read_matrix_market(std::istream& in);

}  // namespace maniquery
