#include "maniquery/matrix_market.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "maniquery/config.hpp"
#include "maniquery/error.hpp"

namespace maniquery {
namespace {

constexpr const char* kHeader = "%%MatrixMarket matrix coordinate real general\n";

}  // namespace

void write_matrix_market(std::ostream& out, const Eigen::MatrixXd& m) {
  std::size_t nnz = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) nnz += m(i, j) != 0.0 ? 1 : 0;
  }
  out << kHeader << m.rows() << ' ' << m.cols() << ' ' << nnz << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0.0) out << i + 1 << ' ' << j + 1 << ' ' << format_double(m(i, j)) << '\n';
    }
  }
}

void write_matrix_market(std::ostream& out, const SentenceWordMatrix& m) {
  out << kHeader << m.rows() << ' ' << m.cols() << ' ' << m.nnz() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& e : m.row(i)) {
      out << i + 1 << ' ' << e.col + 1 << ' ' << format_double(e.weight) << '\n';
    }
  }
}

Eigen::MatrixXd read_matrix_market(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("%%MatrixMarket matrix coordinate real general", 0) != 0) {
    throw Error("not a coordinate real general Matrix Market file");
  }
  while (std::getline(in, line) && !line.empty() && line[0] == '%') {
  }
  std::istringstream dims(line);
  Eigen::Index rows = 0, cols = 0;
  std::size_t nnz = 0;
  if (!(dims >> rows >> cols >> nnz)) throw Error("bad Matrix Market size line");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows, cols);
  for (std::size_t k = 0; k < nnz; ++k) {
    Eigen::Index i = 0, j = 0;
    double v = 0.0;
    if (!(in >> i >> j >> v) || i < 1 || j < 1 || i > rows || j > cols) {
      throw Error("bad Matrix Market entry");
    }
    m(i - 1, j - 1) = v;
  }
  return m;
}

}  // namespace maniquery
