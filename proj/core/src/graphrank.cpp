#include "maniquery/graphrank.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "maniquery/error.hpp"

namespace maniquery {
namespace {

std::vector<std::string> distinct_stems(const Sentence& s) {
  std::vector<std::string> out;
  out.reserve(s.tokens.size());
  for (const Term& t : s.tokens) out.push_back(t.stem);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double overlap_of_sorted(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a.empty() || b.empty()) return 0.0;
  std::size_t shared = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++shared;
      ++ia;
      ++ib;
    }
  }
  return static_cast<double>(shared) / static_cast<double>(std::min(a.size(), b.size()));
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw InvalidAlpha("manifold ranking alpha must lie in (0, 1), got " + std::to_string(alpha));
  }
}

Eigen::VectorXd to_eigen(std::span<const double> v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = v[i];
  return out;
}

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

double word_overlap(const Sentence& lhs, const Sentence& rhs) {
  return overlap_of_sorted(distinct_stems(lhs), distinct_stems(rhs));
}

double proximity(const Sentence& lhs, const Sentence& rhs) {
  if (lhs.is_query || rhs.is_query) return 0.0;
  if (lhs.doc_id != rhs.doc_id) return 0.0;
  if (lhs.topic_local_index == rhs.topic_local_index) return 0.0;
  const auto gap = lhs.position_in_doc > rhs.position_in_doc ? lhs.position_in_doc - rhs.position_in_doc
                                                             : rhs.position_in_doc - lhs.position_in_doc;
  return std::pow(0.1, static_cast<double>(gap));
}

SimilarityGraph build_similarity_graph(const SentenceWordMatrix& expanded,
                                       const SentenceWordMatrix& original,
                                       std::span<const Sentence> rows,
                                       const SimilarityWeights& weights) {
  const std::size_t n = rows.size();
  if (expanded.rows() != n || original.rows() != n || expanded.cols() != original.cols()) {
    throw DimensionMismatch("sentence rows, expanded and original matrices disagree in shape");
  }
  for (std::size_t i = 1; i < n; ++i) {
    const auto a = expanded.row(i);
    const auto b = original.row(i);
    if (!std::equal(a.begin(), a.end(), b.begin(), b.end())) {
      throw DimensionMismatch("expanded matrix differs from the original outside the query row");
    }
  }

  std::vector<std::vector<std::string>> stems(n);
  for (std::size_t i = 0; i < n; ++i) stems[i] = distinct_stems(rows[i]);

  SimilarityGraph g;
  g.weights = weights;
  const auto size = static_cast<Eigen::Index>(n);
  g.w = Eigen::MatrixXd::Zero(size, size);
  g.proximity = Eigen::MatrixXd::Zero(size, size);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double p = proximity(rows[i], rows[j]);
      const double value = weights.cosine * cosine(expanded.row(i), expanded.row(j)) +
                           weights.overlap * overlap_of_sorted(stems[i], stems[j]) +
                           weights.peer * p;
      const auto a = static_cast<Eigen::Index>(i);
      const auto b = static_cast<Eigen::Index>(j);
      g.w(a, b) = g.w(b, a) = value;
      g.proximity(a, b) = g.proximity(b, a) = p;
    }
  }
  g.degree = g.w.rowwise().sum();
  return g;
}

Eigen::MatrixXd document_cosine_graph(const SentenceWordMatrix& a0) {
  const std::size_t docs = a0.rows() > 0 ? a0.rows() - 1 : 0;
  const auto size = static_cast<Eigen::Index>(docs);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(size, size);
  for (std::size_t i = 0; i < docs; ++i) {
    for (std::size_t j = i + 1; j < docs; ++j) {
      const double c = cosine(a0.row(i + 1), a0.row(j + 1));
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = c;
      out(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = c;
    }
  }
  return out;
}

std::vector<double> query_relevance(const SentenceWordMatrix& a0) {
  std::vector<double> out;
  for (std::size_t i = 1; i < a0.rows(); ++i) out.push_back(cosine(a0.row(0), a0.row(i)));
  return out;
}

RankVector textrank_scores(const Eigen::MatrixXd& w_docs, std::span<const double> query_rel,
                           double damping, double r_t, const SolverOptions& options) {
  const auto n = w_docs.rows();
  if (w_docs.cols() != n || static_cast<Eigen::Index>(query_rel.size()) != n) {
    throw DimensionMismatch("TextRank graph and relevance vector disagree in size");
  }
  if (!(damping > 0.0 && damping < 1.0)) throw Error("TextRank damping must lie in (0, 1)");
  if (!(r_t >= 0.0 && r_t <= 1.0)) throw Error("TextRank r_t must lie in [0, 1]");

  RankVector out;
  out.kind = RankKind::TextRank;
  if (n == 0) {
    out.converged = true;
    return out;
  }

  const double uniform = 1.0 / static_cast<double>(n);
  Eigen::VectorXd rel = to_eigen(query_rel);
  if ((rel.array() < 0.0).any()) throw Error("query relevance must be non-negative");
  const double rel_sum = rel.sum();
  Eigen::VectorXd teleport = Eigen::VectorXd::Constant(n, uniform);
  if (rel_sum > 0.0) teleport = r_t * (rel / rel_sum) + (1.0 - r_t) * teleport;

  Eigen::MatrixXd transition = w_docs;  // row-normalised, then used transposed
  std::vector<Eigen::Index> dangling;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double total = transition.row(i).sum();
    if (total > 0.0) {
      transition.row(i) /= total;
    } else {
      dangling.push_back(i);
    }
  }
  const Eigen::MatrixXd mt = transition.transpose();

  Eigen::VectorXd p = Eigen::VectorXd::Constant(n, uniform);
  for (out.iterations = 1; out.iterations <= options.max_iter; ++out.iterations) {
    double dangling_mass = 0.0;
    for (Eigen::Index i : dangling) dangling_mass += p[i];
    Eigen::VectorXd next = damping * (mt * p + dangling_mass * teleport) + (1.0 - damping) * teleport;
    const double delta = (next - p).cwiseAbs().maxCoeff();
    p = std::move(next);
    if (delta < options.tol) {
      out.converged = true;
      break;
    }
  }
  if (!out.converged) out.iterations = options.max_iter;
  p /= p.sum();
  out.scores = to_std(p);
  return out;
}

Eigen::MatrixXd normalized_affinity(const Eigen::MatrixXd& w) {
  const Eigen::VectorXd degree = w.rowwise().sum();
  Eigen::VectorXd inv_sqrt(degree.size());
  for (Eigen::Index i = 0; i < degree.size(); ++i) {
    inv_sqrt[i] = degree[i] > 0.0 ? 1.0 / std::sqrt(degree[i]) : 0.0;
  }
  return inv_sqrt.asDiagonal() * w * inv_sqrt.asDiagonal();
}

RankVector manifold_rank(const Eigen::MatrixXd& w, std::span<const double> y, double alpha,
                         const SolverOptions& options) {
  check_alpha(alpha);
  if (w.rows() != w.cols() || static_cast<Eigen::Index>(y.size()) != w.rows()) {
    throw DimensionMismatch("affinity matrix and indicator vector disagree in size");
  }
  const Eigen::MatrixXd s = normalized_affinity(w);
  const Eigen::VectorXd base = (1.0 - alpha) * to_eigen(y);

  RankVector out;
  out.kind = RankKind::Manifold;
  Eigen::VectorXd f = to_eigen(y);
  for (out.iterations = 1; out.iterations <= options.max_iter; ++out.iterations) {
    Eigen::VectorXd next = alpha * (s * f) + base;
    const double delta = f.size() ? (next - f).cwiseAbs().maxCoeff() : 0.0;
    f = std::move(next);
    if (delta < options.tol) {
      out.converged = true;
      break;
    }
  }
  if (!out.converged) out.iterations = options.max_iter;
  out.scores = to_std(f);
  return out;
}

std::vector<double> manifold_rank_closed_form(const Eigen::MatrixXd& w, std::span<const double> y,
                                              double alpha) {
  check_alpha(alpha);
  if (w.rows() != w.cols() || static_cast<Eigen::Index>(y.size()) != w.rows()) {
    throw DimensionMismatch("affinity matrix and indicator vector disagree in size");
  }
  const auto n = w.rows();
  const Eigen::MatrixXd system = Eigen::MatrixXd::Identity(n, n) - alpha * normalized_affinity(w);
  const Eigen::VectorXd f = (1.0 - alpha) * system.partialPivLu().solve(to_eigen(y));
  return to_std(f);
}

}  // namespace maniquery
