#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "maniquery/corpus.hpp"

namespace maniquery {

struct SimilarityWeights {
  double cosine = 0.9;   // alpha_A
  double overlap = 0.1;  // alpha_overlap
  double peer = 0.4;     // alpha_peer
};

/// Dense symmetric sentence graph. Row/column 0 is the query.
struct SimilarityGraph {
  Eigen::MatrixXd w;          // zero diagonal
  Eigen::VectorXd degree;     // row sums of w
  Eigen::MatrixXd proximity;  // P
  SimilarityWeights weights;

  std::size_t size() const { return static_cast<std::size_t>(w.rows()); }
};

enum class RankKind { Manifold, TextRank };

struct RankVector {
  std::vector<double> scores;
  RankKind kind = RankKind::Manifold;
  std::size_t iterations = 0;
  bool converged = false;
};

struct SolverOptions {
  double tol = 1e-9;
  std::size_t max_iter = 10000;
};

/// Shared distinct stems over the smaller distinct-stem count; 0 when either
/// sentence has no tokens.
double word_overlap(const Sentence& lhs, const Sentence& rhs);

/// 0.1^|gap| for distinct sentences of the same document, else 0. The query
/// row is never proximate to anything.
double proximity(const Sentence& lhs, const Sentence& rhs);

/// W_ij = a_A cos(A1_i, A1_j) + a_overlap SS_ij + a_peer P_ij for i != j.
/// Cosine uses the expanded matrix, overlap the original token sets.
SimilarityGraph build_similarity_graph(const SentenceWordMatrix& expanded,
                                       const SentenceWordMatrix& original,
                                       std::span<const Sentence> rows,
                                       const SimilarityWeights& weights);

/// Cosine similarity between document rows (rows 1..N-1) of `a0`, zero diagonal.
Eigen::MatrixXd document_cosine_graph(const SentenceWordMatrix& a0);

/// cos(query row, document row) for every document row of `a0`.
std::vector<double> query_relevance(const SentenceWordMatrix& a0);

/// Query-biased TextRank: fixed point of p = d M^T p + (1 - d) v, where M is
/// `w_docs` row-normalised and v = r_t rel/sum(rel) + (1 - r_t) uniform.
/// Rows without edges spread their mass along v. Returns the last iterate
/// with converged = false if max_iter is hit.
RankVector textrank_scores(const Eigen::MatrixXd& w_docs, std::span<const double> query_rel,
                           double damping, double r_t, const SolverOptions& options = {});

/// S = D^-1/2 W D^-1/2 with zero-degree rows and columns left zero.
Eigen::MatrixXd normalized_affinity(const Eigen::MatrixXd& w);

/// Manifold ranking by iterating f = alpha S f + (1 - alpha) y from f = y.
/// Throws InvalidAlpha unless 0 < alpha < 1.
RankVector manifold_rank(const Eigen::MatrixXd& w, std::span<const double> y, double alpha,
                         const SolverOptions& options = {});

inline RankVector manifold_rank(const SimilarityGraph& graph, std::span<const double> y,
                                double alpha, const SolverOptions& options = {}) {
  return manifold_rank(graph.w, y, alpha, options);
}

/// Closed form (1 - alpha)(I - alpha S)^-1 y by LU factorisation.
std::vector<double> manifold_rank_closed_form(const Eigen::MatrixXd& w, std::span<const double> y,
                                              double alpha);

}  // namespace maniquery
