#pragma once

#include <Eigen/Core>
#include <tuple>
#include <vector>

#include "gfwsn/rng.hpp"
#include "gfwsn/shift.hpp"
#include "gfwsn/topology.hpp"

namespace gfwsn {

/// Per-directed-link Bernoulli activation probabilities. Entry (i, j) is
/// the probability that the link from i to j fires; the diagonal is kept
/// at zero and nonzero entries must sit on the topology's edge set.
struct ConnectionMatrix {
  Eigen::MatrixXd entries;
  bool row_equalized = false;
};

ConnectionMatrix uniform_connection(const Topology& topology, double p);

/// Independent entries uniform in (0, 1], one per directed edge.
ConnectionMatrix random_connection(const Topology& topology, RngStream& rng);

/// Validates value range [0, 1] and a zero diagonal.
ConnectionMatrix connection_from_matrix(Eigen::MatrixXd entries, bool row_equalized = false);

/// Sets every supported entry of row i to the minimum nonzero entry of
/// row i. Idempotent; never increases an entry.
ConnectionMatrix equalize_rows(const ConnectionMatrix& p);

/// How probabilities act on structured diagonals (degree terms, affine
/// offsets). DeterministicDiagonal keeps them fixed and lets randomness
/// enter through the links alone, so the expected shift is the exact mean
/// of the sampled realizations for every kind. ScaledDiagonal instead
/// applies a per-row probability to the diagonal entry itself (the
/// literal entrywise-product reading).
enum class DiagonalSemantics { DeterministicDiagonal, ScaledDiagonal };

/// Exact expectation of sample_realization's shift matrix.
Eigen::MatrixXd expected_shift(const ShiftOperator& s, const ConnectionMatrix& p,
                               DiagonalSemantics diag = DiagonalSemantics::DeterministicDiagonal);

/// One time-varying graph realization: the surviving directed links and
/// the shift matrix rebuilt from them with the base kind's construction.
struct Realization {
  std::vector<std::pair<int, int>> active_links;
  Eigen::MatrixXd shift_t;
};

/// Precomputed sampler for repeated i.i.d. realization draws.
class LinkSampler {
 public:
  LinkSampler(const ShiftOperator& s, const ConnectionMatrix& p,
              DiagonalSemantics diag = DiagonalSemantics::DeterministicDiagonal);

  Realization sample(RngStream& rng) const;

  /// Fast path: writes the realized shift into shift_out (resized as
  /// needed); the link list is only collected when requested.
  void sample_shift_into(RngStream& rng, Eigen::MatrixXd& shift_out,
                         std::vector<std::pair<int, int>>* active_links = nullptr) const;

  int node_count() const { return n_; }

 private:
  ShiftKind kind_;
  double lambda_max_ = 0.0;
  int n_ = 0;
  DiagonalSemantics diag_;
  std::vector<std::tuple<int, int, double>> links_;  // (from, to, prob), fixed order
  Eigen::VectorXd base_diagonal_;                    // ScaledDiagonal only
  Eigen::VectorXd diagonal_prob_;                    // ScaledDiagonal only
};

Realization sample_realization(const ShiftOperator& s, const ConnectionMatrix& p, RngStream& rng,
                               DiagonalSemantics diag = DiagonalSemantics::DeterministicDiagonal);

}  // namespace gfwsn
