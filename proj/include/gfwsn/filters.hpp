#pragma once

#include <Eigen/Core>
#include <span>
#include <vector>

namespace gfwsn {

enum class CoeffMode { NodeInvariant, NodeVariant };

/// FIR filter coefficients. Row l holds the lag-l coefficients: a single
/// value in node-invariant mode, one value per node in node-variant mode.
struct CoefficientSet {
  CoeffMode mode = CoeffMode::NodeInvariant;
  Eigen::MatrixXd values;  // (order+1) x 1 or (order+1) x n

  int order() const { return static_cast<int>(values.rows()) - 1; }
  int node_count() const { return static_cast<int>(values.cols()); }

  static CoefficientSet invariant(Eigen::VectorXd coeffs);
  static CoefficientSet variant(Eigen::MatrixXd coeffs);

  /// Node-invariant coefficients broadcast to n columns; node-variant
  /// sets are returned unchanged (n must match).
  CoefficientSet as_variant(int n) const;
};

/// y = sum_l h_l S^l x (or sum_l diag(h^(l)) S^l x), evaluated with the
/// shift recursion x^(l) = S x^(l-1); no explicit matrix powers.
Eigen::VectorXd apply_fir(const Eigen::MatrixXd& s, const CoefficientSet& coeffs,
                          const Eigen::VectorXd& x);

/// Dense filter matrix sum_l (coeff term) S^l. Used where the whole
/// operator is needed (bias computations).
Eigen::MatrixXd filter_matrix(const Eigen::MatrixXd& s, const CoefficientSet& coeffs);

/// One-pole recursion y_t = psi S y_{t-1} + phi x, run for `steps` steps
/// from y0. Divergence when |psi| ||S||_2 >= 1 is the caller's concern.
Eigen::VectorXd run_arma1(const Eigen::MatrixXd& s, double psi, double phi,
                          const Eigen::VectorXd& x, const Eigen::VectorXd& y0, int steps);

/// v* = (I + w S)^-1 x by linear solve; throws on a singular system.
Eigen::VectorXd tikhonov_solve(const Eigen::MatrixXd& s, double w, const Eigen::VectorXd& x);

/// Filtering across a sequence of graph realizations. realizations[0] is
/// the most recent shift: term l applies the product
/// realizations[0] * ... * realizations[l-1] to x. Exactly order()
/// matrices are required; each is applied once to a block of running
/// cascade states.
Eigen::VectorXd apply_timevarying(std::span<const Eigen::MatrixXd> realizations,
                                  const CoefficientSet& coeffs, const Eigen::VectorXd& x);

/// y-bar = sum_l (coeff term) s_bar^l x.
Eigen::VectorXd expected_output(const Eigen::MatrixXd& s_bar, const CoefficientSet& coeffs,
                                const Eigen::VectorXd& x);

}  // namespace gfwsn
