#include "gfwsn/shift.hpp"

#include <Eigen/Eigenvalues>
#include <stdexcept>

namespace gfwsn {

namespace {

Eigen::MatrixXd adjacency_of(const Topology& t) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(t.n, t.n);
  for (const auto& [i, j] : t.edges) a(i, j) = 1.0;
  return a;
}

Eigen::MatrixXd laplacian_of(const Eigen::MatrixXd& a) {
  Eigen::MatrixXd l = -a;
  l.diagonal() = a.rowwise().sum();
  return l;
}

}  // namespace

ShiftOperator build_shift(const Topology& topology, ShiftKind kind) {
  ShiftOperator s;
  s.kind = kind;
  Eigen::MatrixXd a = adjacency_of(topology);
  switch (kind) {
    case ShiftKind::Adjacency:
      s.matrix = a;
      break;
    case ShiftKind::DirectedLaplacian:
      s.matrix = laplacian_of(a);
      break;
    case ShiftKind::NormalizedShifted: {
      Eigen::MatrixXd l = laplacian_of(a);
      // geometric edge sets are symmetric, so L is too
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(l, Eigen::EigenvaluesOnly);
      if (solver.info() != Eigen::Success)
        throw std::runtime_error("build_shift: Laplacian eigen-solve failed");
      double lmax = solver.eigenvalues().maxCoeff();
      if (!(lmax > 0.0))
        throw std::runtime_error("build_shift: lambda_max must be positive (graph has no edges)");
      s.lambda_max = lmax;
      s.matrix = l / lmax - 0.5 * Eigen::MatrixXd::Identity(topology.n, topology.n);
      break;
    }
  }
  return s;
}

}  // namespace gfwsn
