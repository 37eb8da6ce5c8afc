#pragma once

#include <Eigen/Core>

#include "gfwsn/topology.hpp"

namespace gfwsn {

enum class ShiftKind {
  Adjacency,          // S = A
  DirectedLaplacian,  // S = D - A, diagonal = out-degree
  NormalizedShifted,  // S = L / lambda_max - 0.5 I
};

/// Graph shift operator: entry (i, j) can be nonzero only on the diagonal
/// or when the directed edge (i, j) exists. Row i corresponds to the
/// links going out of node i.
struct ShiftOperator {
  ShiftKind kind = ShiftKind::Adjacency;
  Eigen::MatrixXd matrix;
  double lambda_max = 0.0;  // populated for NormalizedShifted only
};

/// Builds the requested shift from the topology. NormalizedShifted needs a
/// Laplacian eigen-solve; its failure is reported as a runtime error.
ShiftOperator build_shift(const Topology& topology, ShiftKind kind);

}  // namespace gfwsn
