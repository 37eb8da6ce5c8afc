#include "gfwsn/connection.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gfwsn {

namespace {

Eigen::MatrixXd zero_like(const Topology& t) { return Eigen::MatrixXd::Zero(t.n, t.n); }

// Per-row probability used when a single value has to stand in for the
// whole row (diagonal scaling): the common row value if equalized,
// otherwise the mean over supported entries. Rows without support get 1.
Eigen::VectorXd row_probability(const ConnectionMatrix& p) {
  const auto n = p.entries.rows();
  Eigen::VectorXd r = Eigen::VectorXd::Ones(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double sum = 0.0;
    int count = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      double v = p.entries(i, j);
      if (v > 0.0) {
        sum += v;
        ++count;
      }
    }
    if (count > 0) r(i) = sum / count;
  }
  return r;
}

}  // namespace

ConnectionMatrix uniform_connection(const Topology& topology, double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("uniform_connection: p must be in [0, 1]");
  ConnectionMatrix c;
  c.entries = zero_like(topology);
  for (const auto& [i, j] : topology.edges) c.entries(i, j) = p;
  c.row_equalized = true;
  return c;
}

ConnectionMatrix random_connection(const Topology& topology, RngStream& rng) {
  ConnectionMatrix c;
  c.entries = zero_like(topology);
  for (const auto& [i, j] : topology.edges) c.entries(i, j) = 1.0 - rng.uniform();  // (0, 1]
  c.row_equalized = false;
  return c;
}

ConnectionMatrix connection_from_matrix(Eigen::MatrixXd entries, bool row_equalized) {
  if (entries.rows() != entries.cols())
    throw std::invalid_argument("connection_from_matrix: matrix must be square");
  for (Eigen::Index i = 0; i < entries.rows(); ++i) {
    if (entries(i, i) != 0.0)
      throw std::invalid_argument("connection_from_matrix: diagonal must be zero");
    for (Eigen::Index j = 0; j < entries.cols(); ++j) {
      double v = entries(i, j);
      if (!(v >= 0.0 && v <= 1.0))
        throw std::invalid_argument("connection_from_matrix: entries must lie in [0, 1]");
    }
  }
  ConnectionMatrix c;
  c.entries = std::move(entries);
  c.row_equalized = row_equalized;
  return c;
}

ConnectionMatrix equalize_rows(const ConnectionMatrix& p) {
  ConnectionMatrix q;
  q.entries = p.entries;
  const auto n = q.entries.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    double row_min = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < n; ++j)
      if (q.entries(i, j) > 0.0) row_min = std::min(row_min, q.entries(i, j));
    if (!std::isfinite(row_min)) continue;  // no supported entries in this row
    for (Eigen::Index j = 0; j < n; ++j)
      if (q.entries(i, j) > 0.0) q.entries(i, j) = row_min;
  }
  q.row_equalized = true;
  return q;
}

Eigen::MatrixXd expected_shift(const ShiftOperator& s, const ConnectionMatrix& p,
                               DiagonalSemantics diag) {
  const auto n = s.matrix.rows();
  if (p.entries.rows() != n)
    throw std::invalid_argument("expected_shift: dimension mismatch");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (i != j && p.entries(i, j) > 0.0 && s.matrix(i, j) == 0.0)
        throw std::invalid_argument("expected_shift: probability support not contained in shift support");

  if (diag == DiagonalSemantics::ScaledDiagonal) {
    Eigen::MatrixXd out = p.entries.cwiseProduct(s.matrix);
    out.diagonal() = row_probability(p).cwiseProduct(s.matrix.diagonal());
    return out;
  }

  switch (s.kind) {
    case ShiftKind::Adjacency:
      return p.entries.cwiseProduct(s.matrix);
    case ShiftKind::DirectedLaplacian: {
      Eigen::MatrixXd ea = p.entries;  // adjacency support carries probability mass
      Eigen::MatrixXd out = -ea;
      out.diagonal() = ea.rowwise().sum();
      return out;
    }
    case ShiftKind::NormalizedShifted: {
      Eigen::MatrixXd el = -p.entries;
      el.diagonal() = p.entries.rowwise().sum();
      return el / s.lambda_max -
             0.5 * Eigen::MatrixXd::Identity(n, n);
    }
  }
  throw std::logic_error("expected_shift: unknown shift kind");
}

LinkSampler::LinkSampler(const ShiftOperator& s, const ConnectionMatrix& p, DiagonalSemantics diag)
    : kind_(s.kind), lambda_max_(s.lambda_max), n_(static_cast<int>(s.matrix.rows())), diag_(diag) {
  if (p.entries.rows() != s.matrix.rows())
    throw std::invalid_argument("LinkSampler: dimension mismatch");
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (i == j) continue;
      double prob = p.entries(i, j);
      if (prob > 0.0) {
        if (s.matrix(i, j) == 0.0)
          throw std::invalid_argument("LinkSampler: probability support not contained in shift support");
        links_.emplace_back(i, j, prob);
      }
    }
  }
  if (diag_ == DiagonalSemantics::ScaledDiagonal) {
    base_diagonal_ = s.matrix.diagonal();
    diagonal_prob_ = row_probability(p);
  }
}

void LinkSampler::sample_shift_into(RngStream& rng, Eigen::MatrixXd& shift_out,
                                    std::vector<std::pair<int, int>>* active_links) const {
  shift_out.setZero(n_, n_);
  if (active_links) active_links->clear();
  const double off_value = (kind_ == ShiftKind::Adjacency) ? 1.0 : -1.0;
  for (const auto& [i, j, prob] : links_) {
    if (rng.uniform() < prob) {
      shift_out(i, j) = off_value;
      if (active_links) active_links->emplace_back(i, j);
    }
  }
  if (diag_ == DiagonalSemantics::ScaledDiagonal) {
    if (kind_ != ShiftKind::Adjacency) {
      if (kind_ == ShiftKind::NormalizedShifted) shift_out /= lambda_max_;
      for (int i = 0; i < n_; ++i)
        shift_out(i, i) = (rng.uniform() < diagonal_prob_(i)) ? base_diagonal_(i) : 0.0;
    }
    return;
  }
  switch (kind_) {
    case ShiftKind::Adjacency:
      break;
    case ShiftKind::DirectedLaplacian:
      shift_out.diagonal() = -shift_out.rowwise().sum();
      break;
    case ShiftKind::NormalizedShifted:
      shift_out.diagonal() = -shift_out.rowwise().sum();
      shift_out /= lambda_max_;
      shift_out.diagonal().array() -= 0.5;
      break;
  }
}

Realization LinkSampler::sample(RngStream& rng) const {
  Realization r;
  sample_shift_into(rng, r.shift_t, &r.active_links);
  return r;
}

Realization sample_realization(const ShiftOperator& s, const ConnectionMatrix& p, RngStream& rng,
                               DiagonalSemantics diag) {
  return LinkSampler(s, p, diag).sample(rng);
}

}  // namespace gfwsn
