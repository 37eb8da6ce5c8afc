#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gfwsn {

/// Node deployment over a square area plus the directed edge set induced
/// by the broadcast range. Geometry is deterministic: an edge (i, j)
/// exists iff the Euclidean distance d(i, j) <= r_broadcast and i != j,
/// so the edge set is symmetric as a set of pairs even though link
/// activation probabilities need not be.
struct Topology {
  int n = 0;
  std::vector<Eigen::Vector2d> positions;
  double side_len = 0.0;
  double r_broadcast = 0.0;
  std::vector<std::pair<int, int>> edges;          // directed, sorted
  std::vector<std::vector<int>> neighbors;         // per node, ascending

  double distance(int i, int j) const { return (positions[i] - positions[j]).norm(); }
  bool has_edge(int i, int j) const;
};

/// Uniform i.i.d. deployment of n nodes over [0, side_len]^2.
/// Reproducible: identical inputs and seed give an identical topology.
Topology generate_topology(int n, double side_len, double r_broadcast, std::uint64_t seed);

/// rows x cols lattice with the given spacing; same distance rule.
Topology grid_topology(int rows, int cols, double spacing, double r_broadcast);

/// Explicit positions (regression geometries, file input).
Topology topology_from_positions(std::vector<Eigen::Vector2d> positions, double side_len,
                                 double r_broadcast);

/// True iff the undirected reachability graph on the edge set is connected.
bool check_connectivity(const Topology& topology);

/// Plain-text round trip: header `# side_len=<v> r_broadcast=<v>`, then one
/// `id,x,y` line per node. Doubles are printed with full precision so
/// save/load is bit-exact.
void save_topology(const Topology& topology, const std::string& path);
Topology load_topology(const std::string& path);

}  // namespace gfwsn
