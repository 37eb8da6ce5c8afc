#include "gfwsn/topology.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "gfwsn/rng.hpp"

namespace gfwsn {

namespace {

void build_edges(Topology& t) {
  t.edges.clear();
  t.neighbors.assign(t.n, {});
  for (int i = 0; i < t.n; ++i) {
    for (int j = i + 1; j < t.n; ++j) {
      if (t.distance(i, j) <= t.r_broadcast) {
        t.neighbors[i].push_back(j);
        t.neighbors[j].push_back(i);
      }
    }
  }
  for (int i = 0; i < t.n; ++i)
    for (int j : t.neighbors[i]) t.edges.emplace_back(i, j);
}

}  // namespace

bool Topology::has_edge(int i, int j) const {
  const auto& nb = neighbors[i];
  return std::binary_search(nb.begin(), nb.end(), j);
}

Topology generate_topology(int n, double side_len, double r_broadcast, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("generate_topology: n must be >= 2");
  if (side_len <= 0.0) throw std::invalid_argument("generate_topology: side_len must be > 0");
  if (r_broadcast <= 0.0) throw std::invalid_argument("generate_topology: r_broadcast must be > 0");
  RngStream rng(seed);
  std::vector<Eigen::Vector2d> pos(n);
  for (int i = 0; i < n; ++i) {
    double x = side_len * rng.uniform();
    double y = side_len * rng.uniform();
    pos[i] = {x, y};
  }
  return topology_from_positions(std::move(pos), side_len, r_broadcast);
}

Topology grid_topology(int rows, int cols, double spacing, double r_broadcast) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("grid_topology: rows and cols must be >= 1");
  if (spacing <= 0.0) throw std::invalid_argument("grid_topology: spacing must be > 0");
  std::vector<Eigen::Vector2d> pos;
  pos.reserve(static_cast<std::size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) pos.emplace_back(c * spacing, r * spacing);
  double side = spacing * std::max(rows - 1, cols - 1);
  return topology_from_positions(std::move(pos), std::max(side, spacing), r_broadcast);
}

Topology topology_from_positions(std::vector<Eigen::Vector2d> positions, double side_len,
                                 double r_broadcast) {
  Topology t;
  t.n = static_cast<int>(positions.size());
  t.positions = std::move(positions);
  t.side_len = side_len;
  t.r_broadcast = r_broadcast;
  build_edges(t);
  return t;
}

bool check_connectivity(const Topology& topology) {
  if (topology.n <= 1) return true;
  std::vector<char> seen(topology.n, 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop();
    for (int v : topology.neighbors[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        frontier.push(v);
      }
    }
  }
  return reached == topology.n;
}

void save_topology(const Topology& topology, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_topology: cannot open " + path);
  char buf[128];
  std::snprintf(buf, sizeof buf, "# side_len=%.17g r_broadcast=%.17g\n", topology.side_len,
                topology.r_broadcast);
  out << buf;
  for (int i = 0; i < topology.n; ++i) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", i, topology.positions[i].x(),
                  topology.positions[i].y());
    out << buf;
  }
  if (!out) throw std::runtime_error("save_topology: write failed for " + path);
}

Topology load_topology(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_topology: cannot open " + path);
  std::string header;
  std::getline(in, header);
  double side_len = 0.0, r_broadcast = 0.0;
  if (std::sscanf(header.c_str(), "# side_len=%lg r_broadcast=%lg", &side_len, &r_broadcast) != 2)
    throw std::runtime_error("load_topology: bad header in " + path);
  std::vector<Eigen::Vector2d> pos;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    int id = 0;
    double x = 0.0, y = 0.0;
    if (std::sscanf(line.c_str(), "%d,%lg,%lg", &id, &x, &y) != 3)
      throw std::runtime_error("load_topology: bad node line: " + line);
    if (id != static_cast<int>(pos.size()))
      throw std::runtime_error("load_topology: node ids must be consecutive from 0");
    pos.emplace_back(x, y);
  }
  return topology_from_positions(std::move(pos), side_len, r_broadcast);
}

}  // namespace gfwsn
