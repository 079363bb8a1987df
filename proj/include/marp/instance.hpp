#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace marp {

struct NetworkNode {
  int id = 0;
  double x = 0.0;
  double y = 0.0;
};

struct NetworkEdge {
  int u = 0;
  int v = 0;
  double length = 0.0;
};

// Undirected road network. Node ids are contiguous from 0; edges carry no
// self-loops and no duplicates (as undirected pairs).
struct RoadNetwork {
  std::vector<NetworkNode> nodes;
  std::vector<NetworkEdge> edges;

  int node_count() const { return static_cast<int>(nodes.size()); }
};

struct Vehicle {
  int id = 0;
  int origin = 0;
  int destination = 0;
  std::vector<int> route;  // node sequence, origin first, destination last
};

struct MarpInstance {
  RoadNetwork network;
  std::vector<Vehicle> vehicles;
  std::uint64_t seed = 0;
  std::string radius_label;

  int vehicle_count() const { return static_cast<int>(vehicles.size()); }
};

enum class NetworkKind { grid, random_geometric };

// grid: size_param x size_param lattice, unit lengths jittered +-10%.
// random_geometric: size_param nodes in the unit square, connection radius =
// smallest radius (binary search, 1e-3 tolerance) that connects the graph.
RoadNetwork generate_network(NetworkKind kind, int size_param, std::uint64_t seed);

// Samples origin != destination uniformly per vehicle and assigns the
// shortest route by edge length; among equal-length paths the
// lexicographically smallest node sequence wins.
MarpInstance generate_instance(const RoadNetwork& network, int n_vehicles,
                               std::uint64_t seed,
                               const std::string& radius_label = "");

// Lexicographically smallest shortest path between two nodes.
std::vector<int> shortest_path(const RoadNetwork& network, int from, int to);

bool is_connected(const RoadNetwork& network);

// Throws Error(validation) describing the first violated invariant.
void validate_instance(const MarpInstance& instance);

// Canonical JSON round trip (fixed field order, 9 significant digits).
void save_instance(const MarpInstance& instance, const std::string& path);
std::string instance_to_json(const MarpInstance& instance);
MarpInstance load_instance(const std::string& path);
MarpInstance instance_from_json(const std::string& text);

bool operator==(const NetworkNode& a, const NetworkNode& b);
bool operator==(const NetworkEdge& a, const NetworkEdge& b);
bool operator==(const RoadNetwork& a, const RoadNetwork& b);
bool operator==(const Vehicle& a, const Vehicle& b);
bool operator==(const MarpInstance& a, const MarpInstance& b);

}  // namespace marp
