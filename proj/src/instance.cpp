#include "marp/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "marp/errors.hpp"
#include "marp/format.hpp"
#include "marp/rng.hpp"

namespace marp {

namespace {

constexpr std::uint64_t kVehicleStream = 0x76656863;  // OD sampling substream

std::uint64_t edge_key(int u, int v) {
  const auto a = static_cast<std::uint64_t>(std::min(u, v));
  const auto b = static_cast<std::uint64_t>(std::max(u, v));
  return (a << 32) | b;
}

struct Adjacency {
  std::vector<int> offsets;
  std::vector<int> to;
  std::vector<double> length;

  explicit Adjacency(const RoadNetwork& net) {
    const int n = net.node_count();
    std::vector<int> deg(n, 0);
    for (const auto& e : net.edges) {
      ++deg[e.u];
      ++deg[e.v];
    }
    offsets.assign(n + 1, 0);
    for (int i = 0; i < n; ++i) offsets[i + 1] = offsets[i] + deg[i];
    to.resize(offsets[n]);
    length.resize(offsets[n]);
    std::vector<int> cur(offsets.begin(), offsets.end() - 1);
    for (const auto& e : net.edges) {
      to[cur[e.u]] = e.v;
      length[cur[e.u]++] = e.length;
      to[cur[e.v]] = e.u;
      length[cur[e.v]++] = e.length;
    }
    // sorted neighbor order makes the lexicographic path walk a plain scan
    for (int i = 0; i < n; ++i) {
      std::vector<std::pair<int, double>> nb;
      nb.reserve(offsets[i + 1] - offsets[i]);
      for (int k = offsets[i]; k < offsets[i + 1]; ++k) nb.emplace_back(to[k], length[k]);
      std::sort(nb.begin(), nb.end());
      for (int k = offsets[i]; k < offsets[i + 1]; ++k) {
        to[k] = nb[k - offsets[i]].first;
        length[k] = nb[k - offsets[i]].second;
      }
    }
  }
};

std::vector<double> dijkstra_from(const RoadNetwork& net, const Adjacency& adj, int src) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(net.node_count(), inf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[src] = 0.0;
  heap.emplace(0.0, src);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    for (int k = adj.offsets[u]; k < adj.offsets[u + 1]; ++k) {
      const int v = adj.to[k];
      const double nd = d + adj.length[k];
      if (nd < dist[v]) {
        dist[v] = nd;
        heap.emplace(nd, v);
      }
    }
  }
  return dist;
}

// Walks from `from` toward `to`, always taking the smallest-id neighbor that
// stays on a shortest path (so the node sequence is lexicographically
// minimal among all shortest paths).
std::vector<int> lex_shortest_path(const RoadNetwork& net, const Adjacency& adj,
                                   const std::vector<double>& dist_to_target,
                                   int from, int to) {
  if (std::isinf(dist_to_target[from]))
    fail(ErrorKind::no_path, "no path between nodes " + std::to_string(from) +
                                 " and " + std::to_string(to));
  std::vector<int> path{from};
  std::vector<char> visited(net.node_count(), 0);
  visited[from] = 1;
  int u = from;
  while (u != to) {
    const double du = dist_to_target[u];
    const double eps = 1e-9 * (1.0 + du);
    int next = -1;
    for (int k = adj.offsets[u]; k < adj.offsets[u + 1]; ++k) {
      const int v = adj.to[k];
      if (visited[v]) continue;
      if (std::abs(adj.length[k] + dist_to_target[v] - du) <= eps) {
        next = v;
        break;  // neighbors are sorted ascending
      }
    }
    if (next < 0)
      fail(ErrorKind::no_path, "shortest-path walk stalled at node " + std::to_string(u));
    visited[next] = 1;
    path.push_back(next);
    u = next;
  }
  return path;
}

RoadNetwork generate_grid(int k, std::uint64_t seed) {
  RoadNetwork net;
  Rng rng(seed);
  net.nodes.reserve(static_cast<std::size_t>(k) * k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c)
      net.nodes.push_back({r * k + c, static_cast<double>(c), static_cast<double>(r)});
  net.edges.reserve(static_cast<std::size_t>(2) * k * (k - 1));
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) {
      const int id = r * k + c;
      if (c + 1 < k)
        net.edges.push_back({id, id + 1, canonical9(1.0 + rng.uniform(-0.1, 0.1))});
      if (r + 1 < k)
        net.edges.push_back({id, id + k, canonical9(1.0 + rng.uniform(-0.1, 0.1))});
    }
  }
  return net;
}

bool connected_at_radius(const std::vector<NetworkNode>& nodes, double radius) {
  const int n = static_cast<int>(nodes.size());
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  const double r2 = radius * radius;
  int components = n;
  for (int i = 0; i < n && components > 1; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double dx = nodes[i].x - nodes[j].x;
      const double dy = nodes[i].y - nodes[j].y;
      if (dx * dx + dy * dy <= r2) {
        const int a = find(i), b = find(j);
        if (a != b) {
          parent[a] = b;
          --components;
        }
      }
    }
  }
  return components == 1;
}

RoadNetwork generate_random_geometric(int n, std::uint64_t seed) {
  RoadNetwork net;
  Rng rng(seed);
  net.nodes.reserve(n);
  for (int i = 0; i < n; ++i)
    net.nodes.push_back({i, canonical9(rng.unit()), canonical9(rng.unit())});

  // smallest connecting radius, bisected to 1e-3 on [0, sqrt(2)]
  double lo = 0.0, hi = std::sqrt(2.0);
  while (hi - lo > 1e-3) {
    const double mid = 0.5 * (lo + hi);
    if (connected_at_radius(net.nodes, mid))
      hi = mid;
    else
      lo = mid;
  }
  const double radius = hi;
  const double r2 = radius * radius;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double dx = net.nodes[i].x - net.nodes[j].x;
      const double dy = net.nodes[i].y - net.nodes[j].y;
      const double d2 = dx * dx + dy * dy;
      if (d2 <= r2) net.edges.push_back({i, j, canonical9(std::sqrt(d2))});
    }
  }
  return net;
}

}  // namespace

RoadNetwork generate_network(NetworkKind kind, int size_param, std::uint64_t seed) {
  if (size_param < 2)
    fail(ErrorKind::invalid_parameter,
         "size_param must be >= 2, got " + std::to_string(size_param));
  return kind == NetworkKind::grid ? generate_grid(size_param, seed)
                                   : generate_random_geometric(size_param, seed);
}

std::vector<int> shortest_path(const RoadNetwork& network, int from, int to) {
  const Adjacency adj(network);
  const auto dist = dijkstra_from(network, adj, to);
  return lex_shortest_path(network, adj, dist, from, to);
}

MarpInstance generate_instance(const RoadNetwork& network, int n_vehicles,
                               std::uint64_t seed, const std::string& radius_label) {
  if (n_vehicles < 1)
    fail(ErrorKind::invalid_parameter,
         "n_vehicles must be >= 1, got " + std::to_string(n_vehicles));
  const int n = network.node_count();
  if (n < 2) fail(ErrorKind::invalid_parameter, "network needs at least 2 nodes");

  MarpInstance inst;
  inst.network = network;
  inst.seed = seed;
  inst.radius_label = radius_label;
  inst.vehicles.reserve(n_vehicles);

  const Adjacency adj(network);
  Rng rng(derive_seed(seed, kVehicleStream));
  std::vector<std::vector<double>> dist_cache(n);  // keyed by destination
  for (int v = 0; v < n_vehicles; ++v) {
    const int origin = rng.below_int(n);
    int destination = rng.below_int(n - 1);
    if (destination >= origin) ++destination;
    if (dist_cache[destination].empty())
      dist_cache[destination] = dijkstra_from(network, adj, destination);
    Vehicle veh;
    veh.id = v;
    veh.origin = origin;
    veh.destination = destination;
    veh.route = lex_shortest_path(network, adj, dist_cache[destination], origin, destination);
    inst.vehicles.push_back(std::move(veh));
  }
  return inst;
}

bool is_connected(const RoadNetwork& network) {
  const int n = network.node_count();
  if (n == 0) return false;
  const Adjacency adj(network);
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int k = adj.offsets[u]; k < adj.offsets[u + 1]; ++k) {
      const int v = adj.to[k];
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        q.push(v);
      }
    }
  }
  return reached == n;
}

void validate_instance(const MarpInstance& instance) {
  const auto& net = instance.network;
  const int n = net.node_count();
  for (int i = 0; i < n; ++i)
    if (net.nodes[i].id != i)
      fail(ErrorKind::validation,
           "node ids must be contiguous from 0; position " + std::to_string(i) +
               " holds id " + std::to_string(net.nodes[i].id));
  std::unordered_set<std::uint64_t> edge_set;
  edge_set.reserve(net.edges.size() * 2);
  for (const auto& e : net.edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      fail(ErrorKind::validation, "edge (" + std::to_string(e.u) + "," +
                                      std::to_string(e.v) + ") references a missing node");
    if (e.u == e.v)
      fail(ErrorKind::validation, "self-loop edge at node " + std::to_string(e.u));
    if (e.length < 0.0)
      fail(ErrorKind::validation, "negative length on edge (" + std::to_string(e.u) +
                                      "," + std::to_string(e.v) + ")");
    if (!edge_set.insert(edge_key(e.u, e.v)).second)
      fail(ErrorKind::validation, "duplicate edge (" + std::to_string(e.u) + "," +
                                      std::to_string(e.v) + ")");
  }
  for (int i = 0; i < instance.vehicle_count(); ++i) {
    const auto& veh = instance.vehicles[i];
    const std::string tag = "vehicle " + std::to_string(i);
    if (veh.id != i)
      fail(ErrorKind::validation, tag + ": ids must be contiguous from 0, got " +
                                      std::to_string(veh.id));
    if (veh.route.empty()) fail(ErrorKind::validation, tag + ": empty route");
    for (int node : veh.route)
      if (node < 0 || node >= n)
        fail(ErrorKind::validation,
             tag + ": route node " + std::to_string(node) + " not in network");
    if (veh.route.front() != veh.origin)
      fail(ErrorKind::validation, tag + ": route does not start at its origin");
    if (veh.route.back() != veh.destination)
      fail(ErrorKind::validation, tag + ": route does not end at its destination");
    for (std::size_t k = 0; k + 1 < veh.route.size(); ++k)
      if (!edge_set.count(edge_key(veh.route[k], veh.route[k + 1])))
        fail(ErrorKind::validation, tag + ": route nodes " +
                                        std::to_string(veh.route[k]) + " and " +
                                        std::to_string(veh.route[k + 1]) +
                                        " are not adjacent");
  }
}

// --- canonical JSON ---------------------------------------------------

std::string instance_to_json(const MarpInstance& instance) {
  std::string out;
  out.reserve(64 * instance.network.nodes.size() + 64 * instance.vehicles.size());
  out += "{\n\"seed\": " + std::to_string(instance.seed) + ",\n";
  out += "\"radius_label\": " + nlohmann::json(instance.radius_label).dump() + ",\n";
  out += "\"network\": {\"nodes\": [";
  for (std::size_t i = 0; i < instance.network.nodes.size(); ++i) {
    const auto& nd = instance.network.nodes[i];
    if (i) out += ",";
    out += "[" + std::to_string(nd.id) + "," + format_double(nd.x, 9) + "," +
           format_double(nd.y, 9) + "]";
  }
  out += "], \"edges\": [";
  for (std::size_t i = 0; i < instance.network.edges.size(); ++i) {
    const auto& e = instance.network.edges[i];
    if (i) out += ",";
    out += "[" + std::to_string(e.u) + "," + std::to_string(e.v) + "," +
           format_double(e.length, 9) + "]";
  }
  out += "]},\n\"vehicles\": [\n";
  for (std::size_t i = 0; i < instance.vehicles.size(); ++i) {
    const auto& veh = instance.vehicles[i];
    out += "{\"id\": " + std::to_string(veh.id) +
           ", \"origin\": " + std::to_string(veh.origin) +
           ", \"destination\": " + std::to_string(veh.destination) + ", \"route\": [";
    for (std::size_t k = 0; k < veh.route.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(veh.route[k]);
    }
    out += "]}";
    if (i + 1 < instance.vehicles.size()) out += ",";
    out += "\n";
  }
  out += "]}\n";
  return out;
}

void save_instance(const MarpInstance& instance, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorKind::io, "cannot open for writing: " + path);
  f << instance_to_json(instance);
  if (!f) fail(ErrorKind::io, "write failed: " + path);
}

namespace {

const nlohmann::json& require_field(const nlohmann::json& obj, const char* key,
                                    const char* where) {
  auto it = obj.find(key);
  if (it == obj.end())
    fail(ErrorKind::parse, std::string("missing field \"") + key + "\" in " + where);
  return *it;
}

int as_int(const nlohmann::json& v, const std::string& what) {
  if (!v.is_number_integer())
    fail(ErrorKind::parse, what + " must be an integer");
  return v.get<int>();
}

double as_num(const nlohmann::json& v, const std::string& what) {
  if (!v.is_number()) fail(ErrorKind::parse, what + " must be a number");
  return v.get<double>();
}

}  // namespace

MarpInstance instance_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::parse, std::string("instance json: ") + e.what());
  }
  if (!doc.is_object()) fail(ErrorKind::parse, "instance json: top level must be an object");

  MarpInstance inst;
  const auto& seed = require_field(doc, "seed", "instance");
  if (!seed.is_number_integer()) fail(ErrorKind::parse, "\"seed\" must be an integer");
  inst.seed = seed.get<std::uint64_t>();
  const auto& label = require_field(doc, "radius_label", "instance");
  if (!label.is_string()) fail(ErrorKind::parse, "\"radius_label\" must be a string");
  inst.radius_label = label.get<std::string>();

  const auto& network = require_field(doc, "network", "instance");
  if (!network.is_object()) fail(ErrorKind::parse, "\"network\" must be an object");
  const auto& nodes = require_field(network, "nodes", "network");
  if (!nodes.is_array()) fail(ErrorKind::parse, "\"network.nodes\" must be an array");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& nd = nodes[i];
    const std::string what = "network.nodes[" + std::to_string(i) + "]";
    if (!nd.is_array() || nd.size() != 3)
      fail(ErrorKind::parse, what + " must be [id, x, y]");
    inst.network.nodes.push_back(
        {as_int(nd[0], what + ".id"), as_num(nd[1], what + ".x"), as_num(nd[2], what + ".y")});
  }
  const auto& edges = require_field(network, "edges", "network");
  if (!edges.is_array()) fail(ErrorKind::parse, "\"network.edges\" must be an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    const std::string what = "network.edges[" + std::to_string(i) + "]";
    if (!e.is_array() || e.size() != 3)
      fail(ErrorKind::parse, what + " must be [u, v, length]");
    inst.network.edges.push_back(
        {as_int(e[0], what + ".u"), as_int(e[1], what + ".v"), as_num(e[2], what + ".length")});
  }

  const auto& vehicles = require_field(doc, "vehicles", "instance");
  if (!vehicles.is_array()) fail(ErrorKind::parse, "\"vehicles\" must be an array");
  for (std::size_t i = 0; i < vehicles.size(); ++i) {
    const auto& v = vehicles[i];
    const std::string what = "vehicles[" + std::to_string(i) + "]";
    if (!v.is_object()) fail(ErrorKind::parse, what + " must be an object");
    Vehicle veh;
    veh.id = as_int(require_field(v, "id", what.c_str()), what + ".id");
    veh.origin = as_int(require_field(v, "origin", what.c_str()), what + ".origin");
    veh.destination =
        as_int(require_field(v, "destination", what.c_str()), what + ".destination");
    const auto& route = require_field(v, "route", what.c_str());
    if (!route.is_array()) fail(ErrorKind::parse, what + ".route must be an array");
    for (std::size_t k = 0; k < route.size(); ++k)
      veh.route.push_back(as_int(route[k], what + ".route[" + std::to_string(k) + "]"));
    inst.vehicles.push_back(std::move(veh));
  }

  validate_instance(inst);
  return inst;
}

MarpInstance load_instance(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(ErrorKind::io, "cannot open: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return instance_from_json(ss.str());
}

bool operator==(const NetworkNode& a, const NetworkNode& b) {
  return a.id == b.id && a.x == b.x && a.y == b.y;
}
bool operator==(const NetworkEdge& a, const NetworkEdge& b) {
  return a.u == b.u && a.v == b.v && a.length == b.length;
}
bool operator==(const RoadNetwork& a, const RoadNetwork& b) {
  return a.nodes == b.nodes && a.edges == b.edges;
}
bool operator==(const Vehicle& a, const Vehicle& b) {
  return a.id == b.id && a.origin == b.origin && a.destination == b.destination &&
         a.route == b.route;
}
bool operator==(const MarpInstance& a, const MarpInstance& b) {
  return a.network == b.network && a.vehicles == b.vehicles && a.seed == b.seed &&
         a.radius_label == b.radius_label;
}

}  // namespace marp
