#include "walklab/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

namespace walklab {

namespace {

void append_edge_line(std::string& out, const Edge& e) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%d %d %.17g\n", e.u, e.v, e.w);
  out += buf;
}

}  // namespace

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges,
                             std::vector<int> truncation_boundary, int center)
    : n_(n), edges_(std::move(edges)), boundary_(std::move(truncation_boundary)),
      center_(center) {
  if (n_ <= 0)
    throw GraphError(GraphError::Kind::Parse, "graph has no vertices");

  for (auto& e : edges_) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw GraphError(GraphError::Kind::BadVertex, "edge endpoint out of range");
    if (e.u == e.v)
      throw GraphError(GraphError::Kind::SelfLoop,
                       "self-loop at vertex " + std::to_string(e.u));
    if (!(e.w > 0.0) || !std::isfinite(e.w))
      throw GraphError(GraphError::Kind::BadWeight,
                       "nonpositive weight on edge " + std::to_string(e.u) +
                           "-" + std::to_string(e.v));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
      throw GraphError(GraphError::Kind::DuplicateEdge,
                       "duplicate edge " + std::to_string(edges_[i].u) + "-" +
                           std::to_string(edges_[i].v));

  offsets_.assign(n_ + 1, 0);
  for (const auto& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (int v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
  adj_.resize(edges_.size() * 2);
  std::vector<int> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges_) {
    adj_[cursor[e.u]++] = {e.v, e.w};
    adj_[cursor[e.v]++] = {e.u, e.w};
  }

  mu_.assign(n_, 0.0);
  for (int v = 0; v < n_; ++v) {
    double s = 0.0;
    for (const auto& nb : neighbors(v)) s += nb.w;
    mu_[v] = s;
    total_measure_ += s;
  }

  // connectivity (isolated vertices have mu 0 and are unreachable)
  std::vector<std::uint8_t> seen(n_, 0);
  std::deque<int> q{0};
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (const auto& nb : neighbors(v))
      if (!seen[nb.to]) {
        seen[nb.to] = 1;
        ++reached;
        q.push_back(nb.to);
      }
  }
  if (reached != n_)
    throw GraphError(GraphError::Kind::Disconnected,
                     "graph is disconnected (" + std::to_string(reached) +
                         " of " + std::to_string(n_) + " vertices reachable)");

  std::sort(boundary_.begin(), boundary_.end());
  boundary_.erase(std::unique(boundary_.begin(), boundary_.end()),
                  boundary_.end());
  for (int b : boundary_) check_vertex(b);
  check_vertex(center_);
}

WeightedGraph WeightedGraph::parse(std::string_view text) {
  std::vector<Edge> raw;                 // in original id space
  std::vector<long> order;               // original ids by first appearance
  std::unordered_map<long, int> compact;  // original id -> dense id
  std::vector<long> boundary_raw;
  long center_raw = -1;
  bool have_center = false;

  auto intern = [&](long id) {
    auto it = compact.find(id);
    if (it != compact.end()) return it->second;
    int dense = static_cast<int>(order.size());
    compact.emplace(id, dense);
    order.push_back(id);
    return dense;
  };

  int lineno = 0;
  size_t pos = 0;
  std::vector<Edge> edges;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;

    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) continue;
    line.remove_prefix(b);
    if (line.back() == '\r') line.remove_suffix(1);

    if (line[0] == '#') {
      // metadata comments emitted by the writer; other comments are ignored
      std::istringstream is{std::string(line.substr(1))};
      std::string tag;
      is >> tag;
      if (tag == "boundary:") {
        long id;
        while (is >> id) boundary_raw.push_back(id);
      } else if (tag == "center:") {
        if (is >> center_raw) have_center = true;
      }
      continue;
    }

    std::istringstream is{std::string(line)};
    long u, v;
    double w;
    if (!(is >> u >> v >> w)) {
      throw GraphError(GraphError::Kind::Parse,
                       "line " + std::to_string(lineno) +
                           ": expected 'u v w' with integer ids and a weight",
                       lineno);
    }
    std::string trailing;
    if (is >> trailing)
      throw GraphError(GraphError::Kind::Parse,
                       "line " + std::to_string(lineno) +
                           ": trailing content '" + trailing + "'",
                       lineno);
    if (u == v)
      throw GraphError(GraphError::Kind::SelfLoop,
                       "line " + std::to_string(lineno) + ": self-loop at " +
                           std::to_string(u),
                       lineno);
    if (!(w > 0.0) || !std::isfinite(w))
      throw GraphError(GraphError::Kind::BadWeight,
                       "line " + std::to_string(lineno) +
                           ": weight must be a positive finite number",
                       lineno);
    int du = intern(u), dv = intern(v);
    edges.push_back({du, dv, w});
  }
  if (edges.empty())
    throw GraphError(GraphError::Kind::Parse, "no edges in input");

  // duplicate detection before canonicalization so "1 0" after "0 1" names
  // the offending line semantics (symmetry violation)
  {
    std::map<std::pair<int, int>, int> seen;
    for (const auto& e : edges) {
      auto key = std::minmax(e.u, e.v);
      if (!seen.emplace(std::make_pair(key.first, key.second), 1).second)
        throw GraphError(GraphError::Kind::DuplicateEdge,
                         "duplicate or asymmetric edge between input ids " +
                             std::to_string(order[e.u]) + " and " +
                             std::to_string(order[e.v]));
    }
  }

  std::vector<int> boundary;
  for (long id : boundary_raw) {
    auto it = compact.find(id);
    if (it == compact.end())
      throw GraphError(GraphError::Kind::BadVertex,
                       "boundary comment names unknown vertex " +
                           std::to_string(id));
    boundary.push_back(it->second);
  }
  int center = 0;
  if (have_center) {
    auto it = compact.find(center_raw);
    if (it == compact.end())
      throw GraphError(GraphError::Kind::BadVertex,
                       "center comment names unknown vertex " +
                           std::to_string(center_raw));
    center = it->second;
  }

  return WeightedGraph(static_cast<int>(order.size()), std::move(edges),
                       std::move(boundary), center);
}

WeightedGraph WeightedGraph::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw GraphError(GraphError::Kind::Parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string WeightedGraph::serialize() const {
  std::string out;
  out.reserve(edges_.size() * 16 + 64);
  if (center_ != 0 || !boundary_.empty()) {
    out += "# center: " + std::to_string(center_) + "\n";
  }
  if (!boundary_.empty()) {
    out += "# boundary:";
    for (int b : boundary_) out += " " + std::to_string(b);
    out += "\n";
  }
  for (const auto& e : edges_) append_edge_line(out, e);
  return out;
}

void WeightedGraph::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw GraphError(GraphError::Kind::Parse, "cannot write '" + path + "'");
  out << serialize();
}

std::uint64_t WeightedGraph::content_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : serialize()) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

VertexSet::VertexSet(int universe, std::vector<int> members)
    : universe_(universe), members_(std::move(members)), mask_(universe, 0) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
  for (int v : members_) {
    if (v < 0 || v >= universe_)
      throw GraphError(GraphError::Kind::BadVertex,
                       "vertex set member out of range");
    mask_[v] = 1;
  }
}

VertexSet VertexSet::full(int universe) {
  std::vector<int> all(universe);
  for (int i = 0; i < universe; ++i) all[i] = i;
  return VertexSet(universe, std::move(all));
}

std::vector<int> bfs_distances(const WeightedGraph& g, int src, int cap) {
  g.check_vertex(src);
  std::vector<int> dist(g.n(), -1);
  std::deque<int> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    if (cap >= 0 && dist[v] >= cap) continue;
    for (const auto& nb : g.neighbors(v))
      if (dist[nb.to] < 0) {
        dist[nb.to] = dist[v] + 1;
        q.push_back(nb.to);
      }
  }
  return dist;
}

int distance(const WeightedGraph& g, int x, int y) {
  g.check_vertex(x);
  g.check_vertex(y);
  if (x == y) return 0;
  auto d = bfs_distances(g, x);
  return d[y];  // connected by construction
}

int eccentricity(const WeightedGraph& g, int x) {
  auto d = bfs_distances(g, x);
  return *std::max_element(d.begin(), d.end());
}

int int_ball_radius(double R) {
  if (R <= 0) return 0;
  double c = std::ceil(R);
  return static_cast<int>(c == R ? R : c);
}

VertexSet ball(const WeightedGraph& g, int x, double R) {
  g.check_vertex(x);
  int re = int_ball_radius(R);
  std::vector<int> members;
  if (re > 0) {
    auto d = bfs_distances(g, x, re - 1);
    for (int v = 0; v < g.n(); ++v)
      if (d[v] >= 0 && d[v] <= re - 1) members.push_back(v);
  }
  VertexSet s(g.n(), std::move(members));
  s.center = x;
  s.radius = R;
  return s;
}

VertexSet sphere(const WeightedGraph& g, int x, int r) {
  g.check_vertex(x);
  auto d = bfs_distances(g, x, r);
  std::vector<int> members;
  for (int v = 0; v < g.n(); ++v)
    if (d[v] == r) members.push_back(v);
  VertexSet s(g.n(), std::move(members));
  s.center = x;
  s.radius = r;
  return s;
}

VertexSet closure_of(const WeightedGraph& g, const VertexSet& a) {
  std::vector<int> members = a.members();
  for (int v : a.members())
    for (const auto& nb : g.neighbors(v))
      if (!a.contains(nb.to)) members.push_back(nb.to);
  return VertexSet(g.n(), std::move(members));
}

VertexSet boundary_of(const WeightedGraph& g, const VertexSet& a) {
  std::vector<int> members;
  std::vector<std::uint8_t> added(g.n(), 0);
  for (int v : a.members())
    for (const auto& nb : g.neighbors(v))
      if (!a.contains(nb.to) && !added[nb.to]) {
        added[nb.to] = 1;
        members.push_back(nb.to);
      }
  return VertexSet(g.n(), std::move(members));
}

VertexSet complement_of(const WeightedGraph& g, const VertexSet& a) {
  std::vector<int> members;
  for (int v = 0; v < g.n(); ++v)
    if (!a.contains(v)) members.push_back(v);
  return VertexSet(g.n(), std::move(members));
}

MetricSets metric_sets(const WeightedGraph& g, int x, double R) {
  MetricSets out;
  out.ball = ball(g, x, R);
  out.sphere = sphere(g, x, static_cast<int>(std::floor(R)));
  out.closure = closure_of(g, out.ball);
  std::vector<int> bd;
  for (int v : out.closure.members())
    if (!out.ball.contains(v)) bd.push_back(v);
  out.boundary = VertexSet(g.n(), std::move(bd));
  return out;
}

double volume(const WeightedGraph& g, int x, double R) {
  double s = 0.0;
  for (int v : ball(g, x, R).members()) s += g.mu(v);
  return s;
}

VertexSet shortest_path_union(const WeightedGraph& g, int x, int y) {
  g.check_vertex(x);
  g.check_vertex(y);
  auto dx = bfs_distances(g, x);
  auto dy = bfs_distances(g, y);
  int d = dx[y];
  std::vector<int> members;
  for (int v = 0; v < g.n(); ++v)
    if (dx[v] >= 0 && dy[v] >= 0 && dx[v] + dy[v] == d) members.push_back(v);
  return VertexSet(g.n(), std::move(members));
}

double p0_check(const WeightedGraph& g) {
  double p0 = 1.0;
  for (int v = 0; v < g.n(); ++v)
    for (const auto& nb : g.neighbors(v)) p0 = std::min(p0, nb.w / g.mu(v));
  return p0;
}

bool interior_valid(const WeightedGraph& g, int x, double R, double factor) {
  if (!g.truncated()) return true;
  auto b = ball(g, x, factor * R);
  for (int v : g.truncation_boundary())
    if (b.contains(v)) return false;
  return true;
}

}  // namespace walklab
