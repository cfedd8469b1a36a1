// Weighted-graph core: representation, metric operations, generators, file I/O.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace walklab {

struct GraphError : std::runtime_error {
  enum class Kind {
    Parse,
    SelfLoop,
    DuplicateEdge,
    BadWeight,
    Disconnected,
    BadVertex,
    BadFamily,
    TooLarge,
  };
  Kind kind;
  int line;  // 1-based input line, 0 when not tied to a line

  GraphError(Kind k, const std::string& msg, int l = 0)
      : std::runtime_error(msg), kind(k), line(l) {}
};

struct Edge {
  int u, v;
  double w;
};

struct Neighbor {
  int to;
  double w;
};

// Finite symmetric positively-weighted graph. Immutable after construction;
// every operation in the library is a pure function of it.
//
// Graphs that stand in for infinite ones carry truncation marks: the vertices
// where the generator cut the graph off. interior_valid() consults them.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(int n, std::vector<Edge> edges,
                std::vector<int> truncation_boundary = {}, int center = 0);

  static WeightedGraph parse(std::string_view text);
  static WeightedGraph load(const std::string& path);
  void save(const std::string& path) const;
  // Canonical edge-list document: edges sorted by (u,v), one per line.
  std::string serialize() const;
  std::uint64_t content_hash() const;  // FNV-1a over serialize()

  int n() const { return n_; }
  long m() const { return static_cast<long>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Neighbor> neighbors(int v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
  double mu(int v) const { return mu_[v]; }
  const std::vector<double>& mu() const { return mu_; }
  double total_measure() const { return total_measure_; }

  const std::vector<int>& truncation_boundary() const { return boundary_; }
  bool truncated() const { return !boundary_.empty(); }
  int center() const { return center_; }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw GraphError(GraphError::Kind::BadVertex,
                       "vertex id " + std::to_string(v) + " out of range");
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;       // canonical u < v, sorted by (u,v)
  std::vector<int> offsets_;      // CSR over n_+1
  std::vector<Neighbor> adj_;     // both directions
  std::vector<double> mu_;        // vertex measure = sum of incident weights
  double total_measure_ = 0.0;
  std::vector<int> boundary_;     // truncation marks, sorted
  int center_ = 0;
};

// Dense membership set over the vertices of one graph. Members kept sorted.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(int universe, std::vector<int> members);

  static VertexSet full(int universe);

  int universe() const { return universe_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(int v) const {
    return v >= 0 && v < universe_ && mask_[v] != 0;
  }
  const std::vector<int>& members() const { return members_; }
  const std::vector<std::uint8_t>& mask() const { return mask_; }

  std::optional<int> center;
  std::optional<double> radius;

 private:
  int universe_ = 0;
  std::vector<int> members_;
  std::vector<std::uint8_t> mask_;
};

struct MetricSets {
  VertexSet ball;      // B(x,R) = {d < R}, strict
  VertexSet sphere;    // S(x,floor(R))
  VertexSet closure;   // ball plus its neighbors
  VertexSet boundary;  // closure minus ball
};

// BFS distances from src; -1 for vertices beyond cap (cap < 0 = unbounded).
std::vector<int> bfs_distances(const WeightedGraph& g, int src, int cap = -1);
int distance(const WeightedGraph& g, int x, int y);
int eccentricity(const WeightedGraph& g, int x);

// {d < R} equals {d <= int_ball_radius(R) - 1}; radii may be fractional.
int int_ball_radius(double R);

VertexSet ball(const WeightedGraph& g, int x, double R);
VertexSet sphere(const WeightedGraph& g, int x, int r);
MetricSets metric_sets(const WeightedGraph& g, int x, double R);
double volume(const WeightedGraph& g, int x, double R);

VertexSet closure_of(const WeightedGraph& g, const VertexSet& a);
VertexSet boundary_of(const WeightedGraph& g, const VertexSet& a);
VertexSet complement_of(const WeightedGraph& g, const VertexSet& a);

// Union of all geodesics: {v : d(x,v) + d(v,y) = d(x,y)}.
VertexSet shortest_path_union(const WeightedGraph& g, int x, int y);

// min over directed edges of the one-step probability w(x,y)/mu(x).
double p0_check(const WeightedGraph& g);

// True when B(x, factor*R) contains no truncation mark. Graphs without marks
// are vacuously valid at every scale.
bool interior_valid(const WeightedGraph& g, int x, double R,
                    double factor = 9.0);

enum class Family { Path, Cycle, Box2d, Sg, Vicsek, Star, Joined };

struct GenOptions {
  double weight = 1.0;
  // joined only: the two pieces as "family:size", glued at join_a / join_b
  std::string a, b;
  int join_a = 0, join_b = 0;
};

Family family_from_string(std::string_view name);
std::string family_name(Family f);
WeightedGraph generate(Family family, int size, const GenOptions& opt = {});

}  // namespace walklab
