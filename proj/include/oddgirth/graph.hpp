#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace oddgirth {

/// Undirected simple graph on vertices 0..n-1. Dense 0/1 adjacency plus
/// neighbour lists; the adjacency is symmetric with a zero diagonal by
/// construction.
class Graph {
public:
  using Adjacency = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;

  explicit Graph(int n);

  /// Adds {u,v}; a repeated edge is ignored. Throws InputError on a loop or
  /// an out-of-range vertex.
  void add_edge(int u, int v);

  int order() const { return n_; }
  int size() const { return edges_; }
  bool has_edge(int u, int v) const { return adj_(u, v) != 0; }
  int degree(int v) const { return static_cast<int>(nbrs_[v].size()); }
  std::span<const int> neighbors(int v) const { return nbrs_[v]; }
  const Adjacency& adjacency() const { return adj_; }

  /// Common degree, or nullopt when the graph is not regular.
  std::optional<int> regular_degree() const;
  int max_degree() const;

  template <typename Scalar = double>
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> adjacency_as() const {
    return adj_.template cast<Scalar>();
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
  int n_;
  int edges_ = 0;
  Adjacency adj_;
  std::vector<std::vector<int>> nbrs_;
};

inline constexpr int kUnreachable = -1;

/// Hop distances from BFS. Unreachable pairs hold kUnreachable.
struct DistanceData {
  Eigen::MatrixXi dist;
  int diameter = 0;  // max finite distance
  bool connected = true;
};

/// Length of a shortest odd cycle, or infinite for bipartite graphs.
class OddGirth {
public:
  static OddGirth infinite() { return OddGirth(); }
  explicit OddGirth(int length) : length_(length) {}

  bool is_finite() const { return length_.has_value(); }
  int value() const { return length_.value(); }
  std::string to_string() const { return is_finite() ? std::to_string(*length_) : "inf"; }

  friend bool operator==(const OddGirth&, const OddGirth&) = default;

private:
  OddGirth() = default;
  std::optional<int> length_;
};

// graph6 (printable bytes 63..126, column-major upper triangle).
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

/// First token is n, then one "u v" pair per line. Blank lines and lines
/// starting with '#' are skipped.
Graph parse_edge_list(std::string_view text);

/// Named constructions: complete n, cycle n, path n, petersen, odd k,
/// folded_cube m, prism.
Graph generate_family(std::string_view family, std::span<const int> params);

DistanceData distance_data(const Graph& g);
bool is_connected(const Graph& g);
OddGirth odd_girth(const Graph& g);

inline constexpr int kMaxEnumerationOrder = 7;

/// Labeled connected graphs on n vertices, one per edge mask over the
/// C(n,2) vertex pairs ordered (0,1),(0,2),(1,2),(0,3),... . Masks in
/// [mask_begin, mask_end) are visited in increasing order; the visitor
/// receives the graph and its mask.
void enumerate_connected(int n, const std::function<void(const Graph&, std::uint64_t)>& visit);
void enumerate_connected(int n, std::uint64_t mask_begin, std::uint64_t mask_end,
                         const std::function<void(const Graph&, std::uint64_t)>& visit);
std::uint64_t edge_mask_count(int n);

/// Graph for a given edge mask in the enumeration order above.
Graph graph_from_mask(int n, std::uint64_t mask);

}  // namespace oddgirth
