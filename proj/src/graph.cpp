#include "oddgirth/graph.hpp"

#include "oddgirth/errors.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <limits>

namespace oddgirth {

Graph::Graph(int n) : n_(n) {
  if (n < 1) throw InputError("graph order must be positive, got " + std::to_string(n));
  adj_ = Adjacency::Zero(n, n);
  nbrs_.resize(static_cast<std::size_t>(n));
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  if (adj_(u, v)) return;
  adj_(u, v) = adj_(v, u) = 1;
  nbrs_[u].push_back(v);
  nbrs_[v].push_back(u);
  ++edges_;
}

std::optional<int> Graph::regular_degree() const {
  const int k = degree(0);
  for (int v = 1; v < n_; ++v)
    if (degree(v) != k) return std::nullopt;
  return k;
}

int Graph::max_degree() const {
  int k = 0;
  for (int v = 0; v < n_; ++v) k = std::max(k, degree(v));
  return k;
}

// ---------------------------------------------------------------- graph6

namespace {

constexpr int kGraph6Bias = 63;
constexpr int kGraph6MaxOrder = 258047;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  std::size_t base = 0;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  if (text.empty()) throw ParseError("graph6: empty input", base);

  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw ParseError("graph6: byte " + std::to_string(c) + " out of printable range at offset " +
                           std::to_string(base + i),
                       base + i);
  }

  auto value = [&](std::size_t i) { return static_cast<unsigned char>(text[i]) - kGraph6Bias; };

  std::size_t pos = 0;
  long n = 0;
  if (value(0) < 63) {
    n = value(0);
    pos = 1;
  } else {
    if (text.size() >= 2 && value(1) == 63)
      throw ParseError("graph6: 8-byte header (n > 258047) unsupported at offset " + std::to_string(base + 1),
                       base + 1);
    if (text.size() < 4) throw ParseError("graph6: truncated size header at offset " + std::to_string(base), base);
    n = (value(1) << 12) | (value(2) << 6) | value(3);
    if (n < 63) throw ParseError("graph6: non-canonical long header at offset " + std::to_string(base), base);
    pos = 4;
  }
  if (n < 1) throw ParseError("graph6: graph order must be positive at offset " + std::to_string(base), base);

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() - pos != body)
    throw ParseError("graph6: expected " + std::to_string(body) + " body bytes, found " +
                         std::to_string(text.size() - pos) + " at offset " + std::to_string(base + pos),
                     base + pos);

  Graph g(static_cast<int>(n));
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = value(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    const std::size_t last = pos + k / 6;
    const int pad_mask = (1 << (6 - k % 6)) - 1;
    if (value(last) & pad_mask)
      throw ParseError("graph6: nonzero padding bits at offset " + std::to_string(base + last), base + last);
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) throw InputError("graph6: order " + std::to_string(n) + " exceeds 258047");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kGraph6Bias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kGraph6Bias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kGraph6Bias));
    out.push_back(static_cast<char>((n & 63) + kGraph6Bias));
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kGraph6Bias));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kGraph6Bias));
  return out;
}

// ------------------------------------------------------------- edge list

namespace {

bool parse_int(std::string_view tok, int& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<Graph> g;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    const auto tok = tokens(line);
    if (tok.empty() || tok.front().starts_with('#')) continue;
    const std::string where = "edge list line " + std::to_string(line_no) + ": ";

    if (!g) {
      int n = 0;
      if (tok.size() != 1 || !parse_int(tok[0], n) || n < 1)
        throw ParseError(where + "expected a positive vertex count", line_no);
      g.emplace(n);
      continue;
    }
    int u = 0, v = 0;
    if (tok.size() != 2 || !parse_int(tok[0], u) || !parse_int(tok[1], v))
      throw ParseError(where + "expected two vertex indices", line_no);
    if (u < 0 || v < 0 || u >= g->order() || v >= g->order())
      throw ParseError(where + "vertex out of range", line_no);
    if (u == v) throw ParseError(where + "self-loop", line_no);
    g->add_edge(u, v);
  }
  if (!g) throw ParseError("edge list: missing vertex count", line_no);
  return std::move(*g);
}

// -------------------------------------------------------------- families

namespace {

int need(std::span<const int> params, std::size_t count, std::string_view family) {
  if (params.size() != count)
    throw GenerationError(std::string(family) + " expects " + std::to_string(count) + " parameter(s), got " +
                          std::to_string(params.size()));
  return count ? params[0] : 0;
}

Graph kneser_odd(int k) {
  // (k-1)-subsets of a (2k-1)-set as bitmasks, adjacent when disjoint.
  const int ground = 2 * k - 1;
  std::vector<unsigned> subsets;
  for (unsigned s = 0; s < (1u << ground); ++s)
    if (std::popcount(s) == k - 1) subsets.push_back(s);
  Graph g(static_cast<int>(subsets.size()));
  for (std::size_t a = 0; a < subsets.size(); ++a)
    for (std::size_t b = a + 1; b < subsets.size(); ++b)
      if ((subsets[a] & subsets[b]) == 0) g.add_edge(static_cast<int>(a), static_cast<int>(b));
  return g;
}

Graph folded_cube(int m) {
  // Q_{m-1} on strings of length m-1 plus the edge x ~ complement(x); the
  // complement corresponds to flipping the identified m-th coordinate.
  const int n = 1 << (m - 1);
  const unsigned all = static_cast<unsigned>(n - 1);
  Graph g(n);
  for (int x = 0; x < n; ++x) {
    for (int b = 0; b < m - 1; ++b) g.add_edge(x, x ^ (1 << b));
    g.add_edge(x, static_cast<int>(static_cast<unsigned>(x) ^ all));
  }
  return g;
}

}  // namespace

Graph generate_family(std::string_view family, std::span<const int> params) {
  if (family == "complete") {
    const int n = need(params, 1, family);
    if (n < 1) throw GenerationError("complete: n must be >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
  }
  if (family == "cycle") {
    const int n = need(params, 1, family);
    if (n < 3) throw GenerationError("cycle: n must be >= 3");
    Graph g(n);
    for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
    return g;
  }
  if (family == "path") {
    const int n = need(params, 1, family);
    if (n < 1) throw GenerationError("path: n must be >= 1");
    Graph g(n);
    for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
    return g;
  }
  if (family == "petersen") {
    need(params, 0, family);
    return kneser_odd(3);
  }
  if (family == "odd") {
    const int k = need(params, 1, family);
    if (k < 2 || k > 8) throw GenerationError("odd: k must be in [2, 8]");
    return kneser_odd(k);
  }
  if (family == "folded_cube") {
    const int m = need(params, 1, family);
    if (m < 3 || m > 16) throw GenerationError("folded_cube: m must be in [3, 16]");
    return folded_cube(m);
  }
  if (family == "prism") {
    need(params, 0, family);
    Graph g(6);
    for (int i = 0; i < 3; ++i) {
      g.add_edge(i, (i + 1) % 3);
      g.add_edge(3 + i, 3 + (i + 1) % 3);
      g.add_edge(i, 3 + i);
    }
    return g;
  }
  throw GenerationError("unknown family '" + std::string(family) + "'");
}

// ------------------------------------------------------------- distances

DistanceData distance_data(const Graph& g) {
  const int n = g.order();
  DistanceData out;
  out.dist = Eigen::MatrixXi::Constant(n, n, kUnreachable);
  std::vector<int> queue(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    auto col = out.dist.col(s);
    col[s] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const int u = queue[head++];
      for (int w : g.neighbors(u)) {
        if (col[w] == kUnreachable) {
          col[w] = col[u] + 1;
          queue[tail++] = w;
        }
      }
    }
    if (tail < static_cast<std::size_t>(n)) out.connected = false;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.diameter = std::max(out.diameter, out.dist(i, j));
  return out;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

OddGirth odd_girth(const Graph& g) {
  // BFS over (vertex, walk-length parity) states. The shortest odd closed
  // walk from s has length dist(s, odd); its minimum over s is attained by
  // an odd cycle.
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(2 * static_cast<std::size_t>(n));
  std::vector<int> queue(2 * static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[2 * s] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = 2 * s;
    while (head < tail) {
      const int state = queue[head++];
      const int u = state / 2, parity = state % 2;
      if (dist[state] + 1 >= best) break;
      for (int w : g.neighbors(u)) {
        const int next = 2 * w + (1 - parity);
        if (dist[next] < 0) {
          dist[next] = dist[state] + 1;
          queue[tail++] = next;
        }
      }
      if (dist[2 * s + 1] >= 0) break;
    }
    if (dist[2 * s + 1] >= 0) best = std::min(best, dist[2 * s + 1]);
  }
  return best == std::numeric_limits<int>::max() ? OddGirth::infinite() : OddGirth(best);
}

// ----------------------------------------------------------- enumeration

std::uint64_t edge_mask_count(int n) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw InputError("enumeration order must be in [1, 7], got " + std::to_string(n));
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if ((mask >> k) & 1) g.add_edge(i, j);
  return g;
}

namespace {

// Connectivity on bit rows, avoids building a Graph for rejected masks.
bool mask_connected(int n, std::uint64_t mask) {
  std::uint32_t rows[kMaxEnumerationOrder] = {};
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if ((mask >> k) & 1) {
        rows[i] |= 1u << j;
        rows[j] |= 1u << i;
      }
  std::uint32_t reached = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < n; ++v)
      if ((frontier >> v) & 1) next |= rows[v];
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == (1u << n) - 1;
}

}  // namespace

void enumerate_connected(int n, std::uint64_t mask_begin, std::uint64_t mask_end,
                         const std::function<void(const Graph&, std::uint64_t)>& visit) {
  const std::uint64_t total = edge_mask_count(n);
  mask_end = std::min(mask_end, total);
  for (std::uint64_t mask = mask_begin; mask < mask_end; ++mask)
    if (mask_connected(n, mask)) visit(graph_from_mask(n, mask), mask);
}

void enumerate_connected(int n, const std::function<void(const Graph&, std::uint64_t)>& visit) {
  enumerate_connected(n, 0, edge_mask_count(n), visit);
}

}  // namespace oddgirth
