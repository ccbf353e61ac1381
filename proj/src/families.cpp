#include "mbd/families.hpp"

#include <charconv>
#include <stdexcept>
#include <string_view>

namespace mbd {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

std::string num(int i) { return std::to_string(i); }

LabeledFamily make(std::string name, Graph g, std::vector<std::string> labels) {
  LabeledFamily f;
  f.name = std::move(name);
  f.graph = std::move(g);
  f.labels = std::move(labels);
  return f;
}

// F_k skeleton: graph plus, for every vertex, its level (0 for the leaves X,
// j for a centre of a copy of F_j).
struct FSkeleton {
  Graph graph;
  std::vector<int> level;
};

FSkeleton f_skeleton(int k) {
  if (k == 1) {
    FSkeleton s{Graph(3), {0, 0, 1}};
    s.graph.add_edge(0, 2);
    s.graph.add_edge(1, 2);
    return s;
  }
  const FSkeleton half = f_skeleton(k - 1);
  const int m = half.graph.order();
  FSkeleton s{Graph(2 * m + 1), {}};
  for (int copy = 0; copy < 2; ++copy) {
    for (auto [u, v] : half.graph.edge_list()) s.graph.add_edge(u + copy * m, v + copy * m);
    s.level.insert(s.level.end(), half.level.begin(), half.level.end());
  }
  const Vertex z = 2 * m;
  s.level.push_back(k);
  for (Vertex v = 0; v < 2 * m; ++v) {
    if (s.level[v] == 0) s.graph.add_edge(v, z);
  }
  return s;
}

LabeledFamily label_f(int k, const FSkeleton& s) {
  std::vector<std::string> labels(s.level.size());
  std::vector<int> seen(static_cast<std::size_t>(k) + 1, 0);
  VertexSet x;
  VertexSet y;
  for (std::size_t v = 0; v < s.level.size(); ++v) {
    const int lv = s.level[v];
    const int idx = seen[static_cast<std::size_t>(lv)]++;
    if (lv == 0) {
      labels[v] = "x" + num(idx);
      x.insert(static_cast<Vertex>(v));
    } else if (lv == k) {
      labels[v] = "z" + num(k);
    } else {
      labels[v] = "z" + num(lv) + "." + num(idx);
      y.insert(static_cast<Vertex>(v));
    }
  }
  LabeledFamily f = make("F_" + num(k), s.graph, std::move(labels));
  f.landmarks["X_" + num(k)] = x;
  f.landmarks["Y_" + num(k)] = y;
  f.landmarks["z_" + num(k)] = VertexSet::single(s.graph.order() - 1);
  return f;
}

// Appends b to a; b's labels and landmark names get `prefix_b`, a's get
// `prefix_a`.
LabeledFamily join(const LabeledFamily& a, const std::string& prefix_a, const LabeledFamily& b,
                   const std::string& prefix_b) {
  LabeledFamily out;
  out.graph = disjoint_union(a.graph, b.graph);
  for (const auto& l : a.labels) out.labels.push_back(prefix_a + l);
  for (const auto& l : b.labels) out.labels.push_back(prefix_b + l);
  for (const auto& [name, set] : a.landmarks) out.landmarks[prefix_a + name] = set;
  for (const auto& [name, set] : b.landmarks) {
    out.landmarks[prefix_b + name] = VertexSet(set.bits() << a.graph.order());
  }
  out.name = a.name + "+" + b.name;
  return out;
}

Vertex landmark_vertex(const LabeledFamily& f, const std::string& name) {
  return f.landmarks.at(name).min();
}

}  // namespace

LabeledFamily unlabeled(const Graph& g, std::string name) {
  std::vector<std::string> labels;
  for (Vertex v = 0; v < g.order(); ++v) labels.push_back(num(v));
  return make(std::move(name), g, std::move(labels));
}

LabeledFamily path(int n) {
  require(n >= 1 && n <= kMaxVertices, "path: need 1 <= n <= 64");
  Graph g(n);
  std::vector<std::string> labels;
  for (Vertex v = 0; v < n; ++v) {
    labels.push_back("v" + num(v + 1));
    if (v + 1 < n) g.add_edge(v, v + 1);
  }
  LabeledFamily f = make("P_" + num(n), g, std::move(labels));
  f.landmarks["path"] = g.vertices();
  return f;
}

LabeledFamily cycle(int n) {
  require(n >= 3 && n <= kMaxVertices, "cycle: need 3 <= n <= 64");
  Graph g(n);
  std::vector<std::string> labels;
  for (Vertex v = 0; v < n; ++v) {
    labels.push_back("v" + num(v));
    g.add_edge(v, (v + 1) % n);
  }
  LabeledFamily f = make("C_" + num(n), g, std::move(labels));
  f.landmarks["cycle"] = g.vertices();
  return f;
}

LabeledFamily complete(int r) {
  require(r >= 1 && r <= kMaxVertices, "complete: need 1 <= r <= 64");
  Graph g(r);
  std::vector<std::string> labels;
  for (Vertex u = 0; u < r; ++u) {
    labels.push_back("k" + num(u + 1));
    for (Vertex v = u + 1; v < r; ++v) g.add_edge(u, v);
  }
  return make("K_" + num(r), g, std::move(labels));
}

LabeledFamily tadpole(int n, int k) {
  require(n >= 3 && k >= 1 && n + k <= kMaxVertices, "tadpole: need n >= 3, k >= 1, n + k <= 64");
  Graph g(n + k);
  std::vector<std::string> labels;
  for (Vertex v = 0; v < n; ++v) {
    labels.push_back("v" + num(v));
    g.add_edge(v, (v + 1) % n);
  }
  for (int j = 1; j <= k; ++j) {
    labels.push_back("u" + num(j));
    if (j < k) g.add_edge(n + j - 1, n + j);
  }
  g.add_edge(0, n + k - 1);
  LabeledFamily f = make("T(" + num(n) + "," + num(k) + ")", g, std::move(labels));
  f.landmarks["cycle"] = VertexSet::range(n);
  f.landmarks["tail"] = VertexSet::range(n + k) - VertexSet::range(n);
  return f;
}

LabeledFamily subdivided_star_1(int k) {
  require(k >= 1 && 2 * k + 1 <= kMaxVertices, "star1: need 1 <= k <= 31");
  Graph g(2 * k + 1);
  std::vector<std::string> labels{"c"};
  for (int i = 1; i <= k; ++i) labels.push_back("s" + num(i));
  for (int i = 1; i <= k; ++i) labels.push_back("l" + num(i));
  VertexSet supports;
  VertexSet leaves;
  for (int i = 1; i <= k; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, k + i);
    supports.insert(i);
    leaves.insert(k + i);
  }
  LabeledFamily f = make("S^1_" + num(k), g, std::move(labels));
  f.landmarks["center"] = VertexSet::single(0);
  f.landmarks["supports"] = supports;
  f.landmarks["leaves"] = leaves;
  return f;
}

LabeledFamily subdivided_star_2(int k) {
  require(k >= 1 && 2 * k + 2 <= kMaxVertices, "star2: need 1 <= k <= 31");
  const LabeledFamily base = subdivided_star_1(k);
  const Vertex w = 2 * k + 1;
  Graph g(2 * k + 2);
  for (auto [u, v] : base.graph.edge_list()) g.add_edge(u, v);
  for (Vertex s : base.landmarks.at("supports")) g.add_edge(s, w);
  std::vector<std::string> labels = base.labels;
  labels.push_back("w");
  LabeledFamily f = make("S^2_" + num(k), g, std::move(labels));
  f.landmarks = base.landmarks;
  f.landmarks["w"] = VertexSet::single(w);
  return f;
}

LabeledFamily f_family(int k) {
  require(k >= 1 && k <= 5, "F_k: need 1 <= k <= 5");
  return label_f(k, f_skeleton(k));
}

LabeledFamily f_prime(int k) {
  require(k >= 1 && k <= 4, "F'_k: need 1 <= k <= 4");
  LabeledFamily base = f_family(k);
  base.name = "F'_" + num(k);
  if (k <= 2) return base;
  const int m = base.graph.order();
  Graph g(m + k - 1);
  for (auto [u, v] : base.graph.edge_list()) g.add_edge(u, v);
  const VertexSet y = base.landmarks.at("Y_" + num(k));
  VertexSet plus;
  for (int i = 0; i < k - 1; ++i) {
    const Vertex a = m + i;
    plus.insert(a);
    base.labels.push_back("y" + num(i));
    for (Vertex b : y) g.add_edge(a, b);
    for (int j = 0; j < i; ++j) g.add_edge(a, m + j);
  }
  base.graph = g;
  base.landmarks["Y+_" + num(k)] = plus;
  return base;
}

LabeledFamily g_rst(int r, int s, int t) {
  require(2 <= r && r <= s && s <= t, "grst: need 2 <= r <= s <= t");
  require(t - 1 <= 4, "grst: t <= 5 supported");
  LabeledFamily kr = complete(r);
  LabeledFamily fs = f_prime(s - 1);
  LabeledFamily ft = f_prime(t - 1);
  LabeledFamily out = join(join(kr, "K.", fs, "S."), "", ft, "T.");
  out.name = "G_{" + num(r) + "," + num(s) + "," + num(t) + "}";
  return out;
}

LabeledFamily g_rst_connected(int r, int s, int t) {
  LabeledFamily out = g_rst(r, s, t);
  const Vertex v = 0;
  out.graph.add_edge(v, landmark_vertex(out, "S.z_" + num(s - 1)));
  out.graph.add_edge(v, landmark_vertex(out, "T.z_" + num(t - 1)));
  out.name = "G'_{" + num(r) + "," + num(s) + "," + num(t) + "}";
  return out;
}

LabeledFamily disjoint_union(const LabeledFamily& a, const LabeledFamily& b) {
  for (const auto& la : a.labels) {
    for (const auto& lb : b.labels) {
      if (la == lb) return join(a, "", b, b.name + ".");
    }
  }
  return join(a, "", b, "");
}

namespace {

std::vector<int> parse_ints(std::string_view rest, std::size_t expected, const std::string& spec) {
  std::vector<int> out;
  while (!rest.empty()) {
    const std::size_t colon = rest.find(':');
    const std::string_view tok = rest.substr(0, colon);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) {
      throw std::invalid_argument("bad integer in family `" + spec + "`");
    }
    out.push_back(v);
    if (colon == std::string_view::npos) break;
    rest.remove_prefix(colon + 1);
  }
  if (out.size() != expected) {
    throw std::invalid_argument("family `" + spec + "` expects " + std::to_string(expected) +
                                " parameter(s)");
  }
  return out;
}

LabeledFamily parse_single(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string_view rest =
      colon == std::string::npos ? std::string_view{} : std::string_view(spec).substr(colon + 1);
  if (kind == "path") return path(parse_ints(rest, 1, spec)[0]);
  if (kind == "cycle") return cycle(parse_ints(rest, 1, spec)[0]);
  if (kind == "complete") return complete(parse_ints(rest, 1, spec)[0]);
  if (kind == "star1") return subdivided_star_1(parse_ints(rest, 1, spec)[0]);
  if (kind == "star2") return subdivided_star_2(parse_ints(rest, 1, spec)[0]);
  if (kind == "f") return f_family(parse_ints(rest, 1, spec)[0]);
  if (kind == "fprime") return f_prime(parse_ints(rest, 1, spec)[0]);
  if (kind == "empty") {
    const int n = parse_ints(rest, 1, spec)[0];
    require(n >= 0 && n <= kMaxVertices, "empty: need 0 <= n <= 64");
    return unlabeled(Graph(n), "E_" + num(n));
  }
  if (kind == "tadpole") {
    const auto p = parse_ints(rest, 2, spec);
    return tadpole(p[0], p[1]);
  }
  if (kind == "grst" || kind == "grstc") {
    const auto p = parse_ints(rest, 3, spec);
    return kind == "grst" ? g_rst(p[0], p[1], p[2]) : g_rst_connected(p[0], p[1], p[2]);
  }
  throw std::invalid_argument("unknown family `" + spec + "`");
}

}  // namespace

LabeledFamily parse_family(const std::string& spec) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t plus = spec.find('+', start);
    parts.push_back(spec.substr(start, plus - start));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  if (parts.size() == 1) return parse_single(parts[0]);
  LabeledFamily out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const LabeledFamily part = parse_single(parts[i]);
    if (out.graph.order() + part.graph.order() > kMaxVertices) {
      throw std::out_of_range("family `" + spec + "` exceeds 64 vertices");
    }
    out = join(out, "", part, num(static_cast<int>(i) + 1) + ".");
  }
  out.name = spec;
  return out;
}

}  // namespace mbd
