#include "khcore/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace khcore {

Graph Graph::from_edge_labels(const std::vector<std::pair<Label, Label>>& edges) {
  std::unordered_map<Label, Vertex> id_map;
  id_map.reserve(edges.size() * 2);
  std::vector<std::pair<Vertex, Vertex>> dense;
  dense.reserve(edges.size());
  std::vector<Label> labels;

  auto intern = [&](Label l) -> Vertex {
    auto [it, inserted] = id_map.try_emplace(l, static_cast<Vertex>(labels.size()));
    if (inserted) labels.push_back(l);
    return it->second;
  };

  for (const auto& [a, b] : edges) {
    if (a == b) continue;  // self-loops neither count nor register the label
    Vertex u = intern(a);
    Vertex v = intern(b);
    dense.emplace_back(u, v);
  }

  Graph g = from_edges(static_cast<Vertex>(labels.size()), dense);
  g.labels_ = std::move(labels);
  return g;
}

Graph Graph::from_edges(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Graph g;
  std::vector<std::uint32_t> deg(n, 0);
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    ++deg[u];
    ++deg[v];
  }
  g.offsets_.assign(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.neighbors_.resize(g.offsets_[n]);

  std::vector<std::uint64_t> pos(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    g.neighbors_[pos[u]++] = v;
    g.neighbors_[pos[v]++] = u;
  }

  // Sort each slice and drop duplicate edges, then compact.
  std::uint64_t write = 0;
  std::uint64_t slice_begin = 0;
  for (Vertex v = 0; v < n; ++v) {
    std::uint64_t slice_end = g.offsets_[v + 1];
    std::sort(g.neighbors_.begin() + slice_begin, g.neighbors_.begin() + slice_end);
    std::uint64_t new_begin = write;
    for (std::uint64_t i = slice_begin; i < slice_end; ++i) {
      if (i > slice_begin && g.neighbors_[i] == g.neighbors_[i - 1]) continue;
      g.neighbors_[write++] = g.neighbors_[i];
    }
    g.offsets_[v] = new_begin;
    slice_begin = slice_end;
  }
  g.offsets_[n] = write;
  g.neighbors_.resize(write);
  g.edge_count_ = write / 2;

  g.labels_.resize(n);
  for (Vertex v = 0; v < n; ++v) g.labels_[v] = v;
  return g;
}

void h_bfs(const Graph& g, const AliveMask& alive, Vertex source, int h,
           BfsScratch& scratch, HNeighborhood& out) {
  if (!alive.alive(source)) throw std::logic_error("h_bfs: source vertex is not alive");

  scratch.ensure(g.vertex_count());
  const std::uint64_t epoch = ++scratch.epoch;
  scratch.mark[source] = epoch;

  out.source = source;
  out.scratch_epoch = epoch;
  out.members.clear();
  out.prefix_count.assign(static_cast<std::size_t>(h) + 1, 0);

  for (Vertex w : g.neighbors(source)) {
    if (!alive.alive(w)) continue;
    scratch.mark[w] = epoch;
    scratch.dist[w] = 1;
    scratch.local_pos[w] = static_cast<std::uint32_t>(out.members.size());
    out.members.push_back({w, 1});
  }
  // members doubles as the BFS queue
  for (std::size_t head = 0; head < out.members.size(); ++head) {
    const auto [u, d] = out.members[head];
    if (d >= static_cast<std::uint32_t>(h)) break;  // members are distance-sorted
    for (Vertex w : g.neighbors(u)) {
      if (!alive.alive(w) || scratch.mark[w] == epoch) continue;
      scratch.mark[w] = epoch;
      scratch.dist[w] = d + 1;
      scratch.local_pos[w] = static_cast<std::uint32_t>(out.members.size());
      out.members.push_back({w, d + 1});
    }
  }
  for (const auto& m : out.members) ++out.prefix_count[m.dist];
  for (int t = 1; t <= h; ++t) out.prefix_count[t] += out.prefix_count[t - 1];
}

HNeighborhood h_bfs(const Graph& g, const AliveMask& alive, Vertex source, int h,
                    BfsScratch& scratch) {
  HNeighborhood out;
  h_bfs(g, alive, source, h, scratch, out);
  return out;
}

std::uint32_t h_bfs_degree(const Graph& g, const AliveMask& alive, Vertex source,
                           int h, BfsScratch& scratch) {
  if (!alive.alive(source)) throw std::logic_error("h_bfs_degree: source vertex is not alive");
  scratch.ensure(g.vertex_count());
  const std::uint64_t epoch = ++scratch.epoch;
  scratch.mark[source] = epoch;
  auto& q = scratch.queue;
  q.clear();

  for (Vertex w : g.neighbors(source)) {
    if (!alive.alive(w)) continue;
    scratch.mark[w] = epoch;
    scratch.dist[w] = 1;
    q.push_back(w);
  }
  for (std::size_t head = 0; head < q.size(); ++head) {
    const Vertex u = q[head];
    const std::uint32_t d = scratch.dist[u];
    if (d >= static_cast<std::uint32_t>(h)) break;
    for (Vertex w : g.neighbors(u)) {
      if (!alive.alive(w) || scratch.mark[w] == epoch) continue;
      scratch.mark[w] = epoch;
      scratch.dist[w] = d + 1;
      q.push_back(w);
    }
  }
  return static_cast<std::uint32_t>(q.size());
}

std::pair<std::uint32_t, std::uint32_t> h_bfs_degree_flagged(
    const Graph& g, const AliveMask& alive, Vertex source, int h,
    BfsScratch& scratch, const std::vector<std::uint8_t>& flag) {
  if (!alive.alive(source)) throw std::logic_error("h_bfs_degree_flagged: source vertex is not alive");
  scratch.ensure(g.vertex_count());
  const std::uint64_t epoch = ++scratch.epoch;
  scratch.mark[source] = epoch;
  auto& q = scratch.queue;
  q.clear();
  std::uint32_t flagged = 0;

  for (Vertex w : g.neighbors(source)) {
    if (!alive.alive(w)) continue;
    scratch.mark[w] = epoch;
    scratch.dist[w] = 1;
    q.push_back(w);
    flagged += flag[w];
  }
  for (std::size_t head = 0; head < q.size(); ++head) {
    const Vertex u = q[head];
    const std::uint32_t d = scratch.dist[u];
    if (d >= static_cast<std::uint32_t>(h)) break;
    for (Vertex w : g.neighbors(u)) {
      if (!alive.alive(w) || scratch.mark[w] == epoch) continue;
      scratch.mark[w] = epoch;
      scratch.dist[w] = d + 1;
      q.push_back(w);
      flagged += flag[w];
    }
  }
  return {static_cast<std::uint32_t>(q.size()), flagged};
}

void induced_local_subgraph(const Graph& g, const AliveMask& alive,
                            const HNeighborhood& nbh, const BfsScratch& scratch,
                            std::vector<LocalEdge>& out) {
  if (nbh.scratch_epoch != scratch.epoch)
    throw std::logic_error("induced_local_subgraph: neighborhood is stale for this scratch");
  out.clear();
  const std::uint64_t epoch = scratch.epoch;
  for (std::uint32_t i = 0; i < nbh.members.size(); ++i) {
    const Vertex u = nbh.members[i].v;
    for (Vertex w : g.neighbors(u)) {
      if (w == nbh.source || !alive.alive(w) || scratch.mark[w] != epoch) continue;
      const std::uint32_t j = scratch.local_pos[w];
      if (j > i) out.push_back({i, j});
    }
  }
}

}  // namespace khcore
