#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace khcore {

using Vertex = std::uint32_t;
using Label = std::uint64_t;

constexpr Vertex kNoVertex = 0xffffffffu;

// Immutable undirected simple graph in CSR form. Vertex ids are dense
// (0..n-1), assigned in first-appearance order of the input labels; the
// original labels are kept so results can be written back in terms of the
// source dataset. Neighbor slices are sorted ascending, self-loops and
// duplicate edges are dropped at construction.
class Graph {
 public:
  Graph() = default;

  // Builds from labeled edges. Labels are remapped to dense ids in
  // first-appearance order (u before v within an edge); self-loop lines do
  // not register their label.
  static Graph from_edge_labels(const std::vector<std::pair<Label, Label>>& edges);

  // Vertices 0..n-1 with edges given directly as dense ids (labels = ids).
  static Graph from_edges(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::uint32_t degree(Vertex v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }
  Label label(Vertex v) const { return labels_[v]; }

 private:
  std::vector<std::uint64_t> offsets_;  // length n+1, offsets_[n] == 2m
  std::vector<Vertex> neighbors_;       // length 2m
  std::vector<Label> labels_;           // dense id -> original label
  std::size_t edge_count_ = 0;
};

// Logical vertex deletion. Peeling never restructures the CSR; dead vertices
// are filtered during traversal.
class AliveMask {
 public:
  AliveMask() = default;
  explicit AliveMask(std::size_t n, bool alive = true)
      : flags_(n, alive ? 1 : 0), count_(alive ? n : 0) {}

  bool alive(Vertex v) const { return flags_[v] != 0; }
  std::size_t alive_count() const { return count_; }

  void kill(Vertex v) {
    if (flags_[v]) {
      flags_[v] = 0;
      --count_;
    }
  }
  void revive(Vertex v) {
    if (!flags_[v]) {
      flags_[v] = 1;
      ++count_;
    }
  }

 private:
  std::vector<std::uint8_t> flags_;
  std::size_t count_ = 0;
};

struct NeighborhoodMember {
  Vertex v;
  std::uint32_t dist;  // 1 <= dist <= h
};

// The h-hop neighborhood of a source vertex over the alive subgraph.
// Members are in BFS order (non-decreasing distance); the position of a
// member in `members` is its local index. prefix_count[t] is the number of
// members with distance <= t, so the members at distance <= h-s form the
// prefix [0, prefix_count[h-s]).
struct HNeighborhood {
  Vertex source = kNoVertex;
  std::vector<NeighborhoodMember> members;
  std::vector<std::uint32_t> prefix_count;  // size h+1
  std::uint64_t scratch_epoch = 0;          // binds local indices to a BfsScratch state

  std::uint32_t degree() const { return static_cast<std::uint32_t>(members.size()); }
};

// Reusable single-owner BFS buffers. Visited marks carry an epoch stamp, so
// no O(n) clearing happens between calls.
struct BfsScratch {
  std::vector<std::uint64_t> mark;
  std::vector<std::uint32_t> dist;
  std::vector<std::uint32_t> local_pos;  // local index for the latest h_bfs
  std::vector<Vertex> queue;
  std::uint64_t epoch = 0;

  void ensure(std::size_t n) {
    if (mark.size() < n) {
      mark.resize(n, 0);
      dist.resize(n, 0);
      local_pos.resize(n, 0);
    }
  }
};

// Collects the alive vertices u != source with dis(source, u) <= h, with
// exact distances. Throws std::logic_error if source is dead.
void h_bfs(const Graph& g, const AliveMask& alive, Vertex source, int h,
           BfsScratch& scratch, HNeighborhood& out);

HNeighborhood h_bfs(const Graph& g, const AliveMask& alive, Vertex source, int h,
                    BfsScratch& scratch);

// Counting-only variant (no member list), used by degree initialization and
// recomputation paths.
std::uint32_t h_bfs_degree(const Graph& g, const AliveMask& alive, Vertex source,
                           int h, BfsScratch& scratch);

// Counts alive vertices within h hops of source, total and restricted to
// flagged vertices. Used by the sampling paths.
std::pair<std::uint32_t, std::uint32_t> h_bfs_degree_flagged(
    const Graph& g, const AliveMask& alive, Vertex source, int h,
    BfsScratch& scratch, const std::vector<std::uint8_t>& flag);

// Undirected edge between two local indices of an HNeighborhood, a < b.
struct LocalEdge {
  std::uint32_t a, b;
};

// All alive edges with both endpoints inside nbh, in local indices, each
// once. Must be called with the scratch that produced nbh and before that
// scratch is reused; a stale pairing throws std::logic_error.
void induced_local_subgraph(const Graph& g, const AliveMask& alive,
                            const HNeighborhood& nbh, const BfsScratch& scratch,
                            std::vector<LocalEdge>& out);

}  // namespace khcore
