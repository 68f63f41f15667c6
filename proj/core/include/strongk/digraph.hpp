#pragma once
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "strongk/errors.hpp"

namespace strongk {

struct Arc {
    int from = 0;
    int to = 0;
    auto operator<=>(const Arc&) const = default;
};

/// Simple digraph on vertices 0..n-1: no loops, no parallel arcs.
/// Digons (both arcs of a 2-cycle) are allowed and distinct from a single
/// arc.  Values are immutable after construction; all operations below are
/// pure functions, so Digraph values can be shared across threads.
class Digraph {
  public:
    Digraph() = default;
    /// Collapses duplicate arcs; throws ParamError on a loop or an endpoint
    /// out of 0..n-1.
    Digraph(int n, std::vector<Arc> arcs);

    int order() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    /// Arcs in sorted (from, to) order.
    const std::vector<Arc>& arcs() const { return arcs_; }
    bool has_arc(int u, int v) const {
        return arc_set_.count(pack(u, v)) != 0;
    }
    const std::vector<int>& out(int u) const { return out_[u]; }
    const std::vector<int>& in(int u) const { return in_[u]; }
    int out_degree(int u) const { return static_cast<int>(out_[u].size()); }
    int in_degree(int u) const { return static_cast<int>(in_[u].size()); }

    /// Copy with one arc removed; throws ParamError if the arc is absent.
    Digraph without_arc(Arc a) const;

    bool operator==(const Digraph& o) const {
        return n_ == o.n_ && arcs_ == o.arcs_;
    }

  private:
    uint32_t pack(int u, int v) const {
        return static_cast<uint32_t>(u) * static_cast<uint32_t>(n_) +
               static_cast<uint32_t>(v);
    }
    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_, in_;
    std::unordered_set<uint32_t> arc_set_;
};

/// Simple undirected graph: no loops, no parallel edges.
class UndirectedGraph {
  public:
    UndirectedGraph() = default;
    UndirectedGraph(int n, std::vector<std::pair<int, int>> edges);

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    /// Edges normalized to u < v, sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int u) const { return adj_[u]; }
    bool has_edge(int u, int v) const;

    bool operator==(const UndirectedGraph& o) const {
        return n_ == o.n_ && edges_ == o.edges_;
    }

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Terminal set S: sorted distinct vertex ids, 2 <= |S| <= n.
struct VertexSet {
    std::vector<int> members;

    VertexSet() = default;
    /// Sorts and rejects duplicates.
    explicit VertexSet(std::vector<int> ids);

    int size() const { return static_cast<int>(members.size()); }
    bool contains(int v) const;
    auto operator<=>(const VertexSet&) const = default;
};

/// Validates S against D: 2 <= |S| <= n, members in range.
void require_valid_terminals(const Digraph& d, const VertexSet& s);

Digraph from_arc_list(int n, const std::vector<Arc>& arcs);

enum class Family {
    complete_bidirected,
    dicycle,
    bidirected_cycle,
    bidirected_path,
    bidirected_tree_random,
};

Family family_from_name(const std::string& name);
Digraph standard_family(Family f, int n,
                        std::optional<uint64_t> seed = std::nullopt);
Digraph standard_family(const std::string& name, int n,
                        std::optional<uint64_t> seed = std::nullopt);

/// Strongly connected component ids, 0-based, in reverse topological
/// order of the condensation (Tarjan).
std::vector<int> strong_components(const Digraph& d);
bool is_strong(const Digraph& d);

Digraph reverse(const Digraph& d);
Digraph complement(const Digraph& d);
Digraph biorient(const UndirectedGraph& g);
UndirectedGraph underlying(const Digraph& d);

bool is_symmetric(const Digraph& d);
bool is_semicomplete(const Digraph& d);
/// (min out-degree, min in-degree) over all vertices; n >= 1 required.
std::pair<int, int> min_degrees(const Digraph& d);

/// Digons of a symmetric digraph whose removal disconnects it; equals the
/// bridge set of underlying(d).  Returned as (u, v) pairs with u < v,
/// sorted.  Throws ParamError if d is not symmetric.
std::vector<std::pair<int, int>> bridges(const Digraph& d);

/// Bridges of an undirected graph, normalized and sorted.
std::vector<std::pair<int, int>> undirected_bridges(const UndirectedGraph& g);
bool is_connected(const UndirectedGraph& g);

/// Product vertex (i, j) of G box H gets id i*|V(H)| + j.  This encoding is
/// part of the public contract so certificates on products are reproducible.
inline int product_vertex(int i, int j, int h_order) { return i * h_order + j; }
Digraph cartesian_product(const Digraph& g, const Digraph& h);

/// Replaces arc (u, v) by (u, w), (w, v) with fresh vertex w = old n.
Digraph subdivide(const Digraph& d, Arc arc);

} // namespace strongk
