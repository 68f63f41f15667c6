#include "strongk/digraph.hpp"

#include <algorithm>
#include <random>

namespace strongk {

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n) {
    if (n < 0) throw ParamError("vertex count must be non-negative");
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    for (const Arc& a : arcs) {
        if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n)
            throw ParamError("arc endpoint out of range: " +
                             std::to_string(a.from) + " " +
                             std::to_string(a.to));
        if (a.from == a.to)
            throw ParamError("loop not allowed: " + std::to_string(a.from));
    }
    arcs_ = std::move(arcs);
    out_.assign(n_, {});
    in_.assign(n_, {});
    arc_set_.reserve(arcs_.size() * 2);
    for (const Arc& a : arcs_) {
        out_[a.from].push_back(a.to);
        in_[a.to].push_back(a.from);
        arc_set_.insert(pack(a.from, a.to));
    }
    for (auto& v : in_) std::sort(v.begin(), v.end());
    // out_ lists are already sorted because arcs_ is.
}

Digraph Digraph::without_arc(Arc a) const {
    if (!has_arc(a.from, a.to)) throw ParamError("arc not present");
    std::vector<Arc> rest;
    rest.reserve(arcs_.size() - 1);
    for (const Arc& b : arcs_)
        if (!(b == a)) rest.push_back(b);
    return Digraph(n_, std::move(rest));
}

UndirectedGraph::UndirectedGraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n) {
    if (n < 0) throw ParamError("vertex count must be non-negative");
    for (auto& e : edges) {
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.first < 0 || e.second >= n)
            throw ParamError("edge endpoint out of range");
        if (e.first == e.second) throw ParamError("loop not allowed");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (auto& e : edges_) {
        adj_[e.first].push_back(e.second);
        adj_[e.second].push_back(e.first);
    }
    for (auto& v : adj_) std::sort(v.begin(), v.end());
}

bool UndirectedGraph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(),
                              std::make_pair(u, v));
}

VertexSet::VertexSet(std::vector<int> ids) : members(std::move(ids)) {
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw ParamError("terminal set has duplicate vertices");
}

bool VertexSet::contains(int v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

void require_valid_terminals(const Digraph& d, const VertexSet& s) {
    if (s.size() < 2)
        throw ParamError("terminal set needs at least 2 vertices");
    if (s.size() > d.order())
        throw ParamError("terminal set larger than digraph order");
    for (int v : s.members)
        if (v < 0 || v >= d.order())
            throw ParamError("terminal out of range: " + std::to_string(v));
}

Digraph from_arc_list(int n, const std::vector<Arc>& arcs) {
    return Digraph(n, arcs);
}

Family family_from_name(const std::string& name) {
    if (name == "complete_bidirected") return Family::complete_bidirected;
    if (name == "dicycle") return Family::dicycle;
    if (name == "bidirected_cycle") return Family::bidirected_cycle;
    if (name == "bidirected_path") return Family::bidirected_path;
    if (name == "bidirected_tree_random") return Family::bidirected_tree_random;
    throw ParamError("unknown family: " + name);
}

Digraph standard_family(Family f, int n, std::optional<uint64_t> seed) {
    std::vector<Arc> arcs;
    switch (f) {
        case Family::complete_bidirected:
            if (n < 1) throw ParamError("complete_bidirected needs n >= 1");
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if (u != v) arcs.push_back({u, v});
            break;
        case Family::dicycle:
            if (n < 3) throw ParamError("dicycle needs n >= 3");
            for (int u = 0; u < n; ++u) arcs.push_back({u, (u + 1) % n});
            break;
        case Family::bidirected_cycle:
            if (n < 2) throw ParamError("bidirected_cycle needs n >= 2");
            for (int u = 0; u < n; ++u) {
                int v = (u + 1) % n;
                arcs.push_back({u, v});
                arcs.push_back({v, u});
            }
            break;
        case Family::bidirected_path:
            if (n < 1) throw ParamError("bidirected_path needs n >= 1");
            for (int u = 0; u + 1 < n; ++u) {
                arcs.push_back({u, u + 1});
                arcs.push_back({u + 1, u});
            }
            break;
        case Family::bidirected_tree_random: {
            if (n < 1) throw ParamError("bidirected_tree_random needs n >= 1");
            std::mt19937_64 rng(seed.value_or(0));
            for (int u = 1; u < n; ++u) {
                int p = static_cast<int>(rng() % static_cast<uint64_t>(u));
                arcs.push_back({u, p});
                arcs.push_back({p, u});
            }
            break;
        }
    }
    return Digraph(n, std::move(arcs));
}

Digraph standard_family(const std::string& name, int n,
                        std::optional<uint64_t> seed) {
    return standard_family(family_from_name(name), n, seed);
}

namespace {

struct TarjanState {
    const Digraph* d;
    std::vector<int> index, low, comp, stack;
    std::vector<bool> on_stack;
    int next_index = 0, next_comp = 0;

    void dfs(int root) {
        // Iterative Tarjan: frames of (vertex, next out-neighbor position).
        std::vector<std::pair<int, size_t>> frames{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& [v, pos] = frames.back();
            const auto& succ = d->out(v);
            if (pos < succ.size()) {
                int w = succ[pos++];
                if (index[w] < 0) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
            } else {
                if (low[v] == index[v]) {
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = next_comp;
                    } while (w != v);
                    ++next_comp;
                }
                frames.pop_back();
                if (!frames.empty()) {
                    int parent = frames.back().first;
                    low[parent] = std::min(low[parent], low[v]);
                }
            }
        }
    }
};

} // namespace

std::vector<int> strong_components(const Digraph& d) {
    TarjanState st;
    st.d = &d;
    st.index.assign(d.order(), -1);
    st.low.assign(d.order(), 0);
    st.comp.assign(d.order(), -1);
    st.on_stack.assign(d.order(), false);
    for (int v = 0; v < d.order(); ++v)
        if (st.index[v] < 0) st.dfs(v);
    return st.comp;
}

bool is_strong(const Digraph& d) {
    if (d.order() <= 1) return true;
    auto comp = strong_components(d);
    for (int c : comp)
        if (c != comp[0]) return false;
    return true;
}

Digraph reverse(const Digraph& d) {
    std::vector<Arc> arcs;
    arcs.reserve(d.arcs().size());
    for (const Arc& a : d.arcs()) arcs.push_back({a.to, a.from});
    return Digraph(d.order(), std::move(arcs));
}

Digraph complement(const Digraph& d) {
    std::vector<Arc> arcs;
    for (int u = 0; u < d.order(); ++u)
        for (int v = 0; v < d.order(); ++v)
            if (u != v && !d.has_arc(u, v)) arcs.push_back({u, v});
    return Digraph(d.order(), std::move(arcs));
}

Digraph biorient(const UndirectedGraph& g) {
    std::vector<Arc> arcs;
    arcs.reserve(g.edges().size() * 2);
    for (auto& e : g.edges()) {
        arcs.push_back({e.first, e.second});
        arcs.push_back({e.second, e.first});
    }
    return Digraph(g.order(), std::move(arcs));
}

UndirectedGraph underlying(const Digraph& d) {
    std::vector<std::pair<int, int>> edges;
    for (const Arc& a : d.arcs())
        edges.emplace_back(std::min(a.from, a.to), std::max(a.from, a.to));
    return UndirectedGraph(d.order(), std::move(edges));
}

bool is_symmetric(const Digraph& d) {
    for (const Arc& a : d.arcs())
        if (!d.has_arc(a.to, a.from)) return false;
    return true;
}

bool is_semicomplete(const Digraph& d) {
    for (int u = 0; u < d.order(); ++u)
        for (int v = u + 1; v < d.order(); ++v)
            if (!d.has_arc(u, v) && !d.has_arc(v, u)) return false;
    return true;
}

std::pair<int, int> min_degrees(const Digraph& d) {
    if (d.order() < 1) throw ParamError("min_degrees needs n >= 1");
    int dout = d.order(), din = d.order();
    for (int v = 0; v < d.order(); ++v) {
        dout = std::min(dout, d.out_degree(v));
        din = std::min(din, d.in_degree(v));
    }
    return {dout, din};
}

std::vector<std::pair<int, int>> bridges(const Digraph& d) {
    if (!is_symmetric(d)) throw ParamError("bridges: digraph not symmetric");
    return undirected_bridges(underlying(d));
}

std::vector<std::pair<int, int>> undirected_bridges(const UndirectedGraph& g) {
    // Lowpoint DFS; parallel edges cannot occur so a tree edge is a bridge
    // exactly when low(child) > disc(parent).
    int n = g.order();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> result;
    int timer = 0;
    // Frames: (vertex, parent, next neighbor position).
    std::vector<std::tuple<int, int, size_t>> frames;
    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        disc[root] = low[root] = timer++;
        frames.push_back({root, -1, 0});
        while (!frames.empty()) {
            auto& [v, parent, pos] = frames.back();
            const auto& nbr = g.neighbors(v);
            if (pos < nbr.size()) {
                int w = nbr[pos++];
                if (disc[w] < 0) {
                    disc[w] = low[w] = timer++;
                    frames.push_back({w, v, 0});
                } else if (w != parent) {
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                int vv = v, pp = parent;
                frames.pop_back();
                if (pp >= 0) {
                    low[pp] = std::min(low[pp], low[vv]);
                    if (low[vv] > disc[pp])
                        result.emplace_back(std::min(pp, vv),
                                            std::max(pp, vv));
                }
            }
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

bool is_connected(const UndirectedGraph& g) {
    if (g.order() <= 1) return true;
    std::vector<bool> seen(g.order(), false);
    std::vector<int> queue{0};
    seen[0] = true;
    size_t head = 0;
    int count = 1;
    while (head < queue.size()) {
        int v = queue[head++];
        for (int w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                queue.push_back(w);
            }
    }
    return count == g.order();
}

Digraph cartesian_product(const Digraph& g, const Digraph& h) {
    int m = h.order();
    std::vector<Arc> arcs;
    arcs.reserve(g.arcs().size() * static_cast<size_t>(m) +
                 h.arcs().size() * static_cast<size_t>(g.order()));
    for (const Arc& a : g.arcs())
        for (int j = 0; j < m; ++j)
            arcs.push_back({product_vertex(a.from, j, m),
                            product_vertex(a.to, j, m)});
    for (int i = 0; i < g.order(); ++i)
        for (const Arc& a : h.arcs())
            arcs.push_back({product_vertex(i, a.from, m),
                            product_vertex(i, a.to, m)});
    return Digraph(g.order() * m, std::move(arcs));
}

Digraph subdivide(const Digraph& d, Arc arc) {
    if (!d.has_arc(arc.from, arc.to)) throw ParamError("subdivide: arc absent");
    int w = d.order();
    std::vector<Arc> arcs;
    arcs.reserve(d.arcs().size() + 1);
    for (const Arc& a : d.arcs())
        if (!(a == arc)) arcs.push_back(a);
    arcs.push_back({arc.from, w});
    arcs.push_back({w, arc.to});
    return Digraph(d.order() + 1, std::move(arcs));
}

} // namespace strongk
