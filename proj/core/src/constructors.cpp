#include "strongk/constructors.hpp"

#include <algorithm>
#include <sstream>

namespace strongk {

namespace {

std::vector<Arc> cycle_arcs(const std::vector<int>& seq) {
    std::vector<Arc> arcs;
    for (size_t i = 0; i < seq.size(); ++i)
        arcs.push_back({seq[i], seq[(i + 1) % seq.size()]});
    return arcs;
}

std::vector<Arc> reversed_arcs(const std::vector<Arc>& arcs) {
    std::vector<Arc> out;
    out.reserve(arcs.size());
    for (const Arc& a : arcs) out.push_back({a.to, a.from});
    return out;
}

void sort_part(std::vector<Arc>& part) { std::sort(part.begin(), part.end()); }

// Verifies that the cycles partition all n(n-1) arcs and are Hamiltonian.
void check_decomposition(int n, const std::vector<std::vector<Arc>>& cycles) {
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    size_t total = 0;
    for (const auto& c : cycles) {
        if (c.size() != static_cast<size_t>(n))
            throw std::logic_error("decomposition cycle is not Hamiltonian");
        std::vector<int> outdeg(n, 0), indeg(n, 0);
        for (const Arc& a : c) {
            if (seen[a.from][a.to])
                throw std::logic_error("decomposition reuses an arc");
            seen[a.from][a.to] = true;
            ++outdeg[a.from];
            ++indeg[a.to];
            ++total;
        }
        for (int v = 0; v < n; ++v)
            if (outdeg[v] != 1 || indeg[v] != 1)
                throw std::logic_error("decomposition cycle degree mismatch");
        Digraph part(n, c);
        if (!is_strong(part))
            throw std::logic_error("decomposition cycle not a single cycle");
    }
    if (total != static_cast<size_t>(n) * (n - 1))
        throw std::logic_error("decomposition does not cover all arcs");
}

// Undirected Hamiltonian decomposition of the odd complete graph K_{2m+1}:
// the classic center-plus-zigzag cycle rotated m times.
std::vector<std::vector<int>> walecki_cycles(int n) {
    int m = (n - 1) / 2;
    int mod = n - 1;
    std::vector<std::vector<int>> cycles;
    for (int j = 0; j < m; ++j) {
        std::vector<int> seq{n - 1, j % mod};
        int lo = 1, hi = mod - 1;
        bool take_lo = true;
        while (static_cast<int>(seq.size()) < n) {
            int next = take_lo ? lo++ : hi--;
            seq.push_back((next + j) % mod);
            take_lo = !take_lo;
        }
        cycles.push_back(seq);
    }
    return cycles;
}

// Backtracking search for a decomposition of the remaining arcs into
// Hamiltonian cycles.  remaining[u][v] marks arcs still unused.
struct HamSearch {
    int n;
    long budget;
    std::vector<std::vector<bool>> remaining;
    std::vector<std::vector<int>> cycles;
    long nodes = 0;
    bool out_of_budget = false;

    bool solve(int cycles_needed) {
        if (cycles_needed == 0) return true;
        std::vector<int> path{0};
        std::vector<bool> visited(n, false);
        visited[0] = true;
        return extend(path, visited, cycles_needed);
    }

    bool extend(std::vector<int>& path, std::vector<bool>& visited,
                int cycles_needed) {
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        int v = path.back();
        if (static_cast<int>(path.size()) == n) {
            if (!remaining[v][0]) return false;
            std::vector<Arc> arcs = cycle_arcs(path);
            for (const Arc& a : arcs) remaining[a.from][a.to] = false;
            cycles.push_back(path);
            if (solve(cycles_needed - 1)) return true;
            cycles.pop_back();
            for (const Arc& a : arcs) remaining[a.from][a.to] = true;
            return false;
        }
        // Fail-first: try successors with the fewest remaining out-arcs.
        std::vector<std::pair<int, int>> order;
        for (int w = 0; w < n; ++w) {
            if (visited[w] || !remaining[v][w]) continue;
            int deg = 0;
            for (int z = 0; z < n; ++z)
                if (remaining[w][z]) ++deg;
            order.push_back({deg, w});
        }
        std::sort(order.begin(), order.end());
        for (auto [deg, w] : order) {
            (void)deg;
            path.push_back(w);
            visited[w] = true;
            if (extend(path, visited, cycles_needed)) return true;
            visited[w] = false;
            path.pop_back();
            if (out_of_budget) return false;
        }
        return false;
    }
};

std::optional<std::vector<std::vector<int>>> search_decomposition(
    int n, long budget) {
    HamSearch hs;
    hs.n = n;
    hs.budget = budget;
    hs.remaining.assign(n, std::vector<bool>(n, false));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) hs.remaining[u][v] = (u != v);
    // Fix the first cycle to the rotation: any decomposition can be
    // relabeled so that one of its cycles is the rotation, so this is
    // complete for the existence question.
    std::vector<int> rotation(n);
    for (int v = 0; v < n; ++v) rotation[v] = v;
    for (const Arc& a : cycle_arcs(rotation)) hs.remaining[a.from][a.to] = false;
    hs.cycles.push_back(rotation);
    if (hs.solve(n - 2)) return hs.cycles;
    if (hs.out_of_budget)
        throw CapError("hamiltonian decomposition search exceeded node "
                       "budget for n=" + std::to_string(n));
    return std::nullopt;
}

} // namespace

CycleCover parse_cycle_cover(const std::string& text) {
    CycleCover cover;
    std::istringstream in(text);
    std::string cycle_tok;
    while (std::getline(in, cycle_tok, ',')) {
        std::vector<int> cycle;
        std::istringstream cs(cycle_tok);
        std::string vtok;
        while (std::getline(cs, vtok, '-')) {
            if (vtok.empty() ||
                vtok.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("bad vertex in cycle cover: \"" + vtok +
                                 "\"");
            cycle.push_back(std::stoi(vtok));
        }
        if (cycle.empty()) throw ParseError("empty cycle in cover");
        cover.cycles.push_back(std::move(cycle));
    }
    if (cover.cycles.empty()) throw ParseError("empty cycle cover");
    return cover;
}

std::string format_cycle_cover(const CycleCover& cover) {
    std::string out;
    for (size_t i = 0; i < cover.cycles.size(); ++i) {
        if (i) out += ",";
        for (size_t j = 0; j < cover.cycles[i].size(); ++j) {
            if (j) out += "-";
            out += std::to_string(cover.cycles[i][j]);
        }
    }
    return out;
}

std::vector<std::vector<Arc>> hamiltonian_decomposition(int n,
                                                        int search_limit) {
    if (n < 3) throw ParamError("hamiltonian_decomposition needs n >= 3");
    if (n == 4 || n == 6)
        throw ParamError("no hamiltonian decomposition exists for n = " +
                         std::to_string(n));
    std::vector<std::vector<Arc>> cycles;
    if (n % 2 == 1) {
        for (const auto& seq : walecki_cycles(n)) {
            cycles.push_back(cycle_arcs(seq));
            cycles.push_back(reversed_arcs(cycles.back()));
        }
    } else {
        if (n > search_limit)
            throw CapError("even-order decomposition search limited to n <= " +
                           std::to_string(search_limit));
        auto found = search_decomposition(n, 50000000);
        if (!found)
            throw std::logic_error("decomposition search failed for n = " +
                                   std::to_string(n));
        for (const auto& seq : *found) cycles.push_back(cycle_arcs(seq));
    }
    for (auto& c : cycles) sort_part(c);
    check_decomposition(n, cycles);
    return cycles;
}

bool hamiltonian_decomposition_exists(int n, long node_budget) {
    if (n < 2) throw ParamError("needs n >= 2");
    if (n == 2) return true; // the digon itself
    return search_decomposition(n, node_budget).has_value();
}

int lambda_k_complete_value(int n, int k) {
    if (k < 2 || k > n) throw ParamError("k out of range");
    return (k == n && (k == 4 || k == 6)) ? n - 2 : n - 1;
}

namespace {

std::vector<Arc> star_digons(int center, const std::vector<int>& others) {
    std::vector<Arc> arcs;
    for (int s : others) {
        arcs.push_back({center, s});
        arcs.push_back({s, center});
    }
    return arcs;
}

// Relabel a packing part built on local ids 0..k-1 onto the terminal set.
std::vector<Arc> relabel(const std::vector<Arc>& part,
                         const std::vector<int>& to) {
    std::vector<Arc> out;
    out.reserve(part.size());
    for (const Arc& a : part) out.push_back({to[a.from], to[a.to]});
    return out;
}

} // namespace

Packing complete_packing(int n, const VertexSet& s) {
    int k = s.size();
    if (k < 2 || k > n) throw ParamError("complete_packing: invalid S");
    for (int v : s.members)
        if (v < 0 || v >= n) throw ParamError("complete_packing: S out of range");
    const std::vector<int>& u = s.members;
    std::vector<int> outside;
    for (int v = 0; v < n; ++v)
        if (!s.contains(v)) outside.push_back(v);

    Packing p;
    p.S = s;
    if (k == n && (n == 4 || n == 6)) {
        // Both orientations of one (n=4) or two edge-disjoint (n=6)
        // Hamiltonian cycles; the missing (n-1)-cycle packing cannot exist.
        std::vector<std::vector<int>> base;
        if (n == 4) {
            base = {{0, 1, 2, 3}};
        } else {
            base = {{0, 1, 2, 3, 4, 5}, {0, 2, 4, 1, 5, 3}};
        }
        for (const auto& seq : base) {
            p.parts.push_back(cycle_arcs(seq));
            p.parts.push_back(reversed_arcs(p.parts.back()));
        }
    } else if (k != 4 && k != 6 && n != 4 && n != 6 && n >= 3) {
        // The host itself decomposes into n-1 Hamiltonian cycles; each is a
        // strong spanning part and so contains S.
        for (auto& cyc : hamiltonian_decomposition(n))
            p.parts.push_back(std::move(cyc));
    } else if (k == 2) {
        p.parts.push_back({{u[0], u[1]}, {u[1], u[0]}});
        for (int v : outside) p.parts.push_back(star_digons(v, u));
    } else if (k != 4 && k != 6) {
        // n is 4 or 6 but k is not: no spanning decomposition exists, so
        // decompose the complete bidirected digraph on S into k-1
        // Hamiltonian cycles and give every outside vertex a star part.
        for (const auto& cyc : hamiltonian_decomposition(k))
            p.parts.push_back(relabel(cyc, u));
        for (int v : outside) p.parts.push_back(star_digons(v, u));
    } else {
        // k in {4, 6} with k < n: k-2 cycles inside S plus two glue parts
        // through the first outside vertex, then stars for the rest.
        int v1 = outside.front();
        std::vector<std::vector<Arc>> locals;
        if (k == 4) {
            locals.push_back(cycle_arcs({u[0], u[1], u[2], u[3]}));
            locals.push_back(reversed_arcs(locals.back()));
            locals.push_back({{v1, u[0]},
                              {u[0], u[2]},
                              {u[2], v1},
                              {v1, u[1]},
                              {u[1], u[3]},
                              {u[3], v1}});
            locals.push_back(reversed_arcs(locals.back()));
        } else {
            locals.push_back(cycle_arcs({u[0], u[1], u[2], u[3], u[4], u[5]}));
            locals.push_back(reversed_arcs(locals.back()));
            locals.push_back(cycle_arcs({u[0], u[2], u[5], u[3], u[1], u[4]}));
            locals.push_back(reversed_arcs(locals.back()));
            locals.push_back({{u[0], v1},
                              {v1, u[1]},
                              {u[1], u[5]},
                              {u[5], v1},
                              {v1, u[4]},
                              {u[4], u[2]},
                              {u[2], v1},
                              {v1, u[3]},
                              {u[3], u[0]}});
            locals.push_back(reversed_arcs(locals.back()));
        }
        for (auto& part : locals) p.parts.push_back(std::move(part));
        for (size_t i = 1; i < outside.size(); ++i)
            p.parts.push_back(star_digons(outside[i], u));
    }
    for (auto& part : p.parts) sort_part(part);
    Digraph host = standard_family(Family::complete_bidirected, n);
    if (static_cast<int>(p.parts.size()) != lambda_k_complete_value(n, k) ||
        !verify_packing(host, p))
        throw std::logic_error("complete_packing self-verification failed");
    return p;
}

namespace {

// Pieces of the product construction: a factor part copied into one fiber.
std::vector<Arc> g_fiber(const std::vector<Arc>& part, int j, int h_order) {
    std::vector<Arc> out;
    out.reserve(part.size());
    for (const Arc& a : part)
        out.push_back({product_vertex(a.from, j, h_order),
                       product_vertex(a.to, j, h_order)});
    return out;
}

std::vector<Arc> h_fiber(const std::vector<Arc>& part, int i, int h_order) {
    std::vector<Arc> out;
    out.reserve(part.size());
    for (const Arc& a : part)
        out.push_back({product_vertex(i, a.from, h_order),
                       product_vertex(i, a.to, h_order)});
    return out;
}

std::vector<Arc> concat(std::initializer_list<std::vector<Arc>> pieces) {
    std::vector<Arc> out;
    for (const auto& piece : pieces)
        out.insert(out.end(), piece.begin(), piece.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Head of the lexicographically smallest out-arc of v inside the part.
// Parts are arc-disjoint at v, so across parts these heads are distinct.
int chosen_out_neighbor(const std::vector<Arc>& part, int v) {
    for (const Arc& a : part)
        if (a.from == v) return a.to;
    throw std::logic_error("factor part has no out-arc at a terminal");
}

std::vector<std::vector<Arc>> factor_pair_packing(const Digraph& d, int a,
                                                  int b, int count,
                                                  const SolverConfig& cfg) {
    LambdaResult r = lambda_S_exact(d, VertexSet({a, b}), cfg);
    if (r.value < count)
        throw std::logic_error("factor packing smaller than lambda_2");
    auto parts = r.certificate.parts;
    parts.resize(count);
    return parts;
}

} // namespace

Packing product_packing(const Digraph& g, const Digraph& h, const VertexSet& s,
                        const SolverConfig& cfg) {
    if (g.order() < 2 || h.order() < 2)
        throw ParamError("product_packing: factors need >= 2 vertices");
    if (!is_strong(g) || !is_strong(h))
        throw ParamError("product_packing: factors must be strong");
    if (s.size() != 2) throw ParamError("product_packing: |S| must be 2");
    int m = h.order();
    int x = s.members[0], y = s.members[1];
    if (x < 0 || y >= g.order() * m)
        throw ParamError("product_packing: S out of range");
    int ux = x / m, vx = x % m, uy = y / m, vy = y % m;

    int tg = lambda_k_exact(g, 2, cfg).value;
    int th = lambda_k_exact(h, 2, cfg).value;

    Packing p;
    p.S = s;
    if (ux == uy) {
        // Same H-fiber: th parts inside it, tg parts crossing fibers.
        auto ph = factor_pair_packing(h, vx, vy, th, cfg);
        int u2 = ux == 0 ? 1 : 0;
        auto pg = factor_pair_packing(g, ux, u2, tg, cfg);
        for (int j = 0; j < th; ++j) p.parts.push_back(h_fiber(ph[j], ux, m));
        for (int i = 0; i < tg; ++i) {
            int ti = chosen_out_neighbor(pg[i], ux);
            p.parts.push_back(concat({g_fiber(pg[i], vx, m),
                                      h_fiber(ph[0], ti, m),
                                      g_fiber(pg[i], vy, m)}));
        }
    } else if (vx == vy) {
        auto pg = factor_pair_packing(g, ux, uy, tg, cfg);
        int v2 = vx == 0 ? 1 : 0;
        auto ph = factor_pair_packing(h, vx, v2, th, cfg);
        for (int i = 0; i < tg; ++i) p.parts.push_back(g_fiber(pg[i], vx, m));
        for (int j = 0; j < th; ++j) {
            int tj = chosen_out_neighbor(ph[j], vx);
            p.parts.push_back(concat({h_fiber(ph[j], ux, m),
                                      g_fiber(pg[0], tj, m),
                                      h_fiber(ph[j], uy, m)}));
        }
    } else {
        auto pg = factor_pair_packing(g, ux, uy, tg, cfg);
        auto ph = factor_pair_packing(h, vx, vy, th, cfg);
        std::vector<int> t(tg), tp(th);
        int istar = -1, jstar = -1;
        for (int i = 0; i < tg; ++i) {
            t[i] = chosen_out_neighbor(pg[i], ux);
            if (t[i] == uy) istar = i;
        }
        for (int j = 0; j < th; ++j) {
            tp[j] = chosen_out_neighbor(ph[j], vx);
            if (tp[j] == vy) jstar = j;
        }
        // Fiber copies of the 0-indexed factor parts serve as the chosen
        // "one strong subgraph" in intermediate fibers; when a chosen
        // out-neighbor lands in the destination fiber, point the middle at
        // the conflicting part so that one repair fixes both sides.
        auto middle_h = [&](int i) { return (i == istar && jstar >= 0) ? jstar : 0; };
        auto middle_g = [&](int j) { return (j == jstar && istar >= 0) ? istar : 0; };
        std::vector<std::vector<Arc>> gparts, hparts;
        for (int i = 0; i < tg; ++i)
            gparts.push_back(concat({g_fiber(pg[i], vx, m),
                                     h_fiber(ph[middle_h(i)], t[i], m),
                                     g_fiber(pg[i], vy, m)}));
        for (int j = 0; j < th; ++j)
            hparts.push_back(concat({h_fiber(ph[j], ux, m),
                                     g_fiber(pg[middle_g(j)], tp[j], m),
                                     h_fiber(ph[j], uy, m)}));
        if (istar >= 0 && jstar >= 0) {
            gparts[istar] = concat({g_fiber(pg[istar], vx, m),
                                    h_fiber(ph[jstar], uy, m)});
            hparts[jstar] = concat({h_fiber(ph[jstar], ux, m),
                                    g_fiber(pg[istar], vy, m)});
        } else if (istar >= 0) {
            gparts[istar] = concat({g_fiber(pg[istar], vx, m),
                                    h_fiber(ph[0], uy, m)});
            hparts[0] = concat({h_fiber(ph[0], ux, m),
                                g_fiber(pg[istar], vy, m)});
        } else if (jstar >= 0) {
            gparts[0] = concat({g_fiber(pg[0], vx, m),
                                h_fiber(ph[jstar], uy, m)});
            hparts[jstar] = concat({h_fiber(ph[jstar], ux, m),
                                    g_fiber(pg[0], vy, m)});
        }
        for (auto& part : gparts) p.parts.push_back(std::move(part));
        for (auto& part : hparts) p.parts.push_back(std::move(part));
    }
    Digraph host = cartesian_product(g, h);
    if (static_cast<int>(p.parts.size()) != tg + th ||
        !verify_packing(host, p))
        throw std::logic_error("product_packing self-verification failed");
    return p;
}

Digraph minimal_graph(int n, const CycleCover& cover) {
    if (n < 2) throw ParamError("minimal_graph needs n >= 2");
    std::vector<bool> covered(n, false);
    std::vector<Arc> deleted;
    for (const auto& cycle : cover.cycles) {
        if (cycle.size() < 2)
            throw ParamError("cover cycle shorter than 2 vertices");
        for (int v : cycle) {
            if (v < 0 || v >= n) throw ParamError("cover vertex out of range");
            if (covered[v]) throw ParamError("cover cycles overlap");
            covered[v] = true;
        }
        if (cycle.size() == 2) {
            deleted.push_back({cycle[0], cycle[1]});
            deleted.push_back({cycle[1], cycle[0]});
        } else {
            for (const Arc& a : cycle_arcs(cycle)) deleted.push_back(a);
        }
    }
    int covered_count = 0;
    for (bool b : covered) covered_count += b ? 1 : 0;
    if (covered_count < n - 1)
        throw ParamError("cover must reach all but at most one vertex");
    std::vector<Arc> arcs;
    std::sort(deleted.begin(), deleted.end());
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if (!std::binary_search(deleted.begin(), deleted.end(),
                                    Arc{u, v}))
                arcs.push_back({u, v});
        }
    return Digraph(n, std::move(arcs));
}

bool recognize_minimal_2_nminus2(const Digraph& d) {
    int n = d.order();
    if (n < 2) return false;
    std::vector<int> mout(n, -1), min_(n, -1);
    int deleted = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v || d.has_arc(u, v)) continue;
            ++deleted;
            if (mout[u] >= 0 || min_[v] >= 0) return false;
            mout[u] = v;
            min_[v] = u;
        }
    if (deleted == 0) return false;
    int touched = 0;
    for (int v = 0; v < n; ++v) {
        bool has_out = mout[v] >= 0, has_in = min_[v] >= 0;
        if (has_out != has_in) return false; // a path end, not a cycle
        if (has_out) ++touched;
    }
    return touched >= n - 1;
}

namespace {

struct DeletedStructure {
    std::vector<int> mout, min_;   // deleted successor/predecessor or -1
    std::vector<int> cycle_id;     // -1 when uncovered
    std::vector<int> cycle_len;
};

DeletedStructure deleted_structure(const Digraph& d) {
    int n = d.order();
    DeletedStructure s;
    s.mout.assign(n, -1);
    s.min_.assign(n, -1);
    s.cycle_id.assign(n, -1);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && !d.has_arc(u, v)) {
                s.mout[u] = v;
                s.min_[v] = u;
            }
    for (int v = 0; v < n; ++v) {
        if (s.mout[v] < 0 || s.cycle_id[v] >= 0) continue;
        int id = static_cast<int>(s.cycle_len.size());
        int len = 0;
        for (int w = v; s.cycle_id[w] < 0; w = s.mout[w]) {
            s.cycle_id[w] = id;
            ++len;
        }
        s.cycle_len.push_back(len);
    }
    return s;
}

std::vector<Arc> digon(int a, int b) { return {{a, b}, {b, a}}; }

} // namespace

Packing minimal_packing(const Digraph& d, const VertexSet& s) {
    if (!recognize_minimal_2_nminus2(d))
        throw ParamError("minimal_packing: digraph not of the deleted-cycle "
                         "form");
    if (s.size() != 2) throw ParamError("minimal_packing: |S| must be 2");
    require_valid_terminals(d, s);
    int n = d.order();
    DeletedStructure ds = deleted_structure(d);
    int x = s.members[0], y = s.members[1];

    Packing p;
    p.S = s;
    std::vector<int> blocked; // vertices that cannot take a plain star part
    auto star = [&](int u) { return concat({digon(u, x), digon(u, y)}); };
    auto push = [&](std::vector<Arc> part) {
        sort_part(part);
        p.parts.push_back(std::move(part));
    };

    int cx = ds.cycle_id[x], cy = ds.cycle_id[y];
    if (cx >= 0 && cx == cy) {
        int t = ds.cycle_len[cx];
        if (ds.mout[x] == y && ds.mout[y] == x) {
            // Deleted digon on {x, y}: direct x-y arcs are gone, every
            // other vertex carries a star.
        } else if (ds.mout[x] == y || ds.mout[y] == x) {
            // Adjacent on the deleted cycle; orient so the deleted arc is
            // x -> y.
            if (ds.mout[y] == x) std::swap(x, y);
            int c = ds.mout[y], b = ds.min_[x];
            if (t == 3) {
                push({{y, x}, {x, c}, {c, y}});
                blocked = {c};
            } else {
                push({{y, x}, {x, c}, {c, y}});
                push({{c, x}, {x, b}, {b, c}, {b, y}, {y, b}});
                blocked = {b, c};
            }
        } else {
            // Nonadjacent on the same deleted cycle.
            int a = ds.mout[x], b = ds.min_[x], c = ds.mout[y],
                d2 = ds.min_[y];
            push(digon(x, y));
            push({{y, a}, {a, x}, {x, b}, {b, y}});
            if (a == d2 && b == c) {
                blocked = {a, b};
            } else if (a == d2) {
                push({{x, c}, {c, y}, {y, b}, {b, c}, {c, x}});
                blocked = {a, b, c};
            } else if (b == c) {
                push({{x, d2}, {d2, a}, {a, y}, {y, d2}, {d2, x}});
                blocked = {a, b, d2};
            } else {
                push({{x, c}, {c, y}, {y, d2}, {d2, x}});
                push({{x, d2}, {d2, a}, {a, y}, {y, b}, {b, c}, {c, x}});
                blocked = {a, b, c, d2};
            }
        }
    } else if (cx < 0 || cy < 0) {
        // One terminal uncovered by the deleted cycles.
        if (cy < 0) std::swap(x, y); // now x is the uncovered one
        int c = ds.mout[y], d2 = ds.min_[y];
        push(digon(x, y));
        if (c == d2) {
            blocked = {c};
        } else {
            push({{x, c}, {c, y}, {y, d2}, {d2, x}});
            blocked = {c, d2};
        }
    } else {
        // Distinct deleted cycles.
        int a = ds.mout[x], b = ds.min_[x], c = ds.mout[y], d2 = ds.min_[y];
        bool x_digon = (ds.cycle_len[cx] == 2), y_digon = (ds.cycle_len[cy] == 2);
        push(digon(x, y));
        if (!x_digon && !y_digon) {
            push({{x, b}, {b, a}, {a, x}, {y, a}, {a, y}});
            push({{y, d2}, {d2, c}, {c, y}, {x, d2}, {d2, x}});
            push(concat({digon(x, c), digon(y, b), digon(b, c)}));
            blocked = {a, b, c, d2};
        } else if (x_digon && !y_digon) {
            push({{x, c}, {c, y}, {y, d2}, {d2, x}});
            push({{x, d2}, {d2, a}, {a, y}, {y, a}, {a, c}, {c, x}});
            blocked = {a, c, d2};
        } else if (!x_digon && y_digon) {
            push({{y, a}, {a, x}, {x, b}, {b, y}});
            push({{y, b}, {b, c}, {c, x}, {x, c}, {c, a}, {a, y}});
            blocked = {a, b, c};
        } else {
            push(concat({digon(x, c), digon(y, a), digon(a, c)}));
            blocked = {a, c};
        }
    }
    std::sort(blocked.begin(), blocked.end());
    for (int u = 0; u < n; ++u) {
        if (u == x || u == y) continue;
        if (std::binary_search(blocked.begin(), blocked.end(), u)) continue;
        push(star(u));
    }
    if (static_cast<int>(p.parts.size()) != n - 2 || !verify_packing(d, p))
        throw std::logic_error("minimal_packing self-verification failed");
    return p;
}

} // namespace strongk
