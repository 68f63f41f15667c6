#include "strongk/gadgets.hpp"

#include <algorithm>

namespace strongk {

GadgetInstance build_dprime(const Digraph& d, int s1, int t1, int s2, int t2) {
    std::vector<int> ts{s1, t1, s2, t2};
    for (int v : ts)
        if (v < 0 || v >= d.order())
            throw ParamError("gadget terminal out of range");
    std::sort(ts.begin(), ts.end());
    if (std::adjacent_find(ts.begin(), ts.end()) != ts.end())
        throw ParamError("gadget terminals must be distinct");
    int x = d.order(), y = d.order() + 1;
    std::vector<Arc> arcs = d.arcs();
    arcs.push_back({t1, x});
    arcs.push_back({x, s1});
    arcs.push_back({t2, y});
    arcs.push_back({y, s2});
    arcs.push_back({x, s2});
    arcs.push_back({s2, x});
    arcs.push_back({y, t1});
    arcs.push_back({t1, y});
    GadgetInstance inst;
    inst.digraph = Digraph(d.order() + 2, std::move(arcs));
    inst.S = VertexSet({x, y});
    inst.s1 = s1;
    inst.t1 = t1;
    inst.s2 = s2;
    inst.t2 = t2;
    inst.x = x;
    inst.y = y;
    inst.stage = GadgetStage::Dprime;
    return inst;
}

GadgetInstance split_vertices(const GadgetInstance& inst) {
    if (inst.stage != GadgetStage::Dprime)
        throw ParamError("split_vertices expects a Dprime instance");
    int n0 = inst.digraph.order() - 2; // original vertices 0..n0-1
    int x = inst.x, y = inst.y;
    auto minus = [&](int u) { return u; };          // u- keeps its id
    auto plus = [&](int u) { return n0 + 2 + u; };  // u+ fresh, in id order
    std::vector<Arc> arcs;
    for (int u = 0; u < n0; ++u) arcs.push_back({minus(u), plus(u)});
    for (const Arc& a : inst.digraph.arcs()) {
        bool from_xy = (a.from == x || a.from == y);
        bool to_xy = (a.to == x || a.to == y);
        if (from_xy && to_xy)
            throw std::logic_error("Dprime has no x-y arcs");
        if (from_xy)
            arcs.push_back({a.from, minus(a.to)});
        else if (to_xy)
            arcs.push_back({plus(a.from), a.to});
        else
            arcs.push_back({plus(a.from), minus(a.to)});
    }
    GadgetInstance out;
    out.digraph = Digraph(2 * n0 + 2, std::move(arcs));
    out.S = inst.S;
    out.s1 = minus(inst.s1);
    out.t1 = plus(inst.t1);
    out.s2 = minus(inst.s2);
    out.t2 = plus(inst.t2);
    out.x = x;
    out.y = y;
    out.stage = GadgetStage::Ddouble;
    return out;
}

GadgetInstance add_xy_cycles(const GadgetInstance& inst, int ell) {
    if (inst.stage != GadgetStage::Ddouble)
        throw ParamError("add_xy_cycles expects a Ddouble instance");
    if (ell < 2) throw ParamError("add_xy_cycles requires ell >= 2");
    if (ell == 2) return inst;
    int n = inst.digraph.order();
    std::vector<Arc> arcs = inst.digraph.arcs();
    for (int i = 0; i < ell - 2; ++i) {
        int wa = n++, wb = n++;
        arcs.push_back({inst.x, wa});
        arcs.push_back({wa, inst.y});
        arcs.push_back({inst.y, wb});
        arcs.push_back({wb, inst.x});
    }
    GadgetInstance out = inst;
    out.digraph = Digraph(n, std::move(arcs));
    out.stage = GadgetStage::Dtriple;
    return out;
}

GadgetInstance extend_terminals(const GadgetInstance& inst, int k, int ell) {
    if (inst.stage != GadgetStage::Dtriple &&
        !(inst.stage == GadgetStage::Ddouble && ell == 2))
        throw ParamError("extend_terminals expects Dtriple (or Ddouble when "
                         "ell = 2)");
    if (k < 2) throw ParamError("extend_terminals requires k >= 2");
    if (k == 2) return inst;
    int n = inst.digraph.order();
    std::vector<Arc> arcs = inst.digraph.arcs();
    std::vector<int> satellites;
    for (int i = 0; i < k - 2; ++i) {
        int xi = n++;
        satellites.push_back(xi);
        for (int j = 0; j < ell; ++j) {
            int wa = n++, wb = n++;
            arcs.push_back({inst.x, wa});
            arcs.push_back({wa, xi});
            arcs.push_back({xi, wb});
            arcs.push_back({wb, inst.x});
        }
    }
    GadgetInstance out = inst;
    out.digraph = Digraph(n, std::move(arcs));
    out.satellites = satellites;
    std::vector<int> s{inst.x, inst.y};
    s.insert(s.end(), satellites.begin(), satellites.end());
    out.S = VertexSet(s);
    out.stage = GadgetStage::Dquad;
    return out;
}

namespace {

struct LinkageSearch {
    const Digraph* d;
    const std::vector<std::pair<int, int>>* pairs;
    std::vector<std::vector<bool>> used; // used[u][v]

    bool solve(size_t i) {
        if (i == pairs->size()) return true;
        auto [s, t] = (*pairs)[i];
        std::vector<bool> visited(d->order(), false);
        visited[s] = true;
        return extend(s, t, i, visited);
    }

    bool extend(int v, int t, size_t i, std::vector<bool>& visited) {
        if (v == t) return solve(i + 1);
        for (int w : d->out(v)) {
            if (visited[w] || used[v][w]) continue;
            visited[w] = true;
            used[v][w] = true;
            if (extend(w, t, i, visited)) return true;
            used[v][w] = false;
            visited[w] = false;
        }
        return false;
    }
};

} // namespace

bool weak_linkage_bruteforce(const Digraph& d,
                             const std::vector<std::pair<int, int>>& pairs,
                             int threshold) {
    if (d.arc_count() > threshold)
        throw CapError("weak linkage oracle limited to " +
                       std::to_string(threshold) + " arcs, got " +
                       std::to_string(d.arc_count()));
    for (auto [s, t] : pairs)
        if (s < 0 || s >= d.order() || t < 0 || t >= d.order())
            throw ParamError("linkage terminal out of range");
    LinkageSearch ls;
    ls.d = &d;
    ls.pairs = &pairs;
    ls.used.assign(d.order(), std::vector<bool>(d.order(), false));
    return ls.solve(0);
}

} // namespace strongk
