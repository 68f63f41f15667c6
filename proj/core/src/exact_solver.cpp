#include "strongk/exact_solver.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include <json.hpp>

namespace strongk {

namespace {

constexpr int kMaxSolverArcs = 64;
constexpr int kMaxSolverVertices = 16;

// Arc-indexed view of a digraph for mask arithmetic.  Arc index order is the
// sorted arc order of Digraph, which fixes every ordering downstream.
struct Compiled {
    int n = 0;
    std::vector<Arc> arcs;
    std::vector<uint32_t> tail_bit, head_bit; // vertex bitmasks
    std::vector<uint64_t> out_of;             // arc mask with tail v
    std::vector<uint64_t> in_to;              // arc mask with head v
    uint64_t all = 0;

    explicit Compiled(const Digraph& d) : n(d.order()), arcs(d.arcs()) {
        if (static_cast<int>(arcs.size()) > kMaxSolverArcs)
            throw CapError("exact solver limited to 64 arcs, got " +
                           std::to_string(arcs.size()));
        if (n > kMaxSolverVertices)
            throw CapError("exact solver limited to 16 vertices, got " +
                           std::to_string(n));
        tail_bit.resize(arcs.size());
        head_bit.resize(arcs.size());
        out_of.assign(n, 0);
        in_to.assign(n, 0);
        for (size_t i = 0; i < arcs.size(); ++i) {
            tail_bit[i] = uint32_t{1} << arcs[i].from;
            head_bit[i] = uint32_t{1} << arcs[i].to;
            out_of[arcs[i].from] |= uint64_t{1} << i;
            in_to[arcs[i].to] |= uint64_t{1} << i;
            all |= uint64_t{1} << i;
        }
    }

    uint32_t endpoints(uint64_t mask) const {
        uint32_t v = 0;
        while (mask) {
            int i = std::countr_zero(mask);
            mask &= mask - 1;
            v |= tail_bit[i] | head_bit[i];
        }
        return v;
    }

    // True iff every vertex of w is reachable from every other using only
    // arcs of mask (arcs outside w are ignored by construction of callers).
    bool strong_spanning(uint32_t w, uint64_t mask) const {
        if (w == 0) return false;
        uint32_t start = w & (~w + 1);
        uint32_t fwd = start, bwd = start;
        for (;;) {
            uint32_t prev = fwd;
            uint64_t rest = mask;
            while (rest) {
                int i = std::countr_zero(rest);
                rest &= rest - 1;
                if (fwd & tail_bit[i]) fwd |= head_bit[i];
            }
            if (fwd == prev) break;
        }
        if ((fwd & w) != w) return false;
        for (;;) {
            uint32_t prev = bwd;
            uint64_t rest = mask;
            while (rest) {
                int i = std::countr_zero(rest);
                rest &= rest - 1;
                if (bwd & head_bit[i]) bwd |= tail_bit[i];
            }
            if (bwd == prev) break;
        }
        return (bwd & w) == w;
    }
};

struct MaskCandidate {
    uint64_t arcs = 0;
    uint32_t vertices = 0;
    int size = 0;
};

// Enumerates the inclusion-minimal strong-spanning arc subsets of the
// induced arc set on w.  For fixed w the property is monotone upward, so a
// set is minimal exactly when every single-arc deletion breaks it.  The
// branching fixes a source component X of the partial set and splits on
// which entering arc a strong-spanning superset uses; the exclusion mask
// keeps branches disjoint, so every minimal set is produced exactly once.
class PerWEnumerator {
  public:
    PerWEnumerator(const Compiled& c, uint32_t w, uint64_t avail, long budget)
        : c_(c), w_(w), avail_(avail), budget_(budget) {}

    void run(std::vector<uint64_t>& out) {
        out_ = &out;
        recurse(0, 0);
    }

    long nodes_used() const { return nodes_; }

  private:
    void recurse(uint64_t p, uint64_t r) {
        if (++nodes_ > budget_)
            throw CapError("minimal candidate search exceeded node budget");
        // SCC structure of (w, p) via bit closure.
        uint32_t reach[kMaxSolverVertices];
        uint32_t wrest = w_;
        while (wrest) {
            int v = std::countr_zero(wrest);
            wrest &= wrest - 1;
            reach[v] = uint32_t{1} << v;
        }
        uint64_t rest = p;
        while (rest) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            reach[c_.arcs[i].from] |= uint32_t{1} << c_.arcs[i].to;
        }
        uint32_t scan = w_;
        while (scan) {
            int k = std::countr_zero(scan);
            scan &= scan - 1;
            uint32_t others = w_;
            while (others) {
                int v = std::countr_zero(others);
                others &= others - 1;
                if (reach[v] & (uint32_t{1} << k)) reach[v] |= reach[k];
            }
        }
        // Component of the lowest vertex; if it is everything, leaf.
        int v0 = std::countr_zero(w_);
        uint32_t comp0 = 0;
        uint32_t probe = w_;
        while (probe) {
            int v = std::countr_zero(probe);
            probe &= probe - 1;
            if ((reach[v0] & (uint32_t{1} << v)) &&
                (reach[v] & (uint32_t{1} << v0)))
                comp0 |= uint32_t{1} << v;
        }
        if (comp0 == w_) {
            if (is_minimal(p)) out_->push_back(p);
            return;
        }
        // Pick the source component with the fewest available entering arcs.
        uint32_t assigned = 0;
        int best_count = -1;
        uint64_t best_arcs = 0;
        uint32_t sweep = w_;
        while (sweep) {
            int v = std::countr_zero(sweep);
            sweep &= sweep - 1;
            if (assigned & (uint32_t{1} << v)) continue;
            uint32_t x = 0;
            uint32_t others = w_;
            while (others) {
                int u = std::countr_zero(others);
                others &= others - 1;
                if ((reach[v] & (uint32_t{1} << u)) &&
                    (reach[u] & (uint32_t{1} << v)))
                    x |= uint32_t{1} << u;
            }
            assigned |= x;
            // Source component: no p-arc enters it from outside.
            bool source = true;
            uint64_t pr = p;
            while (pr) {
                int i = std::countr_zero(pr);
                pr &= pr - 1;
                if ((c_.head_bit[i] & x) && !(c_.tail_bit[i] & x)) {
                    source = false;
                    break;
                }
            }
            if (!source) continue;
            uint64_t entering = 0;
            uint64_t free_arcs = avail_ & ~p & ~r;
            uint64_t fr = free_arcs;
            while (fr) {
                int i = std::countr_zero(fr);
                fr &= fr - 1;
                if ((c_.head_bit[i] & x) && !(c_.tail_bit[i] & x))
                    entering |= uint64_t{1} << i;
            }
            int cnt = std::popcount(entering);
            if (cnt == 0) return; // this component can never be reached
            if (best_count < 0 || cnt < best_count) {
                best_count = cnt;
                best_arcs = entering;
            }
        }
        uint64_t blocked = 0;
        uint64_t br = best_arcs;
        while (br) {
            int i = std::countr_zero(br);
            br &= br - 1;
            recurse(p | (uint64_t{1} << i), r | blocked);
            blocked |= uint64_t{1} << i;
        }
    }

    bool is_minimal(uint64_t p) const {
        uint64_t rest = p;
        while (rest) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            if (c_.strong_spanning(w_, p & ~(uint64_t{1} << i))) return false;
        }
        return true;
    }

    const Compiled& c_;
    uint32_t w_;
    uint64_t avail_;
    long budget_;
    long nodes_ = 0;
    std::vector<uint64_t>* out_ = nullptr;
};

std::vector<MaskCandidate> enumerate_candidates(const Compiled& c,
                                                const VertexSet& s,
                                                const SolverConfig& cfg) {
    uint32_t s_mask = 0;
    for (int v : s.members) s_mask |= uint32_t{1} << v;
    uint32_t extra = 0;
    for (int v = 0; v < c.n; ++v)
        if (!(s_mask & (uint32_t{1} << v))) extra |= uint32_t{1} << v;

    // Iterate supersets of S in increasing popcount so that containment of a
    // smaller-support candidate can be filtered as we go.
    std::vector<uint32_t> supersets;
    for (uint32_t sub = extra;; sub = (sub - 1) & extra) {
        supersets.push_back(s_mask | sub);
        if (sub == 0) break;
    }
    std::sort(supersets.begin(), supersets.end(),
              [](uint32_t a, uint32_t b) {
                  int pa = std::popcount(a), pb = std::popcount(b);
                  return pa != pb ? pa < pb : a < b;
              });

    std::vector<MaskCandidate> result;
    long budget = 200L * cfg.candidate_cap;
    std::vector<uint64_t> found;
    for (uint32_t w : supersets) {
        // Arcs inside w.
        uint64_t avail = 0;
        for (size_t i = 0; i < c.arcs.size(); ++i)
            if ((c.tail_bit[i] & w) && (c.head_bit[i] & w))
                avail |= uint64_t{1} << i;
        // Quick reject: every vertex of w needs an in and an out arc.
        bool feasible = true;
        uint32_t probe = w;
        while (probe) {
            int v = std::countr_zero(probe);
            probe &= probe - 1;
            if (!(c.out_of[v] & avail) || !(c.in_to[v] & avail)) {
                feasible = false;
                break;
            }
        }
        if (!feasible) continue;
        found.clear();
        PerWEnumerator en(c, w, avail, budget);
        en.run(found);
        budget -= en.nodes_used();
        std::sort(found.begin(), found.end());
        found.erase(std::unique(found.begin(), found.end()), found.end());
        for (uint64_t p : found) {
            bool contains_smaller = false;
            for (const MaskCandidate& prev : result) {
                if ((prev.vertices & w) == prev.vertices &&
                    prev.vertices != w && (prev.arcs & p) == prev.arcs) {
                    contains_smaller = true;
                    break;
                }
            }
            if (contains_smaller) continue;
            result.push_back({p, w, std::popcount(p)});
            if (static_cast<int>(result.size()) > cfg.candidate_cap)
                throw CapError("minimal candidate count exceeds cap " +
                               std::to_string(cfg.candidate_cap));
        }
    }
    // Deterministic order: size ascending, then lexicographic arc list.
    // Arc indices follow the sorted arc order, so comparing index sequences
    // low-to-high is the lexicographic order on arc lists.
    std::sort(result.begin(), result.end(),
              [](const MaskCandidate& a, const MaskCandidate& b) {
                  if (a.size != b.size) return a.size < b.size;
                  uint64_t xa = a.arcs, xb = b.arcs;
                  while (xa && xb) {
                      int ia = std::countr_zero(xa), ib = std::countr_zero(xb);
                      if (ia != ib) return ia < ib;
                      xa &= xa - 1;
                      xb &= xb - 1;
                  }
                  return xa == 0 && xb != 0;
              });
    return result;
}

std::vector<Arc> mask_to_arcs(const Compiled& c, uint64_t mask) {
    std::vector<Arc> out;
    while (mask) {
        int i = std::countr_zero(mask);
        mask &= mask - 1;
        out.push_back(c.arcs[i]);
    }
    return out;
}

// Branch and bound over minimal candidates.  Branch rule: the lowest-indexed
// free arc incident to S is either used by some part (iterate candidates
// containing it, lowest index first) or blocked for good.
class Packer {
  public:
    Packer(const Compiled& c, const std::vector<MaskCandidate>& cands,
           const VertexSet& s, std::optional<int> target)
        : c_(c), cands_(cands), target_(target) {
        for (int v : s.members) s_arcs_ |= c.out_of[v] | c.in_to[v];
        for (int v : s.members) s_vertices_.push_back(v);
        min_size_ = cands.empty() ? 1 : cands.front().size;
    }

    int run(std::vector<int>& best_choice) {
        std::vector<int> chosen;
        recurse(0, 0, chosen);
        best_choice = best_choice_;
        return best_;
    }

  private:
    void recurse(uint64_t used, uint64_t blocked, std::vector<int>& chosen) {
        if (done_) return;
        int count = static_cast<int>(chosen.size());
        if (count > best_) {
            best_ = count;
            best_choice_ = chosen;
            if (target_ && best_ >= *target_) {
                done_ = true;
                return;
            }
        }
        uint64_t dead = used | blocked;
        // Remaining-degree bound: every further part needs an unused,
        // unblocked out-arc of every terminal.
        int head_room = kMaxSolverArcs;
        for (int v : s_vertices_)
            head_room =
                std::min(head_room, std::popcount(c_.out_of[v] & ~dead));
        int free_arcs = std::popcount(c_.all & ~dead);
        head_room = std::min(head_room, free_arcs / min_size_);
        int limit = target_ ? *target_ : best_ + 1;
        if (count + head_room < limit) return;
        uint64_t pivot_pool = s_arcs_ & ~dead;
        if (!pivot_pool) return;
        uint64_t pivot = pivot_pool & (~pivot_pool + 1);
        for (size_t i = 0; i < cands_.size(); ++i) {
            const MaskCandidate& cand = cands_[i];
            if (!(cand.arcs & pivot)) continue;
            if (cand.arcs & dead) continue;
            chosen.push_back(static_cast<int>(i));
            recurse(used | cand.arcs, blocked, chosen);
            chosen.pop_back();
            if (done_) return;
        }
        recurse(used, blocked | pivot, chosen);
    }

    const Compiled& c_;
    const std::vector<MaskCandidate>& cands_;
    std::optional<int> target_;
    uint64_t s_arcs_ = 0;
    std::vector<int> s_vertices_;
    int min_size_ = 1;
    int best_ = 0;
    std::vector<int> best_choice_;
    bool done_ = false;
};

Packing make_packing(const Compiled& c, const VertexSet& s,
                     const std::vector<MaskCandidate>& cands,
                     const std::vector<int>& choice) {
    Packing p;
    p.S = s;
    for (int idx : choice) p.parts.push_back(mask_to_arcs(c, cands[idx].arcs));
    std::sort(p.parts.begin(), p.parts.end(),
              [](const std::vector<Arc>& a, const std::vector<Arc>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    return p;
}

void subsets_lex(int n, int k, const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        if (!fn(idx)) return;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

std::vector<std::vector<Arc>> minimal_candidates(const Digraph& d,
                                                 const VertexSet& s,
                                                 const SolverConfig& cfg) {
    require_valid_terminals(d, s);
    Compiled c(d);
    auto cands = enumerate_candidates(c, s, cfg);
    std::vector<std::vector<Arc>> out;
    out.reserve(cands.size());
    for (const auto& m : cands) out.push_back(mask_to_arcs(c, m.arcs));
    return out;
}

LambdaResult lambda_S_exact(const Digraph& d, const VertexSet& s,
                            const SolverConfig& cfg) {
    require_valid_terminals(d, s);
    Compiled c(d);
    auto cands = enumerate_candidates(c, s, cfg);
    Packer packer(c, cands, s, std::nullopt);
    std::vector<int> choice;
    int value = packer.run(choice);
    LambdaResult r;
    r.value = value;
    r.witness_S = s;
    r.certificate = make_packing(c, s, cands, choice);
    return r;
}

std::pair<bool, std::optional<Packing>> decide_lambda_S(
    const Digraph& d, const VertexSet& s, int ell, const SolverConfig& cfg) {
    if (ell < 1) throw ParamError("decide_lambda_S requires ell >= 1");
    require_valid_terminals(d, s);
    Compiled c(d);
    auto cands = enumerate_candidates(c, s, cfg);
    Packer packer(c, cands, s, ell);
    std::vector<int> choice;
    int value = packer.run(choice);
    if (value >= ell)
        return {true, make_packing(c, s, cands, choice)};
    return {false, std::nullopt};
}

LambdaResult lambda_k_exact(const Digraph& d, int k, const SolverConfig& cfg) {
    if (k < 2 || k > d.order())
        throw ParamError("k out of range: " + std::to_string(k));
    LambdaResult best;
    best.value = -1;
    subsets_lex(d.order(), k, [&](const std::vector<int>& idx) {
        VertexSet s(idx);
        if (best.value == 0) return false; // the global minimum
        if (best.value >= 1) {
            // lambda_S >= current minimum cannot improve it; ties keep the
            // lexicographically earlier witness.
            auto [ge, cert] = decide_lambda_S(d, s, best.value, cfg);
            (void)cert;
            if (ge) return true;
        }
        LambdaResult r = lambda_S_exact(d, s, cfg);
        if (best.value < 0 || r.value < best.value) best = r;
        return true;
    });
    return best;
}

namespace {

// Strongness check for the oracle, deliberately independent of the
// solver's propagation primitive: all-pairs closure over the subset's
// endpoint vertices.
bool oracle_strong(const std::vector<Arc>& arcs, uint64_t mask,
                   uint32_t vertices, int n) {
    bool reach[20][20] = {};
    uint64_t rest = mask;
    while (rest) {
        int i = std::countr_zero(rest);
        rest &= rest - 1;
        reach[arcs[i].from][arcs[i].to] = true;
    }
    for (int k = 0; k < n; ++k)
        for (int u = 0; u < n; ++u)
            if (reach[u][k])
                for (int v = 0; v < n; ++v)
                    if (reach[k][v]) reach[u][v] = true;
    for (int u = 0; u < n; ++u) {
        if (!(vertices & (uint32_t{1} << u))) continue;
        for (int v = 0; v < n; ++v) {
            if (u == v || !(vertices & (uint32_t{1} << v))) continue;
            if (!reach[u][v]) return false;
        }
    }
    return true;
}

} // namespace

AssignmentOracle::AssignmentOracle(const Digraph& d, int threshold) : d_(d) {
    m_ = d.arc_count();
    if (m_ > threshold)
        throw CapError("oracle threshold " + std::to_string(threshold) +
                       " exceeded: " + std::to_string(m_) + " arcs");
    if (m_ > 20) throw CapError("oracle limited to 20 arcs");
    if (d.order() > 20) throw CapError("oracle limited to 20 vertices");
    const auto& arcs = d.arcs();
    std::vector<uint32_t> arc_ends(m_);
    for (int i = 0; i < m_; ++i)
        arc_ends[i] = (uint32_t{1} << arcs[i].from) |
                      (uint32_t{1} << arcs[i].to);
    size_t total = size_t{1} << m_;
    endpoints_.assign(total, 0);
    strong_.assign(total, 0);
    for (size_t mask = 1; mask < total; ++mask) {
        int i = std::countr_zero(static_cast<uint64_t>(mask));
        endpoints_[mask] = endpoints_[mask & (mask - 1)] | arc_ends[i];
        strong_[mask] = oracle_strong(arcs, mask, endpoints_[mask], d.order())
                            ? 1
                            : 0;
    }
}

int AssignmentOracle::lambda_S(const VertexSet& s) const {
    require_valid_terminals(d_, s);
    uint32_t s_mask = 0;
    for (int v : s.members) s_mask |= uint32_t{1} << v;
    size_t total = size_t{1} << m_;
    std::vector<uint32_t> phi;
    for (size_t mask = 1; mask < total; ++mask)
        if (strong_[mask] && (endpoints_[mask] & s_mask) == s_mask)
            phi.push_back(static_cast<uint32_t>(mask));
    if (phi.empty()) return 0;
    std::vector<int8_t> memo(total, -1);
    // g(avail) = max parts packable into the available arc set.
    std::function<int(uint32_t)> g = [&](uint32_t avail) -> int {
        int8_t& slot = memo[avail];
        if (slot >= 0) return slot;
        int best = 0;
        for (uint32_t p : phi) {
            if (p & ~avail) continue;
            int v = 1 + g(avail & ~p);
            if (v > best) best = v;
        }
        slot = static_cast<int8_t>(best);
        return best;
    };
    return g(static_cast<uint32_t>(total - 1));
}

int oracle_lambda_S(const Digraph& d, const VertexSet& s,
                    const SolverConfig& cfg) {
    return AssignmentOracle(d, cfg.oracle_threshold).lambda_S(s);
}

bool verify_packing(const Digraph& d, const Packing& p) {
    if (p.S.size() < 2 || p.S.size() > d.order()) return false;
    for (int v : p.S.members)
        if (v < 0 || v >= d.order()) return false;
    std::unordered_set<uint64_t> used;
    for (const auto& part : p.parts) {
        if (part.empty()) return false;
        std::vector<Arc> arcs = part;
        std::sort(arcs.begin(), arcs.end());
        if (std::unique(arcs.begin(), arcs.end()) != arcs.end()) return false;
        std::unordered_set<int> vertices;
        for (const Arc& a : arcs) {
            if (!d.has_arc(a.from, a.to)) return false;
            uint64_t key = static_cast<uint64_t>(a.from) << 32 |
                           static_cast<uint32_t>(a.to);
            if (!used.insert(key).second) return false; // shared arc
            vertices.insert(a.from);
            vertices.insert(a.to);
        }
        for (int v : p.S.members)
            if (!vertices.count(v)) return false;
        // Strongness of (endpoints(part), part).
        std::vector<int> ids(vertices.begin(), vertices.end());
        std::sort(ids.begin(), ids.end());
        std::vector<int> remap(d.order(), -1);
        for (size_t i = 0; i < ids.size(); ++i) remap[ids[i]] = static_cast<int>(i);
        std::vector<Arc> local;
        local.reserve(arcs.size());
        for (const Arc& a : arcs)
            local.push_back({remap[a.from], remap[a.to]});
        if (!is_strong(Digraph(static_cast<int>(ids.size()), local)))
            return false;
    }
    return true;
}

std::string packing_to_json(int n, const Packing& p) {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["S"] = p.S.members;
    auto parts = nlohmann::ordered_json::array();
    for (const auto& part : p.parts) {
        auto jp = nlohmann::ordered_json::array();
        for (const Arc& a : part)
            jp.push_back(nlohmann::ordered_json::array({a.from, a.to}));
        parts.push_back(jp);
    }
    j["parts"] = parts;
    return j.dump();
}

std::pair<int, Packing> packing_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("certificate JSON: ") + e.what());
    }
    try {
        int n = j.at("n").get<int>();
        Packing p;
        p.S = VertexSet(j.at("S").get<std::vector<int>>());
        for (const auto& jp : j.at("parts")) {
            std::vector<Arc> part;
            for (const auto& ja : jp)
                part.push_back({ja.at(0).get<int>(), ja.at(1).get<int>()});
            p.parts.push_back(std::move(part));
        }
        return {n, p};
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("certificate JSON schema: ") + e.what());
    }
}

} // namespace strongk
