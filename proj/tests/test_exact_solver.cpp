#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "strongk/exact_solver.hpp"
#include "strongk/explorer.hpp"

using namespace strongk;

namespace {

Digraph relabeled(const Digraph& d, const std::vector<int>& perm) {
    std::vector<Arc> arcs;
    for (const Arc& a : d.arcs()) arcs.push_back({perm[a.from], perm[a.to]});
    return Digraph(d.order(), arcs);
}

// Reference enumeration of inclusion-minimal strong-with-S arc subsets by
// scanning all 2^m subsets; independent of the solver's search.
std::set<std::vector<Arc>> minimal_sets_bruteforce(const Digraph& d,
                                                   const VertexSet& s) {
    const auto& arcs = d.arcs();
    int m = d.arc_count();
    auto satisfies = [&](uint64_t mask) {
        std::vector<Arc> chosen;
        std::set<int> vertices;
        for (int i = 0; i < m; ++i)
            if (mask & (uint64_t{1} << i)) {
                chosen.push_back(arcs[i]);
                vertices.insert(arcs[i].from);
                vertices.insert(arcs[i].to);
            }
        if (chosen.empty()) return false;
        for (int v : s.members)
            if (!vertices.count(v)) return false;
        std::vector<int> ids(vertices.begin(), vertices.end());
        std::vector<int> remap(d.order(), -1);
        for (size_t i = 0; i < ids.size(); ++i)
            remap[ids[i]] = static_cast<int>(i);
        std::vector<Arc> local;
        for (const Arc& a : chosen) local.push_back({remap[a.from], remap[a.to]});
        return is_strong(Digraph(static_cast<int>(ids.size()), local));
    };
    std::vector<uint64_t> good;
    for (uint64_t mask = 1; mask < (uint64_t{1} << m); ++mask)
        if (satisfies(mask)) good.push_back(mask);
    std::set<std::vector<Arc>> result;
    for (uint64_t mask : good) {
        bool minimal = true;
        for (uint64_t other : good)
            if (other != mask && (other & mask) == other) {
                minimal = false;
                break;
            }
        if (minimal) {
            std::vector<Arc> part;
            for (int i = 0; i < m; ++i)
                if (mask & (uint64_t{1} << i)) part.push_back(arcs[i]);
            result.insert(part);
        }
    }
    return result;
}

} // namespace

TEST_SUITE_BEGIN("exact_solver");

TEST_CASE("minimal candidates: dicycle, digon, and the K3 triple") {
    Digraph c3 = standard_family("dicycle", 3);
    auto cands = minimal_candidates(c3, VertexSet({0, 1}));
    REQUIRE(cands.size() == 1);
    CHECK(cands[0] == c3.arcs());

    Digraph k2 = standard_family("complete_bidirected", 2);
    cands = minimal_candidates(k2, VertexSet({0, 1}));
    REQUIRE(cands.size() == 1);
    CHECK(cands[0] == std::vector<Arc>{{0, 1}, {1, 0}});

    // Frozen from the 2^6 subset enumeration: the digon 0<->1, both
    // directed triangles, and the digon path 0<->2<->1.
    Digraph k3 = standard_family("complete_bidirected", 3);
    cands = minimal_candidates(k3, VertexSet({0, 1}));
    REQUIRE(cands.size() == 4);
    CHECK(cands[0] == std::vector<Arc>{{0, 1}, {1, 0}});
    CHECK(cands[1] == std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}});
    CHECK(cands[2] == std::vector<Arc>{{0, 2}, {1, 0}, {2, 1}});
    CHECK(cands[3] == std::vector<Arc>{{0, 2}, {1, 2}, {2, 0}, {2, 1}});
    auto reference = minimal_sets_bruteforce(k3, VertexSet({0, 1}));
    CHECK(std::set<std::vector<Arc>>(cands.begin(), cands.end()) == reference);
}

TEST_CASE("minimal candidates match the subset scan on random digraphs") {
    std::mt19937_64 rng(101);
    int done = 0;
    while (done < 60) {
        int n = 3 + static_cast<int>(rng() % 2);
        std::vector<Arc> arcs;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && (rng() & 1)) arcs.push_back({u, v});
        Digraph d(n, arcs);
        if (d.arc_count() > 12) continue;
        ++done;
        VertexSet s({0, 1});
        auto got = minimal_candidates(d, s);
        CHECK(std::set<std::vector<Arc>>(got.begin(), got.end()) ==
              minimal_sets_bruteforce(d, s));
        CHECK(std::is_sorted(got.begin(), got.end(),
                             [](const auto& a, const auto& b) {
                                 if (a.size() != b.size())
                                     return a.size() < b.size();
                                 return a < b;
                             }));
    }
}

TEST_CASE("lambda_S on complete digraphs and a disconnected pair") {
    Digraph k4 = standard_family("complete_bidirected", 4);
    CHECK(lambda_S_exact(k4, VertexSet({0, 1, 2, 3})).value == 2);
    CHECK(lambda_S_exact(k4, VertexSet({0, 1})).value == 3);
    Digraph single(2, {{0, 1}});
    LambdaResult r = lambda_S_exact(single, VertexSet({0, 1}));
    CHECK(r.value == 0);
    CHECK(r.certificate.parts.empty());
    CHECK(verify_packing(single, r.certificate));
}

TEST_CASE("lambda_S certificates verify and have value-many parts") {
    std::mt19937_64 rng(102);
    for (int i = 0; i < 40; ++i) {
        int n = 4 + static_cast<int>(rng() % 2);
        std::vector<Arc> arcs;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && (rng() % 100) < 55) arcs.push_back({u, v});
        Digraph d(n, arcs);
        VertexSet s({0, 1 + static_cast<int>(rng() % (n - 1))});
        LambdaResult r = lambda_S_exact(d, s);
        CHECK(static_cast<int>(r.certificate.parts.size()) == r.value);
        CHECK(verify_packing(d, r.certificate));
    }
}

TEST_CASE("lambda_k on the named families") {
    for (int n = 3; n <= 6; ++n) {
        Digraph cn = standard_family("dicycle", n);
        for (int k = 2; k <= n; ++k) CHECK(lambda_k_exact(cn, k).value == 1);
        Digraph bcn = standard_family("bidirected_cycle", n);
        for (int k = 2; k <= n; ++k) CHECK(lambda_k_exact(bcn, k).value == 2);
    }
    CHECK_THROWS_AS(lambda_k_exact(standard_family("dicycle", 3), 1),
                    ParamError);
    CHECK_THROWS_AS(lambda_k_exact(standard_family("dicycle", 3), 4),
                    ParamError);
}

TEST_CASE("lambda_n of the order-6 complete digraph is n-2") {
    // The maximizer finds 4 disjoint spanning parts and exhausts the
    // search space to rule out a fifth.
    Digraph k6 = standard_family("complete_bidirected", 6);
    LambdaResult r = lambda_k_exact(k6, 6);
    CHECK(r.value == 4);
    CHECK(verify_packing(k6, r.certificate));
}

TEST_CASE("lambda_k witness is the lexicographically smallest minimizer") {
    // Path-ish digraph: pairs containing vertex 3 are weakest.
    Digraph d(4, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}, {2, 3},
                  {3, 2}});
    LambdaResult r = lambda_k_exact(d, 2);
    CHECK(r.value == 1);
    CHECK(r.witness_S.members == std::vector<int>{0, 3});
    Digraph nonstrong(3, {{0, 1}, {1, 0}, {1, 2}});
    r = lambda_k_exact(nonstrong, 2);
    CHECK(r.value == 0);
    CHECK(r.witness_S.members == std::vector<int>{0, 2});
}

TEST_CASE("decide_lambda_S prunes at depth ell and certifies") {
    Digraph k4 = standard_family("complete_bidirected", 4);
    auto [no3, c3] = decide_lambda_S(k4, VertexSet({0, 1, 2, 3}), 3);
    CHECK_FALSE(no3);
    CHECK_FALSE(c3.has_value());

    auto [yes2, cert2] = decide_lambda_S(
        standard_family("bidirected_cycle", 5), VertexSet({0, 2}), 2);
    CHECK(yes2);
    REQUIRE(cert2.has_value());
    CHECK(cert2->parts.size() == 2);
    CHECK(verify_packing(standard_family("bidirected_cycle", 5), *cert2));

    std::mt19937_64 rng(103);
    int strong_seen = 0;
    while (strong_seen < 20) {
        std::vector<Arc> arcs;
        for (int u = 0; u < 4; ++u)
            for (int v = 0; v < 4; ++v)
                if (u != v && (rng() & 1)) arcs.push_back({u, v});
        Digraph d(4, arcs);
        if (!is_strong(d)) continue;
        ++strong_seen;
        auto [yes, cert] = decide_lambda_S(d, VertexSet({0, 1}), 1);
        CHECK(yes);
        CHECK(cert.has_value());
    }
    CHECK_THROWS_AS(decide_lambda_S(k4, VertexSet({0, 1}), 0), ParamError);
}

TEST_CASE("assignment oracle on small fixed instances") {
    CHECK(oracle_lambda_S(standard_family("complete_bidirected", 3),
                          VertexSet({0, 1})) == 2);
    CHECK(oracle_lambda_S(standard_family("dicycle", 4), VertexSet({0, 2})) ==
          1);
    CHECK(oracle_lambda_S(standard_family("complete_bidirected", 4),
                          VertexSet({0, 1, 2, 3})) == 2);
    CHECK_THROWS_AS(
        oracle_lambda_S(standard_family("complete_bidirected", 5),
                        VertexSet({0, 1})),
        CapError);
}

TEST_CASE("oracle agrees with the exact solver on sampled small digraphs") {
    // Order-3 exhaustively, all terminal pairs and the triple.
    enumerate_digraphs(3, EnumMode::all_labeled, [&](const Digraph& d,
                                                     uint64_t) {
        AssignmentOracle oracle(d);
        for (auto s : {VertexSet({0, 1}), VertexSet({0, 2}), VertexSet({1, 2}),
                       VertexSet({0, 1, 2})})
            CHECK(lambda_S_exact(d, s).value == oracle.lambda_S(s));
    });
    // Random order-4 sample (the full corpus runs in the acceptance suite).
    std::mt19937_64 rng(104);
    for (int i = 0; i < 150; ++i) {
        std::vector<Arc> arcs;
        for (int u = 0; u < 4; ++u)
            for (int v = 0; v < 4; ++v)
                if (u != v && (rng() & 1)) arcs.push_back({u, v});
        Digraph d(4, arcs);
        AssignmentOracle oracle(d);
        CHECK(lambda_S_exact(d, VertexSet({0, 1})).value ==
              oracle.lambda_S(VertexSet({0, 1})));
        CHECK(lambda_S_exact(d, VertexSet({0, 1, 2, 3})).value ==
              oracle.lambda_S(VertexSet({0, 1, 2, 3})));
    }
}

TEST_CASE("oracle agreement on sparse order-6 digraphs") {
    // Wider vertex sets stress the superset enumeration differently from
    // the order-4 corpus.
    std::mt19937_64 rng(106);
    SolverConfig cfg;
    int done = 0;
    while (done < 80) {
        std::vector<Arc> arcs;
        for (int u = 0; u < 6; ++u)
            for (int v = 0; v < 6; ++v)
                if (u != v && (rng() % 100) < 38) arcs.push_back({u, v});
        Digraph d(6, arcs);
        if (d.arc_count() > cfg.oracle_threshold) continue;
        ++done;
        AssignmentOracle oracle(d, cfg.oracle_threshold);
        for (auto ids : {std::vector<int>{0, 1}, std::vector<int>{2, 5},
                         std::vector<int>{0, 3, 4},
                         std::vector<int>{0, 1, 2, 3, 4, 5}}) {
            VertexSet s(ids);
            CHECK(lambda_S_exact(d, s, cfg).value == oracle.lambda_S(s));
        }
    }
}

TEST_CASE("reversal and relabeling invariance on all order-4 digraphs") {
    std::mt19937_64 rng(105);
    std::vector<std::vector<int>> terminal_sets = {
        {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
        {0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {0, 1, 2, 3}};
    enumerate_digraphs(4, EnumMode::all_labeled, [&](const Digraph& d,
                                                     uint64_t) {
        Digraph rev = reverse(d);
        std::vector<int> perm{0, 1, 2, 3};
        std::shuffle(perm.begin(), perm.end(), rng);
        Digraph relab = relabeled(d, perm);
        for (const auto& ids : terminal_sets) {
            VertexSet s(ids);
            int base = lambda_S_exact(d, s).value;
            CHECK(base == lambda_S_exact(rev, s).value);
            std::vector<int> mapped;
            for (int v : ids) mapped.push_back(perm[v]);
            CHECK(base == lambda_S_exact(relab, VertexSet(mapped)).value);
        }
    });
}

TEST_CASE("verify_packing rejects tampered certificates") {
    Digraph k3 = standard_family("complete_bidirected", 3);
    LambdaResult r = lambda_S_exact(k3, VertexSet({0, 1}));
    REQUIRE(r.value == 2);
    CHECK(verify_packing(k3, r.certificate));

    Packing shared = r.certificate;
    shared.parts[1] = shared.parts[0]; // two parts sharing arcs
    CHECK_FALSE(verify_packing(k3, shared));

    Packing missing = r.certificate;
    missing.S = VertexSet({0, 2});
    bool covers_2 = true;
    for (const auto& part : missing.parts) {
        bool found = false;
        for (const Arc& a : part)
            if (a.from == 2 || a.to == 2) found = true;
        covers_2 = covers_2 && found;
    }
    if (!covers_2) CHECK_FALSE(verify_packing(k3, missing));

    Packing alien = r.certificate;
    alien.parts[0] = {{0, 1}, {1, 2}, {2, 0}, {0, 2}};
    alien.parts[0].push_back({2, 1});
    alien.parts[0].push_back({1, 0});
    // Part now equals the whole arc set, which intersects part 1.
    CHECK_FALSE(verify_packing(k3, alien));

    Packing empty_part = r.certificate;
    empty_part.parts.push_back({});
    CHECK_FALSE(verify_packing(k3, empty_part));

    Packing foreign = r.certificate;
    foreign.parts[0] = {{0, 1}, {1, 0}};
    Digraph c3 = standard_family("dicycle", 3);
    CHECK_FALSE(verify_packing(c3, foreign)); // (1,0) not an arc of C3
}

TEST_CASE("certificate JSON round-trips through verify_packing") {
    Digraph k4 = standard_family("complete_bidirected", 4);
    LambdaResult r = lambda_S_exact(k4, VertexSet({0, 1}));
    std::string text = packing_to_json(4, r.certificate);
    auto [n, parsed] = packing_from_json(text);
    CHECK(n == 4);
    CHECK(verify_packing(k4, parsed));
    CHECK(packing_to_json(n, parsed) == text);
    CHECK_THROWS_AS(packing_from_json("{"), ParseError);
    CHECK_THROWS_AS(packing_from_json("{\"n\": 3}"), ParseError);
}

TEST_CASE("candidate cap raises CapError") {
    Digraph k5 = standard_family("complete_bidirected", 5);
    SolverConfig tiny;
    tiny.candidate_cap = 3;
    CHECK_THROWS_AS(minimal_candidates(k5, VertexSet({0, 1}), tiny), CapError);
}

TEST_SUITE_END();
