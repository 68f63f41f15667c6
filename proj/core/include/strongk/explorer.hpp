#pragma once
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "strongk/digraph.hpp"
#include "strongk/exact_solver.hpp"

namespace strongk {

enum class EnumMode { all_labeled, semicomplete, symmetric, random_sample };

EnumMode enum_mode_from_name(const std::string& name);

/// Streams digraphs of order n in a deterministic order; random_sample mode
/// is reproducible by seed.  all_labeled is limited to n <= 4 unless the
/// caller opts in to the 2^20-instance order-5 sweep.
void enumerate_digraphs(int n, EnumMode mode,
                        const std::function<void(const Digraph&, uint64_t)>& fn,
                        int samples = 1000, uint64_t seed = 42,
                        bool allow_large_exhaustive = false);

struct CheckResult {
    enum class Status { Pass, Fail, Skip };
    std::string name;
    Status status = Status::Pass;
    std::string detail;
};

struct SuiteReport {
    std::string id;
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

/// Runs every registered theorem check against exact values: the three
/// definitional inequalities, the strong-range bounds and their
/// completeness characterization, the arc-connectivity cap, the floor
/// lower bound, strong iff positive, the complementary-pair bounds, the
/// complete-digraph values, and the two-packing characterizations for
/// semicomplete/symmetric inputs.  Every check appears exactly once;
/// inapplicable ones are Skip.  A Fail is either an implementation bug or a
/// counterexample; the report never suppresses it.
SuiteReport verify_theorems(const Digraph& d, const std::vector<int>& k_range,
                            const SolverConfig& cfg = {});

/// "id<TAB>check<TAB>PASS|FAIL|SKIP<TAB>detail" lines.
std::string format_suite_report(const SuiteReport& r);

struct Table1Cell {
    std::string row_family, col_family;
    std::string formula; // symbolic: "2", "m+1", "n+m-2", ...
    int expected = 0;
    int value = 0; // certified: constructed lower bound meeting degree cap
};

/// lambda_2 of the sixteen family products (rows and columns: dicycle,
/// bidirected cycle, bidirected path, complete bidirected) at orders n, m.
/// Each entry is certified by a verified packing for every 2-set meeting
/// the degree-cap upper bound.
std::vector<Table1Cell> reproduce_table1(int n, int m,
                                         const SolverConfig& cfg = {});

/// All lambda-arc-strong semicomplete digraphs of the given order without
/// lambda arc-disjoint strong spanning subgraphs, up to isomorphism,
/// sorted by canonical key.
std::vector<Digraph> scan_conjecture(int order, int lambda = 2,
                                     const SolverConfig& cfg = {});

} // namespace strongk
