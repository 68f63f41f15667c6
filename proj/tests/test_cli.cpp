#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "strongk/cli.hpp"
#include "strongk/exact_solver.hpp"
#include "strongk/parallel.hpp"
#include "strongk/text_format.hpp"

using namespace strongk;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& payload)
        : path("cli_test_" + name) {
        std::ofstream f(path, std::ios::binary);
        f << payload;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

std::string k4_text() {
    return write_digraph(standard_family("complete_bidirected", 4));
}

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("compute prints the lambda line and a verifiable certificate") {
    TempFile f("k4.dg", k4_text());
    RunResult r = run({"compute", "--input", f.path, "--k", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("lambda_2 = 3") == 0);
    auto cert_pos = r.out.find("certificate = ");
    REQUIRE(cert_pos != std::string::npos);
    std::string json = r.out.substr(cert_pos + 14);
    auto [n, p] = packing_from_json(json);
    CHECK(n == 4);
    CHECK(verify_packing(standard_family("complete_bidirected", 4), p));
}

TEST_CASE("compute with explicit S and on a non-strong input") {
    TempFile f("c5.dg", write_digraph(standard_family("dicycle", 5)));
    RunResult r = run({"compute", "--input", f.path, "--S", "0,1,2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("lambda_S = 1") == 0);

    TempFile g("ns.dg", "2 1\n0 1\n");
    r = run({"compute", "--input", g.path, "--k", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("lambda_2 = 0") == 0);
}

TEST_CASE("byte-identical reruns") {
    TempFile f("k4.dg", k4_text());
    RunResult a = run({"compute", "--input", f.path, "--k", "2",
                       "--format", "json"});
    RunResult b = run({"compute", "--input", f.path, "--k", "2",
                       "--format", "json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("exit codes: parse 2, caps 3, params 4") {
    TempFile bad("bad.dg", "1 1\n0 0\n");
    CHECK(run({"compute", "--input", bad.path, "--k", "2"}).code == 2);
    CHECK(run({"compute", "--input", "no_such_file.dg", "--k", "2"}).code ==
          2);
    CHECK(run({"nonsense"}).code == 2);

    TempFile k5("k5.dg",
                write_digraph(standard_family("complete_bidirected", 5)));
    CHECK(run({"compute", "--input", k5.path, "--k", "2", "--candidate-cap",
               "2"}).code == 3);

    TempFile k4("k4.dg", k4_text());
    CHECK(run({"compute", "--input", k4.path, "--k", "9"}).code == 4);
    CHECK(run({"construct", "minimal", "--n", "4", "--cover", "0-1"}).code ==
          4);
}

TEST_CASE("decide routes by digraph class") {
    TempFile sym("bc6.dg",
                 write_digraph(standard_family("bidirected_cycle", 6)));
    RunResult r = run({"decide", "--input", sym.path, "--ell", "2", "--k",
                       "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("YES") == 0);
    CHECK(r.out.find("symmetric bridge characterization") !=
          std::string::npos);

    TempFile semi("k4.dg", k4_text());
    r = run({"decide", "--input", semi.path, "--ell", "2", "--k", "2"});
    CHECK(r.out.find("YES") == 0);
    CHECK(r.out.find("semicomplete characterization") != std::string::npos);

    TempFile tree("tree.dg",
                  write_digraph(standard_family("bidirected_path", 4)));
    r = run({"decide", "--input", tree.path, "--ell", "2", "--k", "2"});
    CHECK(r.out.find("NO") == 0);

    TempFile c3("c3.dg", write_digraph(standard_family("dicycle", 3)));
    r = run({"decide", "--input", c3.path, "--ell", "3", "--k", "2"});
    CHECK(r.out.find("NO") == 0);
    CHECK(r.out.find("exact search") != std::string::npos);
    r = run({"decide", "--input", c3.path, "--ell", "1", "--k", "2"});
    CHECK(r.out.find("YES") == 0);
}

TEST_CASE("construct complete writes digraph and certificate files") {
    RunResult r = run({"construct", "complete", "--n", "7", "--S",
                       "0,1,2,3,4,5", "--out", "cli_test_out"});
    CHECK(r.code == 0);
    Digraph host = read_digraph_file("cli_test_out.dg");
    CHECK(host.arc_count() == 42);
    std::ifstream cf("cli_test_out.cert.json");
    std::stringstream buf;
    buf << cf.rdbuf();
    auto [n, p] = packing_from_json(buf.str());
    CHECK(n == 7);
    CHECK(p.parts.size() == 6);
    CHECK(verify_packing(host, p));
    std::remove("cli_test_out.dg");
    std::remove("cli_test_out.cert.json");
}

TEST_CASE("construct minimal reports the recognizer confirmation") {
    RunResult r = run({"construct", "minimal", "--n", "5", "--cover",
                       "0-1,2-3-4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("5 15\n") == 0);
    CHECK(r.out.find("recognized = true") != std::string::npos);
}

TEST_CASE("construct product emits a verified packing") {
    TempFile g("g.dg", write_digraph(standard_family("dicycle", 3)));
    TempFile h("h.dg", write_digraph(standard_family("dicycle", 3)));
    RunResult r = run({"construct", "product", "--left", g.path, "--right",
                       h.path, "--S", "0,5", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"parts\": 2") != std::string::npos);
}

TEST_CASE("gadget emits the digraph plus the sidecar terminal map") {
    TempFile f("c4.dg", write_digraph(standard_family("dicycle", 4)));
    RunResult r = run({"gadget", "--input", f.path, "--terminals", "0,1,2,3",
                       "--k", "3", "--ell", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("x: 4") != std::string::npos);
    CHECK(r.out.find("y: 5") != std::string::npos);
    CHECK(r.out.find("x1: ") != std::string::npos);
    CHECK(r.out.find("s1-: 0") != std::string::npos);
    CHECK(r.out.find("t1+: 7") != std::string::npos);

    r = run({"gadget", "--input", f.path, "--terminals", "0,1,2",
             "--k", "2", "--ell", "2"});
    CHECK(r.code == 4);
}

TEST_CASE("explore streams tab-separated PASS lines") {
    RunResult r = run({"explore", "--n", "3", "--k", "2,3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0\tmonotone_in_k\tPASS\t") == 0);
    CHECK(r.out.find("\tFAIL\t") == std::string::npos);
    // The full order-5 sweep stays behind its opt-in flag.
    CHECK(run({"explore", "--n", "5", "--k", "2"}).code == 4);
    CHECK(run({"explore", "--n", "5", "--k", "2", "--mode", "random",
               "--samples", "5"}).code == 0);
    CHECK(run({"explore", "--n", "3", "--k", "2", "--mode", "semicomplete"})
              .code == 0);
    CHECK(run({"explore", "--n", "3", "--k", "2", "--mode", "symmetric"})
              .code == 0);
}

TEST_CASE("bounds and ng subcommands") {
    TempFile k6("k6.dg",
                write_digraph(standard_family("complete_bidirected", 6)));
    RunResult r = run({"bounds", "--input", k6.path, "--k", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("lower = 2 (floor(lambda/k))") == 0);

    TempFile k5("k5.dg",
                write_digraph(standard_family("complete_bidirected", 5)));
    r = run({"ng", "--input", k5.path, "--k", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("lambda_2(D) = 4") == 0);
    CHECK(r.out.find("sum = 4") != std::string::npos);
}

TEST_CASE("dot export") {
    TempFile f("c3.dg", write_digraph(standard_family("dicycle", 3)));
    RunResult r = run({"dot", "--input", f.path});
    CHECK(r.code == 0);
    CHECK(r.out.find("digraph D {") == 0);
}

TEST_CASE("parallel_for fills every indexed slot once") {
    CHECK(worker_count() >= 1);
    std::vector<int> slots(1000, 0);
    parallel_for(slots.size(), [&](size_t i) { slots[i] += int(i); });
    long sum = 0;
    for (int v : slots) sum += v;
    CHECK(sum == 999 * 1000 / 2);
}

TEST_SUITE_END();
