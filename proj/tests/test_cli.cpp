#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "balance/edge_list.hpp"
#include "balance/generators.hpp"
#include "cli.hpp"

namespace fs = std::filesystem;
using namespace balance;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
    [[nodiscard]] json doc() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class Workspace {
public:
    Workspace() : dir_(fs::temp_directory_path() / ("balance-cli-" + std::to_string(::getpid()))) {
        fs::create_directories(dir_);
    }
    ~Workspace() { fs::remove_all(dir_); }

    std::string write(const std::string& name, const Graph& g) const {
        std::ofstream f(dir_ / name);
        write_edge_list(f, g);
        return (dir_ / name).string();
    }
    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(dir_ / name) << text;
        return (dir_ / name).string();
    }
    [[nodiscard]] std::string path(const std::string& name) const { return (dir_ / name).string(); }

private:
    fs::path dir_;
};

}  // namespace

TEST_CASE("score reports exact fractions") {
    Workspace ws;
    auto r = run({"score", "--input", ws.write("p10.edges", path_graph(10)), "--placement", "0,1"});
    CHECK(r.code == 0);
    auto doc = r.doc();
    CHECK(doc["schema"] == cli::kReportSchema);
    CHECK(doc["subcommand"] == "score");
    CHECK(doc["result"]["scores"] == json::parse(R"([{"num":1,"den":1},{"num":9,"den":1}])"));
    CHECK(doc["result"]["balanced"].is_null());

    auto z = run({"score", "--input", ws.path("p10.edges"), "--placement", "4,5", "--z", "0"});
    CHECK(z.code == 0);
    CHECK(z.doc()["result"]["balanced"] == true);
    CHECK(z.doc()["parameters"]["z"] == json::parse(R"({"num":0,"den":1})"));
}

TEST_CASE("check-balanced exit codes follow the verdict") {
    Workspace ws;
    auto fig = ws.write("fig3.edges", figure3_graph().graph);
    auto r = run({"check-balanced", "--input", fig, "--k", "2", "--z", "0", "--count"});
    CHECK(r.code == 1);
    CHECK(r.doc()["result"]["balanced"] == false);
    CHECK(r.doc()["result"]["counts"]["violating"] == 66);
    auto k = run({"check-balanced", "--input", ws.write("k6.edges", complete_graph(6)), "--k", "2", "--z", "0"});
    CHECK(k.code == 0);
    CHECK(k.doc()["result"]["placements_examined"] == 15);
    auto cap = run({"check-balanced", "--input", fig, "--k", "2", "--z", "0", "--cap", "10"});
    CHECK(cap.code == 2);
    CHECK(cap.doc().contains("error"));
}

TEST_CASE("unbalanced decision") {
    Workspace ws;
    auto p4 = ws.write("p4.edges", path_graph(4));
    CHECK(run({"unbalanced", "--input", p4, "--k", "2", "--s", "3/2"}).code == 0);
    CHECK(run({"unbalanced", "--input", p4, "--k", "2", "--s", "1"}).code == 1);
}

TEST_CASE("generators are byte-identical across runs") {
    auto a = run({"gen", "gnd", "--n", "100", "--d", "10", "--seed", "7"});
    auto b = run({"gen", "gnd", "--n", "100", "--d", "10", "--seed", "7"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
    std::istringstream in(a.out);
    CHECK(read_edge_list(in) == sample_gnd(100, 10, 7));
    CHECK(run({"gen", "gnd", "--n", "100", "--d", "10", "--seed", "8"}).out != a.out);
}

TEST_CASE("gen writes files and sidecars on request") {
    Workspace ws;
    auto r = run({"gen", "thm3", "--n", "16", "--seed", "2", "--output", ws.path("t.edges"), "--sidecar",
                  ws.path("t.json")});
    CHECK(r.code == 0);
    CHECK(r.doc()["result"]["vertices"] == 21);
    CHECK(read_edge_list_file(ws.path("t.edges")).num_vertices() == 21);
    std::ifstream side(ws.path("t.json"));
    CHECK(json::parse(side)["root"] == 20);
    auto red = run({"gen", "reduce", "--input", ws.write("k2.edges", complete_graph(2)), "--h", "1", "--bag", "8"});
    CHECK(red.code == 0);
    std::istringstream in(red.out);
    CHECK(read_edge_list(in).num_vertices() == 19);
    CHECK(run({"gen", "fig3"}).code == 0);
    CHECK(run({"gen", "cycle", "--n", "2"}).code == 2);
    CHECK(run({"gen", "gnd", "--n", "10", "--d", "10"}).code == 2);
    CHECK(run({"gen", "torus", "--n", "10"}).code == 2);
}

TEST_CASE("reduce reports the instance layout") {
    Workspace ws;
    auto r = run({"reduce", "--input", ws.write("k2.edges", complete_graph(2)), "--h", "1", "--output",
                  ws.path("red.edges")});
    CHECK(r.code == 0);
    auto res = r.doc()["result"];
    CHECK(res["k"] == 2);
    CHECK(res["bag_size"] == 8);
    CHECK(res["vertices"] == 19);
    CHECK(read_edge_list_file(ws.path("red.edges")).num_vertices() == 19);
}

TEST_CASE("certificates map accept and reject to 0 and 1") {
    Workspace ws;
    auto k20 = ws.write("k20.edges", complete_graph(20));
    auto c6 = ws.write("c6.edges", cycle_graph(6));
    CHECK(run({"certify-traversal", "--input", k20, "--k", "4", "--delta", "1/2"}).code == 0);
    auto rej = run({"certify-traversal", "--input", c6, "--k", "2", "--delta", "1/10"});
    CHECK(rej.code == 1);
    CHECK(rej.doc()["result"]["reason"]["condition"] == 2);
    CHECK(run({"certify-traversal", "--input", c6, "--k", "2", "--delta", "0"}).code == 2);

    auto k50 = ws.write("k50.edges", complete_graph(50));
    auto star = ws.write("star.edges", star_graph(100));
    CHECK(run({"certify-spectral", "--input", k50, "--seed", "1"}).code == 0);
    auto s = run({"certify-spectral", "--input", star, "--seed", "1"});
    CHECK(s.code == 1);
    CHECK(s.doc()["result"]["reject_step"] == 2);
    auto est = run({"certify-spectral", "--input", k50, "--seed", "1", "--trials", "5"});
    CHECK(est.code == 0);
    CHECK(est.doc()["result"]["accepts"] == 5);
}

TEST_CASE("malformed input reports the line and exits 2") {
    Workspace ws;
    auto bad = ws.write("bad.edges", "3 2\n0 1\n1 7\n");
    auto r = run({"score", "--input", bad, "--placement", "0"});
    CHECK(r.code == 2);
    CHECK(r.doc()["error"]["line"] == 3);
    CHECK(r.err.find("line 3") != std::string::npos);
    auto missing = run({"score", "--input", ws.path("nope.edges"), "--placement", "0"});
    CHECK(missing.code == 2);
    CHECK_FALSE(missing.doc()["error"].contains("line"));
}

TEST_CASE("usage errors exit 2") {
    Workspace ws;
    auto p4 = ws.write("p4.edges", path_graph(4));
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"score", "--input", p4}).code == 2);
    CHECK(run({"score", "--input", p4, "--placement", "0,0"}).code == 2);
    CHECK(run({"score", "--input", p4, "--placement", "0,9"}).code == 2);
    CHECK(run({"score", "--input", p4, "--placement", "0", "--z", "-1"}).code == 2);
    CHECK(run({"check-balanced", "--input", p4, "--k", "5", "--z", "0"}).code == 2);
    CHECK(run({"check-balanced", "--input", p4, "--k", "2", "--z", "x"}).code == 2);
    CHECK(run({"experiment", "no-such-run"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"--version"}).code == 0);
}

TEST_CASE("experiments emit aggregate reports") {
    auto r = run({"--threads", "2", "experiment", "thm3-n2-profile", "--n", "100", "--samples", "5", "--seed", "3"});
    CHECK(r.code == 0);
    auto res = r.doc()["result"];
    CHECK(res["root_n2_fraction"] == 1.0);
    CHECK(res["original_n2_fraction"]["count"] == 5);
    auto c = run({"experiment", "cert-rates", "--n", "60", "--d", "20", "--graphs", "3"});
    CHECK(c.code == 0);
    CHECK(c.doc()["result"]["graphs"] == 3);
    auto s = run({"experiment", "spectral-gap", "--n", "60", "--d", "8", "--graphs", "2"});
    CHECK(s.code == 0);
    CHECK(s.doc()["result"]["lambda2"]["count"] == 2);
    auto g = run({"experiment", "thm1-score-gap", "--n", "80", "--graphs", "2", "--placements", "3"});
    CHECK(g.code == 0);
    CHECK(g.doc()["result"]["pairs"] == 6);
}
