#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <regex>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "unsharp/cli.hpp"
#include "unsharp/error.hpp"
#include "unsharp/io.hpp"

using namespace unsharp;

namespace {

struct result {
  int status;
  std::string out, err;
};

result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("unsharp_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

errc syntax_code(const std::string& text) {
  try {
    parse_poset_file(text);
  } catch (const error& e) {
    return e.code();
  }
  return errc::precondition_violated;
}

}  // namespace

TEST_CASE("parsing poset documents") {
  const auto docs = parse_poset_file(fixtures::slurp(fixtures::data_file("pentagon.poset")));
  REQUIRE(docs.size() == 1);
  CHECK(docs[0].name == "pentagon");
  CHECK(docs[0].labels.size() == 5);
  CHECK(docs[0].covers.size() == 5);
  CHECK(docs[0].to_poset() == fixtures::pentagon());

  const auto all = parse_poset_file(fixtures::slurp(fixtures::data_file("examples.poset")));
  REQUIRE(all.size() == 3);
  CHECK(all[1].to_poset() == fixtures::bowtie());
  CHECK(all[2].to_poset() == fixtures::tall_bowtie());

  const auto single = parse_poset_file("poset one\nelements: x\n");
  REQUIRE(single.size() == 1);
  CHECK(single[0].to_poset().size() == 1);

  const auto commented = parse_poset_file(
      "# leading comment\n\nposet v   # trailing\nelements: 0 a\nelements: 1\ncovers: 0<a\n  covers: a<1\n");
  REQUIRE(commented.size() == 1);
  CHECK(commented[0].labels == std::vector<std::string>{"0", "a", "1"});
  CHECK(commented[0].covers.size() == 2);
  CHECK(parse_poset_file("poset last\nelements: x").size() == 1);
}

TEST_CASE("syntax errors carry line numbers") {
  try {
    parse_poset_file("poset p\nelements: a b\ncovers: a<\n");
    FAIL("expected SyntaxError");
  } catch (const error& e) {
    CHECK(e.code() == errc::syntax_error);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK(syntax_code("poset p\nelements: a b\ncovers: <b\n") == errc::syntax_error);
  CHECK(syntax_code("poset p\nelements: a b\ncovers: a<b<c\n") == errc::syntax_error);
  CHECK(syntax_code("poset p\nelements: a b\ncovers: ab\n") == errc::syntax_error);
  CHECK(syntax_code("elements: a\n") == errc::syntax_error);
  CHECK(syntax_code("poset p q\nelements: a\n") == errc::syntax_error);
  CHECK(syntax_code("poset p\nnodes: a\n") == errc::syntax_error);
  CHECK(syntax_code("poset p\ncovers: a<b\n") == errc::syntax_error);

  // semantic problems are left to the poset constructor
  const auto docs = parse_poset_file("poset p\nelements: a\ncovers: a<z\n");
  CHECK_THROWS_AS(docs[0].to_poset(), error);
}

TEST_CASE("writing documents and cells") {
  const poset f3 = fixtures::tall_bowtie();
  const std::string text = write_poset_document("tall_bowtie", f3);
  const auto back = parse_poset_file(text);
  REQUIRE(back.size() == 1);
  CHECK(back[0].name == "tall_bowtie");
  CHECK(back[0].to_poset() == f3);

  CHECK(render_cell(std::nullopt, f3.labels()) == "-");
  CHECK(render_cell(fixtures::labels(f3, {"d"}), f3.labels()) == "d");
  CHECK(render_cell(fixtures::labels(f3, {"e", "d"}), f3.labels()) == "{d,e}");
  CHECK(table_symbol(table_kind::implication) == "->");
}

TEST_CASE("dot export lists every label and exactly the covers") {
  const poset f2 = fixtures::bowtie();
  const std::string dot = to_dot("bowtie", f2);
  CHECK(dot.rfind("digraph \"bowtie\" {\n", 0) == 0);
  CHECK(dot.substr(dot.size() - 2) == "}\n");
  std::set<std::pair<std::string, std::string>> edges, covers;
  std::set<std::string> nodes;
  const std::regex edge(R"re(^  "([^"]*)" -> "([^"]*)";$)re"), node(R"re(^  "([^"]*)";$)re");
  std::istringstream in(dot);
  for (std::string line; std::getline(in, line);) {
    std::smatch m;
    if (std::regex_match(line, m, edge)) edges.emplace(m[1], m[2]);
    else if (std::regex_match(line, m, node)) nodes.insert(m[1]);
  }
  for (auto [lo, hi] : cover_relation(f2)) covers.emplace(f2.label(lo), f2.label(hi));
  CHECK(edges == covers);
  CHECK(nodes == std::set<std::string>(f2.labels().begin(), f2.labels().end()));
}

TEST_CASE("tables command") {
  const std::string f1 = fixtures::data_file("pentagon.poset"), f2 = fixtures::data_file("bowtie.poset"),
                    f3 = fixtures::data_file("tall_bowtie.poset");
  auto r = run({"tables", f2, "--kind", "imp"});
  CHECK(r.status == 0);
  CHECK(r.out == fixtures::golden("bowtie_imp"));
  CHECK(r.out.find("{c,d}") != std::string::npos);

  r = run({"tables", f3, "--kind", "conj"});
  CHECK(r.out == fixtures::golden("tall_bowtie_conj"));
  CHECK(run({"tables", f1, "--kind", "xy"}).out == fixtures::golden("pentagon_xy"));

  r = run({"tables", f3, "--kind", "rel"});
  CHECK(r.status == 0);
  const poset p3 = fixtures::tall_bowtie();
  const operator_table rel = build_operator_table(p3, table_kind::relative);
  CHECK_FALSE(rel.at(p3.at("b"), p3.at("a")).has_value());
  CHECK(r.out == render_table(rel, p3.labels()));

  // several documents print several tables
  r = run({"tables", fixtures::data_file("examples.poset"), "--kind", "xy"});
  CHECK(r.out == fixtures::golden("pentagon_xy") + "\n" + fixtures::golden("bowtie_xy") + "\n" + fixtures::golden("tall_bowtie_xy"));

  r = run({"tables", f2, "--kind", "imp", "--json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["name"] == "bowtie");
  CHECK(j["kind"] == "imp");
  CHECK(j["labels"].size() == 6);
  CHECK(j["cells"][1][2] == nlohmann::json::array({"c", "d"}));
  r = run({"tables", f1, "--kind", "xy", "--json"});
  CHECK(nlohmann::json::parse(r.out)["cells"][1][2].is_null());

  CHECK(run({"tables", f2, "--kind", "nope"}).status == 2);
}

TEST_CASE("check, roundtrip, residuation, skeleton") {
  const std::string one = temp_file("one.poset", "poset one\nelements: x\n");
  CHECK(run({"check", one}).status == 0);
  CHECK(run({"roundtrip", one}).status == 0);

  const std::string f2 = fixtures::data_file("bowtie.poset"), f3 = fixtures::data_file("tall_bowtie.poset");
  auto r = run({"check", f2});
  CHECK(r.status == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);

  // dominance of x->y over x*y fails on the tall bowtie at (c, a)
  r = run({"check", f3});
  CHECK(r.status == 1);
  CHECK(r.out.find("FAIL  comparison: x*y exists => x*y <= x->y  witness (c, a)") != std::string::npos);

  CHECK(run({"roundtrip", fixtures::data_file("examples.poset")}).status == 0);

  r = run({"residuation", f3});
  CHECK(r.status == 0);
  CHECK(r.out.find("FAIL  recorded:") != std::string::npos);
  r = run({"residuation", fixtures::data_file("pentagon.poset")});
  CHECK(r.status == 0);
  CHECK(r.out.find("lattice: conditions hold <=> identities hold") != std::string::npos);

  r = run({"skeleton", f3});
  CHECK(r.status == 0);
  const auto docs = parse_poset_file(r.out);
  REQUIRE(docs.size() == 1);
  CHECK(docs[0].name == "tall_bowtie-skeleton");
  CHECK(docs[0].labels == std::vector<std::string>{"0", "b", "c", "1"});
  CHECK(r.out.find("#  PASS  U(a, neg a) = {1} inside the image") != std::string::npos);

  const std::string m3 = temp_file("m3.poset", "poset m3\nelements: 0 a b c 1\ncovers: 0<a 0<b 0<c a<1 b<1 c<1\n");
  r = run({"check", m3});
  CHECK(r.status == 1);
  CHECK(r.out.find("FAIL  sections: pseudocomplemented sections  witness (a, 0)") != std::string::npos);
}

TEST_CASE("json report schema") {
  const auto r = run({"check", fixtures::data_file("tall_bowtie.poset"), "--json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["name"] == "tall_bowtie");
  REQUIRE(j["verdicts"].is_array());
  bool saw_witness = false;
  for (const auto& v : j["verdicts"]) {
    CHECK(v["law"].is_string());
    CHECK(v["pass"].is_boolean());
    if (v.contains("witness")) {
      saw_witness = true;
      CHECK_FALSE(v["pass"].get<bool>());
      for (const auto& label : v["witness"]) CHECK(label.is_string());
    }
  }
  CHECK(saw_witness);

  const auto all = nlohmann::json::parse(run({"check", fixtures::data_file("tall_bowtie.poset"), "--json", "--all-witnesses"}).out);
  for (const auto& v : all["verdicts"])
    if (v.contains("witnesses")) CHECK(v["witnesses"].size() == v["failures"].get<std::size_t>());
}

TEST_CASE("dot and corpus commands") {
  auto r = run({"dot", fixtures::data_file("pentagon.poset")});
  CHECK(r.status == 0);
  CHECK(r.out == to_dot("pentagon", fixtures::pentagon()));

  r = run({"corpus", "--n", "3"});
  CHECK(r.status == 0);
  CHECK(r.out.find("total_posets  19") != std::string::npos);
  r = run({"corpus", "--n", "4", "--dedup"});
  CHECK(r.out.find("classes       16") != std::string::npos);
  CHECK(r.out.find("orbit_sum     219") != std::string::npos);
  r = run({"corpus", "--n", "3", "--json"});
  CHECK(nlohmann::json::parse(r.out)["stats"]["total_posets"] == 19);

  r = run({"corpus", "--n", "9"});
  CHECK(r.status == 2);
  CHECK(r.err.find("SizeLimitExceeded") != std::string::npos);
}

TEST_CASE("input errors exit with status 2") {
  auto r = run({"frobnicate"});
  CHECK(r.status == 2);
  CHECK(r.err.find("UnknownCommand") != std::string::npos);
  r = run({});
  CHECK(r.status == 2);
  r = run({"tables", fixtures::data_file("pentagon.poset"), "--bogus"});
  CHECK(r.status == 2);
  CHECK(r.err.find("UnknownFlag") != std::string::npos);
  r = run({"tables", "/no/such/file.poset"});
  CHECK(r.status == 2);

  const std::string bad = temp_file("bad.poset", "poset p\nelements: a b\ncovers: a<\n");
  r = run({"check", bad});
  CHECK(r.status == 2);
  CHECK(r.err.find("SyntaxError") != std::string::npos);
  CHECK(r.err.find("line 3") != std::string::npos);

  const std::string cyc = temp_file("cyc.poset", "poset p\nelements: p q\ncovers: p<q q<p\n");
  r = run({"dot", cyc});
  CHECK(r.status == 2);
  CHECK(r.err.find("CycleDetected") != std::string::npos);
}
