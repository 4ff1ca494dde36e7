#include "doctest.h"
#include "hibi/io.hpp"
#include "support.hpp"

using namespace hibi;
using hibi::io::json;

TEST_CASE("poset json round trip") {
  const json j = json::parse(R"({"elements": ["x", "y", "z"], "covers": [["x", "y"], ["y", "z"], ["x", "z"]]})");
  const Poset p = io::poset_from_json(j);
  CHECK(p.size() == 3);
  CHECK(p.leq("x", "z"));
  const json back = io::poset_to_json(p);
  CHECK(back["covers"].size() == 2);  // the redundant relation is dropped
  CHECK(io::poset_from_json(back).relation_count() == p.relation_count());
}

TEST_CASE("malformed input is reported by kind") {
  auto kind = [](const char* text) {
    try {
      io::poset_from_json(json::parse(text));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::precondition;
  };
  CHECK(kind(R"({"covers": []})") == ErrorKind::malformed_input);
  CHECK(kind(R"({"elements": "x"})") == ErrorKind::malformed_input);
  CHECK(kind(R"({"elements": ["a"], "covers": [["a"]]})") == ErrorKind::malformed_input);
  CHECK(kind(R"({"elements": ["a", "a"]})") == ErrorKind::duplicate_label);
  CHECK(kind(R"({"elements": ["a"], "covers": [["a", "b"]]})") == ErrorKind::unknown_label);
  CHECK(kind(R"({"elements": ["a", "b"], "covers": [["a", "b"], ["b", "a"]]})") == ErrorKind::cycle);
  CHECK_THROWS_AS(io::read_json_file("/nonexistent/file.json"), Error);
}

TEST_CASE("descriptors and hom maps") {
  const auto d = io::semigroup_from_json(
      json::parse(R"({"poset": {"elements": ["b", "c"], "covers": [["b", "c"]]}, "q": ["c"]})"));
  CHECK(d.poset.size() == 2);
  CHECK(d.q == std::vector<std::string>{"c"});
  CHECK(io::semigroup_from_json(json::parse(R"({"elements": ["b"]})")).q.empty());

  const auto m = io::hom_map_from_json(json::parse(R"({"map": {"a": "x", "b": "y"}})"));
  CHECK(m.at("b") == "y");
  CHECK_THROWS_AS(io::hom_map_from_json(json::parse(R"({"map": {"a": 1}})")), Error);
}

TEST_CASE("label lists") {
  CHECK(io::split_labels("-inf, a2 ,a3") == std::vector<std::string>{"-inf", "a2", "a3"});
  CHECK(io::split_labels("[a]") == std::vector<std::string>{"a"});
  CHECK(io::split_labels("").empty());
  const Poset p = testing_support::chain(3);
  CHECK(io::resolve_labels(p, {"x2", "x0"}) == std::vector<Element>{2, 0});
  CHECK_THROWS_AS(io::resolve_labels(p, {"nope"}), Error);
}

TEST_CASE("dot output draws covers bottom to top") {
  const Poset p = testing_support::chain(3);
  const std::vector<Element> marked{1};
  const std::string dot = io::hasse_dot(p, marked);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("n0 -> n1;") != std::string::npos);
  CHECK(dot.find("n1 -> n2;") != std::string::npos);
  CHECK(dot.find("n0 -> n2;") == std::string::npos);
  CHECK(dot.find("n1 [label=\"x1\", style=filled") != std::string::npos);
}

TEST_CASE("report json") {
  const Poset p = testing_support::from_covers({"x0", "a", "b", "c", "d"},
                                               {{"x0", "a"}, {"a", "b"}, {"b", "c"}, {"x0", "d"}});
  const std::vector<Element> q{0, 2};
  const json r = io::report_json(p, q, gorenstein_criterion(p, q));
  CHECK(r["gorenstein"] == false);
  CHECK(r["failure"]["kind"] == "impure");
  CHECK(r["nu0"]["x0"] == 4);
  CHECK(r["witness"]["case"] == "case3");
  CHECK(r["failure"]["short_chain"].back() == "inf");
  CHECK(io::pretty(json{{"a", 1}}) == "a: 1\n");
}
