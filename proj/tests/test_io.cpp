#include <catch_amalgamated.hpp>

#include "ccm/io.hpp"
#include "ccm/suites.hpp"

using namespace ccm;
using nlohmann::json;

namespace {

std::string data(const std::string& name) { return std::string(CCM_DATA_DIR) + "/" + name; }

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  FAIL("no error");
  return errc::invalid_input;
}

json a2_fixture() {
  return json::parse(R"({"p": 3, "vertices": 2, "arrows": [{"id": "a", "src": 1, "tgt": 2}],
                         "modules": {"P1": {"dims": [1, 1], "maps": {"a": [[4]]}}}})");
}

}  // namespace

TEST_CASE("bundled fixtures load") {
  for (const char* name : {"a2.json", "a3.json", "cycle3.json", "gentle4.json", "kronecker.json"}) {
    const auto fx = load_fixture(data(name));
    CHECK(fx.p == 3);
    CHECK_FALSE(fx.modules.empty());
    for (const auto& [mod, _] : fx.modules) CHECK_NOTHROW(fx.family(mod)(2));
  }
  const auto fx = load_fixture(data("cycle3.json"));
  CHECK(fx.algebra()->presentation().relations.size() == 3);
  CHECK(fx.family("P1+S3")(3).dims() == DimVector{1, 1, 1});
}

TEST_CASE("vertices are 1-based and entries reduce mod p") {
  const auto fx = parse_fixture(a2_fixture());
  const auto& arr = fx.algebra()->presentation().quiver.arrow(0);
  CHECK(arr.source == 0);
  CHECK(arr.target == 1);
  // 4 reduces to 1 mod 3, and the map is then an isomorphism.
  const auto m = fx.family("P1")(fx.p);
  CHECK(is_indecomposable(m));
  CHECK(fx.modules.at("P1").maps[0][0][0] == 1);
}

TEST_CASE("missing maps are zero") {
  const auto fx = load_fixture(data("a2.json"));
  CHECK(fx.family("S1")(3).dims() == DimVector{1, 0});
  auto j = a2_fixture();
  j["modules"]["P1"].erase("maps");
  const auto split = parse_fixture(j).family("P1")(3);
  CHECK_FALSE(is_indecomposable(split));
}

TEST_CASE("fixture errors are input errors") {
  auto bad = [](const std::function<void(json&)>& edit) {
    auto j = a2_fixture();
    edit(j);
    return code_of([&] { parse_fixture(j); });
  };
  CHECK(bad([](json& j) { j.erase("p"); }) == errc::invalid_input);
  CHECK(bad([](json& j) { j["p"] = 4; }) == errc::invalid_input);
  CHECK(bad([](json& j) { j["p"] = "three"; }) == errc::invalid_input);
  CHECK(bad([](json& j) { j["modules"]["P1"]["dims"] = json::array({1}); }) == errc::invalid_input);
  CHECK(bad([](json& j) { j["modules"]["P1"]["dims"] = json::array({1, -1}); }) == errc::invalid_input);
  CHECK(bad([](json& j) { j["modules"]["P1"]["maps"]["a"] = json::array({json::array({1, 1})}); }) == errc::invalid_input);
  CHECK(bad([](json& j) { j["modules"]["P1"]["maps"]["zz"] = json::array(); }) == errc::invalid_input);
  CHECK(code_of([] { load_fixture(data("does-not-exist.json")); }) == errc::invalid_input);
  CHECK(code_of([] { parse_fixture(a2_fixture()).family("nope"); }) == errc::invalid_input);
}

TEST_CASE("relations are enforced on fixture modules") {
  auto j = json::parse(R"({"p": 2, "vertices": 3,
    "arrows": [{"id": "a", "src": 1, "tgt": 2}, {"id": "b", "src": 2, "tgt": 3}],
    "relations": [[{"path": ["a", "b"]}]],
    "modules": {"M": {"dims": [1, 1, 1], "maps": {"a": [[1]], "b": [[1]]}}}})");
  CHECK_THROWS_AS(parse_fixture(j), error);
  j["modules"]["M"]["maps"]["b"] = json::array({json::array({0})});
  CHECK_NOTHROW(parse_fixture(j));
}

TEST_CASE("arc and triangulation parsing") {
  CHECK(parse_arcs("[1,4]", 2) == std::vector<Arc>{{1, 4}});
  CHECK(parse_arcs("[[4,1],[2,4]]", 2) == std::vector<Arc>{{1, 4}, {2, 4}});
  CHECK(code_of([] { parse_arcs("[1,2]", 2); }) == errc::invalid_input);
  CHECK(code_of([] { parse_arcs("[1,", 2); }) == errc::invalid_input);
  CHECK(code_of([] { parse_arcs("[[1,2,3]]", 2); }) == errc::invalid_input);
  CHECK(parse_triangulation("[[1,4],[1,3]]", 2) == Triangulation{2, {{1, 3}, {1, 4}}});
  CHECK(code_of([] { parse_triangulation("[[1,3],[2,4]]", 2); }) == errc::invalid_input);
  CHECK(code_of([] { parse_triangulation("[[1,3]]", 2); }) == errc::invalid_input);
}

TEST_CASE("suite reports serialize deterministically") {
  SuiteOptions opt;
  opt.jobs = 1;
  const auto one = run_typea_suite("theorem", 2, opt).to_json();
  opt.jobs = 4;
  const auto four = run_typea_suite("theorem", 2, opt).to_json();
  CHECK(one.dump() == four.dump());
  CHECK(one["schema"] == 1);
  CHECK(one["summary"]["total"] == 25);
  CHECK(one["summary"]["failed"] == 0);
  CHECK_FALSE(one["instances"][0].contains("lhs"));
}

TEST_CASE("unknown suites are rejected") {
  SuiteOptions opt;
  CHECK_THROWS_AS(run_typea_suite("nonsense", 2, opt), error);
  const auto fx = load_fixture(data("a2.json"));
  CHECK_THROWS_AS(run_algebra_suite("theorem", fx, "a2", opt), error);
}
