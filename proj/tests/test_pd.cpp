#include <doctest.h>

#include <random>
#include <set>

#include "brunnian/pd.hpp"
#include "brunnian/pd_io.hpp"
#include "helpers.hpp"

using namespace brunnian;

namespace {
link_diagram positive_hopf() {
  link_diagram d;
  d.crossings.push_back({4, 1, 3, 2});
  d.crossings.push_back({1, 4, 2, 3});
  return d;
}
link_diagram positive_kink() {
  link_diagram d;
  d.crossings.push_back({1, 1, 2, 2});
  return d;
}
}  // namespace

TEST_SUITE_BEGIN("link-core");

TEST_CASE("crossingless unlink validates") {
  auto d = unlink(3);
  auto rep = validate(d);
  CHECK(rep.ok);
  CHECK(rep.component_count == 3);
  CHECK(rep.crossing_count == 0);
}

TEST_CASE("edge occurring once is an edge-degree violation") {
  link_diagram d;
  d.crossings.push_back({1, 2, 3, 4});
  auto rep = validate(d);
  CHECK_FALSE(rep.ok);
  bool found = false;
  for (auto& [rule, where] : rep.violations) found |= (rule == "edge-degree");
  CHECK(found);
}

TEST_CASE("hopf analyzes: 2 components of 2 edges, both crossings positive") {
  auto d = positive_hopf();
  auto rep = validate(d);
  REQUIRE(rep.ok);
  CHECK(rep.component_count == 2);
  CHECK(rep.writhe == 2);
  CHECK(rep.face_count == 4);  // V=2, E=4 => F=4
  auto info = analyze(d);
  CHECK(info.sign[0] == 1);
  CHECK(info.sign[1] == 1);
  REQUIRE(info.components.size() == 3);
  CHECK(info.components[1].size() == 2);
  CHECK(info.components[2].size() == 2);
}

TEST_CASE("kink unknot: V=1, E=2 => F=3") {
  auto d = positive_kink();
  auto rep = validate(d);
  REQUIRE(rep.ok);
  CHECK(rep.face_count == 3);
  CHECK(rep.writhe == 1);
  CHECK(rep.component_count == 1);
}

TEST_CASE("nonplanar code fails sphericity") {
  // two crossings where one component passes over the other twice in a way
  // that cannot be drawn in the plane
  link_diagram d;
  d.crossings.push_back({1, 3, 2, 4});
  d.crossings.push_back({2, 4, 1, 3});
  auto rep = validate(d);
  CHECK_FALSE(rep.ok);
  bool found = false;
  for (auto& [rule, where] : rep.violations) found |= (rule == "sphericity");
  CHECK(found);
}

TEST_CASE("canonical is a relabeling invariant") {
  auto d = positive_hopf();
  auto code = canonical(d);
  std::mt19937 rng(12345);
  for (int i = 0; i < 100; i++) {
    auto r = testing::random_relabel(d, rng);
    CHECK(canonical(r) == code);
  }
  CHECK(canonical(positive_hopf()) != canonical(unlink(2)));
}

TEST_CASE("canonical_form is idempotent and stable") {
  auto d = positive_hopf();
  auto c1 = canonical_form(d);
  auto c2 = canonical_form(c1.diagram);
  CHECK(c1.code == c2.code);
  CHECK(c1.diagram == c2.diagram);
}

TEST_CASE("mirror negates writhe and is an involution up to relabeling") {
  auto d = positive_hopf();
  auto m = mirror(d);
  CHECK(writhe(m) == -writhe(d));
  CHECK(canonical(mirror(m)) == canonical(d));
  CHECK(canonical(m) != canonical(d));  // hopf is chiral as an oriented diagram
}

TEST_CASE("sublink of hopf keeping one component is a free loop") {
  auto d = positive_hopf();
  auto s = sublink(d, {1});
  CHECK(s.crossing_count() == 0);
  CHECK(s.free_loops == 1);
  CHECK(validate(s).ok);
}

TEST_CASE("sublink keeping everything is the identity up to canonical form") {
  auto d = positive_hopf();
  auto s = sublink(d, {1, 2});
  CHECK(canonical(s) == canonical(d));
}

TEST_CASE("sublink argument errors") {
  auto d = positive_hopf();
  CHECK_THROWS_AS(sublink(d, {}), argument_error);
  CHECK_THROWS_AS(sublink(d, {7}), argument_error);
}

TEST_CASE("disjoint union") {
  CHECK(canonical(disjoint_union(unlink(1), unlink(1))) == canonical(unlink(2)));
  auto d = disjoint_union(positive_hopf(), unlink(1));
  auto rep = validate(d);
  REQUIRE(rep.ok);
  CHECK(rep.component_count == 3);
  CHECK(rep.crossing_count == 2);
}

TEST_CASE("insert_twists basics") {
  auto d = positive_hopf();
  // k = 0 leaves the diagram alone
  CHECK(canonical(insert_twists(d, 1, 3, 0)) == canonical(d));
  // find a co-face pair of edges on distinct components and twist once
  auto info = analyze(d);
  bool done = false;
  for (edge_id a = 1; a <= info.edge_count && !done; a++)
    for (edge_id b = 1; b <= info.edge_count && !done; b++) {
      if (info.component_of[a] == info.component_of[b]) continue;
      link_diagram t;
      try {
        t = insert_twists(d, a, b, 1);
      } catch (const rewrite_error&) {
        continue;
      }
      CHECK(t.crossing_count() == d.crossing_count() + 2);
      CHECK(validate(t).ok);
      done = true;
    }
  CHECK(done);
}

TEST_CASE("pd text round trip") {
  auto d = positive_hopf();
  auto text = write_pd_text(d);
  auto back = parse_pd_text(text);
  CHECK(canonical(back) == canonical(d));
  auto loops = parse_pd_text("# empty diagram\nO 3\n");
  CHECK(loops.free_loops == 3);
  CHECK(loops.crossing_count() == 0);
}

TEST_CASE("pd text rejects bad component declarations") {
  // declare a component that mixes the two hopf components
  std::string text = "X 4 1 3 2\nX 1 4 2 3\nC 1: 1 3\n";
  CHECK_THROWS_AS(parse_pd_text(text), argument_error);
}

TEST_CASE("json round trip") {
  auto d = positive_hopf();
  auto s = write_pd_json(d);
  auto back = parse_pd_json(s);
  CHECK(canonical(back) == canonical(d));
}

TEST_SUITE_END();
