#include <doctest.h>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "unsharp/error.hpp"
#include "unsharp/sections.hpp"

using namespace unsharp;
using fixtures::labels;

namespace {

std::optional<element> at(const poset& p, const char* name) { return p.at(name); }

}  // namespace

TEST_CASE("section pseudocomplements on the example posets") {
  const poset f1 = fixtures::pentagon(), f2 = fixtures::bowtie(), f3 = fixtures::tall_bowtie();
  CHECK(section_pseudocomplement(f1, f1.at("c"), f1.at("a")) == at(f1, "a"));
  CHECK(section_pseudocomplement(f1, f1.at("a"), f1.at("0")) == at(f1, "b"));
  for (element y = 0; y < f3.size(); ++y) CHECK(section_pseudocomplement(f3, y, y) == f3.top());

  // a is not above b, so a has no pseudocomplement in [b,1]
  CHECK_FALSE(section_pseudocomplement(f2, f2.at("a"), f2.at("b")).has_value());

  const poset anti = poset::from_covers({"a", "b"}, {});
  CHECK_THROWS_AS(section_pseudocomplement(anti, 0, 0), error);
}

TEST_CASE("pseudocomplemented sections verdicts") {
  const poset f2 = fixtures::bowtie(), f3 = fixtures::tall_bowtie();
  const auto c3 = verify_pseudocomplemented_sections(f3);
  CHECK(c3.report.passed());
  REQUIRE(c3.table.has_value());
  // one cell per comparable pair y <= x: 7 diagonal + 18 strict
  CHECK(c3.table->defined_count() == 25);
  CHECK(c3.table->at(f3.at("a"), f3.at("0")) == at(f3, "c"));

  const auto c2 = verify_pseudocomplemented_sections(f2);
  CHECK(c2.report.passed());
  CHECK(c2.table->defined_count() == 19);

  const std::vector<label_pair> vee{{"0", "a"}, {"0", "b"}};
  const auto no_top = verify_pseudocomplemented_sections(poset::from_covers({"0", "a", "b"}, vee));
  CHECK_FALSE(no_top.report.passed());
  CHECK_FALSE(no_top.table.has_value());
  CHECK(no_top.report.verdicts().front().note == "NoTopElement");

  // the section [0,1] of 0 < a,b,c < 1 is M3-shaped: a has no greatest disjoint partner
  const std::vector<label_pair> m3{{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}};
  const poset m = poset::from_covers({"0", "a", "b", "c", "1"}, m3);
  const auto cm = verify_pseudocomplemented_sections(m);
  CHECK_FALSE(cm.report.passed());
  REQUIRE(cm.report.verdicts().front().witnesses.size() == 1);
  CHECK(cm.report.verdicts().front().witnesses.front() == witness{m.at("a"), m.at("0")});
  CHECK_THROWS_AS(sectioned_poset{m}, error);
  CHECK_FALSE(sectioned_poset::try_make(m).has_value());
}

TEST_CASE("relative and sectional pseudocomplements") {
  const poset f1 = fixtures::pentagon(), f2 = fixtures::bowtie(), f3 = fixtures::tall_bowtie();
  CHECK(relative_pseudocomplement(f2, f2.at("a"), f2.at("b")) == at(f2, "b"));
  CHECK(relative_pseudocomplement(f2, f2.at("c"), f2.at("d")) == at(f2, "d"));
  for (element x = 0; x < f3.size(); ++x) CHECK(relative_pseudocomplement(f3, x, x) == f3.top());
  CHECK_FALSE(relative_pseudocomplement(f3, f3.at("b"), f3.at("a")).has_value());
  CHECK_FALSE(relative_pseudocomplement(f1, f1.at("c"), f1.at("a")).has_value());
  CHECK(is_relatively_pseudocomplemented(f2));
  CHECK_FALSE(is_relatively_pseudocomplemented(f1));
  CHECK_FALSE(is_relatively_pseudocomplemented(f3));

  CHECK(sectional_pseudocomplement(f2, f2.at("a"), f2.at("b")) == at(f2, "b"));
  for (element x = 0; x < f2.size(); ++x) CHECK(sectional_pseudocomplement(f2, x, x) == f2.top());
  CHECK(sectional_pseudocomplement(f1, f1.at("c"), f1.at("a")) == at(f1, "a"));
  CHECK(section_pseudocomplement(f1, f1.at("c"), f1.at("a")) == at(f1, "a"));
}

TEST_CASE("negation") {
  const sectioned_poset f1{fixtures::pentagon()}, f2{fixtures::bowtie()}, f3{fixtures::tall_bowtie()};
  const poset& p3 = f3.order();
  CHECK(negation(f3, p3.at("a")) == p3.at("c"));
  CHECK(negation(f3, p3.at("0")) == p3.at("1"));
  CHECK(negation(f3, p3.at("1")) == p3.at("0"));
  CHECK(negation(f2, f2.order().at("c")) == f2.order().at("0"));
  CHECK(negation(fixtures::tall_bowtie(), p3.at("a")) == p3.at("c"));

  CHECK(negation_laws_report(f1).passed());
  CHECK(negation_laws_report(f2).passed());
  CHECK(negation_laws_report(f3).passed());

  const sectioned_poset one{poset::from_covers({"x"}, {})};
  CHECK(negation(one, 0) == 0u);
  CHECK(negation_laws_report(one).passed());

  const std::vector<label_pair> wedge{{"a", "1"}, {"b", "1"}};
  const sectioned_poset no_bottom{poset::from_covers({"a", "b", "1"}, wedge)};
  CHECK_THROWS_AS(negation(no_bottom, 0), error);
  CHECK_THROWS_AS(negation_laws_report(no_bottom), error);
}

TEST_CASE("Glivenko skeleton") {
  const poset f3 = fixtures::tall_bowtie();
  const skeleton s3 = glivenko_skeleton(f3);
  CHECK(s3.members == labels(f3, {"0", "b", "c", "1"}));
  CHECK(s3.report.passed());
  const poset& sk = s3.subposet;
  CHECK(sk.labels() == std::vector<std::string>{"0", "b", "c", "1"});
  CHECK_FALSE(sk.comparable(sk.at("b"), sk.at("c")));
  CHECK(meet(sk, sk.at("b"), sk.at("c")) == sk.at("0"));
  CHECK(join(sk, sk.at("b"), sk.at("c")) == sk.at("1"));

  // bowtie: double negation fixes 0, a, b, 1 only (neg c = neg d = 0)
  const poset f2 = fixtures::bowtie();
  CHECK(glivenko_skeleton(f2).members == labels(f2, {"0", "a", "b", "1"}));

  // the four-element Boolean poset is its own skeleton
  const std::vector<label_pair> sq{{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}};
  const poset boolean = poset::from_covers({"0", "a", "b", "1"}, sq);
  CHECK(glivenko_skeleton(boolean).members == boolean.carrier());
  CHECK(glivenko_skeleton(fixtures::chain(4)).members.size() == 2);
}

TEST_CASE("section properties over every labeled poset up to five points") {
  std::size_t with_top = 0, coincidences = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const poset& p : enumerate_posets(n, dedup_mode::labeled)) {
      const oracle::order o = oracle::of(p);
      CHECK(is_relatively_pseudocomplemented(p) == [&] {
        for (unsigned x = 0; x < n; ++x)
          for (unsigned y = 0; y < n; ++y)
            if (!o.relative_pc(x, y)) return false;
        return true;
      }());
      for (element x = 0; x < n; ++x)
        for (element y = 0; y < n; ++y) {
          REQUIRE(relative_pseudocomplement(p, x, y) == o.relative_pc(x, y));
          REQUIRE(sectional_pseudocomplement(p, x, y) == o.sectional_pc(x, y));
        }
      if (!p.top()) continue;
      ++with_top;
      const auto check = verify_pseudocomplemented_sections(p);
      CHECK(check.report.passed() == o.has_pc_sections());
      for (element y = 0; y < n; ++y)
        for (element x = 0; x < n; ++x) {
          // the library searches all of P; the oracle searches [y,1] only
          const auto z = section_pseudocomplement(p, x, y);
          REQUIRE(z == o.section_pc(x, y));
          if (z) {
            ++coincidences;
            CHECK(p.leq(y, *z));
            const auto circ = sectional_pseudocomplement(p, x, y);
            if (circ) CHECK(p.leq(*circ, *z));
          }
        }
      if (!check.report.passed()) continue;
      const sectioned_poset sp{p};
      if (p.bottom()) {
        CHECK(negation_laws_report(sp).passed());
        const skeleton s = glivenko_skeleton(p);
        CHECK(s.report.passed());
        for (element x = 0; x < n; ++x)
          CHECK(s.members.contains(x) == (negation(sp, negation(sp, x)) == x));
      }
    }
  }
  // a poset with top is a choice of top plus any poset on the rest: n * count(n-1)
  CHECK(with_top == 1 + 2 + 9 + 76 + 1095);
  CHECK(coincidences > 0);
}
