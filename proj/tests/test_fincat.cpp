#include "doctest.h"

#include <memory>

#include "bcat/fincat.hpp"

using namespace bcat;

namespace {
FinCategoryPtr ptr(FinCategory c) { return std::make_shared<const FinCategory>(std::move(c)); }
}  // namespace

TEST_CASE("validate_category accepts the canonical small categories") {
  CHECK(validate_category(cat_one()).ok());
  CHECK(validate_category(cat_two()).ok());
  CHECK(validate_category(cat_disc2()).ok());
  CHECK(validate_category(cat_par()).ok());
  CHECK(validate_category(cat_idem_mon()).ok());
}

TEST_CASE("validate_category names a broken identity law") {
  FinCategory d;
  d.add_object("0");
  d.add_object("1");
  d.ensure_identities();
  int g = d.add_morphism("g", 0, 1);
  int h = d.add_morphism("h", 0, 1);
  d.set_compose(d.identity(0), d.identity(0), d.identity(0));
  d.set_compose(d.identity(1), d.identity(1), d.identity(1));
  d.set_compose(g, d.identity(0), g);
  d.set_compose(h, d.identity(0), h);
  d.set_compose(d.identity(1), g, h);  // violates left identity
  d.set_compose(d.identity(1), h, h);
  Report r = validate_category(d);
  CHECK(!r.ok());
  bool mentions = false;
  for (const auto& v : r.violations)
    if (v.find("identity law") != std::string::npos && v.find("g") != std::string::npos)
      mentions = true;
  CHECK(mentions);
}

TEST_CASE("slice_category") {
  SUBCASE("terminal category") {
    FinCategory s = slice_category(cat_one(), 0);
    CHECK(s.object_count() == 1);
    CHECK(s.morphism_count() == 1);
    CHECK(validate_category(s).ok());
  }
  SUBCASE("Two sliced at 1 has two objects and one non-identity morphism") {
    FinCategory c = cat_two();
    FinCategory s = slice_category(c, 1);
    CHECK(s.object_count() == 2);
    CHECK(s.morphism_count() == 3);
    CHECK(validate_category(s).ok());
    // isomorphic to Two itself
    auto iso = iso_check(ptr(s), ptr(cat_two()));
    REQUIRE(iso.has_value());
    CHECK(validate_functor(iso->fwd).ok());
    CHECK(validate_functor(iso->bwd).ok());
  }
  SUBCASE("discrete slice") {
    FinCategory s = slice_category(cat_disc2(), 0);
    CHECK(s.object_count() == 1);
    CHECK(s.morphism_count() == 1);
  }
  SUBCASE("unknown object") { CHECK_THROWS_AS(slice_category(cat_two(), 7), Error); }
}

TEST_CASE("product_category") {
  SUBCASE("One x C is isomorphic to C") {
    FinCategory p = product_category(cat_one(), cat_par());
    CHECK(validate_category(p).ok());
    CHECK(iso_check(ptr(p), ptr(cat_par())).has_value());
  }
  SUBCASE("Two x Two has 4 objects and 9 morphisms") {
    FinCategory p = product_category(cat_two(), cat_two());
    CHECK(p.object_count() == 4);
    CHECK(p.morphism_count() == 9);
    CHECK(validate_category(p).ok());
  }
  SUBCASE("Disc2 x Disc2 is discrete with 4 objects") {
    FinCategory p = product_category(cat_disc2(), cat_disc2());
    CHECK(p.object_count() == 4);
    CHECK(p.morphism_count() == 4);
  }
}

TEST_CASE("pullback_of_categories") {
  SUBCASE("diagonal of Two") {
    auto two = ptr(cat_two());
    FinCategory p = pullback_of_categories(identity_functor(two), identity_functor(two));
    CHECK(iso_check(ptr(p), two).has_value());
  }
  SUBCASE("agreeing pairs only") {
    auto disc = ptr(cat_disc2());
    auto two = ptr(cat_two());
    auto one = ptr(cat_one());
    FinFunctor f{disc, two, {0, 1}, {two->identity(0), two->identity(1)}};
    FinFunctor g{one, two, {1}, {two->identity(1)}};
    FinCategory p = pullback_of_categories(f, g);
    CHECK(p.object_count() == 1);
    CHECK(p.morphism_count() == 1);
  }
  SUBCASE("over One gives the product") {
    auto two = ptr(cat_two());
    auto one = ptr(cat_one());
    FinFunctor bang{two, one, {0, 0}, {0, 0, 0}};
    FinCategory p = pullback_of_categories(bang, bang);
    CHECK(p.object_count() == 4);
    CHECK(p.morphism_count() == 9);
  }
  SUBCASE("mismatched targets") {
    auto two = ptr(cat_two());
    auto one = ptr(cat_one());
    CHECK_THROWS_AS(pullback_of_categories(identity_functor(two), identity_functor(one)), Error);
  }
}

TEST_CASE("pullback_in") {
  SUBCASE("identities in One") {
    auto pb = pullback_in(cat_one(), 0, 0);
    REQUIRE(pb.has_value());
    CHECK(pb->apex == 0);
  }
  SUBCASE("set-level pullback of constant maps is the singleton product") {
    SetCategory sc = SetCategory::full_on({{"A", {Val::str("a")}},
                                           {"B", {Val::str("b")}},
                                           {"C", {Val::str("c")}}});
    REQUIRE(validate_category(sc.cat).ok());
    // the unique maps A -> C and B -> C form a cospan
    int f = -1, g = -1;
    for (int m = 0; m < sc.cat.morphism_count(); ++m) {
      if (sc.cat.src(m) == 0 && sc.cat.dst(m) == 2) f = m;
      if (sc.cat.src(m) == 1 && sc.cat.dst(m) == 2) g = m;
    }
    REQUIRE(f >= 0);
    REQUIRE(g >= 0);
    auto pb = pullback_in(sc.cat, f, g);
    REQUIRE(pb.has_value());
    CHECK(sc.elements[pb->apex].size() == 1);  // singleton apex
  }
  SUBCASE("non-cospan input") {
    FinCategory d = cat_disc2();
    CHECK_THROWS_AS(pullback_in(d, d.identity(0), d.identity(1)), Error);
  }
}

TEST_CASE("iso_check") {
  CHECK(iso_check(ptr(cat_one()), ptr(cat_one())).has_value());
  CHECK(!iso_check(ptr(cat_two()), ptr(cat_disc2())).has_value());
  auto iso = iso_check(ptr(slice_category(cat_two(), 1)), ptr(cat_two()));
  REQUIRE(iso.has_value());
  CHECK(validate_functor(iso->fwd).ok());
  CHECK(validate_functor(iso->bwd).ok());
  // inverse on both sides
  for (int o = 0; o < 2; ++o) CHECK(iso->bwd.object_map[iso->fwd.object_map[o]] == o);
}

TEST_CASE("connected_components") {
  CHECK(connected_components(cat_one()).size() == 1);
  CHECK(connected_components(cat_disc2()).size() == 2);
  CHECK(connected_components(cat_two()).size() == 1);
  // component count is multiplicative under products
  FinCategory p = product_category(cat_disc2(), cat_two());
  CHECK(connected_components(p).size() == 2);
}

TEST_CASE("colimit_of_sets") {
  SUBCASE("constant singleton over a connected shape") {
    SetDiagram d;
    d.shape = cat_two();
    d.value = {{Val::str("a")}, {Val::str("a")}};
    d.action = {{0}, {0}, {0}};
    REQUIRE(d.validate().ok());
    CHECK(colimit_of_sets(d).size() == 1);
  }
  SUBCASE("discrete shape keeps sets apart") {
    SetDiagram d;
    d.shape = cat_disc2();
    d.value = {{Val::str("a")}, {Val::str("b")}};
    d.action = {{0}, {0}};
    CHECK(colimit_of_sets(d).size() == 2);
  }
  SUBCASE("parallel pair identifies targets") {
    SetDiagram d;
    d.shape = cat_par();
    d.value = {{Val::str("a"), Val::str("b")}, {Val::str("c"), Val::str("d")}};
    // morphism order: id0, id1, f, g with f(a)=c, g(a)=d: c and d collapse
    d.action = {{0, 1}, {0, 1}, {0, 0}, {1, 0}};
    REQUIRE(d.validate().ok());
    CHECK(colimit_of_sets(d).size() == 1);
  }
}

TEST_CASE("arrow category and cod functor") {
  auto two = ptr(cat_two());
  auto arr = ptr(arrow_category(*two));
  CHECK(validate_category(*arr).ok());
  CHECK(arr->object_count() == 3);  // id0, id1, f
  FinFunctor cod = cod_functor(arr, two);
  CHECK(validate_functor(cod).ok());
}
