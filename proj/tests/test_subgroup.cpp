#include "polytc/subgroup.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <random>
#include <set>

#include "fixtures.hpp"

using namespace polytc;

namespace {

Element rand_elem(std::mt19937& rng, const PcPtr& p) {
  if (p->size() == 0) return p->id();
  std::uniform_int_distribution<int> exp(-3, 3);
  Word w;
  for (std::size_t i = 0; i < 1 + rng() % 4; ++i) {
    int e = exp(rng);
    if (e != 0) w.push(rng() % p->size(), e);
  }
  return p->collect(w);
}

// brute-force subgroup elements on a finite group
std::set<Element> closure(const PcPtr& p, std::vector<Element> gens) {
  std::set<Element> seen{p->id()};
  std::vector<Element> frontier{p->id()};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (auto& g : frontier)
      for (auto& h : gens) {
        for (auto& prod : {p->mult(g, h), p->mult(g, p->inverse(h))}) {
          if (seen.insert(prod).second) next.push_back(prod);
        }
      }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST_CASE("subgroup construction on known examples") {
  auto s3 = fixtures::s3();
  Subgroup ab(s3, {s3->element({1, 1})});
  CHECK(ab.order() == 2);
  CHECK(ab.igs().size() == 1);
  CHECK(ab.igs()[0] == s3->element({1, 1}));

  auto z2 = fixtures::z2();
  Subgroup lat(z2, {z2->element({2, 0}), z2->element({0, 3})});
  CHECK(lat.igs().size() == 2);
  CHECK(lat.igs()[0] == z2->element({2, 0}));
  CHECK(lat.igs()[1] == z2->element({0, 3}));

  CHECK(Subgroup::whole(s3).order() == 6);
}

TEST_CASE("membership on known examples") {
  auto s3 = fixtures::s3();
  Subgroup ab(s3, {s3->element({1, 1})});
  CHECK(!ab.contains(s3->gen(1)));
  CHECK(ab.contains(s3->id()));
  CHECK(ab.contains(s3->element({1, 1})));

  auto z2 = fixtures::z2();
  Subgroup lat(z2, {z2->element({2, 0}), z2->element({0, 3})});
  CHECK(lat.contains(z2->element({4, 6})));
  CHECK(!lat.contains(z2->element({1, 0})));
  CHECK(!lat.contains(z2->element({2, 2})));
}

TEST_CASE("expression witnesses reconstruct the element") {
  std::mt19937 rng(31);
  for (auto& p : {fixtures::s4(), fixtures::klein(), fixtures::h3(),
                  fixtures::sol3()}) {
    for (int t = 0; t < 30; ++t) {
      std::vector<Element> gens{rand_elem(rng, p), rand_elem(rng, p)};
      Subgroup s(p, gens);
      Element g = p->mult(p->power(gens[0], (int)(rng() % 5) - 2),
                          p->power(gens[1], (int)(rng() % 5) - 2));
      auto expr = s.express(g);
      REQUIRE(expr.has_value());
      Element rebuilt = p->id();
      for (auto& [idx, q] : *expr)
        rebuilt = p->mult(rebuilt, p->power(s.igs()[idx], q));
      CHECK(rebuilt == g);
    }
  }
}

TEST_CASE("index on known examples") {
  auto s3 = fixtures::s3();
  CHECK(Subgroup(s3, {s3->element({1, 1})}).index() == 3);
  CHECK(Subgroup::whole(s3).index() == 1);
  auto k = fixtures::klein();
  CHECK(Subgroup(k, {k->gen(1)}).index() == 0);  // infinite
  CHECK(Subgroup(k, {k->element({2, 0}), k->gen(1)}).index() == 2);
}

TEST_CASE("normal closure on known examples") {
  auto s3 = fixtures::s3();
  auto ncl_b = normal_closure(s3, {s3->gen(1)});
  CHECK(ncl_b == Subgroup(s3, {s3->gen(1)}));
  CHECK(normal_closure(s3, {s3->gen(0), s3->gen(1)}) == Subgroup::whole(s3));

  auto k = fixtures::klein();
  auto ncl_b2 = normal_closure(k, {k->element({0, 2})});
  CHECK(ncl_b2 == Subgroup(k, {k->element({0, 2})}));
  CHECK(ncl_b2.contains(k->element({0, -2})));
}

TEST_CASE("normality tests") {
  auto s3 = fixtures::s3();
  CHECK(is_normal(Subgroup(s3, {s3->gen(1)})));
  CHECK(!is_normal(Subgroup(s3, {s3->gen(0)})));
  CHECK(is_normal(Subgroup::whole(s3)));
}

TEST_CASE("membership-index coherence on finite fixtures") {
  std::mt19937 rng(88);
  for (auto& p : {fixtures::s3(), fixtures::z6(), fixtures::d8(),
                  fixtures::q8(), fixtures::s4(), fixtures::z2z4z3()}) {
    Int n = p->group_order();
    for (int t = 0; t < 25; ++t) {
      Subgroup s(p, {rand_elem(rng, p), rand_elem(rng, p)});
      CHECK(s.order() * s.index() == n);
      CHECK(Int(s.elements().size()) == s.order());
    }
  }
}

TEST_CASE("membership agrees with brute-force closure on finite fixtures") {
  std::mt19937 rng(99);
  for (auto& p : {fixtures::s3(), fixtures::d8(), fixtures::q8(),
                  fixtures::s4()}) {
    for (int t = 0; t < 10; ++t) {
      std::vector<Element> gens{rand_elem(rng, p), rand_elem(rng, p)};
      Subgroup s(p, gens);
      auto truth = closure(p, gens);
      CHECK(Int(truth.size()) == s.order());
      p->enumerate_elements([&](const Element& g) {
        CHECK(s.contains(g) == (truth.count(g) > 0));
      });
    }
  }
}

TEST_CASE("transversals") {
  auto s3 = fixtures::s3();
  Subgroup b(s3, {s3->gen(1)});
  auto tv = b.transversal();
  REQUIRE(tv.size() == 2);
  for (std::size_t i = 0; i < tv.size(); ++i)
    for (std::size_t j = 0; j < tv.size(); ++j)
      CHECK(b.contains(s3->mult(tv[i], s3->inverse(tv[j]))) == (i == j));

  CHECK(Subgroup::whole(s3).transversal().size() == 1);

  auto z = fixtures::z();
  Subgroup ev(z, {z->element({2})});
  auto tz = ev.transversal();
  REQUIRE(tz.size() == 2);
  CHECK(ev.contains(z->mult(tz[0], z->inverse(tz[1]))) == false);

  CHECK_THROWS_AS(Subgroup::trivial(z).transversal(), InfiniteIndex);
}

TEST_CASE("transversal distinctness fuzz") {
  std::mt19937 rng(7);
  for (auto& p : {fixtures::d8(), fixtures::s4(), fixtures::z2z4z3()}) {
    for (int t = 0; t < 8; ++t) {
      Subgroup s(p, {rand_elem(rng, p)});
      auto tv = s.transversal();
      CHECK(Int(tv.size()) == s.index());
      for (std::size_t i = 0; i < tv.size(); ++i)
        for (std::size_t j = i + 1; j < tv.size(); ++j)
          CHECK(!s.contains(p->mult(tv[i], p->inverse(tv[j]))));
      // left box: canonical rep is constant on cosets g*S
      for (int r = 0; r < 10; ++r) {
        Element g = rand_elem(rng, p);
        Element u = rand_elem(rng, p);
        if (!s.contains(u)) continue;
        CHECK(s.left_coset_rep(g) == s.left_coset_rep(p->mult(g, u)));
      }
    }
  }
}

TEST_CASE("quotients on known examples") {
  auto k = fixtures::klein();
  auto q1 = quotient(k, Subgroup(k, {k->gen(1)}));
  REQUIRE(q1.quotient->size() == 1);
  CHECK(!q1.quotient->finite_order(0));  // K/<b> = Z

  auto s3 = fixtures::s3();
  auto q2 = quotient(s3, Subgroup::whole(s3));
  CHECK(q2.quotient->size() == 0);

  auto q3 = quotient(s3, Subgroup(s3, {s3->gen(1)}));
  REQUIRE(q3.quotient->size() == 1);
  CHECK(q3.quotient->order(0) == 2);  // S3/<b> = Z2

  CHECK_THROWS_AS(quotient(s3, Subgroup(s3, {s3->gen(0)})), NotNormal);
}

TEST_CASE("quotient projection and section behave") {
  std::mt19937 rng(1234);
  for (auto& p : {fixtures::s3(), fixtures::d8(), fixtures::s4(),
                  fixtures::klein(), fixtures::h3()}) {
    for (int t = 0; t < 6; ++t) {
      auto n = normal_closure(p, {rand_elem(rng, p)});
      auto qd = quotient(p, n);
      CHECK(qd.quotient->check_consistency().ok());
      // projection kills exactly N
      for (auto& u : n.igs())
        CHECK(qd.project(u) == qd.quotient->id());
      for (int r = 0; r < 20; ++r) {
        Element g = rand_elem(rng, p);
        Element h = rand_elem(rng, p);
        // multiplicativity of the projection
        CHECK(qd.project(p->mult(g, h)) ==
              qd.quotient->mult(qd.project(g), qd.project(h)));
        // section is a right inverse and lands in the same coset
        CHECK(qd.project(qd.section(qd.project(g))) == qd.project(g));
        CHECK(n.contains(
            p->mult(p->inverse(qd.section(qd.project(g))), g)));
      }
      // surjectivity on finite quotients
      if (qd.quotient->all_orders_finite()) {
        std::set<Element> hit;
        if (p->all_orders_finite()) {
          p->enumerate_elements(
              [&](const Element& g) { hit.insert(qd.project(g)); });
          CHECK(Int(hit.size()) == qd.quotient->group_order());
        }
      }
    }
  }
}

TEST_CASE("induced presentations") {
  std::mt19937 rng(4321);
  for (auto& p : {fixtures::s4(), fixtures::klein(), fixtures::h3(),
                  fixtures::q8(), fixtures::sol3()}) {
    for (int t = 0; t < 8; ++t) {
      Subgroup s(p, {rand_elem(rng, p), rand_elem(rng, p)});
      auto ind = induced(s);
      CHECK(ind.pres->check_consistency().ok());
      CHECK(ind.pres->size() == s.igs().size());
      // to_parent is a multiplicative bijection onto the subgroup
      for (int r = 0; r < 15; ++r) {
        Element x = rand_elem(rng, ind.pres);
        Element y = rand_elem(rng, ind.pres);
        Element gx = ind.to_parent(x), gy = ind.to_parent(y);
        CHECK(s.contains(gx));
        CHECK(ind.to_parent(ind.pres->mult(x, y)) == p->mult(gx, gy));
        CHECK(ind.from_parent(gx) == x);
      }
    }
  }
}

TEST_CASE("subgroup products") {
  auto s4 = fixtures::s4();
  Subgroup v4(s4, {s4->gen(2), s4->gen(3)});
  Subgroup b(s4, {s4->gen(1)});
  REQUIRE(is_normal(v4));
  Subgroup a4 = subgroup_product(v4, b);
  CHECK(a4.order() == 12);
}
