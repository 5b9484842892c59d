#include <doctest.h>

#include <algorithm>

#include "agm/errors.hpp"
#include "agm/node_dynamics.hpp"
#include "brute_oracle.hpp"

using agm::FieldCtx;
using agm::kDepthInf;
using agm::Node;

TEST_CASE("children: golden cases") {
  FieldCtx f29 = FieldCtx::make(29);
  agm::NodeSet2 c = agm::children(f29, Node{13, 28});
  REQUIRE(c.size() == 2);
  CHECK(c[0] == Node{6, 4});
  CHECK(c[1] == Node{6, 25});

  CHECK(agm::children(f29, Node{1, 11}).empty());  // 11 is not a square

  FieldCtx f7 = FieldCtx::make(7);
  agm::NodeSet2 c7 = agm::children(f7, Node{1, 4});
  REQUIRE(c7.size() == 2);
  CHECK(c7.contains(Node{6, 5}));
  CHECK(c7.contains(Node{6, 2}));

  CHECK_THROWS_AS(agm::children(f7, Node{3, 3}), agm::TrivialNodeError);
  CHECK_THROWS_AS(agm::children(f7, Node{0, 2}), agm::TrivialNodeError);
}

TEST_CASE("parents: golden cases") {
  FieldCtx f29 = FieldCtx::make(29);
  agm::NodeSet2 p = agm::parents(f29, Node{6, 25});
  REQUIRE(p.size() == 2);
  CHECK(p.contains(Node{13, 28}));
  CHECK(p.contains(Node{28, 13}));

  FieldCtx f7 = FieldCtx::make(7);
  agm::NodeSet2 p7 = agm::parents(f7, Node{6, 5});
  REQUIRE(p7.size() == 2);
  CHECK(p7.contains(Node{1, 4}));
  CHECK(p7.contains(Node{4, 1}));
}

TEST_CASE("children and parents match the brute oracle") {
  for (std::uint32_t p : {7u, 11u, 13u, 29u}) {
    FieldCtx f = FieldCtx::make(p);
    for (auto [a, b] : oracle::all_nontrivial(p)) {
      Node n{a, b};
      auto ck = oracle::children({a, b}, p);
      agm::NodeSet2 mine = agm::children(f, n);
      REQUIRE(mine.size() == ck.size());
      for (auto c : ck) CHECK(mine.contains(Node{c.first, c.second}));

      auto pk = oracle::parents({a, b}, p);
      agm::NodeSet2 mp = agm::parents(f, n);
      REQUIRE(mp.size() == pk.size());
      for (auto m : pk) CHECK(mp.contains(Node{m.first, m.second}));
    }
  }
}

TEST_CASE("children and parents are mutually inverse") {
  for (std::uint32_t p : {7u, 11u, 37u, 101u}) {
    FieldCtx f = FieldCtx::make(p);
    for (agm::Elem a = 1; a < p; ++a)
      for (agm::Elem b = 1; b < p; ++b) {
        Node n{a, b};
        if (!agm::is_nontrivial(f, n)) continue;
        for (Node c : agm::children(f, n))
          CHECK(agm::parents(f, c).contains(n));
        for (Node m : agm::parents(f, n))
          CHECK(agm::children(f, m).contains(n));
      }
  }
}

TEST_CASE("edge identities hold on every generated edge") {
  for (std::uint32_t p : {7u, 29u, 53u}) {
    FieldCtx f = FieldCtx::make(p);
    for (agm::Elem a = 1; a < p; ++a)
      for (agm::Elem b = 1; b < p; ++b) {
        Node n{a, b};
        if (!agm::is_nontrivial(f, n)) continue;
        for (Node c : agm::children(f, n)) {
          // alpha beta (alpha+beta)(alpha-beta)^2 = 8 gamma delta^2 (gamma+delta)(gamma-delta)
          agm::Elem lhs = f.mul(f.mul(f.mul(a, b), f.add(a, b)),
                                f.mul(f.sub(a, b), f.sub(a, b)));
          agm::Elem rhs = f.mul(
              f.mul(f.from_int(8), f.mul(c.a, f.mul(c.b, c.b))),
              f.mul(f.add(c.a, c.b), f.sub(c.a, c.b)));
          CHECK(lhs == rhs);
          // 4 a_n^2 - 4 b_n^2 = (a_{n-1} - b_{n-1})^2 with (a,b) the parent
          agm::Elem four = f.from_int(4);
          agm::Elem lhs2 = f.sub(f.mul(four, f.mul(c.a, c.a)), f.mul(four, f.mul(c.b, c.b)));
          agm::Elem d = f.sub(a, b);
          CHECK(lhs2 == f.mul(d, d));
        }
      }
  }
}

TEST_CASE("adv_depth golden values") {
  FieldCtx f29 = FieldCtx::make(29);
  CHECK(agm::adv_depth(f29, Node{6, 25}) == 1);
  CHECK(agm::adv_depth(f29, Node{13, 28}) == kDepthInf);
  FieldCtx f7 = FieldCtx::make(7);
  CHECK(agm::adv_depth(f7, Node{1, 4}) == kDepthInf);
}

TEST_CASE("criteria: golden cases") {
  FieldCtx f29 = FieldCtx::make(29);
  CHECK(agm::is_adv_infinite_criterion(f29, Node{13, 28}));
  CHECK(!agm::is_adv_infinite_criterion(f29, Node{6, 25}));
  // (6,25) sits on a colon: only 1-advanceable but indefinitely backtrackable
  CHECK(agm::is_back_infinite_criterion(f29, Node{6, 25}));

  FieldCtx f7 = FieldCtx::make(7);
  CHECK(agm::is_adv_infinite_criterion(f7, Node{1, 4}));
  CHECK(agm::has_closed_criterion(f7));
  CHECK(!agm::has_closed_criterion(FieldCtx::make(17)));
}

TEST_CASE("criteria agree with the brute-force classification") {
  for (std::uint32_t p : {7u, 11u, 13u, 29u, 37u}) {
    FieldCtx f = FieldCtx::make(p);
    oracle::Classification cls = oracle::classify(p);
    for (auto pr : oracle::all_nontrivial(p)) {
      Node n{pr.first, pr.second};
      bool adv_inf = !cls.adv.count(pr);
      bool back_inf = !cls.back.count(pr);
      CHECK(agm::is_adv_infinite_criterion(f, n) == adv_inf);
      CHECK(agm::is_back_infinite_criterion(f, n) == back_inf);
      std::uint32_t d = agm::adv_depth(f, n);
      CHECK((adv_inf ? d == kDepthInf : d == cls.adv.at(pr)));
      std::uint32_t bd = agm::back_depth(f, n);
      CHECK((back_inf ? bd == kDepthInf : bd == cls.back.at(pr)));
    }
  }
}

TEST_CASE("unique_advance golden chain") {
  FieldCtx f7 = FieldCtx::make(7);
  CHECK(agm::unique_advance(f7, Node{1, 4}) == Node{6, 5});
  CHECK(agm::unique_advance(f7, Node{6, 5}) == Node{2, 4});
  FieldCtx f29 = FieldCtx::make(29);
  CHECK(agm::unique_advance(f29, Node{13, 28}) == Node{6, 4});
  CHECK_THROWS_AS(agm::unique_advance(f29, Node{6, 25}),
                  agm::NotInfinitelyAdvanceableError);
  CHECK_THROWS_AS(agm::unique_advance(FieldCtx::make(17), Node{1, 2}),
                  agm::UnsupportedCongruenceError);
}

TEST_CASE("unique_backtrack follows cycles backward") {
  for (std::uint32_t p : {7u, 29u}) {
    FieldCtx f = FieldCtx::make(p);
    for (agm::Elem a = 1; a < p; ++a)
      for (agm::Elem b = 1; b < p; ++b) {
        Node n{a, b};
        if (!agm::is_nontrivial(f, n)) continue;
        if (!agm::is_back_infinite_criterion(f, n)) continue;
        Node m = agm::unique_backtrack(f, n);
        CHECK(agm::is_back_infinite_criterion(f, m));
        CHECK(agm::children(f, m).contains(n));
      }
  }
}

TEST_CASE("exactly one child of a 1-advanceable node is 1-advanceable (q = 3 mod 4)") {
  for (std::uint32_t p : {7u, 11u, 19u, 23u}) {
    FieldCtx f = FieldCtx::make(p);
    for (agm::Elem a = 1; a < p; ++a)
      for (agm::Elem b = 1; b < p; ++b) {
        Node n{a, b};
        if (!agm::is_nontrivial(f, n)) continue;
        agm::NodeSet2 cs = agm::children(f, n);
        if (cs.empty()) continue;
        int advanceable = 0;
        for (Node c : cs)
          if (!agm::children(f, c).empty()) ++advanceable;
        CHECK(advanceable == 1);
      }
  }
}

TEST_CASE("node classification matches the brute oracle") {
  for (std::uint32_t p : {11u, 29u}) {
    FieldCtx f = FieldCtx::make(p);
    agm::NodeClassification mine = agm::NodeClassification::compute(f);
    oracle::Classification ref = oracle::classify(p);
    std::uint64_t adv_inf = 0, back_inf = 0, total = 0;
    for (auto pr : oracle::all_nontrivial(p)) {
      Node n{pr.first, pr.second};
      ++total;
      if (!ref.adv.count(pr)) ++adv_inf;
      else CHECK(mine.adv_depth(n) == ref.adv.at(pr));
      if (!ref.back.count(pr)) ++back_inf;
      else CHECK(mine.back_depth(n) == ref.back.at(pr));
      CHECK(mine.adv_infinite(n) == !ref.adv.count(pr));
      CHECK(mine.back_infinite(n) == !ref.back.count(pr));
    }
    CHECK(mine.count_adv(kDepthInf) == adv_inf);
    CHECK(mine.count_back(kDepthInf) == back_inf);
    CHECK(mine.count_adv(0) == total);
  }
}
