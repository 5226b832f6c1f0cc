#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "liecheck/weyl.hpp"

using namespace liecheck;

namespace {

WeylWord randomWord(std::mt19937& rng, int rank, int len) {
  std::uniform_int_distribution<int> d(1, rank);
  WeylWord w;
  for (int i = 0; i < len; ++i) w.letters.push_back(d(rng));
  return w;
}

Weight randomWeight(std::mt19937& rng, int rank) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  Weight w;
  for (int i = 0; i < rank; ++i) w.coeffs.push_back(Rat(num(rng), den(rng)));
  return w;
}

}  // namespace

TEST_CASE("applyWord basics") {
  auto e8 = buildRootSystem(Series::E8);
  Weight mu{{1, 0, Rat(1, 2), -1, 0, 2, Rat(1, 3), 0}};
  CHECK(applyWord(e8, WeylWord{}, mu) == mu);
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j)
      if (i != j)
        CHECK(applyWord(e8, WeylWord{{i}}, fundamentalWeight(e8, j)) ==
              fundamentalWeight(e8, j));

  // three-step hand expansion of s6 s2 s4 on w1+w4+w6+w8
  Weight half{{1, 0, 0, 1, 0, 1, 0, 1}};
  CHECK(applyWord(e8, WeylWord{{6, 2, 4}}, half) ==
        Weight{{1, -1, 1, 0, 2, -1, 1, 1}});
}

TEST_CASE("dotAction") {
  auto f4 = buildRootSystem(Series::F4);
  Weight mu{{0, -1, Rat(2, 3), 1}};
  CHECK(dotAction(f4, WeylWord{}, mu) == mu);
  // s_i . mu = mu whenever <mu+rho, a_i^vee> = 0
  Weight fixed{{-1, 2, 0, 1}};  // mu+rho has first coordinate 0
  CHECK(dotAction(f4, WeylWord{{1}}, fixed) == fixed);

  // lambda+rho = s3s2(h^vee/2) from the F4 short-A1 case; the printed display
  // swaps the last two coefficients, the linear system forces (1,1,-1,2).
  Weight halfHvee{{1, 0, 1, 1}};
  Weight lamRho = applyWord(f4, WeylWord{{3, 2}}, halfHvee);
  CHECK(lamRho == Weight{{1, 1, -1, 2}});
  Weight lam = halfHvee;  // h^vee/2 - rho, shifted
  for (auto& c : lam.coeffs) c -= 1;
  Weight dotted = dotAction(f4, WeylWord{{3, 2}}, lam);
  Weight expect = lamRho;
  for (auto& c : expect.coeffs) c -= 1;
  CHECK(dotted == expect);
}

TEST_CASE("length by inversions, with a ball oracle for x2") {
  auto e8 = buildRootSystem(Series::E8);
  CHECK(lengthOf(e8, WeylWord{}) == 0);
  for (int i = 1; i <= 8; ++i) CHECK(lengthOf(e8, WeylWord{{i}}) == 1);

  WeylWord x2{{1, 3, 1, 2, 5, 6, 5}};
  CHECK(lengthOf(e8, x2) == 7);

  // Oracle: x2 is not a product of six or fewer simple reflections.
  std::set<std::vector<std::vector<int>>> ball;
  std::vector<WeylWord> frontier{WeylWord{}};
  ball.insert(actionMatrix(e8, WeylWord{}));
  for (int depth = 1; depth <= 6; ++depth) {
    std::vector<WeylWord> next;
    for (auto& w : frontier)
      for (int s = 1; s <= 8; ++s) {
        WeylWord ws = w.prepend(s);
        if (ball.insert(actionMatrix(e8, ws)).second) next.push_back(ws);
      }
    frontier = std::move(next);
  }
  CHECK(ball.count(actionMatrix(e8, x2)) == 0);
}

TEST_CASE("descent sets") {
  auto e8 = buildRootSystem(Series::E8);
  CHECK(descentSet(e8, WeylWord{}).indices.empty());

  WeylWord x2{{1, 3, 1, 2, 5, 6, 5}};
  CHECK(descentSet(e8, x2).indices == std::set<int>{1, 2, 3, 5, 6});
  CHECK(descentSet(e8, x2.prepend(4)).indices == std::set<int>{1, 4, 6});

  // subsystem mode reports the roots sent negative
  std::vector<Root> pi;
  for (int i = 1; i <= 8; ++i) pi.push_back(e8.simpleRoot(i));
  WeylWord w{{6, 2, 4, 2, 3, 5, 7}};
  DescentSet tauW = descentSet(e8, w, pi);
  for (int i : {2, 3, 5, 7}) CHECK(tauW.indices.count(i) == 1);

  // alpha_1 + alpha_2 is not a root of E8
  std::vector<Root> bad = {e8.simpleRoot(1), Root{{1, 1, 0, 0, 0, 0, 0, 0}}};
  CHECK_THROWS_AS(descentSet(e8, w, bad), std::invalid_argument);
  // a pair meeting at a positive Cartan integer is not a simple system
  std::vector<Root> bad2 = {e8.simpleRoot(1), Root{{1, 0, 1, 0, 0, 0, 0, 0}}};
  CHECK_THROWS_AS(descentSet(e8, w, bad2), std::invalid_argument);
}

TEST_CASE("star operation") {
  auto e8 = buildRootSystem(Series::E8);
  WeylWord w0{{2, 4, 6, 2, 3, 5, 7}};
  CHECK(sameElement(e8, starOp(e8, w0, 3, 4), WeylWord{{3, 2, 4, 6, 2, 3, 5, 7}}));

  WeylWord x2{{1, 3, 1, 2, 5, 6, 5}};
  WeylWord v{{4, 2, 3, 5, 4, 1, 3, 1, 2, 5, 6, 5}};
  CHECK(sameElement(e8, starOp(e8, v, 4, 5), WeylWord{{2, 3, 5, 4, 1, 3, 1, 2, 5, 6, 5}}));

  CHECK_THROWS_AS(starOp(e8, w0, 1, 2), std::domain_error);   // not adjacent
  CHECK_THROWS_AS(starOp(e8, x2, 5, 6), std::domain_error);   // L(x2) contains both

  // involution on sampled elements of D_L(s,t)
  std::mt19937 rng(7);
  int tried = 0;
  while (tried < 60) {
    WeylWord w = randomWord(rng, 8, 6);
    for (auto [s, t] : std::vector<std::pair<int, int>>{{3, 4}, {4, 5}, {2, 4}, {6, 7}}) {
      if (!inDL(e8, w, s, t)) continue;
      WeylWord sw = starOp(e8, w, s, t);
      CHECK(sameElement(e8, starOp(e8, sw, s, t), w));
      ++tried;
    }
  }
}

TEST_CASE("word action properties") {
  std::mt19937 rng(11);
  auto e7 = buildRootSystem(Series::E7);
  for (int trial = 0; trial < 60; ++trial) {
    WeylWord w = randomWord(rng, 7, 8);
    // l(w s_i) = l(w) +- 1
    int lw = lengthOf(e7, w);
    for (int i = 1; i <= 7; ++i) {
      WeylWord ws = w;
      ws.letters.push_back(i);
      int d = lengthOf(e7, ws) - lw;
      CHECK((d == 1 || d == -1));
    }
    // s in L(w) iff prepending s shortens
    DescentSet ds = descentSet(e7, w);
    for (int s = 1; s <= 7; ++s) {
      int lsw = lengthOf(e7, w.prepend(s));
      CHECK((lsw < lw) == (ds.indices.count(s) == 1));
    }
    // invariance of the inner product
    Weight mu = randomWeight(rng, 7);
    Weight wmu = applyWord(e7, w, mu);
    CHECK(weightInnerProduct(e7, wmu, wmu) == weightInnerProduct(e7, mu, mu));
  }
  // w maps Phi bijectively onto Phi (exhaustive per sampled w)
  for (int trial = 0; trial < 6; ++trial) {
    WeylWord w = randomWord(rng, 7, 9);
    std::set<std::vector<int>> images;
    for (const Root& beta : e7.positiveRoots) {
      Root img = applyWordToRoot(e7, w, beta);
      REQUIRE(e7.isRoot(img));
      images.insert(img.coeffs);
    }
    CHECK(images.size() == e7.positiveRoots.size());
  }
}
