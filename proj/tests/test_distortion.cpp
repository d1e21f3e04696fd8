#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "nildist/distortion.hpp"
#include "nildist/error.hpp"
#include "oracles.hpp"

using namespace nildist;
using testing_support::W;
using testing_support::Ws;

namespace {

DistortionTable table_of(const std::vector<long>& deltas) {
  DistortionTable t;
  for (std::size_t i = 0; i < deltas.size(); ++i)
    t.rows.push_back({i + 1, BigInt(deltas[i]), true});
  t.requested_radius = deltas.size();
  return t;
}

}  // namespace

TEST_CASE("ball size examples") {
  auto p22 = Presentation::make(2, 2);
  auto h22 = HallBasis::generate(p22);
  const auto std22 = standard_generators(*p22);
  CHECK(enumerate_ball(h22, std22, 0).size() == 1);
  CHECK(enumerate_ball(h22, std22, 2).size() == 17);

  auto p11 = Presentation::make(1, 1);
  auto h11 = HallBasis::generate(p11);
  CHECK(enumerate_ball(h11, Ws({"a"}, p11), 5).size() == 11);
  CHECK_THROWS_AS(enumerate_ball(h22, {}, 2), DomainError);
}

TEST_CASE("ball sizes match the matrix model") {
  auto p = Presentation::make(2, 2);
  auto hall = HallBasis::generate(p);
  const auto ball = enumerate_ball(hall, standard_generators(*p), 6);
  const auto words = oracle::all_products({Word{{0, 1}}, Word{{1, 1}}}, 6);
  std::map<oracle::Heis, std::size_t> dist;
  for (const Word& w : words) {
    auto [it, fresh] = dist.emplace(oracle::heis_word(w), w.size());
    if (!fresh) it->second = std::min(it->second, w.size());
  }
  CHECK(ball.size() == dist.size());
  for (const auto& [h, len] : dist) {
    const auto xyz = oracle::heis_collect(h);
    const std::size_t* found = ball.find(BallKey{xyz[0], xyz[1], xyz[2]});
    REQUIRE(found != nullptr);
    CHECK(*found == len);
  }
}

TEST_CASE("ball growth is roughly quartic") {
  auto p = Presentation::make(2, 2);
  auto hall = HallBasis::generate(p);
  const double small = static_cast<double>(enumerate_ball(hall, standard_generators(*p), 4).size());
  const double large = static_cast<double>(enumerate_ball(hall, standard_generators(*p), 8).size());
  CHECK(large / small >= 8.0);
  CHECK(large / small <= 32.0);
}

TEST_CASE("parallel and serial balls agree") {
  for (auto [m, c, r] : {std::tuple<std::size_t, std::size_t, std::size_t>{2, 2, 7}, {2, 3, 6}, {3, 2, 4}}) {
    auto p = Presentation::make(m, c);
    auto hall = HallBasis::generate(p);
    const auto gens = standard_generators(*p);
    const auto reference = enumerate_ball_serial(hall, gens, r);
    CHECK(enumerate_ball(hall, gens, r, {kDefaultMaxElements, true}) == reference);
    CHECK(enumerate_ball(hall, gens, r, {kDefaultMaxElements, false}) == reference);
  }
}

TEST_CASE("ball layers are sorted and consistent") {
  auto p = Presentation::make(2, 3);
  auto hall = HallBasis::generate(p);
  const auto ball = enumerate_ball(hall, standard_generators(*p), 5);
  CHECK(ball.layers.size() == 6);
  std::size_t total = 0;
  for (std::size_t n = 0; n < ball.layers.size(); ++n) {
    CHECK(std::is_sorted(ball.layers[n].begin(), ball.layers[n].end()));
    for (const auto& k : ball.layers[n]) CHECK(*ball.find(k) == n);
    total += ball.layers[n].size();
  }
  CHECK(total == ball.size());
  CHECK(*ball.find(BallKey(hall->size(), 0)) == 0);
}

TEST_CASE("element cap") {
  auto p = Presentation::make(2, 2);
  auto hall = HallBasis::generate(p);
  CHECK_THROWS_AS(enumerate_ball(hall, standard_generators(*p), 10, {50, true}), CapExceeded);
  CHECK_THROWS_AS(enumerate_ball_serial(hall, standard_generators(*p), 10, 50), CapExceeded);
  BallBuilder b(hall, cayley_steps(standard_generators(*p), p), 17);
  CHECK(b.grow());
  CHECK(b.grow());
  CHECK_FALSE(b.grow());
  CHECK(b.index().radius == 2);
}

TEST_CASE("BFS lengths satisfy the triangle inequality") {
  std::mt19937_64 rng(61);
  auto p = Presentation::make(2, 3);
  auto hall = HallBasis::generate(p);
  const auto ball = enumerate_ball(hall, standard_generators(*p), 6);
  std::vector<BallKey> keys;
  for (const auto& layer : ball.layers)
    for (const auto& k : layer) keys.push_back(k);
  std::size_t checked = 0;
  for (int t = 0; t < 2000; ++t) {
    const BallKey& x = keys[rng() % keys.size()];
    const BallKey& y = keys[rng() % keys.size()];
    const GroupElement g = hall->from_coordinates(from_key(x));
    const GroupElement h = hall->from_coordinates(from_key(y));
    const std::size_t* gh = ball.find(to_key(hall->to_coordinates(g * h)));
    if (!gh) continue;
    CHECK(*gh <= *ball.find(x) + *ball.find(y));
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("classify_members agrees between modes") {
  auto p = Presentation::make(2, 3);
  auto hall = HallBasis::generate(p);
  const auto ball = enumerate_ball(hall, standard_generators(*p), 5);
  const auto h = induced_basis(Ws({"a^2", "[a,b]"}, p), hall);
  std::vector<BallKey> keys;
  for (const auto& layer : ball.layers)
    for (const auto& k : layer) keys.push_back(k);
  const auto par = classify_members(h, keys, true);
  CHECK(par == classify_members(h, keys, false));
  for (std::size_t i = 0; i < keys.size(); i += 7)
    CHECK(static_cast<bool>(par[i]) == h.member(hall->from_coordinates(from_key(keys[i]))));
}

TEST_CASE("distortion of the central cyclic subgroup") {
  auto p = Presentation::make(2, 2);
  auto hall = HallBasis::generate(p);
  const auto t = measure_distortion(Ws({"[a,b]"}, p), hall, 12);
  REQUIRE(t.rows.size() == 12);
  CHECK(t.complete);
  CHECK(t.rows[2].delta == 0);
  CHECK(t.rows[3].delta == 1);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    CHECK(t.rows[i].n == i + 1);
    CHECK(t.rows[i].exact);
    if (i > 0) CHECK(t.rows[i].delta >= t.rows[i - 1].delta);
  }
  const double slope = estimate_exponent(t);
  CHECK(slope >= 1.6);
  CHECK(slope <= 2.4);
}

TEST_CASE("delta matches the matrix-model oracle for the center") {
  // Delta(n) = max |k| over central [b,a]^k reachable by words of length <= n.
  const std::size_t radius = 8;
  std::map<oracle::Heis, std::size_t> dist;
  for (const Word& w : oracle::all_products({Word{{0, 1}}, Word{{1, 1}}}, radius)) {
    auto [it, fresh] = dist.emplace(oracle::heis_word(w), w.size());
    if (!fresh) it->second = std::min(it->second, w.size());
  }
  auto p = Presentation::make(2, 2);
  const auto t = measure_distortion(Ws({"[a,b]"}, p), HallBasis::generate(p), radius);
  for (std::size_t n = 1; n <= radius; ++n) {
    std::int64_t best = 0;
    for (const auto& [h, len] : dist)
      if (h.p == 0 && h.q == 0 && len <= n) best = std::max(best, std::abs(h.r));
    CHECK(t.rows[n - 1].delta == best);
  }
}

TEST_CASE("whole group has linear distortion") {
  for (auto [m, c] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}}) {
    auto p = Presentation::make(m, c);
    const auto t = measure_distortion(standard_generators(*p), HallBasis::generate(p), 5);
    for (const auto& row : t.rows) {
      CHECK(row.delta == static_cast<long>(row.n));
      CHECK(row.exact);
    }
  }
}

TEST_CASE("non-cyclic subgroup measurement") {
  auto p = Presentation::make(2, 2);
  auto hall = HallBasis::generate(p);
  const auto t = measure_distortion(Ws({"a", "[a,b]"}, p), hall, 8);
  REQUIRE(t.rows.size() == 8);
  for (std::size_t i = 1; i < t.rows.size(); ++i) CHECK(t.rows[i].delta >= t.rows[i - 1].delta);
  CHECK(t.rows[0].delta == 1);
  CHECK(t.rows[3].delta >= 2);
}

TEST_CASE("measured slopes track the cyclic exponent") {
  auto p = Presentation::make(2, 2);
  auto hall = HallBasis::generate(p);
  // a^2[a,b]^3 has Delta(n) close to (n - 4) / 2, so it needs a wider window.
  for (auto [u, radius] : {std::pair<std::string, std::size_t>{"[a,b]", 12},
                           {"a", 12}, {"a b", 12}, {"a^2[a,b]^3", 24}}) {
    const auto gens = Ws({u}, p);
    const double slope = estimate_exponent(measure_distortion(gens, hall, radius));
    const double d = static_cast<double>(cyclic_distortion_exponent(gens[0], p));
    CHECK_MESSAGE(std::abs(slope - d) <= 0.4, u);
  }
}

TEST_CASE("incomplete tables are flagged") {
  auto p = Presentation::make(2, 2);
  MeasureOptions opts;
  opts.max_elements = 100;
  const auto t = measure_distortion(Ws({"[a,b]"}, p), HallBasis::generate(p), 12, opts);
  CHECK_FALSE(t.complete);
  CHECK(t.rows.size() < 12);
  CHECK(t.requested_radius == 12);
}

TEST_CASE("exponent estimation") {
  std::vector<long> lin, quad;
  for (long n = 1; n <= 12; ++n) {
    lin.push_back(n);
    quad.push_back(n * n);
  }
  CHECK(estimate_exponent(table_of(lin)) == doctest::Approx(1.0));
  CHECK(estimate_exponent(table_of(quad)) == doctest::Approx(2.0));
  CHECK_THROWS_AS(estimate_exponent(table_of({0, 0, 1, 1, 2})), DomainError);
}

TEST_CASE("csv output") {
  DistortionTable t = table_of({0, 1});
  t.rows[1].exact = false;
  CHECK(to_csv(t) == "n,delta,exact\n1,0,true\n2,1,false\n");
}

TEST_CASE("keys round-trip and overflow loudly") {
  Coords v{BigInt(3), BigInt(-7), BigInt(0)};
  CHECK(from_key(to_key(v)) == v);
  Coords huge{BigInt("123456789012345678901234567890")};
  CHECK_THROWS_AS(to_key(huge), CapExceeded);
}
