#include <random>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "nildist/hall.hpp"
#include "nildist/integer_linear.hpp"
#include "oracles.hpp"

using namespace nildist;

namespace {

std::vector<std::vector<BigInt>> rows_of(const IntMatrix& a) {
  std::vector<std::vector<BigInt>> out;
  for (std::size_t i = 0; i < a.rows(); ++i) out.push_back(a.row(i));
  return out;
}

IntMatrix random_matrix(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  std::uniform_int_distribution<long> entry(-20, 20);
  const std::size_t r = dim(rng), c = dim(rng);
  IntMatrix a(r, c);
  // Mix in sparse and low-rank shapes alongside dense ones.
  const int shape = static_cast<int>(rng() % 3);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      if (shape == 1 && rng() % 2 == 0) continue;
      a(i, j) = entry(rng);
    }
  if (shape == 2 && r > 1) {
    for (std::size_t j = 0; j < c; ++j) a(r - 1, j) = a(0, j) * 3 - a(r - 2, j);
  }
  return a;
}

bool is_echelon(const HermiteResult& h) {
  for (std::size_t i = 0; i < h.rank; ++i) {
    const std::size_t pc = h.pivot_cols[i];
    if (h.H(i, pc) <= 0) return false;
    for (std::size_t j = 0; j < pc; ++j)
      if (h.H(i, j) != 0) return false;
    if (i > 0 && pc <= h.pivot_cols[i - 1]) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (h.H(k, pc) < 0 || h.H(k, pc) >= h.H(i, pc)) return false;
  }
  for (std::size_t i = h.rank; i < h.H.rows(); ++i)
    for (std::size_t j = 0; j < h.H.cols(); ++j)
      if (h.H(i, j) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("hermite examples") {
  auto h1 = hermite_normal_form(IntMatrix{{2, 0}});
  CHECK(h1.H == IntMatrix{{2, 0}});
  CHECK(h1.U == IntMatrix{{1}});
  CHECK(hermite_normal_form(IntMatrix{{0, 0}}).H == IntMatrix{{0, 0}});
  auto h3 = hermite_normal_form(IntMatrix{{2, 0}, {3, 0}});
  CHECK(h3.H == IntMatrix{{1, 0}, {0, 0}});
  CHECK(h3.H == h3.U * IntMatrix{{2, 0}, {3, 0}});
  CHECK(oracle::euclid_gcd(2, 3) == h3.H(0, 0));
}

TEST_CASE("smith examples") {
  auto s1 = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
  CHECK(s1.S == IntMatrix{{1, 0}, {0, 6}});
  CHECK(smith_normal_form(IntMatrix::identity(3)).S == IntMatrix::identity(3));
  auto s3 = smith_normal_form(IntMatrix{{2, 0}, {0, 0}});
  CHECK(s3.S == IntMatrix{{2, 0}, {0, 0}});
  CHECK(s3.rank == 1);
}

TEST_CASE("solve examples") {
  CHECK(solve_integer(IntMatrix{{2}}, {BigInt(4)}) == std::vector<BigInt>{2});
  CHECK_FALSE(solve_integer(IntMatrix{{2}}, {BigInt(3)}).has_value());

  // Degree-2 system of to_coordinates([a,b]) in (2,2): column = Lie expansion
  // of [b,a] over x1x1, x1x2, x2x1, x2x2; right side = the degree-2 part of
  // the Magnus image 1 + x1x2 - x2x1.
  auto p = Presentation::make(2, 2);
  auto hall = HallBasis::generate(p);
  const auto expansion = lie_expand(*hall, 2);
  IntMatrix a(4, 1);
  for (const auto& [mono, coeff] : expansion) a(mono[0] * 2 + mono[1], 0) = coeff;
  CHECK(a == IntMatrix{{0}, {-1}, {1}, {0}});
  auto x = solve_integer(a, {BigInt(0), BigInt(1), BigInt(-1), BigInt(0)});
  REQUIRE(x.has_value());
  CHECK(*x == std::vector<BigInt>{-1});
  CHECK(abs((*x)[0]) == 1);
}

TEST_CASE("determinant and rank") {
  CHECK(determinant(IntMatrix{{2, 1}, {7, 4}}) == 1);
  CHECK(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}) == -3);
  CHECK(rank(IntMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(IntMatrix(3, 0)) == 0);
}

TEST_CASE("hermite reconstruction on random matrices") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    const IntMatrix a = random_matrix(rng);
    const HermiteResult h = hermite_normal_form(a);
    CHECK(h.H == h.U * a);
    CHECK(abs(oracle::cofactor_det(rows_of(h.U))) == 1);
    CHECK(is_echelon(h));
    CHECK(h.rank == oracle::bareiss_rank(rows_of(a)));
    CHECK(rank(a) == h.rank);
  }
}

TEST_CASE("smith reconstruction on random matrices") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 200; ++t) {
    const IntMatrix a = random_matrix(rng);
    const SmithResult s = smith_normal_form(a);
    CHECK(s.S == s.U * a * s.V);
    CHECK(abs(oracle::cofactor_det(rows_of(s.U))) == 1);
    CHECK(abs(oracle::cofactor_det(rows_of(s.V))) == 1);
    CHECK(s.rank == oracle::bareiss_rank(rows_of(a)));
    for (std::size_t i = 0; i < s.S.rows(); ++i)
      for (std::size_t j = 0; j < s.S.cols(); ++j)
        if (i != j) CHECK(s.S(i, j) == 0);
    const std::size_t diag = std::min(s.S.rows(), s.S.cols());
    for (std::size_t i = 0; i + 1 < diag; ++i) {
      CHECK(s.S(i, i) >= 0);
      CHECK(divides(s.S(i, i), s.S(i + 1, i + 1)));
    }
  }
}

TEST_CASE("smith determinant gives lattice index") {
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<long> entry(-9, 9);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng() % 4;
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
    const SmithResult s = smith_normal_form(a);
    BigInt prod = 1;
    for (std::size_t i = 0; i < n; ++i) prod *= s.S(i, i);
    CHECK(abs(prod) == abs(oracle::cofactor_det(rows_of(a))));
    CHECK(determinant(a) == oracle::cofactor_det(rows_of(a)));
  }
}

TEST_CASE("solver finds planted solutions and rejects obstructions") {
  std::mt19937_64 rng(34);
  std::uniform_int_distribution<long> entry(-5, 5);
  for (int t = 0; t < 200; ++t) {
    const IntMatrix a = random_matrix(rng);
    std::vector<BigInt> x0(a.cols());
    for (auto& v : x0) v = entry(rng);
    const std::vector<BigInt> b = a * x0;
    const IntegerSolver solver(a);
    auto x = solver.solve(b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);

    // Doubling A while keeping b odd somewhere has no integral solution.
    IntMatrix twice = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) twice(i, j) = 2 * a(i, j);
    std::vector<BigInt> odd = b;
    odd[0] = 2 * odd[0] + 1;
    CHECK_FALSE(solve_integer(twice, odd).has_value());
  }
}
