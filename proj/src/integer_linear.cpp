#include "nildist/integer_linear.hpp"

#include <utility>

#include "nildist/error.hpp"

namespace nildist {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> init)
    : rows_(init.size()), cols_(init.size() ? init.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : init) {
    if (r.size() != cols_) throw DomainError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<BigInt> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

void IntMatrix::append_row(const std::vector<BigInt>& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw DomainError("row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source,
                                 const BigInt& f) {
  if (sgn(f) == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    mpz_addmul((*this)(target, j).get_mpz_t(), f.get_mpz_t(),
               (*this)(source, j).get_mpz_t());
  }
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source,
                                 const BigInt& f) {
  if (sgn(f) == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    mpz_addmul((*this)(i, target).get_mpz_t(), f.get_mpz_t(),
               (*this)(i, source).get_mpz_t());
  }
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix dimension mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        mpz_addmul(out(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
    }
  return out;
}

std::vector<BigInt> operator*(const IntMatrix& a, const std::vector<BigInt>& x) {
  if (a.cols_ != x.size()) throw DomainError("matrix-vector dimension mismatch");
  std::vector<BigInt> out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      mpz_addmul(out[i].get_mpz_t(), a(i, j).get_mpz_t(), x[j].get_mpz_t());
  return out;
}

HermiteResult hermite_normal_form(const IntMatrix& a) {
  HermiteResult r;
  r.H = a;
  r.U = IntMatrix::identity(a.rows());
  IntMatrix& H = r.H;
  IntMatrix& U = r.U;
  const std::size_t rows = a.rows();
  std::size_t pivot = 0;

  for (std::size_t col = 0; col < a.cols() && pivot < rows; ++col) {
    // Euclid on the column below `pivot`, always pivoting on the entry of
    // least absolute value.
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = pivot; i < rows; ++i) {
        if (sgn(H(i, col)) == 0) continue;
        if (best == rows || cmpabs(H(i, col), H(best, col)) < 0) best = i;
      }
      if (best == rows) break;
      H.swap_rows(pivot, best);
      U.swap_rows(pivot, best);
      bool clean = true;
      for (std::size_t i = pivot + 1; i < rows; ++i) {
        if (sgn(H(i, col)) == 0) continue;
        BigInt q = floor_div(H(i, col), H(pivot, col));
        H.add_row_multiple(i, pivot, -q);
        U.add_row_multiple(i, pivot, -q);
        if (sgn(H(i, col)) != 0) clean = false;
      }
      if (clean) break;
    }
    if (sgn(H(pivot, col)) == 0) continue;
    if (sgn(H(pivot, col)) < 0) {
      H.negate_row(pivot);
      U.negate_row(pivot);
    }
    for (std::size_t i = 0; i < pivot; ++i) {
      BigInt q = floor_div(H(i, col), H(pivot, col));
      H.add_row_multiple(i, pivot, -q);
      U.add_row_multiple(i, pivot, -q);
    }
    r.pivot_cols.push_back(col);
    ++pivot;
  }
  r.rank = pivot;
  return r;
}

SmithResult smith_normal_form(const IntMatrix& a) {
  SmithResult r;
  r.S = a;
  r.U = IntMatrix::identity(a.rows());
  r.V = IntMatrix::identity(a.cols());
  IntMatrix& S = r.S;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const std::size_t diag = std::min(rows, cols);

  for (std::size_t t = 0; t < diag; ++t) {
    while (true) {
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (sgn(S(i, j)) == 0) continue;
          if (bi == rows || cmpabs(S(i, j), S(bi, bj)) < 0) {
            bi = i;
            bj = j;
          }
        }
      if (bi == rows) break;
      S.swap_rows(t, bi);
      r.U.swap_rows(t, bi);
      S.swap_cols(t, bj);
      r.V.swap_cols(t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(S(i, t)) == 0) continue;
        BigInt q = floor_div(S(i, t), S(t, t));
        S.add_row_multiple(i, t, -q);
        r.U.add_row_multiple(i, t, -q);
        if (sgn(S(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(S(t, j)) == 0) continue;
        BigInt q = floor_div(S(t, j), S(t, t));
        S.add_col_multiple(j, t, -q);
        r.V.add_col_multiple(j, t, -q);
        if (sgn(S(t, j)) != 0) clean = false;
      }
      if (!clean) continue;

      // Row and column t are clear; enforce divisibility of the rest.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!divides(S(t, t), S(i, j))) {
            S.add_row_multiple(t, i, 1);
            r.U.add_row_multiple(t, i, 1);
            divisible = false;
            break;
          }
        }
      if (divisible) break;
    }
    if (sgn(S(t, t)) == 0) break;
    if (sgn(S(t, t)) < 0) {
      S.negate_row(t);
      r.U.negate_row(t);
    }
    r.rank = t + 1;
  }
  return r;
}

std::size_t rank(const IntMatrix& a) { return hermite_normal_form(a).rank; }

BigInt determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t s = k + 1;
      while (s < n && sgn(m(s, k)) == 0) ++s;
      if (s == n) return 0;
      m.swap_rows(k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntegerSolver::IntegerSolver(const IntMatrix& a)
    : rows_(a.rows()), cols_(a.cols()), hnf_(hermite_normal_form(a.transpose())) {}

std::optional<std::vector<BigInt>> IntegerSolver::solve(
    const std::vector<BigInt>& b) const {
  if (b.size() != rows_) throw DomainError("right-hand side length mismatch");
  const IntMatrix& H = hnf_.H;  // cols_ x rows_
  std::vector<BigInt> y(cols_);
  for (std::size_t r = 0; r < hnf_.rank; ++r) {
    const std::size_t p = hnf_.pivot_cols[r];
    BigInt s = b[p];
    for (std::size_t q = 0; q < r; ++q) {
      mpz_submul(s.get_mpz_t(), H(q, p).get_mpz_t(), y[q].get_mpz_t());
    }
    if (!divides(H(r, p), s)) return std::nullopt;
    mpz_divexact(y[r].get_mpz_t(), s.get_mpz_t(), H(r, p).get_mpz_t());
  }
  for (std::size_t j = 0; j < rows_; ++j) {
    BigInt s = 0;
    for (std::size_t r = 0; r < hnf_.rank; ++r) {
      mpz_addmul(s.get_mpz_t(), H(r, j).get_mpz_t(), y[r].get_mpz_t());
    }
    if (s != b[j]) return std::nullopt;
  }
  std::vector<BigInt> x(cols_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t r = 0; r < hnf_.rank; ++r)
      mpz_addmul(x[j].get_mpz_t(), hnf_.U(r, j).get_mpz_t(), y[r].get_mpz_t());
  return x;
}

std::optional<std::vector<BigInt>> solve_integer(const IntMatrix& a,
                                                 const std::vector<BigInt>& b) {
  return IntegerSolver(a).solve(b);
}

}  // namespace nildist
