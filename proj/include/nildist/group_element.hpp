#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nildist/bigint.hpp"
#include "nildist/presentation.hpp"
#include "nildist/word.hpp"

namespace nildist {

using Monomial = std::vector<std::size_t>;

/// Element of G_{m,c} as its Magnus image: a noncommutative integer
/// polynomial in x_1..x_m truncated above total degree c, with constant
/// term 1. Generator a_i maps to 1 + x_i.
///
/// Coefficients are stored densely over the presentation's monomial layout,
/// so iteration is always in (degree, lexicographic) order.
class GroupElement {
 public:
  /// The identity of `p`.
  explicit GroupElement(PresentationPtr p);

  static GroupElement generator(PresentationPtr p, std::size_t g, int sign = 1);

  const Presentation& presentation() const { return *pres_; }
  const PresentationPtr& presentation_ptr() const { return pres_; }

  const BigInt& coefficient(std::size_t index) const { return coeffs_[index]; }
  BigInt coefficient(const Monomial& m) const;
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  /// Nonzero terms in canonical order, the constant term included.
  std::vector<std::pair<Monomial, BigInt>> terms() const;

  bool is_identity() const;

  /// In-place right multiplication by a_g^sign.
  void multiply_letter(std::size_t g, int sign);

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return *a.pres_ == *b.pres_ && a.coeffs_ == b.coeffs_;
  }

 private:
  friend GroupElement multiply(const GroupElement&, const GroupElement&);
  friend GroupElement inverse(const GroupElement&);
  friend GroupElement power(const GroupElement&, const BigInt&);
  friend GroupElement from_polynomial(PresentationPtr, std::vector<BigInt>);

  PresentationPtr pres_;
  std::vector<BigInt> coeffs_;
};

/// Builds an element from raw coefficients; the constant term must be 1.
GroupElement from_polynomial(PresentationPtr p, std::vector<BigInt> coeffs);

GroupElement embed(const Word& w, PresentationPtr p);

/// Evaluates an expression tree without spelling out powers.
GroupElement evaluate(const WordExpr& e, PresentationPtr p);

GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

/// g^-1 h^-1 g h.
GroupElement commutator(const GroupElement& g, const GroupElement& h);

/// Any integer exponent; g^n = sum_k binom(n, k) (g - 1)^k, k <= c.
GroupElement power(const GroupElement& g, const BigInt& n);

/// Largest k with g in gamma_k, i.e. the lowest degree carrying a nonzero
/// coefficient of g - 1. Empty for the identity (infinite weight).
std::optional<std::size_t> weight(const GroupElement& g);

inline GroupElement operator*(const GroupElement& g, const GroupElement& h) {
  return multiply(g, h);
}

}  // namespace nildist
