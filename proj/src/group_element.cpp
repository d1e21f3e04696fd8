#include "nildist/group_element.hpp"

#include "nildist/error.hpp"

namespace nildist {

namespace {

// Truncated product of two coefficient vectors over the layout of `p`.
std::vector<BigInt> poly_mul(const Presentation& p, const std::vector<BigInt>& a,
                             const std::vector<BigInt>& b) {
  const std::size_t c = p.nilpotency_class();
  std::vector<BigInt> out(p.monomial_count());
  for (std::size_t da = 0; da <= c; ++da) {
    const std::size_t oa = p.degree_offset(da);
    for (std::size_t la = 0; la < p.degree_size(da); ++la) {
      const BigInt& ca = a[oa + la];
      if (sgn(ca) == 0) continue;
      for (std::size_t db = 0; da + db <= c; ++db) {
        const std::size_t ob = p.degree_offset(db);
        for (std::size_t lb = 0; lb < p.degree_size(db); ++lb) {
          const BigInt& cb = b[ob + lb];
          if (sgn(cb) == 0) continue;
          BigInt& target = out[p.concat(la, da, lb, db)];
          mpz_addmul(target.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        }
      }
    }
  }
  return out;
}

void check_same(const GroupElement& g, const GroupElement& h) {
  if (!(g.presentation() == h.presentation())) {
    throw DomainError("group elements belong to different presentations");
  }
}

}  // namespace

GroupElement::GroupElement(PresentationPtr p)
    : pres_(std::move(p)), coeffs_(pres_->monomial_count()) {
  coeffs_[0] = 1;
}

GroupElement GroupElement::generator(PresentationPtr p, std::size_t g,
                                     int sign) {
  if (g >= p->rank()) throw DomainError("generator index out of range");
  GroupElement e(std::move(p));
  e.multiply_letter(g, sign);
  return e;
}

BigInt GroupElement::coefficient(const Monomial& m) const {
  return coeffs_[pres_->monomial_index(m)];
}

std::vector<std::pair<Monomial, BigInt>> GroupElement::terms() const {
  std::vector<std::pair<Monomial, BigInt>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) out.emplace_back(pres_->monomial_letters(i), coeffs_[i]);
  }
  return out;
}

bool GroupElement::is_identity() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return false;
  }
  return true;
}

void GroupElement::multiply_letter(std::size_t g, int sign) {
  const Presentation& p = *pres_;
  const std::size_t c = p.nilpotency_class();
  const std::size_t m = p.rank();
  if (sign > 0) {
    // new[u x_g] = old[u x_g] + old[u]; walk degrees downward so that the
    // source degree is still unmodified.
    for (std::size_t d = c; d-- > 0;) {
      const std::size_t src = p.degree_offset(d);
      const std::size_t dst = p.degree_offset(d + 1);
      for (std::size_t l = 0; l < p.degree_size(d); ++l) {
        if (sgn(coeffs_[src + l]) == 0) continue;
        coeffs_[dst + l * m + g] += coeffs_[src + l];
      }
    }
  } else {
    // Solve new * (1 + x_g) = old: new[u x_g] = old[u x_g] - new[u],
    // upward so the source degree is already final.
    for (std::size_t d = 0; d < c; ++d) {
      const std::size_t src = p.degree_offset(d);
      const std::size_t dst = p.degree_offset(d + 1);
      for (std::size_t l = 0; l < p.degree_size(d); ++l) {
        if (sgn(coeffs_[src + l]) == 0) continue;
        coeffs_[dst + l * m + g] -= coeffs_[src + l];
      }
    }
  }
}

GroupElement from_polynomial(PresentationPtr p, std::vector<BigInt> coeffs) {
  if (coeffs.size() != p->monomial_count() || coeffs[0] != 1) {
    throw DomainError("not the Magnus image of a group element");
  }
  GroupElement e(std::move(p));
  e.coeffs_ = std::move(coeffs);
  return e;
}

GroupElement embed(const Word& w, PresentationPtr p) {
  GroupElement e(std::move(p));
  for (const Letter& l : w) {
    if (l.generator >= e.presentation().rank()) {
      throw DomainError("letter out of range for presentation");
    }
    e.multiply_letter(l.generator, l.sign);
  }
  return e;
}

GroupElement evaluate(const WordExpr& e, PresentationPtr p) {
  using Kind = WordExpr::Kind;
  switch (e.kind) {
    case Kind::Generator:
      return GroupElement::generator(p, e.generator);
    case Kind::Inverse:
      return inverse(evaluate(e.children[0], p));
    case Kind::Power:
      return power(evaluate(e.children[0], p),
                   BigInt(static_cast<long>(e.exponent)));
    case Kind::Product: {
      GroupElement acc(p);
      for (const auto& child : e.children) acc = multiply(acc, evaluate(child, p));
      return acc;
    }
    case Kind::Commutator:
      return commutator(evaluate(e.children[0], p), evaluate(e.children[1], p));
  }
  throw InternalInconsistency("unknown expression kind");
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
  check_same(g, h);
  GroupElement out(g.pres_);
  out.coeffs_ = poly_mul(*g.pres_, g.coeffs_, h.coeffs_);
  return out;
}

GroupElement inverse(const GroupElement& g) {
  // (1 + u)^-1 = sum_k (-u)^k, k <= c.
  const Presentation& p = *g.pres_;
  std::vector<BigInt> neg_u(g.coeffs_.size());
  for (std::size_t i = 1; i < neg_u.size(); ++i) neg_u[i] = -g.coeffs_[i];
  std::vector<BigInt> term = neg_u;
  std::vector<BigInt> sum = neg_u;
  sum[0] = 1;
  for (std::size_t k = 2; k <= p.nilpotency_class(); ++k) {
    term = poly_mul(p, term, neg_u);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += term[i];
  }
  GroupElement out(g.pres_);
  out.coeffs_ = std::move(sum);
  return out;
}

GroupElement commutator(const GroupElement& g, const GroupElement& h) {
  return multiply(multiply(inverse(g), inverse(h)), multiply(g, h));
}

GroupElement power(const GroupElement& g, const BigInt& n) {
  const Presentation& p = *g.pres_;
  std::vector<BigInt> u = g.coeffs_;
  u[0] = 0;
  std::vector<BigInt> sum(u.size());
  sum[0] = 1;
  std::vector<BigInt> term = u;
  BigInt binom = n;  // binom(n, k) for the current k
  for (std::size_t k = 1; k <= p.nilpotency_class(); ++k) {
    if (sgn(binom) == 0) break;
    if (k > 1) {
      term = poly_mul(p, term, u);
      binom *= n - static_cast<unsigned long>(k - 1);
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), k);
    }
    for (std::size_t i = 0; i < sum.size(); ++i) {
      if (sgn(term[i]) == 0) continue;
      mpz_addmul(sum[i].get_mpz_t(), binom.get_mpz_t(), term[i].get_mpz_t());
    }
  }
  GroupElement out(g.pres_);
  out.coeffs_ = std::move(sum);
  return out;
}

std::optional<std::size_t> weight(const GroupElement& g) {
  const auto& coeffs = g.coefficients();
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    if (sgn(coeffs[i]) != 0) return g.presentation().degree_of(i);
  }
  return std::nullopt;
}

}  // namespace nildist
