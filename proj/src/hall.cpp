#include "nildist/hall.hpp"

#include "nildist/error.hpp"

namespace nildist {

namespace {

// Product of homogeneous polynomials of degrees da and db, dense over local
// indices.
std::vector<BigInt> homogeneous_mul(const Presentation& p,
                                    const std::vector<BigInt>& a, std::size_t da,
                                    const std::vector<BigInt>& b,
                                    std::size_t db) {
  std::vector<BigInt> out(p.degree_size(da + db));
  const std::size_t shift = p.degree_size(db);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      mpz_addmul(out[i * shift + j].get_mpz_t(), a[i].get_mpz_t(),
                 b[j].get_mpz_t());
    }
  }
  return out;
}

}  // namespace

HallBasis::HallBasis(PresentationPtr p) : pres_(std::move(p)) {
  const Presentation& pres = *pres_;
  const std::size_t m = pres.rank();
  const std::size_t c = pres.nilpotency_class();
  weight_begin_.assign(c + 2, 0);

  for (std::size_t g = 0; g < m; ++g) {
    BasicCommutator b{.index = g,
                      .weight = 1,
                      .bracket = std::nullopt,
                      .generator = g,
                      .lie = std::vector<BigInt>(m),
                      .element = GroupElement::generator(pres_, g)};
    b.lie[g] = 1;
    basis_.push_back(std::move(b));
  }
  weight_begin_[1] = 0;
  weight_begin_[2] = basis_.size();

  for (std::size_t w = 2; w <= c; ++w) {
    const std::size_t before = basis_.size();
    for (std::size_t u = 0; u < before; ++u) {
      for (std::size_t v = 0; v < u; ++v) {
        if (basis_[u].weight + basis_[v].weight != w) continue;
        // Hall condition: if u = [s, t] then t <= v.
        if (basis_[u].bracket && basis_[u].bracket->second > v) continue;
        const BasicCommutator& bu = basis_[u];
        const BasicCommutator& bv = basis_[v];
        std::vector<BigInt> lie =
            homogeneous_mul(pres, bu.lie, bu.weight, bv.lie, bv.weight);
        std::vector<BigInt> rev =
            homogeneous_mul(pres, bv.lie, bv.weight, bu.lie, bu.weight);
        for (std::size_t i = 0; i < lie.size(); ++i) lie[i] -= rev[i];
        BasicCommutator b{.index = basis_.size(),
                          .weight = w,
                          .bracket = std::make_pair(u, v),
                          .generator = 0,
                          .lie = std::move(lie),
                          .element = commutator(bu.element, bv.element)};
        basis_.push_back(std::move(b));
      }
    }
    weight_begin_[w + 1] = basis_.size();
  }

  if (basis_.size() != pres.hirsch_length()) {
    throw InternalInconsistency("Hall basis size differs from Witt count");
  }

  solvers_.resize(c + 1);
  for (std::size_t w = 1; w <= c; ++w) {
    auto [lo, hi] = weight_range(w);
    IntMatrix a(pres.degree_size(w), hi - lo);
    for (std::size_t j = lo; j < hi; ++j)
      for (std::size_t i = 0; i < a.rows(); ++i) a(i, j - lo) = basis_[j].lie[i];
    solvers_[w] = IntegerSolver(a);
  }
}

std::string HallBasis::label(std::size_t i) const {
  const BasicCommutator& b = basis_.at(i);
  if (!b.bracket) return pres_->name(b.generator);
  return "[" + label(b.bracket->first) + "," + label(b.bracket->second) + "]";
}

std::string HallBasis::power_label(std::size_t i, const BigInt& e) const {
  const BasicCommutator& b = basis_.at(i);
  std::string base;
  BigInt shown = e;
  if (b.bracket && sgn(e) < 0) {
    base = "[" + label(b.bracket->second) + "," + label(b.bracket->first) + "]";
    shown = -e;
  } else {
    base = label(i);
  }
  if (shown == 1) return base;
  return base + "^" + shown.get_str();
}

std::string HallBasis::normal_form(const Coords& v) const {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    if (!out.empty()) out += ' ';
    out += power_label(i, v[i]);
  }
  return out.empty() ? "1" : out;
}

Coords HallBasis::to_coordinates(const GroupElement& g) const {
  if (!(g.presentation() == *pres_)) {
    throw DomainError("element from a different presentation");
  }
  const Presentation& pres = *pres_;
  Coords coords(basis_.size());
  GroupElement residual = g;
  for (std::size_t w = 1; w <= pres.nilpotency_class(); ++w) {
    const std::size_t off = pres.degree_offset(w);
    std::vector<BigInt> rhs(pres.degree_size(w));
    bool zero = true;
    for (std::size_t i = 0; i < rhs.size(); ++i) {
      rhs[i] = residual.coefficient(off + i);
      if (sgn(rhs[i]) != 0) zero = false;
    }
    if (zero) continue;
    auto solution = solvers_[w].solve(rhs);
    if (!solution) {
      throw InternalInconsistency("weight-" + std::to_string(w) +
                                  " layer is not an integral Lie combination");
    }
    auto [lo, hi] = weight_range(w);
    // residual <- (prod_j b_j^e_j)^-1 * residual
    GroupElement layer_inverse(pres_);
    for (std::size_t j = hi; j-- > lo;) {
      const BigInt& e = (*solution)[j - lo];
      coords[j] = e;
      if (sgn(e) == 0) continue;
      layer_inverse = multiply(layer_inverse, power(basis_[j].element, -e));
    }
    residual = multiply(layer_inverse, residual);
  }
  if (!residual.is_identity()) {
    throw InternalInconsistency("nontrivial residual after peeling all weights");
  }
  return coords;
}

GroupElement HallBasis::from_coordinates(const Coords& v) const {
  if (v.size() != basis_.size()) throw DomainError("coordinate length mismatch");
  GroupElement out(pres_);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    out = multiply(out, power(basis_[i].element, v[i]));
  }
  return out;
}

std::vector<std::pair<Monomial, BigInt>> lie_expand(const HallBasis& basis,
                                                    std::size_t i) {
  const BasicCommutator& b = basis[i];
  const Presentation& p = basis.presentation();
  std::vector<std::pair<Monomial, BigInt>> out;
  for (std::size_t l = 0; l < b.lie.size(); ++l) {
    if (sgn(b.lie[l]) == 0) continue;
    out.emplace_back(p.monomial_letters(p.degree_offset(b.weight) + l), b.lie[l]);
  }
  return out;
}

}  // namespace nildist
