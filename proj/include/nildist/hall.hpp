#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nildist/bigint.hpp"
#include "nildist/group_element.hpp"
#include "nildist/integer_linear.hpp"
#include "nildist/presentation.hpp"

namespace nildist {

/// One entry of a Hall basis: a generator, or the bracket [left, right] of
/// two earlier entries with left > right.
struct BasicCommutator {
  std::size_t index = 0;
  std::size_t weight = 1;
  std::optional<std::pair<std::size_t, std::size_t>> bracket;
  std::size_t generator = 0;  // meaningful when bracket is empty

  /// Homogeneous Lie expansion, dense over the degree-`weight` monomials
  /// (local indices within that degree).
  std::vector<BigInt> lie;

  /// Magnus image of the group commutator g^-1 h^-1 g h built recursively.
  GroupElement element;
};

/// Classical Hall set of basic commutators of weight <= c, ordered by weight
/// and then by construction order. Every element of G_{m,c} has a unique
/// normal form b_1^e_1 ... b_L^e_L in this order (Mal'cev coordinates).
///
/// Immutable after construction; share it through HallBasisPtr.
class HallBasis {
 public:
  explicit HallBasis(PresentationPtr p);

  static std::shared_ptr<const HallBasis> generate(PresentationPtr p) {
    return std::make_shared<const HallBasis>(std::move(p));
  }

  const Presentation& presentation() const { return *pres_; }
  const PresentationPtr& presentation_ptr() const { return pres_; }

  std::size_t size() const noexcept { return basis_.size(); }
  const BasicCommutator& operator[](std::size_t i) const { return basis_[i]; }
  auto begin() const { return basis_.begin(); }
  auto end() const { return basis_.end(); }

  /// Half-open index range of the weight-w entries.
  std::pair<std::size_t, std::size_t> weight_range(std::size_t w) const {
    return {weight_begin_[w], weight_begin_[w + 1]};
  }

  /// Bracket spelling with explicit binary nesting, e.g. "[[b,a],a]".
  std::string label(std::size_t i) const;

  /// Spelling of b_i^e. A bracket with negative exponent is shown flipped,
  /// [u,v]^-e = [v,u]^e.
  std::string power_label(std::size_t i, const BigInt& e) const;

  /// Normal form as a parseable word, "1" for the zero vector.
  std::string normal_form(const Coords& v) const;

  /// Throws InternalInconsistency if peeling fails, which means an engine bug.
  Coords to_coordinates(const GroupElement& g) const;

  GroupElement from_coordinates(const Coords& v) const;

 private:
  PresentationPtr pres_;
  std::vector<BasicCommutator> basis_;
  std::vector<std::size_t> weight_begin_;  // c + 2 entries
  std::vector<IntegerSolver> solvers_;     // per weight, index 0 unused
};

using HallBasisPtr = std::shared_ptr<const HallBasis>;

/// Recursive [u, v] -> uv - vu expansion of a basis entry.
std::vector<std::pair<Monomial, BigInt>> lie_expand(const HallBasis& basis,
                                                    std::size_t i);

inline Coords to_coordinates(const HallBasis& basis, const GroupElement& g) {
  return basis.to_coordinates(g);
}

inline GroupElement from_coordinates(const HallBasis& basis, const Coords& v) {
  return basis.from_coordinates(v);
}

}  // namespace nildist
