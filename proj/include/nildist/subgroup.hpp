#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nildist/bigint.hpp"
#include "nildist/group_element.hpp"
#include "nildist/hall.hpp"
#include "nildist/induced_basis.hpp"
#include "nildist/word.hpp"

namespace nildist {

/// Weight-ordered Mal'cev coordinates of G_{m,c}.
class FreeNilpotentCoordinates {
 public:
  using Element = GroupElement;

  explicit FreeNilpotentCoordinates(HallBasisPtr hall) : hall_(std::move(hall)) {}

  const HallBasisPtr& hall() const { return hall_; }

  Element identity() const { return GroupElement(hall_->presentation_ptr()); }
  Element multiply(const Element& x, const Element& y) const { return nildist::multiply(x, y); }
  Element inverse(const Element& x) const { return nildist::inverse(x); }
  Element power(const Element& x, const BigInt& n) const { return nildist::power(x, n); }
  Element commutator(const Element& x, const Element& y) const {
    return nildist::commutator(x, y);
  }
  Coords coordinates(const Element& x) const { return hall_->to_coordinates(x); }
  std::size_t length() const { return hall_->size(); }

 private:
  HallBasisPtr hall_;
};

/// Pairs (r(h), h) in D x F, coordinatized with the D block first. The
/// subgroup of pairs over H has the entries of depth >= |D| spanning
/// {1} x (H ∩ ker r).
class GraphCoordinates {
 public:
  struct Element {
    GroupElement image;
    GroupElement source;
  };

  GraphCoordinates(HallBasisPtr image, HallBasisPtr source)
      : image_(std::move(image)), source_(std::move(source)) {}

  std::size_t image_length() const { return image_->size(); }

  Element identity() const {
    return {GroupElement(image_->presentation_ptr()),
            GroupElement(source_->presentation_ptr())};
  }
  Element multiply(const Element& x, const Element& y) const {
    return {nildist::multiply(x.image, y.image), nildist::multiply(x.source, y.source)};
  }
  Element inverse(const Element& x) const {
    return {nildist::inverse(x.image), nildist::inverse(x.source)};
  }
  Element power(const Element& x, const BigInt& n) const {
    return {nildist::power(x.image, n), nildist::power(x.source, n)};
  }
  Element commutator(const Element& x, const Element& y) const {
    return {nildist::commutator(x.image, y.image),
            nildist::commutator(x.source, y.source)};
  }
  Coords coordinates(const Element& x) const;
  std::size_t length() const { return image_->size() + source_->size(); }

 private:
  HallBasisPtr image_;
  HallBasisPtr source_;
};

/// Induced sequence of a subgroup of G_{m,c}; see induce().
class SubgroupStandardBasis {
 public:
  using Entry = InducedEntry<GroupElement>;

  SubgroupStandardBasis(HallBasisPtr hall, std::vector<Entry> entries)
      : hall_(std::move(hall)), entries_(std::move(entries)) {}

  const HallBasisPtr& hall() const { return hall_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t hirsch_length() const { return entries_.size(); }

  bool member(const GroupElement& g) const;

  /// Membership from precomputed coordinates; rejects without any group
  /// arithmetic when the leading coordinate has no matching pivot.
  bool member_coords(const Coords& v) const;

  /// Entry index whose pivot is `p`, if any.
  std::optional<std::size_t> entry_at(std::size_t pivot) const;

 private:
  HallBasisPtr hall_;
  std::vector<Entry> entries_;
};

SubgroupStandardBasis induced_basis(const std::vector<GroupElement>& gens,
                                    const HallBasisPtr& hall,
                                    std::size_t event_cap = kDefaultEventCap);
SubgroupStandardBasis induced_basis(const std::vector<Word>& gens,
                                    const HallBasisPtr& hall,
                                    std::size_t event_cap = kDefaultEventCap);

inline bool member(const SubgroupStandardBasis& basis, const GroupElement& g) {
  return basis.member(g);
}

inline std::size_t hirsch_length(const SubgroupStandardBasis& basis) {
  return basis.hirsch_length();
}

/// A power of a subgroup generator inside a word over the generators.
struct GeneratorPower {
  std::size_t generator = 0;
  BigInt exponent;
};
using SubgroupWord = std::vector<GeneratorPower>;

/// Free generators b_1..b_k of HF'/F' realized as words in the input
/// generators, plus the ambient generators completing them to a basis of
/// F/F' up to finite index.
struct AbelianizedBasis {
  std::size_t k = 0;
  std::vector<SubgroupWord> b_words;
  std::vector<std::vector<BigInt>> b_images;  // rows of the exponent-sum HNF
  std::vector<std::size_t> completion;        // ambient indices, ascending
};

AbelianizedBasis abelianized_basis(const std::vector<Word>& gens,
                                   const Presentation& p);

/// Element of F named by a subgroup word.
GroupElement evaluate(const SubgroupWord& w, const std::vector<Word>& gens,
                      const PresentationPtr& p);

std::string format(const SubgroupWord& w);

/// r : F -> D fixing the kept generators and killing the others.
struct Retraction {
  std::vector<std::size_t> kept;
  std::vector<std::size_t> killed;
  PresentationPtr target;  // (|kept|, c)
};

/// Throws DomainError when k = 0.
Retraction build_retraction(const AbelianizedBasis& ab, const Presentation& p);

/// Image in D of a word of F. D is indexed by position in `kept`.
GroupElement apply_retraction(const Retraction& r, const Word& w);

/// Image in D of an element of F: set the killed x_j to zero.
GroupElement apply_retraction(const Retraction& r, const GroupElement& g);

/// Weight of u, the exponent d with distortion of <u> equivalent to n^d.
/// Throws DomainError for trivial u.
std::size_t cyclic_distortion_exponent(const Word& u, const PresentationPtr& p);

enum class Verdict { Undistorted, Distorted, Trivial };

std::string to_string(Verdict v);

struct KernelWitness {
  GroupElement element;
  Coords coords;
  std::size_t weight = 0;
  std::string word;  // normal form
};

struct RetractWitness {
  Retraction retraction;
  std::vector<std::string> hn_generators;  // H's generators plus killed letters
  std::vector<std::string> hn_basis;       // normal forms of the HN induced basis
  std::size_t hirsch_hn = 0;
};

struct DistortionReport {
  Verdict verdict = Verdict::Trivial;
  std::size_t k = 0;
  std::size_t hirsch_H = 0;
  std::size_t hirsch_rH = 0;
  std::size_t hirsch_F = 0;
  bool finite_index = false;
  bool normal = false;
  std::optional<std::size_t> cyclic_exponent;
  std::optional<KernelWitness> kernel_witness;
  std::optional<RetractWitness> retract_witness;
  std::size_t hirsch_kernel = 0;  // Hirsch length of H ∩ N when computed
};

struct AnalysisOptions {
  std::size_t event_cap = kDefaultEventCap;
};

/// Undistorted iff H is a retract of a finite-index subgroup, decided as
/// H ∩ N = {1} for N = ker r through Hirsch lengths.
DistortionReport decide_undistorted(const std::vector<Word>& gens,
                                    const HallBasisPtr& hall,
                                    const AnalysisOptions& options = {});

}  // namespace nildist
