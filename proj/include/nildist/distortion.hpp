#pragma once

// Cayley-ball enumeration and empirical distortion functions.
//
// Each data-parallel kernel comes in two flavours: the OpenMP one used by
// default and a serial reference (`parallel = false`, or the *_serial entry
// points) that the tests compare it against.

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "nildist/bigint.hpp"
#include "nildist/group_element.hpp"
#include "nildist/hall.hpp"
#include "nildist/subgroup.hpp"
#include "nildist/word.hpp"

namespace nildist {

/// Mal'cev coordinates narrowed to machine integers, used as hash keys.
using BallKey = std::vector<std::int64_t>;

struct BallKeyHash {
  std::size_t operator()(const BallKey& k) const noexcept;
};

/// Throws CapExceeded if a coordinate does not fit in 64 bits.
BallKey to_key(const Coords& v);
Coords from_key(const BallKey& k);

/// Word-metric ball around the identity. `layers[n]` holds the elements at
/// distance exactly n, sorted.
struct BallIndex {
  std::size_t radius = 0;
  std::unordered_map<BallKey, std::size_t, BallKeyHash> length;
  std::vector<std::vector<BallKey>> layers;

  std::size_t size() const { return length.size(); }
  const std::size_t* find(const BallKey& k) const {
    auto it = length.find(k);
    return it == length.end() ? nullptr : &it->second;
  }

  friend bool operator==(const BallIndex& a, const BallIndex& b) {
    return a.radius == b.radius && a.layers == b.layers && a.length == b.length;
  }
};

inline constexpr std::size_t kDefaultMaxElements = 5'000'000;

/// Breadth-first growth of a ball one layer at a time over `steps` (the
/// generators and their inverses).
class BallBuilder {
 public:
  BallBuilder(HallBasisPtr hall, std::vector<GroupElement> steps,
              std::size_t max_elements = kDefaultMaxElements,
              bool parallel = true);

  /// Adds the next layer. Returns false, leaving the index unchanged, when the
  /// new layer would push the element count past the cap.
  bool grow();

  const BallIndex& index() const { return index_; }
  BallIndex release() { return std::move(index_); }

 private:
  HallBasisPtr hall_;
  std::vector<GroupElement> steps_;
  std::size_t max_elements_;
  bool parallel_;
  BallIndex index_;
  std::vector<GroupElement> frontier_;  // aligned with index_.layers.back()
};

/// Steps for the Cayley graph on `gens` and their inverses.
std::vector<GroupElement> cayley_steps(const std::vector<Word>& gens,
                                       const PresentationPtr& p);

/// Standard generators a_1..a_m of the ambient group.
std::vector<Word> standard_generators(const Presentation& p);

struct BallOptions {
  std::size_t max_elements = kDefaultMaxElements;
  bool parallel = true;
};

/// Throws DomainError for empty `gens`, CapExceeded past the element cap.
BallIndex enumerate_ball(const HallBasisPtr& hall, const std::vector<Word>& gens,
                         std::size_t radius, const BallOptions& options = {});

/// Queue-based reference BFS.
BallIndex enumerate_ball_serial(const HallBasisPtr& hall,
                                const std::vector<Word>& gens, std::size_t radius,
                                std::size_t max_elements = kDefaultMaxElements);

/// Membership of every key, in order.
std::vector<char> classify_members(const SubgroupStandardBasis& basis,
                                   const std::vector<BallKey>& keys,
                                   bool parallel = true);

struct DistortionRow {
  std::size_t n = 0;
  BigInt delta;
  bool exact = true;  // false: delta is a lower bound
};

struct DistortionTable {
  std::vector<DistortionRow> rows;  // n = 1..radius reached
  std::size_t requested_radius = 0;
  bool complete = true;  // false when a cap stopped the ambient ball early
};

struct MeasureOptions {
  std::size_t max_elements = kDefaultMaxElements;
  std::size_t event_cap = kDefaultEventCap;
  bool parallel = true;
};

/// Delta(n) = max |h|_H over h in H with |h|_F <= n, for n = 1..radius.
/// H-lengths come from the exponent for a single generator and from a
/// second BFS over the generators otherwise.
DistortionTable measure_distortion(const std::vector<Word>& gens,
                                   const HallBasisPtr& hall, std::size_t radius,
                                   const MeasureOptions& options = {});

/// Least-squares slope of log Delta against log n over the larger half of
/// the radii with Delta > 0. Throws DomainError with fewer than 4 such rows.
double estimate_exponent(const DistortionTable& t);

/// "n,delta,exact" header followed by one row per radius.
std::string to_csv(const DistortionTable& t);

}  // namespace nildist
