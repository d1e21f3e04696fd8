#pragma once

// Noncommutative Gaussian elimination over polycyclic coordinates.
//
// A coordinate system here is any group whose elements have integer
// coordinates with respect to a polycyclic series G = G_0 > G_1 > ... > G_L = 1
// of normal subgroups with infinite cyclic factors, such that
//   * the first nonzero coordinate (the depth) of x is i iff x is in G_i \ G_{i+1},
//   * the depth-i coordinate is additive on G_i,
//   * [x, y] is strictly deeper than x whenever depth(x) <= depth(y).
// Free nilpotent groups with weight-ordered Mal'cev coordinates qualify, and
// so do direct products of two of them with the coordinates concatenated.

#include <concepts>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "nildist/bigint.hpp"
#include "nildist/error.hpp"

namespace nildist {

template <class G>
concept PolycyclicCoordinates =
    requires(const G& grp, const typename G::Element& x, const BigInt& n) {
      { grp.identity() } -> std::convertible_to<typename G::Element>;
      { grp.multiply(x, x) } -> std::convertible_to<typename G::Element>;
      { grp.inverse(x) } -> std::convertible_to<typename G::Element>;
      { grp.power(x, n) } -> std::convertible_to<typename G::Element>;
      { grp.commutator(x, x) } -> std::convertible_to<typename G::Element>;
      { grp.coordinates(x) } -> std::convertible_to<Coords>;
      { grp.length() } -> std::convertible_to<std::size_t>;
    };

template <class Element>
struct InducedEntry {
  Element element;
  Coords coords;
  std::size_t pivot = 0;
};

inline std::optional<std::size_t> depth(const Coords& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) return i;
  return std::nullopt;
}

inline constexpr std::size_t kDefaultEventCap = 1'000'000;

/// Induced sequence of the subgroup generated by `gens`: entries with
/// strictly increasing pivots, positive pivot entries, and entries at later
/// pivots reduced into [0, pivot entry). Throws CapExceeded when the sifting
/// queue processes more than `event_cap` elements.
template <PolycyclicCoordinates G>
std::vector<InducedEntry<typename G::Element>> induce(
    const G& group, const std::vector<typename G::Element>& gens,
    std::size_t event_cap = kDefaultEventCap) {
  using Element = typename G::Element;
  using Entry = InducedEntry<Element>;

  std::vector<std::optional<Entry>> slots(group.length());
  std::deque<Element> queue(gens.begin(), gens.end());

  auto install = [&](Element x, Coords cx, std::size_t d) {
    for (const auto& other : slots) {
      if (other) queue.push_back(group.commutator(x, other->element));
    }
    slots[d] = Entry{std::move(x), std::move(cx), d};
  };

  std::size_t events = 0;
  while (!queue.empty()) {
    if (++events > event_cap) {
      throw CapExceeded("induced basis exceeded " + std::to_string(event_cap) +
                        " queue events");
    }
    Element x = std::move(queue.front());
    queue.pop_front();
    Coords cx = group.coordinates(x);
    while (auto d = depth(cx)) {
      auto& slot = slots[*d];
      if (!slot) {
        if (sgn(cx[*d]) < 0) {
          x = group.inverse(x);
          cx = group.coordinates(x);
        }
        install(std::move(x), std::move(cx), *d);
        break;
      }
      const BigInt a = cx[*d];
      const BigInt b = slot->coords[*d];
      if (divides(b, a)) {
        BigInt q = a / b;
        x = group.multiply(group.power(slot->element, -q), x);
        cx = group.coordinates(x);
        continue;
      }
      // Replace the slot by an element whose pivot entry is gcd(b, a); both
      // the old entry and x then reduce to deeper elements.
      ExtendedGcd eg = extended_gcd(b, a);
      Element replacement = group.multiply(group.power(slot->element, eg.s),
                                           group.power(x, eg.t));
      Coords cr = group.coordinates(replacement);
      queue.push_back(std::move(slot->element));
      queue.push_back(std::move(x));
      slot.reset();
      install(std::move(replacement), std::move(cr), *d);
      break;
    }
  }

  std::vector<Entry> entries;
  for (auto& slot : slots)
    if (slot) entries.push_back(std::move(*slot));

  // Reduce each entry at the pivots of later entries. Right multiplication by
  // an element of depth p leaves coordinates before p untouched.
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      const std::size_t p = entries[j].pivot;
      BigInt q = floor_div(entries[i].coords[p], entries[j].coords[p]);
      if (sgn(q) == 0) continue;
      entries[i].element = group.multiply(entries[i].element,
                                          group.power(entries[j].element, -q));
      entries[i].coords = group.coordinates(entries[i].element);
    }
  }
  return entries;
}

/// Pivot reduction of `x` against an induced sequence. Returns true iff the
/// residual is the identity.
template <PolycyclicCoordinates G>
bool sift(const G& group,
          const std::vector<InducedEntry<typename G::Element>>& entries,
          typename G::Element x) {
  Coords cx = group.coordinates(x);
  std::size_t next = 0;
  while (auto d = depth(cx)) {
    while (next < entries.size() && entries[next].pivot < *d) ++next;
    if (next == entries.size() || entries[next].pivot != *d) return false;
    const auto& e = entries[next];
    if (!divides(e.coords[*d], cx[*d])) return false;
    BigInt q = cx[*d] / e.coords[*d];
    x = group.multiply(group.power(e.element, -q), x);
    cx = group.coordinates(x);
  }
  return true;
}

}  // namespace nildist
