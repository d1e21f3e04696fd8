#pragma once

#include <string>
#include <vector>

#include "nildist/group_element.hpp"
#include "nildist/hall.hpp"
#include "nildist/presentation.hpp"
#include "nildist/word.hpp"

namespace testing_support {

inline nildist::Word W(const std::string& text, const nildist::PresentationPtr& p) {
  return nildist::flatten(nildist::parse(text, *p));
}

inline nildist::GroupElement E(const std::string& text,
                               const nildist::PresentationPtr& p) {
  return nildist::embed(W(text, p), p);
}

inline std::vector<nildist::Word> Ws(const std::vector<std::string>& texts,
                                     const nildist::PresentationPtr& p) {
  std::vector<nildist::Word> out;
  for (const auto& t : texts) out.push_back(W(t, p));
  return out;
}

inline nildist::Coords C(std::initializer_list<long> v) {
  nildist::Coords out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace testing_support

#include <map>
#include <set>

#include "nildist/subgroup.hpp"
#include "oracles.hpp"

namespace testing_support {

/// Number of elements of the radius-`radius` ambient ball on which member()
/// disagrees with the closure of the generators. The closure is a
/// breadth-first enumeration of generator products, deduplicated by Magnus
/// image, run to depth at least `min_depth` and then onward until every ball
/// element member() accepts has been reached (or the caps stop it).
inline std::size_t membership_disagreements(const std::vector<nildist::Word>& gens,
                                            const nildist::HallBasisPtr& hall,
                                            std::size_t radius = 3,
                                            std::size_t min_depth = 4,
                                            std::size_t max_depth = 64,
                                            std::size_t max_elements = 4'000'000) {
  using Key = std::vector<long>;
  const auto& p = hall->presentation_ptr();
  auto key = [](const nildist::GroupElement& g) {
    Key k;
    for (const auto& c : g.coefficients()) k.push_back(c.get_si());
    return k;
  };

  std::vector<nildist::Word> letters;
  for (std::size_t g = 0; g < p->rank(); ++g) letters.push_back({{g, 1}});
  const auto basis = nildist::induced_basis(gens, hall);
  std::map<Key, bool> ball;  // key -> member()
  std::size_t accepted = 0;
  for (const auto& w : oracle::all_products(letters, radius)) {
    const nildist::GroupElement g = nildist::embed(w, p);
    auto [it, fresh] = ball.emplace(key(g), false);
    if (!fresh) continue;
    it->second = basis.member(g);
    accepted += it->second ? 1 : 0;
  }

  std::vector<nildist::GroupElement> steps;
  for (const auto& w : gens) {
    steps.push_back(nildist::embed(w, p));
    steps.push_back(nildist::embed(nildist::inverse(w), p));
  }
  std::set<Key> closure{key(nildist::GroupElement(p))};
  std::vector<nildist::GroupElement> frontier{nildist::GroupElement(p)};
  std::size_t reached = 0;
  auto note = [&](const Key& k) {
    auto it = ball.find(k);
    if (it != ball.end() && it->second) ++reached;
  };
  note(*closure.begin());
  for (std::size_t depth = 1; depth <= max_depth && !frontier.empty(); ++depth) {
    if (depth > min_depth && reached == accepted) break;
    if (closure.size() > max_elements) break;
    std::vector<nildist::GroupElement> next;
    for (const auto& x : frontier)
      for (const auto& s : steps) {
        nildist::GroupElement y = x * s;
        Key k = key(y);
        if (closure.insert(k).second) {
          note(k);
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }

  std::size_t bad = 0;
  for (const auto& [k, mem] : ball)
    if (mem != (closure.count(k) > 0)) ++bad;
  return bad;
}

/// 1 or 2 random generators of length 1..4.
inline std::vector<nildist::Word> random_gens(std::mt19937_64& rng, std::size_t m,
                                              std::size_t max_count = 2,
                                              std::size_t max_len = 4) {
  std::vector<nildist::Word> gens(1 + rng() % max_count);
  for (auto& g : gens) g = oracle::random_word(rng, m, max_len, 1);
  return gens;
}

}  // namespace testing_support
