#include "nildist/tietze.hpp"

#include <utility>

namespace nildist {

void random_nielsen_move(std::vector<Word>& gens, std::mt19937_64& rng) {
  if (gens.empty()) return;
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> kind(0, gens.size() > 1 ? 2 : 1);
  const std::size_t i = pick(rng);
  switch (kind(rng)) {
    case 0:
      gens[i] = inverse(gens[i]);
      break;
    case 1: {
      const std::size_t j = pick(rng);
      std::swap(gens[i], gens[j]);
      break;
    }
    default: {
      std::size_t j = pick(rng);
      while (j == i) j = pick(rng);
      Word factor = (rng() & 1U) ? gens[j] : inverse(gens[j]);
      Word result;
      if (rng() & 1U) {
        result = factor;
        result.insert(result.end(), gens[i].begin(), gens[i].end());
      } else {
        result = gens[i];
        result.insert(result.end(), factor.begin(), factor.end());
      }
      gens[i] = free_reduce(result);
      break;
    }
  }
}

std::vector<Word> retype_generators(std::vector<Word> gens, std::size_t moves,
                                    std::mt19937_64& rng) {
  for (std::size_t t = 0; t < moves; ++t) random_nielsen_move(gens, rng);
  return gens;
}

}  // namespace nildist
