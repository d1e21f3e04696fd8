#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "nildist/word.hpp"

namespace nildist {

/// One random Nielsen move on a generating set: swap two generators, invert
/// one, or multiply one by another (or its inverse) on either side. The
/// generated subgroup is unchanged.
void random_nielsen_move(std::vector<Word>& gens, std::mt19937_64& rng);

/// Applies `moves` random Nielsen moves.
std::vector<Word> retype_generators(std::vector<Word> gens, std::size_t moves,
                                    std::mt19937_64& rng);

}  // namespace nildist
