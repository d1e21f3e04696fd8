#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nildist/presentation.hpp"

namespace nildist {

/// A generator or its inverse.
struct Letter {
  std::size_t generator = 0;
  int sign = 1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Free-group spelling; the empty word is the identity. Not necessarily
/// freely reduced.
using Word = std::vector<Letter>;

/// Expression tree for group words.
struct WordExpr {
  enum class Kind { Generator, Inverse, Power, Product, Commutator };

  Kind kind = Kind::Product;
  std::size_t generator = 0;       // Generator
  std::int64_t exponent = 0;       // Power
  std::vector<WordExpr> children;  // Inverse: 1, Power: 1, Commutator: 2

  static WordExpr gen(std::size_t g);
  static WordExpr inverse(WordExpr e);
  static WordExpr power(WordExpr e, std::int64_t n);
  static WordExpr product(std::vector<WordExpr> factors = {});
  static WordExpr commutator(WordExpr left, WordExpr right);

  friend bool operator==(const WordExpr&, const WordExpr&) = default;
};

/// Parses
///   expr   := factor*
///   factor := atom ("^" int)?
///   atom   := name | "1" | "(" expr ")" | "[" expr ("," expr)+ "]"
/// Whitespace is ignored. `[u,v,w]` means `[u,[v,w]]`. An expression with a
/// single factor is returned as that factor. Throws ParseError.
WordExpr parse(std::string_view text, const Presentation& p);

/// Commutators expand as x^-1 y^-1 x y. No free reduction.
Word flatten(const WordExpr& e);

/// Run-length spelling such as "a^2 b^-1"; "1" for the empty word.
std::string format(const Word& w, const Presentation& p);

/// Cancels adjacent inverse pairs.
Word free_reduce(const Word& w);

Word inverse(const Word& w);

}  // namespace nildist
