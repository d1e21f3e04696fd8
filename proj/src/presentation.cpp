#include "nildist/presentation.hpp"

#include <limits>

#include "nildist/bigint.hpp"
#include "nildist/error.hpp"

namespace nildist {

namespace {

int mobius(std::size_t n) {
  int result = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

BigInt witt_big(std::size_t m, std::size_t k) {
  BigInt sum = 0;
  for (std::size_t d = 1; d <= k; ++d) {
    if (k % d != 0) continue;
    int mu = mobius(d);
    if (mu == 0) continue;
    BigInt term;
    mpz_ui_pow_ui(term.get_mpz_t(), m, k / d);
    sum += mu * term;
  }
  return sum / static_cast<unsigned long>(k);
}

}  // namespace

std::size_t witt_number(std::size_t m, std::size_t k) {
  if (k == 0) return 0;
  BigInt w = witt_big(m, k);
  if (!mpz_fits_ulong_p(w.get_mpz_t())) {
    throw CapExceeded("Witt number W(" + std::to_string(m) + "," +
                      std::to_string(k) + ") does not fit a machine word");
  }
  return w.get_ui();
}

std::size_t free_nilpotent_hirsch_length(std::size_t m, std::size_t c) {
  BigInt total = 0;
  for (std::size_t k = 1; k <= c; ++k) total += witt_big(m, k);
  if (!mpz_fits_ulong_p(total.get_mpz_t())) {
    throw CapExceeded("Hirsch length does not fit a machine word");
  }
  return total.get_ui();
}

Presentation::Presentation(std::size_t m, std::size_t c, std::size_t hirsch_cap)
    : m_(m), c_(c) {
  if (m < 1) throw DomainError("generator count must be at least 1");
  if (c < 1) throw DomainError("nilpotency class must be at least 1");
  hirsch_ = free_nilpotent_hirsch_length(m, c);
  if (hirsch_ > hirsch_cap) {
    throw CapExceeded("Hirsch length " + std::to_string(hirsch_) + " of G(" +
                      std::to_string(m) + "," + std::to_string(c) +
                      ") exceeds cap " + std::to_string(hirsch_cap));
  }

  names_.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    names_.push_back(m <= 5 ? std::string(1, static_cast<char>('a' + i))
                            : "x" + std::to_string(i + 1));
  }

  powers_.assign(c + 1, 1);
  offsets_.assign(c + 2, 0);
  for (std::size_t d = 0; d <= c; ++d) {
    if (d > 0) powers_[d] = powers_[d - 1] * m;
    offsets_[d + 1] = offsets_[d] + powers_[d];
  }
  degree_.resize(offsets_.back());
  for (std::size_t d = 0; d <= c; ++d) {
    for (std::size_t i = offsets_[d]; i < offsets_[d + 1]; ++i) degree_[i] = d;
  }
}

std::optional<std::size_t> Presentation::generator_index(
    std::string_view name) const {
  if (name.size() >= 2 && name[0] == 'x') {
    std::size_t value = 0;
    for (char ch : name.substr(1)) {
      if (ch < '0' || ch > '9') return std::nullopt;
      if (value > m_) return std::nullopt;
      value = value * 10 + static_cast<std::size_t>(ch - '0');
    }
    if (name[1] == '0' || value < 1 || value > m_) return std::nullopt;
    return value - 1;
  }
  if (m_ <= 5 && name.size() == 1 && name[0] >= 'a' &&
      static_cast<std::size_t>(name[0] - 'a') < m_) {
    return static_cast<std::size_t>(name[0] - 'a');
  }
  return std::nullopt;
}

std::size_t Presentation::monomial_index(
    const std::vector<std::size_t>& letters) const {
  if (letters.size() > c_) throw DomainError("monomial longer than class");
  std::size_t local = 0;
  for (std::size_t g : letters) {
    if (g >= m_) throw DomainError("monomial letter out of range");
    local = local * m_ + g;
  }
  return offsets_[letters.size()] + local;
}

std::vector<std::size_t> Presentation::monomial_letters(
    std::size_t index) const {
  std::size_t d = degree_.at(index);
  std::size_t local = index - offsets_[d];
  std::vector<std::size_t> letters(d);
  for (std::size_t i = d; i-- > 0;) {
    letters[i] = local % m_;
    local /= m_;
  }
  return letters;
}

}  // namespace nildist
