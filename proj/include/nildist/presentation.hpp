#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nildist {

/// Rank of gamma_k / gamma_{k+1} of the free group on m generators.
std::size_t witt_number(std::size_t m, std::size_t k);

/// Hirsch length of the free nilpotent group of rank m and class c.
std::size_t free_nilpotent_hirsch_length(std::size_t m, std::size_t c);

/// The ambient free nilpotent group G_{m,c}: generator count, class and
/// generator names, plus the layout of the truncated monomial space its
/// Magnus images live in.
///
/// Monomials are words over {0..m-1} of length <= c. They are indexed
/// globally in (degree, lexicographic) order; inside degree d a monomial is
/// its base-m value with the first letter most significant.
class Presentation {
 public:
  static constexpr std::size_t kDefaultHirschCap = 60;

  /// Throws DomainError for m < 1 or c < 1, CapExceeded when the Hirsch
  /// length of G_{m,c} exceeds `hirsch_cap`.
  Presentation(std::size_t m, std::size_t c,
               std::size_t hirsch_cap = kDefaultHirschCap);

  static std::shared_ptr<const Presentation> make(
      std::size_t m, std::size_t c, std::size_t hirsch_cap = kDefaultHirschCap) {
    return std::make_shared<const Presentation>(m, c, hirsch_cap);
  }

  std::size_t rank() const noexcept { return m_; }
  std::size_t nilpotency_class() const noexcept { return c_; }
  std::size_t hirsch_length() const noexcept { return hirsch_; }

  /// Display name of generator i: a..e when m <= 5, otherwise x1..xm.
  const std::string& name(std::size_t i) const { return names_.at(i); }

  /// Accepts canonical names x1..xm always, and a..e when m <= 5.
  std::optional<std::size_t> generator_index(std::string_view name) const;

  std::size_t monomial_count() const noexcept { return offsets_.back(); }
  std::size_t degree_offset(std::size_t d) const { return offsets_[d]; }
  std::size_t degree_size(std::size_t d) const { return powers_[d]; }
  std::size_t degree_of(std::size_t index) const { return degree_[index]; }

  /// Global index of the concatenation of the monomial with local index `li`
  /// in degree `di` and the one with local index `lj` in degree `dj`.
  std::size_t concat(std::size_t li, std::size_t di, std::size_t lj,
                     std::size_t dj) const {
    return offsets_[di + dj] + li * powers_[dj] + lj;
  }

  std::size_t monomial_index(const std::vector<std::size_t>& letters) const;
  std::vector<std::size_t> monomial_letters(std::size_t index) const;

  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.m_ == b.m_ && a.c_ == b.c_;
  }

 private:
  std::size_t m_;
  std::size_t c_;
  std::size_t hirsch_;
  std::vector<std::string> names_;
  std::vector<std::size_t> powers_;   // m^d for d = 0..c
  std::vector<std::size_t> offsets_;  // c + 2 entries, last is the total
  std::vector<std::size_t> degree_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

}  // namespace nildist
