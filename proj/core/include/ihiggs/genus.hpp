#ifndef IHIGGS_GENUS_HPP
#define IHIGGS_GENUS_HPP

#include <compare>

#include "ihiggs/errors.hpp"

namespace ihiggs {

// Genus of the base curve; always >= 2.
class Genus {
 public:
  explicit Genus(long g) : g_(g) {
    if (g < 2) throw InvalidGenus(g);
  }

  long value() const noexcept { return g_; }

  // Frequently used derived exponents.
  long two_g() const noexcept { return 2 * g_; }
  // Complex dimension of the moduli space; also the degree of IP_t(M) is 6g-6.
  long moduli_dim() const noexcept { return 6 * g_ - 6; }
  // Complex dimension of the incidence variety I_{2g-3}.
  long incidence_dim() const noexcept { return 4 * g_ - 7; }

  friend auto operator<=>(const Genus&, const Genus&) = default;

 private:
  long g_;
};

}  // namespace ihiggs

#endif  // IHIGGS_GENUS_HPP
