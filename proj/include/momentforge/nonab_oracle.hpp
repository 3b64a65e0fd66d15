#ifndef MOMENTFORGE_NONAB_ORACLE_HPP
#define MOMENTFORGE_NONAB_ORACLE_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "momentforge/arith.hpp"

namespace momentforge {

/// Even permutation of {0,..,4}, i.e. an element of A5.
struct Perm5 {
  std::array<std::uint8_t, 5> images{0, 1, 2, 3, 4};

  /// InputError unless `images` is an even permutation.
  static Perm5 from_images(std::array<std::uint8_t, 5> images);

  /// (a * b)(i) = a(b(i))
  friend Perm5 operator*(const Perm5& a, const Perm5& b);
  friend bool operator==(const Perm5&, const Perm5&) = default;
  bool is_identity() const { return *this == Perm5{}; }
};

/// The 60 elements of A5 in lexicographic order of images.
const std::vector<Perm5>& a5_elements();

/* |Hom(A5, A5^k)|, counting image pairs (x, y) in A5^k with
 * x^5 = y^2 = (xy)^3 = 1. k <= 2; ResourceError beyond. */
Integer hom_a5_count(unsigned k);

/* Sur(A5^e, A5^k) by enumeration: homomorphisms out of A5^e are e-tuples of
 * homomorphisms out of A5 with pairwise commuting images; surjectivity is
 * tested by the size of the generated subgroup. e, k <= 2. */
Integer sur_a5_bruteforce(unsigned e, unsigned k);

} // namespace momentforge

#endif // MOMENTFORGE_NONAB_ORACLE_HPP
