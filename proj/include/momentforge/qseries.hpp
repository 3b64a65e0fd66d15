#ifndef MOMENTFORGE_QSERIES_HPP
#define MOMENTFORGE_QSERIES_HPP

#include <cstdint>
#include <string>
#include <variant>

#include "momentforge/arith.hpp"

namespace momentforge {

/* Isomorphism class of a finite simple module or group, reduced to the only
 * data the surjection counts depend on: the size h of the endomorphism field
 * (abelian) or the automorphism count (non-abelian). */
class SimpleType {
public:
  struct Abelian {
    std::uint64_t h;
    friend bool operator==(const Abelian&, const Abelian&) = default;
  };
  struct NonAbelian {
    std::uint64_t aut_count;
    friend bool operator==(const NonAbelian&, const NonAbelian&) = default;
  };

  /// Throws InputError unless h is a prime power.
  static SimpleType abelian(std::uint64_t h);
  /// Throws InputError when aut_count == 0.
  static SimpleType non_abelian(std::uint64_t aut_count);

  bool is_abelian() const { return std::holds_alternative<Abelian>(kind_); }
  std::uint64_t h() const;
  std::uint64_t aut_count() const;

  std::string describe() const;

  friend bool operator==(const SimpleType&, const SimpleType&) = default;

private:
  explicit SimpleType(std::variant<Abelian, NonAbelian> kind) : kind_(kind) {}
  std::variant<Abelian, NonAbelian> kind_;
};

/// (h-1)(h^2-1)...(h^k-1); 1 for k = 0.
Integer q_pochhammer(std::uint64_t h, unsigned k);

/// Gaussian binomial (e choose k)_h; 0 when k > e.
Integer q_binomial(unsigned e, unsigned k, std::uint64_t h);

/* Coefficients c_k of the alternating inversion series:
 *   abelian      c_k = (-1)^k / ((h-1)...(h^k-1))
 *   non-abelian  c_k = (-1)^k / (k! |Aut|^k)
 * c_0 = 1 in both cases. */
Rational inversion_coefficient(const SimpleType& t, unsigned k);

} // namespace momentforge

#endif // MOMENTFORGE_QSERIES_HPP
