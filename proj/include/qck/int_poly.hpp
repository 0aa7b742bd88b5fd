#pragma once

// Dense integer-coefficient polynomial kernels behind the rational types.
// Nothing here knows about Laurent shifts or rational content; callers keep
// those separately.

#include "qck/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qck::detail {

// c[0] + c[1] q + ... ; trimmed so the last stored coefficient is nonzero.
// The zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t exponent);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  const Integer& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Integer>& coeffs() const { return c_; }
  const Integer& leading() const { return c_.back(); }
  std::size_t nonzero_count() const;

  // Index of the lowest nonzero coefficient (0 for the zero polynomial).
  std::size_t low_order() const;
  IntPoly shifted_down(std::size_t k) const;
  IntPoly shifted_up(std::size_t k) const;

  // gcd of the coefficients, nonnegative.
  Integer content() const;
  void divide_exact_by(const Integer& d);
  void negate();

  Integer evaluate(const Integer& x) const;
  Rational evaluate(const Rational& x) const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();
  std::vector<Integer> c_;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly pow(const IntPoly& base, unsigned long exponent);

// Product of all factors, multiplied along a balanced tree so the large
// multiplications happen between operands of similar size.
IntPoly product(std::vector<IntPoly> factors);

// acc += scale * q^shift * x, growing acc as needed (acc is not trimmed).
void add_scaled(std::vector<Integer>& acc, const IntPoly& x, const Integer& scale,
                std::size_t shift = 0);

// Exact quotient over Z, or nullopt when divisor does not divide dividend.
// For a primitive divisor this is also the verdict over Q (Gauss's lemma).
std::optional<IntPoly> divide_exact(const IntPoly& dividend, const IntPoly& divisor);

// Primitive gcd with positive leading coefficient; contents are ignored.
// Tries the heuristic integer-evaluation gcd first and falls back to a
// primitive remainder sequence.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

// Arithmetic modulo the Mersenne prime 2^61 - 1, used as a quick
// non-divisibility filter before attempting exact division.
inline constexpr std::uint64_t kFilterPrime = (1ULL << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e);
std::uint64_t to_residue(const Integer& x);
std::vector<std::uint64_t> residues(const IntPoly& p);

// The divisor is known to divide q^period - fold_constant. Returns false
// only when divisor certainly does not divide the polynomial whose residues
// are given; true means "possibly divisible".
bool maybe_divisible(std::span<const std::uint64_t> poly_residues, const IntPoly& divisor,
                     std::size_t period, const Rational& fold_constant);

}  // namespace qck::detail
