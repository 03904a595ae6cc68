#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace charposet {

/// Z[x]/(Phi_n(x)) data for one conductor. Instances live for the whole
/// process and are shared between threads.
struct CyclotomicField {
  int n = 1;
  int phi = 1;
  /// Monic Phi_n, coefficients low to high (size phi + 1).
  std::vector<std::int64_t> modulus;
  /// zeta^k reduced to the power basis, k = 0..n-1.
  std::vector<std::vector<std::int64_t>> zeta_powers;

  /// Reduces a polynomial in place modulo Phi_n; the result occupies the
  /// first phi slots and everything above is zeroed.
  void reduce(std::span<std::int64_t> poly) const;
};

const CyclotomicField& cyclotomic_field(int n);

/// Phi_n obtained by dividing x^n - 1 by Phi_d for every proper divisor d.
std::vector<std::int64_t> cyclotomic_polynomial(int n);

/// Exact element of Z[zeta_n] in the power basis 1, zeta, ..., zeta^{phi(n)-1}.
class CycInt {
 public:
  CycInt() : CycInt(1, 0) {}
  CycInt(int n, std::int64_t value);
  CycInt(int n, std::vector<std::int64_t> coeffs);

  static CycInt zeta_pow(int n, std::int64_t k);

  int conductor() const noexcept { return n_; }
  std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  bool is_integer() const noexcept;
  /// Throws NotRationalInteger unless every non-constant coefficient is 0.
  std::int64_t as_integer() const;
  /// Coefficient-wise division; throws NotDivisible if any coefficient is not a multiple of m.
  CycInt exact_div(std::int64_t m) const;
  /// Image under zeta -> zeta^{-1}.
  CycInt conjugate() const;

  CycInt& operator+=(const CycInt& other);
  CycInt& operator-=(const CycInt& other);
  CycInt& operator*=(const CycInt& other);
  CycInt& scale(std::int64_t m);

  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }
  CycInt operator-() const;

  friend bool operator==(const CycInt&, const CycInt&) = default;
  /// Lexicographic on (conductor, coefficients); used only for canonical ordering.
  friend std::strong_ordering operator<=>(const CycInt& a, const CycInt& b);

  std::string to_string() const;

 private:
  void require_same(const CycInt& other) const;

  int n_;
  std::vector<std::int64_t> coeffs_;
};

/// Accumulates scale * a * b, unreduced, into acc (size >= 2*phi - 1).
/// Call CyclotomicField::reduce on acc once the sum is complete.
void accumulate_product(std::span<std::int64_t> acc, const CycInt& a, const CycInt& b,
                        std::int64_t scale);

}  // namespace charposet
