#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "bigint.hpp"

namespace qrr {

// Dense Laurent polynomial in q alone, stored on the exponent grid
// min_exp + step*i. Base-q^2 objects (Gaussian binomials in q^2 and their
// products) keep step 2, which halves their stored length; operations on
// mixed grids fall back to the gcd grid.
//
// Invariants: empty coefficients <=> zero polynomial; a single stored
// coefficient has step 0; otherwise step >= 1 and the first and last
// stored coefficients are nonzero (interior zeros are allowed).
class QVec {
public:
  QVec() = default;

  static QVec monomial(BigInt coeff, int64_t exp);
  static QVec one() { return monomial(1, 0); }
  // terms must be strictly ascending in exponent
  static QVec from_sorted_terms(const std::vector<std::pair<int64_t, BigInt>>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  int64_t min_exp() const { return min_exp_; }
  int64_t max_exp() const { return min_exp_ + step_ * int64_t(coeffs_.size() - 1); }
  int64_t step() const { return step_; }
  size_t stored_size() const { return coeffs_.size(); }

  int64_t exp_at(size_t i) const { return min_exp_ + step_ * int64_t(i); }
  const BigInt& stored(size_t i) const { return coeffs_[i]; }
  BigInt coeff_at(int64_t exp) const;

  // this += scale * q^shift * other
  void add_scaled_shifted(const QVec& other, int64_t shift, const BigInt& scale);
  void add(const QVec& other) { add_scaled_shifted(other, 0, 1); }

  QVec convolve(const QVec& other) const;

  // q -> q^k (exponents multiplied by k); k >= 1
  QVec exponents_scaled(int64_t k) const;

  bool operator==(const QVec& other) const;

private:
  void normalize();
  void regrid(int64_t new_min, int64_t new_step, size_t new_len);

  int64_t min_exp_ = 0;
  int64_t step_ = 0;
  std::vector<BigInt> coeffs_;
};

// z-exponent -> q-polynomial working form for two-variable values that are
// accumulated from many shifted dense pieces. Converted to a sparse
// LaurentPolynomial at module boundaries.
struct ZSlices {
  std::map<int64_t, QVec> slices;

  void add(const QVec& v, int64_t z_exp, int64_t q_shift, const BigInt& scale);
  void add(const ZSlices& other, int64_t z_shift, int64_t q_shift, const BigInt& scale);
  bool is_zero() const;
};

} // namespace qrr
