#include "qvec.hpp"

#include <cstdlib>
#include <numeric>

namespace qrr {

namespace {

int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }

} // namespace

QVec QVec::monomial(BigInt coeff, int64_t exp) {
  QVec v;
  if (coeff != 0) {
    v.min_exp_ = exp;
    v.step_ = 0;
    v.coeffs_.push_back(std::move(coeff));
  }
  return v;
}

QVec QVec::from_sorted_terms(const std::vector<std::pair<int64_t, BigInt>>& terms) {
  QVec v;
  if (terms.empty()) return v;
  if (terms.size() == 1) return monomial(terms[0].second, terms[0].first);
  int64_t step = 0;
  for (size_t i = 1; i < terms.size(); ++i)
    step = gcd64(step, terms[i].first - terms[i - 1].first);
  v.min_exp_ = terms.front().first;
  v.step_ = step;
  v.coeffs_.assign(size_t((terms.back().first - v.min_exp_) / step) + 1, BigInt(0));
  for (const auto& [e, c] : terms) v.coeffs_[size_t((e - v.min_exp_) / step)] = c;
  v.normalize();
  return v;
}

BigInt QVec::coeff_at(int64_t exp) const {
  if (coeffs_.empty()) return 0;
  if (step_ == 0) return exp == min_exp_ ? coeffs_[0] : BigInt(0);
  int64_t off = exp - min_exp_;
  if (off < 0 || off % step_ != 0) return 0;
  int64_t i = off / step_;
  if (i >= int64_t(coeffs_.size())) return 0;
  return coeffs_[size_t(i)];
}

void QVec::normalize() {
  size_t lo = 0, hi = coeffs_.size();
  while (hi > lo && coeffs_[hi - 1] == 0) --hi;
  while (lo < hi && coeffs_[lo] == 0) ++lo;
  if (lo == hi) {
    coeffs_.clear();
    min_exp_ = 0;
    step_ = 0;
    return;
  }
  if (lo > 0 || hi < coeffs_.size()) {
    std::vector<BigInt> kept(coeffs_.begin() + lo, coeffs_.begin() + hi);
    coeffs_ = std::move(kept);
    min_exp_ += step_ * int64_t(lo);
  }
  if (coeffs_.size() == 1) step_ = 0;
}

void QVec::regrid(int64_t new_min, int64_t new_step, size_t new_len) {
  std::vector<BigInt> out(new_len);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    int64_t off = exp_at(i) - new_min;
    out[size_t(off / new_step)] = std::move(coeffs_[i]);
  }
  coeffs_ = std::move(out);
  min_exp_ = new_min;
  step_ = new_step;
}

void QVec::add_scaled_shifted(const QVec& other, int64_t shift, const BigInt& scale) {
  if (scale == 0 || other.is_zero()) return;
  if (is_zero()) {
    min_exp_ = other.min_exp_ + shift;
    step_ = other.step_;
    coeffs_.resize(other.coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = other.coeffs_[i] * scale;
    normalize();
    return;
  }
  int64_t omin = other.min_exp_ + shift;
  int64_t omax = other.max_exp() + shift;
  int64_t g = gcd64(gcd64(step_, other.step_), std::abs(min_exp_ - omin));
  int64_t nmin = std::min(min_exp_, omin);
  int64_t nmax = std::max(max_exp(), omax);
  if (g == 0) {
    // both are single terms at the same exponent
    coeffs_[0] += other.coeffs_[0] * scale;
    normalize();
    return;
  }
  size_t nlen = size_t((nmax - nmin) / g) + 1;
  if (nmin != min_exp_ || g != step_ || nlen != coeffs_.size()) {
    if (step_ == 0) step_ = g; // a singleton sits on any grid
    regrid(nmin, g, nlen);
  }
  int64_t omul = other.step_ / g; // 0 when other is a singleton
  size_t base = size_t((omin - nmin) / g);
  for (size_t j = 0; j < other.coeffs_.size(); ++j) {
    if (other.coeffs_[j] == 0) continue;
    coeffs_[base + size_t(omul) * j] += other.coeffs_[j] * scale;
  }
  normalize();
}

QVec QVec::convolve(const QVec& other) const {
  QVec out;
  if (is_zero() || other.is_zero()) return out;
  int64_t g = gcd64(step_, other.step_);
  int64_t omin = min_exp_ + other.min_exp_;
  if (g == 0) return monomial(coeffs_[0] * other.coeffs_[0], omin);
  size_t nlen = size_t((max_exp() + other.max_exp() - omin) / g) + 1;
  out.min_exp_ = omin;
  out.step_ = g;
  out.coeffs_.assign(nlen, BigInt(0));
  int64_t amul = step_ / g, bmul = other.step_ / g;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& a = coeffs_[i];
    if (a == 0) continue;
    size_t base = size_t(amul) * i;
    for (size_t j = 0; j < other.coeffs_.size(); ++j) {
      const BigInt& b = other.coeffs_[j];
      if (b == 0) continue;
      out.coeffs_[base + size_t(bmul) * j] += a * b;
    }
  }
  out.normalize();
  return out;
}

QVec QVec::exponents_scaled(int64_t k) const {
  QVec out = *this;
  out.min_exp_ *= k;
  out.step_ *= k;
  return out;
}

bool QVec::operator==(const QVec& other) const {
  if (is_zero() || other.is_zero()) return is_zero() == other.is_zero();
  if (min_exp_ != other.min_exp_ || max_exp() != other.max_exp()) return false;
  int64_t lo = min_exp_, hi = max_exp();
  for (int64_t e = lo; e <= hi; ++e) {
    // interior zeros and differing grids make indexwise comparison unreliable
    if (coeff_at(e) != other.coeff_at(e)) return false;
  }
  return true;
}

void ZSlices::add(const QVec& v, int64_t z_exp, int64_t q_shift, const BigInt& scale) {
  if (v.is_zero() || scale == 0) return;
  slices[z_exp].add_scaled_shifted(v, q_shift, scale);
}

void ZSlices::add(const ZSlices& other, int64_t z_shift, int64_t q_shift, const BigInt& scale) {
  for (const auto& [z, v] : other.slices) add(v, z + z_shift, q_shift, scale);
}

bool ZSlices::is_zero() const {
  for (const auto& [z, v] : slices)
    if (!v.is_zero()) return false;
  return true;
}

} // namespace qrr
