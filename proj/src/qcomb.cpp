#include "qcomb.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace qrr {

namespace {

const QVec kZero{};

// Pascal rows [A, B]_q for B <= A/2; the upper half is served through the
// symmetry [A, B] = [A, A-B]. Rows are immutable once published, so readers
// may keep references across later growth.
class PascalTable {
public:
  const QVec& get(int64_t a, int64_t b) {
    if (b < 0 || a < 0 || b > a) return kZero;
    if (b > a - b) b = a - b;
    {
      std::shared_lock lock(mu_);
      if (size_t(a) < rows_.size()) return rows_[size_t(a)][size_t(b)];
    }
    ensure(a);
    std::shared_lock lock(mu_);
    return rows_[size_t(a)][size_t(b)];
  }

  void ensure(int64_t a) {
    std::unique_lock lock(mu_);
    while (int64_t(rows_.size()) <= a) {
      int64_t n = int64_t(rows_.size());
      std::vector<QVec> row(size_t(n / 2) + 1);
      if (n == 0) {
        row[0] = QVec::one();
      } else {
        auto prev = [&](int64_t b) -> const QVec& {
          if (b < 0 || b > n - 1) return kZero;
          if (b > n - 1 - b) b = n - 1 - b;
          return rows_[size_t(n - 1)][size_t(b)];
        };
        row[0] = QVec::one();
        for (int64_t b = 1; b <= n / 2; ++b) {
          // [n, b] = [n-1, b] + q^{n-b} [n-1, b-1]
          QVec v = prev(b);
          v.add_scaled_shifted(prev(b - 1), n - b, 1);
          row[size_t(b)] = std::move(v);
        }
      }
      rows_.push_back(std::move(row));
    }
  }

private:
  std::deque<std::vector<QVec>> rows_;
  mutable std::shared_mutex mu_;
};

PascalTable& pascal() {
  static PascalTable table;
  return table;
}

// T0 rows keyed by (L, |A|)
class TrinomialTable {
public:
  const QVec& get(int64_t L, int64_t A) {
    if (L < 0) return kZero;
    if (A < 0) A = -A;
    if (A > L) return kZero;
    {
      std::shared_lock lock(mu_);
      if (size_t(L) < rows_.size()) return rows_[size_t(L)][size_t(A)];
    }
    ensure(L);
    std::shared_lock lock(mu_);
    return rows_[size_t(L)][size_t(A)];
  }

private:
  void ensure(int64_t L) {
    std::unique_lock lock(mu_);
    while (int64_t(rows_.size()) <= L) {
      int64_t n = int64_t(rows_.size());
      std::vector<QVec> row(size_t(n) + 1);
      for (int64_t A = 0; A <= n; ++A) {
        QVec acc;
        for (int64_t r = 0; r <= n; ++r) {
          const QVec& outer = pascal().get(n, r);
          const QVec& inner = pascal().get(2 * n - 2 * r, n - A - r);
          if (outer.is_zero() || inner.is_zero()) continue;
          QVec term = outer.exponents_scaled(2).convolve(inner);
          acc.add_scaled_shifted(term, 0, (r % 2 == 0) ? 1 : -1);
        }
        row[size_t(A)] = std::move(acc);
      }
      rows_.push_back(std::move(row));
    }
  }

  std::deque<std::vector<QVec>> rows_;
  mutable std::shared_mutex mu_;
};

TrinomialTable& trinomials() {
  static TrinomialTable table;
  return table;
}

void check_base_step(int64_t k) {
  if (k <= 0) throw std::invalid_argument("base step must be positive");
}

LaurentPolynomial qvec_to_poly(const QVec& v) {
  ZSlices s;
  s.add(v, 0, 0, 1);
  return to_polynomial(s);
}

} // namespace

const QVec& gaussian_binomial_q(int64_t a, int64_t b) { return pascal().get(a, b); }

QVec gaussian_binomial_vec(int64_t a, int64_t b, int64_t k) {
  check_base_step(k);
  const QVec& base = pascal().get(a, b);
  return k == 1 ? base : base.exponents_scaled(k);
}

QVec gaussian_binomial_star_vec(int64_t a, int64_t b, int64_t k) {
  check_base_step(k);
  if (a == -1 && b == 0) return QVec::one();
  return gaussian_binomial_vec(a, b, k);
}

LaurentPolynomial gaussian_binomial(const QBinomialArgs& args) {
  return qvec_to_poly(gaussian_binomial_vec(args.a, args.b, args.base_step));
}

LaurentPolynomial gaussian_binomial_star(const QBinomialArgs& args) {
  return qvec_to_poly(gaussian_binomial_star_vec(args.a, args.b, args.base_step));
}

LaurentPolynomial rising_q_factorial(int64_t a_z, int64_t a_q, int64_t j, int64_t k) {
  check_base_step(k);
  if (j < 0) throw std::invalid_argument("rising_q_factorial: j must be nonnegative");
  LaurentPolynomial out = LaurentPolynomial::constant(1);
  for (int64_t i = 0; i < j; ++i) {
    LaurentPolynomial factor = LaurentPolynomial::constant(1);
    factor.add_term(ExponentVector::zq(a_z, a_q + k * i), -1);
    out = out * factor;
  }
  return out;
}

LaurentPolynomial pochhammer_expansion_qbt1(int64_t a_z, int64_t a_q, int64_t j, int64_t k) {
  check_base_step(k);
  if (j < 0) throw std::invalid_argument("pochhammer_expansion_qbt1: j must be nonnegative");
  ZSlices acc;
  for (int64_t h = 0; h <= j; ++h) {
    const QVec v = gaussian_binomial_vec(j, h, k);
    if (v.is_zero()) continue;
    // (-1)^h t^h q^{k h(h-1)/2} with t = z^{a_z} q^{a_q}
    acc.add(v, h * a_z, h * a_q + k * h * (h - 1) / 2, (h % 2 == 0) ? 1 : -1);
  }
  return to_polynomial(acc);
}

LaurentPolynomial inverse_pochhammer_coefficient(int64_t h, int64_t j, int64_t k) {
  check_base_step(k);
  if (h < 0 || j < 0)
    throw std::invalid_argument("inverse_pochhammer_coefficient: h, j must be nonnegative");
  return gaussian_binomial_star({h + j - 1, h, k});
}

const QVec& trinomial_t0_vec(int64_t L, int64_t A) { return trinomials().get(L, A); }

LaurentPolynomial trinomial_t0(int64_t L, int64_t A) {
  return qvec_to_poly(trinomial_t0_vec(L, A));
}

LaurentPolynomial andrews_z_binomial(int64_t a, int64_t b, int64_t zeta_z, int64_t zeta_q) {
  if (b < 0) return LaurentPolynomial(2);
  if (b == 0 || b == a) return LaurentPolynomial::constant(1);
  if (b < a) {
    ZSlices acc;
    for (int64_t h = 0; h <= b; ++h) {
      const QVec& v = gaussian_binomial_q(a - b + h - 1, h);
      acc.add(v, h * zeta_z, h * zeta_q, 1);
    }
    return to_polynomial(acc);
  }
  // B > A: (zeta q^{A-B}; q)_{B-A}
  return rising_q_factorial(zeta_z, zeta_q + (a - b), b - a, 1);
}

void prewarm_binomials(int64_t max_a) {
  if (max_a >= 0) pascal().ensure(max_a);
}

} // namespace qrr
