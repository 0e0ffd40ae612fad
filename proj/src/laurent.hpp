#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "qvec.hpp"

namespace qrr {

// Exponent vector of one monomial. Component 0 is the z-exponent and
// component 1 the q-exponent; arity-3 polynomials add component 2 for the
// symbol Q = q^n used by the recurrence engine.
class ExponentVector {
public:
  static constexpr int kMaxArity = 4;

  ExponentVector(std::initializer_list<int64_t> components);
  static ExponentVector zq(int64_t z, int64_t q) { return {z, q}; }
  static ExponentVector zqQ(int64_t z, int64_t q, int64_t Q) { return {z, q, Q}; }
  static ExponentVector zeros(int arity);

  int arity() const { return arity_; }
  int64_t operator[](int i) const { return e_[size_t(i)]; }

  ExponentVector operator+(const ExponentVector& other) const;
  bool operator==(const ExponentVector& other) const;

private:
  friend struct CanonicalTermOrder;
  ExponentVector() = default;
  int arity_ = 0;
  std::array<int64_t, kMaxArity> e_{};
};

// Canonical term order: ascending q-exponent, then ascending z-exponent,
// then any further components. Serialization and iteration follow it.
struct CanonicalTermOrder {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

// Sparse multivariate Laurent polynomial over arbitrary-precision integers.
// Canonical form: no stored zero coefficients; equality is structural.
// Values are immutable in spirit: every operation returns a fresh value and
// nothing mutates shared state, so instances are safe to share across threads.
class LaurentPolynomial {
public:
  using TermMap = std::map<ExponentVector, BigInt, CanonicalTermOrder>;

  explicit LaurentPolynomial(int arity = 2);
  static LaurentPolynomial constant(BigInt c, int arity = 2);
  static LaurentPolynomial monomial(BigInt c, const ExponentVector& e);

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  BigInt coefficient(const ExponentVector& e) const;

  void add_term(const ExponentVector& e, const BigInt& c);

  LaurentPolynomial operator+(const LaurentPolynomial& other) const;
  LaurentPolynomial operator-(const LaurentPolynomial& other) const;
  LaurentPolynomial operator-() const;
  LaurentPolynomial operator*(const LaurentPolynomial& other) const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  bool operator==(const LaurentPolynomial& other) const;

  // every exponent shifted by `shift`, every coefficient multiplied by c
  LaurentPolynomial monomial_scale(const ExponentVector& shift, const BigInt& c) const;

  // q -> q^k; arity 2 only, k >= 1
  LaurentPolynomial substitute_q_power(int64_t k) const;

  // z -> 1/z; arity 2 only
  LaurentPolynomial invert_z() const;

  // exact rational evaluation; a zero coordinate is rejected only when some
  // term carries a negative exponent in that coordinate
  Rational evaluate(std::span<const Rational> point) const;

  // minimum q-exponent; nullopt (= +infinity) for the zero polynomial
  std::optional<int64_t> q_valuation() const;

  // drop all terms with q-exponent > max_q; arity 2 only
  LaurentPolynomial truncate_q(int64_t max_q) const;

  // canonical text form, e.g. "1 + q^2 - (z + z^-1)*q^3"
  std::string to_text() const;

  // canonical term-list rows [z_exp, q_exp, coefficient-as-decimal]; arity 2
  struct TermRow {
    int64_t z_exp;
    int64_t q_exp;
    std::string coeff;
  };
  std::vector<TermRow> term_rows() const;

private:
  void require_arity(int expected, const char* op) const;
  int arity_;
  TermMap terms_;
};

Rational pow_rational(const Rational& base, int64_t exp);

LaurentPolynomial to_polynomial(const ZSlices& slices);
ZSlices to_slices(const LaurentPolynomial& poly);

} // namespace qrr
