#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "laurent.hpp"

namespace qrr {

enum class IdentityId {
  R1Finite,
  R1PartnerFinite,
  R2Finite,
  Arrf1,
  Arrf2,
  Arrf3,
};

std::optional<IdentityId> identity_from_name(std::string_view name);
std::string identity_name(IdentityId id);

// The exact finite multi-sum P_n(z, q) over the stated index ranges.
// The three finitized identities only; the aRRf variants have dedicated
// entry points below.
LaurentPolynomial lhs_poly(IdentityId id, int64_t n);

// the bilateral j-sum of the right side, without the epsilon correction
LaurentPolynomial rhs_main_poly(IdentityId id, int64_t n);

// the parity-split boundary correction; identically zero for R2Finite
LaurentPolynomial epsilon_poly(IdentityId id, int64_t n);

LaurentPolynomial rhs_poly(IdentityId id, int64_t n);

// one term of a lag coefficient: coeff * z^{z_exp} * q^{qn_mult*n + q_off}
struct RecurrenceTermSpec {
  BigInt coeff;
  int64_t z_exp;
  int64_t qn_mult;
  int64_t q_off;
};

struct RecurrenceSpec {
  int order = 0;
  // lag_terms[i] describes the coefficient of P_{n-(i+1)}
  std::vector<std::vector<RecurrenceTermSpec>> lag_terms;
  std::vector<LaurentPolynomial> initial_conditions;

  // lag in 1..order
  LaurentPolynomial lag_coefficient(int lag, int64_t n) const;
};

RecurrenceSpec recurrence_spec(IdentityId id);

// P_0..P_{n_max} iterated from the initial conditions
std::vector<LaurentPolynomial> run_recurrence(const RecurrenceSpec& spec, int64_t n_max);

enum class FailureKind {
  None,
  ValueMismatch,   // lhs != rhs
  InitialCondition,
  RecurrenceLhs,
  RecurrenceRhs,
};

struct VerificationReport {
  IdentityId identity;
  int64_t n_max = 0;
  bool pass = false;
  FailureKind kind = FailureKind::None;
  int64_t failure_n = -1;
  LaurentPolynomial difference{2};
};

// pass iff for every 0 <= n <= n_max: lhs = rhs, the initial conditions
// hold, and both the lhs and the rhs sequences satisfy the recurrence
VerificationReport verify_identity(IdentityId id, int64_t n_max);

// both sides of the aRRf3 polynomial identity
std::pair<LaurentPolynomial, LaurentPolynomial> arrf3_sides(int64_t n);

struct RationalPoint {
  Rational z;
  Rational q;
};

enum class PointOutcome { Equal, Mismatch, Rejected };

struct SpotCheckReport {
  IdentityId identity;
  int64_t n = 0;
  bool pass = false;             // every non-rejected point agreed
  size_t checked = 0;
  size_t rejected = 0;
  std::vector<PointOutcome> outcomes;
};

// exact rational evaluation of both sides of aRRf1/aRRf2 at the given
// points; points that would put a zero in a denominator are rejected,
// which is reported but is not a failure
SpotCheckReport arrf12_spot_check(IdentityId which, int64_t n,
                                  std::span<const RationalPoint> points);

const std::vector<RationalPoint>& default_spot_points();

} // namespace qrr
