#include "laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qrr {

ExponentVector::ExponentVector(std::initializer_list<int64_t> components) {
  if (components.size() < 1 || components.size() > kMaxArity)
    throw std::invalid_argument("exponent vector arity out of range");
  arity_ = int(components.size());
  size_t i = 0;
  for (int64_t c : components) e_[i++] = c;
}

ExponentVector ExponentVector::zeros(int arity) {
  if (arity < 1 || arity > kMaxArity)
    throw std::invalid_argument("exponent vector arity out of range");
  ExponentVector v;
  v.arity_ = arity;
  return v;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  if (arity_ != other.arity_) throw std::invalid_argument("arity mismatch");
  ExponentVector out = *this;
  for (int i = 0; i < arity_; ++i) out.e_[size_t(i)] += other.e_[size_t(i)];
  return out;
}

bool ExponentVector::operator==(const ExponentVector& other) const {
  if (arity_ != other.arity_) return false;
  for (int i = 0; i < arity_; ++i)
    if (e_[size_t(i)] != other.e_[size_t(i)]) return false;
  return true;
}

bool CanonicalTermOrder::operator()(const ExponentVector& a, const ExponentVector& b) const {
  int n = std::max(a.arity_, b.arity_);
  if (n >= 2) {
    if (a.e_[1] != b.e_[1]) return a.e_[1] < b.e_[1];
    if (a.e_[0] != b.e_[0]) return a.e_[0] < b.e_[0];
    for (int i = 2; i < n; ++i)
      if (a.e_[size_t(i)] != b.e_[size_t(i)]) return a.e_[size_t(i)] < b.e_[size_t(i)];
    return false;
  }
  return a.e_[0] < b.e_[0];
}

LaurentPolynomial::LaurentPolynomial(int arity) : arity_(arity) {
  if (arity < 1 || arity > ExponentVector::kMaxArity)
    throw std::invalid_argument("polynomial arity out of range");
}

LaurentPolynomial LaurentPolynomial::constant(BigInt c, int arity) {
  LaurentPolynomial p(arity);
  p.add_term(ExponentVector::zeros(arity), c);
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(BigInt c, const ExponentVector& e) {
  LaurentPolynomial p(e.arity());
  p.add_term(e, c);
  return p;
}

BigInt LaurentPolynomial::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPolynomial::add_term(const ExponentVector& e, const BigInt& c) {
  if (e.arity() != arity_) throw std::invalid_argument("arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& other) const {
  LaurentPolynomial out = *this;
  out += other;
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  if (arity_ != other.arity_) throw std::invalid_argument("arity mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  if (arity_ != other.arity_) throw std::invalid_argument("arity mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& other) const {
  LaurentPolynomial out = *this;
  out -= other;
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out(arity_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& other) const {
  if (arity_ != other.arity_) throw std::invalid_argument("arity mismatch");
  LaurentPolynomial out(arity_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

bool LaurentPolynomial::operator==(const LaurentPolynomial& other) const {
  return arity_ == other.arity_ && terms_ == other.terms_;
}

LaurentPolynomial LaurentPolynomial::monomial_scale(const ExponentVector& shift,
                                                    const BigInt& c) const {
  if (shift.arity() != arity_) throw std::invalid_argument("arity mismatch");
  LaurentPolynomial out(arity_);
  if (c == 0) return out;
  for (const auto& [e, coeff] : terms_) out.terms_.emplace(e + shift, coeff * c);
  return out;
}

void LaurentPolynomial::require_arity(int expected, const char* op) const {
  if (arity_ != expected)
    throw std::invalid_argument(std::string(op) + ": expected arity " +
                                std::to_string(expected));
}

LaurentPolynomial LaurentPolynomial::substitute_q_power(int64_t k) const {
  require_arity(2, "substitute_q_power");
  if (k <= 0) throw std::invalid_argument("substitute_q_power: k must be positive");
  LaurentPolynomial out(2);
  for (const auto& [e, c] : terms_)
    out.terms_.emplace(ExponentVector::zq(e[0], e[1] * k), c);
  return out;
}

LaurentPolynomial LaurentPolynomial::invert_z() const {
  require_arity(2, "invert_z");
  LaurentPolynomial out(2);
  for (const auto& [e, c] : terms_)
    out.terms_.emplace(ExponentVector::zq(-e[0], e[1]), c);
  return out;
}

Rational pow_rational(const Rational& base, int64_t exp) {
  if (exp == 0) return Rational(1);
  BigInt num = boost::multiprecision::numerator(base);
  BigInt den = boost::multiprecision::denominator(base);
  if (exp < 0) {
    if (num == 0) throw std::domain_error("zero raised to a negative power");
    std::swap(num, den);
    if (den < 0) {
      den = -den;
      num = -num;
    }
    exp = -exp;
  }
  BigInt n = boost::multiprecision::pow(num, unsigned(exp));
  BigInt d = boost::multiprecision::pow(den, unsigned(exp));
  return Rational(n, d);
}

Rational LaurentPolynomial::evaluate(std::span<const Rational> point) const {
  if (int(point.size()) != arity_) throw std::invalid_argument("point arity mismatch");
  for (int i = 0; i < arity_; ++i) {
    if (point[size_t(i)] != 0) continue;
    for (const auto& [e, c] : terms_)
      if (e[i] < 0)
        throw std::domain_error("zero coordinate with a negative exponent present");
  }
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational term(c);
    for (int i = 0; i < arity_; ++i) term *= pow_rational(point[size_t(i)], e[i]);
    sum += term;
  }
  return sum;
}

std::optional<int64_t> LaurentPolynomial::q_valuation() const {
  require_arity(2, "q_valuation");
  if (terms_.empty()) return std::nullopt;
  // canonical order is ascending in the q-exponent
  return terms_.begin()->first[1];
}

LaurentPolynomial LaurentPolynomial::truncate_q(int64_t max_q) const {
  require_arity(2, "truncate_q");
  LaurentPolynomial out(2);
  for (const auto& [e, c] : terms_) {
    if (e[1] > max_q) break;
    out.terms_.emplace(e, c);
  }
  return out;
}

namespace {

std::string exp_suffix(const char* sym, int64_t e) {
  if (e == 0) return {};
  std::string s(sym);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

// one monomial with a nonnegative coefficient, e.g. "2*z^-1*q^3"
std::string monomial_text(const BigInt& coeff, std::vector<std::string> symbol_parts) {
  std::string vars;
  for (auto& p : symbol_parts) {
    if (p.empty()) continue;
    if (!vars.empty()) vars += "*";
    vars += p;
  }
  if (vars.empty()) return coeff.str();
  if (coeff == 1) return vars;
  return coeff.str() + "*" + vars;
}

struct GroupTerm {
  int64_t z;
  BigInt c;
};

// z-polynomial of one q-group, ordered |z| ascending with the nonnegative
// exponent first, signs carried per term: "1 - z - z^-1"
std::string group_body(std::vector<GroupTerm> ts) {
  std::sort(ts.begin(), ts.end(), [](const GroupTerm& a, const GroupTerm& b) {
    int64_t aa = std::abs(a.z), ab = std::abs(b.z);
    if (aa != ab) return aa < ab;
    return a.z > b.z;
  });
  std::string out;
  for (size_t i = 0; i < ts.size(); ++i) {
    bool neg = ts[i].c < 0;
    BigInt mag = neg ? BigInt(-ts[i].c) : ts[i].c;
    if (i == 0)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += monomial_text(mag, {exp_suffix("z", ts[i].z)});
  }
  return out;
}

} // namespace

std::string LaurentPolynomial::to_text() const {
  if (terms_.empty()) return "0";

  if (arity_ != 2) {
    // flat canonical term list; symbols z, q, Q by position
    static const char* symbols[] = {"z", "q", "Q"};
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      bool neg = c < 0;
      BigInt mag = neg ? BigInt(-c) : c;
      out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      first = false;
      std::vector<std::string> parts;
      for (int i = 0; i < arity_ && i < 3; ++i) parts.push_back(exp_suffix(symbols[i], e[i]));
      out += monomial_text(mag, std::move(parts));
    }
    return out;
  }

  // arity 2: group by q-exponent (map order is q-ascending, so groups are
  // contiguous), factor an all-negative group's sign outside the parentheses
  std::string out;
  auto it = terms_.begin();
  bool first = true;
  while (it != terms_.end()) {
    int64_t qexp = it->first[1];
    std::vector<GroupTerm> group;
    while (it != terms_.end() && it->first[1] == qexp) {
      group.push_back({it->first[0], it->second});
      ++it;
    }
    bool all_neg = true;
    for (const auto& t : group) all_neg = all_neg && t.c < 0;

    std::string body;
    bool body_negative = false;
    if (group.size() == 1) {
      body_negative = group[0].c < 0;
      BigInt mag = body_negative ? BigInt(-group[0].c) : group[0].c;
      body = monomial_text(mag, {exp_suffix("z", group[0].z), exp_suffix("q", qexp)});
    } else if (all_neg) {
      body_negative = true;
      for (auto& t : group) t.c = -t.c;
      body = "(" + group_body(std::move(group)) + ")";
      std::string q = exp_suffix("q", qexp);
      if (!q.empty()) body += "*" + q;
    } else {
      body = "(" + group_body(std::move(group)) + ")";
      std::string q = exp_suffix("q", qexp);
      if (!q.empty()) body += "*" + q;
    }

    out += first ? (body_negative ? "-" : "") : (body_negative ? " - " : " + ");
    first = false;
    out += body;
  }
  return out;
}

std::vector<LaurentPolynomial::TermRow> LaurentPolynomial::term_rows() const {
  require_arity(2, "term_rows");
  std::vector<TermRow> rows;
  rows.reserve(terms_.size());
  for (const auto& [e, c] : terms_) rows.push_back({e[0], e[1], c.str()});
  return rows;
}

LaurentPolynomial to_polynomial(const ZSlices& slices) {
  LaurentPolynomial out(2);
  for (const auto& [z, v] : slices.slices)
    for (size_t i = 0; i < v.stored_size(); ++i)
      if (v.stored(i) != 0) out.add_term(ExponentVector::zq(z, v.exp_at(i)), v.stored(i));
  return out;
}

ZSlices to_slices(const LaurentPolynomial& poly) {
  std::map<int64_t, std::vector<std::pair<int64_t, BigInt>>> rows;
  for (const auto& [e, c] : poly.terms()) rows[e[0]].push_back({e[1], c});
  ZSlices out;
  for (auto& [z, terms] : rows) out.slices[z] = QVec::from_sorted_terms(terms);
  return out;
}

} // namespace qrr
