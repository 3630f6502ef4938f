#include "klrpoly/poly.hpp"

#include <algorithm>

#include "klrpoly/error.hpp"

namespace klrpoly {

namespace checked {

Coefficient add(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coefficient overflow in addition");
  return r;
}

Coefficient sub(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("coefficient overflow in subtraction");
  return r;
}

Coefficient mul(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("coefficient overflow in multiplication");
  return r;
}

} // namespace checked

namespace {

std::vector<Coefficient> convolve(std::span<const Coefficient> a, std::span<const Coefficient> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Coefficient> out(a.size() + b.size() - 1, 0);
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a[x] == 0) continue;
    for (std::size_t y = 0; y < b.size(); ++y) {
      out[x + y] = checked::add(out[x + y], checked::mul(a[x], b[y]));
    }
  }
  return out;
}

// One signed term "c*var^d" appended in descending-degree rendering.
void append_term(std::string &out, Coefficient c, int d, const char *var) {
  const bool negative = c < 0;
  // |INT64_MIN| is not representable; print it through unsigned.
  const auto magnitude = negative ? 0ULL - static_cast<unsigned long long>(c)
                                  : static_cast<unsigned long long>(c);
  if (negative) {
    out += '-';
  } else if (!out.empty()) {
    out += '+';
  }
  if (d == 0) {
    out += std::to_string(magnitude);
    return;
  }
  if (magnitude != 1) out += std::to_string(magnitude);
  out += var;
  if (d != 1) out += '^' + std::to_string(d);
}

} // namespace

// ---------------------------------------------------------------- IntPolynomial

IntPolynomial::IntPolynomial(std::vector<Coefficient> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<Coefficient> coefficients) : coeffs_(coefficients) {
  trim();
}

IntPolynomial IntPolynomial::constant(Coefficient c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(int degree, Coefficient c) {
  if (degree < 0) throw DomainError("negative degree in IntPolynomial::monomial");
  std::vector<Coefficient> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Coefficient IntPolynomial::coefficient(int d) const {
  if (d < 0 || d >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(d)];
}

Coefficient IntPolynomial::evaluate(Coefficient x) const {
  Coefficient acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = checked::add(checked::mul(acc, x), *it);
  }
  return acc;
}

IntPolynomial &IntPolynomial::operator+=(const IntPolynomial &o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t d = 0; d < o.coeffs_.size(); ++d) coeffs_[d] = checked::add(coeffs_[d], o.coeffs_[d]);
  trim();
  return *this;
}

IntPolynomial &IntPolynomial::operator-=(const IntPolynomial &o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t d = 0; d < o.coeffs_.size(); ++d) coeffs_[d] = checked::sub(coeffs_[d], o.coeffs_[d]);
  trim();
  return *this;
}

IntPolynomial &IntPolynomial::operator*=(const IntPolynomial &o) {
  coeffs_ = convolve(coeffs_, o.coeffs_);
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial &a, const IntPolynomial &b) {
  return IntPolynomial(convolve(a.coeffs_, b.coeffs_));
}

IntPolynomial operator-(const IntPolynomial &a) {
  IntPolynomial out;
  return out -= a;
}

std::string to_string(const IntPolynomial &p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int d = p.degree(); d >= 0; --d) {
    if (const auto c = p.coefficient(d); c != 0) append_term(out, c, d, "q");
  }
  return out;
}

// ------------------------------------------------------------ LaurentPolynomial

LaurentPolynomial::LaurentPolynomial(int min_degree, std::vector<Coefficient> coefficients)
    : min_degree_(min_degree), coeffs_(std::move(coefficients)) {
  trim();
}

LaurentPolynomial LaurentPolynomial::monomial(int degree, Coefficient c) {
  return LaurentPolynomial(degree, {c});
}

LaurentPolynomial LaurentPolynomial::from_polynomial(const IntPolynomial &p) {
  const auto c = p.coefficients();
  return LaurentPolynomial(0, std::vector<Coefficient>(c.begin(), c.end()));
}

void LaurentPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  const auto lead = std::find_if(coeffs_.begin(), coeffs_.end(), [](Coefficient c) { return c != 0; });
  min_degree_ += static_cast<int>(lead - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), lead);
  if (coeffs_.empty()) min_degree_ = 0;
}

Coefficient LaurentPolynomial::coefficient(int d) const {
  const int idx = d - min_degree_;
  if (coeffs_.empty() || idx < 0 || idx >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(idx)];
}

namespace {

template <class Op>
LaurentPolynomial combine(const LaurentPolynomial &a, const LaurentPolynomial &b, Op op) {
  if (a.is_zero() && b.is_zero()) return {};
  const int lo = a.is_zero() ? b.min_degree() : b.is_zero() ? a.min_degree()
                                                            : std::min(a.min_degree(), b.min_degree());
  const int hi = a.is_zero() ? b.max_degree() : b.is_zero() ? a.max_degree()
                                                            : std::max(a.max_degree(), b.max_degree());
  std::vector<Coefficient> out(static_cast<std::size_t>(hi - lo + 1));
  for (int d = lo; d <= hi; ++d) out[static_cast<std::size_t>(d - lo)] = op(a.coefficient(d), b.coefficient(d));
  return LaurentPolynomial(lo, std::move(out));
}

} // namespace

LaurentPolynomial &LaurentPolynomial::operator+=(const LaurentPolynomial &o) {
  return *this = combine(*this, o, checked::add);
}

LaurentPolynomial &LaurentPolynomial::operator-=(const LaurentPolynomial &o) {
  return *this = combine(*this, o, checked::sub);
}

LaurentPolynomial operator*(const LaurentPolynomial &a, const LaurentPolynomial &b) {
  if (a.is_zero() || b.is_zero()) return {};
  return LaurentPolynomial(a.min_degree_ + b.min_degree_, convolve(a.coeffs_, b.coeffs_));
}

LaurentPolynomial operator-(const LaurentPolynomial &a) {
  return LaurentPolynomial{} - a;
}

std::string to_string(const LaurentPolynomial &p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int d = p.max_degree(); d >= p.min_degree(); --d) {
    if (const auto c = p.coefficient(d); c != 0) append_term(out, c, d, "t");
  }
  return out;
}

// ---------------------------------------------------------------- substitution

IntPolynomial substitute_shift(const IntPolynomial &p, int d) {
  if (d < 0) throw DomainError("substitute_shift needs d >= 0");
  if (p.is_zero()) return {};

  const LaurentPolynomial shift = LaurentPolynomial(-1, {-1, 0, 1}); // t - t^-1
  LaurentPolynomial power = LaurentPolynomial::monomial(d);          // t^d * shift^k
  LaurentPolynomial acc;
  for (int k = 0; k <= p.degree(); ++k) {
    if (const auto c = p.coefficient(k); c != 0) acc += power * LaurentPolynomial::monomial(0, c);
    power = power * shift;
  }
  if (acc.is_zero()) return {};

  if (acc.min_degree() < 0) {
    throw InvariantViolation("substitute_shift: negative exponent t^" + std::to_string(acc.min_degree()) +
                             " survives (degree of p exceeds d)");
  }
  std::vector<Coefficient> q_coeffs(static_cast<std::size_t>(acc.max_degree() / 2) + 1, 0);
  for (int e = acc.min_degree(); e <= acc.max_degree(); ++e) {
    const auto c = acc.coefficient(e);
    if (c == 0) continue;
    if (e % 2 != 0) {
      throw InvariantViolation("substitute_shift: odd exponent t^" + std::to_string(e) +
                               " survives; parity of p does not match d = " + std::to_string(d));
    }
    q_coeffs[static_cast<std::size_t>(e / 2)] = c;
  }
  return IntPolynomial(std::move(q_coeffs));
}

} // namespace klrpoly
