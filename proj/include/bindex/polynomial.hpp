#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace bindex {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Polynomial with 64-bit integer coefficients, stored lowest degree first and
// kept trimmed (no zero leading coefficient). Arithmetic is overflow-checked.
class IntPolynomial {
public:
  IntPolynomial() = default;

  explicit IntPolynomial(std::vector<std::int64_t> ascending) : coeffs_(std::move(ascending)) {
    trim();
  }

  // Coefficients from the highest degree down, as they are usually written.
  static IntPolynomial from_descending(std::initializer_list<std::int64_t> desc) {
    return IntPolynomial(std::vector<std::int64_t>(std::rbegin(desc), std::rend(desc)));
  }

  static IntPolynomial from_descending(const std::vector<std::int64_t>& desc) {
    return IntPolynomial(std::vector<std::int64_t>(desc.rbegin(), desc.rend()));
  }

  static IntPolynomial monomial(std::size_t degree, std::int64_t coeff = 1) {
    std::vector<std::int64_t> c(degree + 1, 0);
    c[degree] = coeff;
    return IntPolynomial(std::move(c));
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  // Degree of the zero polynomial is reported as -1.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  std::int64_t coefficient(std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : 0;
  }

  std::int64_t leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

  bool is_monic() const noexcept { return leading() == 1; }

  const std::vector<std::int64_t>& ascending() const noexcept { return coeffs_; }

  std::vector<std::int64_t> descending() const {
    return std::vector<std::int64_t>(coeffs_.rbegin(), coeffs_.rend());
  }

  BigInt evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + *it;
    return acc;
  }

  double evaluate(double x) const {
    double acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + static_cast<double>(*it);
    return acc;
  }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
      coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
    trim();
    return *this;
  }

  IntPolynomial& operator-=(const IntPolynomial& o) { return *this += o * -1; }

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

  friend IntPolynomial operator*(const IntPolynomial& a, std::int64_t k) {
    std::vector<std::int64_t> c(a.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = checked_mul(a.coeffs_[i], k);
    return IntPolynomial(std::move(c));
  }

  friend IntPolynomial operator*(std::int64_t k, const IntPolynomial& a) { return a * k; }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero())
      return {};
    std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        c[i + j] = checked_add(c[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    return IntPolynomial(std::move(c));
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  std::string to_string() const {
    if (is_zero())
      return "0";
    std::string s;
    for (int d = degree(); d >= 0; --d) {
      const std::int64_t c = coeffs_[static_cast<std::size_t>(d)];
      if (c == 0)
        continue;
      const std::int64_t mag = c < 0 ? -c : c;
      if (s.empty())
        s += c < 0 ? "-" : "";
      else
        s += c < 0 ? " - " : " + ";
      if (mag != 1 || d == 0)
        s += std::to_string(mag);
      if (d >= 1)
        s += "x";
      if (d >= 2)
        s += "^" + std::to_string(d);
    }
    return s;
  }

private:
  static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
      throw error("polynomial coefficient overflow");
    return out;
  }

  static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
      throw error("polynomial coefficient overflow");
    return out;
  }

  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
      coeffs_.pop_back();
  }

  std::vector<std::int64_t> coeffs_;
};

// Converts a big coefficient vector (ascending) into an IntPolynomial.
inline IntPolynomial to_int_polynomial(const std::vector<BigInt>& ascending) {
  std::vector<std::int64_t> c;
  c.reserve(ascending.size());
  for (const auto& v : ascending) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
      throw error("polynomial coefficient exceeds 64 bits");
    c.push_back(static_cast<std::int64_t>(v));
  }
  return IntPolynomial(std::move(c));
}

namespace exact {

// Dense polynomial over the rationals, lowest degree first, trimmed.
using RatPoly = std::vector<BigRational>;

inline void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

inline RatPoly from_int(const IntPolynomial& p) {
  RatPoly out(p.ascending().begin(), p.ascending().end());
  return out;
}

inline int degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

inline RatPoly derivative(const RatPoly& p) {
  RatPoly out;
  for (std::size_t i = 1; i < p.size(); ++i)
    out.push_back(p[i] * static_cast<long long>(i));
  trim(out);
  return out;
}

// Quotient and remainder of a / b, b nonzero.
inline std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  if (b.empty())
    throw domain_error("polynomial division by zero");
  RatPoly quotient(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const BigRational factor = a.back() / b.back();
    quotient[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  trim(quotient);
  return {quotient, a};
}

inline RatPoly monic(RatPoly p) {
  trim(p);
  if (p.empty())
    return p;
  const BigRational lead = p.back();
  for (auto& c : p)
    c /= lead;
  return p;
}

inline RatPoly gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

inline BigRational evaluate(const RatPoly& p, const BigRational& x) {
  BigRational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

// Rescales by a positive factor to coprime integer coefficients; signs are kept.
inline std::vector<BigInt> primitive_integer(const RatPoly& p) {
  BigInt lcm_den = 1;
  for (const auto& c : p)
    lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(c));
  std::vector<BigInt> out;
  out.reserve(p.size());
  BigInt g = 0;
  for (const auto& c : p) {
    BigInt v = boost::multiprecision::numerator(c) * (lcm_den / boost::multiprecision::denominator(c));
    g = boost::multiprecision::gcd(g, v);
    out.push_back(std::move(v));
  }
  if (g > 1)
    for (auto& v : out)
      v /= g;
  return out;
}

// Dyadic rational m / 2^k.
struct Dyadic {
  BigInt mantissa;
  unsigned exponent = 0;

  BigRational value() const {
    return BigRational(mantissa, BigInt(1) << exponent);
  }

  friend bool operator==(const Dyadic& a, const Dyadic& b) { return a.value() == b.value(); }
};

inline Dyadic midpoint(const Dyadic& a, const Dyadic& b) {
  const unsigned e = std::max(a.exponent, b.exponent);
  const BigInt am = a.mantissa << (e - a.exponent);
  const BigInt bm = b.mantissa << (e - b.exponent);
  Dyadic m{am + bm, e + 1};
  while (m.exponent > 0 && (m.mantissa & 1) == 0) {
    m.mantissa >>= 1;
    --m.exponent;
  }
  return m;
}

// Sign of p(m / 2^k) computed as the sign of 2^(k*deg) * p(m / 2^k).
inline int sign_at(const std::vector<BigInt>& p, const Dyadic& x) {
  if (p.empty())
    return 0;
  BigInt acc = p.back();
  BigInt scale = 1;
  const BigInt step = BigInt(1) << x.exponent;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    scale *= step;
    acc = acc * x.mantissa + p[i] * scale;
  }
  return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

// Sturm chain of the squarefree part of a polynomial, all members primitive.
class SturmChain {
public:
  explicit SturmChain(const RatPoly& p) {
    RatPoly base = p;
    trim(base);
    if (degree(base) < 1)
      throw domain_error("Sturm chain needs a polynomial of degree >= 1");
    const RatPoly d = derivative(base);
    RatPoly sf = divmod(base, gcd(base, d)).first;
    RatPoly prev = sf;
    RatPoly cur = derivative(sf);
    squarefree_ = primitive_integer(sf);
    chain_.push_back(squarefree_);
    while (!cur.empty()) {
      chain_.push_back(primitive_integer(cur));
      RatPoly rem = divmod(prev, cur).second;
      for (auto& c : rem)
        c = -c;
      prev = std::move(cur);
      cur = std::move(rem);
    }
  }

  const std::vector<BigInt>& squarefree() const noexcept { return squarefree_; }

  int variations_at(const Dyadic& x) const {
    int count = 0;
    int last = 0;
    for (const auto& s : chain_) {
      const int sg = sign_at(s, x);
      if (sg == 0)
        continue;
      if (last != 0 && sg != last)
        ++count;
      last = sg;
    }
    return count;
  }

  int variations_at_infinity() const {
    int count = 0;
    int last = 0;
    for (const auto& s : chain_) {
      const int sg = s.back() > 0 ? 1 : -1;
      if (last != 0 && sg != last)
        ++count;
      last = sg;
    }
    return count;
  }

  // Distinct real roots in the half-open interval (lo, hi].
  int roots_in(const Dyadic& lo, const Dyadic& hi) const {
    return variations_at(lo) - variations_at(hi);
  }

  int roots_above(const Dyadic& x) const { return variations_at(x) - variations_at_infinity(); }

  // Integer B with every real root strictly inside (-B, B).
  BigInt cauchy_bound() const {
    const BigInt& lead = squarefree_.back();
    BigInt best = 0;
    for (std::size_t i = 0; i + 1 < squarefree_.size(); ++i) {
      BigInt mag = abs(squarefree_[i]);
      BigInt q = mag / abs(lead) + 1;
      best = std::max(best, q);
    }
    return best + 1;
  }

private:
  std::vector<BigInt> squarefree_;
  std::vector<std::vector<BigInt>> chain_;
};

} // namespace exact

// Bracket around the largest real root. When exact is set the root is lo == hi;
// otherwise the root lies strictly inside (lo, hi) and nothing is above it.
struct RootInterval {
  BigRational lo;
  BigRational hi;
  IntPolynomial poly;
  bool exact = false;

  BigRational width() const { return hi - lo; }

  double midpoint() const { return static_cast<double>(BigRational((lo + hi) / 2)); }

  // True when x lies in [lo - slack, hi + slack].
  bool contains(double x, double slack = 0) const {
    return static_cast<double>(lo) - slack <= x && x <= static_cast<double>(hi) + slack;
  }

  std::string to_string() const {
    if (exact)
      return "[" + lo.str() + "]";
    return "(" + lo.str() + ", " + hi.str() + ")";
  }
};

enum class RadiusOrder { less, equal, greater };

inline const char* to_string(RadiusOrder o) {
  switch (o) {
  case RadiusOrder::less:
    return "less";
  case RadiusOrder::equal:
    return "equal";
  case RadiusOrder::greater:
    return "greater";
  }
  return "?";
}

namespace exact {

// Shrinking bracket around the largest real root of a polynomial.
class RootIsolator {
public:
  explicit RootIsolator(const IntPolynomial& p) : poly_(p), chain_(from_int(p)) {
    const BigInt bound = chain_.cauchy_bound();
    lo_ = {-bound, 0};
    hi_ = {bound, 0};
    if (chain_.roots_above(lo_) == 0)
      throw domain_error("polynomial " + p.to_string() + " has no real root");
    // Integer bisection first so integer roots are caught exactly.
    while (hi_.mantissa - lo_.mantissa > 1) {
      Dyadic mid{(lo_.mantissa + hi_.mantissa) / 2, 0};
      if (lo_.mantissa + hi_.mantissa < 0 && (lo_.mantissa + hi_.mantissa) % 2 != 0)
        mid.mantissa -= 1;
      step_to(mid);
      if (exact_)
        return;
    }
  }

  bool exact() const noexcept { return exact_; }
  const Dyadic& lo() const noexcept { return lo_; }
  const Dyadic& hi() const noexcept { return hi_; }
  const SturmChain& chain() const noexcept { return chain_; }
  const IntPolynomial& poly() const noexcept { return poly_; }

  BigRational width() const { return hi_.value() - lo_.value(); }

  void bisect() {
    if (!exact_)
      step_to(midpoint(lo_, hi_));
  }

  void refine_below(unsigned bits) {
    const BigRational target(BigInt(1), BigInt(1) << bits);
    while (!exact_ && width() >= target)
      bisect();
  }

  RootInterval interval() const { return {lo_.value(), hi_.value(), poly_, exact_}; }

private:
  void step_to(const Dyadic& mid) {
    if (sign_at(chain_.squarefree(), mid) == 0 && chain_.roots_above(mid) == 0) {
      lo_ = hi_ = mid;
      exact_ = true;
      return;
    }
    if (chain_.roots_above(mid) >= 1)
      lo_ = mid;
    else
      hi_ = mid;
  }

  IntPolynomial poly_;
  SturmChain chain_;
  Dyadic lo_;
  Dyadic hi_;
  bool exact_ = false;
};

} // namespace exact

inline constexpr unsigned root_precision_bits = 40;

// Certified bracket of width < 2^-40 around the largest real root.
inline RootInterval largest_real_root(const IntPolynomial& p) {
  exact::RootIsolator iso(p);
  iso.refine_below(root_precision_bits);
  return iso.interval();
}

// Exact gcd over the rationals, returned as a primitive integer polynomial with
// positive leading coefficient.
inline IntPolynomial polynomial_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  const auto g = exact::gcd(exact::from_int(a), exact::from_int(b));
  if (g.empty())
    return {};
  return to_int_polynomial(exact::primitive_integer(g));
}

// Certified order of the largest real roots of pa and pb. Equality is decided by
// a common root of gcd(pa, pb) inside both brackets, never by a tolerance.
inline RadiusOrder compare_radii(const IntPolynomial& pa, const IntPolynomial& pb) {
  exact::RootIsolator a(pa);
  exact::RootIsolator b(pb);
  const auto g = exact::gcd(exact::from_int(pa), exact::from_int(pb));

  auto equal_roots = [&]() {
    if (exact::degree(g) < 1)
      return false;
    const auto gi = exact::primitive_integer(g);
    if (a.exact() && b.exact())
      return a.lo() == b.lo();
    if (a.exact() || b.exact()) {
      const auto& point = a.exact() ? a : b;
      const auto& other = a.exact() ? b : a;
      const BigRational x = point.lo().value();
      return other.lo().value() < x && x < other.hi().value() &&
             exact::sign_at(gi, point.lo()) == 0;
    }
    const exact::Dyadic& lo = a.lo().value() > b.lo().value() ? a.lo() : b.lo();
    const exact::Dyadic& hi = a.hi().value() < b.hi().value() ? a.hi() : b.hi();
    if (!(lo.value() < hi.value()))
      return false;
    const exact::SturmChain gc(g);
    const int on_hi = exact::sign_at(gi, hi) == 0 ? 1 : 0;
    return gc.roots_in(lo, hi) - on_hi > 0;
  };
  if (equal_roots())
    return RadiusOrder::equal;
  for (;;) {
    if (a.hi().value() <= b.lo().value() && !(a.exact() && b.exact() && a.lo() == b.lo()))
      return RadiusOrder::less;
    if (b.hi().value() <= a.lo().value())
      return RadiusOrder::greater;
    if (!a.exact() && (b.exact() || a.width() >= b.width()))
      a.bisect();
    else
      b.bisect();
  }
}

} // namespace bindex
