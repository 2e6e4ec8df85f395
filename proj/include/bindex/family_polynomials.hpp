#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "polynomial.hpp"

namespace bindex {

// Named polynomials from the extremal proofs. f1 has half-integer coefficients
// and is stored doubled.
enum class PolyFamily { f1, f2, f3, f4, f5, g1, g2, g3, g4, g5, g6, g7, g8, h1, h2, h3 };

inline constexpr std::array<std::string_view, 16> poly_family_names = {
    "f1", "f2", "f3", "f4", "f5", "g1", "g2", "g3", "g4", "g5", "g6", "g7", "g8", "h1", "h2", "h3"};

inline std::string_view to_string(PolyFamily f) { return poly_family_names[static_cast<int>(f)]; }

inline PolyFamily parse_poly_family(std::string_view name) {
  for (std::size_t i = 0; i < poly_family_names.size(); ++i)
    if (poly_family_names[i] == name)
      return static_cast<PolyFamily>(i);
  throw domain_error("unknown polynomial family '" + std::string(name) + "'");
}

// Every family reads only the parameters it needs; t stands for t1 in f3/f5.
struct PolyParams {
  std::int64_t n = 0;
  std::int64_t r = 0;
  std::int64_t t = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
};

inline IntPolynomial family_polynomial(PolyFamily family, const PolyParams& a) {
  const std::int64_t n = a.n, r = a.r, t = a.t, p = a.p, q = a.q, al = a.alpha, be = a.beta;
  using P = IntPolynomial;
  switch (family) {
  case PolyFamily::f1:
    return P::from_descending({-(r * r + 2 * r), 2 * n * r - 3 * r - 2, 2 * n - 2});
  case PolyFamily::f2:
    return P::from_descending({1, -(al - 1), al * (al - n)});
  case PolyFamily::f3:
    return P::from_descending({1, -(n - r * t - 3), -(r * t * t - (r - 1) * t + n - 2),
                               -(r * r + r) * t * t * t + ((n - 3) * r - 1) * t * t + (n - 2) * t});
  case PolyFamily::f4:
    return P::from_descending({1, -(n - r - 3), -(n - 1), (r + 1) * (n - r - 3)});
  case PolyFamily::f5:
    return P::from_descending({r, -(r * t + 1),
                               -(t * t + t + 1) * r * r + (n * t - t * t + n - 4 * t - 4) * r + n - t -
                                   3});
  case PolyFamily::g1:
    return P::from_descending(
        {1, 0, (p - t) * (r * t + 1) - p * q, 0, t * (r * t + 1) * (q - r * t - 1) * (p - t)});
  case PolyFamily::g2:
    return P::from_descending(
        {1, 0, (r + 1) * (p - 1) - p * q, 0, (r + 1) * (q - r - 1) * (p - 1)});
  case PolyFamily::g3:
    return P::from_descending(
        {r * (p - t) - (r + 1), 0,
         r * r * t * t * t - r * (p * r + q - r - 2) * t * t +
             ((1 - p) * r * r + (q - 2) * (p - 1) * r - q + 1) * t + (r + 1) * (q - r - 1) * (p - 1)});
  case PolyFamily::g4:
    return P::from_descending(
        {1, 0, (r + 1) * (q - 1) - p * q, 0, (r + 1) * (q - 1) * (p - r - 1)});
  case PolyFamily::g5:
    return P::from_descending(
        {1, 0, (r * t + 1) * (q - t) - p * q, 0, t * (r * t + 1) * (q - t) * (p - r * t - 1)});
  case PolyFamily::g6:
    return P::from_descending(
        {1, 0, r * (q - 1) - p * q + 1, 0, (q - 1) * (q * r - r + 1) * (p - r * q + r - 1)});
  case PolyFamily::g7:
    return P::from_descending(
        {r * t - r + 1, 0,
         (t * (r * t - r + 1) - r * (q - 1) - 1) * p - r * r * t * t * t + r * (r - 2) * t * t +
             (q * r * r - (r - 1) * (r - 1)) * t + (q * q + 1) * r * r - 2 * r * (r - 1) * q - 2 * r +
             1});
  case PolyFamily::g8:
    return P::from_descending({(q - t - 1) * r - 1, 0,
                               (t * t * t - (t * t + t + 1) * (q - 1)) * r * r +
                                   ((t + 1) * (q - t) - 1) * (p - 2) * r + (q - t - 1) * (p - 1)});
  case PolyFamily::h1:
    return P::from_descending(
        {1, 0, q * q - n * q + r * q + q - r - 1, 0, (r + 1) * (q - 1) * (n - q - r - 1)});
  case PolyFamily::h2:
    return P::from_descending(
        {1, 0, be * be - n * be + r * be + be - r - 1, 0, (r + 1) * (be - 1) * (n - be - r - 1)});
  case PolyFamily::h3:
    return P::from_descending({(be - q) * (n - r - be - q - 1), 0,
                               (be - q) * (r * r + (be + q + 1 - n) * r + be + q - n)});
  }
  throw domain_error("unknown polynomial family");
}

inline IntPolynomial family_polynomial(std::string_view name, const PolyParams& a) {
  return family_polynomial(parse_poly_family(name), a);
}

} // namespace bindex
