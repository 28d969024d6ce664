#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "turanhull/int_vector.hpp"
#include "turanhull/rational.hpp"

namespace turanhull {

// Membership in C_g, the convex hull of the origin and the truncations
// g^1..g^d of a nonnegative generator g.
//
// Generators must be in zero-tail form (no zero entry before a positive one);
// the support s of g is its leading positive run. C_g lives on coordinates
// 1..s, so any positive f_i with i > s is outside. Entries must not exceed
// INT64_MAX so every cross product fits in 128 bits.

enum class Verdict { inside, outside };

enum class ViolationKind {
  none,
  /// f_i > 0 at a coordinate i past the support of g (index i).
  support,
  /// f_1 > g_1.
  first_coordinate,
  /// f_i * g_j > f_j * g_i for the pair (i, j), j < i.
  pair,
};

struct Violation {
  ViolationKind kind = ViolationKind::none;
  std::size_t i = 0;
  std::size_t j = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct HullCertificate {
  Verdict verdict = Verdict::inside;
  /// c_1..c_d with f = sum_k c_k g^k. Always filled by the coefficient oracle;
  /// filled by the inequality oracle only for inside verdicts.
  std::vector<Rational> coefficients;
  Violation violation;

  bool inside() const { return verdict == Verdict::inside; }
};

/// g^k: entries 1..k of g, zeros after. Throws std::out_of_range unless 1 <= k <= d.
IntVector truncation(const IntVector& g, std::size_t k);

/// Throws std::invalid_argument for an internal zero in g or an entry above INT64_MAX.
void validate_generator(const IntVector& g);

/// Decides f in C_g by the cross-multiplied inequalities f_1 <= g_1 and
/// f_i g_j <= f_j g_i (j < i). On failure reports, in order of precedence, the
/// first support violation, then f_1 > g_1, then the lexicographically first
/// violated pair (smallest j, then smallest i).
HullCertificate membership_inequalities(const IntVector& f, const IntVector& g);

/// Decides f in C_g by solving the triangular system f = sum_k c_k g^k over
/// the rationals: s_k = f_k / g_k, c_k = s_k - s_{k+1}. Inside iff every c_k >= 0
/// and s_1 <= 1. On failure reports the first support violation, then
/// s_1 > 1 as f_1 > g_1, then the first negative c_k as the pair (k+1, k).
HullCertificate membership_coefficients(const IntVector& f, const IntVector& g);

struct CertificateCheck {
  bool sound = false;
  std::string reason;
};

/// Re-checks a certificate from scratch: an inside certificate must have c >= 0,
/// sum c <= 1 and reproduce f exactly as sum c_k g^k; an outside certificate's
/// named inequality must fail on the integers. Falls back to arbitrary
/// precision when 128-bit rationals overflow.
CertificateCheck verify_certificate(const IntVector& f, const IntVector& g, const HullCertificate& cert);

/// {"verdict", "coefficients": [{"num","den"}...], "violation": {...} | null}.
/// Numerators and denominators outside the int64 range are written as decimal strings.
nlohmann::json certificate_to_json(const HullCertificate& cert);

std::string to_string(ViolationKind kind);

}  // namespace turanhull
