#include "turanhull/hull.hpp"

#include <limits>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace turanhull {

namespace {

using U128 = unsigned __int128;
constexpr std::uint64_t kMaxEntry = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());

// Validates the pair and returns the support of g.
std::size_t prepare(const IntVector& f, const IntVector& g) {
  if (f.size() != g.size())
    throw std::invalid_argument("f and g differ in length (" + std::to_string(f.size()) + " vs " + std::to_string(g.size()) + ")");
  validate_generator(g);
  for (std::size_t k = 1; k <= f.size(); ++k)
    if (f.at(k) > kMaxEntry) throw std::invalid_argument("f entry " + std::to_string(k) + " exceeds INT64_MAX");
  return g.support();
}

std::size_t first_past_support(const IntVector& f, std::size_t s) {
  for (std::size_t i = s + 1; i <= f.size(); ++i)
    if (f.at(i) > 0) return i;
  return 0;
}

Rational ratio(const IntVector& f, const IntVector& g, std::size_t k, std::size_t s) {
  if (k > s) return Rational();
  return Rational(static_cast<__int128>(f.at(k)), static_cast<__int128>(g.at(k)));
}

std::vector<Rational> solve_coefficients(const IntVector& f, const IntVector& g, std::size_t s) {
  std::vector<Rational> c(f.size());
  for (std::size_t k = 1; k <= s; ++k) c[k - 1] = ratio(f, g, k, s) - ratio(f, g, k + 1, s);
  return c;
}

HullCertificate outside(Violation v, std::vector<Rational> coefficients = {}) {
  return HullCertificate{Verdict::outside, std::move(coefficients), v};
}

U128 product(std::uint64_t a, std::uint64_t b) { return static_cast<U128>(a) * b; }

}  // namespace

IntVector truncation(const IntVector& g, std::size_t k) {
  if (k < 1 || k > g.size())
    throw std::out_of_range("truncation index " + std::to_string(k) + " outside [1, " + std::to_string(g.size()) + "]");
  return g.resized(k).resized(g.size());
}

void validate_generator(const IntVector& g) {
  if (!g.has_zero_tail_form())
    throw std::invalid_argument("generator has an internal zero at index " + std::to_string(g.support() + 1));
  for (std::size_t k = 1; k <= g.size(); ++k)
    if (g.at(k) > kMaxEntry) throw std::invalid_argument("g entry " + std::to_string(k) + " exceeds INT64_MAX");
}

HullCertificate membership_inequalities(const IntVector& f, const IntVector& g) {
  const std::size_t s = prepare(f, g);
  if (const std::size_t i = first_past_support(f, s); i != 0) return outside({ViolationKind::support, i, 0});
  if (s >= 1 && f.at(1) > g.at(1)) return outside({ViolationKind::first_coordinate, 1, 0});
  for (std::size_t j = 1; j <= s; ++j)
    for (std::size_t i = j + 1; i <= s; ++i)
      if (product(f.at(i), g.at(j)) > product(f.at(j), g.at(i))) return outside({ViolationKind::pair, i, j});
  return HullCertificate{Verdict::inside, solve_coefficients(f, g, s), {}};
}

HullCertificate membership_coefficients(const IntVector& f, const IntVector& g) {
  const std::size_t s = prepare(f, g);
  std::vector<Rational> c = solve_coefficients(f, g, s);
  if (const std::size_t i = first_past_support(f, s); i != 0) return outside({ViolationKind::support, i, 0}, std::move(c));
  // sum c_k telescopes to s_1.
  if (s >= 1 && ratio(f, g, 1, s) > Rational(1)) return outside({ViolationKind::first_coordinate, 1, 0}, std::move(c));
  for (std::size_t k = 1; k < s; ++k)
    if (c[k - 1].sign() < 0) return outside({ViolationKind::pair, k + 1, k}, std::move(c));
  return HullCertificate{Verdict::inside, std::move(c), {}};
}

namespace {

using BigRational = boost::multiprecision::cpp_rational;

template <typename Q>
Q make(const Rational& r);

template <>
Rational make<Rational>(const Rational& r) {
  return r;
}

template <>
BigRational make<BigRational>(const Rational& r) {
  using boost::multiprecision::cpp_int;
  return BigRational(cpp_int(int128_to_string(r.num())), cpp_int(int128_to_string(r.den())));
}

template <typename Q>
Q integer(std::uint64_t v) {
  if constexpr (std::is_same_v<Q, Rational>) {
    return Rational(static_cast<__int128>(v));
  } else {
    return Q(v);
  }
}

template <typename Q>
CertificateCheck check_inside(const IntVector& f, const IntVector& g, const std::vector<Rational>& coefficients) {
  const std::size_t d = f.size();
  std::vector<Q> c;
  c.reserve(d);
  for (const Rational& r : coefficients) c.push_back(make<Q>(r));
  Q total = integer<Q>(0);
  for (std::size_t k = 1; k <= d; ++k) {
    if (c[k - 1] < integer<Q>(0)) return {false, "coefficient c_" + std::to_string(k) + " is negative"};
    total += c[k - 1];
  }
  if (total > integer<Q>(1)) return {false, "coefficients sum above 1"};
  for (std::size_t i = 1; i <= d; ++i) {
    // Coordinate i of sum_k c_k g^k.
    Q coordinate = integer<Q>(0);
    for (std::size_t k = i; k <= d; ++k) coordinate += c[k - 1] * integer<Q>(g.at(i));
    if (!(coordinate == integer<Q>(f.at(i)))) return {false, "combination misses f at coordinate " + std::to_string(i)};
  }
  return {true, ""};
}

}  // namespace

CertificateCheck verify_certificate(const IntVector& f, const IntVector& g, const HullCertificate& cert) {
  const std::size_t d = f.size();
  if (g.size() != d) return {false, "f and g differ in length"};
  if (cert.inside()) {
    if (cert.coefficients.size() != d) return {false, "coefficient vector has the wrong length"};
    try {
      return check_inside<Rational>(f, g, cert.coefficients);
    } catch (const std::overflow_error&) {
      return check_inside<BigRational>(f, g, cert.coefficients);
    }
  }
  const Violation& v = cert.violation;
  switch (v.kind) {
    case ViolationKind::support: {
      if (v.i < 1 || v.i > d) return {false, "support index out of range"};
      if (v.i <= g.support()) return {false, "support index inside the support of g"};
      if (f.at(v.i) == 0) return {false, "f vanishes at the reported support index"};
      return {true, ""};
    }
    case ViolationKind::first_coordinate:
      if (d == 0 || f.at(1) <= g.at(1)) return {false, "f_1 <= g_1 holds"};
      return {true, ""};
    case ViolationKind::pair:
      if (v.j < 1 || v.j >= v.i || v.i > d) return {false, "pair indices out of range"};
      if (product(f.at(v.i), g.at(v.j)) <= product(f.at(v.j), g.at(v.i))) return {false, "reported pair inequality holds"};
      return {true, ""};
    case ViolationKind::none:
      break;
  }
  return {false, "outside certificate names no violation"};
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::none: return "none";
    case ViolationKind::support: return "support";
    case ViolationKind::first_coordinate: return "first_coordinate";
    case ViolationKind::pair: return "pair";
  }
  return "none";
}

namespace {

nlohmann::json int128_json(__int128 v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return int128_to_string(v);
}

}  // namespace

nlohmann::json certificate_to_json(const HullCertificate& cert) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Rational& r : cert.coefficients) coeffs.push_back({{"num", int128_json(r.num())}, {"den", int128_json(r.den())}});
  nlohmann::json j = {{"verdict", cert.inside() ? "inside" : "outside"}, {"coefficients", coeffs}};
  switch (cert.violation.kind) {
    case ViolationKind::none: j["violation"] = nullptr; break;
    case ViolationKind::support: j["violation"] = {{"kind", "support"}, {"index", cert.violation.i}}; break;
    case ViolationKind::first_coordinate: j["violation"] = {{"kind", "first_coordinate"}}; break;
    case ViolationKind::pair: j["violation"] = {{"kind", "pair"}, {"i", cert.violation.i}, {"j", cert.violation.j}}; break;
  }
  return j;
}

}  // namespace turanhull
