#include "schroeder/series.hpp"

#include <algorithm>

#include "schroeder/errors.hpp"
#include "schroeder/permutations.hpp"

namespace schroeder {

// ---------------------------------------------------------------------------
// FormalPowerSeries

FormalPowerSeries::FormalPowerSeries(std::size_t order) : coeffs_(order) {}

FormalPowerSeries::FormalPowerSeries(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {}

FormalPowerSeries::FormalPowerSeries(std::vector<Rational> coefficients, std::size_t order)
    : coeffs_(std::move(coefficients)) {
  coeffs_.resize(order);
}

FormalPowerSeries FormalPowerSeries::constant(const Rational& c, std::size_t order) {
  return monomial(c, 0, order);
}

FormalPowerSeries FormalPowerSeries::monomial(const Rational& c, std::size_t power, std::size_t order) {
  FormalPowerSeries out(order);
  if (power < order) out.coeffs_[power] = c;
  return out;
}

FormalPowerSeries FormalPowerSeries::polynomial(std::initializer_list<long> coefficients,
                                                std::size_t order) {
  FormalPowerSeries out(order);
  std::size_t i = 0;
  for (long c : coefficients) {
    if (i < order) out.coeffs_[i] = c;
    ++i;
  }
  return out;
}

FormalPowerSeries FormalPowerSeries::truncated(std::size_t order) const {
  return FormalPowerSeries(coeffs_, std::min(order, coeffs_.size()));
}

FormalPowerSeries FormalPowerSeries::mul_x(std::size_t k) const {
  FormalPowerSeries out(order());
  for (std::size_t i = k; i < order(); ++i) out.coeffs_[i] = coeffs_[i - k];
  return out;
}

FormalPowerSeries FormalPowerSeries::div_x(std::size_t k) const {
  if (k > order()) fail(ErrorCode::OutOfRange, "division by x^k beyond the truncation order");
  for (std::size_t i = 0; i < k; ++i)
    if (coeffs_[i] != 0) fail(ErrorCode::OutOfRange, "series is not divisible by x^k");
  return FormalPowerSeries(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k),
                                                 coeffs_.end()));
}

bool FormalPowerSeries::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

std::vector<Integer> FormalPowerSeries::integer_coefficients() const {
  std::vector<Integer> out;
  out.reserve(order());
  for (std::size_t i = 0; i < order(); ++i) {
    if (coeffs_[i].get_den() != 1)
      fail(ErrorCode::InternalMismatch, "coefficient " + std::to_string(i) + " is " +
                                            coeffs_[i].get_str() + ", not an integer");
    out.push_back(coeffs_[i].get_num());
  }
  return out;
}

std::string FormalPowerSeries::to_string(std::string_view var, int exponent_scale) const {
  std::string out;
  for (std::size_t i = 0; i < order(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const long e = static_cast<long>(i) * exponent_scale;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool show_coeff = e == 0 || mag != 1;
    if (show_coeff) out += mag.get_str();
    if (e > 0) {
      if (show_coeff) out += "*";
      out += var;
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  if (out.empty()) out = "0";
  out += " + O(";
  out += var;
  out += "^" + std::to_string(static_cast<long>(order()) * exponent_scale) + ")";
  return out;
}

FormalPowerSeries FormalPowerSeries::operator-() const {
  FormalPowerSeries out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

FormalPowerSeries& FormalPowerSeries::operator+=(const FormalPowerSeries& rhs) {
  coeffs_.resize(std::min(order(), rhs.order()));
  for (std::size_t i = 0; i < order(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

FormalPowerSeries& FormalPowerSeries::operator-=(const FormalPowerSeries& rhs) {
  coeffs_.resize(std::min(order(), rhs.order()));
  for (std::size_t i = 0; i < order(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

FormalPowerSeries& FormalPowerSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

FormalPowerSeries operator+(FormalPowerSeries a, const FormalPowerSeries& b) { return a += b; }
FormalPowerSeries operator-(FormalPowerSeries a, const FormalPowerSeries& b) { return a -= b; }

FormalPowerSeries operator*(const FormalPowerSeries& a, const FormalPowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
  }
  return FormalPowerSeries(std::move(out));
}

FormalPowerSeries operator/(const FormalPowerSeries& a, const FormalPowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  if (n == 0) return FormalPowerSeries(0);
  if (b[0] == 0) fail(ErrorCode::DivisionByZeroConstantTerm);
  std::vector<Rational> q(n);
  const Rational inv = 1 / b[0];
  for (std::size_t i = 0; i < n; ++i) {
    Rational acc = a[i];
    for (std::size_t k = 1; k <= i; ++k) acc -= b[k] * q[i - k];
    q[i] = acc * inv;
  }
  return FormalPowerSeries(std::move(q));
}

FormalPowerSeries operator/(const Rational& c, const FormalPowerSeries& b) {
  return FormalPowerSeries::constant(c, b.order()) / b;
}

FormalPowerSeries operator*(FormalPowerSeries a, const Rational& c) { return a *= c; }
FormalPowerSeries operator*(const Rational& c, FormalPowerSeries a) { return a *= c; }

FormalPowerSeries operator+(FormalPowerSeries a, const Rational& c) {
  return a + FormalPowerSeries::constant(c, a.order());
}
FormalPowerSeries operator+(const Rational& c, FormalPowerSeries a) { return std::move(a) + c; }
FormalPowerSeries operator-(FormalPowerSeries a, const Rational& c) {
  return a - FormalPowerSeries::constant(c, a.order());
}
FormalPowerSeries operator-(const Rational& c, const FormalPowerSeries& a) {
  return FormalPowerSeries::constant(c, a.order()) - a;
}

FormalPowerSeries fps_arith(const FormalPowerSeries& a, const FormalPowerSeries& b, FpsOp op) {
  switch (op) {
    case FpsOp::Add: return a + b;
    case FpsOp::Mul: return a * b;
    case FpsOp::Div: return a / b;
  }
  return a;
}

FormalPowerSeries fps_sqrt(const FormalPowerSeries& a) {
  if (a.order() == 0) return a;
  const Rational& c0 = a[0];
  if (c0 <= 0 || !mpz_perfect_square_p(c0.get_num_mpz_t()) ||
      !mpz_perfect_square_p(c0.get_den_mpz_t()))
    fail(ErrorCode::NonSquareConstantTerm, c0.get_str());
  Rational root(sqrt(c0.get_num()), sqrt(c0.get_den()));
  root.canonicalize();

  FormalPowerSeries y = FormalPowerSeries::constant(root, 1);
  const Rational half(1, 2);
  for (std::size_t prec = 1; prec < a.order();) {
    prec = std::min(2 * prec, a.order());
    FormalPowerSeries wide(y.coefficients(), prec);
    y = (wide + a.truncated(prec) / wide) * half;
  }
  return y;
}

// ---------------------------------------------------------------------------
// Counting numbers

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer catalan(int n) {
  if (n < 0) fail(ErrorCode::OutOfRange, "catalan(" + std::to_string(n) + ")");
  return binomial(2L * n, n) / (n + 1);
}

Integer narayana(int n, int k) {
  if (n == 0 && k == 0) return 1;
  if (n < 1 || k < 0 || k >= n)
    fail(ErrorCode::OutOfRange, "narayana(" + std::to_string(n) + "," + std::to_string(k) + ")");
  return binomial(n, k) * binomial(n, k + 1) / n;
}

Integer little_schroeder(int n) {
  if (n < 0) fail(ErrorCode::OutOfRange, "little_schroeder(" + std::to_string(n) + ")");
  return little_schroeder_series(static_cast<std::size_t>(n) + 1).integer_coefficients().back();
}

Integer big_schroeder(int n) {
  if (n < 0) fail(ErrorCode::OutOfRange, "big_schroeder(" + std::to_string(n) + ")");
  return n == 0 ? Integer(1) : Integer(2 * little_schroeder(n));
}

namespace {

void check_nj(const char* what, int n, int j) {
  if (n < 1 || j < 0)
    fail(ErrorCode::OutOfRange,
         std::string(what) + "(" + std::to_string(n) + "," + std::to_string(j) + ")");
}

Integer exact_div(const Integer& num, long den) {
  Integer q = num / den;
  if (q * den != num) fail(ErrorCode::InternalMismatch, "inexact division");
  return q;
}

}  // namespace

Integer esdp_count(int n, int j) {
  check_nj("esdp_count", n, j);
  if (j > n) return 0;
  return exact_div(binomial(n, j) * binomial(2L * n - j, n + 1), n);
}

Integer osdp_count(int n, int j) {
  check_nj("osdp_count", n, j);
  if (j > n) return 0;
  return exact_div(binomial(n, j) * binomial(2L * n - j, n), n - j + 1);
}

Integer esdp_count_by_narayana(int n, int j) {
  check_nj("esdp_count_by_narayana", n, j);
  Integer sum = 0;
  for (int k = 0; k < n; ++k) sum += narayana(n, k) * binomial(k, j);
  return sum;
}

Integer osdp_count_by_narayana(int n, int j) {
  check_nj("osdp_count_by_narayana", n, j);
  Integer sum = 0;
  for (int k = 0; k < n; ++k) sum += narayana(n, k) * binomial(k + 1, j);
  return sum;
}

Integer hybrid_count_weighted(Flavor flavor, int n) {
  if (n < 0) fail(ErrorCode::OutOfRange, "hybrid_count_weighted n < 0");
  if (n == 0) return 1;
  Integer sum = 0;
  for (int j = 0; j <= n; ++j)
    sum += (j + 1) * (flavor == Flavor::Little ? esdp_count(n, j) : osdp_count(n, j));
  return sum;
}

// ---------------------------------------------------------------------------
// Generating functions

namespace {

using FPS = FormalPowerSeries;

FPS x_series(std::size_t order) { return FPS::monomial(1, 1, order); }

FPS counts_series(std::size_t order, Integer (*count)(int, int)) {
  FPS out(order);
  std::vector<Rational> c(order);
  for (std::size_t n = 0; n < order; ++n) {
    if (n == 0) {
      c[n] = 1;
      continue;
    }
    Integer total = 0;
    for (int j = 0; j <= static_cast<int>(n); ++j) total += count(static_cast<int>(n), j);
    c[n] = Rational(total);
  }
  return FPS(std::move(c));
}

void require_equal(const FPS& a, const FPS& b, const std::string& what) {
  if (a != b) fail(ErrorCode::InternalMismatch, what);
}

}  // namespace

FormalPowerSeries sqrt_series(std::size_t order) {
  return fps_sqrt(FPS::polynomial({1, -6, 1}, order));
}

FormalPowerSeries little_schroeder_series(std::size_t order) {
  const FPS R = sqrt_series(order);
  return FPS::constant(2, order) / (1 + x_series(order) + R);
}

FormalPowerSeries big_schroeder_series(std::size_t order) {
  const FPS R = sqrt_series(order);
  return FPS::constant(4, order) / (1 + x_series(order) + R) - 1;
}

FormalPowerSeries esdp_series(std::size_t order) { return counts_series(order, esdp_count); }
FormalPowerSeries osdp_series(std::size_t order) { return counts_series(order, osdp_count); }

FormalPowerSeries hybrid_core_factor(std::size_t order) {
  const FPS R = sqrt_series(order);
  const FPS x = x_series(order);
  return 2 * (R + x) / (R * (R + x + 1));
}

FormalPowerSeries little_hybrid_product_form(std::size_t order) {
  const FPS R = sqrt_series(order);
  const FPS x = x_series(order);
  const Rational half(1, 2);
  return (R + 1 - x) * half * hybrid_core_factor(order) * (2 / (R + x + 1));
}

FormalPowerSeries big_hybrid_product_form(std::size_t order) {
  const FPS R = sqrt_series(order);
  const FPS x = x_series(order);
  const Rational half(1, 2);
  const Rational three_halves(3, 2);
  const FPS head = (R + 1 - x) * half - 1 + x - R * (R + x) * half + three_halves - three_halves * x;
  return head * hybrid_core_factor(order) * (2 / (R + x + 1));
}

FormalPowerSeries little_hybrid_closed_form(std::size_t order) {
  const FPS R = sqrt_series(order);
  const FPS x = x_series(order);
  const FPS numerator = 1 - 5 * x + R;
  const FPS one_minus_x = 1 - x;
  const FPS denominator = (one_minus_x * one_minus_x + (x + 1) * R) * R;
  return numerator / denominator;
}

FormalPowerSeries big_hybrid_closed_form(std::size_t order) {
  // The numerator vanishes at x = 0, so compute one extra term and divide by x.
  const FPS R1 = sqrt_series(order + 1);
  const FPS x1 = x_series(order + 1);
  const FPS numerator = (7 * x1 - 2 * x1 * x1 - 1 + R1).div_x(1);
  const FPS R = sqrt_series(order);
  return numerator / (2 * R) - 1;
}

std::pair<FormalPowerSeries, FormalPowerSeries> hybrid_system_solution(std::size_t order) {
  const FPS s = little_schroeder_series(order);
  const FPS S = big_schroeder_series(order);
  const FPS E = esdp_series(order);
  const FPS O = osdp_series(order);
  const FPS x = x_series(order);

  // L = (1 + x(B - S)E) / (1 - xS)             = a1 + b1 B
  // B = (1 + xLO + x(L - s)O) / (1 - x - xS)   = a2 + b2 L
  const FPS little_den = 1 - x * S;
  const FPS a1 = (1 - x * S * E) / little_den;
  const FPS b1 = x * E / little_den;
  const FPS big_den = 1 - x - x * S;
  const FPS a2 = (1 - x * s * O) / big_den;
  const FPS b2 = 2 * x * O / big_den;

  FPS L = (a1 + b1 * a2) / (1 - b1 * b2);
  FPS B = a2 + b2 * L;
  return {std::move(L), std::move(B)};
}

FormalPowerSeries gf_hybrid(Flavor flavor, std::size_t order) {
  if (order < 1) fail(ErrorCode::OutOfRange, "order must be at least 1");
  const auto [L, B] = hybrid_system_solution(order);
  if (flavor == Flavor::Little) {
    const FPS product = little_hybrid_product_form(order);
    require_equal(product, little_hybrid_closed_form(order), "L: product form vs closed form");
    require_equal(product, L, "L: closed form vs decomposition system");
    product.integer_coefficients();
    return product;
  }
  const FPS product = big_hybrid_product_form(order);
  require_equal(product, big_hybrid_closed_form(order), "B: product form vs closed form");
  require_equal(product, B, "B: closed form vs decomposition system");
  product.integer_coefficients();
  return product;
}

GFCatalog gf_catalog(std::size_t order) {
  GFCatalog c;
  c.R = sqrt_series(order);
  c.s = little_schroeder_series(order);
  c.S = big_schroeder_series(order);
  c.E = esdp_series(order);
  c.O = osdp_series(order);
  c.L = gf_hybrid(Flavor::Little, order);
  c.B = gf_hybrid(Flavor::Big, order);
  return c;
}

FormalPowerSeries conjectured_length_series(std::size_t order) {
  const std::size_t wide = order + 2;
  const FPS y = x_series(wide);
  const FPS radicand = FPS::polynomial({1, -2, -1, -2, 1}, wide);
  const FPS numerator = 1 - y + y * y - fps_sqrt(radicand);
  return numerator.div_x(2) * Rational(1, 2);
}

// ---------------------------------------------------------------------------
// Identity checks

std::string_view identity_name(Identity id) noexcept {
  switch (id) {
    case Identity::Eq1: return "EQ1";
    case Identity::Eq2: return "EQ2";
    case Identity::Eq3: return "EQ3";
    case Identity::Eq4: return "EQ4";
    case Identity::Eq10: return "EQ10";
  }
  return "?";
}

Identity parse_identity(std::string_view text) {
  for (Identity id : {Identity::Eq1, Identity::Eq2, Identity::Eq3, Identity::Eq4, Identity::Eq10}) {
    std::string lower(identity_name(id));
    std::transform(lower.begin(), lower.end(), lower.begin(), ::tolower);
    if (text == identity_name(id) || text == lower) return id;
  }
  fail(ErrorCode::OutOfRange, "unknown identity '" + std::string(text) + "'");
}

bool IdentityReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const IdentityRow& r) { return r.pass; });
}

IdentityReport check_identity(Identity id, int n_max) {
  if (n_max < 1) fail(ErrorCode::OutOfRange, "n_max must be at least 1");
  IdentityReport report;
  report.identity = id;
  const auto add = [&](int n, int j, Integer lhs, Integer rhs) {
    const bool pass = lhs == rhs;
    report.rows.push_back({n, j, std::move(lhs), std::move(rhs), pass});
  };
  const auto order = static_cast<std::size_t>(n_max) + 1;

  switch (id) {
    case Identity::Eq1:
    case Identity::Eq2: {
      const auto series = (id == Identity::Eq1 ? little_schroeder_series(order)
                                               : big_schroeder_series(order))
                              .integer_coefficients();
      const int extra = id == Identity::Eq1 ? 0 : 1;
      for (int n = 1; n <= n_max; ++n) {
        Integer sum = 0;
        for (int k = 0; k < n; ++k) {
          Integer pow2;
          mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(k + extra));
          sum += narayana(n, k) * pow2;
        }
        add(n, -1, series[static_cast<std::size_t>(n)], sum);
      }
      break;
    }
    case Identity::Eq3:
    case Identity::Eq4:
      for (int n = 1; n <= n_max; ++n)
        for (int j = 0; j <= n; ++j) {
          if (id == Identity::Eq3)
            add(n, j, esdp_count_by_narayana(n, j), esdp_count(n, j));
          else
            add(n, j, osdp_count_by_narayana(n, j), osdp_count(n, j));
        }
      break;
    case Identity::Eq10: {
      const auto closed = conjectured_length_series(order).integer_coefficients();
      std::vector<Integer> aggregated(order, 0);
      for (int n = 0; n <= n_max; ++n)
        for (const auto& [len, count] : length_distribution(n).counts) {
          const auto m = static_cast<std::size_t>(len / 2);
          if (m < order) aggregated[m] += Integer(static_cast<unsigned long>(count));
        }
      for (int m = 0; m <= n_max; ++m)
        add(m, -1, closed[static_cast<std::size_t>(m)], aggregated[static_cast<std::size_t>(m)]);
      break;
    }
  }
  return report;
}

}  // namespace schroeder
