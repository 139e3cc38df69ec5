#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schroeder/evolve.hpp"

namespace schroeder {

using Integer = mpz_class;
using Rational = mpq_class;

/// Power series truncated to `order()` coefficients (x^0 .. x^{order-1})
/// with exact rational coefficients. Binary operations truncate to the
/// smaller of the two orders.
class FormalPowerSeries {
 public:
  explicit FormalPowerSeries(std::size_t order = 0);
  explicit FormalPowerSeries(std::vector<Rational> coefficients);
  FormalPowerSeries(std::vector<Rational> coefficients, std::size_t order);

  static FormalPowerSeries constant(const Rational& c, std::size_t order);
  /// c * x^power
  static FormalPowerSeries monomial(const Rational& c, std::size_t power, std::size_t order);
  /// Truncation of a polynomial given by ascending coefficients.
  static FormalPowerSeries polynomial(std::initializer_list<long> coefficients, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  FormalPowerSeries truncated(std::size_t order) const;
  /// Multiplies by x^k, keeping the order.
  FormalPowerSeries mul_x(std::size_t k = 1) const;
  /// Divides by x^k; the order drops by k. Throws OutOfRange if any of the
  /// first k coefficients is nonzero.
  FormalPowerSeries div_x(std::size_t k = 1) const;

  bool is_integral() const;
  /// Throws InternalMismatch when a coefficient is not an integer.
  std::vector<Integer> integer_coefficients() const;

  /// "1 + 3*x + 11*x^2 + O(x^3)"
  std::string to_string(std::string_view var = "x", int exponent_scale = 1) const;

  FormalPowerSeries operator-() const;
  FormalPowerSeries& operator+=(const FormalPowerSeries& rhs);
  FormalPowerSeries& operator-=(const FormalPowerSeries& rhs);
  FormalPowerSeries& operator*=(const Rational& c);

  friend bool operator==(const FormalPowerSeries&, const FormalPowerSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

FormalPowerSeries operator+(FormalPowerSeries a, const FormalPowerSeries& b);
FormalPowerSeries operator-(FormalPowerSeries a, const FormalPowerSeries& b);
FormalPowerSeries operator*(const FormalPowerSeries& a, const FormalPowerSeries& b);
/// Throws DivisionByZeroConstantTerm.
FormalPowerSeries operator/(const FormalPowerSeries& a, const FormalPowerSeries& b);
FormalPowerSeries operator/(const Rational& c, const FormalPowerSeries& b);
FormalPowerSeries operator*(FormalPowerSeries a, const Rational& c);
FormalPowerSeries operator*(const Rational& c, FormalPowerSeries a);
FormalPowerSeries operator+(FormalPowerSeries a, const Rational& c);
FormalPowerSeries operator+(const Rational& c, FormalPowerSeries a);
FormalPowerSeries operator-(FormalPowerSeries a, const Rational& c);
FormalPowerSeries operator-(const Rational& c, const FormalPowerSeries& a);

enum class FpsOp { Add, Mul, Div };
FormalPowerSeries fps_arith(const FormalPowerSeries& a, const FormalPowerSeries& b, FpsOp op);

/// Square root with positive constant term, by Newton iteration doubling
/// the precision each round. Throws NonSquareConstantTerm.
FormalPowerSeries fps_sqrt(const FormalPowerSeries& a);

// Counting numbers.
Integer binomial(long n, long k);
Integer catalan(int n);
/// N(n,k) = C(n,k) C(n,k+1) / n for 0 <= k < n; N(0,0) = 1. Throws OutOfRange.
Integer narayana(int n, int k);
/// Coefficient of x^n in s(x).
Integer little_schroeder(int n);
Integer big_schroeder(int n);
/// ESDPs / OSDPs of length 2n with j specials (closed binomial forms); n >= 1.
Integer esdp_count(int n, int j);
Integer osdp_count(int n, int j);
/// Same counts via the Narayana-binomial sums.
Integer esdp_count_by_narayana(int n, int j);
Integer osdp_count_by_narayana(int n, int j);
/// Sum_j (j+1) * esdp_count(n,j) (LITTLE) or osdp_count (BIG); 1 at n = 0.
Integer hybrid_count_weighted(Flavor flavor, int n);

// Generating functions in x, where a path of length 2n has weight x^n.
FormalPowerSeries sqrt_series(std::size_t order);  // R = sqrt(1 - 6x + x^2)
FormalPowerSeries little_schroeder_series(std::size_t order);  // s = 2 / (1 + x + R)
FormalPowerSeries big_schroeder_series(std::size_t order);     // S = 4 / (1 + x + R) - 1
FormalPowerSeries esdp_series(std::size_t order);  // E, from the ESDP counts
FormalPowerSeries osdp_series(std::size_t order);  // O, from the OSDP counts
/// 2(R + x) / (R (R + x + 1)) = 1 + 2x + 7x^2 + 30x^3 + ...
FormalPowerSeries hybrid_core_factor(std::size_t order);

/// L and B from the product forms built on R.
FormalPowerSeries little_hybrid_product_form(std::size_t order);
FormalPowerSeries big_hybrid_product_form(std::size_t order);
/// L and B from the fully expanded closed forms.
FormalPowerSeries little_hybrid_closed_form(std::size_t order);
FormalPowerSeries big_hybrid_closed_form(std::size_t order);
/// (L, B) solving the pair of decomposition equations given s, S, E, O.
std::pair<FormalPowerSeries, FormalPowerSeries> hybrid_system_solution(std::size_t order);

/// L (LITTLE) or B (BIG). All routes are computed and compared; throws
/// InternalMismatch if they disagree or a coefficient is not an integer.
FormalPowerSeries gf_hybrid(Flavor flavor, std::size_t order);

struct GFCatalog {
  FormalPowerSeries s, S, E, O, L, B, R;
};
GFCatalog gf_catalog(std::size_t order);

/// (1 - y + y^2 - sqrt(1 - 2y - y^2 - 2y^3 + y^4)) / (2y^2) with y = q^2:
/// the conjectured generating function of OSDP lengths over all S_n(231).
FormalPowerSeries conjectured_length_series(std::size_t order);

enum class Identity { Eq1, Eq2, Eq3, Eq4, Eq10 };
std::string_view identity_name(Identity id) noexcept;
Identity parse_identity(std::string_view text);

struct IdentityRow {
  int n = 0;
  int j = -1;  // -1 when the identity has no j parameter
  Integer lhs;
  Integer rhs;
  bool pass = false;
};

struct IdentityReport {
  Identity identity = Identity::Eq1;
  std::vector<IdentityRow> rows;
  bool passed() const;
};

/// EQ1/EQ2: n = 1..n_max. EQ3/EQ4: n = 1..n_max, j = 0..n. EQ10: the
/// coefficient of q^{2m} for m = 0..n_max, which needs S_m(231) for m <= n_max.
IdentityReport check_identity(Identity id, int n_max);

}  // namespace schroeder
