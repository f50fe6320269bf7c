#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace twoeig {

// Polynomial over Z, coefficients lowest degree first, no trailing zeros.
// An empty coefficient vector is the zero polynomial.
struct IntPoly {
  std::vector<mpz_class> c;

  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> lowest_first);

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const mpz_class& lc() const;
  bool is_monic() const { return !c.empty() && c.back() == 1; }

  mpz_class operator()(const mpz_class& x) const;
  // Sign of p(u/v) with v > 0, evaluated homogeneously (no rounding).
  int sign_at(const mpz_class& u, const mpz_class& v) const;
  int sign_at(const mpq_class& x) const;

  void trim();
  bool operator==(const IntPoly&) const = default;
  std::string to_string(const std::string& var = "x") const;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const mpz_class& s);

IntPoly derivative(const IntPoly& p);
mpz_class content(const IntPoly& p);
IntPoly primitive_part(const IntPoly& p);  // divides by content; sign kept

// Remainder of lc(g)^(deg f - deg g + 1) * f modulo g; deg f >= deg g >= 0.
IntPoly pseudo_remainder(const IntPoly& f, const IntPoly& g);
// Quotient when g divides f over Z[x], nullopt otherwise.
std::optional<IntPoly> divide_exact(const IntPoly& f, const IntPoly& g);
// gcd of the primitive parts (contents ignored); primitive, lc > 0.
IntPoly poly_gcd(const IntPoly& f, const IntPoly& g);
IntPoly square_free_part(const IntPoly& p);

// All real roots of p lie in [-B, B].
mpz_class cauchy_root_bound(const IntPoly& p);

// Exact real-root counts via Sturm sequences (primitive-part PRS).
// The plain versions count distinct roots; repeated roots are removed with an
// exact gcd first, so square-free input is not required.
int count_real_roots(const IntPoly& p);
int count_roots_above(const IntPoly& p, const mpq_class& threshold, bool strict);
int count_real_roots_with_multiplicity(const IntPoly& p);
int count_roots_above_with_multiplicity(const IntPoly& p, const mpq_class& threshold,
                                        bool strict);
int root_multiplicity_at(const IntPoly& p, const mpq_class& x);

// Isolating interval of width <= 1e-9 around the which-th largest real root
// (1-based, counted with multiplicity). Throws std::invalid_argument if p has
// fewer real roots than `which`.
std::pair<mpq_class, mpq_class> approx_root(const IntPoly& p, int which);

enum class Round { Down, Up };
// Exact decimal rendering of a rational with the given number of fractional
// digits, rounded toward -inf (Down) or +inf (Up).
std::string decimal_string(const mpq_class& q, int digits, Round mode);

}  // namespace twoeig
