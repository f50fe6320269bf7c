#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "twoeig/graph.hpp"
#include "twoeig/intpoly.hpp"

namespace twoeig {

struct IntMatrix {
  int n = 0;
  std::vector<mpz_class> a;  // row-major

  IntMatrix() = default;
  explicit IntMatrix(int order) : n(order), a(static_cast<size_t>(order) * order, 0) {}
  static IntMatrix identity(int order);
  static IntMatrix adjacency(const Graph& g);

  mpz_class& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const mpz_class& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);

// det(xI - M), exact over Z. The default dispatches between the two schemes
// below on order: Faddeev-LeVerrier for small matrices, CRT reconstruction
// from Hessenberg char polys over word-size prime fields for large ones.
IntPoly char_poly(const IntMatrix& m);
IntPoly char_poly(const Graph& g);
IntPoly char_poly_leverrier(const IntMatrix& m);
IntPoly char_poly_modular(const IntMatrix& m);

// (x-1)^p (x+1)^q * residual with p, q maximal.
struct SpectrumSummary {
  long p = 0;
  long q = 0;
  IntPoly residual;

  bool operator==(const SpectrumSummary&) const = default;
};

SpectrumSummary strip_pm_one(const IntPoly& cp);

// Witness that the two eigenvalues r > s different from +-1 satisfy r > 1 and
// s < -1: they are the roots of x^2 - t x + d.
struct TwoEigCertificate {
  long p = 0;
  long q = 0;
  mpz_class t;
  mpz_class d;

  bool operator==(const TwoEigCertificate&) const = default;
};

enum class SpectrumClass { AllPmOne, OneExtra, TwoExtra, MoreThanTwo };

struct Classification {
  SpectrumClass kind = SpectrumClass::MoreThanTwo;
  SpectrumSummary summary;
  std::optional<mpz_class> extra_root;           // OneExtra: the integer root
  std::optional<TwoEigCertificate> certificate;  // TwoExtra with r > 1, s < -1
  bool clique_union = false;                     // TwoExtra, union-of-cliques case
};

// Classifies by residual degree and verifies the structural consequence for
// each class (throws internal_consistency_error if the structure check that
// the theory guarantees fails).
Classification classify_spectrum(const Graph& g);

// Present iff g is connected with exactly two eigenvalues r > 1 and s < -1
// besides +-1.
std::optional<TwoEigCertificate> in_class_G(const Graph& g);

struct PsdRankReport {
  mpz_class c1;  // nonzero part of char_poly(A^2 - I) is x^2 - c1 x + c0
  mpz_class c0;
  bool rank2_psd = false;
  bool pair_minors_ok = false;
};

// Exact verification that A^2 - I has rank 2 and is positive semi-definite,
// plus the 2x2 principal-minor conditions. Requires in_class_G(g); throws
// internal_consistency_error if any check fails.
PsdRankReport psd_rank_check(const Graph& g);

}  // namespace twoeig
