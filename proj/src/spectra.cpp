#include "twoeig/spectra.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <mutex>

#include "twoeig/errors.hpp"

namespace twoeig {

IntMatrix IntMatrix::identity(int order) {
  IntMatrix m(order);
  for (int i = 0; i < order; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::adjacency(const Graph& g) {
  IntMatrix m(g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (g.edge(i, j)) m.at(i, j) = m.at(j, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  assert(x.n == y.n);
  int n = x.n;
  IntMatrix r(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const mpz_class& xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < n; ++j) {
        const mpz_class& ykj = y.at(k, j);
        if (ykj != 0)
          mpz_addmul(r.at(i, j).get_mpz_t(), xik.get_mpz_t(), ykj.get_mpz_t());
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr M_1,
// M_k = A (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k, all divisions exact.

IntPoly char_poly_leverrier(const IntMatrix& m) {
  int n = m.n;
  std::vector<mpz_class> c(static_cast<size_t>(n) + 1, 0);
  c[n] = 1;
  IntMatrix work = m;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      IntMatrix shifted = work;
      for (int i = 0; i < n; ++i) shifted.at(i, i) += c[n - k + 1];
      work = m * shifted;
    }
    mpz_class tr = 0;
    for (int i = 0; i < n; ++i) tr += work.at(i, i);
    assert(mpz_divisible_ui_p(tr.get_mpz_t(), static_cast<unsigned long>(k)));
    c[n - k] = -tr / k;
  }
  return IntPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// Modular route: Hessenberg char poly mod ~62-bit primes, CRT-combined under
// the Hadamard bound |c_{n-k}| <= C(n,k) (sqrt(k) max|a_ij|)^k.

namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 addmod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for n < 3.3e24 with this base set.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Fixed descending sequence of ~62-bit primes, extended on demand.
std::vector<u64> prime_pool_copy(size_t at_least) {
  static std::mutex mutex;
  static std::vector<u64> pool;
  static u64 next_candidate = (u64{1} << 62) - 1;
  std::lock_guard<std::mutex> lock(mutex);
  while (pool.size() < at_least) {
    while (!is_prime_u64(next_candidate)) next_candidate -= 2;
    pool.push_back(next_candidate);
    next_candidate -= 2;
  }
  return {pool.begin(), pool.begin() + static_cast<long>(at_least)};
}

// Char poly of the matrix mod p: similarity reduction to upper Hessenberg,
// then the standard last-column recurrence.
std::vector<u64> char_poly_mod(std::vector<u64> m, int n, u64 p) {
  auto at = [&](int i, int j) -> u64& { return m[static_cast<size_t>(i) * n + j]; };
  for (int j = 0; j + 2 < n; ++j) {
    int piv = -1;
    for (int i = j + 1; i < n; ++i) {
      if (at(i, j)) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != j + 1) {
      for (int k = 0; k < n; ++k) std::swap(at(piv, k), at(j + 1, k));
      for (int k = 0; k < n; ++k) std::swap(at(k, piv), at(k, j + 1));
    }
    u64 inv = invmod(at(j + 1, j), p);
    for (int i = j + 2; i < n; ++i) {
      u64 f = mulmod(at(i, j), inv, p);
      if (!f) continue;
      for (int k = j; k < n; ++k) at(i, k) = submod(at(i, k), mulmod(f, at(j + 1, k), p), p);
      for (int k = 0; k < n; ++k) at(k, j + 1) = addmod(at(k, j + 1), mulmod(f, at(k, i), p), p);
    }
  }

  std::vector<std::vector<u64>> ps(static_cast<size_t>(n) + 1);
  ps[0] = {1};
  for (int r = 1; r <= n; ++r) {
    std::vector<u64> pr(static_cast<size_t>(r) + 1, 0);
    const auto& pm = ps[r - 1];
    u64 hrr = at(r - 1, r - 1);
    for (int i = 0; i < r; ++i) {
      pr[i + 1] = addmod(pr[i + 1], pm[i], p);
      pr[i] = submod(pr[i], mulmod(hrr, pm[i], p), p);
    }
    u64 prod = 1;
    for (int i0 = r - 2; i0 >= 0; --i0) {
      prod = mulmod(prod, at(i0 + 1, i0), p);
      if (!prod) break;
      u64 coef = mulmod(at(i0, r - 1), prod, p);
      if (!coef) continue;
      const auto& pi = ps[i0];
      for (int t = 0; t <= i0; ++t) pr[t] = submod(pr[t], mulmod(coef, pi[t], p), p);
    }
    ps[r] = std::move(pr);
  }
  return ps[n];
}

mpz_class char_poly_coeff_bound(const IntMatrix& m) {
  mpz_class maxabs = 1;
  for (const auto& v : m.a) maxabs = std::max(maxabs, mpz_class(abs(v)));
  mpz_class best = 1;
  for (int k = 1; k <= m.n; ++k) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m.n),
                 static_cast<unsigned long>(k));
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), mpz_class(k).get_mpz_t());
    if (s * s < k) ++s;  // ceil(sqrt(k))
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), mpz_class(s * maxabs).get_mpz_t(),
               static_cast<unsigned long>(k));
    best = std::max(best, mpz_class(binom * pw));
  }
  return best;
}

}  // namespace

IntPoly char_poly_modular(const IntMatrix& m) {
  int n = m.n;
  mpz_class target = 2 * char_poly_coeff_bound(m) + 1;
  std::vector<u64> primes;
  {
    mpz_class prod = 1;
    size_t count = 0;
    while (prod < target) {
      primes = prime_pool_copy(count + 1);
      prod *= static_cast<unsigned long>(primes[count]);
      ++count;
    }
  }

  std::vector<std::vector<u64>> residues;
  residues.reserve(primes.size());
  for (u64 p : primes) {
    std::vector<u64> mm(static_cast<size_t>(n) * n);
    for (size_t i = 0; i < mm.size(); ++i)
      mm[i] = mpz_fdiv_ui(m.a[i].get_mpz_t(), static_cast<unsigned long>(p));
    residues.push_back(char_poly_mod(std::move(mm), n, p));
  }

  std::vector<mpz_class> coeffs(static_cast<size_t>(n) + 1);
  for (int idx = 0; idx <= n; ++idx) {
    mpz_class x = static_cast<unsigned long>(residues[0][static_cast<size_t>(idx)]);
    mpz_class mod = static_cast<unsigned long>(primes[0]);
    for (size_t i = 1; i < primes.size(); ++i) {
      u64 p = primes[i];
      u64 xi = mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p));
      u64 delta = submod(residues[i][static_cast<size_t>(idx)], xi, p);
      u64 minv = invmod(mpz_fdiv_ui(mod.get_mpz_t(), static_cast<unsigned long>(p)), p);
      x += mod * mpz_class(static_cast<unsigned long>(mulmod(delta, minv, p)));
      mod *= static_cast<unsigned long>(p);
    }
    if (x * 2 > mod) x -= mod;
    coeffs[static_cast<size_t>(idx)] = std::move(x);
  }
  return IntPoly(std::move(coeffs));
}

IntPoly char_poly(const IntMatrix& m) {
  return m.n <= 24 ? char_poly_leverrier(m) : char_poly_modular(m);
}

IntPoly char_poly(const Graph& g) { return char_poly(IntMatrix::adjacency(g)); }

// ---------------------------------------------------------------------------

SpectrumSummary strip_pm_one(const IntPoly& cp) {
  if (!cp.is_monic()) throw std::invalid_argument("strip_pm_one needs a monic polynomial");
  SpectrumSummary out;
  IntPoly rem = cp;
  const IntPoly xm1{-1, 1}, xp1{1, 1};
  while (rem.degree() >= 1 && rem(mpz_class(1)) == 0) {
    auto quotient = divide_exact(rem, xm1);
    assert(quotient.has_value());  // integrality is guaranteed, not assumed
    rem = std::move(*quotient);
    ++out.p;
  }
  while (rem.degree() >= 1 && rem(mpz_class(-1)) == 0) {
    auto quotient = divide_exact(rem, xp1);
    assert(quotient.has_value());
    rem = std::move(*quotient);
    ++out.q;
  }
  out.residual = std::move(rem);
  return out;
}

namespace {

bool component_is_complete(const Graph& g, const VertexSet& comp) {
  std::vector<int> vs = comp.vertices();
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (!g.edge(vs[i], vs[j])) return false;
  return true;
}

// Counts the components that are not K2; -1 when some component is not a
// complete graph (so the graph is not a disjoint union of cliques).
int non_k2_clique_components(const Graph& g) {
  int non_k2 = 0;
  for (const VertexSet& comp : connected_components(g)) {
    if (!component_is_complete(g, comp)) return -1;
    if (comp.count() != 2) ++non_k2;
  }
  return non_k2;
}

}  // namespace

Classification classify_spectrum(const Graph& g) {
  Classification out;
  out.summary = strip_pm_one(char_poly(g));
  const IntPoly& res = out.summary.residual;
  switch (res.degree()) {
    case 0: {
      out.kind = SpectrumClass::AllPmOne;
      if (non_k2_clique_components(g) != 0)
        throw internal_consistency_error(
            "graph with all eigenvalues +-1 is not a perfect matching");
      break;
    }
    case 1: {
      out.kind = SpectrumClass::OneExtra;
      out.extra_root = -res.c[0];
      if (non_k2_clique_components(g) != 1)
        throw internal_consistency_error(
            "graph with one extra eigenvalue is not cliques plus a matching");
      break;
    }
    case 2: {
      out.kind = SpectrumClass::TwoExtra;
      mpz_class at_one = res(mpz_class(1)), at_minus_one = res(mpz_class(-1));
      if (at_one < 0 && at_minus_one < 0) {
        TwoEigCertificate cert;
        cert.p = out.summary.p;
        cert.q = out.summary.q;
        cert.t = -res.c[1];
        cert.d = res.c[0];
        if (cert.t * cert.t - 4 * cert.d <= 0)
          throw internal_consistency_error("residual quadratic without two real roots");
        out.certificate = std::move(cert);
      } else {
        if (non_k2_clique_components(g) != 2)
          throw internal_consistency_error(
              "two extra eigenvalues without r>1, s<-1 must be a clique union");
        out.clique_union = true;
      }
      break;
    }
    default:
      out.kind = SpectrumClass::MoreThanTwo;
      break;
  }
  return out;
}

std::optional<TwoEigCertificate> in_class_G(const Graph& g) {
  Classification c = classify_spectrum(g);
  if (!c.certificate.has_value()) return std::nullopt;
  if (!is_connected(g)) return std::nullopt;
  return c.certificate;
}

PsdRankReport psd_rank_check(const Graph& g) {
  std::optional<TwoEigCertificate> cert = in_class_G(g);
  if (!cert)
    throw std::invalid_argument("psd_rank_check requires a member of the class");
  int n = g.order();
  IntMatrix a = IntMatrix::adjacency(g);
  IntMatrix b = a * a;
  for (int i = 0; i < n; ++i) b.at(i, i) -= 1;

  IntPoly cpb = char_poly(b);
  PsdRankReport report;
  report.c1 = -cpb.c[static_cast<size_t>(n) - 1];
  report.c0 = cpb.c[static_cast<size_t>(n) - 2];
  bool shape_ok = true;
  for (int i = 0; i < n - 2; ++i)
    if (cpb.c[static_cast<size_t>(i)] != 0) shape_ok = false;
  report.rank2_psd = shape_ok && report.c1 > 0 && report.c0 > 0;

  // The nonzero eigenvalues must be r^2 - 1 and s^2 - 1.
  mpz_class want_c1 = cert->t * cert->t - 2 * cert->d - 2;
  mpz_class want_c0 = cert->d * cert->d - cert->t * cert->t + 2 * cert->d + 1;
  if (report.c1 != want_c1 || report.c0 != want_c0)
    throw internal_consistency_error("A^2 - I spectrum disagrees with the certificate");

  report.pair_minors_ok = true;
  for (int u = 0; u < n && report.pair_minors_ok; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (b.at(u, u) * b.at(v, v) < b.at(u, v) * b.at(u, v)) {
        report.pair_minors_ok = false;
        break;
      }
    }

  if (!report.rank2_psd)
    throw internal_consistency_error("A^2 - I is not a rank-2 positive semi-definite matrix");
  if (!report.pair_minors_ok)
    throw internal_consistency_error("A^2 - I has a negative 2x2 principal minor");
  return report;
}

}  // namespace twoeig
