#include "twoeig/intpoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace twoeig {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> lowest_first) {
  c.reserve(lowest_first.size());
  for (long v : lowest_first) c.emplace_back(v);
  trim();
}

void IntPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

const mpz_class& IntPoly::lc() const {
  if (c.empty()) throw std::invalid_argument("zero polynomial has no leading coefficient");
  return c.back();
}

mpz_class IntPoly::operator()(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int IntPoly::sign_at(const mpz_class& u, const mpz_class& v) const {
  assert(v > 0);
  // Horner on the homogenized polynomial: sum c[i] u^i v^(n-i) has the sign
  // of p(u/v) since v > 0.
  mpz_class acc = 0, vpow = 1;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * u + *it * vpow;
    if (it + 1 != c.rend()) vpow *= v;
  }
  return sgn(acc);
}

int IntPoly::sign_at(const mpq_class& x) const {
  return sign_at(x.get_num(), x.get_den());
}

std::string IntPoly::to_string(const std::string& var) const {
  if (c.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& a = c[i];
    if (a == 0) continue;
    mpz_class mag = abs(a);
    if (first) {
      if (a < 0) out << "-";
      first = false;
    } else {
      out << (a < 0 ? " - " : " + ");
    }
    if (i == 0 || mag != 1) out << mag.get_str();
    if (i > 0) {
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> r(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> r(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a) {
  std::vector<mpz_class> r(a.c);
  for (auto& v : r) v = -v;
  return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<mpz_class> r(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const mpz_class& s) {
  if (s == 0) return IntPoly();
  std::vector<mpz_class> r(a.c);
  for (auto& v : r) v *= s;
  return IntPoly(std::move(r));
}

IntPoly derivative(const IntPoly& p) {
  if (p.degree() <= 0) return IntPoly();
  std::vector<mpz_class> r(p.c.size() - 1);
  for (size_t i = 1; i < p.c.size(); ++i) r[i - 1] = p.c[i] * mpz_class(static_cast<long>(i));
  return IntPoly(std::move(r));
}

mpz_class content(const IntPoly& p) {
  mpz_class g = 0;
  for (const auto& v : p.c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  mpz_class g = content(p);
  if (g == 1) return p;
  std::vector<mpz_class> r(p.c.size());
  for (size_t i = 0; i < p.c.size(); ++i) r[i] = p.c[i] / g;
  return IntPoly(std::move(r));
}

IntPoly pseudo_remainder(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("pseudo_remainder by zero");
  if (f.degree() < g.degree()) return f;
  IntPoly r = f;
  const mpz_class& glc = g.lc();
  int e = f.degree() - g.degree() + 1;
  while (!r.is_zero() && r.degree() >= g.degree()) {
    int shift = r.degree() - g.degree();
    mpz_class rlc = r.lc();
    std::vector<mpz_class> nr(r.c.size(), 0);
    for (size_t i = 0; i + 1 < r.c.size(); ++i) nr[i] = r.c[i] * glc;
    for (int i = 0; i < g.degree(); ++i) nr[i + shift] -= rlc * g.c[i];
    nr.back() = 0;
    r = IntPoly(std::move(nr));
    --e;
  }
  if (e > 0) {
    mpz_class mult;
    mpz_pow_ui(mult.get_mpz_t(), glc.get_mpz_t(), static_cast<unsigned long>(e));
    r = r * mult;
  }
  return r;
}

std::optional<IntPoly> divide_exact(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) return std::nullopt;
  if (f.is_zero()) return IntPoly();
  if (f.degree() < g.degree()) return std::nullopt;
  std::vector<mpz_class> rem(f.c);
  std::vector<mpz_class> quo(f.degree() - g.degree() + 1, 0);
  for (int k = f.degree() - g.degree(); k >= 0; --k) {
    mpz_class& top = rem[k + g.degree()];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), g.lc().get_mpz_t())) return std::nullopt;
    mpz_class q = top / g.lc();
    quo[k] = q;
    for (int i = 0; i <= g.degree(); ++i) rem[k + i] -= q * g.c[i];
  }
  for (const auto& v : rem)
    if (v != 0) return std::nullopt;
  return IntPoly(std::move(quo));
}

IntPoly poly_gcd(const IntPoly& f, const IntPoly& g) {
  IntPoly a = primitive_part(f), b = primitive_part(g);
  if (a.is_zero()) std::swap(a, b);
  if (b.is_zero()) {
    if (!a.is_zero() && a.lc() < 0) a = -a;
    return a;
  }
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = primitive_part(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero() && a.lc() < 0) a = -a;
  return a;
}

IntPoly square_free_part(const IntPoly& p) {
  if (p.degree() <= 1) return primitive_part(p);
  IntPoly g = poly_gcd(p, derivative(p));
  if (g.degree() == 0) return primitive_part(p);
  auto q = divide_exact(primitive_part(p), g);
  assert(q.has_value());
  return primitive_part(*q);
}

mpz_class cauchy_root_bound(const IntPoly& p) {
  if (p.degree() < 1) return 1;
  mpz_class maxc = 0;
  for (int i = 0; i < p.degree(); ++i) maxc = std::max(maxc, mpz_class(abs(p.c[i])));
  mpz_class lc = abs(p.lc());
  // B = 1 + ceil(maxc / lc)
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), maxc.get_mpz_t(), lc.get_mpz_t());
  return q + 1;
}

namespace {

// Sturm chain via primitive-part PRS. Each p_{i+1} is a positive multiple of
// -(p_{i-1} mod p_i), so sign variations behave as in the classical chain.
class SturmChain {
 public:
  explicit SturmChain(const IntPoly& f) {
    seq_.push_back(primitive_part(f));
    IntPoly d = derivative(f);
    if (d.is_zero()) return;
    seq_.push_back(primitive_part(d));
    while (true) {
      const IntPoly& a = seq_[seq_.size() - 2];
      const IntPoly& b = seq_.back();
      if (b.degree() < 0) break;
      if (a.degree() < b.degree()) break;
      IntPoly r = pseudo_remainder(a, b);
      if (r.is_zero()) break;
      // prem multiplied a by lc(b)^(delta+1); flip once more if that factor
      // was negative so the result is a positive multiple of the remainder.
      int delta = a.degree() - b.degree();
      bool mult_negative = (b.lc() < 0) && ((delta + 1) % 2 == 1);
      IntPoly next = primitive_part(r);
      if (!mult_negative) next = -next;
      seq_.push_back(std::move(next));
      if (seq_.back().degree() == 0) break;
    }
  }

  int variations_at(const mpq_class& x) const {
    int var = 0, prev = 0;
    for (const auto& p : seq_) {
      int s = p.is_zero() ? 0 : p.sign_at(x);
      if (s != 0) {
        if (prev != 0 && s != prev) ++var;
        prev = s;
      }
    }
    return var;
  }

  int variations_at_pos_inf() const {
    int var = 0, prev = 0;
    for (const auto& p : seq_) {
      if (p.is_zero()) continue;
      int s = sgn(p.lc());
      if (prev != 0 && s != prev) ++var;
      prev = s;
    }
    return var;
  }

  // Distinct roots of the (square-free) polynomial in (a, +inf); requires
  // p(a) != 0.
  int roots_above(const mpq_class& a) const {
    return variations_at(a) - variations_at_pos_inf();
  }

 private:
  std::vector<IntPoly> seq_;
};

// Removes the factor (den*x - num) from p; p(num/den) must be 0.
IntPoly deflate_rational_root(const IntPoly& p, const mpz_class& num, const mpz_class& den) {
  int n = p.degree();
  std::vector<mpz_class> q(n, 0);
  // p = (den*x - num) * q: top-down synthetic division, every step exact
  // because num/den is a root (Gauss's lemma).
  mpz_class cur = p.c[n];
  for (int i = n - 1; i >= 0; --i) {
    assert(mpz_divisible_p(cur.get_mpz_t(), den.get_mpz_t()));
    q[i] = cur / den;
    cur = p.c[i] + num * q[i];
  }
  assert(cur == 0);
  return IntPoly(std::move(q));
}

// Layered square-free decomposition: layers[0] is the square-free part of p,
// layers[1] the square-free part of gcd(p, p'), etc. A root of multiplicity m
// appears in exactly the first m layers.
std::vector<IntPoly> square_free_layers(const IntPoly& p) {
  std::vector<IntPoly> layers;
  IntPoly cur = primitive_part(p);
  while (cur.degree() >= 1) {
    IntPoly g = poly_gcd(cur, derivative(cur));
    auto q = divide_exact(cur, g);
    assert(q.has_value());
    layers.push_back(primitive_part(*q));
    cur = std::move(g);
  }
  return layers;
}

// Distinct roots of square-free q strictly above / at-or-above the threshold.
int count_above_squarefree(const IntPoly& q, const mpq_class& thr, bool strict) {
  if (q.degree() < 1) return 0;
  IntPoly work = q;
  bool root_at_thr = false;
  if (work.sign_at(thr) == 0) {
    root_at_thr = true;
    mpq_class t = thr;
    t.canonicalize();
    work = deflate_rational_root(work, t.get_num(), t.get_den());
  }
  int above = work.degree() >= 1 ? SturmChain(work).roots_above(thr) : 0;
  return above + ((root_at_thr && !strict) ? 1 : 0);
}

}  // namespace

int count_roots_above(const IntPoly& p, const mpq_class& threshold, bool strict) {
  if (p.is_zero()) throw std::invalid_argument("root count of zero polynomial");
  return count_above_squarefree(square_free_part(p), threshold, strict);
}

int count_real_roots(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("root count of zero polynomial");
  IntPoly q = square_free_part(p);
  if (q.degree() < 1) return 0;
  mpq_class below(-cauchy_root_bound(q) - 1);
  return count_above_squarefree(q, below, true);
}

int count_roots_above_with_multiplicity(const IntPoly& p, const mpq_class& threshold,
                                        bool strict) {
  if (p.is_zero()) throw std::invalid_argument("root count of zero polynomial");
  int total = 0;
  for (const IntPoly& layer : square_free_layers(p))
    total += count_above_squarefree(layer, threshold, strict);
  return total;
}

int count_real_roots_with_multiplicity(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("root count of zero polynomial");
  mpq_class below(-cauchy_root_bound(p) - 1);
  return count_roots_above_with_multiplicity(p, below, true);
}

int root_multiplicity_at(const IntPoly& p, const mpq_class& x) {
  return count_roots_above_with_multiplicity(p, x, false) -
         count_roots_above_with_multiplicity(p, x, true);
}

std::pair<mpq_class, mpq_class> approx_root(const IntPoly& p, int which) {
  if (p.is_zero() || which < 1 || which > p.degree())
    throw std::invalid_argument("approx_root: index out of range");
  std::vector<IntPoly> layers = square_free_layers(p);
  std::vector<SturmChain> chains;
  chains.reserve(layers.size());
  for (const auto& l : layers) chains.emplace_back(l);

  auto count_above = [&](const mpq_class& x) {
    int total = 0;
    for (size_t i = 0; i < layers.size(); ++i) {
      if (layers[i].degree() < 1) continue;
      if (layers[i].sign_at(x) == 0) {
        total += count_above_squarefree(layers[i], x, true);
      } else {
        total += chains[i].roots_above(x);
      }
    }
    return total;
  };

  mpz_class bound = cauchy_root_bound(p) + 1;
  mpq_class lo(-bound), hi(bound);
  if (count_above(lo) < which)
    throw std::invalid_argument("approx_root: fewer real roots than requested index");
  const mpq_class eps(1, 1000000000);
  while (hi - lo > eps) {
    mpq_class mid = (lo + hi) / 2;
    if (count_above(mid) >= which)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

std::string decimal_string(const mpq_class& q, int digits, Round mode) {
  mpz_class num = q.get_num(), den = q.get_den();
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class scaled = num * scale;
  mpz_class v;
  if (mode == Round::Down)
    mpz_fdiv_q(v.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  else
    mpz_cdiv_q(v.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  bool neg = v < 0;
  mpz_class mag = abs(v);
  mpz_class ip = mag / scale, fp = mag % scale;
  std::string out = neg ? "-" : "";
  out += ip.get_str();
  if (digits > 0) {
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
    out += "." + frac;
  }
  return out;
}

}  // namespace twoeig
