#include <doctest.h>

#include <map>
#include <random>

#include "twoeig/intpoly.hpp"

using namespace twoeig;

TEST_CASE("arithmetic and printing") {
  IntPoly p{-4, -1, 1};  // x^2 - x - 4
  CHECK(p.degree() == 2);
  CHECK(p.is_monic());
  CHECK(p(mpz_class(3)) == 2);
  CHECK(p.to_string() == "x^2 - x - 4");
  CHECK((p * p).degree() == 4);
  CHECK((p - p).is_zero());
  CHECK(IntPoly{0, 0, 0}.is_zero());

  IntPoly x2m1{-1, 0, 1};
  auto q = divide_exact(x2m1, IntPoly{-1, 1});
  REQUIRE(q.has_value());
  CHECK(*q == IntPoly{1, 1});
  CHECK(!divide_exact(IntPoly{1, 1, 1}, IntPoly{-1, 1}).has_value());
}

TEST_CASE("sign evaluation at rationals") {
  IntPoly p{-2, 0, 1};  // x^2 - 2
  CHECK(p.sign_at(mpq_class(3, 2)) == 1);   // 9/4 > 2
  CHECK(p.sign_at(mpq_class(7, 5)) == -1);  // 49/25 < 2
  CHECK(IntPoly{-4, 0, 1}.sign_at(mpq_class(2)) == 0);
}

TEST_CASE("gcd and square-free part") {
  IntPoly a{-1, 1};       // x - 1
  IntPoly b{2, 1};        // x + 2
  IntPoly p = a * a * b;  // (x-1)^2 (x+2)
  IntPoly g = poly_gcd(p, derivative(p));
  CHECK(g == a);
  CHECK(square_free_part(p) == a * b);
  CHECK(poly_gcd(IntPoly{6}, IntPoly{4}) == IntPoly{1});  // contents ignored
  CHECK(poly_gcd(a * b * IntPoly{3}, a * IntPoly{2}) == a);
}

TEST_CASE("root counting, distinct") {
  IntPoly p{-2, 0, 1};  // roots +-sqrt(2)
  CHECK(count_real_roots(p) == 2);
  CHECK(count_roots_above(p, mpq_class(0), true) == 1);
  CHECK(count_roots_above(p, mpq_class(-2), true) == 2);
  CHECK(count_roots_above(p, mpq_class(2), true) == 0);

  // no real roots
  CHECK(count_real_roots(IntPoly{1, 0, 1}) == 0);

  // threshold exactly at a root
  IntPoly q{-6, 11, -6, 1};  // (x-1)(x-2)(x-3)
  CHECK(count_roots_above(q, mpq_class(2), true) == 1);
  CHECK(count_roots_above(q, mpq_class(2), false) == 2);
  CHECK(count_roots_above(q, mpq_class(1, 2), true) == 3);
}

TEST_CASE("root counting with multiplicity") {
  IntPoly a{-1, 1};
  IntPoly p = a * a * a * IntPoly{3, 1};  // (x-1)^3 (x+3)
  CHECK(count_real_roots(p) == 2);
  CHECK(count_real_roots_with_multiplicity(p) == 4);
  CHECK(count_roots_above_with_multiplicity(p, mpq_class(0), true) == 3);
  CHECK(count_roots_above_with_multiplicity(p, mpq_class(1), false) == 3);
  CHECK(count_roots_above_with_multiplicity(p, mpq_class(1), true) == 0);
  CHECK(root_multiplicity_at(p, mpq_class(1)) == 3);
  CHECK(root_multiplicity_at(p, mpq_class(-3)) == 1);
  CHECK(root_multiplicity_at(p, mpq_class(5)) == 0);
}

TEST_CASE("approx_root isolates ordered roots") {
  IntPoly p{-2, 0, 1};
  auto [lo, hi] = approx_root(p, 1);
  CHECK(hi - lo <= mpq_class(1, 1000000000));
  CHECK(lo <= mpq_class(14142135624, 10000000000));
  CHECK(hi >= mpq_class(14142135623, 10000000000));
  auto [lo2, hi2] = approx_root(p, 2);  // contains -sqrt(2) = -1.41421356237...
  CHECK(hi2 - lo2 <= mpq_class(1, 1000000000));
  CHECK(lo2 <= mpq_class(-14142135623, 10000000000));
  CHECK(hi2 >= mpq_class(-14142135624, 10000000000));

  // multiplicity-aware index: (x-1)^2 (x-5), 2nd largest is 1
  IntPoly a{-1, 1};
  IntPoly q = a * a * IntPoly{-5, 1};
  auto [l3, h3] = approx_root(q, 2);
  CHECK(l3 <= 1);
  CHECK(h3 >= 1);
  CHECK_THROWS_AS(approx_root(q, 4), std::invalid_argument);
  CHECK_THROWS_AS(approx_root(IntPoly{1, 0, 1}, 1), std::invalid_argument);
}

TEST_CASE("root counting fuzz with constructed ground truth") {
  // Build polynomials as products of rational linear factors (known roots and
  // multiplicities) and real-rootless quadratics, with random scaling so the
  // leading coefficient and content are arbitrary.
  std::mt19937_64 rng(424242);
  auto rnd = [&](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
  };
  for (int trial = 0; trial < 120; ++trial) {
    std::map<mpq_class, int> roots;  // root -> multiplicity
    IntPoly p{rnd(1, 6) * (rng() % 2 ? 1 : -1)};
    int factors = static_cast<int>(1 + rng() % 4);
    for (int f = 0; f < factors; ++f) {
      long den = rnd(1, 4), num = rnd(-8, 8);
      int mult = static_cast<int>(1 + rng() % 3);
      mpq_class root(num, den);
      root.canonicalize();
      for (int m = 0; m < mult; ++m) p = p * IntPoly{-num, den};
      roots[root] += mult;
    }
    // real-rootless quadratic factors: |b| <= 1, a, c >= 1 keeps b^2 - 4ac < 0
    int quads = static_cast<int>(rng() % 3);
    for (int q = 0; q < quads; ++q) p = p * IntPoly{rnd(1, 9), rnd(-1, 1), rnd(1, 4)};

    int with_mult = 0;
    for (const auto& [root, mult] : roots) with_mult += mult;
    CHECK(count_real_roots_with_multiplicity(p) == with_mult);

    int distinct = static_cast<int>(roots.size());
    CHECK(count_real_roots(p) == distinct);
    for (const auto& [root, mult] : roots) {
      CHECK(root_multiplicity_at(p, root) == mult);
      int above_strict = 0, above_mult = 0;
      for (const auto& [other, om] : roots) {
        if (other > root) {
          ++above_strict;
          above_mult += om;
        }
      }
      CHECK(count_roots_above(p, root, true) == above_strict);
      CHECK(count_roots_above(p, root, false) == above_strict + 1);
      CHECK(count_roots_above_with_multiplicity(p, root, true) == above_mult);
      CHECK(count_roots_above_with_multiplicity(p, root, false) == above_mult + mult);
      // a threshold strictly between this root and the next one above
      mpq_class gap_probe = root + mpq_class(1, 100);
      bool clean = true;
      for (const auto& [other, om] : roots)
        if (other > root && other <= gap_probe) clean = false;
      if (clean) CHECK(count_roots_above_with_multiplicity(p, gap_probe, true) == above_mult);
    }
    // approx_root agrees with the sorted ground truth, multiplicities included
    std::vector<mpq_class> sorted;
    for (const auto& [root, mult] : roots)
      for (int m = 0; m < mult; ++m) sorted.push_back(root);
    std::sort(sorted.rbegin(), sorted.rend());
    for (size_t i = 0; i < sorted.size(); ++i) {
      auto [lo, hi] = approx_root(p, static_cast<int>(i) + 1);
      CHECK(lo <= sorted[i]);
      CHECK(hi >= sorted[i]);
    }
  }
}

TEST_CASE("decimal rendering with directed rounding") {
  mpq_class third(1, 3);
  CHECK(decimal_string(third, 5, Round::Down) == "0.33333");
  CHECK(decimal_string(third, 5, Round::Up) == "0.33334");
  CHECK(decimal_string(mpq_class(-1, 3), 5, Round::Down) == "-0.33334");
  CHECK(decimal_string(mpq_class(-1, 3), 5, Round::Up) == "-0.33333");
  CHECK(decimal_string(mpq_class(5, 2), 3, Round::Down) == "2.500");
  CHECK(decimal_string(mpq_class(2), 0, Round::Down) == "2");
}
