#include "twoeig/families.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>

namespace twoeig {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void validate(const FamilySpec& spec) {
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CaseI>) {
          require(s.m >= 3, "case (i) needs m >= 3");
        } else if constexpr (std::is_same_v<T, CaseII>) {
          require(s.a >= 1 && s.k >= 1, "case (ii) needs a >= 1, k >= 1");
          require(s.a == 1 || s.k >= 2, "case (ii) needs k >= 2 unless a = 1");
        } else if constexpr (std::is_same_v<T, CaseIII>) {
          require(s.l >= s.m && s.m >= 2, "case (iii) needs l >= m >= 2");
        } else if constexpr (std::is_same_v<T, CaseIV>) {
          require(s.variant == 1 || s.variant == 2, "case (iv) has variants 1 and 2");
        } else if constexpr (std::is_same_v<T, CaseV>) {
          bool known = (s.a == 6 && s.b == 5) || (s.a == 4 && s.b == 6) || (s.a == 3 && s.b == 8);
          require(known, "case (v) needs (a,b) in {(6,5),(4,6),(3,8)}");
        } else if constexpr (std::is_same_v<T, CaseVI>) {
          bool known = (s.a == 3 && s.m == 5) || (s.a == 4 && s.m == 4);
          require(known, "case (vi) needs (a,m) in {(3,5),(4,4)}");
        }
      },
      spec);
}

void add_clique(Graph& g, long lo, long count) {
  for (long i = 0; i < count; ++i)
    for (long j = i + 1; j < count; ++j)
      g.add_edge(static_cast<int>(lo + i), static_cast<int>(lo + j));
}

void add_join(Graph& g, long lo1, long count1, long lo2, long count2) {
  for (long i = 0; i < count1; ++i)
    for (long j = 0; j < count2; ++j)
      g.add_edge(static_cast<int>(lo1 + i), static_cast<int>(lo2 + j));
}

// R_{2k}: vertex lo+i matched to lo+2k-1-i.
void add_reverse_matching(Graph& g, long lo, long k) {
  for (long i = 0; i < k; ++i)
    g.add_edge(static_cast<int>(lo + i), static_cast<int>(lo + 2 * k - 1 - i));
}

// J - I between two blocks of equal size: edge (lo1+i, lo2+j) iff i != j.
void add_bipartite_minus_identity(Graph& g, long lo1, long lo2, long count) {
  for (long i = 0; i < count; ++i)
    for (long j = 0; j < count; ++j)
      if (i != j) g.add_edge(static_cast<int>(lo1 + i), static_cast<int>(lo2 + j));
}

}  // namespace

FamilySpec friendship(long k) { return CaseII{1, k}; }

long order_of(const FamilySpec& spec) {
  validate(spec);
  return std::visit(
      [](const auto& s) -> long {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CaseI>) return 2 * s.m;
        if constexpr (std::is_same_v<T, CaseII>) return s.a + 2 * s.k;
        if constexpr (std::is_same_v<T, CaseIII>) return 2 * s.l + 2 * s.m;
        if constexpr (std::is_same_v<T, CaseIV>) return s.variant == 1 ? 10 : 12;
        if constexpr (std::is_same_v<T, CaseV>) return s.a + s.b + 1;
        if constexpr (std::is_same_v<T, CaseVI>) return s.a + 2 * s.m;
      },
      spec);
}

Graph construct(const FamilySpec& spec) {
  validate(spec);
  long n = order_of(spec);
  require(n <= Graph::kMaxOrder, "family instance exceeds the 512-vertex capacity");
  Graph g(static_cast<int>(n));
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CaseI>) {
          add_bipartite_minus_identity(g, 0, s.m, s.m);
        } else if constexpr (std::is_same_v<T, CaseII>) {
          add_clique(g, 0, s.a);
          add_join(g, 0, s.a, s.a, 2 * s.k);
          add_reverse_matching(g, s.a, s.k);
        } else if constexpr (std::is_same_v<T, CaseIII>) {
          add_reverse_matching(g, 0, s.l);
          add_reverse_matching(g, 2 * s.l, s.m);
          add_join(g, 0, 2 * s.l, 2 * s.l, 2 * s.m);
        } else if constexpr (std::is_same_v<T, CaseIV>) {
          if (s.variant == 1) {
            // N = [[1, 1^T], [1, I_4]]: parts {0..4} and {5..9}
            g.add_edge(0, 5);
            for (int j = 1; j <= 4; ++j) g.add_edge(0, 5 + j);
            for (int i = 1; i <= 4; ++i) g.add_edge(i, 5);
            for (int i = 1; i <= 4; ++i) g.add_edge(i, 5 + i);
          } else {
            // N = [[J-I_3, J], [O, J-I_3]]: parts {0..5} and {6..11}
            add_bipartite_minus_identity(g, 0, 6, 3);
            add_join(g, 0, 3, 9, 3);
            add_bipartite_minus_identity(g, 3, 9, 3);
          }
        } else if constexpr (std::is_same_v<T, CaseV>) {
          add_clique(g, 0, s.a);
          add_clique(g, s.a, s.b);
          add_join(g, 0, s.a, s.a, s.b);
          for (long i = 0; i < s.a; ++i)
            g.add_edge(static_cast<int>(i), static_cast<int>(s.a + s.b));
        } else if constexpr (std::is_same_v<T, CaseVI>) {
          add_clique(g, 0, s.a);
          add_join(g, 0, s.a, s.a, s.m);
          add_bipartite_minus_identity(g, s.a, s.a + s.m, s.m);
        }
      },
      spec);
  return g;
}

Partition block_partition(const FamilySpec& spec) {
  long n = order_of(spec);
  std::vector<long> sizes = std::visit(
      [](const auto& s) -> std::vector<long> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CaseI>) return {s.m, s.m};
        if constexpr (std::is_same_v<T, CaseII>) return {s.a, 2 * s.k};
        if constexpr (std::is_same_v<T, CaseIII>) return {2 * s.l, 2 * s.m};
        if constexpr (std::is_same_v<T, CaseIV>)
          return s.variant == 1 ? std::vector<long>{1, 4, 1, 4} : std::vector<long>{3, 3, 3, 3};
        if constexpr (std::is_same_v<T, CaseV>) return {s.a, s.b, 1};
        if constexpr (std::is_same_v<T, CaseVI>) return {s.a, s.m, s.m};
      },
      spec);
  Partition out;
  long at = 0;
  for (long size : sizes) {
    VertexSet cell(static_cast<int>(n));
    for (long v = at; v < at + size; ++v) cell.add(static_cast<int>(v));
    out.push_back(std::move(cell));
    at += size;
  }
  return out;
}

SpectrumSummary expected_spectrum(const FamilySpec& spec) {
  TwoEigCertificate cert = expected_certificate(spec);
  SpectrumSummary out;
  out.p = cert.p;
  out.q = cert.q;
  out.residual = IntPoly({cert.d, -cert.t, mpz_class(1)});
  return out;
}

TwoEigCertificate expected_certificate(const FamilySpec& spec) {
  validate(spec);
  // F_1 = K_3 is constructible but sits outside the classification (k >= 2).
  if (const CaseII* s = std::get_if<CaseII>(&spec); s && s->k < 2)
    throw std::invalid_argument("case (ii) spectrum formula needs k >= 2");
  TwoEigCertificate cert;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CaseI>) {
          // spectrum {+-(m-1), 1^{m-1}, -1^{m-1}}
          cert = {s.m - 1, s.m - 1, mpz_class(0), mpz_class(-(s.m - 1) * (s.m - 1))};
        } else if constexpr (std::is_same_v<T, CaseII>) {
          // roots (a +- sqrt(a^2+8ak-4a+4))/2: t = a, d = a - 2ak - 1
          cert = {s.k - 1, s.a + s.k - 1, mpz_class(s.a), mpz_class(s.a - 2 * s.a * s.k - 1)};
        } else if constexpr (std::is_same_v<T, CaseIII>) {
          // roots 1 +- 2 sqrt(lm)
          cert = {s.l + s.m - 2, s.l + s.m, mpz_class(2), mpz_class(1 - 4 * s.l * s.m)};
        } else if constexpr (std::is_same_v<T, CaseIV>) {
          // {+-3, 1^4, -1^4} and {+-4, 1^5, -1^5}
          if (s.variant == 1)
            cert = {4, 4, mpz_class(0), mpz_class(-9)};
          else
            cert = {5, 5, mpz_class(0), mpz_class(-16)};
        } else if constexpr (std::is_same_v<T, CaseV>) {
          // {4 +- 2 sqrt(10), 1, -1^9}, {(7 +- sqrt(129))/2, 1, -1^8},
          // {4 +- sqrt(37), 1, -1^9}
          if (s.a == 6)
            cert = {1, 9, mpz_class(8), mpz_class(-24)};
          else if (s.a == 4)
            cert = {1, 8, mpz_class(7), mpz_class(-20)};
          else
            cert = {1, 9, mpz_class(8), mpz_class(-21)};
        } else if constexpr (std::is_same_v<T, CaseVI>) {
          // {(1 +- sqrt(129))/2, 1^5, -1^6}, {1 +- 2 sqrt(7), 1^4, -1^6}
          if (s.a == 3)
            cert = {5, 6, mpz_class(1), mpz_class(-32)};
          else
            cert = {4, 6, mpz_class(2), mpz_class(-27)};
        }
      },
      spec);
  assert(cert.p + cert.q + 2 == order_of(spec));
  return cert;
}

bool verify_family(const FamilySpec& spec) {
  Graph g = construct(spec);
  if (strip_pm_one(char_poly(g)) != expected_spectrum(spec)) return false;
  std::optional<TwoEigCertificate> cert = in_class_G(g);
  return cert.has_value() && *cert == expected_certificate(spec);
}

std::vector<FamilySpec> enumerate_instances(long n_max) {
  if (n_max < 5) throw std::invalid_argument("enumerate_instances needs n_max >= 5");
  std::vector<FamilySpec> out;
  for (long m = 3; 2 * m <= n_max; ++m) out.push_back(CaseI{m});
  for (long a = 1; a + 4 <= n_max; ++a)
    for (long k = 2; a + 2 * k <= n_max; ++k) out.push_back(CaseII{a, k});
  for (long m = 2; 4 * m <= n_max; ++m)
    for (long l = m; 2 * l + 2 * m <= n_max; ++l) out.push_back(CaseIII{l, m});
  if (n_max >= 10) out.push_back(CaseIV{1});
  if (n_max >= 12) out.push_back(CaseIV{2});
  if (n_max >= 12) out.push_back(CaseV{6, 5});
  if (n_max >= 11) out.push_back(CaseV{4, 6});
  if (n_max >= 12) out.push_back(CaseV{3, 8});
  if (n_max >= 13) out.push_back(CaseVI{3, 5});
  if (n_max >= 12) out.push_back(CaseVI{4, 4});
  std::stable_sort(out.begin(), out.end(), [](const FamilySpec& x, const FamilySpec& y) {
    long nx = order_of(x), ny = order_of(y);
    if (nx != ny) return nx < ny;
    return x.index() < y.index();
  });
  return out;
}

std::string to_string(const FamilySpec& spec) {
  std::ostringstream out;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CaseI>) out << "i:m=" << s.m;
        if constexpr (std::is_same_v<T, CaseII>) out << "ii:a=" << s.a << ",k=" << s.k;
        if constexpr (std::is_same_v<T, CaseIII>) out << "iii:l=" << s.l << ",m=" << s.m;
        if constexpr (std::is_same_v<T, CaseIV>) out << "iv:" << s.variant;
        if constexpr (std::is_same_v<T, CaseV>) out << "v:a=" << s.a << ",b=" << s.b;
        if constexpr (std::is_same_v<T, CaseVI>) out << "vi:a=" << s.a << ",m=" << s.m;
      },
      spec);
  return out.str();
}

FamilySpec parse_family_spec(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("family spec needs 'case:params'");
  std::string head = text.substr(0, colon);
  std::string rest = text.substr(colon + 1);

  std::map<std::string, long> kv;
  if (head != "iv") {
    std::istringstream in(rest);
    std::string item;
    while (std::getline(in, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("expected key=value: " + item);
      kv[item.substr(0, eq)] = std::stol(item.substr(eq + 1));
    }
  }
  auto need = [&](const char* key) {
    auto it = kv.find(key);
    if (it == kv.end())
      throw std::invalid_argument(std::string("missing parameter '") + key + "' in " + text);
    return it->second;
  };

  FamilySpec spec;
  if (head == "i")
    spec = CaseI{need("m")};
  else if (head == "ii")
    spec = CaseII{need("a"), need("k")};
  else if (head == "iii")
    spec = CaseIII{need("l"), need("m")};
  else if (head == "iv")
    spec = CaseIV{std::stoi(rest)};
  else if (head == "v")
    spec = CaseV{need("a"), need("b")};
  else if (head == "vi")
    spec = CaseVI{need("a"), need("m")};
  else if (head == "friendship")
    spec = friendship(need("k"));
  else
    throw std::invalid_argument("unknown family: " + head);
  validate(spec);
  return spec;
}

}  // namespace twoeig
