#include "twoeig/report.hpp"

#include "twoeig/intpoly.hpp"

namespace twoeig {

namespace {

json mpz_json(const mpz_class& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

json coeff_array(const IntPoly& p) {
  json arr = json::array();
  for (const auto& c : p.c) arr.push_back(mpz_json(c));
  return arr;
}

json interval_json(const std::pair<mpq_class, mpq_class>& iv) {
  return json::array({decimal_string(iv.first, 10, Round::Down),
                      decimal_string(iv.second, 10, Round::Up)});
}

const char* class_name(SpectrumClass k) {
  switch (k) {
    case SpectrumClass::AllPmOne: return "all_pm_one";
    case SpectrumClass::OneExtra: return "one_extra";
    case SpectrumClass::TwoExtra: return "two_extra";
    default: return "more_than_two";
  }
}

}  // namespace

json spectrum_report(const Graph& g) {
  SpectrumSummary s = strip_pm_one(char_poly(g));
  json out;
  out["n"] = g.order();
  out["p"] = s.p;
  out["q"] = s.q;
  out["residual_coeffs"] = coeff_array(s.residual);
  if (s.residual.degree() == 2) {
    out["r_interval"] = interval_json(approx_root(s.residual, 1));
    out["s_interval"] = interval_json(approx_root(s.residual, 2));
  } else {
    out["r_interval"] = nullptr;
    out["s_interval"] = nullptr;
  }
  out["in_class_G"] = in_class_G(g).has_value();
  return out;
}

std::string radical_root_string(const mpz_class& t, const mpz_class& d) {
  mpz_class disc = t * t - 4 * d;
  if (disc < 0) return "complex";
  // disc = s^2 * r with r square-free
  mpz_class s = 1, r = disc;
  for (mpz_class f = 2; f * f <= r; ++f) {
    while (r % (f * f) == 0) {
      r /= f * f;
      s *= f;
    }
  }
  if (r == 1) {
    mpz_class r1 = (t + s) / 2, r2 = (t - s) / 2;
    return "{" + r1.get_str() + ", " + r2.get_str() + "}";
  }
  if (t % 2 == 0 && s % 2 == 0) {
    mpz_class half_t = t / 2, half_s = s / 2;
    std::string mid = half_t == 0 ? "" : half_t.get_str();
    std::string coef = half_s == 1 ? "" : half_s.get_str();
    return (mid.empty() ? "" : mid) + "±" + coef + "√" + r.get_str();
  }
  std::string coef = s == 1 ? "" : s.get_str();
  return "(" + t.get_str() + "±" + coef + "√" + r.get_str() + ")/2";
}

json classification_json(const Classification& c) {
  json out;
  out["class"] = class_name(c.kind);
  out["p"] = c.summary.p;
  out["q"] = c.summary.q;
  out["residual_coeffs"] = coeff_array(c.summary.residual);
  if (c.extra_root) out["extra_root"] = mpz_json(*c.extra_root);
  if (c.certificate) {
    out["certificate"] = {{"p", c.certificate->p},
                          {"q", c.certificate->q},
                          {"t", mpz_json(c.certificate->t)},
                          {"d", mpz_json(c.certificate->d)},
                          {"roots", radical_root_string(c.certificate->t, c.certificate->d)}};
  }
  if (c.kind == SpectrumClass::TwoExtra) out["clique_union"] = c.clique_union;
  return out;
}

json classification_report_json(const ClassificationReport& r) {
  json out;
  out["n_max"] = r.n_max;
  out["graphs_seen"] = r.graphs_seen;
  out["connected_seen"] = r.connected_seen;
  out["class_counts"] = {{"all_pm_one", r.class_counts[0]},
                         {"one_extra", r.class_counts[1]},
                         {"two_extra", r.class_counts[2]},
                         {"more_than_two", r.class_counts[3]}};
  json members = json::array();
  for (const auto& m : r.members) {
    json jm;
    jm["graph6"] = to_graph6(m.graph);
    jm["certificate"] = {{"p", m.cert.p},
                         {"q", m.cert.q},
                         {"t", mpz_json(m.cert.t)},
                         {"d", mpz_json(m.cert.d)}};
    jm["matched_instance"] = m.instance >= 0 ? json(to_string(r.instances[m.instance])) : json();
    members.push_back(std::move(jm));
  }
  out["members"] = std::move(members);
  json insts = json::array();
  for (size_t i = 0; i < r.instances.size(); ++i)
    insts.push_back({{"spec", to_string(r.instances[i])},
                     {"order", order_of(r.instances[i])},
                     {"hits", r.instance_hits[i]}});
  out["instances"] = std::move(insts);
  out["unmatched"] = json::array();
  for (const auto* m : r.unmatched()) out["unmatched"].push_back(to_graph6(m->graph));
  out["ok"] = r.ok();
  return out;
}

json structure_report_json(const StructureReport& r) {
  json out;
  json vs = json::array();
  for (const auto& v : r.violations) {
    if (v.rule == 1)
      vs.push_back({{"rule", 1}, {"vertex", v.u}});
    else
      vs.push_back({{"rule", 2}, {"u", v.u}, {"v", v.v}});
  }
  out["violations"] = std::move(vs);
  out["ok"] = r.ok();
  return out;
}

json cospectral_pairs_json(const std::vector<CospectralPair>& pairs) {
  json arr = json::array();
  for (const auto& p : pairs) {
    SpectrumSummary s = strip_pm_one(p.shared_char_poly);
    json jp;
    jp["left"] = to_string(p.left);
    jp["left_padding"] = p.left_padding;
    jp["right"] = to_string(p.right);
    jp["right_padding"] = p.right_padding;
    jp["order"] = order_of(p.left) + 2 * p.left_padding;
    jp["p"] = s.p;
    jp["q"] = s.q;
    jp["residual_coeffs"] = coeff_array(s.residual);
    if (s.residual.degree() == 2)
      jp["roots"] = radical_root_string(-s.residual.c[1], s.residual.c[0]);
    arr.push_back(std::move(jp));
  }
  return arr;
}

json catalog_validation_json(const std::vector<CatalogValidation>& vs) {
  json arr = json::array();
  for (const auto& v : vs) {
    arr.push_back({{"name", v.name},
                   {"bound_ok", v.bound_ok},
                   {"printed_ok", v.printed_ok},
                   {"exact_ok", v.exact_ok},
                   {"interval", interval_json({v.lo, v.hi})},
                   {"ok", v.ok()}});
  }
  return arr;
}

json catalog_export_json() {
  json arr = json::array();
  for (const CatalogEntry& e : catalog()) {
    arr.push_back({{"name", e.name},
                   {"graph6", to_graph6(e.graph)},
                   {"bound_kind", e.bound_kind == BoundKind::SecondLargest ? "second_largest"
                                                                           : "second_smallest"},
                   {"printed_value", e.printed_text}});
  }
  return arr;
}

json ds_status_json(const FamilySpec& spec, const DsStatus& status) {
  json out;
  out["spec"] = to_string(spec);
  out["determined_by_spectrum"] = status.determined;
  if (!status.determined) out["reason"] = status.reason;
  return out;
}

json quotient_report_json(const Graph& g, const Partition& p) {
  json out;
  out["partition"] = to_string(p);
  out["equitable"] = is_equitable(g, p);
  if (!out["equitable"].get<bool>()) return out;
  RatMatrix q = quotient_matrix(g, p);
  json rows = json::array();
  for (int i = 0; i < q.n; ++i) {
    json row = json::array();
    for (int j = 0; j < q.n; ++j) row.push_back(q.at(i, j).get_str());
    rows.push_back(std::move(row));
  }
  out["quotient"] = std::move(rows);
  IntPoly qp = char_poly(q);
  out["quotient_char_poly"] = qp.to_string();
  out["divides_char_poly"] = verify_quotient_divides(g, p);
  return out;
}

}  // namespace twoeig
