#pragma once

#include <string>

#include <json.hpp>

#include "twoeig/catalog.hpp"
#include "twoeig/classifier.hpp"
#include "twoeig/equitable.hpp"
#include "twoeig/families.hpp"
#include "twoeig/graph.hpp"
#include "twoeig/spectra.hpp"

namespace twoeig {

using json = nlohmann::ordered_json;

// {n, p, q, residual_coeffs, r_interval, s_interval, in_class_G}; intervals
// are 10-digit decimal strings, present when the residual is quadratic.
json spectrum_report(const Graph& g);

// Radical rendering of the roots of x^2 - t x + d, e.g. "(1±√129)/2",
// "1±2√7", or "{5, -3}" when the roots are integers.
std::string radical_root_string(const mpz_class& t, const mpz_class& d);

json classification_json(const Classification& c);
json classification_report_json(const ClassificationReport& r);
json structure_report_json(const StructureReport& r);
json cospectral_pairs_json(const std::vector<CospectralPair>& pairs);
json catalog_validation_json(const std::vector<CatalogValidation>& vs);
json catalog_export_json();  // graph6 lines with bound-kind sidecar data
json ds_status_json(const FamilySpec& spec, const DsStatus& status);
json quotient_report_json(const Graph& g, const Partition& p);

}  // namespace twoeig
