#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "twoeig/errors.hpp"
#include "twoeig/report.hpp"

namespace {

using twoeig::json;

// The JSON object is the single source of truth; the human format is a
// rendering of the same data.
void print_human(const json& j, std::ostream& out, int indent = 0) {
  std::string pad(static_cast<size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || value.is_array()) {
        out << pad << key << ":" << (value.empty() ? " (none)\n" : "\n");
        print_human(value, out, indent + 1);
      } else {
        out << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
            << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (value.is_object() || value.is_array()) {
        out << pad << "-\n";
        print_human(value, out, indent + 1);
      } else {
        out << pad << "- "
            << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
      }
    }
  } else {
    out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const json& j, bool as_json) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    print_human(j, std::cout);
}

struct GraphInputs {
  std::string family;
  std::string graph6;
  std::string graph6_file;

  void add_options(CLI::App* cmd, bool required = true) {
    auto* f = cmd->add_option("--family", family, "family spec string, e.g. friendship:k=16");
    auto* g = cmd->add_option("--graph6", graph6, "graph6 string");
    auto* file = cmd->add_option("--graph6-in", graph6_file, "file with one graph6 line each");
    f->excludes(g)->excludes(file);
    g->excludes(file);
    if (required) cmd->require_option(1, 3);
  }

  std::vector<twoeig::Graph> load() const {
    std::vector<twoeig::Graph> graphs;
    if (!family.empty()) {
      graphs.push_back(twoeig::construct(twoeig::parse_family_spec(family)));
    } else if (!graph6.empty()) {
      graphs.push_back(twoeig::from_graph6(graph6));
    } else {
      std::ifstream in(graph6_file);
      if (!in) throw std::invalid_argument("cannot open " + graph6_file);
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty() || line.starts_with(">>graph6<<")) continue;
        graphs.push_back(twoeig::from_graph6(line));
      }
    }
    return graphs;
  }
};

json per_graph(const std::vector<twoeig::Graph>& graphs,
               const std::function<json(const twoeig::Graph&)>& fn) {
  if (graphs.size() == 1) return fn(graphs[0]);
  json arr = json::array();
  for (const auto& g : graphs) arr.push_back(fn(g));
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graphs with at most two adjacency eigenvalues different from +-1"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --json appear after the subcommand too
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable JSON output")->configurable(false);

  std::string construct_spec;
  auto* construct_cmd =
      app.add_subcommand("construct", "emit a family instance as graph6");
  construct_cmd->add_option("spec", construct_spec, "family spec, e.g. ii:a=1,k=16")->required();

  GraphInputs spectrum_in;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "exact spectrum report");
  spectrum_in.add_options(spectrum_cmd);

  GraphInputs classify_in;
  auto* classify_cmd =
      app.add_subcommand("classify", "three-way classification by non-(+-1) eigenvalue count");
  classify_in.add_options(classify_cmd);

  GraphInputs scan_in;
  bool all_witnesses = false;
  auto* scan_cmd = app.add_subcommand("forbidden-scan", "find forbidden induced subgraphs");
  scan_in.add_options(scan_cmd);
  scan_cmd->add_flag("--all-witnesses", all_witnesses, "list every witness vertex set");

  long families_nmax = 40;
  auto* families_cmd =
      app.add_subcommand("verify-families", "check every family instance against its spectrum");
  families_cmd->add_option("--nmax", families_nmax, "largest instance order (default 40)");

  bool export_catalog = false;
  auto* catalog_cmd =
      app.add_subcommand("validate-catalog", "self-check the forbidden-subgraph catalog");
  catalog_cmd->add_flag("--export", export_catalog, "emit the catalog itself instead");

  long theorem_nmax = 8;
  int jobs = 1;
  std::string theorem_stream;
  auto* theorem_cmd = app.add_subcommand(
      "verify-theorem", "exhaustively verify the classification at small orders");
  theorem_cmd->add_option("--nmax", theorem_nmax, "largest order to sweep (default 8)");
  theorem_cmd->add_option("--jobs", jobs, "worker threads for the sweep");
  theorem_cmd->add_option("--graph6-in", theorem_stream,
                          "graph6 stream supplying the orders above 8 ('-' = stdin)");

  long mates_nmax = 34;
  bool common_padding = false;
  auto* mates_cmd =
      app.add_subcommand("cospectral-mates", "certified cospectral nonisomorphic pairs");
  mates_cmd->add_option("--nmax", mates_nmax, "largest padded order (default 34)");
  mates_cmd->add_flag("--common-padding", common_padding,
                      "also emit pairs with extra common K2 padding");

  std::string ds_spec;
  auto* ds_cmd = app.add_subcommand("ds", "determined-by-spectrum status of a family instance");
  ds_cmd->add_option("spec", ds_spec, "family spec")->required();

  GraphInputs quotient_in;
  std::string partition_text;
  auto* quotient_cmd =
      app.add_subcommand("quotient", "quotient matrix of a partition and divisibility verdict");
  quotient_in.add_options(quotient_cmd);
  quotient_cmd->add_option("--partition", partition_text, "cells '0|1,2,3' (',' in a cell)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (construct_cmd->parsed()) {
      std::cout << twoeig::to_graph6(twoeig::construct(twoeig::parse_family_spec(construct_spec)))
                << "\n";
      return 0;
    }
    if (spectrum_cmd->parsed()) {
      emit(per_graph(spectrum_in.load(), twoeig::spectrum_report), as_json);
      return 0;
    }
    if (classify_cmd->parsed()) {
      emit(per_graph(classify_in.load(),
                     [](const twoeig::Graph& g) {
                       return twoeig::classification_json(twoeig::classify_spectrum(g));
                     }),
           as_json);
      return 0;
    }
    if (scan_cmd->parsed()) {
      emit(per_graph(scan_in.load(),
                     [&](const twoeig::Graph& g) {
                       json hits = json::array();
                       if (all_witnesses) {
                         for (const auto& [name, ws] : twoeig::scan_forbidden_all(g)) {
                           json sets = json::array();
                           for (const auto& w : ws) sets.push_back(w.vertices());
                           hits.push_back({{"name", name}, {"witnesses", sets}});
                         }
                       } else {
                         for (const auto& [name, w] : twoeig::scan_forbidden(g))
                           hits.push_back({{"name", name}, {"witness", w.vertices()}});
                       }
                       return json{{"graph6", twoeig::to_graph6(g)}, {"hits", hits}};
                     }),
           as_json);
      return 0;
    }
    if (families_cmd->parsed()) {
      bool all_ok = true;
      json arr = json::array();
      for (const auto& spec : twoeig::enumerate_instances(families_nmax)) {
        bool ok = twoeig::verify_family(spec);
        all_ok = all_ok && ok;
        arr.push_back({{"spec", twoeig::to_string(spec)},
                       {"order", twoeig::order_of(spec)},
                       {"ok", ok}});
      }
      emit(json{{"instances", arr}, {"ok", all_ok}}, as_json);
      return all_ok ? 0 : 1;
    }
    if (catalog_cmd->parsed()) {
      if (export_catalog) {
        if (as_json) {
          emit(twoeig::catalog_export_json(), true);
        } else {
          // one graph6 line per entry; --json gives the sidecar records
          for (const auto& e : twoeig::catalog()) std::cout << twoeig::to_graph6(e.graph) << "\n";
        }
        return 0;
      }
      auto report = twoeig::validate_catalog();
      bool all_ok = true;
      for (const auto& v : report) all_ok = all_ok && v.ok();
      emit(json{{"entries", twoeig::catalog_validation_json(report)}, {"ok", all_ok}}, as_json);
      return all_ok ? 0 : 1;
    }
    if (theorem_cmd->parsed()) {
      std::ifstream stream;
      std::istream* ext = nullptr;
      if (theorem_stream == "-") {
        ext = &std::cin;
      } else if (!theorem_stream.empty()) {
        stream.open(theorem_stream);
        if (!stream) throw std::invalid_argument("cannot open " + theorem_stream);
        ext = &stream;
      }
      auto report = twoeig::verify_classification(theorem_nmax, ext, jobs);
      emit(twoeig::classification_report_json(report), as_json);
      return report.ok() ? 0 : 1;
    }
    if (mates_cmd->parsed()) {
      emit(twoeig::cospectral_pairs_json(twoeig::cospectral_mate_pairs(mates_nmax, common_padding)),
           as_json);
      return 0;
    }
    if (ds_cmd->parsed()) {
      auto spec = twoeig::parse_family_spec(ds_spec);
      emit(twoeig::ds_status_json(spec, twoeig::ds_status(spec)), as_json);
      return 0;
    }
    if (quotient_cmd->parsed()) {
      auto graphs = quotient_in.load();
      if (graphs.size() != 1)
        throw std::invalid_argument("quotient expects exactly one input graph");
      auto partition = twoeig::parse_partition(partition_text, graphs[0].order());
      json report = twoeig::quotient_report_json(graphs[0], partition);
      emit(report, as_json);
      bool usable = report["equitable"].get<bool>() && report["divides_char_poly"].get<bool>();
      return usable ? 0 : 1;
    }
  } catch (const twoeig::internal_consistency_error& e) {
    std::cerr << "internal consistency violation: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
