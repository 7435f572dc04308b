// Command-line front end: construct, certify, delta-table, bounds,
// expansion, compare.
//
// Exit codes: 0 success, 1 validation error, 2 numerical non-convergence.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "expander/bounds.hpp"
#include "expander/error.hpp"
#include "expander/expansion.hpp"
#include "expander/graph.hpp"
#include "expander/planner.hpp"

namespace {

using namespace expander;

constexpr int kExitValidation = 1;
constexpr int kExitConvergence = 2;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
  if (!out) throw ValidationError("write failed for " + path);
}

std::vector<bounds::Range> parse_ranges(const std::string& text) {
  std::vector<bounds::Range> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ValidationError("range '" + item + "' is not lo:hi");
    try {
      std::size_t used_lo = 0;
      std::size_t used_hi = 0;
      const std::string lo = item.substr(0, colon);
      const std::string hi = item.substr(colon + 1);
      bounds::Range r{std::stoull(lo, &used_lo), std::stoull(hi, &used_hi)};
      if (used_lo != lo.size() || used_hi != hi.size()) throw std::invalid_argument(item);
      out.push_back(r);
    } catch (const std::logic_error&) {
      throw ValidationError("range '" + item + "' is not lo:hi with integers");
    }
  }
  if (out.empty()) throw ValidationError("no ranges given");
  return out;
}

void print_bound_line(const bounds::BoundValue& b) {
  std::cout << b.model << '\t' << bounds::to_string(b.quantity) << '\t' << format_double(b.value)
            << "\tvalid=" << (b.valid ? "true" : "false");
  if (b.conditional) std::cout << "\tconditional=RH";
  if (b.advisory) std::cout << "\tadvisory";
  std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Almost-Ramanujan expander construction and spectral certification"};
  app.require_subcommand(1);

  // construct
  auto* construct_cmd = app.add_subcommand("construct", "Build and certify a k-regular graph");
  std::uint64_t k = 0;
  std::size_t min_vertices = 0;
  std::string strategy_text = "matching";
  std::string graph_out;
  std::string cert_out;
  std::uint64_t q_max = 101;
  construct_cmd->add_option("--k", k, "Target regularity")->required();
  construct_cmd->add_option("--min-vertices", min_vertices, "Minimum vertex count")->required();
  construct_cmd->add_option("--strategy", strategy_text, "matching or k2product")
      ->check(CLI::IsMember({"matching", "k2product"}));
  construct_cmd->add_option("--graph-out", graph_out, "Edge-list output path")->required();
  construct_cmd->add_option("--cert-out", cert_out, "Certificate output path")->required();
  construct_cmd->add_option("--q-max", q_max, "Largest LPS modulus q to try");

  // certify
  auto* certify_cmd = app.add_subcommand("certify", "Certify an edge-list graph");
  std::string graph_in;
  certify_cmd->add_option("--graph", graph_in, "Edge-list input path")->required();
  certify_cmd->add_option("--cert-out", cert_out, "Certificate output path")->required();

  // delta-table
  auto* table_cmd = app.add_subcommand("delta-table", "Maximum prime-gap quotient per range");
  std::string ranges_text;
  table_cmd->add_option("--ranges", ranges_text, "Comma-separated lo:hi ranges");

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate analytic bounds at k");
  std::string model_text;
  double rh_constant = 1.0;
  std::uint64_t bhp_threshold = 0;
  bounds_cmd->add_option("--k", k, "Regularity")->required()->check(CLI::Range(3ULL, 1ULL << 62));
  bounds_cmd->add_option("--model", model_text, "chain, trudgian, bhp or rh")
      ->check(CLI::IsMember({"chain", "trudgian", "bhp", "rh"}));
  bounds_cmd->add_option("--rh-constant", rh_constant, "Constant C in p'-p <= C sqrt(p) log p");
  bounds_cmd->add_option("--bhp-threshold", bhp_threshold,
                         "Assumed k beyond which the BHP gap estimate holds");

  // expansion
  auto* expansion_cmd = app.add_subcommand("expansion", "Exact expanding constant (n <= 24)");
  expansion_cmd->add_option("--graph", graph_in, "Edge-list input path")->required();

  // compare
  auto* compare_cmd = app.add_subcommand("compare", "Matching vs K2-product increments");
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::size_t target_k = 0;
  compare_cmd->add_option("--p", p, "Base prime")->required();
  compare_cmd->add_option("--q", q, "LPS modulus")->required();
  compare_cmd->add_option("--target-k", target_k, "Final regularity")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*construct_cmd) {
      planner::PlannerOptions options;
      options.q_max = q_max;
      const auto result =
          planner::construct(k, min_vertices, planner::parse_strategy(strategy_text), options);
      write_edge_list_file(graph_out, result.graph);
      write_text_file(cert_out, result.certificate.dump());
      std::cout << "k=" << result.certificate.k << " n=" << result.certificate.n
                << " lambda2=" << format_double(result.certificate.lambda2)
                << " gap=" << format_double(result.certificate.spectral_gap)
                << " ramanujan=" << (result.certificate.ramanujan ? "true" : "false") << '\n';
    } else if (*certify_cmd) {
      const Graph g = read_edge_list_file(graph_in);
      std::vector<planner::ProvenanceStep> prov{
          {"edge_list", 0, 0, regularity(g).value_or(0), g.vertex_count()}};
      const planner::Certificate c = planner::certify(g, std::move(prov));
      write_text_file(cert_out, c.dump());
      std::cout << "k=" << c.k << " n=" << c.n << " lambda2=" << format_double(c.lambda2)
                << " gap=" << format_double(c.spectral_gap)
                << " ramanujan=" << (c.ramanujan ? "true" : "false") << '\n';
    } else if (*table_cmd) {
      const auto ranges =
          ranges_text.empty() ? bounds::default_delta_ranges() : parse_ranges(ranges_text);
      std::cout << "lo\thi\tmax_delta_ceil\tmax_delta\twitness_k\tp\tgap\n";
      for (const auto& row : bounds::delta_table(ranges))
        std::cout << row.lo << '\t' << row.hi << '\t' << row.upper_bound_text() << '\t'
                  << format_double(row.max_delta) << '\t' << row.witness_k << '\t' << row.p
                  << '\t' << row.gap << '\n';
    } else if (*bounds_cmd) {
      bounds::BoundModel model;
      model.rh_constant = rh_constant;
      if (bhp_threshold > 0) model.bhp_threshold = bhp_threshold;
      if (!(rh_constant > 0.0)) throw ValidationError("--rh-constant must be positive");
      for (const auto& b : bounds::evaluate_all(k, model)) {
        const bool chain = b.model == "chain_intermediate" || b.model == "delta_exact";
        if (!model_text.empty() && !(model_text == "chain" ? chain : b.model == model_text))
          continue;
        print_bound_line(b);
      }
    } else if (*expansion_cmd) {
      const Graph g = read_edge_list_file(graph_in);
      const auto e = expansion::expanding_constant_exact(g);
      std::cout << "h=" << format_double(e.h) << " boundary=" << e.boundary << " witness=";
      for (std::size_t i = 0; i < e.witness.size(); ++i)
        std::cout << (i ? "," : "") << e.witness[i];
      std::cout << '\n';
      if (regularity(g) && is_connected(g)) {
        const auto iso = expansion::isoperimetric_check(g);
        std::cout << "lower=" << format_double(iso.lower) << " h=" << format_double(iso.h)
                  << " upper=" << format_double(iso.upper)
                  << " holds=" << (iso.holds ? "true" : "false") << '\n';
      }
    } else if (*compare_cmd) {
      const auto report = planner::compare_strategies(p, q, target_k);
      std::cout << report.to_json().dump(2) << '\n';
    }
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return 0;
}
