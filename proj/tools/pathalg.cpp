#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "pathalg/error.hpp"
#include "pathalg/expr.hpp"
#include "pathalg/graph_library.hpp"
#include "pathalg/normal_form.hpp"
#include "pathalg/relations.hpp"
#include "pathalg/verification.hpp"

namespace {

using namespace pathalg;

enum Exit : int { kOk = 0, kParse = 2, kValidation = 3, kVerifyFailed = 4, kResource = 5 };

int exit_code(const Error& e) {
  switch (classify(e.kind())) {
    case ErrorClass::Parse: return kParse;
    case ErrorClass::Resource: return kResource;
    case ErrorClass::Validation: return kValidation;
  }
  return kValidation;
}

LayeredGraph generate_family(const std::string& family, const std::vector<int>& params) {
  const auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw Error(ErrorKind::ParseError, family + " takes " + std::to_string(n) + " parameter(s)");
  };
  if (family == "boolean") {
    need(1);
    return boolean_lattice(params[0]);
  }
  if (family == "chain") {
    need(1);
    return chain(params[0]);
  }
  if (family == "partition") {
    need(1);
    return partition_lattice(params[0]);
  }
  if (family == "subspace") {
    need(2);
    return subspace_lattice(params[0], params[1]);
  }
  throw Error(ErrorKind::ParseError, "unknown family '" + family + "' (boolean, chain, partition, subspace)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path algebras of layered graphs: normal forms, bases and dimension checks"};
  app.require_subcommand(1);

  std::string graph_file;
  int max_level = 0;

  auto* gen = app.add_subcommand("gen", "Write a built-in graph in the text format");
  std::string family;
  std::vector<int> params;
  std::string out_file;
  gen->add_option("family", family, "boolean | chain | partition | subspace")->required();
  gen->add_option("params", params, "n, or q n for subspace")->required();
  gen->add_option("--out", out_file, "Output file (default stdout)");

  auto* validate = app.add_subcommand("validate", "Check a graph file");
  validate->add_option("graph", graph_file)->required();

  auto* basis = app.add_subcommand("basis", "List basis sequences up to a level");
  basis->add_option("graph", graph_file)->required();
  basis->add_option("--max-level", max_level)->required()->check(CLI::NonNegativeNumber);

  auto* hilbert = app.add_subcommand("hilbert", "Print graded basis counts");
  hilbert->add_option("graph", graph_file)->required();
  hilbert->add_option("--max-level", max_level)->required()->check(CLI::NonNegativeNumber);

  auto* nf = app.add_subcommand("normal-form", "Normal form of an edge expression");
  std::string expr;
  nf->add_option("graph", graph_file)->required();
  nf->add_option("--expr", expr)->required();

  auto* relations = app.add_subcommand("relations", "List ideal generators");
  bool reduced = false;
  bool path_pairs = false;
  relations->add_option("graph", graph_file)->required();
  auto* reduced_flag = relations->add_flag("--reduced", reduced, "Edge and cover generators (default)");
  relations->add_flag("--path-pairs", path_pairs, "Differences of path coefficients")->excludes(reduced_flag);

  auto* verify = app.add_subcommand("verify", "Compare basis counts with brute-force dimensions");
  bool alt_chosen = false;
  bool tsv = false;
  verify->add_option("graph", graph_file)->required();
  verify->add_option("--max-level", max_level)->required()->check(CLI::NonNegativeNumber);
  verify->add_flag("--alt-chosen", alt_chosen, "Use the largest-id out-edge as the chosen edge");
  verify->add_flag("--tsv", tsv, "Tab-separated rows instead of a table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*gen) {
      const std::string text = save_graph(generate_family(family, params));
      if (out_file.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_file);
        if (!out) throw Error(ErrorKind::ParseError, "cannot write '" + out_file + "'");
        out << text;
      }
      return kOk;
    }

    const LayeredGraph g = load_graph(graph_file);

    if (*validate) {
      std::cout << "valid: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges, max level "
                << g.max_level() << '\n';
    } else if (*basis) {
      for (const auto& b : enumerate_basis(g, max_level)) std::cout << seq_level(g, b) << '\t' << render(g, b) << '\n';
    } else if (*hilbert) {
      const auto counts = hilbert_series(g, max_level);
      for (std::size_t i = 0; i < counts.size(); ++i) std::cout << (i ? " " : "") << counts[i];
      std::cout << '\n';
    } else if (*nf) {
      std::cout << render(normal_form(g, lower(g, parse_expr(expr, g)))) << '\n';
    } else if (*relations) {
      const auto gens = path_pairs ? path_pair_relations(g) : reduced_relations(g);
      for (const auto& r : gens) std::cout << render(g, r) << '\n';
    } else if (*verify) {
      const LayeredGraph target = alt_chosen ? g.with_alternate_chosen() : g;
      const DimReport report = verify_basis(target, max_level);
      if (tsv) {
        std::cout << render_tsv(report);
      } else {
        std::cout << render_table(report);
      }
      return report.pass ? kOk : kVerifyFailed;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e);
  }
  return kOk;
}
