#include "adc/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "adc/constructions.hpp"
#include "adc/decompose.hpp"
#include "adc/enumerate.hpp"
#include "adc/serialize.hpp"

namespace adc {

namespace {

nlohmann::json load_json(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON in '") + path + "': " + e.what());
  }
}

void write_text(const std::string& path, std::ostream& out,
                const std::string& text) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
  file << text;
}

void write_json(const std::string& path, std::ostream& out,
                const nlohmann::json& doc) {
  write_text(path, out, doc.dump(2) + "\n");
}

AugmentedComplex load_complex(const std::string& path, std::istream& in) {
  return complex_from_json(load_json(path, in));
}

nlohmann::json validation_json(const ValidationReport& report) {
  nlohmann::json out;
  out["valid"] = report.ok();
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& issue : report.issues) {
    violations.push_back({{"element", issue.element}, {"message", issue.message}});
  }
  out["violations"] = std::move(violations);
  return out;
}

nlohmann::json check_json(const AugmentedComplex& K) {
  nlohmann::json out = validation_json(K.validate());
  out["based"] = K.based();
  if (!K.validate().ok() || !K.based()) return out;

  const AtomTable& table = K.atoms();
  bool atoms_ok = true;
  nlohmann::json atom_violations = nlohmann::json::array();
  for (const auto& b : K.basis_elements()) {
    for (int n = 0; n <= b.degree; ++n) {
      ChainVector lo = table.component(b.id, Sign::minus, n);
      ChainVector hi = table.component(b.id, Sign::plus, n);
      if (!lo.is_nonnegative() || !hi.is_nonnegative()) {
        atoms_ok = false;
        atom_violations.push_back(b.id + ": negative atom component at degree " +
                                  std::to_string(n));
      }
      if (n < b.degree && !meet(lo, hi).is_zero()) {
        atoms_ok = false;
        atom_violations.push_back(b.id + ": minus/plus components meet at degree " +
                                  std::to_string(n));
      }
    }
  }
  out["atoms_ok"] = atoms_ok;
  if (!atoms_ok) out["atom_violations"] = std::move(atom_violations);

  out["unital"] = K.is_unital();

  const StrongLoopFreeResult& strong = K.strong_loop_free_result();
  out["strongly_loop_free"] = strong.ok;
  if (strong.ok) {
    out["strong_order"] = strong.order;
  } else {
    out["strong_cycle"] = strong.cycle;
  }

  const LoopFreeResult& loop = K.loop_free_result();
  out["loop_free"] = loop.ok;
  if (loop.ok) {
    out["level_orders"] = loop.level_orders;
  } else {
    out["loop_cycle"] = {{"level", loop.cycle_level}, {"cycle", loop.cycle}};
  }
  return out;
}

nlohmann::json atoms_json(const AugmentedComplex& K) {
  const AtomTable& table = K.atoms();
  nlohmann::json atoms = nlohmann::json::object();
  for (const auto& b : K.basis_elements()) {
    nlohmann::json minus = nlohmann::json::array();
    nlohmann::json plus = nlohmann::json::array();
    for (int n = 0; n <= b.degree; ++n) {
      minus.push_back(chain_to_json(table.component(b.id, Sign::minus, n)));
      plus.push_back(chain_to_json(table.component(b.id, Sign::plus, n)));
    }
    atoms[b.id] = {{"degree", b.degree},
                   {"minus", std::move(minus)},
                   {"plus", std::move(plus)}};
  }
  return nlohmann::json{{"atoms", std::move(atoms)}};
}

AugmentedComplex generate(const std::string& family,
                          const std::vector<int>& params) {
  auto want = [&](std::size_t n) {
    if (params.size() != n) {
      throw CLI::ValidationError("gen", "family '" + family + "' takes " +
                                            std::to_string(n) + " parameter(s)");
    }
  };
  if (family == "simplex") {
    want(1);
    return simplex(params[0]);
  }
  if (family == "globe") {
    want(1);
    return globe(params[0]);
  }
  if (family == "pair") {
    want(2);
    return composable_pair(params[0], params[1]);
  }
  if (family == "triple") {
    want(2);
    return composable_triple(params[0], params[1]);
  }
  if (family == "quad") {
    want(3);
    return interchange_quad(params[0], params[1], params[2]);
  }
  if (family == "cube") {
    want(1);
    return cube(params[0]);
  }
  throw CLI::ValidationError("gen", "unknown family '" + family + "'");
}

} // namespace

int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"augmented directed complexes and their omega-categories"};
  app.require_subcommand(1);

  std::string input = "-", input2, output = "-";
  std::string cell_path, lhs_path, rhs_path;
  std::string family, variant = "standard";
  std::vector<int> params;
  int level = 0;
  std::int64_t bound = 1;

  auto add_io = [&](CLI::App* cmd, bool two_inputs) {
    if (two_inputs) {
      cmd->add_option("-i,--input", input, "first input document")->required();
      cmd->add_option("--input2", input2, "second input document")->required();
    } else {
      cmd->add_option("-i,--input", input, "input document (default stdin)");
    }
    cmd->add_option("-o,--output", output, "output file (default stdout)");
  };

  CLI::App* gen = app.add_subcommand("gen", "generate an example complex");
  gen->add_option("family", family, "simplex|globe|pair|triple|quad|cube")
      ->required();
  gen->add_option("params", params, "family parameters");
  gen->add_option("-o,--output", output, "output file (default stdout)");

  CLI::App* check = app.add_subcommand("check", "validate and report properties");
  add_io(check, false);

  CLI::App* atoms = app.add_subcommand("atoms", "print the atom table");
  add_io(atoms, false);

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "list the cells of nu K at a level");
  add_io(enumerate, false);
  enumerate->add_option("-n,--level", level, "filtration level")->required();
  enumerate->add_option("--bound", bound, "coefficient bound (default 1)");

  CLI::App* compose = app.add_subcommand("compose", "compose two cells");
  add_io(compose, false);
  compose->add_option("--lhs", lhs_path, "left cell document")->required();
  compose->add_option("--rhs", rhs_path, "right cell document")->required();
  compose->add_option("-n,--level", level, "composition level")->required();

  CLI::App* decompose =
      app.add_subcommand("decompose", "factor a cell into atoms");
  add_io(decompose, false);
  decompose->add_option("--cell", cell_path, "cell document")->required();

  CLI::App* tensor_cmd = app.add_subcommand("tensor", "tensor product");
  add_io(tensor_cmd, true);

  CLI::App* hom_cmd = app.add_subcommand("hom", "internal hom complex");
  add_io(hom_cmd, true);
  hom_cmd->add_option("--variant", variant, "standard|prime");
  hom_cmd->add_option("--bound", bound,
                      "coefficient bound for the 0-cell/morphism comparison");

  CLI::App* present =
      app.add_subcommand("present", "emit the presentation of nu K");
  add_io(present, false);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);

    if (app.got_subcommand(gen)) {
      write_json(output, out, complex_to_json(generate(family, params)));
    } else if (app.got_subcommand(check)) {
      write_json(output, out, check_json(load_complex(input, in)));
    } else if (app.got_subcommand(atoms)) {
      write_json(output, out, atoms_json(load_complex(input, in)));
    } else if (app.got_subcommand(enumerate)) {
      AugmentedComplex K = load_complex(input, in);
      std::vector<Cell> cells = enumerate_cells(K, level, Int(bound));
      nlohmann::json doc;
      doc["level"] = level;
      doc["bound"] = bound;
      doc["count"] = cells.size();
      nlohmann::json list = nlohmann::json::array();
      for (const Cell& x : cells) list.push_back(cell_to_json(x));
      doc["cells"] = std::move(list);
      write_json(output, out, doc);
    } else if (app.got_subcommand(compose)) {
      AugmentedComplex K = load_complex(input, in);
      Cell lhs = cell_from_json(K, load_json(lhs_path, in));
      Cell rhs = cell_from_json(K, load_json(rhs_path, in));
      write_json(output, out, cell_to_json(adc::compose(level, lhs, rhs)));
    } else if (app.got_subcommand(decompose)) {
      AugmentedComplex K = load_complex(input, in);
      Cell x = cell_from_json(K, load_json(cell_path, in));
      write_text(output, out, to_word(decompose_full(x)) + "\n");
    } else if (app.got_subcommand(tensor_cmd)) {
      AugmentedComplex K = load_complex(input, in);
      AugmentedComplex L = load_complex(input2, in);
      write_json(output, out, complex_to_json(adc::tensor(K, L)));
    } else if (app.got_subcommand(hom_cmd)) {
      if (variant != "standard" && variant != "prime") {
        throw CLI::ValidationError("hom", "variant must be standard or prime");
      }
      AugmentedComplex K = load_complex(input, in);
      AugmentedComplex L = load_complex(input2, in);
      AugmentedComplex H = adc::hom(
          K, L, variant == "prime" ? HomVariant::prime : HomVariant::standard);
      nlohmann::json doc;
      doc["report"] = validation_json(H.validate());
      try {
        std::size_t zeros = hom_zero_cells(H, Int(bound)).size();
        std::size_t morphisms = enumerate_morphisms(K, L, Int(bound)).size();
        doc["report"]["zero_cells"] = zeros;
        doc["report"]["morphisms"] = morphisms;
        doc["report"]["zero_cells_match_morphisms"] = zeros == morphisms;
      } catch (const std::domain_error&) {
        doc["report"]["zero_cells"] = nullptr; // search space too large
      }
      doc["complex"] = complex_to_json(H);
      write_json(output, out, doc);
    } else if (app.got_subcommand(present)) {
      AugmentedComplex K = load_complex(input, in);
      write_text(output, out, presentation(K).to_text());
    }
    return 0;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace adc
