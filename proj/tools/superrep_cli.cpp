// Command-line surface for the superspecies classification library.
// JSON in, JSON out (DOT behind a flag); deterministic output.
//
// Exit codes: 0 success, 1 usage error, 2 validation failure,
//             3 undecided / budget exceeded.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "superrep/json_io.hpp"

using namespace superrep;

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open input file '" + path + "'");
  json j;
  in >> j;
  return j;
}

enum class InputKind { Algebra, Species, Quiver, SuperquiverK };

InputKind detect_kind(const json& j) {
  if (j.contains("basis") && j.contains("table")) return InputKind::Algebra;
  if (j.contains("vertices")) {
    const auto& v = j.at("vertices");
    if (!v.empty() && v[0].is_object()) {
      if (v[0].contains("type")) return InputKind::Species;
      if (v[0].contains("color")) return InputKind::SuperquiverK;
    }
    return InputKind::Quiver;
  }
  throw validation_error("cannot determine the input kind (algebra, species, quiver or superquiver)");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw validation_error("cannot open output file '" + out_path + "'");
    out << text;
    if (text.empty() || text.back() != '\n') out << "\n";
  }
}

void emit_json(const ordered_json& j, const std::string& out_path) { emit(j.dump(2), out_path); }

OracleBudget budget_from_env() {
  OracleBudget b;
  if (const char* env = std::getenv("SUPERREP_BUDGET")) {
    long long v = std::atoll(env);
    if (v > 0) {
      b.max_tuples = v;
      b.max_space_enum = v;
    }
  }
  return b;
}

std::string quiver_class_string(const std::vector<DiagramClass>& cls) {
  std::string out;
  for (const auto& c : cls) {
    if (!out.empty()) out += "+";
    out += c.str();
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"superrep: superspecies, superquivers and graded representation type"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may appear after the subcommand

  std::string field_arg = "Q";
  app.add_option("--field", field_arg, "ground field, Q or Fp:<p>")->capture_default_str();
  std::string out_path;
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  // validate
  auto* cmd_validate = app.add_subcommand("validate", "check structural invariants of a JSON input");
  std::string validate_file;
  cmd_validate->add_option("input", validate_file, "input JSON file")->required();

  // quiver / superquiver
  auto* cmd_quiver = app.add_subcommand("quiver", "quiver Q_S of a superspecies");
  std::string quiver_file;
  bool quiver_dot = false;
  cmd_quiver->add_option("input", quiver_file, "species JSON file")->required();
  cmd_quiver->add_flag("--dot", quiver_dot, "emit DOT instead of JSON");

  auto* cmd_superquiver = app.add_subcommand("superquiver", "superquiver Q(S) of a superspecies");
  std::string superquiver_file;
  bool superquiver_dot = false;
  cmd_superquiver->add_option("input", superquiver_file, "species JSON file")->required();
  cmd_superquiver->add_flag("--dot", superquiver_dot, "emit DOT instead of JSON");

  // classify
  auto* cmd_classify = app.add_subcommand("classify", "graded representation type of an acyclic superspecies");
  std::string classify_file, method = "both";
  cmd_classify->add_option("input", classify_file, "species JSON file")->required();
  cmd_classify->add_option("--method", method, "quiver | table | both")->capture_default_str();

  // roots
  auto* cmd_roots = app.add_subcommand("roots", "positive roots of a Dynkin diagram");
  std::string roots_file, roots_diagram;
  cmd_roots->add_option("input", roots_file, "species or quiver JSON file");
  cmd_roots->add_option("--diagram", roots_diagram, "named diagram such as A3, D5, E6");

  // tensor-dim
  auto* cmd_tdim = app.add_subcommand("tensor-dim", "K-dimension of the graded tensor algebra T(S)");
  std::string tdim_file;
  cmd_tdim->add_option("input", tdim_file, "species JSON file")->required();

  // smash
  auto* cmd_smash = app.add_subcommand("smash", "smash product A # KZ2* of a graded algebra");
  std::string smash_file;
  cmd_smash->add_option("input", smash_file, "algebra JSON file")->required();

  // species-of
  auto* cmd_species_of = app.add_subcommand("species-of", "graded species of an algebra");
  std::string species_of_file, idems_file;
  cmd_species_of->add_option("input", species_of_file, "algebra JSON file")->required();
  cmd_species_of->add_option("--idems", idems_file, "JSON file with idempotent coordinate vectors");

  // count-indec
  auto* cmd_count = app.add_subcommand("count-indec", "brute-force indecomposable count over F_p");
  std::string count_file;
  int count_total = 4, count_per_vertex = 2;
  cmd_count->add_option("input", count_file, "species or quiver JSON file")->required();
  cmd_count->add_option("--max-total-dim", count_total, "total dimension budget")->capture_default_str();
  cmd_count->add_option("--per-vertex-max", count_per_vertex, "per-vertex dimension budget")->capture_default_str();

  // verify-equivalence
  auto* cmd_verify = app.add_subcommand("verify-equivalence", "check rep S = rep Q_S on enumerated representations");
  std::string verify_file;
  int verify_total = 3;
  cmd_verify->add_option("input", verify_file, "species JSON file")->required();
  cmd_verify->add_option("--max-total-dim", verify_total, "total dimension budget")->capture_default_str();

  // dot
  auto* cmd_dot = app.add_subcommand("dot", "DOT export of a quiver, superquiver or species");
  std::string dot_file, dot_kind = "superquiver";
  cmd_dot->add_option("input", dot_file, "quiver, superquiver or species JSON file")->required();
  cmd_dot->add_option("--kind", dot_kind, "for species input: quiver | superquiver")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    bool field_given = app.count("--field") > 0;
    Field field = Field::parse(field_arg);

    if (cmd_validate->parsed()) {
      json j = read_json_file(validate_file);
      std::vector<std::string> violations;
      switch (detect_kind(j)) {
        case InputKind::Algebra: {
          try {
            violations = algebra_from_json(j).validate();
          } catch (const validation_error& e) {
            violations.push_back(e.what());
          }
          break;
        }
        case InputKind::Species: {
          try {
            violations = species_from_json(j).validate();
          } catch (const validation_error& e) {
            violations.push_back(e.what());
          }
          break;
        }
        case InputKind::Quiver: {
          try {
            quiver_from_json(j).check();
          } catch (const validation_error& e) {
            violations.push_back(e.what());
          }
          break;
        }
        case InputKind::SuperquiverK: {
          try {
            Superquiver q = superquiver_from_json(j);
            q.check();
            if (!is_realizable(q)) violations.push_back("superquiver is not realizable by any superspecies");
          } catch (const validation_error& e) {
            violations.push_back(e.what());
          }
          break;
        }
      }
      ordered_json outj;
      outj["valid"] = violations.empty();
      outj["violations"] = violations;
      emit_json(outj, out_path);
      return violations.empty() ? 0 : 2;
    }

    if (cmd_quiver->parsed()) {
      Superspecies s = species_from_json(read_json_file(quiver_file));
      Quiver q = quiver_of(s);
      if (quiver_dot)
        emit(dot_export(q), out_path);
      else
        emit_json(quiver_to_json(q), out_path);
      return 0;
    }

    if (cmd_superquiver->parsed()) {
      Superspecies s = species_from_json(read_json_file(superquiver_file));
      Superquiver q = superquiver_of(s);
      if (superquiver_dot)
        emit(dot_export(q), out_path);
      else
        emit_json(superquiver_to_json(q), out_path);
      return 0;
    }

    if (cmd_classify->parsed()) {
      if (method != "quiver" && method != "table" && method != "both") {
        std::cerr << "classify: unknown --method '" << method << "'\n";
        return 1;
      }
      Superspecies s = species_from_json(read_json_file(classify_file));
      ordered_json outj;
      std::optional<RepType> via_quiver, via_table;
      if (method != "table") via_quiver = classify_via_quiver(s);
      if (method != "quiver") via_table = classify_via_table(s);
      if (via_quiver && via_table && *via_quiver != *via_table) {
        std::cerr << "classify: the quiver route says " << to_string(*via_quiver)
                  << " but the family table says " << to_string(*via_table)
                  << "; this would contradict the classification theorems\n";
        return 2;
      }
      outj["type"] = to_string(via_quiver ? *via_quiver : *via_table);
      if (via_table) {
        auto fams = component_families(s);
        std::vector<std::string> names;
        for (const auto& f : fams) names.push_back(f ? f->str() : "none");
        if (names.size() == 1)
          outj["family"] = names[0];
        else
          outj["families"] = names;
      }
      if (via_quiver) {
        auto cls = classify_diagram(underlying_diagram(quiver_of(s)));
        outj["quiver_class"] = quiver_class_string(cls);
      }
      emit_json(outj, out_path);
      return 0;
    }

    if (cmd_roots->parsed()) {
      Diagram d;
      if (!roots_diagram.empty()) {
        d = make_diagram(DiagramClass::parse(roots_diagram));
      } else if (!roots_file.empty()) {
        json j = read_json_file(roots_file);
        if (detect_kind(j) == InputKind::Species)
          d = underlying_diagram(quiver_of(species_from_json(j)));
        else
          d = underlying_diagram(quiver_from_json(j));
      } else {
        std::cerr << "roots: need --diagram or an input file\n";
        return 1;
      }
      auto roots = positive_roots(d);
      ordered_json outj;
      outj["count"] = roots.size();
      outj["roots"] = roots;
      emit_json(outj, out_path);
      return 0;
    }

    if (cmd_tdim->parsed()) {
      Superspecies s = species_from_json(read_json_file(tdim_file));
      auto dim = tensor_algebra_dim(s);
      ordered_json outj;
      if (dim)
        outj["dim"] = *dim;
      else
        outj["dim"] = "infinite";
      emit_json(outj, out_path);
      return 0;
    }

    if (cmd_smash->parsed()) {
      GradedAlgebra a = algebra_from_json(read_json_file(smash_file));
      emit_json(algebra_to_json(smash_product(a)), out_path);
      return 0;
    }

    if (cmd_species_of->parsed()) {
      GradedAlgebra a = algebra_from_json(read_json_file(species_of_file));
      std::vector<Vec> idems;
      if (!idems_file.empty()) {
        json j = read_json_file(idems_file);
        for (const auto& row : j) {
          Vec v;
          for (const auto& entry : row) v.push_back(Scalar::parse(a.field, entry.get<std::string>()));
          if (static_cast<int>(v.size()) != a.dim())
            throw validation_error("idempotent vector length does not match the algebra dimension");
          idems.push_back(v);
        }
      } else {
        idems.push_back(a.one);
      }
      Superspecies s = graded_species_of(a, idems);
      emit_json(species_to_json(s), out_path);
      return 0;
    }

    if (cmd_count->parsed()) {
      if (!field_given) field = Field::Fp(2);
      OracleBudget budget = budget_from_env();
      budget.max_total_dim = count_total;
      budget.per_vertex_dim = count_per_vertex;
      json j = read_json_file(count_file);
      IndecCountReport report;
      if (detect_kind(j) == InputKind::Species)
        report = count_indecomposables(species_from_json(j), field, budget);
      else
        report = count_indecomposables(quiver_from_json(j), field, budget);
      ordered_json outj = indec_report_to_json(report);
      outj["field"] = field.str();
      emit_json(outj, out_path);
      return 0;
    }

    if (cmd_verify->parsed()) {
      if (!field_given) field = Field::Fp(2);
      OracleBudget budget = budget_from_env();
      budget.max_total_dim = verify_total;
      Superspecies s = species_from_json(read_json_file(verify_file));
      EquivalenceReport report = verify_equivalence(s, field, budget);
      ordered_json outj = equivalence_report_to_json(report);
      outj["field"] = field.str();
      emit_json(outj, out_path);
      return report.ok() ? 0 : 2;
    }

    if (cmd_dot->parsed()) {
      json j = read_json_file(dot_file);
      switch (detect_kind(j)) {
        case InputKind::Species: {
          Superspecies s = species_from_json(j);
          if (dot_kind == "quiver")
            emit(dot_export(quiver_of(s)), out_path);
          else
            emit(dot_export(superquiver_of(s)), out_path);
          break;
        }
        case InputKind::Quiver: emit(dot_export(quiver_from_json(j)), out_path); break;
        case InputKind::SuperquiverK: emit(dot_export(superquiver_from_json(j)), out_path); break;
        default: throw validation_error("dot: input must be a species, quiver or superquiver");
      }
      return 0;
    }

    std::cerr << "no subcommand\n";
    return 1;
  } catch (const budget_error& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 3;
  } catch (const undecided_error& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return 3;
  } catch (const validation_error& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
