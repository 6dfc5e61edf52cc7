#include "tpa/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <iostream>

#include "tpa/io.hpp"

namespace tpa {

namespace {

int cmd_validate(const std::string& path, ReportFormat format,
                 std::ostream& out) {
  const AlgebraDef a = read_algebra_file(path);
  const ValidationReport report = validate_axioms(a);
  out << render_validation(a, report, format);
  return report.ok() ? kExitOk : kExitInvalid;
}

int cmd_analyze(const std::string& path, const AnalyzeOptions& options,
                std::ostream& out) {
  const AlgebraDef a = read_algebra_file(path);
  write_analysis_report(a, options, out);
  return kExitOk;
}

int cmd_theorems_file(const std::string& path, ReportFormat format,
                      const EnumCaps& caps, std::ostream& out) {
  const AlgebraDef a = read_algebra_file(path);
  const int violated = write_theorem_table(run_suite(a, caps), format, out);
  return violated == 0 ? kExitOk : kExitViolation;
}

int cmd_theorems_generator(const GeneratorSpec& spec, int count,
                           std::uint64_t seed, const EnumCaps& caps,
                           std::ostream& out) {
  const FuzzSummary summary = fuzz(spec, count, seed, caps);
  out << "generator: " << generator_kind_name(spec.kind) << " over "
      << spec.field.to_string() << "\n";
  out << "algebras: " << summary.total << "  (seeds " << seed << ".."
      << seed + summary.total - 1 << ")\n";
  out << "holds: " << summary.holds
      << "  hypothesis_unmet: " << summary.hypothesis_unmet
      << "  unsupported_field: " << summary.unsupported_field
      << "  violated: " << summary.violations.size() << "\n";
  for (const FuzzViolation& v : summary.violations)
    out << "  seed " << v.seed << " " << v.theorem_id << ": " << v.detail
        << "\n";
  return summary.violations.empty() ? kExitOk : kExitViolation;
}

int cmd_catalog(bool list, const std::string& name, const FieldSpec& field,
                const std::string& out_path, std::ostream& out) {
  if (list) {
    for (const std::string& entry : catalog_names())
      out << entry << "  " << catalog_summary(entry) << "\n";
    return kExitOk;
  }
  const AlgebraDef a = catalog(name, field);
  if (out_path.empty())
    out << algebra_to_text(a);
  else
    write_algebra_file(a, out_path);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact structure-constant calculator for transposed Poisson "
               "algebras"};
  app.require_subcommand(1);

  std::string path, format_name = "text", field_name = "Q", out_path;
  std::string generator_name;
  long long max_subspaces = EnumCaps{}.max_subspaces;
  long long max_vectors = EnumCaps{}.max_vectors;
  int count = 1, max_degree = 4;
  std::uint64_t seed = 1;
  bool list = false, no_theorems = false;

  CLI::App* validate = app.add_subcommand(
      "validate", "check the defining axioms of a definition file");
  validate->add_option("path", path, "algebra definition file")->required();
  validate->add_option("--format", format_name)
      ->check(CLI::IsMember({"text", "structured"}));

  CLI::App* analyze = app.add_subcommand(
      "analyze", "full structural report for a definition file");
  analyze->add_option("path", path, "algebra definition file")->required();
  analyze->add_option("--format", format_name)
      ->check(CLI::IsMember({"text", "structured"}));
  analyze->add_option("--max-subspaces", max_subspaces,
                      "cap on enumerated subspaces");
  analyze->add_option("--max-vectors", max_vectors,
                      "cap on exhaustive vector scans (p^n)");
  analyze->add_flag("--no-theorems", no_theorems,
                    "skip the theorem verdict section");

  CLI::App* theorems = app.add_subcommand(
      "theorems", "run the theorem check battery");
  theorems->add_option("path", path, "algebra definition file");
  theorems->add_option("--generator", generator_name,
                       "derivation_family | tensor_of_catalog | "
                       "direct_sum_of_catalog | base_change");
  theorems->add_option("--count", count, "number of generated algebras");
  theorems->add_option("--seed", seed, "base seed (per-index seeds count up)");
  theorems->add_option("--field", field_name, "Q or GF<p>");
  theorems->add_option("--max-degree", max_degree,
                       "derivation family truncation cap");
  theorems->add_option("--format", format_name)
      ->check(CLI::IsMember({"text", "structured"}));
  theorems->add_option("--max-subspaces", max_subspaces);
  theorems->add_option("--max-vectors", max_vectors);

  CLI::App* catalog_cmd = app.add_subcommand(
      "catalog", "write or list the built-in fixture algebras");
  catalog_cmd->add_flag("--list", list, "list fixture names");
  catalog_cmd->add_option("name", path, "fixture name (EX_A .. EX_E)");
  catalog_cmd->add_option("--field", field_name, "Q or GF<p>");
  catalog_cmd->add_option("--out", out_path, "output file (default: stdout)");

  std::vector<const char*> argv;
  argv.push_back("tpa");
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    const ReportFormat format = format_name == "structured"
                                    ? ReportFormat::Structured
                                    : ReportFormat::Text;
    EnumCaps caps;
    caps.max_subspaces = max_subspaces;
    caps.max_vectors = max_vectors;
    if (validate->parsed()) {
      code = cmd_validate(path, format, out);
    } else if (analyze->parsed()) {
      AnalyzeOptions options;
      options.caps = caps;
      options.format = format;
      options.with_theorems = !no_theorems;
      code = cmd_analyze(path, options, out);
    } else if (theorems->parsed()) {
      if (!generator_name.empty()) {
        GeneratorSpec spec{parse_generator_kind(generator_name),
                           parse_field_name(field_name), max_degree};
        code = cmd_theorems_generator(spec, count, seed, caps, out);
      } else if (!path.empty()) {
        code = cmd_theorems_file(path, format, caps, out);
      } else {
        err << "error: theorems needs a path or --generator\n";
        code = kExitParse;
      }
    } else if (catalog_cmd->parsed()) {
      if (!list && path.empty()) {
        err << "error: catalog needs a name or --list\n";
        code = kExitParse;
      } else {
        code = cmd_catalog(list, path, parse_field_name(field_name),
                           out_path, out);
      }
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    code = kExitParse;
  } catch (const UnknownNameError& e) {
    err << "error: " << e.what() << "\n";
    code = kExitParse;
  } catch (const UnsupportedFieldError& e) {
    err << "error: " << e.what() << "\n";
    code = kExitParse;
  } catch (const InvalidAlgebraError& e) {
    err << "error: " << e.what() << "\n";
    code = kExitInvalid;
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << "\n";
    code = kExitCap;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << "\n";
    code = 70;
  }
  const auto stop = std::chrono::steady_clock::now();
  err << "elapsed: "
      << std::chrono::duration<double>(stop - start).count() << "s\n";
  return code;
}

}  // namespace tpa
