#ifndef TPA_IO_HPP
#define TPA_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "tpa/theorems.hpp"

namespace tpa {

// Definition file format: a single JSON document
//   {
//     "field": "Q" | {"GF": p},
//     "dim": n,
//     "names": ["e1", ...],                  // optional
//     "product": [{"i":0,"j":0,"terms":[{"k":1,"coeff":"1"}]}, ...],
//     "bracket": [{"i":0,"j":1,"terms":[{"k":2,"coeff":"1"}]}, ...]
//   }
// Indices are 0-based; product entries need i <= j, bracket entries i < j;
// omitted pairs are zero; coefficients use the scalar grammar. Duplicate
// pairs or duplicate k entries are rejected.
AlgebraDef parse_algebra_text(const std::string& text);
AlgebraDef read_algebra_file(const std::string& path);
std::string algebra_to_text(const AlgebraDef& a);
void write_algebra_file(const AlgebraDef& a, const std::string& path);

// "Q", "GF3" or "GF(3)"
FieldSpec parse_field_name(const std::string& text);

// FNV-1a over the canonical serialization of the tables.
std::uint64_t table_hash(const AlgebraDef& a);

enum class ReportFormat { Text, Structured };

struct AnalyzeOptions {
  EnumCaps caps;
  ReportFormat format = ReportFormat::Text;
  bool with_theorems = true;
};

// The full analysis report (digest, axioms, nilpotency, series, radicals,
// Frattini data, socles, idempotents, theorem verdicts), written to `out`.
// Sections whose computation the field does not support carry explicit
// markers. Deterministic: identical inputs and flags give identical bytes.
// Returns the number of violated theorem verdicts.
int write_analysis_report(const AlgebraDef& a, const AnalyzeOptions& options,
                          std::ostream& out);

// Verdict table for run_suite, one line per theorem. Returns the number of
// violated verdicts.
int write_theorem_table(const std::vector<TheoremVerdict>& verdicts,
                        ReportFormat format, std::ostream& out);

std::string render_validation(const AlgebraDef& a,
                              const ValidationReport& report,
                              ReportFormat format);

}  // namespace tpa

#endif  // TPA_IO_HPP
