#include "tpa/io.hpp"

#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <set>
#include <sstream>

namespace tpa {

using Json = nlohmann::ordered_json;

namespace {

FieldSpec field_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Q") return FieldSpec::rationals();
    throw ParseError("unknown field '" + j.get<std::string>() +
                     "' (expected \"Q\" or {\"GF\": p})");
  }
  if (j.is_object() && j.contains("GF") &&
      j["GF"].is_number_unsigned()) {
    return FieldSpec::prime_field(j["GF"].get<std::uint32_t>());
  }
  throw ParseError("malformed \"field\" entry");
}

Json field_to_json(const FieldSpec& spec) {
  if (spec.is_rationals()) return Json("Q");
  Json j;
  j["GF"] = spec.modulus();
  return j;
}

void read_table(const Json& doc, const char* key, bool is_bracket, int dim,
                const FieldSpec& spec, AlgebraDef::Builder& builder) {
  if (!doc.contains(key)) return;
  const Json& table = doc[key];
  if (!table.is_array()) throw ParseError(std::string(key) + " must be a list");
  std::set<std::pair<int, int>> seen;
  for (const Json& entry : table) {
    if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") ||
        !entry.contains("terms"))
      throw ParseError(std::string(key) +
                       " entries need \"i\", \"j\" and \"terms\"");
    const int i = entry["i"].get<int>();
    const int j = entry["j"].get<int>();
    if (i < 0 || j < 0 || i >= dim || j >= dim)
      throw ParseError("index out of range in " + std::string(key));
    if (is_bracket ? i >= j : i > j)
      throw ParseError(std::string(key) + " entries need " +
                       (is_bracket ? "i < j" : "i <= j"));
    if (!seen.insert({i, j}).second)
      throw ParseError("duplicate pair (" + std::to_string(i) + ", " +
                       std::to_string(j) + ") in " + key);
    std::set<int> seen_k;
    for (const Json& term : entry["terms"]) {
      if (!term.is_object() || !term.contains("k") || !term.contains("coeff"))
        throw ParseError("terms need \"k\" and \"coeff\"");
      const int k = term["k"].get<int>();
      if (k < 0 || k >= dim)
        throw ParseError("term index out of range in " + std::string(key));
      if (!seen_k.insert(k).second)
        throw ParseError("duplicate term index " + std::to_string(k));
      const Scalar c = parse_scalar(term["coeff"].get<std::string>(), spec);
      if (is_bracket)
        builder.bracket(i, j, k, c);
      else
        builder.product(i, j, k, c);
    }
  }
}

}  // namespace

AlgebraDef parse_algebra_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(std::string("invalid JSON: ") + err.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("field") || !doc.contains("dim"))
      throw ParseError("document needs \"field\" and \"dim\"");
    const FieldSpec spec = field_from_json(doc["field"]);
    if (!doc["dim"].is_number_unsigned())
      throw ParseError("\"dim\" must be a non-negative integer");
    const int dim = doc["dim"].get<int>();
    AlgebraDef::Builder builder(spec, dim);
    if (doc.contains("names")) {
      std::vector<std::string> names;
      for (const Json& name : doc["names"])
        names.push_back(name.get<std::string>());
      builder.set_names(std::move(names));
    }
    read_table(doc, "product", false, dim, spec, builder);
    read_table(doc, "bracket", true, dim, spec, builder);
    return builder.build();
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(std::string("malformed document: ") + err.what());
  } catch (const DimensionMismatchError& err) {
    throw ParseError(std::string("malformed document: ") + err.what());
  } catch (const InvalidAlgebraError& err) {
    throw ParseError(std::string("malformed document: ") + err.what());
  }
}

AlgebraDef read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_algebra_text(buffer.str());
}

std::string algebra_to_text(const AlgebraDef& a) {
  Json doc;
  doc["field"] = field_to_json(a.spec());
  doc["dim"] = a.dim();
  doc["names"] = a.names();
  Json product = Json::array();
  Json bracket = Json::array();
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i; j < a.dim(); ++j) {
      Json terms = Json::array();
      for (int k = 0; k < a.dim(); ++k) {
        const Scalar& c = a.product_entry(i, j, k);
        if (c.is_zero()) continue;
        terms.push_back(Json{{"k", k}, {"coeff", c.to_string()}});
      }
      if (!terms.empty())
        product.push_back(Json{{"i", i}, {"j", j}, {"terms", terms}});
      if (j > i) {
        Json bterms = Json::array();
        for (int k = 0; k < a.dim(); ++k) {
          const Scalar& c = a.bracket_entry(i, j, k);
          if (c.is_zero()) continue;
          bterms.push_back(Json{{"k", k}, {"coeff", c.to_string()}});
        }
        if (!bterms.empty())
          bracket.push_back(Json{{"i", i}, {"j", j}, {"terms", bterms}});
      }
    }
  doc["product"] = product;
  doc["bracket"] = bracket;
  return doc.dump(2) + "\n";
}

void write_algebra_file(const AlgebraDef& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << algebra_to_text(a);
}

FieldSpec parse_field_name(const std::string& text) {
  if (text == "Q" || text == "q") return FieldSpec::rationals();
  std::string body;
  if (text.rfind("GF(", 0) == 0 && text.back() == ')')
    body = text.substr(3, text.size() - 4);
  else if (text.rfind("GF", 0) == 0)
    body = text.substr(2);
  if (!body.empty()) {
    try {
      return FieldSpec::prime_field(
          static_cast<std::uint32_t>(std::stoul(body)));
    } catch (const std::logic_error&) {
      throw ParseError("bad field modulus '" + body + "'");
    }
  }
  throw ParseError("unknown field '" + text + "' (expected Q or GF<p>)");
}

std::uint64_t table_hash(const AlgebraDef& a) {
  std::uint64_t hash = 1469598103934665603ULL;
  auto mix = [&hash](const std::string& text) {
    for (const unsigned char c : text) {
      hash ^= c;
      hash *= 1099511628211ULL;
    }
    hash ^= 0xff;
    hash *= 1099511628211ULL;
  };
  mix(a.spec().to_string());
  mix(std::to_string(a.dim()));
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k) {
        const Scalar& p = a.product_entry(i, j, k);
        const Scalar& b = a.bracket_entry(i, j, k);
        if (!p.is_zero())
          mix("p" + std::to_string(i) + "," + std::to_string(j) + "," +
              std::to_string(k) + "=" + p.to_string());
        if (!b.is_zero())
          mix("b" + std::to_string(i) + "," + std::to_string(j) + "," +
              std::to_string(k) + "=" + b.to_string());
      }
  return hash;
}

namespace {

std::string hash_hex(std::uint64_t value) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << value;
  return os.str();
}

Json subspace_json(const Subspace& s) {
  Json rows = Json::array();
  for (int i = 0; i < s.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < s.ambient(); ++j)
      row.push_back(s.basis()(i, j).to_string());
    rows.push_back(row);
  }
  Json j;
  j["dim"] = s.dim();
  j["basis"] = rows;
  return j;
}

Json series_json(const SeriesRecord& record) {
  Json terms = Json::array();
  for (const Subspace& term : record.terms) terms.push_back(subspace_json(term));
  Json j;
  j["terms"] = terms;
  j["terminated"] = record.terminated;
  if (record.index) j["index"] = *record.index;
  return j;
}

std::string opt_int(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "-";
}

void render_series_text(std::ostream& out, const char* label,
                        const SeriesRecord& record) {
  out << "  " << label << ":";
  for (const Subspace& term : record.terms) out << " " << term.to_string();
  if (record.terminated)
    out << "  (terminates, index " << *record.index << ")";
  else
    out << "  (stabilizes above zero)";
  out << "\n";
}

}  // namespace

std::string render_validation(const AlgebraDef& a,
                              const ValidationReport& report,
                              ReportFormat format) {
  if (format == ReportFormat::Structured) {
    Json j;
    j["valid"] = report.ok();
    Json violations = Json::array();
    for (const AxiomViolation& v : report.violations) {
      Json entry;
      entry["axiom"] = axiom_name(v.axiom);
      entry["witness"] = v.describe(a);
      violations.push_back(entry);
    }
    j["violations"] = violations;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  if (report.ok()) {
    os << "axioms: all hold (commutativity, associativity, antisymmetry, "
          "jacobi, transposed_leibniz)\n";
  } else {
    os << "axioms: " << report.violations.size() << " violation(s)\n";
    for (const AxiomViolation& v : report.violations)
      os << "  " << v.describe(a) << "\n";
  }
  return os.str();
}

int write_theorem_table(const std::vector<TheoremVerdict>& verdicts,
                        ReportFormat format, std::ostream& out) {
  int violated = 0;
  for (const TheoremVerdict& v : verdicts)
    if (v.status == VerdictStatus::Violated) ++violated;
  if (format == ReportFormat::Structured) {
    Json rows = Json::array();
    for (const TheoremVerdict& v : verdicts) {
      Json row;
      row["id"] = v.theorem_id;
      row["title"] = theorem_title(v.theorem_id);
      row["status"] = status_name(v.status);
      row["detail"] = v.detail;
      rows.push_back(row);
    }
    Json j;
    j["verdicts"] = rows;
    j["violated"] = violated;
    out << j.dump(2) << "\n";
    return violated;
  }
  for (const TheoremVerdict& v : verdicts) {
    std::ostringstream line;
    line << v.theorem_id << "  " << std::left << std::setw(17)
         << status_name(v.status) << " " << theorem_title(v.theorem_id);
    out << line.str() << "\n";
    if (!v.detail.empty()) out << "      " << v.detail << "\n";
  }
  out << "violated: " << violated << "\n";
  return violated;
}

int write_analysis_report(const AlgebraDef& a, const AnalyzeOptions& options,
                          std::ostream& out) {
  const ValidationReport axioms = validate_axioms(a);
  if (!axioms.ok())
    throw InvalidAlgebraError(axioms.violations.front().describe(a));

  const NilpotencyReport nilrep = nilpotency_report(a);
  const SeriesRecord lcs = lower_central_series(a, a.full_space());
  const SeriesRecord ds = derived_series(a, a.full_space());
  const Subspace ann = annihilator(a, a.full_space());
  const Subspace nil_a = nil_radical_assoc(a, options.caps);

  std::optional<Subspace> nil;
  std::string nil_marker;
  try {
    nil = nil_radical(a, options.caps);
  } catch (const UnsupportedError& err) {
    nil_marker = err.what();
  }

  std::optional<FrattiniPair> frat;
  std::string frat_marker;
  try {
    frat = frattini(a, options.caps);
  } catch (const UnsupportedError& err) {
    frat_marker = err.what();
  }

  std::optional<Subspace> jac;
  std::optional<SocleReport> soc;
  std::optional<std::vector<IdempotentInfo>> idems;
  std::string prime_only_marker = "unsupported over " + a.spec().to_string();
  if (a.spec().is_prime_field()) {
    jac = jacobson(a, options.caps);
    soc = socles(a, options.caps);
    idems = idempotent_scan(a, options.caps);
  }

  std::optional<std::vector<TheoremVerdict>> verdicts;
  if (options.with_theorems) verdicts = run_suite(a, options.caps);
  int violated = 0;
  if (verdicts)
    for (const TheoremVerdict& v : *verdicts)
      if (v.status == VerdictStatus::Violated) ++violated;

  if (options.format == ReportFormat::Structured) {
    Json j;
    j["input"] = Json{{"field", a.spec().to_string()},
                      {"dim", a.dim()},
                      {"names", a.names()},
                      {"table_hash", hash_hex(table_hash(a))}};
    j["axioms"] = Json{{"valid", true}};
    j["nilpotency"] =
        Json{{"nilpotent", nilrep.nilpotent},
             {"solvable", nilrep.solvable},
             {"assoc_nilpotent", nilrep.assoc_nilpotent},
             {"lie_nilpotent", nilrep.lie_nilpotent},
             {"nilpotency_class", opt_int(nilrep.nilpotency_class)},
             {"solvable_index", opt_int(nilrep.solvable_index)},
             {"engel_consistent", nilrep.engel_consistent}};
    j["series"] = Json{{"lower_central", series_json(lcs)},
                       {"derived", series_json(ds)}};
    j["annihilator"] = subspace_json(ann);
    Json radicals;
    radicals["nil_assoc"] = subspace_json(nil_a);
    if (nil)
      radicals["nil"] = subspace_json(*nil);
    else
      radicals["nil"] = nil_marker;
    j["radicals"] = radicals;
    Json frattini_section;
    if (frat) {
      frattini_section["subalgebra"] = subspace_json(frat->subalgebra);
      frattini_section["ideal"] = subspace_json(frat->ideal);
      const SeriesRecord fseries = frattini_series(a, options.caps);
      frattini_section["series_index"] = opt_int(fseries.index);
    } else {
      frattini_section["marker"] = frat_marker;
    }
    if (jac)
      frattini_section["jacobson"] = subspace_json(*jac);
    else
      frattini_section["jacobson"] = prime_only_marker;
    j["frattini"] = frattini_section;
    Json socle_section;
    if (soc) {
      socle_section["socle"] = subspace_json(soc->socle);
      socle_section["zero_socle"] = subspace_json(soc->zero_socle);
      socle_section["minimal_ideals"] = Json::array();
      for (const Subspace& m : soc->minimal)
        socle_section["minimal_ideals"].push_back(subspace_json(m));
    } else {
      socle_section["marker"] = prime_only_marker;
    }
    j["socles"] = socle_section;
    Json idem_section;
    if (idems) {
      Json list = Json::array();
      for (const IdempotentInfo& info : *idems)
        list.push_back(Json{{"element", to_string(info.element)},
                            {"principal", info.principal}});
      idem_section["idempotents"] = list;
    } else {
      idem_section["marker"] =
          prime_only_marker + " (supply candidates to is_idempotent)";
    }
    j["idempotents"] = idem_section;
    if (verdicts) {
      Json rows = Json::array();
      for (const TheoremVerdict& v : *verdicts)
        rows.push_back(Json{{"id", v.theorem_id},
                            {"status", status_name(v.status)},
                            {"detail", v.detail}});
      j["theorems"] = Json{{"verdicts", rows}, {"violated", violated}};
    }
    out << j.dump(2) << "\n";
    return violated;
  }

  out << "input: field " << a.spec().to_string() << ", dim " << a.dim()
      << ", table hash " << hash_hex(table_hash(a)) << "\n";
  out << render_validation(a, axioms, ReportFormat::Text);
  out << "nilpotency:\n"
      << "  nilpotent        " << (nilrep.nilpotent ? "yes" : "no")
      << "  (class " << opt_int(nilrep.nilpotency_class) << ")\n"
      << "  solvable         " << (nilrep.solvable ? "yes" : "no")
      << "  (index " << opt_int(nilrep.solvable_index) << ")\n"
      << "  assoc nilpotent  " << (nilrep.assoc_nilpotent ? "yes" : "no")
      << "\n"
      << "  lie nilpotent    " << (nilrep.lie_nilpotent ? "yes" : "no")
      << "\n";
  out << "series:\n";
  render_series_text(out, "lower central", lcs);
  render_series_text(out, "derived      ", ds);
  out << "annihilator of P: " << ann.to_string() << "\n";
  out << "radicals:\n";
  out << "  Nil_A: " << nil_a.to_string() << "\n";
  out << "  Nil:   " << (nil ? nil->to_string() : nil_marker) << "\n";
  out << "frattini:\n";
  if (frat) {
    out << "  F(P):   " << frat->subalgebra.to_string() << "\n";
    out << "  phi(P): " << frat->ideal.to_string() << "\n";
    const SeriesRecord fseries = frattini_series(a, options.caps);
    out << "  series index: " << opt_int(fseries.index) << "\n";
  } else {
    out << "  " << frat_marker << "\n";
  }
  out << "  J(P):   " << (jac ? jac->to_string() : prime_only_marker) << "\n";
  out << "socles:\n";
  if (soc) {
    out << "  Soc(P):  " << soc->socle.to_string() << "\n";
    out << "  Zsoc(P): " << soc->zero_socle.to_string() << "\n";
    out << "  minimal ideals: " << soc->minimal.size() << "\n";
  } else {
    out << "  " << prime_only_marker << "\n";
  }
  out << "idempotents:\n";
  if (idems) {
    if (idems->empty()) out << "  none\n";
    for (const IdempotentInfo& info : *idems)
      out << "  " << to_string(info.element)
          << (info.principal ? "  (principal)" : "") << "\n";
  } else {
    out << "  " << prime_only_marker
        << " (supply candidates to is_idempotent)\n";
  }
  if (verdicts) {
    out << "theorems:\n";
    write_theorem_table(*verdicts, ReportFormat::Text, out);
  }
  return violated;
}

}  // namespace tpa
