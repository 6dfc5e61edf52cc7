#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "tpa/cli.hpp"
#include "tpa/io.hpp"

using namespace tpa;

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::string work_path(const std::string& name) {
  return std::string(TPA_WORK_DIR) + "/" + name;
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
}

}  // namespace

TEST_CASE("definition file round trip") {
  for (const std::string& name : catalog_names()) {
    const AlgebraDef a = catalog(name, Q);
    const AlgebraDef back = parse_algebra_text(algebra_to_text(a));
    CHECK(back.dim() == a.dim());
    CHECK(back.spec() == a.spec());
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j) {
        CHECK(equal(back.product_basis(i, j), a.product_basis(i, j)));
        CHECK(equal(back.bracket_basis(i, j), a.bracket_basis(i, j)));
      }
  }
  // bytes are reproduced exactly as well
  const AlgebraDef exe = catalog("EX_E", FieldSpec::prime_field(5));
  const std::string text = algebra_to_text(exe);
  CHECK(algebra_to_text(parse_algebra_text(text)) == text);
}

TEST_CASE("malformed definition files") {
  CHECK_THROWS_AS(parse_algebra_text("not json"), ParseError);
  CHECK_THROWS_AS(parse_algebra_text("{}"), ParseError);
  CHECK_THROWS_AS(parse_algebra_text(R"({"field":"R","dim":1})"), ParseError);
  CHECK_THROWS_AS(
      parse_algebra_text(
          R"({"field":"Q","dim":1,"product":[{"i":0,"j":0,"terms":[{"k":3,"coeff":"1"}]}]})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_algebra_text(
          R"({"field":"Q","dim":2,"bracket":[{"i":1,"j":0,"terms":[{"k":0,"coeff":"1"}]}]})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_algebra_text(
          R"({"field":"Q","dim":2,"product":[{"i":0,"j":0,"terms":[{"k":0,"coeff":"1"}]},{"i":0,"j":0,"terms":[{"k":1,"coeff":"1"}]}]})"),
      ParseError);
  // characteristic 2 is rejected at the field level
  CHECK_THROWS_AS(parse_algebra_text(R"({"field":{"GF":2},"dim":1})"),
                  UnsupportedFieldError);
}

TEST_CASE("field names parse") {
  CHECK(parse_field_name("Q") == Q);
  CHECK(parse_field_name("GF3") == FieldSpec::prime_field(3));
  CHECK(parse_field_name("GF(5)") == FieldSpec::prime_field(5));
  CHECK_THROWS_AS(parse_field_name("R"), ParseError);
  CHECK_THROWS_AS(parse_field_name("GFx"), ParseError);
}

TEST_CASE("catalog command and validate") {
  const std::string path = work_path("exb.json");
  const CliRun write = run({"catalog", "EX_B", "--field", "GF3", "--out",
                            path});
  CHECK(write.code == kExitOk);
  const CliRun check = run({"validate", path});
  CHECK(check.code == kExitOk);
  CHECK(check.out.find("axioms: all hold") != std::string::npos);

  const CliRun listing = run({"catalog", "--list"});
  CHECK(listing.code == kExitOk);
  int lines = 0;
  for (char c : listing.out)
    if (c == '\n') ++lines;
  CHECK(lines == 5);

  CHECK(run({"catalog", "EX_Z", "--field", "Q"}).code == kExitParse);
  CHECK(run({"catalog"}).code == kExitParse);
}

TEST_CASE("validate flags violations with a witness") {
  const std::string path = work_path("tampered.json");
  write_file(path, R"({
    "field": "Q", "dim": 2,
    "product": [{"i":0,"j":0,"terms":[{"k":1,"coeff":"1"}]}],
    "bracket": [{"i":0,"j":1,"terms":[{"k":0,"coeff":"1"}]}]
  })");
  const CliRun result = run({"validate", path});
  CHECK(result.code == kExitInvalid);
  CHECK(result.out.find("transposed_leibniz") != std::string::npos);

  write_file(work_path("garbage.json"), "{{{");
  CHECK(run({"validate", work_path("garbage.json")}).code == kExitParse);
  CHECK(run({"validate", work_path("missing-file.json")}).code == kExitParse);
}

TEST_CASE("analyze reports") {
  const std::string exd = work_path("exd.json");
  REQUIRE(run({"catalog", "EX_D", "--field", "Q", "--out", exd}).code ==
          kExitOk);
  const CliRun report = run({"analyze", exd});
  CHECK(report.code == kExitOk);
  CHECK(report.out.find("lie nilpotent    yes") != std::string::npos);
  CHECK(report.out.find("Nil_A: span{(1, 0, 0), (0, 0, 1)}") !=
        std::string::npos);
  CHECK(report.out.find("Nil:   span{(1, 0, 0), (0, 0, 1)}") !=
        std::string::npos);
  CHECK(report.out.find("unsupported over Q") != std::string::npos);

  const std::string exc = work_path("exc3.json");
  REQUIRE(run({"catalog", "EX_C", "--field", "GF3", "--out", exc}).code ==
          kExitOk);
  const CliRun c3 = run({"analyze", exc});
  CHECK(c3.code == kExitOk);
  CHECK(c3.out.find("F(P):   {0}") != std::string::npos);
  CHECK(c3.out.find("phi(P): {0}") != std::string::npos);
  CHECK(c3.out.find("Zsoc(P): span{(0, 1)}") != std::string::npos);

  const std::string zero = work_path("zero.json");
  write_file(zero, R"({"field":"Q","dim":0})");
  CHECK(run({"analyze", zero}).code == kExitOk);

  // fixture written by the catalog command analyzes to the enumerated F
  const std::string exb = work_path("exb.json");
  const CliRun b3 = run({"analyze", exb, "--no-theorems"});
  CHECK(b3.code == kExitOk);
  CHECK(b3.out.find("F(P):   span{(0, 0, 1)}") != std::string::npos);
  CHECK(b3.out.find("J(P):   span{(0, 0, 1)}") != std::string::npos);
}

TEST_CASE("analyze exit codes") {
  const std::string tampered = work_path("tampered.json");
  CHECK(run({"analyze", tampered}).code == kExitInvalid);

  const std::string exc = work_path("exc3.json");
  const CliRun capped = run({"analyze", exc, "--max-vectors", "4"});
  CHECK(capped.code == kExitCap);
}

TEST_CASE("reports are byte-identical across runs") {
  const std::string exc = work_path("exc3.json");
  for (const std::string format : {"text", "structured"}) {
    const CliRun first = run({"analyze", exc, "--format", format});
    const CliRun second = run({"analyze", exc, "--format", format});
    CHECK(first.code == kExitOk);
    CHECK(first.out == second.out);
    CHECK(!first.out.empty());
  }
}

TEST_CASE("theorems command") {
  const std::string exb = work_path("exb.json");
  const CliRun table = run({"theorems", exb});
  CHECK(table.code == kExitOk);
  CHECK(table.out.find("violated: 0") != std::string::npos);
  CHECK(table.out.find("T26") != std::string::npos);

  CHECK(run({"theorems", work_path("tampered.json")}).code == kExitInvalid);
  CHECK(run({"theorems"}).code == kExitParse);

  const CliRun gen1 = run({"theorems", "--generator", "derivation_family",
                           "--count", "5", "--seed", "42", "--field", "GF3"});
  CHECK(gen1.code == kExitOk);
  CHECK(gen1.out.find("violated: 0") != std::string::npos);
  const CliRun gen2 = run({"theorems", "--generator", "derivation_family",
                           "--count", "5", "--seed", "42", "--field", "GF3"});
  CHECK(gen1.out == gen2.out);
}

TEST_CASE("the installed binary behaves like the in-process front end") {
  const std::string exb = work_path("exb.json");
  const std::string out_file = work_path("subprocess.out");
  const std::string command = std::string(TPA_CLI_PATH) + " validate " + exb +
                              " > " + out_file + " 2>/dev/null";
  const int status = std::system(command.c_str());
  REQUIRE(status != -1);
  CHECK(WEXITSTATUS(status) == kExitOk);
  std::ifstream in(out_file);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const CliRun inproc = run({"validate", exb});
  CHECK(buffer.str() == inproc.out);

  const int bad = std::system(
      (std::string(TPA_CLI_PATH) + " validate /nonexistent 2>/dev/null").c_str());
  REQUIRE(bad != -1);
  CHECK(WEXITSTATUS(bad) == kExitParse);
}
