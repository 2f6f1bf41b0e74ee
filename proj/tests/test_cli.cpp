#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "entcoh/commands.hpp"
#include "entcoh/structure_io.hpp"
#include "entcoh/zoo.hpp"

using namespace entcoh;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) {
    path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
           "/" + name;
  }
  ~TempFile() { std::remove(path.c_str()); }
  void write(const std::string& text) const {
    std::ofstream f(path, std::ios::binary);
    f << text;
  }
  std::string read() const {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
  }
};

}  // namespace

TEST_CASE("round trip: parse(emit(x)) == x on every zoo entry") {
  for (const auto& name : zoo_names()) {
    CAPTURE(name);
    auto ca = make_zoo(name);
    REQUIRE(ca.has_value());
    StructureFile sf = from_comodule(*ca);
    std::string text = emit_structure(sf);
    StructureFile back = parse_structure(text);
    CHECK(back.field == sf.field);
    CHECK(back.algebra.same_structure(sf.algebra));
    CHECK(back.coalgebra.comult == sf.coalgebra.comult);
    CHECK(back.coalgebra.counit == sf.coalgebra.counit);
    REQUIRE(back.coaction.has_value());
    CHECK(*back.coaction == *sf.coaction);
    // canonical form is a fixed point of emit . parse
    CHECK(emit_structure(back) == text);
  }
}

TEST_CASE("parser diagnostics") {
  auto ca = make_zoo("c4-c2");
  std::string good = emit_structure(from_comodule(*ca));

  SUBCASE("non-prime modulus") {
    std::string bad = good;
    auto pos = bad.find("\"rationals\"");
    REQUIRE(pos != std::string::npos);
    bad.replace(pos, 11, "\"prime\", \"p\": 4");
    try {
      parse_structure(bad);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("field.p") != std::string::npos);
    }
  }

  SUBCASE("coaction with wrong shape names the key") {
    StructureFile sf = from_comodule(*ca);
    sf.coaction = Matrix(3, 4);  // wrong row count
    try {
      parse_structure(emit_structure(sf));
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("coaction") != std::string::npos);
    }
  }

  SUBCASE("not JSON at all") {
    CHECK_THROWS_AS(parse_structure("not json"), ParseError);
  }

  SUBCASE("bad scalar under a prime field") {
    auto f2 = make_zoo("c4-c2-f2");
    std::string text = emit_structure(from_comodule(*f2));
    auto pos = text.find("\"1\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 3, "\"1/2\"");
    CHECK_THROWS_AS(parse_structure(text), ParseError);
  }
}

TEST_CASE("zoo emit / check pipeline") {
  TempFile file("entcoh_cli_h4.json");
  RunResult emit = run({"zoo", "sweedler-h4", "--emit", file.path});
  CHECK(emit.code == 0);
  RunResult check = run({"check", file.path});
  CHECK(check.code == 0);
  CHECK(check.out.find("result: ok") != std::string::npos);
}

TEST_CASE("verify on C4/C2 with --self: exit 0 and deterministic output") {
  TempFile file("entcoh_cli_c4c2.json");
  REQUIRE(run({"zoo", "c4-c2", "--emit", file.path}).code == 0);
  RunResult first = run({"verify", file.path, "--self", "--json"});
  RunResult second = run({"verify", file.path, "--self", "--json"});
  CHECK(first.code == 0);
  CHECK(first.out == second.out);  // byte-identical
  CHECK(first.out.find("\"verified\": true") != std::string::npos);
  CHECK(first.out.find("\"schema\": 1") != std::string::npos);
}

TEST_CASE("galois on the non-Galois control exits 1") {
  TempFile file("entcoh_cli_ng.json");
  REQUIRE(run({"zoo", "non-galois", "--emit", file.path}).code == 0);
  RunResult res = run({"galois", file.path});
  CHECK(res.code == 1);
  CHECK(res.out.find("is_galois: false") != std::string::npos);
}

TEST_CASE("usage and parse errors exit 2") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check", "/nonexistent/file.json"}).code == 2);
  CHECK(run({"verify"}).code == 2);  // missing file

  TempFile file("entcoh_cli_badjson.json");
  file.write("{]");
  CHECK(run({"check", file.path}).code == 2);

  TempFile c4("entcoh_cli_c4.json");
  REQUIRE(run({"zoo", "c4-c2", "--emit", c4.path}).code == 0);
  // both or neither coefficient selector
  CHECK(run({"verify", c4.path}).code == 2);
  CHECK(run({"verify", c4.path, "--self", "--bimodule", c4.path}).code == 2);
}

TEST_CASE("cohomology via an explicit bimodule file") {
  auto ca = make_zoo("trivial-x2");
  StructureFile sf = from_comodule(*ca);
  sf.bimodule = regular_bimodule(ca->a);
  TempFile main_file("entcoh_cli_tx2.json");
  TempFile bim_file("entcoh_cli_tx2_m.json");
  main_file.write(emit_structure(from_comodule(*ca)));
  bim_file.write(emit_structure(sf));
  RunResult res =
      run({"cohomology", main_file.path, "--bimodule", bim_file.path});
  CHECK(res.code == 0);
  CHECK(res.out.find("table: (2, 1, 1, 1)") != std::string::npos);
}

TEST_CASE("fuzz command") {
  RunResult res = run({"fuzz", "--trials", "0", "--seed", "1"});
  CHECK(res.code == 0);
  CHECK(res.out.find("trials: 0") != std::string::npos);
  RunResult res2 = run({"fuzz", "--dim-a", "2", "--dim-c", "2", "--trials",
                        "10", "--seed", "3", "--json"});
  CHECK(res2.code == 0);
  CHECK(res2.out.find("\"findings\": 0") != std::string::npos);
}

TEST_CASE("hochschild command") {
  TempFile file("entcoh_cli_tx2f2.json");
  REQUIRE(run({"zoo", "trivial-x2-f2", "--emit", file.path}).code == 0);
  RunResult res = run({"hochschild", file.path, "--self"});
  CHECK(res.code == 0);
  CHECK(res.out.find("table: (2, 2, 2, 2)") != std::string::npos);
}
