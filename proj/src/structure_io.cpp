#include "entcoh/structure_io.hpp"

#include <json.hpp>

namespace entcoh {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& key, const std::string& why) {
  throw ParseError("structure file, key '" + key + "': " + why);
}

const json& get(const json& j, const std::string& key) {
  auto it = j.find(key);
  if (it == j.end()) fail(key, "missing");
  return *it;
}

Scalar parse_scalar(const Field& f, const json& j, const std::string& key) {
  if (!j.is_string()) fail(key, "scalar must be a string");
  try {
    return f.parse(j.get<std::string>());
  } catch (const Error& e) {
    fail(key, e.what());
  }
}

Vec parse_vec(const Field& f, const json& j, std::size_t len,
              const std::string& key) {
  if (!j.is_array() || j.size() != len)
    fail(key, "expected an array of length " + std::to_string(len));
  Vec v(len);
  for (std::size_t i = 0; i < len; ++i)
    v[i] = parse_scalar(f, j[i], key + "[" + std::to_string(i) + "]");
  return v;
}

Matrix parse_matrix(const Field& f, const json& j, std::size_t rows,
                    std::size_t cols, const std::string& key) {
  if (!j.is_array() || j.size() != rows)
    fail(key, "expected " + std::to_string(rows) + " rows, got " +
                  std::to_string(j.is_array() ? j.size() : 0));
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    Vec row = parse_vec(f, j[r], cols, key + "[" + std::to_string(r) + "]");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = row[c];
  }
  return m;
}

Field parse_field(const json& j) {
  if (!j.is_object()) fail("field", "must be an object");
  const json& kj = get(j, "kind");
  std::string kind = kj.is_string() ? kj.get<std::string>() : "";
  if (kind == "rationals") return Field(FieldSpec::rationals());
  if (kind == "prime") {
    const json& pj = get(j, "p");
    if (!pj.is_number_integer()) fail("field.p", "must be an integer");
    long p = pj.get<long>();
    try {
      return Field(FieldSpec::prime(p));
    } catch (const Error& e) {
      fail("field.p", e.what());
    }
  }
  fail("field.kind", "must be \"rationals\" or \"prime\"");
}

json emit_scalar(const Field& f, const Scalar& s) { return f.to_string(s); }

json emit_vec(const Field& f, const Vec& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(emit_scalar(f, s));
  return a;
}

json emit_matrix(const Field& f, const Matrix& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(emit_vec(f, m.row(r)));
  return a;
}

std::size_t parse_dim(const json& j, const std::string& key) {
  const json& d = get(j, "dim");
  if (!d.is_number_unsigned() || d.get<std::size_t>() == 0)
    fail(key + ".dim", "must be a positive integer");
  return d.get<std::size_t>();
}

}  // namespace

StructureFile parse_structure(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("structure file is not valid JSON: ") +
                     e.what());
  }
  if (!j.is_object()) throw ParseError("structure file: top level not an object");
  if (j.contains("schema") && !(j["schema"].is_number_integer() &&
                                j["schema"].get<long>() == 1))
    fail("schema", "unsupported version");

  StructureFile sf;
  sf.field = parse_field(get(j, "field"));
  const Field& f = sf.field;

  {
    const json& ja = get(j, "algebra");
    if (!ja.is_object()) fail("algebra", "must be an object");
    std::size_t n = parse_dim(ja, "algebra");
    sf.algebra.field = f;
    sf.algebra.dim = n;
    sf.algebra.unit = parse_vec(f, get(ja, "unit"), n, "algebra.unit");
    const json& jm = get(ja, "mult");
    if (!jm.is_array() || jm.size() != n)
      fail("algebra.mult", "expected " + std::to_string(n) + " rows");
    sf.algebra.lmult.assign(n, Matrix(n, n));
    for (std::size_t i = 0; i < n; ++i) {
      if (!jm[i].is_array() || jm[i].size() != n)
        fail("algebra.mult[" + std::to_string(i) + "]",
             "expected " + std::to_string(n) + " products");
      for (std::size_t k = 0; k < n; ++k) {
        Vec p = parse_vec(f, jm[i][k], n,
                          "algebra.mult[" + std::to_string(i) + "][" +
                              std::to_string(k) + "]");
        for (std::size_t t = 0; t < n; ++t) sf.algebra.lmult[i].at(t, k) = p[t];
      }
    }
  }
  {
    const json& jc = get(j, "coalgebra");
    if (!jc.is_object()) fail("coalgebra", "must be an object");
    std::size_t m = parse_dim(jc, "coalgebra");
    sf.coalgebra.field = f;
    sf.coalgebra.dim = m;
    sf.coalgebra.counit =
        parse_vec(f, get(jc, "counit"), m, "coalgebra.counit");
    const json& jd = get(jc, "comult");
    if (!jd.is_array() || jd.size() != m)
      fail("coalgebra.comult", "expected " + std::to_string(m) + " tables");
    sf.coalgebra.comult.clear();
    for (std::size_t i = 0; i < m; ++i)
      sf.coalgebra.comult.push_back(parse_matrix(
          f, jd[i], m, m, "coalgebra.comult[" + std::to_string(i) + "]"));
  }
  std::size_t da = sf.algebra.dim, dc = sf.coalgebra.dim;
  if (j.contains("coaction"))
    sf.coaction = parse_matrix(f, j["coaction"], da * dc, da, "coaction");
  if (j.contains("entwining"))
    sf.entwining =
        parse_matrix(f, j["entwining"], da * dc, dc * da, "entwining");
  if (j.contains("bimodule")) {
    const json& jb = j["bimodule"];
    if (!jb.is_object()) fail("bimodule", "must be an object");
    std::size_t dm = parse_dim(jb, "bimodule");
    Bimodule bm;
    bm.over = sf.algebra;
    bm.dim = dm;
    const json& jl = get(jb, "left");
    const json& jr = get(jb, "right");
    if (!jl.is_array() || jl.size() != da)
      fail("bimodule.left", "expected " + std::to_string(da) + " matrices");
    if (!jr.is_array() || jr.size() != da)
      fail("bimodule.right", "expected " + std::to_string(da) + " matrices");
    for (std::size_t i = 0; i < da; ++i) {
      bm.left.push_back(parse_matrix(
          f, jl[i], dm, dm, "bimodule.left[" + std::to_string(i) + "]"));
      bm.right.push_back(parse_matrix(
          f, jr[i], dm, dm, "bimodule.right[" + std::to_string(i) + "]"));
    }
    sf.bimodule = std::move(bm);
  }
  return sf;
}

std::string emit_structure(const StructureFile& sf) {
  const Field& f = sf.field;
  json j = json::object();
  j["schema"] = 1;
  if (f.spec().kind == FieldSpec::Kind::rationals) {
    j["field"] = {{"kind", "rationals"}};
  } else {
    j["field"] = {{"kind", "prime"}, {"p", f.spec().p}};
  }
  {
    json ja = json::object();
    ja["dim"] = sf.algebra.dim;
    ja["unit"] = emit_vec(f, sf.algebra.unit);
    json jm = json::array();
    for (std::size_t i = 0; i < sf.algebra.dim; ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < sf.algebra.dim; ++k)
        row.push_back(emit_vec(f, sf.algebra.basis_product(i, k)));
      jm.push_back(std::move(row));
    }
    ja["mult"] = std::move(jm);
    j["algebra"] = std::move(ja);
  }
  {
    json jc = json::object();
    jc["dim"] = sf.coalgebra.dim;
    jc["counit"] = emit_vec(f, sf.coalgebra.counit);
    json jd = json::array();
    for (const Matrix& m : sf.coalgebra.comult)
      jd.push_back(emit_matrix(f, m));
    jc["comult"] = std::move(jd);
    j["coalgebra"] = std::move(jc);
  }
  if (sf.coaction) j["coaction"] = emit_matrix(f, *sf.coaction);
  if (sf.entwining) j["entwining"] = emit_matrix(f, *sf.entwining);
  if (sf.bimodule) {
    json jb = json::object();
    jb["dim"] = sf.bimodule->dim;
    json jl = json::array(), jr = json::array();
    for (const Matrix& m : sf.bimodule->left) jl.push_back(emit_matrix(f, m));
    for (const Matrix& m : sf.bimodule->right) jr.push_back(emit_matrix(f, m));
    jb["left"] = std::move(jl);
    jb["right"] = std::move(jr);
    j["bimodule"] = std::move(jb);
  }
  return j.dump(2) + "\n";
}

ComoduleAlgebra to_comodule(const StructureFile& sf) {
  if (!sf.coaction)
    throw PreconditionError("structure file has no coaction block");
  return ComoduleAlgebra{sf.algebra, sf.coalgebra, *sf.coaction};
}

Entwining to_entwining(const StructureFile& sf) {
  if (!sf.entwining)
    throw PreconditionError("structure file has no entwining block");
  return Entwining{sf.algebra, sf.coalgebra, *sf.entwining};
}

StructureFile from_comodule(const ComoduleAlgebra& ca) {
  StructureFile sf;
  sf.field = ca.a.field;
  sf.algebra = ca.a;
  sf.coalgebra = ca.c;
  sf.coaction = ca.coaction;
  return sf;
}

StructureFile from_entwining(const Entwining& e) {
  StructureFile sf;
  sf.field = e.a.field;
  sf.algebra = e.a;
  sf.coalgebra = e.c;
  sf.entwining = e.psi;
  return sf;
}

}  // namespace entcoh
