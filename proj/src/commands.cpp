#include "entcoh/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "entcoh/fuzz.hpp"
#include "entcoh/homology.hpp"
#include "entcoh/structure_io.hpp"
#include "entcoh/zoo.hpp"

namespace entcoh {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << text;
}

std::string field_name(const Field& f) {
  if (f.spec().kind == FieldSpec::Kind::rationals) return "rationals";
  return "prime field p=" + std::to_string(f.spec().p);
}

std::string vec_string(const Field& f, const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += f.to_string(v[i]);
  }
  return s + "]";
}

json vec_json(const Field& f, const Vec& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(f.to_string(s));
  return a;
}

json matrix_json(const Field& f, const Matrix& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(vec_json(f, m.row(r)));
  return a;
}

json table_json(const CohomologyTable& t) {
  json j = json::object();
  j["dims"] = t.dims;
  j["edge_exact"] = t.edge_exact;
  return j;
}

std::string table_string(const CohomologyTable& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.dims.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(t.dims[i]);
  }
  return s + ")";
}

struct ReportedChecks {
  bool all_ok = true;
  json blocks = json::array();
  std::string text;

  void add(const std::string& block, const AxiomReport& rep) {
    text += block + ":\n";
    for (const auto& c : rep.checks) {
      text += std::string("  [") + (c.ok ? "ok" : "FAIL") + "] " + c.name;
      if (!c.witnesses.empty()) {
        text += "  witnesses:";
        for (const auto& w : c.witnesses) text += " " + w;
      }
      text += "\n";
      json jc = json::object();
      jc["block"] = block;
      jc["name"] = c.name;
      jc["ok"] = c.ok;
      jc["witnesses"] = c.witnesses;
      blocks.push_back(std::move(jc));
      if (!c.ok) all_ok = false;
    }
  }
};

StructureFile load_structure(const std::string& path) {
  return parse_structure(read_file(path));
}

Bimodule resolve_bimodule(const StructureFile& sf, bool self,
                          const std::string& bimodule_path) {
  if (self != bimodule_path.empty())
    throw PreconditionError(
        "exactly one of --self and --bimodule FILE is required");
  if (self) return regular_bimodule(sf.algebra);
  StructureFile mf = load_structure(bimodule_path);
  if (!mf.bimodule)
    throw PreconditionError("bimodule file has no bimodule block: " +
                            bimodule_path);
  if (!mf.algebra.same_structure(sf.algebra))
    throw MismatchError(
        "bimodule file algebra differs from the main structure's algebra");
  return *mf.bimodule;
}

Entwining resolve_entwining(const StructureFile& sf) {
  if (sf.entwining) return to_entwining(sf);
  if (sf.coaction) {
    GaloisExtension ext = analyze_extension(to_comodule(sf));
    if (!ext.is_galois)
      throw PreconditionError(
          "coaction is not Galois; no canonical entwining to derive");
    return canonical_psi(ext);
  }
  throw PreconditionError(
      "structure file needs an entwining or a Galois coaction");
}

int cmd_check(const StructureFile& sf, bool json_out, std::size_t witnesses,
              std::ostream& out) {
  ReportedChecks rc;
  rc.add("algebra", check_algebra(sf.algebra, witnesses));
  rc.add("coalgebra", check_coalgebra(sf.coalgebra, witnesses));
  if (sf.coaction)
    rc.add("coaction",
           check_coaction(ComoduleAlgebra{sf.algebra, sf.coalgebra,
                                          *sf.coaction},
                          witnesses));
  if (sf.entwining)
    rc.add("entwining",
           check_entwining(Entwining{sf.algebra, sf.coalgebra, *sf.entwining},
                           witnesses));
  if (sf.bimodule) rc.add("bimodule", check_bimodule(*sf.bimodule, witnesses));
  if (json_out) {
    json j = json::object();
    j["schema"] = 1;
    j["command"] = "check";
    j["field"] = field_name(sf.field);
    j["checks"] = rc.blocks;
    j["ok"] = rc.all_ok;
    out << j.dump(2) << "\n";
  } else {
    out << "field: " << field_name(sf.field) << "\n" << rc.text;
    out << "result: " << (rc.all_ok ? "ok" : "failed") << "\n";
  }
  return rc.all_ok ? 0 : 1;
}

int cmd_galois(const StructureFile& sf, bool json_out, std::ostream& out) {
  if (!sf.coaction)
    throw PreconditionError("galois needs a structure file with a coaction");
  GaloisExtension ext = analyze_extension(to_comodule(sf));
  const Field& f = sf.field;
  bool beta_bimod = ext.is_galois && check_beta_bimodule(ext);
  bool translation = ext.is_galois && check_translation_identity(ext);
  bool ok = ext.is_galois && beta_bimod && translation;
  if (json_out) {
    json j = json::object();
    j["schema"] = 1;
    j["command"] = "galois";
    j["field"] = field_name(f);
    j["dim_a"] = sf.algebra.dim;
    j["dim_c"] = sf.coalgebra.dim;
    j["dim_b"] = ext.b_basis.cols();
    j["b_basis"] = matrix_json(f, ext.b_basis);
    j["dim_a_tensor_b_a"] = ext.aba.dim;
    j["is_galois"] = ext.is_galois;
    j["beta_bimodule"] = beta_bimod;
    j["translation_identity"] = translation;
    if (ext.is_galois) {
      j["gamma"] = matrix_json(f, ext.gamma);
      Entwining psi = canonical_psi(ext);
      j["psi"] = matrix_json(f, psi.psi);
    }
    out << j.dump(2) << "\n";
  } else {
    out << "field: " << field_name(f) << "\n";
    out << "dim(A) = " << sf.algebra.dim << ", dim(C) = " << sf.coalgebra.dim
        << "\n";
    out << "dim(B) = " << ext.b_basis.cols() << "\n";
    for (std::size_t i = 0; i < ext.b_basis.cols(); ++i)
      out << "  b" << i << " = " << vec_string(f, ext.b_basis.column(i))
          << "\n";
    out << "dim(A (x)_B A) = " << ext.aba.dim << "\n";
    out << "is_galois: " << (ext.is_galois ? "true" : "false") << "\n";
    out << "beta_bimodule: " << (beta_bimod ? "true" : "false") << "\n";
    out << "translation_identity: " << (translation ? "true" : "false")
        << "\n";
    if (ext.is_galois) {
      for (std::size_t i = 0; i < ext.gamma.cols(); ++i)
        out << "  gamma(c" << i << ") = " << vec_string(f, ext.gamma.column(i))
            << "\n";
    }
  }
  return ok ? 0 : 1;
}

int cmd_table(const std::string& which, const StructureFile& sf, bool self,
              const std::string& bimodule_path, std::size_t max_degree,
              bool json_out, const ResourceCaps& caps, std::ostream& out) {
  Bimodule m = resolve_bimodule(sf, self, bimodule_path);
  CohomologyTable table;
  if (which == "cohomology") {
    Entwining psi = resolve_entwining(sf);
    table = entwined_cohomology(psi, m, max_degree, caps);
  } else {
    table = hochschild_cohomology(sf.algebra, m, max_degree, caps);
  }
  if (json_out) {
    json j = json::object();
    j["schema"] = 1;
    j["command"] = which;
    j["field"] = field_name(sf.field);
    j["max_degree"] = max_degree;
    j["table"] = table_json(table);
    out << j.dump(2) << "\n";
  } else {
    out << "field: " << field_name(sf.field) << "\n";
    for (std::size_t n = 0; n < table.dims.size(); ++n)
      out << "h^" << n << " = " << table.dims[n] << "\n";
    out << "table: " << table_string(table) << "\n";
  }
  return 0;
}

int cmd_verify(const StructureFile& sf, bool self,
               const std::string& bimodule_path, std::size_t max_degree,
               bool json_out, const ResourceCaps& caps, std::ostream& out) {
  if (!sf.coaction)
    throw PreconditionError("verify needs a structure file with a coaction");
  GaloisExtension ext = analyze_extension(to_comodule(sf));
  if (!ext.is_galois) {
    if (json_out) {
      json j = json::object();
      j["schema"] = 1;
      j["command"] = "verify";
      j["is_galois"] = false;
      j["verified"] = false;
      out << j.dump(2) << "\n";
    } else {
      out << "is_galois: false\nverified: false\n";
    }
    return 1;
  }
  Bimodule m = resolve_bimodule(sf, self, bimodule_path);
  TheoremReport rep = verify_theorem(ext, m, max_degree, caps);
  if (json_out) {
    json j = json::object();
    j["schema"] = 1;
    j["command"] = "verify";
    j["field"] = field_name(sf.field);
    j["max_degree"] = max_degree;
    j["is_galois"] = true;
    j["h0_psi"] = rep.h0_psi;
    j["h0_b"] = rep.h0_b;
    j["h0_match"] = rep.h0_match;
    j["flat_left"] = rep.flat_left;
    j["flat_right"] = rep.flat_right;
    j["flatness_applies"] = rep.flatness_applies;
    j["table_psi"] = table_json(rep.table_psi);
    j["table_hh"] = table_json(rep.table_hh);
    j["tables_match"] = rep.tables_match;
    j["verified"] = rep.verified();
    out << j.dump(2) << "\n";
  } else {
    out << "field: " << field_name(sf.field) << "\n";
    out << "is_galois: true\n";
    out << "h0_psi = " << rep.h0_psi << ", h0_hochschild = " << rep.h0_b
        << " -> " << (rep.h0_match ? "match" : "MISMATCH") << "\n";
    out << "A flat over B: left " << (rep.flat_left ? "yes" : "no")
        << ", right " << (rep.flat_right ? "yes" : "no") << "\n";
    out << "entwined table:   " << table_string(rep.table_psi) << "\n";
    out << "hochschild table: " << table_string(rep.table_hh) << "\n";
    if (rep.flatness_applies)
      out << "tables " << (rep.tables_match ? "match" : "MISMATCH") << "\n";
    else
      out << "flatness hypothesis absent; only degree 0 is asserted\n";
    out << "verified: " << (rep.verified() ? "true" : "false") << "\n";
  }
  return rep.verified() ? 0 : 1;
}

int cmd_zoo(const std::string& name, const std::string& emit_path,
            bool json_out, std::ostream& out, std::ostream& err) {
  if (name.empty()) {
    if (json_out) {
      json j = json::object();
      j["schema"] = 1;
      j["command"] = "zoo";
      j["names"] = zoo_names();
      out << j.dump(2) << "\n";
    } else {
      for (const auto& n : zoo_names()) out << n << "\n";
    }
    return 0;
  }
  auto ca = make_zoo(name);
  if (!ca) {
    err << "unknown zoo entry: " << name << "\n";
    return 2;
  }
  GaloisExtension ext = analyze_extension(*ca);
  if (!emit_path.empty()) write_file(emit_path, emit_structure(from_comodule(*ca)));
  if (json_out) {
    json j = json::object();
    j["schema"] = 1;
    j["command"] = "zoo";
    j["name"] = name;
    j["field"] = field_name(ca->a.field);
    j["dim_a"] = ca->a.dim;
    j["dim_c"] = ca->c.dim;
    j["dim_b"] = ext.b_basis.cols();
    j["is_galois"] = ext.is_galois;
    if (!emit_path.empty()) j["emitted"] = emit_path;
    out << j.dump(2) << "\n";
  } else {
    out << name << ": " << field_name(ca->a.field) << ", dim(A) = "
        << ca->a.dim << ", dim(C) = " << ca->c.dim << ", dim(B) = "
        << ext.b_basis.cols() << ", is_galois: "
        << (ext.is_galois ? "true" : "false") << "\n";
    if (!emit_path.empty()) out << "emitted: " << emit_path << "\n";
  }
  return 0;
}

int cmd_fuzz(const FuzzOptions& opt, bool json_out, std::ostream& out) {
  FuzzResult res = run_fuzz(opt);
  if (json_out) {
    json j = json::object();
    j["schema"] = 1;
    j["command"] = "fuzz";
    j["trials"] = res.trials_run;
    j["perturb_psi"] = opt.perturb_psi;
    j["findings"] = res.failures;
    j["reports"] = res.reports;
    out << j.dump(2) << "\n";
  } else {
    out << "trials: " << res.trials_run << "\n";
    out << "findings: " << res.failures << "\n";
    for (const auto& r : res.reports) out << "  " << r << "\n";
  }
  return res.failures == 0 ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{
      "exact computations with entwining structures and coalgebra-Galois "
      "extensions"};
  app.require_subcommand(1);
  bool json_out = false;
  std::size_t max_entries = ResourceCaps::from_env().max_entries;
  std::size_t max_witnesses = kDefaultMaxWitnesses;
  app.add_flag("--json", json_out, "machine-readable report");
  app.add_option("--max-entries", max_entries,
                 "per-degree dimension cap (env ENTCOH_MAX_ENTRIES)");
  app.add_option("--max-witnesses", max_witnesses,
                 "witnesses reported per failing axiom");

  std::string file, bimodule_path, zoo_name, emit_path;
  bool self = false;
  std::size_t max_degree = 3;

  auto* c_check = app.add_subcommand("check", "axiom reports");
  c_check->add_option("file", file)->required();
  c_check->fallthrough();

  auto* c_galois = app.add_subcommand("galois", "Galois analysis");
  c_galois->add_option("file", file)->required();
  c_galois->fallthrough();

  auto add_table_opts = [&](CLI::App* sub) {
    sub->add_option("file", file)->required();
    sub->add_option("--bimodule", bimodule_path, "coefficient bimodule file");
    sub->add_flag("--self", self, "use M = A with the regular actions");
    sub->add_option("--max-degree", max_degree, "top degree (default 3)");
    sub->fallthrough();
  };
  auto* c_cohom = app.add_subcommand("cohomology", "entwined cohomology");
  add_table_opts(c_cohom);
  auto* c_hoch = app.add_subcommand("hochschild", "Hochschild cohomology");
  add_table_opts(c_hoch);
  auto* c_verify = app.add_subcommand("verify", "theorem report");
  add_table_opts(c_verify);

  auto* c_zoo = app.add_subcommand("zoo", "built-in examples");
  c_zoo->add_option("name", zoo_name);
  c_zoo->add_option("--emit", emit_path, "write the structure file");
  c_zoo->fallthrough();

  FuzzOptions fopt;
  auto* c_fuzz = app.add_subcommand("fuzz", "randomized property testing");
  c_fuzz->add_option("--dim-a", fopt.dim_a);
  c_fuzz->add_option("--dim-c", fopt.dim_c);
  c_fuzz->add_option("--trials", fopt.trials);
  c_fuzz->add_option("--seed", fopt.seed);
  c_fuzz->add_flag("--perturb", fopt.perturb_psi,
                   "expect a broken psi to fail the axioms");
  c_fuzz->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  ResourceCaps caps;
  caps.max_entries = max_entries;

  try {
    if (app.got_subcommand(c_check))
      return cmd_check(load_structure(file), json_out, max_witnesses, out);
    if (app.got_subcommand(c_galois))
      return cmd_galois(load_structure(file), json_out, out);
    if (app.got_subcommand(c_cohom))
      return cmd_table("cohomology", load_structure(file), self, bimodule_path,
                       max_degree, json_out, caps, out);
    if (app.got_subcommand(c_hoch))
      return cmd_table("hochschild", load_structure(file), self, bimodule_path,
                       max_degree, json_out, caps, out);
    if (app.got_subcommand(c_verify))
      return cmd_verify(load_structure(file), self, bimodule_path, max_degree,
                        json_out, caps, out);
    if (app.got_subcommand(c_zoo))
      return cmd_zoo(zoo_name, emit_path, json_out, out, err);
    if (app.got_subcommand(c_fuzz)) return cmd_fuzz(fopt, json_out, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const MalformedInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace entcoh
