// Command line front end. Reads JSON descriptions of algebras, representations,
// cochains and matrices, runs the exact computations from libhomleib, and
// prints a single JSON report to stdout. Exit codes: 0 the computation ran and
// succeeded, 1 it ran and the mathematical answer is negative (identity fails,
// cocycle obstructed, precondition violated), 2 malformed input or usage.

#include <CLI11.hpp>
#include <json.hpp>

#include <homleib/algebra.hpp>
#include <homleib/cochain.hpp>
#include <homleib/deformation.hpp>
#include <homleib/embedding.hpp>
#include <homleib/errors.hpp>
#include <homleib/graded.hpp>
#include <homleib/matrix.hpp>
#include <homleib/representation.hpp>
#include <homleib/scalar.hpp>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

using Json = nlohmann::ordered_json;
using namespace homleib;

namespace {

// ---------- plumbing ----------

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& path, const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::string msg = e.what();
    auto pos = msg.find("] ");  // drop nlohmann's bracketed error id
    if (pos != std::string::npos) msg = msg.substr(pos + 2);
    throw input_error(path + ": " + msg);
  }
}

std::string digest_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << std::setfill('0') << std::setw(16) << h;
  return os.str();
}

const Json& require_key(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw input_error(where + ": expected a JSON object");
  if (!j.contains(key)) throw input_error(where + ": missing key \"" + key + "\"");
  return j.at(key);
}

int get_int(const Json& j, const std::string& key, const std::string& where) {
  const Json& v = require_key(j, key, where);
  if (!v.is_number_integer()) throw input_error(where + ": \"" + key + "\" must be an integer");
  return v.get<int>();
}

std::string get_string(const Json& j, const std::string& key, const std::string& where) {
  const Json& v = require_key(j, key, where);
  if (!v.is_string()) throw input_error(where + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

void require_schema(const Json& j, const std::string& where) {
  if (get_string(j, "schema_version", where) != "1")
    throw input_error(where + ": unsupported schema_version");
}

Field parse_field_text(const std::string& text) {
  if (text == "Q") return Field::rationals();
  if (text.rfind("Fp:", 0) == 0) {
    std::int64_t p = 0;
    try {
      size_t used = 0;
      p = std::stoll(text.substr(3), &used);
      if (used != text.size() - 3) throw std::invalid_argument(text);
    } catch (const std::exception&) {
      throw input_error("bad field modulus in \"" + text + "\"");
    }
    return Field::prime(p);
  }
  throw input_error("unknown field \"" + text + "\" (use \"Q\" or \"Fp:<p>\")");
}

// the algebra file names the field; HOMLEIB_FIELD overrides it
Field effective_field(const Json& algebra_doc, const std::string& where) {
  const char* env = std::getenv("HOMLEIB_FIELD");
  if (env != nullptr && *env != '\0') return parse_field_text(env);
  return parse_field_text(get_string(algebra_doc, "field", where));
}

// ---------- readers ----------

Scalar scalar_from_json(const Field& f, const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Scalar::from_int(f, v.get<std::int64_t>());
  if (v.is_string()) return Scalar::parse(f, v.get<std::string>());
  throw input_error(where + ": coefficients must be integers or strings like \"3/4\"");
}

Matrix matrix_from_json(const Field& f, const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
    throw input_error(where + ": expected a nonempty array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  Matrix m(rows, cols, f);
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols)
      throw input_error(where + ": rows have unequal length");
    for (int c = 0; c < cols; ++c) m.at(r, c) = scalar_from_json(f, j[r][c], where);
  }
  return m;
}

// 1-based index list of fixed length
std::vector<int> get_indices(const Json& v, int count, int dim, const std::string& where) {
  if (!v.is_array() || static_cast<int>(v.size()) != count)
    throw input_error(where + ": expected " + std::to_string(count) + " indices");
  std::vector<int> out;
  for (const Json& x : v) {
    if (!x.is_number_integer()) throw input_error(where + ": indices must be integers");
    int i = x.get<int>();
    if (i < 1 || i > dim) throw input_error(where + ": index " + std::to_string(i) + " out of range");
    out.push_back(i - 1);
  }
  return out;
}

int get_index(const Json& j, const std::string& key, int dim, const std::string& where) {
  int i = get_int(j, key, where);
  if (i < 1 || i > dim)
    throw input_error(where + ": \"" + key + "\" " + std::to_string(i) + " out of range");
  return i - 1;
}

Algebra parse_algebra(const Json& doc, const Field& f, const std::string& where) {
  require_schema(doc, where);
  Algebra a(get_int(doc, "dim", where), get_int(doc, "arity", where), f);
  if (doc.contains("alpha")) {
    const Json& al = doc.at("alpha");
    bool list_form = al.is_array() && !al.empty() && al[0].is_array() && !al[0].empty() &&
                     al[0][0].is_array();
    if (list_form) {
      if (static_cast<int>(al.size()) != a.arity() - 1)
        throw input_error(where + ": alpha must list arity-1 matrices");
      for (int k = 0; k < a.arity() - 1; ++k) a.set_twist(k, matrix_from_json(f, al[k], where));
    } else {
      a.set_uniform_twist(matrix_from_json(f, al, where));
    }
  }
  if (doc.contains("bracket")) {
    const Json& br = doc.at("bracket");
    if (!br.is_array()) throw input_error(where + ": \"bracket\" must be an array");
    std::set<std::pair<std::int64_t, int>> seen;
    for (const Json& e : br) {
      std::vector<int> t =
          get_indices(require_key(e, "indices", where), a.arity(), a.dim(), where);
      int target = get_index(e, "target", a.dim(), where);
      Scalar c = scalar_from_json(f, require_key(e, "coeff", where), where);
      if (!seen.insert({tuple_rank(t, a.dim()), target}).second)
        throw input_error(where + ": duplicate bracket entry");
      a.coeff(t, target) = c;
    }
  }
  return a;
}

Representation parse_representation(const Json& doc, const Field& f, const Algebra& a,
                                    const std::string& where) {
  require_schema(doc, where);
  if (get_int(doc, "algebra_dim", where) != a.dim() || get_int(doc, "arity", where) != a.arity())
    throw input_error(where + ": the representation file does not match the algebra");
  int mdim = get_int(doc, "module_dim", where);
  if (mdim < 1) throw input_error(where + ": module_dim must be at least 1");
  Representation r(a.dim(), a.arity(), mdim, f);
  r.set_alpha_m(matrix_from_json(f, require_key(doc, "alpha_m", where), where));
  if (doc.contains("actions")) {
    const Json& acts = doc.at("actions");
    if (!acts.is_array()) throw input_error(where + ": \"actions\" must be an array");
    std::set<std::tuple<int, std::int64_t, int, int>> seen;
    for (const Json& e : acts) {
      int slot = get_index(e, "slot", a.arity(), where);
      std::vector<int> l =
          get_indices(require_key(e, "algebra", where), a.arity() - 1, a.dim(), where);
      int m = get_index(e, "module", mdim, where);
      int target = get_index(e, "target", mdim, where);
      Scalar c = scalar_from_json(f, require_key(e, "coeff", where), where);
      if (!seen.insert({slot, tuple_rank(l, a.dim()), m, target}).second)
        throw input_error(where + ": duplicate action entry");
      r.action_coeff(slot, l, m, target) = c;
    }
  }
  return r;
}

Cochain parse_cochain(const Json& doc, const Field& f, const Algebra& a, int mod_dim,
                      const std::string& where) {
  require_schema(doc, where);
  if (get_int(doc, "algebra_dim", where) != a.dim() || get_int(doc, "arity", where) != a.arity() ||
      get_int(doc, "module_dim", where) != mod_dim)
    throw input_error(where + ": the cochain file does not match the algebra and module");
  int degree = get_int(doc, "degree", where);
  if (degree < 1) throw input_error(where + ": degree must be at least 1");
  Cochain c(a.dim(), a.arity(), mod_dim, f, degree);
  if (doc.contains("entries")) {
    const Json& entries = doc.at("entries");
    if (!entries.is_array()) throw input_error(where + ": \"entries\" must be an array");
    std::set<std::pair<std::int64_t, int>> seen;
    for (const Json& e : entries) {
      int z = get_index(e, "z", a.dim(), where);
      const Json& bl = require_key(e, "blocks", where);
      if (!bl.is_array() || static_cast<int>(bl.size()) != degree - 1)
        throw input_error(where + ": \"blocks\" must list degree-1 index tuples");
      std::vector<std::int64_t> blocks;
      for (const Json& b : bl)
        blocks.push_back(tuple_rank(get_indices(b, a.arity() - 1, a.dim(), where), a.dim()));
      int target = get_index(e, "target", mod_dim, where);
      Scalar v = scalar_from_json(f, require_key(e, "coeff", where), where);
      std::int64_t arg = c.arg_rank(z, blocks);
      if (!seen.insert({arg, target}).second)
        throw input_error(where + ": duplicate cochain entry");
      c.value(arg)[target] = v;
    }
  }
  return c;
}

// ---------- writers ----------

Json indices_json(const std::vector<int>& zero_based) {
  Json arr = Json::array();
  for (int i : zero_based) arr.push_back(i + 1);
  return arr;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
    rows.push_back(row);
  }
  return rows;
}

Json algebra_to_json(const Algebra& a) {
  Json doc = Json::object();
  doc["schema_version"] = "1";
  doc["field"] = a.field().to_string();
  doc["dim"] = a.dim();
  doc["arity"] = a.arity();
  if (a.uniform_twist()) {
    doc["alpha"] = matrix_to_json(a.alpha());
  } else {
    Json twists = Json::array();
    for (int k = 0; k + 1 < a.arity(); ++k) twists.push_back(matrix_to_json(a.twist(k)));
    doc["alpha"] = twists;
  }
  Json entries = Json::array();
  for (std::int64_t rank = 0; rank < a.tuple_count(); ++rank) {
    std::vector<int> t = tuple_unrank(rank, a.arity(), a.dim());
    const Vec& v = a.bracket_basis(rank);
    for (int target = 0; target < a.dim(); ++target) {
      if (v[target].is_zero()) continue;
      Json e = Json::object();
      e["indices"] = indices_json(t);
      e["target"] = target + 1;
      e["coeff"] = v[target].to_string();
      entries.push_back(e);
    }
  }
  doc["bracket"] = entries;
  return doc;
}

Json cochain_to_json(const Cochain& c) {
  Json doc = Json::object();
  doc["schema_version"] = "1";
  doc["algebra_dim"] = c.alg_dim();
  doc["arity"] = c.arity();
  doc["module_dim"] = c.mod_dim();
  doc["degree"] = c.degree();
  const std::int64_t D = c.block_count();
  Json entries = Json::array();
  for (std::int64_t arg = 0; arg < c.arg_count(); ++arg) {
    const Vec& v = c.value(arg);
    if (is_zero_vec(v)) continue;
    std::vector<std::int64_t> blocks(c.degree() - 1);
    std::int64_t rest = arg;
    for (int k = c.degree() - 2; k >= 0; --k) {
      blocks[k] = rest % D;
      rest /= D;
    }
    Json bl = Json::array();
    for (std::int64_t b : blocks) bl.push_back(indices_json(tuple_unrank(b, c.arity() - 1, c.alg_dim())));
    for (int target = 0; target < c.mod_dim(); ++target) {
      if (v[target].is_zero()) continue;
      Json e = Json::object();
      e["z"] = static_cast<int>(rest) + 1;
      e["blocks"] = bl;
      e["target"] = target + 1;
      e["coeff"] = v[target].to_string();
      entries.push_back(e);
    }
  }
  doc["entries"] = entries;
  return doc;
}

Json vec_strings(const Vec& v) {
  Json arr = Json::array();
  for (const Scalar& s : v) arr.push_back(s.to_string());
  return arr;
}

bool cochain_is_zero(const Cochain& c) {
  for (std::int64_t arg = 0; arg < c.arg_count(); ++arg)
    if (!is_zero_vec(c.value(arg))) return false;
  return true;
}

// degree-1 cocycle coordinates (argument, target order) as a module_dim x dim matrix
Matrix flat_to_map(const Vec& flat, int alg_dim, int mod_dim, const Field& f) {
  Matrix m(mod_dim, alg_dim, f);
  for (int z = 0; z < alg_dim; ++z)
    for (int i = 0; i < mod_dim; ++i) m.at(i, z) = flat[static_cast<size_t>(z) * mod_dim + i];
  return m;
}

// ---------- report wrapper ----------

struct CliReport {
  std::string status = "ok";
  Json payload = Json::object();
};

// reads and hashes the input files, runs the command body, prints the report;
// precondition violations become status "fail" (exit 1), malformed input
// propagates as input_error (exit 2)
template <typename Body>
int run_report(const std::string& command, const std::vector<std::string>& paths, Body&& body) {
  auto start = std::chrono::steady_clock::now();
  std::string bytes;
  std::vector<Json> docs;
  for (const std::string& p : paths) {
    std::string text = read_file(p);
    bytes += text;
    docs.push_back(parse_json(p, text));
  }
  Field field = effective_field(docs.at(0), paths.at(0));
  CliReport rep;
  try {
    body(docs, field, rep);
  } catch (const precondition_error& e) {
    rep.status = "fail";
    rep.payload = Json::object();
    rep.payload["reason"] = e.what();
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  Json doc = Json::object();
  doc["schema_version"] = "1";
  doc["command"] = command;
  doc["input_digest"] = digest_hex(bytes);
  doc["field"] = field.to_string();
  doc["status"] = rep.status;
  doc["payload"] = rep.payload;
  doc["timing_ms"] = static_cast<std::int64_t>(elapsed);
  std::cout << doc.dump(2) << "\n";
  return rep.status == "ok" ? 0 : 1;
}

Representation coefficients_for(const std::string& choice, const std::vector<Json>& docs,
                                const Field& f, const Algebra& a,
                                const std::vector<std::string>& paths) {
  if (choice == "adjoint") return adjoint_representation(a);
  return parse_representation(docs.at(1), f, a, paths.at(1));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact structure-constant computations for n-ary Hom-Leibniz algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "homleib 1.0");

  std::string alg_path;
  std::string coeff_choice = "adjoint";
  std::string cocycle_path, f_path, g_path, f1_path, morphism_path;
  int degree = 0, order = 3, f1_class = 0, max_degree = 2;
  bool want_reps = false;

  auto* c_check = app.add_subcommand("check", "verify the defining identity and multiplicativity");
  c_check->add_option("algebra", alg_path, "algebra file")->required();

  auto* c_cohom = app.add_subcommand("cohomology", "dimensions of the cochain complex at one degree");
  c_cohom->add_option("algebra", alg_path, "algebra file")->required();
  c_cohom->add_option("--degree", degree, "cochain degree")->required()->check(CLI::Range(1, 1000000));
  c_cohom->add_option("--coefficients", coeff_choice, "adjoint or a representation file");
  c_cohom->add_flag("--representatives", want_reps, "include lifted basis cocycles");

  auto* c_der = app.add_subcommand("derivations", "basis of the twisted derivations");
  c_der->add_option("algebra", alg_path, "algebra file")->required();
  c_der->add_option("--coefficients", coeff_choice, "adjoint or a representation file");

  auto* c_deform = app.add_subcommand("deform", "extend a first order deformation order by order");
  c_deform->add_option("algebra", alg_path, "algebra file")->required();
  c_deform->add_option("--order", order, "truncation order to reach")->check(CLI::Range(1, 1000000));
  auto* opt_f1 = c_deform->add_option("--f1", f1_path, "leading term cochain file");
  auto* opt_cls = c_deform->add_option("--f1-class", f1_class, "use the k-th second cohomology representative")
                      ->check(CLI::Range(1, 1000000));
  opt_f1->excludes(opt_cls);
  opt_cls->excludes(opt_f1);

  auto* c_ext = app.add_subcommand("extend-cocycle", "build the split extension along a 2-cochain");
  c_ext->add_option("algebra", alg_path, "algebra file")->required();
  c_ext->add_option("--cocycle", cocycle_path, "degree-2 cochain file")->required();
  c_ext->add_option("--coefficients", coeff_choice, "adjoint or a representation file");

  auto* c_br = app.add_subcommand("bracket", "graded bracket of two self cochains");
  c_br->add_option("algebra", alg_path, "algebra file")->required();
  c_br->add_option("--f", f_path, "left cochain file")->required();
  c_br->add_option("--g", g_path, "right cochain file")->required();

  auto* c_tw = app.add_subcommand("twist", "twist an untwisted algebra along a self-morphism");
  c_tw->add_option("algebra", alg_path, "algebra file")->required();
  c_tw->add_option("--morphism", morphism_path, "matrix file (array of rows)")->required();

  auto* c_dn = app.add_subcommand("dn", "binary block algebra on L tensor L^{n-2}");
  c_dn->add_option("algebra", alg_path, "algebra file")->required();

  auto* c_embed = app.add_subcommand("embed-check", "compare the complex with its binary block complex");
  c_embed->add_option("algebra", alg_path, "algebra file")->required();
  c_embed->add_option("--max-degree", max_degree, "highest degree to compare")->check(CLI::Range(1, 1000000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*c_check) {
      return run_report("check", {alg_path}, [&](const std::vector<Json>& docs, const Field& f,
                                                 CliReport& rep) {
        Algebra a = parse_algebra(docs[0], f, alg_path);
        IdentityReport idr = check_n_hom_leibniz(a);
        rep.payload["identity_holds"] = idr.holds;
        rep.payload["identity_witness"] = idr.holds ? Json(nullptr) : indices_json(idr.witness);
        bool mult_ok = true;
        if (a.uniform_twist()) {
          mult_ok = check_multiplicative(a);
          rep.payload["multiplicative"] = mult_ok;
        } else {
          rep.payload["multiplicative"] = "n/a";
        }
        rep.status = (idr.holds && mult_ok) ? "ok" : "fail";
      });
    }

    if (*c_cohom || *c_der) {
      std::vector<std::string> paths{alg_path};
      if (coeff_choice != "adjoint") paths.push_back(coeff_choice);
      if (*c_cohom) {
        return run_report("cohomology", paths, [&](const std::vector<Json>& docs, const Field& f,
                                                   CliReport& rep) {
          Algebra a = parse_algebra(docs[0], f, alg_path);
          CochainContext ctx(a, coefficients_for(coeff_choice, docs, f, a, paths));
          CohomologyReport out = cohomology(ctx, degree);
          rep.payload["degree"] = out.degree;
          rep.payload["coefficients"] = coeff_choice;
          rep.payload["dim_cochains"] = out.dim_cochains;
          rep.payload["dim_cocycles"] = out.dim_cocycles;
          rep.payload["dim_coboundaries"] = out.dim_coboundaries;
          rep.payload["dim_h"] = out.dim_h;
          if (want_reps) {
            Json reps = Json::array();
            for (const Cochain& c : out.representatives) reps.push_back(cochain_to_json(c));
            rep.payload["representatives"] = reps;
          }
        });
      }
      return run_report("derivations", paths, [&](const std::vector<Json>& docs, const Field& f,
                                                  CliReport& rep) {
        Algebra a = parse_algebra(docs[0], f, alg_path);
        Representation r = coefficients_for(coeff_choice, docs, f, a, paths);
        CochainContext ctx(a, r);
        Subspace s = derivation_space(ctx);
        rep.payload["coefficients"] = coeff_choice;
        rep.payload["dim"] = s.dim();
        Json basis = Json::array();
        for (const Vec& v : s.basis())
          basis.push_back(matrix_to_json(flat_to_map(v, a.dim(), r.module_dim(), f)));
        rep.payload["basis"] = basis;
      });
    }

    if (*c_deform) {
      std::vector<std::string> paths{alg_path};
      if (!f1_path.empty()) paths.push_back(f1_path);
      return run_report("deform", paths, [&](const std::vector<Json>& docs, const Field& f,
                                             CliReport& rep) {
        Algebra a = parse_algebra(docs[0], f, alg_path);
        CochainContext ctx(a, adjoint_representation(a));
        Cochain f1(a.dim(), a.arity(), a.dim(), f, 2);
        if (!f1_path.empty()) {
          f1 = parse_cochain(docs[1], f, a, a.dim(), f1_path);
        } else if (f1_class > 0) {
          CohomologyReport h2 = cohomology(ctx, 2);
          if (f1_class > h2.dim_h)
            throw input_error("--f1-class out of range: second cohomology has dimension " +
                              std::to_string(h2.dim_h));
          f1 = h2.representatives[f1_class - 1];
        }
        TruncatedDeformation d = make_deformation(a, {f1});
        rep.payload["requested_order"] = order;
        if (!check_first_order(d)) {
          rep.payload["first_order_cocycle"] = false;
          rep.payload["reached_order"] = 0;
          rep.payload["reason"] =
              "the leading term is not a 2-cocycle, so it starts no first order deformation";
          rep.status = "fail";
          return;
        }
        rep.payload["first_order_cocycle"] = true;
        Json orders = Json::array();
        int reached = 1;
        bool obstructed = false;
        for (int m = 2; m <= order; ++m) {
          ExtensionOutcome out = extend_one_order(d);
          Json step = Json::object();
          step["order"] = m;
          if (out.extended) {
            d = *out.extended;
            reached = m;
            step["status"] = "extended";
            orders.push_back(step);
          } else {
            step["status"] = "obstructed";
            step["obstruction_class"] = vec_strings(out.obstruction_class);
            step["obstruction_cocycle"] = cochain_to_json(out.obstruction_cocycle);
            orders.push_back(step);
            obstructed = true;
            break;
          }
        }
        rep.payload["reached_order"] = reached;
        rep.payload["orders"] = orders;
        Json terms = Json::array();
        for (const Cochain& t : d.terms) terms.push_back(cochain_to_json(t));
        rep.payload["terms"] = terms;
        if (obstructed) {
          rep.payload["reason"] = "the obstruction class in third cohomology is nonzero";
          rep.status = "fail";
        }
      });
    }

    if (*c_ext) {
      std::vector<std::string> paths{alg_path};
      if (coeff_choice != "adjoint") paths.push_back(coeff_choice);
      paths.push_back(cocycle_path);
      return run_report("extend-cocycle", paths, [&](const std::vector<Json>& docs, const Field& f,
                                                     CliReport& rep) {
        Algebra a = parse_algebra(docs[0], f, alg_path);
        Representation r = coefficients_for(coeff_choice, docs, f, a, paths);
        CochainContext ctx(a, r);
        const Json& cdoc = docs.back();
        Cochain c = parse_cochain(cdoc, f, a, r.module_dim(), cocycle_path);
        if (c.degree() != 2) throw input_error(cocycle_path + ": the cochain must have degree 2");
        if (!is_compatible(ctx, c))
          throw input_error(cocycle_path + ": the cochain is not twist-compatible");
        AbelianExtension ext = build_extension(ctx, c);
        IdentityReport scan = check_n_hom_leibniz(ext.total);
        rep.payload["coefficients"] = coeff_choice;
        rep.payload["cocycle"] = cochain_is_zero(coboundary(ctx, c));
        rep.payload["extension_valid"] = scan.holds;
        rep.payload["identity_witness"] = scan.holds ? Json(nullptr) : indices_json(scan.witness);
        rep.payload["total"] = algebra_to_json(ext.total);
        if (!scan.holds) {
          rep.payload["reason"] = "the extension fails the defining identity, so the cochain is not a 2-cocycle";
          rep.status = "fail";
        }
      });
    }

    if (*c_br) {
      return run_report("bracket", {alg_path, f_path, g_path},
                        [&](const std::vector<Json>& docs, const Field& f, CliReport& rep) {
                          Algebra a = parse_algebra(docs[0], f, alg_path);
                          Cochain cf = parse_cochain(docs[1], f, a, a.dim(), f_path);
                          Cochain cg = parse_cochain(docs[2], f, a, a.dim(), g_path);
                          Cochain out = graded_bracket(a, cf, cg);
                          rep.payload["degree_f"] = cf.degree();
                          rep.payload["degree_g"] = cg.degree();
                          rep.payload["degree"] = out.degree();
                          rep.payload["result"] = cochain_to_json(out);
                        });
    }

    if (*c_tw) {
      return run_report("twist", {alg_path, morphism_path},
                        [&](const std::vector<Json>& docs, const Field& f, CliReport& rep) {
                          Algebra a = parse_algebra(docs[0], f, alg_path);
                          Matrix m = matrix_from_json(f, docs[1], morphism_path);
                          Algebra out = yau_twist(a, m);
                          rep.payload["twisted"] = algebra_to_json(out);
                        });
    }

    if (*c_dn) {
      return run_report("dn", {alg_path},
                        [&](const std::vector<Json>& docs, const Field& f, CliReport& rep) {
                          Algebra a = parse_algebra(docs[0], f, alg_path);
                          Algebra out = d_n_minus_one(a);
                          rep.payload["blocks"] = algebra_to_json(out);
                        });
    }

    if (*c_embed) {
      return run_report("embed-check", {alg_path}, [&](const std::vector<Json>& docs,
                                                       const Field& f, CliReport& rep) {
        Algebra a = parse_algebra(docs[0], f, alg_path);
        CommutingSquareReport sq = check_commuting_square(a, max_degree);
        bool alpha_injective = a.alpha().rank() == a.dim();
        rep.payload["max_degree"] = max_degree;
        rep.payload["commutes"] = sq.holds;
        rep.payload["degree_checked"] = sq.max_degree_checked;
        rep.payload["alpha_injective"] = alpha_injective;
        bool kernels_trivial = true;
        if (alpha_injective) {
          Json kernels = Json::array();
          for (int p = 1; p <= max_degree; ++p) {
            bool trivial = check_injectivity(a, p);
            kernels_trivial = kernels_trivial && trivial;
            Json k = Json::object();
            k["degree"] = p;
            k["trivial"] = trivial;
            kernels.push_back(k);
          }
          rep.payload["embedding_kernels"] = kernels;
        }
        if (!sq.holds) {
          rep.payload["reason"] = "the block differential does not commute with the embedding at degree " +
                                  std::to_string(sq.max_degree_checked);
          rep.status = "fail";
        } else if (!kernels_trivial) {
          rep.payload["reason"] = "the embedding has a nonzero kernel despite an injective twist";
          rep.status = "fail";
        }
      });
    }
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable: a subcommand is required
}
