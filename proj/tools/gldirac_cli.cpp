// Command-line driver.  Subcommands:
//   verify identities   identity suites for the quadratic correspondence,
//                       alpha, and the constant C
//   verify d2           D^2 = -Omega (x) 1 + Omega_{g0 Delta} - C, symbolic
//                       or on module slices
//   dirac               per-degree harmonic spaces and spectral checks
//   cohomology          raising-complex cohomology / lowering-complex homology
//   regress             re-derive the stored fixtures and byte-compare
// Reports are canonical JSON: sorted keys, exact fraction strings, atomic
// writes.  Exit 0 on success, 1 on a failed check, 2 on usage errors.

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gldirac/cohomology.hpp"
#include "gldirac/pbw.hpp"

using json = nlohmann::json;  // std::map keys give the canonical sorted order
using namespace gldirac;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string rs(const Rat& r) { return r.get_str(); }

json types_json(const TypeMultiset& t, int m) {
  json arr = json::array();
  for (const TypeEntry& e : t) {
    json one;
    one["weight"] = weight_str(e.hw, m);
    one["multiplicity"] = e.mult;
    arr.push_back(one);
  }
  return arr;
}

json module_meta(const AlgebraContext& g, const ModuleData& v) {
  json meta;
  meta["label"] = v.label;
  meta["dim"] = v.dim;
  json ws = json::array();
  for (const Weight& w : v.weights) ws.push_back(weight_str(w, g.m()));
  meta["weights"] = ws;
  return meta;
}

void write_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("short write: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("rename failed: " + path);
}

std::string render_json(const json& j) { return j.dump(2) + "\n"; }

struct OutputOpts {
  std::string path;           // empty: stdout
  std::string format = "json";
};

void add_output_opts(CLI::App* cmd, OutputOpts& out) {
  cmd->add_option("--output", out.path, "write the report to this path (atomic)");
  cmd->add_option("--format", out.format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));
}

void deliver(const OutputOpts& out, const json& j,
             const std::function<std::string()>& table) {
  const std::string text = out.format == "table" ? table() : render_json(j);
  if (out.path.empty())
    std::cout << text;
  else
    write_atomic(out.path, text);
}

// ---------------------------------------------------------------------------
// verify identities

struct IdentityCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

// The three quadratic families as matrices on span(del_1..del_N, x_1..x_N).
bool sp_family_ok(int nv, json* table) {
  bool ok = true;
  for (int i = 1; i <= nv; ++i)
    for (int j = 1; j <= nv; ++j) {
      WeylElement sxx = sigma(WeylElement::x(nv, i), WeylElement::x(nv, j));
      RatMatrix expect(2 * nv, 2 * nv);
      expect.add_to(nv + i - 1, j - 1, -1);
      expect.add_to(nv + j - 1, i - 1, -1);
      ok = ok && sp_matrix(sxx) == expect;

      WeylElement sdd = sigma(WeylElement::del(nv, i), WeylElement::del(nv, j));
      expect = RatMatrix(2 * nv, 2 * nv);
      expect.add_to(i - 1, nv + j - 1, 1);
      expect.add_to(j - 1, nv + i - 1, 1);
      ok = ok && sp_matrix(sdd) == expect;

      WeylElement sdx = sigma(WeylElement::del(nv, i), WeylElement::x(nv, j));
      expect = RatMatrix(2 * nv, 2 * nv);
      expect.add_to(i - 1, j - 1, -1);
      expect.add_to(nv + j - 1, nv + i - 1, 1);
      ok = ok && sp_matrix(sdx) == expect;

      if (table) {
        auto row = [&](const std::string& in, const WeylElement& w) {
          json e;
          e["input"] = in;
          e["normal_form"] = w.str();
          table->push_back(e);
        };
        std::string si = std::to_string(i), sj = std::to_string(j);
        row("sigma(x" + si + " x" + sj + ")", sxx);
        row("sigma(d" + si + " d" + sj + ")", sdd);
        row("sigma(d" + si + " x" + sj + ")", sdx);
      }
    }
  return ok;
}

bool sp_morphism_ok(int nv) {
  std::vector<WeylElement> quads;
  for (int i = 1; i <= nv; ++i)
    for (int j = 1; j <= nv; ++j) {
      quads.push_back(sigma(WeylElement::x(nv, i), WeylElement::x(nv, j)));
      quads.push_back(sigma(WeylElement::del(nv, i), WeylElement::del(nv, j)));
      quads.push_back(sigma(WeylElement::del(nv, i), WeylElement::x(nv, j)));
    }
  for (const WeylElement& a : quads)
    for (const WeylElement& b : quads)
      if (sp_matrix(a * b - b * a) != sp_matrix(a).commutator(sp_matrix(b)))
        return false;
  return true;
}

bool alpha_morphism_ok(const AlgebraContext& g) {
  for (int a : g.g0_ids())
    for (int b : g.g0_ids()) {
      SuperElement ea, eb;
      ea.add(a, 1);
      eb.add(b, 1);
      WeylElement wa = alpha(g, ea), wb = alpha(g, eb);
      if (alpha(g, g.bracket(ea, eb)) != wa * wb - wb * wa) return false;
    }
  return true;
}

// alpha1(X) acts on polynomials exactly as the bracket-induced derivation.
bool alpha1_action_ok(const AlgebraContext& g, int maxDeg) {
  const int nv = g.odd_dim();
  for (int deg = 0; deg <= maxDeg; ++deg) {
    WeilSlice s = weil_slice(nv, deg);
    for (int a : g.g0_ids()) {
      SuperElement ea;
      ea.add(a, 1);
      WeylElement act = alpha1(g, ea);
      for (const auto& mono : s.monomials) {
        PolyVec f{{mono, Rat(1)}};
        PolyVec expect;
        for (int p = 1; p <= nv; ++p) {
          if (mono[p - 1] == 0) continue;
          for (const auto& [rid, c] : g.bracket(a, g.x_id(p)).c) {
            int r = -1;
            for (int q = 1; q <= nv; ++q)
              if (g.x_id(q) == rid) r = q;
            if (r < 1) return false;
            std::vector<int> e = mono;
            e[p - 1] -= 1;
            e[r - 1] += 1;
            Rat coeff = c * mono[p - 1];
            auto [it, ins] = expect.try_emplace(e, coeff);
            if (!ins) {
              it->second += coeff;
              if (it->second == 0) expect.erase(it);
            }
          }
        }
        if (weil_apply(act, f) != expect) return false;
      }
    }
  }
  return true;
}

bool alpha2_rho1_ok(const AlgebraContext& g) {
  const Weight r1 = g.rho1();
  for (int k = 1; k <= g.size(); ++k) {
    SuperElement h;
    h.add(g.unit_id(k, k), 1);
    if (alpha2(g, h) != -r1.e[k - 1]) return false;
  }
  for (int id : g.g0_ids()) {
    auto [k, l] = g.unit_of(id);
    if (k == l) continue;
    SuperElement e;
    e.add(id, 1);
    if (alpha2(g, e) != 0) return false;
  }
  return true;
}

json identities_for_size(int m, int n, bool explain, bool& allPass) {
  AlgebraContext g(m, n);
  const int nv = g.odd_dim();
  std::vector<IdentityCheck> checks;

  json spTable = json::array();
  checks.push_back({"sp_correspondence", sp_family_ok(nv, explain ? &spTable : nullptr),
                    std::to_string(3 * nv * nv) + " generator pairs"});
  checks.push_back({"sp_morphism", sp_morphism_ok(nv),
                    "commutators map to matrix commutators"});
  checks.push_back({"alpha_morphism", alpha_morphism_ok(g),
                    std::to_string(static_cast<int>(g.g0_ids().size())) +
                        "^2 bracket pairs"});
  checks.push_back({"alpha1_action", alpha1_action_ok(g, 4),
                    "monomials up to degree 4"});
  checks.push_back({"alpha2_rho1", alpha2_rho1_ok(g),
                    "diagonal values equal minus rho_1; off-diagonal vanish"});

  const Rat c = casimir_constant(g);
  const Rat ct = casimir_constant_trace(g);
  checks.push_back({"c_scalar_trace", c == ct,
                    "product route " + rs(c) + ", trace route " + rs(ct)});

  json jc = json::array();
  bool pass = true;
  for (const IdentityCheck& ch : checks) {
    json one;
    one["name"] = ch.name;
    one["pass"] = ch.pass;
    one["detail"] = ch.detail;
    jc.push_back(one);
    pass = pass && ch.pass;
  }
  allPass = allPass && pass;

  json out;
  out["m"] = m;
  out["n"] = n;
  out["c_value"] = rs(c);
  out["checks"] = jc;
  out["all_pass"] = pass;
  if (explain) {
    out["sp_table"] = spTable;
    json at = json::array();
    for (int id : g.g0_ids()) {
      auto [k, l] = g.unit_of(id);
      SuperElement e;
      e.add(id, 1);
      json row;
      row["generator"] = "E(" + std::to_string(k) + "," + std::to_string(l) + ")";
      row["alpha"] = alpha(g, e).str();
      row["alpha2"] = rs(alpha2(g, e));
      at.push_back(row);
    }
    out["alpha_table"] = at;
  }
  return out;
}

std::string identities_table(const json& j) {
  std::ostringstream os;
  for (const json& sz : j.at("sizes")) {
    os << "gl(" << sz.at("m").get<int>() << "|" << sz.at("n").get<int>()
       << ")  C = " << sz.at("c_value").get<std::string>() << "\n";
    for (const json& ch : sz.at("checks"))
      os << "  [" << (ch.at("pass").get<bool>() ? "pass" : "FAIL") << "] "
         << ch.at("name").get<std::string>() << "  ("
         << ch.at("detail").get<std::string>() << ")\n";
    if (sz.contains("alpha_table"))
      for (const json& row : sz.at("alpha_table"))
        os << "  alpha(" << row.at("generator").get<std::string>()
           << ") = " << row.at("alpha").get<std::string>() << "\n";
  }
  os << (j.at("all_pass").get<bool>() ? "all identities hold\n"
                                      : "identity failures present\n");
  return os.str();
}

// ---------------------------------------------------------------------------
// verify d2

json d2_symbolic(int m, int n) {
  AlgebraContext g(m, n);
  PbwOrder order(g);
  D2Report rep = verify_d_squared(g);
  json out;
  out["mode"] = "symbolic";
  out["identity"] = "D^2 = -Omega (x) 1 + Omega_{g0 Delta} - C";
  out["lhs_terms"] = rep.lhs.term_strings(g, order);
  out["rhs_terms"] = rep.rhs.term_strings(g, order);
  out["difference"] = rep.difference.term_strings(g, order);
  out["c_constant"] = rs(rep.c_constant);
  out["equal"] = rep.equal;
  return out;
}

json d2_on_module(const AlgebraContext& g, const ModuleData& v, int maxDegree) {
  GradedOps ops(g, v, maxDegree);
  const Rat c = casimir_constant(g);
  json degrees = json::array();
  bool equal = true;
  long long lhsNz = 0, rhsNz = 0, diffNz = 0;
  for (int i = 0; i <= maxDegree; ++i) {
    const int dim = ops.slice_dim(i);
    RatMatrix lhs = ops.dirac_squared(i);
    RatMatrix rhs =
        ops.omega_g0_delta(i) -
        RatMatrix::kronecker(ops.omega_v(), RatMatrix::identity(ops.slice(i).dim())) -
        RatMatrix::identity(dim).scaled(c);
    RatMatrix diff = lhs - rhs;
    json one;
    one["i"] = i;
    one["slice_dim"] = dim;
    one["equal"] = diff.is_zero();
    degrees.push_back(one);
    equal = equal && diff.is_zero();
    lhsNz += lhs.nnz();
    rhsNz += rhs.nnz();
    diffNz += diff.nnz();
  }
  json out;
  out["mode"] = "module";
  out["identity"] = "D^2 = -Omega (x) 1 + Omega_{g0 Delta} - C";
  out["module"] = v.label;
  out["max_degree"] = maxDegree;
  out["lhs_terms"] = lhsNz;
  out["rhs_terms"] = rhsNz;
  out["difference"] = diffNz;
  out["degrees"] = degrees;
  out["c_constant"] = rs(c);
  out["equal"] = equal;
  return out;
}

std::string d2_table(const json& j) {
  std::ostringstream os;
  os << j.at("identity").get<std::string>() << "\n"
     << "mode " << j.at("mode").get<std::string>() << ", C = "
     << j.at("c_constant").get<std::string>() << "\n"
     << (j.at("equal").get<bool>() ? "identity holds\n" : "identity FAILS\n");
  return os.str();
}

// ---------------------------------------------------------------------------
// dirac

struct DiracCfg {
  int m = 1, n = 1;
  std::string moduleSpec = "nat";
  int maxDegree = 8;
  bool infchar = false;
  bool bound = false;
};

json dirac_block_report(const AlgebraContext& g, const ModuleData& block,
                        bool haveEigenvalue, const Rat& eigenvalue,
                        const DiracCfg& cfg, bool& pass) {
  GradedOps ops(g, block, cfg.maxDegree);
  json out;
  out["block_label"] = block.label;
  out["block_eigenvalue"] = haveEigenvalue ? json(rs(eigenvalue)) : json(nullptr);
  json checks;
  checks["unitary"] = ops.unitary();

  json degrees = json::array();
  if (ops.unitary()) {
    DiracReport rep = dirac_cohomology(ops);
    for (const DegreeReport& d : rep.degrees) {
      json one;
      one["i"] = d.degree;
      one["slice_dim"] = d.sliceDim;
      one["harmonic_dim"] = d.harmonicDim;
      one["g0_types"] = types_json(d.types, g.m());
      degrees.push_back(one);
    }
    out["hplus_dim"] = rep.hplusDim;
    out["hminus_dim"] = rep.hminusDim;
    checks["kernel_meets_image_trivially"] = rep.kernelMeetsImageTrivially;
    pass = pass && rep.kernelMeetsImageTrivially;
  } else {
    int hp = 0, hm = 0;
    for (int i = 0; i <= cfg.maxDegree; ++i) {
      const int hd = dirac_quotient_dim(ops, i);
      json one;
      one["i"] = i;
      one["slice_dim"] = ops.slice_dim(i);
      one["harmonic_dim"] = hd;
      one["g0_types"] = json::array();
      degrees.push_back(one);
      (i % 2 == 0 ? hp : hm) += hd;
    }
    out["hplus_dim"] = hp;
    out["hminus_dim"] = hm;
  }
  out["degrees"] = degrees;

  const bool spectral = ops.unitary() && haveEigenvalue;
  if (cfg.infchar) {
    if (spectral) {
      InfCharReport ic = infinitesimal_character_check(ops, eigenvalue);
      NegativeControl nc = infinitesimal_character_negative_control(ops, eigenvalue);
      json ji;
      ji["expected"] = rs(ic.expected);
      json degs = json::array();
      for (const InfCharDegree& d : ic.degrees) {
        json one;
        one["i"] = d.degree;
        one["harmonic_dim"] = d.harmonicDim;
        one["scalar_matches"] = d.scalarMatches;
        degs.push_back(one);
      }
      ji["degrees"] = degs;
      ji["all_pass"] = ic.all_pass();
      json jn;
      jn["found"] = nc.found;
      jn["degree"] = nc.degree;
      jn["subspace_dim"] = nc.subspaceDim;
      jn["determinant"] = rs(nc.determinant);
      jn["invertible"] = nc.invertible;
      ji["negative_control"] = jn;
      checks["infinitesimal"] = ji;
      pass = pass && ic.all_pass() && (!nc.found || nc.invertible);
    } else {
      checks["infinitesimal"] = "skipped: needs a unitary block with a rational "
                                "Casimir eigenvalue";
    }
  }
  if (cfg.bound) {
    if (spectral) {
      VanishingReport vr = vanishing_bound(ops, eigenvalue);
      json jv;
      jv["found"] = vr.found;
      jv["bound"] = vr.found ? json(vr.bound) : json(nullptr);
      json degs = json::array();
      for (const VanishingDegree& d : vr.degrees) {
        json one;
        one["i"] = d.degree;
        one["attained"] = d.eigenvalueAttained;
        degs.push_back(one);
      }
      jv["degrees"] = degs;
      checks["vanishing"] = jv;
    } else {
      checks["vanishing"] = "skipped: needs a unitary block with a rational "
                            "Casimir eigenvalue";
    }
  }
  out["checks"] = checks;
  return out;
}

json dirac_report(const DiracCfg& cfg, bool& pass) {
  AlgebraContext g(cfg.m, cfg.n);
  ModuleData v = parse_module(g, cfg.moduleSpec);
  json out;
  out["schema"] = 1;
  out["m"] = cfg.m;
  out["n"] = cfg.n;
  out["module"] = cfg.moduleSpec;
  out["module_info"] = module_meta(g, v);
  out["max_degree"] = cfg.maxDegree;
  json blocks = json::array();
  try {
    for (const CasimirBlock& blk : split_by_casimir(g, v))
      blocks.push_back(
          dirac_block_report(g, blk.module, true, blk.eigenvalue, cfg, pass));
  } catch (const std::domain_error& e) {
    // Irrational Casimir spectrum: report the whole module as one block.
    out["diagnostic"] = std::string("casimir split unavailable: ") + e.what();
    blocks.push_back(dirac_block_report(g, v, false, Rat(0), cfg, pass));
  }
  out["blocks"] = blocks;
  return out;
}

std::string dirac_table(const json& j) {
  std::ostringstream os;
  os << "gl(" << j.at("m").get<int>() << "|" << j.at("n").get<int>() << ")  module "
     << j.at("module").get<std::string>() << "  max degree "
     << j.at("max_degree").get<int>() << "\n";
  for (const json& blk : j.at("blocks")) {
    os << "block " << blk.at("block_label").get<std::string>() << "\n";
    os << "  i  slice  harmonic  g0 types\n";
    for (const json& d : blk.at("degrees")) {
      os << "  " << d.at("i").get<int>() << "  " << d.at("slice_dim").get<int>()
         << "  " << d.at("harmonic_dim").get<int>() << "  ";
      bool first = true;
      for (const json& t : d.at("g0_types")) {
        if (!first) os << "; ";
        first = false;
        os << t.at("weight").get<std::string>() << "x"
           << t.at("multiplicity").get<int>();
      }
      if (d.at("g0_types").empty()) os << "-";
      os << "\n";
    }
    os << "  H+ " << blk.at("hplus_dim").get<int>() << "  H- "
       << blk.at("hminus_dim").get<int>() << "\n";
    const json& checks = blk.at("checks");
    if (checks.contains("infinitesimal") && checks.at("infinitesimal").is_object())
      os << "  infinitesimal character: expected "
         << checks.at("infinitesimal").at("expected").get<std::string>() << ", "
         << (checks.at("infinitesimal").at("all_pass").get<bool>() ? "pass"
                                                                   : "FAIL")
         << "\n";
    if (checks.contains("vanishing") && checks.at("vanishing").is_object()) {
      const json& v = checks.at("vanishing");
      os << "  vanishing bound: "
         << (v.at("found").get<bool>() ? std::to_string(v.at("bound").get<int>())
                                       : std::string("none"))
         << "\n";
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// cohomology

struct CohoCfg {
  int m = 1, n = 1;
  std::string moduleSpec = "nat";
  int maxDegree = 8;
  bool homology = false;
  bool twist = false;
  bool hodge = false;
};

json cohomology_report(const CohoCfg& cfg, bool& pass) {
  AlgebraContext g(cfg.m, cfg.n);
  ModuleData v = parse_module(g, cfg.moduleSpec);
  GradedOps ops(g, v, cfg.maxDegree);

  json out;
  out["schema"] = 1;
  out["m"] = cfg.m;
  out["n"] = cfg.n;
  out["module"] = cfg.moduleSpec;
  out["module_info"] = module_meta(g, v);
  out["max_degree"] = cfg.maxDegree;

  json witnesses;
  json hiDims = json::array();
  json coho = json::array();
  for (int i = 0; i <= cfg.maxDegree; ++i) {
    CohomologySlice s = g_plus_cohomology(ops, i);
    hiDims.push_back(s.dim);
    json one;
    one["i"] = i;
    one["dim"] = s.dim;
    one["types"] = types_json(s.types, g.m());
    one["well_defined"] = s.wellDefined;
    coho.push_back(one);
    pass = pass && s.wellDefined;
  }
  out["Hi_dims"] = hiDims;
  witnesses["cohomology"] = coho;

  if (cfg.homology) {
    json loDims = json::array();
    json homo = json::array();
    for (int i = 0; i <= cfg.maxDegree; ++i) {
      CohomologySlice s = g_minus_homology(ops, i);
      loDims.push_back(s.dim);
      json one;
      one["i"] = i;
      one["dim"] = s.dim;
      one["types"] = types_json(s.types, g.m());
      one["well_defined"] = s.wellDefined;
      homo.push_back(one);
      pass = pass && s.wellDefined;
    }
    out["Hlow_dims"] = loDims;
    witnesses["homology"] = homo;
  }

  if (cfg.twist) {
    TwistReport rep = twist_compare(ops, cfg.maxDegree);
    json tw = json::array();
    for (const TwistDegree& t : rep.degrees) {
      json one;
      one["i"] = t.degree;
      one["harmonic_types"] = types_json(t.harmonicTypes, g.m());
      one["hplus_shifted"] = types_json(t.hplusShifted, g.m());
      one["hminus_shifted"] = types_json(t.hminusShifted, g.m());
      one["match"] = t.match;
      tw.push_back(one);
    }
    out["twisted_match"] = rep.all_pass();
    witnesses["twist"] = tw;
    pass = pass && rep.all_pass();
  }

  if (cfg.hodge) {
    HodgeReport rep = hodge_verify(ops, cfg.maxDegree);
    json hd = json::array();
    for (const HodgeDegree& h : rep.degrees) {
      json one;
      one["i"] = h.degree;
      one["dim_identity"] = h.dimIdentity;
      one["direct_sum"] = h.directSum;
      one["orthogonal"] = h.orthogonal;
      one["kerd_splits"] = h.kerdSplits;
      one["kernels_equal"] = h.kernelsEqual;
      one["square_splits"] = h.squareSplits;
      hd.push_back(one);
    }
    out["hodge_pass"] = rep.all_pass();
    witnesses["hodge"] = hd;
    pass = pass && rep.all_pass();
  }

  out["witnesses"] = witnesses;
  return out;
}

std::string cohomology_table(const json& j) {
  std::ostringstream os;
  os << "gl(" << j.at("m").get<int>() << "|" << j.at("n").get<int>() << ")  module "
     << j.at("module").get<std::string>() << "\n";
  os << "  H^i dims:";
  for (const json& d : j.at("Hi_dims")) os << " " << d.get<int>();
  os << "\n";
  if (j.contains("Hlow_dims")) {
    os << "  H_i dims:";
    for (const json& d : j.at("Hlow_dims")) os << " " << d.get<int>();
    os << "\n";
  }
  if (j.contains("twisted_match"))
    os << "  twist match: " << (j.at("twisted_match").get<bool>() ? "yes" : "NO")
       << "\n";
  if (j.contains("hodge_pass"))
    os << "  hodge decomposition: "
       << (j.at("hodge_pass").get<bool>() ? "pass" : "FAIL") << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// regress

struct Fixture {
  std::string file;
  std::function<json(bool&)> generate;
};

std::vector<Fixture> fixture_set() {
  std::vector<Fixture> out;
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
    DiracCfg dc;
    dc.m = m;
    dc.n = n;
    dc.moduleSpec = "nat";
    dc.maxDegree = 6;
    dc.infchar = true;
    dc.bound = true;
    out.push_back({"dirac_m" + std::to_string(m) + "n" + std::to_string(n) +
                       "_nat.json",
                   [dc](bool& pass) { return dirac_report(dc, pass); }});
    CohoCfg cc;
    cc.m = m;
    cc.n = n;
    cc.moduleSpec = "nat";
    cc.maxDegree = 4;
    cc.homology = true;
    cc.twist = true;
    cc.hodge = true;
    out.push_back({"cohomology_m" + std::to_string(m) + "n" + std::to_string(n) +
                       "_nat.json",
                   [cc](bool& pass) { return cohomology_report(cc, pass); }});
  }
  return out;
}

int run_regress(const std::string& dir, bool write, const OutputOpts& out) {
  json report;
  report["schema"] = 1;
  report["fixtures_dir"] = dir;
  report["mode"] = write ? "write" : "compare";
  json rows = json::array();
  bool allMatch = true;
  bool checksPass = true;
  for (const Fixture& fx : fixture_set()) {
    const std::string path = dir + "/" + fx.file;
    json derived = fx.generate(checksPass);
    const std::string text = render_json(derived);
    json row;
    row["file"] = fx.file;
    if (write) {
      write_atomic(path, text);
      row["written"] = true;
    } else {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        row["match"] = false;
        row["error"] = "missing fixture file";
        allMatch = false;
      } else {
        std::ostringstream buf;
        buf << in.rdbuf();
        const bool match = buf.str() == text;
        row["match"] = match;
        allMatch = allMatch && match;
      }
    }
    rows.push_back(row);
  }
  report["fixtures"] = rows;
  report["checks_pass"] = checksPass;
  if (!write) report["all_match"] = allMatch;

  deliver(out, report, [&report]() {
    std::ostringstream os;
    for (const json& row : report.at("fixtures")) {
      os << row.at("file").get<std::string>() << ": ";
      if (row.contains("written"))
        os << "written\n";
      else
        os << (row.at("match").get<bool>() ? "match" : "MISMATCH") << "\n";
    }
    return os.str();
  });
  return (write || allMatch) && checksPass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Dirac operator toolkit for gl(m|n)"};
  app.require_subcommand(1);

  // verify
  CLI::App* verify = app.add_subcommand("verify", "identity suites");
  verify->require_subcommand(1);

  int vm = 0, vn = 0;
  bool explain = false;
  OutputOpts idOut;
  CLI::App* vid = verify->add_subcommand("identities",
                                         "quadratic correspondence, alpha, C");
  vid->add_option("--m", vm, "rows (omit to run all desk sizes)");
  vid->add_option("--n", vn, "columns (omit to run all desk sizes)");
  vid->add_flag("--explain", explain, "include rendered element tables");
  add_output_opts(vid, idOut);

  int dm = 1, dn = 1;
  bool symbolic = false;
  std::string onModule;
  int d2MaxDegree = 4;
  OutputOpts d2Out;
  CLI::App* vd2 = verify->add_subcommand("d2", "the square of the Dirac element");
  vd2->add_option("--m", dm, "rows")->required();
  vd2->add_option("--n", dn, "columns")->required();
  vd2->add_flag("--symbolic", symbolic, "normal-form comparison (default)");
  vd2->add_option("--on-module", onModule, "compare operator matrices on slices");
  vd2->add_option("--max-degree", d2MaxDegree, "top slice degree for --on-module");
  add_output_opts(vd2, d2Out);

  // dirac
  DiracCfg dcfg;
  OutputOpts diracOut;
  CLI::App* cdirac = app.add_subcommand("dirac", "harmonic spaces per degree");
  cdirac->add_option("--m", dcfg.m, "rows")->required();
  cdirac->add_option("--n", dcfg.n, "columns")->required();
  cdirac->add_option("--module", dcfg.moduleSpec, "triv|nat|dual(S)|tensor(S,S)");
  cdirac->add_option("--max-degree", dcfg.maxDegree, "top slice degree");
  cdirac->add_flag("--check-infinitesimal", dcfg.infchar,
                   "verify the Casimir scalar on harmonics");
  cdirac->add_flag("--bound", dcfg.bound, "scan for a vanishing bound");
  add_output_opts(cdirac, diracOut);

  // cohomology
  CohoCfg ccfg;
  OutputOpts cohoOut;
  CLI::App* ccoho = app.add_subcommand("cohomology", "raising-complex cohomology");
  ccoho->add_option("--m", ccfg.m, "rows")->required();
  ccoho->add_option("--n", ccfg.n, "columns")->required();
  ccoho->add_option("--module", ccfg.moduleSpec, "triv|nat|dual(S)|tensor(S,S)");
  ccoho->add_option("--max-degree", ccfg.maxDegree, "top degree");
  ccoho->add_flag("--homology", ccfg.homology, "also the lowering-complex homology");
  ccoho->add_flag("--twist-compare", ccfg.twist,
                  "compare harmonic types with the -rho_1 shift");
  ccoho->add_flag("--hodge", ccfg.hodge, "run the decomposition certificates");
  add_output_opts(ccoho, cohoOut);

  // regress
  std::string fixturesDir = "fixtures";
  bool writeFixtures = false;
  OutputOpts regressOut;
  CLI::App* cregress = app.add_subcommand("regress", "re-derive stored fixtures");
  cregress->add_option("--fixtures", fixturesDir, "fixtures directory");
  cregress->add_flag("--write", writeFixtures, "regenerate instead of comparing");
  add_output_opts(cregress, regressOut);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (vid->parsed()) {
      std::vector<std::pair<int, int>> sizes;
      if (vm > 0 && vn > 0)
        sizes = {{vm, vn}};
      else if (vm == 0 && vn == 0)
        sizes = {{1, 1}, {2, 1}, {1, 2}, {2, 2}};
      else
        throw std::invalid_argument("give both --m and --n, or neither");
      bool pass = true;
      json out;
      out["schema"] = 1;
      json arr = json::array();
      for (auto [m, n] : sizes) arr.push_back(identities_for_size(m, n, explain, pass));
      out["sizes"] = arr;
      out["all_pass"] = pass;
      deliver(idOut, out, [&out]() { return identities_table(out); });
      return pass ? kExitOk : kExitCheckFailed;
    }
    if (vd2->parsed()) {
      if (symbolic && !onModule.empty())
        throw std::invalid_argument("--symbolic and --on-module are exclusive");
      json out;
      out["schema"] = 1;
      out["m"] = dm;
      out["n"] = dn;
      json rep;
      if (onModule.empty()) {
        rep = d2_symbolic(dm, dn);
      } else {
        AlgebraContext g(dm, dn);
        rep = d2_on_module(g, parse_module(g, onModule), d2MaxDegree);
      }
      for (auto& [k, val] : rep.items()) out[k] = val;
      deliver(d2Out, out, [&out]() { return d2_table(out); });
      return out.at("equal").get<bool>() ? kExitOk : kExitCheckFailed;
    }
    if (cdirac->parsed()) {
      bool pass = true;
      json out = dirac_report(dcfg, pass);
      deliver(diracOut, out, [&out]() { return dirac_table(out); });
      return pass ? kExitOk : kExitCheckFailed;
    }
    if (ccoho->parsed()) {
      bool pass = true;
      json out = cohomology_report(ccfg, pass);
      deliver(cohoOut, out, [&out]() { return cohomology_table(out); });
      return pass ? kExitOk : kExitCheckFailed;
    }
    if (cregress->parsed()) return run_regress(fixturesDir, writeFixtures, regressOut);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
