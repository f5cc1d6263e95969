#include "monoendo/report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "monoendo/cells.hpp"
#include "monoendo/hecke.hpp"
#include "monoendo/soergel.hpp"
#include "monoendo/tits.hpp"

namespace monoendo {

using ojson = nlohmann::ordered_json;

namespace {

std::string config_message(const std::string& source, int line, const std::string& msg) {
  return source + ":" + (line > 0 ? std::to_string(line) + ":" : "") + " " + msg;
}

int line_of_offset(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

// Line of the first occurrence of "key" as a JSON key, or 0.
int line_of_key(const std::string& text, const std::string& key) {
  const auto pos = text.find("\"" + key + "\"");
  return pos == std::string::npos ? 0 : line_of_offset(text, pos);
}

struct Ctx {
  const std::string& text;
  const std::string& source;
  [[noreturn]] void fail(const std::string& key, const std::string& msg) const {
    throw ConfigError(source, line_of_key(text, key), msg);
  }
};

std::string as_string(const Ctx& ctx, const nlohmann::json& j, const std::string& key) {
  if (!j.is_string()) ctx.fail(key, "'" + key + "' must be a string");
  return j.get<std::string>();
}

std::int64_t as_int(const Ctx& ctx, const nlohmann::json& j, const std::string& key) {
  if (!j.is_number_integer()) ctx.fail(key, "'" + key + "' must be an integer");
  return j.get<std::int64_t>();
}

std::string fraction_string(const Ctx& ctx, const nlohmann::json& j, const std::string& key) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  ctx.fail(key, "'" + key + "' entries must be fraction strings like \"1/2\"");
}

TwistSpec parse_twist(const Ctx& ctx, const nlohmann::json& j, const DatumPtr& d) {
  if (!j.is_object()) ctx.fail("twist", "'twist' must be an object");
  TwistSpec t;
  for (const auto& [k, v] : j.items())
    if (k != "kind" && k != "delta" && k != "q") ctx.fail(k, "unknown twist field '" + k + "'");
  if (j.contains("kind")) {
    const std::string kind = as_string(ctx, j["kind"], "kind");
    if (kind == "frobenius") t.kind = TwistKind::frobenius;
    else if (kind == "automorphism") t.kind = TwistKind::automorphism;
    else ctx.fail("kind", "twist kind must be \"frobenius\" or \"automorphism\", got \"" + kind + "\"");
  }
  if (j.contains("q")) t.q = as_int(ctx, j["q"], "q");
  if (j.contains("delta")) {
    const auto& dj = j["delta"];
    if (dj.is_string()) {
      t.delta = dj.get<std::string>();
      if (t.delta != "split" && t.delta != "identity" && t.delta != "unitary" && t.delta != "opposition")
        ctx.fail("delta", "delta must be split, identity, unitary, opposition, a permutation or a matrix");
    } else if (dj.is_array() && !dj.empty() && dj[0].is_array()) {
      t.delta = "matrix";
      const int r = d->rank();
      if (static_cast<int>(dj.size()) != r) ctx.fail("delta", "delta matrix needs " + std::to_string(r) + " rows");
      t.matrix = IntMat(r, r);
      for (int a = 0; a < r; ++a) {
        if (!dj[a].is_array() || static_cast<int>(dj[a].size()) != r)
          ctx.fail("delta", "delta matrix needs " + std::to_string(r) + " columns");
        for (int b = 0; b < r; ++b) t.matrix(a, b) = as_int(ctx, dj[a][b], "delta");
      }
    } else if (dj.is_array()) {
      t.delta = "permutation";
      for (const auto& x : dj) t.permutation.push_back(static_cast<int>(as_int(ctx, x, "delta")) - 1);
    } else {
      ctx.fail("delta", "delta must be a string, a permutation or a matrix");
    }
  }
  return t;
}

// ---------------------------------------------------------------- json helpers

ojson word_json(const WeylElt& w) {
  ojson a = ojson::array();
  for (int i : w.reduced_word()) a.push_back(i + 1);
  return a;
}

ojson coeff_json(const mpz_class& c) {
  if (c.fits_slong_p()) return c.get_si();
  return c.get_str();
}

// [[exponent, coefficient], ...] in increasing exponent
ojson poly_json(const LaurentPoly& p) {
  ojson a = ojson::array();
  for (const auto& [e, c] : p.terms()) a.push_back(ojson::array({e, coeff_json(c)}));
  return a;
}

ojson strings_json(const std::vector<std::string>& v) {
  ojson a = ojson::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

ojson ivec_json(const IntVec& v) {
  ojson a = ojson::array();
  for (auto x : v) a.push_back(x);
  return a;
}

ojson chi_json(const CharParam& chi) {
  ojson j;
  j["values"] = strings_json(chi.to_strings());
  j["order"] = chi.order();
  j["model"] = "chi: X_*(T) -> Q/Z, values on the X_* basis; torsion point of the dual torus, no choice of F_q^x generator";
  return j;
}

ojson header(const std::string& command, const Config& cfg) {
  ojson j;
  j["schema"] = kReportSchema;
  j["version"] = MONOENDO_VERSION;
  j["command"] = command;
  j["config_sha256"] = cfg.sha256;
  const RootDatum& d = *cfg.datum;
  ojson dj;
  dj["cartan_type"] = cfg.cartan_type;
  dj["isogeny"] = cfg.isogeny;
  dj["type"] = d.type_label();
  dj["rank"] = d.rank();
  dj["weyl_order"] = d.weyl_group_order();
  dj["cochar_basis"] = d.description();
  j["datum"] = dj;
  j["chi"] = chi_json(cfg.chi);
  return j;
}

std::optional<std::int64_t> pick_q(const Config& cfg, const RunOptions& opts) {
  if (opts.q) return opts.q;
  if (cfg.twist && cfg.twist->q) return cfg.twist->q;
  return cfg.q;
}

// ---------------------------------------------------------------- commands

ojson subgroup_json(const ReflectionSubgroup& g) {
  const RootDatum& d = *g.datum();
  ojson j;
  j["type"] = g.type_label();
  j["rank"] = g.rank();
  j["order"] = g.order();
  ojson simple = ojson::array();
  for (int a : g.simple_roots()) simple.push_back(ivec_json(d.root_coeffs(a)));
  j["simple_roots"] = simple;
  ojson pos = ojson::array();
  for (int a = 0; a < d.num_positive(); ++a)
    if (g.contains_root(a)) pos.push_back(ivec_json(d.root_coeffs(a)));
  j["positive_roots"] = pos;
  return j;
}

ojson omega_json(const OmegaGroup& om) {
  ojson j;
  j["order"] = om.order();
  j["structure"] = om.structure();
  ojson reps = ojson::array();
  for (const auto& r : om.reps) reps.push_back(word_json(r));
  j["reps"] = reps;
  return j;
}

constexpr std::size_t kBlockListOrbitLimit = 64;
constexpr std::size_t kBlockMemberLimit = 64;

ojson cmd_analyze(const Config& cfg, const RunOptions& opts) {
  ojson j = header("analyze", cfg);
  const CharParam& chi = cfg.chi;
  const Stabilizer st = stabilizer_and_omega(chi);
  ojson e = subgroup_json(st.w_circ);
  e["H"] = st.w_circ.is_trivial() ? "torus" : st.w_circ.type_label();
  j["endoscopic"] = e;
  j["omega"] = omega_json(st.omega);
  j["stabilizer_order"] = st.order();
  const std::uint64_t n = orbit_size(chi);
  j["orbit_size"] = n;
  if (auto q = pick_q(cfg, opts)) {
    const std::string warn = q_compatibility(chi, *q);
    j["q"] = *q;
    j["q_warning"] = warn.empty() ? ojson(nullptr) : ojson(warn);
  }
  if (n > kBlockListOrbitLimit) {
    j["blocks"] = nullptr;
    j["blocks_note"] = "orbit has " + std::to_string(n) + " members; block tables are listed up to " +
                       std::to_string(kBlockListOrbitLimit);
    return j;
  }
  const OrbitData orb = orbit(chi);
  ojson bl = ojson::array();
  for (std::size_t t = 0; t < orb.size(); ++t)
    for (const Block& b : blocks(orb.members[t], chi)) {
      ojson x;
      x["target"] = strings_json(orb.members[t].to_strings());
      x["w_min"] = word_json(b.w_min());
      x["w_max"] = word_json(b.w_max());
      x["size"] = b.size();
      if (b.size() <= kBlockMemberLimit) {
        ojson ell = ojson::array();
        for (const WeylElt& w : b.members()) ell.push_back(ojson::array({word_json(w), b.ell_beta(w)}));
        x["ell_beta"] = ell;
      }
      bl.push_back(x);
    }
  j["blocks"] = bl;
  return j;
}

// v^{l_beta(w) - l_beta(y)} p_{y,w} as a polynomial in q = v^2
ojson classical_normalization(const LaurentPoly& p, int shift) {
  const LaurentPoly m = p.shift(shift);
  ojson a = ojson::array();
  for (const auto& [e, c] : m.terms()) {
    MONOENDO_CHECK(e >= 0 && e % 2 == 0, "KL polynomial has odd or negative degree");
    a.push_back(ojson::array({e / 2, coeff_json(c)}));
  }
  return a;
}

ojson cmd_kl(const Config& cfg, const RunOptions& opts) {
  ojson j = header("kl", cfg);
  HeckeAlgebra h(cfg.chi);
  const WeylGroup& wg = h.weyl();
  const CanonicalColumn& col = h.column(0);
  const int depth = opts.depth.value_or(-1);
  j["depth"] = depth < 0 ? ojson("full") : ojson(depth);
  j["normalization"] = "c_{w,L} = sum_y p_{y,w} Ttilde_y 1_L, Ttilde_y = v^-l(y) T_y; P(q) = v^(l_beta(w)-l_beta(y)) p at q = v^2";
  ojson rows = ojson::array();
  for (std::size_t w = 0; w < wg.size(); ++w) {
    if (depth >= 0 && wg.length(w) > depth) continue;
    const WeylElt we = wg.element(w);
    const Block beta(cfg.chi, we);
    const int lw = beta.ell_beta(we);
    ojson r;
    r["w"] = word_json(we);
    r["block_min"] = word_json(beta.w_min());
    r["ell_beta"] = lw;
    ojson terms = ojson::array();
    for (std::size_t y = 0; y < wg.size(); ++y) {
      const LaurentPoly& p = col.p[w][y];
      if (p.is_zero()) continue;
      const WeylElt ye = wg.element(y);
      ojson t;
      t["y"] = word_json(ye);
      t["p"] = poly_json(p);
      t["P"] = classical_normalization(p, lw - beta.ell_beta(ye));
      terms.push_back(t);
    }
    r["terms"] = terms;
    rows.push_back(r);
  }
  j["canonical_basis"] = rows;
  return j;
}

ojson cmd_cells(const Config& cfg, const RunOptions&) {
  ojson j = header("cells", cfg);
  const auto ext = extended_cells(cfg.chi);
  MONOENDO_CHECK(!ext.empty(), "no extended cells");
  const CellPartition& p = ext.front().partition;
  j["endoscopic_type"] = p.group.is_trivial() ? "torus" : p.group.type_label();
  ojson cells = ojson::array();
  for (std::size_t k = 0; k < p.size(); ++k) {
    ojson c;
    c["index"] = k;
    c["size"] = p.cells[k].size();
    ojson el = ojson::array();
    for (const auto& x : p.cells[k]) el.push_back(word_json(x));
    c["elements"] = el;
    ojson below = ojson::array();
    for (std::size_t a = 0; a < p.size(); ++a)
      if (a != k && p.leq(a, k)) below.push_back(a);
    c["strictly_below"] = below;
    cells.push_back(c);
  }
  j["cells"] = cells;
  j["omega"] = omega_json(ext.front().omega);
  ojson act = ojson::array();
  for (const auto& row : ext.front().omega_on_cells) {
    ojson a = ojson::array();
    for (auto x : row) a.push_back(x);
    act.push_back(a);
  }
  j["omega_on_cells"] = act;
  ojson ex = ojson::array();
  for (const auto& e : ext) {
    ojson x;
    x["cell"] = e.cell;
    ojson nc = ojson::array();
    for (auto c : e.neutral_cells) nc.push_back(c);
    x["neutral_cells"] = nc;
    ojson oc = ojson::array();
    for (int g : e.omega_c) oc.push_back(g);
    x["omega_c"] = oc;
    x["omega_c_order"] = e.omega_c.size();
    ex.push_back(x);
  }
  j["extended_cells"] = ex;
  return j;
}

ojson cmd_cocycle(const Config& cfg, const RunOptions& opts) {
  const auto q = pick_q(cfg, opts);
  if (!q) throw InputError("cocycle needs a prime power q (--q or \"q\" in the config)");
  ojson j = header("cocycle", cfg);
  const TwistingData t = twisting_data(cfg.chi, *q);
  j["q"] = *q;
  j["omega"] = omega_json(t.omega);
  const int m = t.omega.order();
  ojson c = ojson::array(), lam = ojson::array();
  for (int g = 0; g < m; ++g) {
    ojson cr = ojson::array(), lr = ojson::array();
    for (int b = 0; b < m; ++b) {
      cr.push_back(ivec_json(t.c[g][b]));
      lr.push_back(rat_to_string(t.lambda[g][b]));
    }
    c.push_back(cr);
    lam.push_back(lr);
  }
  j["c"] = c;
  j["lambda"] = lam;
  j["lambda_denominator"] = t.denominator();
  j["note"] = t.note.empty() ? ojson(nullptr) : ojson(t.note);
  const auto triv = trivialize_class(t);
  if (triv) {
    ojson tj;
    tj["denominator"] = triv->denominator;
    ojson mu = ojson::array();
    for (const Rat& x : triv->mu) mu.push_back(rat_to_string(x));
    tj["mu"] = mu;
    j["trivialization"] = tj;
  } else {
    j["trivialization"] = nullptr;
  }
  return j;
}

ojson orbit_report_json(const OrbitReport& r) {
  ojson j;
  j["eps_chi"] = strings_json(r.eps_chi.to_strings());
  j["omega"] = omega_json(r.omega);
  j["cell"] = r.cell;
  ojson oc = ojson::array();
  for (int g : r.omega_c) oc.push_back(g);
  j["omega_c"] = oc;
  ojson bl = ojson::array();
  for (std::size_t k = 0; k < r.blocks.size(); ++k) {
    ojson b;
    b["index"] = k;
    b["w_min"] = word_json(r.blocks[k].w_min());
    b["preserves_cell"] = std::find(r.b_c.begin(), r.b_c.end(), k) != r.b_c.end();
    bl.push_back(b);
  }
  j["blocks"] = bl;
  ojson bc = ojson::array();
  for (auto k : r.b_c) bc.push_back(k);
  j["b_c"] = bc;
  ojson orbits = ojson::array();
  for (const auto& o : r.orbits) {
    ojson x;
    ojson mem = ojson::array();
    for (auto k : o.members) mem.push_back(k);
    x["members"] = mem;
    x["stabilizer_order"] = o.stabilizer.size();
    x["omega_beta_order"] = o.stabilizer_full.size();
    orbits.push_back(x);
  }
  j["orbits"] = orbits;
  ojson sig = ojson::array();
  for (std::size_t k = 0; k < r.b_c.size(); ++k) {
    ojson x;
    x["block"] = r.b_c[k];
    ojson perm = ojson::array();
    for (int p : r.sigma[k]) perm.push_back(p + 1);
    x["simple_root_permutation"] = perm;
    sig.push_back(x);
  }
  j["sigma"] = sig;
  return j;
}

ojson cmd_count(const Config& cfg, const RunOptions& opts) {
  const Twist eps = make_twist(cfg, opts.q);
  ojson j = header("count", cfg);
  j["twist"] = eps.description();
  if (opts.cell) {
    j["report"] = orbit_report_json(b_set(cfg.chi, eps, *opts.cell));
    j["count"] = nullptr;
    return j;
  }
  const TorusCount tc = count_torus_case(cfg.chi, eps);
  j["report"] = orbit_report_json(tc.report);
  j["count"] = tc.count;
  return j;
}

ojson cmd_bsl(const Config& cfg, const RunOptions& opts) {
  if (!opts.word) throw InputError("bsl needs --word");
  const std::vector<int>& word = *opts.word;
  ojson j = header("bsl", cfg);
  ojson wj = ojson::array();
  for (int i : word) wj.push_back(i + 1);
  j["word"] = wj;
  const WeylElt w = WeylElt::from_word(cfg.datum, word);
  const bool reduced = w.length() == static_cast<int>(word.size());
  j["reduced"] = reduced;
  if (reduced) {
    const BslRewrite r = bsl_rewrite(word, cfg.chi);
    ojson rj;
    ojson t = ojson::array();
    for (int p : r.t_word) t.push_back(p + 1);
    rj["t_word"] = t;
    const ReflectionSubgroup target = w_circ(r.beta.target());
    ojson troots = ojson::array();
    for (int p : r.t_word) troots.push_back(ivec_json(cfg.datum->root_coeffs(target.simple_roots()[p])));
    rj["t_roots"] = troots;
    rj["w_min"] = word_json(r.beta.w_min());
    rj["ell_beta"] = r.t_word.size();
    rj["target"] = strings_json(r.beta.target().to_strings());
    j["rewrite"] = rj;
  } else {
    j["rewrite"] = nullptr;
  }
  HeckeAlgebra h(cfg.chi);
  const auto e = h.to_canonical(bsl_character(h, word, 0));
  ojson ch = ojson::array();
  for (const auto& [key, coeff] : e) {
    ojson x;
    x["w"] = word_json(h.weyl().element(key.first));
    x["coeff"] = poly_json(coeff);
    ch.push_back(x);
  }
  j["character"] = ch;
  return j;
}

}  // namespace

ConfigError::ConfigError(const std::string& source, int line, const std::string& msg)
    : InputError(config_message(source, line, msg)), line_(line), detail_(msg) {}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw InternalError("SHA-256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

Config parse_config(const std::string& text, const std::string& source) {
  const Ctx ctx{text, source};
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::string msg = e.what();
    const auto tag = msg.find("] ");
    if (tag != std::string::npos) msg = msg.substr(tag + 2);
    throw ConfigError(source, line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0), "malformed JSON: " + msg);
  }
  if (!j.is_object()) throw ConfigError(source, 1, "config must be a JSON object");
  for (const auto& [k, v] : j.items())
    if (k != "cartan_type" && k != "isogeny" && k != "lattice" && k != "chi" && k != "twist" && k != "q")
      ctx.fail(k, "unknown field '" + k + "'");

  Config cfg;
  cfg.source = source;
  cfg.sha256 = sha256_hex(text);
  if (!j.contains("cartan_type")) throw ConfigError(source, 0, "missing field 'cartan_type'");
  cfg.cartan_type = as_string(ctx, j["cartan_type"], "cartan_type");
  try {
    if (j.contains("lattice")) {
      if (j.contains("isogeny")) ctx.fail("lattice", "give either 'isogeny' or 'lattice', not both");
      const auto& lj = j["lattice"];
      if (!lj.is_array() || lj.empty() || !lj[0].is_array()) ctx.fail("lattice", "'lattice' must be a list of rows");
      RatMat rows(static_cast<int>(lj.size()), static_cast<int>(lj[0].size()));
      for (std::size_t a = 0; a < lj.size(); ++a) {
        if (!lj[a].is_array() || lj[a].size() != lj[0].size()) ctx.fail("lattice", "lattice rows have different lengths");
        for (std::size_t b = 0; b < lj[a].size(); ++b)
          rows(static_cast<int>(a), static_cast<int>(b)) = parse_rat(fraction_string(ctx, lj[a][b], "lattice"));
      }
      cfg.isogeny = "custom";
      cfg.datum = RootDatum::from_lattice(cfg.cartan_type, rows);
    } else {
      const std::string iso = j.contains("isogeny") ? as_string(ctx, j["isogeny"], "isogeny") : "sc";
      if (iso == "sc" || iso == "simply_connected") {
        cfg.isogeny = "simply_connected";
        cfg.datum = RootDatum::from_cartan(cfg.cartan_type, Isogeny::simply_connected);
      } else if (iso == "ad" || iso == "adjoint") {
        cfg.isogeny = "adjoint";
        cfg.datum = RootDatum::from_cartan(cfg.cartan_type, Isogeny::adjoint);
      } else {
        ctx.fail("isogeny", "isogeny must be \"sc\" or \"adjoint\", got \"" + iso + "\"");
      }
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const InputError& e) {
    ctx.fail(j.contains("lattice") ? "lattice" : "cartan_type", e.what());
  }

  if (!j.contains("chi")) throw ConfigError(source, 0, "missing field 'chi'");
  const auto& cj = j["chi"];
  if (!cj.is_array()) ctx.fail("chi", "'chi' must be a list of fraction strings");
  std::vector<std::string> vals;
  for (const auto& x : cj) vals.push_back(fraction_string(ctx, x, "chi"));
  try {
    cfg.chi = CharParam::parse(cfg.datum, vals);
  } catch (const InputError& e) {
    ctx.fail("chi", e.what());
  }
  if (j.contains("twist")) cfg.twist = parse_twist(ctx, j["twist"], cfg.datum);
  if (j.contains("q")) cfg.q = as_int(ctx, j["q"], "q");
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path, 0, "cannot open config file");
  std::ostringstream os;
  os << in.rdbuf();
  return parse_config(os.str(), path);
}

Twist make_twist(const Config& cfg, std::optional<std::int64_t> q) {
  const TwistSpec spec = cfg.twist.value_or(TwistSpec{});
  const DatumPtr& d = cfg.datum;
  IntMat delta;
  if (spec.delta == "split" || spec.delta == "identity") delta = IntMat::identity(d->rank());
  else if (spec.delta == "unitary" || spec.delta == "opposition") delta = Twist::opposition(d);
  else if (spec.delta == "permutation") delta = Twist::diagram(d, spec.permutation);
  else delta = spec.matrix;
  if (spec.kind == TwistKind::automorphism) return Twist::automorphism(d, delta);
  const auto qq = q ? q : (spec.q ? spec.q : cfg.q);
  if (!qq) throw InputError("a frobenius twist needs q (--q, twist.q or q in the config)");
  return Twist::frobenius(d, *qq, delta);
}

nlohmann::ordered_json run_command(const std::string& command, const Config& cfg, const RunOptions& opts) {
  if (command == "analyze") return cmd_analyze(cfg, opts);
  if (command == "kl") return cmd_kl(cfg, opts);
  if (command == "cells") return cmd_cells(cfg, opts);
  if (command == "cocycle") return cmd_cocycle(cfg, opts);
  if (command == "count") return cmd_count(cfg, opts);
  if (command == "bsl") return cmd_bsl(cfg, opts);
  throw InputError("unknown command '" + command + "'");
}

std::string render(const nlohmann::ordered_json& report) { return report.dump(2) + "\n"; }

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }), tok.end());
    if (tok.empty()) continue;
    if (tok[0] == 's' || tok[0] == 'S') tok = tok.substr(1);
    std::size_t used = 0;
    int i = 0;
    try {
      i = std::stoi(tok, &used);
    } catch (const std::logic_error&) {
      throw InputError("malformed word letter '" + tok + "'");
    }
    if (used != tok.size() || i < 1) throw InputError("word letters are simple indices s1, s2, ... (got '" + tok + "')");
    out.push_back(i - 1);
  }
  return out;
}

}  // namespace monoendo
