#include "higgs/cli.hpp"

#include <array>
#include <sstream>

#include "higgs/error.hpp"
#include "higgs/moduli.hpp"
#include "higgs/selftest.hpp"
#include "higgs/spectral.hpp"

namespace higgs::cli {

using higgs::to_string;

namespace {

constexpr std::array<std::pair<Command, std::string_view>, 14> kCommands{{
    {Command::Factor, "factor"},
    {Command::BaseCheck, "base-check"},
    {Command::Cover, "cover"},
    {Command::Tower, "tower"},
    {Command::Correspondence, "correspondence"},
    {Command::BxTable, "bx-table"},
    {Command::Chern, "chern"},
    {Command::Stability, "stability"},
    {Command::HitchinSection, "hitchin-section"},
    {Command::Sl2rEnum, "sl2r-enum"},
    {Command::MilnorWood, "milnor-wood"},
    {Command::Rigidity, "rigidity"},
    {Command::HigherRank, "higher-rank"},
    {Command::Selftest, "selftest"},
}};

// --- reading ------------------------------------------------------------------

// View of a JSON object that checks its key set up front.
class Fields {
 public:
  Fields(const Json& j, std::string path, std::initializer_list<std::string_view> required,
         std::initializer_list<std::string_view> optional = {})
      : j_(j), path_(std::move(path)) {
    if (!j.is_object()) fail(ErrorKind::ParseError, path_ + ": expected object, got " + j.type_name());
    for (const auto& [k, v] : j.items()) {
      bool known = false;
      for (auto r : required) known = known || k == r;
      for (auto o : optional) known = known || k == o;
      if (!known) fail(ErrorKind::SchemaError, at(k) + ": unknown key");
    }
    for (auto r : required)
      if (!j.contains(std::string(r))) fail(ErrorKind::SchemaError, at(r) + ": missing key");
  }

  bool has(std::string_view key) const { return j_.contains(std::string(key)) && !j_.at(std::string(key)).is_null(); }
  const Json& operator[](std::string_view key) const { return j_.at(std::string(key)); }
  std::string at(std::string_view key) const { return path_ + "." + std::string(key); }

  bool boolean(std::string_view key) const {
    const Json& v = (*this)[key];
    if (!v.is_boolean()) fail(ErrorKind::ParseError, at(key) + ": expected boolean");
    return v.get<bool>();
  }

  bool boolean_or(std::string_view key, bool fallback) const { return has(key) ? boolean(key) : fallback; }

  long integer(std::string_view key, long lo, long hi) const {
    const Json& v = (*this)[key];
    if (!v.is_number_integer()) fail(ErrorKind::ParseError, at(key) + ": expected integer");
    const auto x = v.get<long long>();
    if (x < lo || x > hi)
      fail(ErrorKind::SchemaError, at(key) + ": " + std::to_string(x) + " outside [" + std::to_string(lo) + ", " +
                                       std::to_string(hi) + "]");
    return static_cast<long>(x);
  }

 private:
  const Json& j_;
  std::string path_;
};

NSClass class_from_json(const Json& j, std::size_t rank, const std::string& path) {
  if (!j.is_array()) fail(ErrorKind::ParseError, path + ": expected array of coordinates");
  if (j.size() != rank)
    fail(ErrorKind::SchemaError, path + ": expected " + std::to_string(rank) + " coordinates, got " + std::to_string(j.size()));
  std::vector<Rational> v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  return NSClass(std::move(v));
}

IntMatrix int_matrix_from_json(const Json& j, std::size_t rows, std::optional<std::size_t> cols, const std::string& path) {
  if (!j.is_array()) fail(ErrorKind::ParseError, path + ": expected array of rows");
  if (rows != 0 && j.size() != rows)
    fail(ErrorKind::SchemaError, path + ": expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  IntMatrix m;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string rp = path + "[" + std::to_string(i) + "]";
    const Json& row = j[i];
    if (!row.is_array()) fail(ErrorKind::ParseError, rp + ": expected array");
    if (cols && row.size() != *cols)
      fail(ErrorKind::SchemaError, rp + ": expected " + std::to_string(*cols) + " entries, got " + std::to_string(row.size()));
    std::vector<Integer> r;
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (!row[k].is_number_integer()) fail(ErrorKind::ParseError, rp + "[" + std::to_string(k) + "]: expected integer");
      r.emplace_back(row[k].dump());
    }
    m.push_back(std::move(r));
  }
  return m;
}

Model model_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(ErrorKind::ParseError, path + ": expected object");
  if (!j.contains("kind")) fail(ErrorKind::SchemaError, path + ".kind: missing key");
  if (!j["kind"].is_string()) fail(ErrorKind::ParseError, path + ".kind: expected string");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "chart") {
    Fields f(j, path, {"kind", "nvars"});
    return ChartModel{static_cast<std::size_t>(f.integer("nvars", 1, static_cast<long>(kMaxVars)))};
  }
  if (kind == "product_curves") {
    Fields f(j, path, {"kind", "g1", "g2"});
    return ProductOfCurves{static_cast<unsigned>(f.integer("g1", 0, 1000)), static_cast<unsigned>(f.integer("g2", 0, 1000))};
  }
  if (kind == "surface") {
    Fields f(j, path, {"kind", "generators", "intersection", "K", "omega"}, {"b1", "torsion2"});
    const Json& gens = f["generators"];
    if (!gens.is_array() || gens.empty()) fail(ErrorKind::ParseError, f.at("generators") + ": expected non-empty array of names");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (!gens[i].is_string()) fail(ErrorKind::ParseError, f.at("generators") + "[" + std::to_string(i) + "]: expected string");
      names.push_back(gens[i].get<std::string>());
    }
    const std::size_t n = names.size();
    IntMatrix q;
    const Json& inter = f["intersection"];
    if (inter.is_array() && !inter.empty() && !inter[0].is_array()) {
      // Row-major flat list.
      if (inter.size() != n * n)
        fail(ErrorKind::SchemaError, f.at("intersection") + ": expected " + std::to_string(n * n) + " entries");
      Json rows = Json::array();
      for (std::size_t i = 0; i < n; ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < n; ++k) row.push_back(inter[i * n + k]);
        rows.push_back(row);
      }
      q = int_matrix_from_json(rows, n, n, f.at("intersection"));
    } else {
      q = int_matrix_from_json(inter, n, n, f.at("intersection"));
    }
    const unsigned b1 = f.has("b1") ? static_cast<unsigned>(f.integer("b1", 0, 62)) : 0;
    Integer torsion;
    if (f.has("torsion2")) {
      torsion = Integer(f.integer("torsion2", 1, 1L << 62));
    } else {
      mpz_ui_pow_ui(torsion.get_mpz_t(), 2, b1);
    }
    try {
      return SurfaceModel(std::move(names), std::move(q), class_from_json(f["K"], n, f.at("K")),
                          class_from_json(f["omega"], n, f.at("omega")), b1, torsion);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::InvalidModel) fail(ErrorKind::SchemaError, path + ": " + e.witness());
      throw;
    }
  }
  fail(ErrorKind::SchemaError, path + ".kind: unknown model kind \"" + kind + "\"");
}

std::size_t chart_nvars(const JobConfig& job) {
  if (const auto* c = std::get_if<ChartModel>(&job.model)) return c->nvars;
  fail(ErrorKind::SchemaError, "model: command '" + std::string(to_string(job.command)) + "' needs a chart model");
}

SurfaceModel surface_of(const JobConfig& job) {
  if (const auto* s = std::get_if<SurfaceModel>(&job.model)) return *s;
  if (const auto* p = std::get_if<ProductOfCurves>(&job.model)) return p->model();
  fail(ErrorKind::SchemaError, "model: command '" + std::string(to_string(job.command)) + "' needs a surface model");
}

RankOneFactorization factorization_from_json(const Json& j, std::size_t nv, const std::string& path) {
  Fields f(j, path, {"alpha", "tau"});
  OneForm alpha = oneform_from_json(f["alpha"], nv, f.at("alpha"));
  Poly tau = poly_from_json(f["tau"], nv, f.at("tau"));
  for (const auto& a : alpha.entries()) check_input_caps(a, f.at("alpha"));
  check_input_caps(tau, f.at("tau"));
  return RankOneFactorization(std::move(alpha), std::move(tau));
}

SymDiff symdiff_input(const Json& j, std::size_t nv, const std::string& path) {
  SymDiff s = symdiff_from_json(j, nv, path);
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t k = 0; k < s.dim(); ++k) check_input_caps(s(i, k), path);
  return s;
}

SpectralDatum datum_from_json(const Json& payload, std::size_t nv, const std::string& path) {
  const bool wrapped = payload.contains("datum");
  const Json& d = wrapped ? payload["datum"] : payload;
  const std::string dp = wrapped ? path + ".datum" : path;
  Fields f(d, dp, {"s1", "s2"});
  OneForm s1 = oneform_from_json(f["s1"], nv, f.at("s1"));
  for (const auto& e : s1.entries()) check_input_caps(e, f.at("s1"));
  return SpectralDatum(std::move(s1), symdiff_input(f["s2"], nv, f.at("s2")));
}

HiggsField higgs_from_json(const Json& j, std::size_t nv, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(ErrorKind::ParseError, path + ": expected non-empty array of matrices");
  std::vector<PolyMatrix> b;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string mp = path + "[" + std::to_string(i) + "]";
    PolyMatrix m = matrix_from_json(j[i], nv, mp);
    for (std::size_t r = 0; r < m.size(); ++r)
      for (std::size_t c = 0; c < m.size(); ++c) check_input_caps(m(r, c), mp);
    b.push_back(std::move(m));
  }
  try {
    return HiggsField(std::move(b));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DimensionMismatch) fail(ErrorKind::SchemaError, path + ": " + e.witness());
    throw;
  }
}

SquarefreeDecomposition components_from_json(const Json& j, std::size_t nv, const std::string& path) {
  if (!j.is_array()) fail(ErrorKind::ParseError, path + ": expected array of {factor, multiplicity}");
  SquarefreeDecomposition d{Rational(1), {}};
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string cp = path + "[" + std::to_string(i) + "]";
    Fields f(j[i], cp, {"factor", "multiplicity"});
    d.factors.push_back({poly_from_json(f["factor"], nv, f.at("factor")), static_cast<unsigned>(f.integer("multiplicity", 1, 64))});
  }
  return d;
}

// --- writing ------------------------------------------------------------------

Json class_json(const NSClass& c) {
  Json out = Json::array();
  for (const auto& x : c.coords()) out.push_back(to_json(x));
  return out;
}

Json factorization_json(const RankOneFactorization& f) {
  return Json{{"alpha", to_json(f.alpha)}, {"tau", to_json(f.tau)}};
}

Json higgs_json(const HiggsField& phi) {
  Json out = Json::array();
  for (const auto& b : phi.matrices()) out.push_back(to_json(b));
  return out;
}

Json datum_json(const SpectralDatum& d) { return Json{{"s1", to_json(d.s1)}, {"s2", to_json(d.s2)}}; }

Json branch_json(const SquarefreeDecomposition& b) {
  Json factors = Json::array();
  for (const auto& [g, m] : b.factors) factors.push_back(Json{{"factor", to_json(g)}, {"multiplicity", m}});
  return Json{{"content", to_json(b.content)}, {"factors", factors}};
}

std::string join_form(const OneForm& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.dim(); ++i) s += (i ? ", " : "") + f[i].to_string();
  return s + ")";
}

std::string tuple_text(const std::vector<unsigned>& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

Json cover_json(const SpectralCover& c) {
  Json out{{"tuple", c.tuple_a},
           {"effective_tau", to_json(c.effective_tau)},
           {"normal", is_normal(c)}};
  if (auto split = splits_over_q(c)) out["splits_over_Q"] = *split;
  return out;
}

// --- commands -----------------------------------------------------------------

struct Output {
  std::ostringstream human;
  Json machine = Json::object();
  bool ok = true;
};

void cmd_factor(const JobConfig& job, Output& out) {
  const std::size_t nv = chart_nvars(job);
  Fields f(job.payload, "payload", {"symdiff"});
  auto r = factor_rank_one(symdiff_input(f["symdiff"], nv, f.at("symdiff")));
  out.human << "alpha = " << join_form(r.alpha) << "\ntau = " << r.tau.to_string() << "\nidentity S = tau*alpha*alpha^T verified\n";
  out.machine = factorization_json(r);
}

void write_verdict(const BaseVerdict& v, Output& out) {
  if (std::holds_alternative<Nilpotent>(v)) {
    out.human << "verdict: nilpotent (4*s2 - s1^2 = 0)\n";
    out.machine["verdict"] = "nilpotent";
  } else if (const auto* m = std::get_if<Member>(&v)) {
    out.human << "verdict: member\nalpha = " << join_form(m->factorization.alpha)
              << "\ntau = " << m->factorization.tau.to_string() << "\n";
    out.machine["verdict"] = "member";
    out.machine["factorization"] = factorization_json(m->factorization);
  } else {
    const auto& w = std::get<NotMember>(v).witness;
    out.human << "verdict: not a member\nminor rows {" << w.r0 + 1 << "," << w.r1 + 1 << "} cols {" << w.c0 + 1 << ","
              << w.c1 + 1 << "} of 4*s2 - s1^2 = " << w.value.to_string() << "\n";
    out.machine["verdict"] = "not-member";
    out.machine["witness"] = Json{{"rows", {w.r0 + 1, w.r1 + 1}}, {"cols", {w.c0 + 1, w.c1 + 1}}, {"minor", to_json(w.value)}};
  }
}

void cmd_base_check(const JobConfig& job, Output& out) {
  const std::size_t nv = chart_nvars(job);
  if (job.payload.contains("datum")) Fields(job.payload, "payload", {"datum"});
  write_verdict(spectral_base_check(datum_from_json(job.payload, nv, "payload")), out);
}

// Factorization from {factorization}, {symdiff} or {multiplicities}, with
// optional declared components.
SpectralCover cover_from_payload(const JobConfig& job) {
  const std::size_t nv = chart_nvars(job);
  Fields f(job.payload, "payload", {}, {"factorization", "symdiff", "multiplicities", "components"});
  const int sources = f.has("factorization") + f.has("symdiff") + f.has("multiplicities");
  if (sources != 1) fail(ErrorKind::SchemaError, "payload: give exactly one of factorization, symdiff, multiplicities");
  std::optional<RankOneFactorization> r;
  std::optional<SquarefreeDecomposition> declared;
  if (f.has("factorization")) {
    r = factorization_from_json(f["factorization"], nv, f.at("factorization"));
  } else if (f.has("symdiff")) {
    r = factor_rank_one(symdiff_input(f["symdiff"], nv, f.at("symdiff")));
  } else {
    const Json& m = f["multiplicities"];
    if (!m.is_array() || m.empty() || m.size() > nv)
      fail(ErrorKind::SchemaError, f.at("multiplicities") + ": expected 1.." + std::to_string(nv) + " integers");
    // tau = x1^m1 * x2^m2 * ..., one coordinate hyperplane per entry.
    Poly tau = Poly::constant(nv, 1);
    declared = SquarefreeDecomposition{Rational(1), {}};
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i].is_number_unsigned() || m[i].get<unsigned long>() == 0 || m[i].get<unsigned long>() > 12)
        fail(ErrorKind::SchemaError, f.at("multiplicities") + "[" + std::to_string(i) + "]: expected integer in [1, 12]");
      const auto mi = m[i].get<unsigned>();
      tau *= Poly::variable(nv, i, mi);
      declared->factors.push_back({Poly::variable(nv, i), mi});
    }
    OneForm alpha(nv, nv);
    alpha[0] = Poly::constant(nv, 1);
    r = RankOneFactorization(std::move(alpha), std::move(tau));
  }
  if (f.has("components")) {
    if (f.has("multiplicities")) fail(ErrorKind::SchemaError, f.at("components") + ": not allowed with multiplicities");
    declared = components_from_json(f["components"], nv, f.at("components"));
    declared->content = 1;
    // Content is whatever is left over once the declared factors are removed.
    Poly rest = r->tau;
    for (const auto& [g, m] : declared->factors) {
      auto q = try_exact_div(rest, g.pow(m));
      if (!q) fail(ErrorKind::FactorizationInconsistent, "declared component " + g.to_string() + " does not divide tau");
      rest = std::move(*q);
    }
    if (!rest.is_constant())
      fail(ErrorKind::FactorizationInconsistent, "declared components leave the factor " + rest.to_string() + " of tau");
    declared->content = rest.constant_term();
  }
  return build_cover(*r, declared);
}

void cmd_cover(const JobConfig& job, Output& out) {
  SpectralCover c = cover_from_payload(job);
  out.human << "cover eta^2 + tau = 0 with tau = " << c.factorization.tau.to_string() << "\n";
  out.human << "branch content " << to_string(c.branch.content) << "\n";
  for (const auto& [g, m] : c.branch.factors) out.human << "  component " << g.to_string() << " multiplicity " << m << "\n";
  out.human << "normal: " << (is_normal(c) ? "yes" : "no") << "\n";
  if (auto split = splits_over_q(c)) out.human << "splits over Q: " << (*split ? "yes" : "no") << "\n";
  out.machine = Json{{"factorization", factorization_json(c.factorization)}, {"branch", branch_json(c.branch)}};
  out.machine["cover"] = cover_json(c);
}

void cmd_tower(const JobConfig& job, Output& out) {
  SpectralCover c = cover_from_payload(job);
  Tower t = tower_enumerate(c);
  out.human << t.covers.size() << " covers over tau = " << c.factorization.tau.to_string() << "\n";
  Json covers = Json::array();
  for (std::size_t i = 0; i < t.covers.size(); ++i) {
    const auto& ci = t.covers[i];
    out.human << "  a = " << tuple_text(ci.tuple_a) << "  tau_a = " << ci.effective_tau.to_string()
              << (is_normal(ci) ? "  normal" : "") << (i == t.normalization ? "  [normalization]" : "") << "\n";
    Json cj = cover_json(ci);
    cj["normalization"] = i == t.normalization;
    covers.push_back(cj);
  }
  Json edges = Json::array();
  for (const auto& e : t.edges) edges.push_back(Json::array({e.from, e.to}));
  out.machine = Json{{"branch", branch_json(c.branch)}, {"count", t.covers.size()}, {"covers", covers}, {"edges", edges}};
}

void cmd_correspondence(const JobConfig& job, Output& out) {
  const std::size_t nv = chart_nvars(job);
  Fields f(job.payload, "payload", {}, {"higgs", "factorization"});
  std::optional<RankOneFactorization> r;
  if (f.has("factorization")) r = factorization_from_json(f["factorization"], nv, f.at("factorization"));
  if (f.has("higgs")) {
    HiggsField phi = higgs_from_json(f["higgs"], nv, f.at("higgs"));
    if (!r) {
      auto v = spectral_base_check(hitchin_map(phi));
      const auto* m = std::get_if<Member>(&v);
      if (!m) fail(ErrorKind::PreconditionViolated, "the Higgs field's spectral datum has no rank-one factorization");
      r = m->factorization;
    }
    CoverModule mod = module_from_higgs(phi, *r);
    const bool back = pushforward(mod) == phi;
    out.human << "Phi = " << mod.eta_action().to_string() << "\nPhi^2 = -tau*Id verified\npushforward recovers phi: "
              << (back ? "yes" : "no") << "\n";
    out.machine = Json{{"factorization", factorization_json(*r)}, {"eta_action", to_json(mod.eta_action())}, {"roundtrip", back}};
    return;
  }
  if (!r) fail(ErrorKind::SchemaError, "payload: give higgs or factorization");
  CoverModule mod = canonical_module(build_cover(*r));
  HiggsField phi = pushforward(mod);
  const bool back = module_from_higgs(phi, *r) == mod;
  SpectralDatum d = hitchin_map(phi);
  out.human << "canonical Phi = " << mod.eta_action().to_string() << "\n";
  for (std::size_t i = 0; i < phi.dim(); ++i) out.human << "B" << i + 1 << " = " << phi[i].to_string() << "\n";
  out.human << "tr phi = 0: " << (d.s1.is_zero() ? "yes" : "no") << "\ndet phi = tau*alpha*alpha^T: "
            << (d.s2 == r->expand() ? "yes" : "no") << "\nroundtrip identity: " << (back ? "yes" : "no") << "\n";
  out.machine = Json{{"factorization", factorization_json(*r)},
                     {"eta_action", to_json(mod.eta_action())},
                     {"higgs", higgs_json(phi)},
                     {"spectral_datum", datum_json(d)},
                     {"roundtrip", back}};
}

void cmd_bx_table(const JobConfig& job, Output& out) {
  const auto* p = std::get_if<ProductOfCurves>(&job.model);
  if (!p) fail(ErrorKind::SchemaError, "model: bx-table needs a product_curves model");
  if (!job.payload.empty()) Fields(job.payload, "payload", {});
  auto b = bx_decomposition(*p);
  out.human << "C1 x C2 with (g1, g2) = (" << b.g1 << ", " << b.g2 << ")" << (b.swapped ? " after swapping factors" : "") << "\n";
  if (b.components.empty()) out.human << "B_X = 0\n";
  Json comps = Json::array(), dims = Json::array();
  for (const auto& c : b.components) {
    out.human << "  B_{X," << c.name << "}: " << to_string(c.kind) << "-type, dim " << c.dim << ", line class "
              << c.line_class.to_string() << "\n";
    comps.push_back(Json{{"name", c.name},
                         {"line_class", class_json(c.line_class)},
                         {"kind", to_string(c.kind)},
                         {"dim", c.dim},
                         {"h0_omega_twist", c.h0_omega_twist},
                         {"h0_L2", c.h0_Lsq}});
    dims.push_back(c.dim);
  }
  Json inter = Json::array();
  for (const auto& i : b.intersections) {
    out.human << "  " << b.components[i.first].name << " meets " << b.components[i.second].name << " in dim " << i.dim << "\n";
    inter.push_back(Json{{"components", {b.components[i.first].name, b.components[i.second].name}}, {"dim", i.dim}});
  }
  out.machine = Json{{"g1", b.g1}, {"g2", b.g2}, {"swapped", b.swapped}, {"dims", dims}, {"components", comps}, {"intersections", inter}};
}

void cmd_chern(const JobConfig& job, Output& out) {
  SurfaceModel base = surface_of(job);
  Fields f(job.payload, "payload", {"pushforward", "pullback", "cover_intersection", "L", "M"});
  const std::size_t n = base.rank();
  IntMatrix cq = int_matrix_from_json(f["cover_intersection"], 0, std::nullopt, f.at("cover_intersection"));
  const std::size_t m = cq.size();
  IntMatrix p = int_matrix_from_json(f["pushforward"], n, m, f.at("pushforward"));
  IntMatrix r = int_matrix_from_json(f["pullback"], m, n, f.at("pullback"));
  CoverMap map(base, p, r, cq, class_from_json(f["L"], n, f.at("L")));
  NSClass mc = class_from_json(f["M"], m, f.at("M"));
  NSClass c1 = pushforward_c1(mc, map);
  Rational c2 = pushforward_c2(mc, map, base);
  Rational delta = discriminant(c1, c2, base);
  out.human << "c1(pi_* M) = " << c1.to_string() << "\nc2(pi_* M) = " << to_string(c2) << "\ndiscriminant = " << to_string(delta) << "\n";
  out.machine = Json{{"c1", class_json(c1)}, {"c2", to_json(c2)}, {"discriminant", to_json(delta)}};
}

void cmd_stability(const JobConfig& job, Output& out) {
  if (!job.payload.contains("kind") || !job.payload["kind"].is_string())
    fail(ErrorKind::SchemaError, "payload.kind: expected \"hodge\" or \"real\"");
  const std::string kind = job.payload["kind"].get<std::string>();
  Stability v;
  if (kind == "hodge") {
    Fields f(job.payload, "payload", {"kind", "d1", "d2", "alpha_nonzero"});
    v = hodge_stability(rational_from_json(f["d1"], f.at("d1")), rational_from_json(f["d2"], f.at("d2")),
                        f.boolean("alpha_nonzero"));
  } else if (kind == "real") {
    SurfaceModel x = surface_of(job);
    Fields f(job.payload, "payload", {"kind", "L1", "L2", "alpha_nonzero", "beta_nonzero"},
             {"omega_nonzero", "proportional", "L1_iso_L2", "polarization"});
    SplitHiggsDescription d{class_from_json(f["L1"], x.rank(), f.at("L1")),
                            class_from_json(f["L2"], x.rank(), f.at("L2")),
                            f.boolean_or("omega_nonzero", false),
                            f.boolean("alpha_nonzero"),
                            f.boolean("beta_nonzero"),
                            f.boolean_or("proportional", false),
                            f.boolean_or("L1_iso_L2", false)};
    std::optional<NSClass> pol;
    if (f.has("polarization")) pol = class_from_json(f["polarization"], x.rank(), f.at("polarization"));
    v = real_stability(d, x, pol);
  } else {
    fail(ErrorKind::SchemaError, "payload.kind: unknown stability kind \"" + kind + "\"");
  }
  out.human << "verdict: " << to_string(v) << "\n";
  out.machine = Json{{"kind", kind}, {"verdict", to_string(v)}};
}

void write_section(const HitchinSectionOutput& s, Output& out) {
  out.machine["shape"] = s.shape == SectionShape::Generic ? "generic" : "diagonal";
  out.machine["stability"] = to_string(s.stability);
  out.machine["real"] = s.real;
  out.human << "shape: " << (s.shape == SectionShape::Generic ? "O + L^-1" : "O + O diagonal") << "\nstability: "
            << to_string(s.stability) << "\nreal: yes\n";
  if (s.field) {
    for (std::size_t i = 0; i < s.field->dim(); ++i) out.human << "B" << i + 1 << " = " << (*s.field)[i].to_string() << "\n";
    out.human << "section identity verified\n";
    out.machine["higgs"] = higgs_json(*s.field);
  }
  if (s.factorization) out.machine["factorization"] = factorization_json(*s.factorization);
  if (s.e_classes) {
    out.human << "E classes: " << s.e_classes->first.to_string() << ", " << s.e_classes->second.to_string() << "\n";
    out.machine["E_classes"] = Json::array({class_json(s.e_classes->first), class_json(s.e_classes->second)});
  }
  if (s.psl2r_condition) {
    out.human << "PSL2(R) condition: " << (*s.psl2r_condition ? "yes" : "no") << "\nSL2(R) condition: "
              << (*s.sl2r_condition ? "yes" : "no") << "\n";
    out.machine["psl2r_condition"] = *s.psl2r_condition;
    out.machine["sl2r_condition"] = *s.sl2r_condition;
  }
}

void cmd_hitchin_section(const JobConfig& job, Output& out) {
  if (std::holds_alternative<ChartModel>(job.model)) {
    const std::size_t nv = chart_nvars(job);
    if (job.payload.contains("datum")) Fields(job.payload, "payload", {"datum"});
    write_section(hitchin_section(datum_from_json(job.payload, nv, "payload")), out);
    return;
  }
  SurfaceModel x = surface_of(job);
  Fields f(job.payload, "payload", {"L"}, {"D", "s1_nonzero"});
  std::optional<NSClass> d;
  if (f.has("D")) d = class_from_json(f["D"], x.rank(), f.at("D"));
  write_section(hitchin_section(class_from_json(f["L"], x.rank(), f.at("L")), d, f.boolean_or("s1_nonzero", false), x), out);
}

void cmd_sl2r(const JobConfig& job, Output& out) {
  SurfaceModel x = surface_of(job);
  Fields f(job.payload, "payload", {"components", "L"});
  const Json& cj = f["components"];
  if (!cj.is_array()) fail(ErrorKind::ParseError, f.at("components") + ": expected array");
  std::vector<DivisorComponent> comps;
  for (std::size_t i = 0; i < cj.size(); ++i) {
    const std::string cp = f.at("components") + "[" + std::to_string(i) + "]";
    Fields c(cj[i], cp, {"class", "multiplicity"});
    comps.push_back({class_from_json(c["class"], x.rank(), c.at("class")), static_cast<unsigned>(c.integer("multiplicity", 1, 64))});
  }
  if (comps.size() > 16) fail(ErrorKind::CapExceeded, f.at("components") + ": at most 16 components");
  auto data = sl2r_enumerate(comps, class_from_json(f["L"], x.rank(), f.at("L")), x);
  out.human << data.size() << " SL2(R) spectral data, each with multiplicity " << x.torsion2_count().get_str() << "\n";
  Json list = Json::array();
  for (const auto& d : data) {
    out.human << "  a = " << tuple_text(d.tuple_a) << "  D1 = " << d.d1.to_string() << "  D2 = " << d.d2.to_string()
              << "  N = " << d.n_class.to_string() << "\n";
    list.push_back(Json{{"tuple", d.tuple_a},
                        {"D1", class_json(d.d1)},
                        {"D2", class_json(d.d2)},
                        {"N", class_json(d.n_class)},
                        {"torsion_multiplicity", d.torsion_multiplicity.get_str()}});
  }
  out.machine = Json{{"count", data.size()}, {"data", list}};
}

void cmd_milnor_wood(const JobConfig& job, Output& out) {
  SurfaceModel x = surface_of(job);
  Fields f(job.payload, "payload", {"W", "gamma"}, {"K_pseff"});
  auto r = milnor_wood_check(class_from_json(f["W"], x.rank(), f.at("W")), class_from_json(f["gamma"], x.rank(), f.at("gamma")),
                             x, f.boolean_or("K_pseff", true));
  out.human << "toledo = " << to_string(r.toledo) << "\nbound = " << to_string(r.bound) << "\nholds: " << (r.holds ? "yes" : "no") << "\n";
  out.machine = Json{{"toledo", to_json(r.toledo)}, {"bound", to_json(r.bound)}, {"holds", r.holds}};
}

void cmd_rigidity(const JobConfig& job, Output& out) {
  Fields f(job.payload, "payload", {"picard_number_one", "b1"}, {"double_cover_b1s", "two_torsion_count"});
  TopologicalData t;
  t.picard_number_one = f.boolean("picard_number_one");
  t.b1 = static_cast<unsigned>(f.integer("b1", 0, 1000));
  if (f.has("double_cover_b1s")) {
    const Json& l = f["double_cover_b1s"];
    if (!l.is_array()) fail(ErrorKind::ParseError, f.at("double_cover_b1s") + ": expected array");
    std::vector<unsigned> v;
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (!l[i].is_number_unsigned())
        fail(ErrorKind::ParseError, f.at("double_cover_b1s") + "[" + std::to_string(i) + "]: expected non-negative integer");
      v.push_back(l[i].get<unsigned>());
    }
    t.double_cover_b1s = std::move(v);
  }
  if (f.has("two_torsion_count")) t.two_torsion_count = Integer(f.integer("two_torsion_count", 1, 1L << 40));
  auto v = rigidity_verdict(t);
  out.human << "verdict: " << to_string(v.verdict) << " (" << v.reason << ")\n";
  out.machine = Json{{"verdict", to_string(v.verdict)}, {"reason", v.reason}};
}

void cmd_higher_rank(const JobConfig& job, Output& out) {
  const std::size_t nv = chart_nvars(job);
  Fields f(job.payload, "payload", {"n", "c"});
  const Json& n_json = f["n"];
  if (!n_json.is_number_integer()) fail(ErrorKind::ParseError, f.at("n") + ": expected integer");
  const long long n = n_json.get<long long>();
  if (n < 2 || n > static_cast<long long>(kMaxMatrixSize))
    fail(ErrorKind::RankCap, "rank " + std::to_string(n) + " outside [2, " + std::to_string(kMaxMatrixSize) + "]");
  const Json& cj = f["c"];
  if (!cj.is_array()) fail(ErrorKind::ParseError, f.at("c") + ": expected array of polynomials");
  std::vector<Poly> c;
  for (std::size_t i = 0; i < cj.size(); ++i) c.push_back(poly_from_json(cj[i], nv, f.at("c") + "[" + std::to_string(i) + "]"));
  if (c.size() != static_cast<std::size_t>(n - 1))
    fail(ErrorKind::SchemaError, f.at("c") + ": rank " + std::to_string(n) + " needs " + std::to_string(n - 1) + " coefficients");
  PolyMatrix phi = higher_rank_build(static_cast<std::size_t>(n), c);
  auto cp = charpoly_cofactor(phi);
  const bool ok = higher_rank_charcheck(phi, c);
  out.human << "phi = " << phi.to_string() << "\ndet(lambda*I - phi) =";
  bool first = true;
  for (std::size_t k = cp.size(); k-- > 0;) {
    if (cp[k].is_zero()) continue;
    out.human << (first ? " " : " + ") << "(" << cp[k].to_string() << ")*lambda^" << k;
    first = false;
  }
  out.human << "\ncharacteristic coefficients reproduce c: " << (ok ? "yes" : "no") << "\n";
  Json coeffs = Json::array();
  for (const auto& p : cp) coeffs.push_back(to_json(p));
  out.machine = Json{{"phi", to_json(phi)}, {"charpoly", coeffs}, {"check", ok}};
  out.ok = ok;
}

void cmd_selftest(const JobConfig& job, Output& out) {
  if (!job.payload.empty()) Fields(job.payload, "payload", {});
  const std::uint64_t seed = job.seed.value_or(42);
  auto results = run_selftest(seed);
  std::size_t cases = 0, failures = 0, passed_suites = 0;
  Json suites = Json::array();
  for (const auto& r : results) {
    cases += r.cases;
    failures += r.failures;
    passed_suites += r.passed();
    out.human << (r.passed() ? "PASS " : "FAIL ") << r.name << "  " << r.cases - std::min(r.cases, r.failures) << "/"
              << r.cases << (r.first_failure.empty() ? "" : "  " + r.first_failure) << "\n";
    Json sj{{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"passed", r.passed()}};
    if (!r.first_failure.empty()) sj["first_failure"] = r.first_failure;
    suites.push_back(sj);
  }
  const bool all = passed_suites == results.size();
  out.human << "summary: " << passed_suites << "/" << results.size() << " suites passed, " << cases << " cases, "
            << failures << " failures" << (all ? " (all pass)" : "") << "\n";
  out.machine = Json{{"seed", seed}, {"suites", suites}, {"cases", cases}, {"failures", failures}, {"all_pass", all}};
  out.ok = all;
}

}  // namespace

std::string_view to_string(Command c) {
  for (const auto& [cmd, name] : kCommands)
    if (cmd == c) return name;
  return "?";
}

std::optional<Command> command_from_string(std::string_view name) {
  for (const auto& [cmd, n] : kCommands)
    if (n == name) return cmd;
  return std::nullopt;
}

JobConfig parse_config(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::ParseError, std::string("config: ") + e.what());
  }
  Fields f(j, "config", {"command"}, {"model", "payload", "seed"});
  if (!f["command"].is_string()) fail(ErrorKind::ParseError, "config.command: expected string");
  JobConfig job;
  const std::string name = f["command"].get<std::string>();
  auto cmd = command_from_string(name);
  if (!cmd) fail(ErrorKind::SchemaError, "config.command: unknown command \"" + name + "\"");
  job.command = *cmd;
  if (f.has("model")) job.model = model_from_json(f["model"], "config.model");
  if (f.has("payload")) {
    if (!f["payload"].is_object()) fail(ErrorKind::ParseError, "config.payload: expected object");
    job.payload = f["payload"];
  }
  if (f.has("seed")) {
    if (!f["seed"].is_number_unsigned()) fail(ErrorKind::ParseError, "config.seed: expected non-negative integer");
    job.seed = f["seed"].get<std::uint64_t>();
  }
  return job;
}

Report run(const JobConfig& job) {
  Output out;
  switch (job.command) {
    case Command::Factor: cmd_factor(job, out); break;
    case Command::BaseCheck: cmd_base_check(job, out); break;
    case Command::Cover: cmd_cover(job, out); break;
    case Command::Tower: cmd_tower(job, out); break;
    case Command::Correspondence: cmd_correspondence(job, out); break;
    case Command::BxTable: cmd_bx_table(job, out); break;
    case Command::Chern: cmd_chern(job, out); break;
    case Command::Stability: cmd_stability(job, out); break;
    case Command::HitchinSection: cmd_hitchin_section(job, out); break;
    case Command::Sl2rEnum: cmd_sl2r(job, out); break;
    case Command::MilnorWood: cmd_milnor_wood(job, out); break;
    case Command::Rigidity: cmd_rigidity(job, out); break;
    case Command::HigherRank: cmd_higher_rank(job, out); break;
    case Command::Selftest: cmd_selftest(job, out); break;
  }
  Report r;
  r.human = "command: " + std::string(to_string(job.command)) + "\n" + out.human.str();
  r.machine = Json{{"command", to_string(job.command)}, {"result", std::move(out.machine)}};
  r.ok = out.ok;
  return r;
}

int exit_code(const Error& e) { return e.is_input_error() ? 2 : 1; }

}  // namespace higgs::cli
