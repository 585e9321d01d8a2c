// ogw: disk amplitudes, virtual structure constants and verification suites
// for Fermat-type hypersurfaces and complete intersections.

#include "ogw/table.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace ogw;
using nlohmann::json;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum ExitCode { kOk = 0, kVerifyFailed = 1, kConfigError = 2 };

struct JobConfig {
  int N = 0;
  std::vector<int> degrees;
  int dmax = 1;
  bool covering = false;
  std::optional<int> D;
  bool no_sign = false;
  bool literal_sign = false;
  std::string format = "json";
  std::string out;
  std::string golden = OGW_GOLDEN_DIR;

  GeometryData geometry() const {
    if (N == 0 || degrees.empty()) throw ConfigError("--N and --k are required");
    try {
      return make_geometry(N, degrees);
    } catch (const InvalidGeometry& e) {
      throw ConfigError(e.what());
    }
  }
  CoveringParams covering_params(const GeometryData& g) const {
    if (no_sign && literal_sign) throw ConfigError("--no-sign and --literal-sign are exclusive");
    const CoveringSign sign = no_sign ? CoveringSign::None : literal_sign ? CoveringSign::Literal : CoveringSign::Tables;
    if (D) {
      if (*D < 0) throw ConfigError("--D must be non-negative");
      return {*D, sign};
    }
    try {
      return covering_for(g, sign);
    } catch (const InvalidGeometry& e) {
      throw ConfigError(std::string(e.what()) + "; pass --D to override");
    }
  }
};

void emit(const JobConfig& cfg, const json& j, const std::string& csv) {
  const std::string text = cfg.format == "csv" ? csv : j.dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw ConfigError("cannot write " + cfg.out);
  f << text;
}

// ---------------------------------------------------------------------------
// Verification report.

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass;
};

struct Report {
  std::string suite;
  std::optional<GeometryData> geometry;
  std::vector<Check> checks;

  void expect_equal(std::string name, const Rat& expected, const Rat& actual) {
    checks.push_back({std::move(name), to_string(expected), to_string(actual), expected == actual});
  }
  void expect(std::string name, bool ok, std::string detail = "") {
    checks.push_back({std::move(name), "true", detail.empty() ? (ok ? "true" : "false") : detail, ok});
  }
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
  json to_json(const JobConfig& cfg) const {
    json rows = json::array();
    for (const auto& c : checks) rows.push_back({{"check", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    json j = {{"geometry", geometry ? geometry_json(*geometry) : json(nullptr)},
              {"params", {{"pipeline", "verify"}, {"suite", suite}, {"dmax", cfg.dmax}}},
              {"rows", rows},
              {"passed", passed()},
              {"engine_version", kEngineVersion}};
    for (const auto& c : checks)
      if (!c.pass) {
        j["first_failure"] = c.name;
        break;
      }
    return j;
  }
  std::string to_csv() const {
    std::ostringstream os;
    os << "check,expected,actual,pass\n";
    for (const auto& c : checks) os << '"' << c.name << "\"," << c.expected << "," << c.actual << "," << (c.pass ? "true" : "false") << "\n";
    return os.str();
  }
};

std::string degree_label(const std::string& what, int d) {
  return (what.empty() ? "" : what + " ") + "degree " + std::to_string(d);
}

void verify_golden(Report& rep, const GoldenTable& t) {
  const GeometryData& g = t.geometry;
  const std::string tag = t.name + ": ";
  if (t.kind == "calabi_yau") {
    const auto degs = t.degrees();
    const int dmax = (*std::max_element(degs.begin(), degs.end()) + 1) / 2;
    const auto table = bmodel_table(g, dmax, covering_for(g));
    for (int deg : degs)
      rep.expect_equal(tag + degree_label("invariant", deg), *t.value(deg, "invariant"),
                       *table.rows[static_cast<std::size_t>(deg / 2)].invariant);
    return;
  }
  for (int deg : t.degrees()) {
    const int a = t.kind == "general_type" ? t.raw.at("rows")[static_cast<std::size_t>(deg / 2)].at("insertion").get<int>()
                                           : open_dimension(g, deg).value();
    rep.expect_equal(tag + degree_label("localization", deg), *t.value(deg, "localization"), open_gw(g, a, deg));
    rep.expect_equal(tag + degree_label("w_disk", deg), *t.value(deg, "w_disk"), open_vsc(g, a, deg));
  }
  if (t.raw.contains("multi_point"))
    for (const auto& mp : t.raw.at("multi_point")) {
      const auto ins = mp.at("insertions").get<InsertionList>();
      const int deg = mp.at("degree").get<int>();
      rep.expect_equal(tag + "multi-point " + json(ins).dump() + " " + degree_label("", deg), parse_rat(mp.at("value").get<std::string>()),
                       open_gw_local(g, ins, deg));
    }
  if (t.raw.contains("closed"))
    for (const auto& c : t.raw.at("closed")) {
      const int a = c.at("a").get<int>(), b = c.at("b").get<int>(), d = c.at("degree").get<int>();
      rep.expect_equal(tag + "closed w(" + std::to_string(a) + "," + std::to_string(b) + ")/k " + degree_label("", d),
                       parse_rat(c.at("value_over_k").get<std::string>()), closed_w(g, a, b, d) / Rat(g.k()));
    }
}

Report verify_tables(const JobConfig& cfg) {
  Report rep{"tables", std::nullopt, {}};
  std::vector<GoldenTable> tables;
  try {
    tables = load_golden_dir(cfg.golden);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("golden fixtures: ") + e.what());
  }
  if (tables.empty()) throw ConfigError("no golden fixtures found in " + cfg.golden);
  for (const auto& t : tables) {
    if (cfg.N && t.geometry != cfg.geometry()) continue;
    verify_golden(rep, t);
  }
  if (cfg.N) rep.geometry = cfg.geometry();
  return rep;
}

Report verify_gmt(const JobConfig& cfg) {
  const GeometryData g = cfg.geometry();
  if (!g.is_hypersurface()) throw ConfigError("the mirror transformation is implemented for hypersurfaces");
  Report rep{"gmt", g, {}};
  for (int d_odd = 1; d_odd <= std::min(2 * cfg.dmax - 1, 5); d_odd += 2) {
    const auto a = open_dimension(g, d_odd);
    if (!a) continue;
    const Rat local = open_gw_local(g, {*a}, d_odd);
    const Rat corr = gmt_correction(g, *a, d_odd);
    rep.expect_equal("w_disk(O_h^" + std::to_string(*a) + ") = <O> + corrections at " + degree_label("", d_odd) + " [<O> = " + to_string(local) +
                         ", corrections = " + to_string(corr) + "]",
                     open_vsc(g, *a, d_odd), local + corr);
  }
  return rep;
}

Report verify_pf(const JobConfig& cfg) {
  const GeometryData g = cfg.geometry();
  Report rep{"pf", g, {}};
  const PFOperator op{g};
  for (int j = 0; j < op.order(); ++j) {
    const LogSeries img = pf_apply(op, pf_solutions(g, j, cfg.dmax));
    bool zero = true;
    for (std::size_t i = 0; i < img.size(); ++i) zero = zero && img.part(static_cast<int>(i)).is_zero();
    rep.expect("PF annihilates w_" + std::to_string(j), zero);
  }
  if (g.is_cy()) {
    try {
      const Rat C = tension_constant(g, cfg.dmax);
      rep.expect("PF maps tau to C q^{1/2}", true, "C = " + to_string(C));
      if (g.is_hypersurface()) {
        const int k = g.k();
        rep.expect_equal("C = k!!/2^{k-2}", Rat(double_factorial(k)) / ogw::pow(Rat(2), k - 2), C);
      }
    } catch (const InhomogeneityError& e) {
      rep.expect("PF maps tau to C q^{1/2}", false, e.what());
    }
    const LogSeries open = open_pf_apply(op, LogSeries(tau_series(g, cfg.dmax)));
    rep.expect("(d/dx - 1/2) PF annihilates tau", open.pure().is_zero());
  }
  return rep;
}

Report verify_theorem1(const JobConfig& cfg) {
  const GeometryData g = cfg.geometry();
  if (!g.is_cy()) throw ConfigError("theorem1 compares the B-model chain, which needs a Calabi-Yau target");
  if (g.dimension() % 2 == 0) throw ConfigError("theorem1 needs odd dimension");
  Report rep{"theorem1", g, {}};
  const GradedSeries f = f_open(g, cfg.dmax);
  const int a = (g.dimension() - 1) / 2;
  for (int d = 1; d <= cfg.dmax; ++d)
    rep.expect_equal("F_o coefficient vs w_disk(O_h^" + std::to_string(a) + ") at " + degree_label("", 2 * d - 1), open_vsc(g, a, 2 * d - 1),
                     f[2 * d - 1]);
  return rep;
}

Report verify_covering(const JobConfig& cfg) {
  const GeometryData g = cfg.geometry();
  if (!g.is_cy()) throw ConfigError("covering verification needs a Calabi-Yau target");
  const CoveringParams p = cfg.covering_params(g);
  Report rep{"covering", g, {}};
  const GradedSeries amp = disk_amplitudes(g, cfg.dmax);
  const auto n = covering_invert(amp, p);
  rep.expect("forward(invert(amplitude)) = amplitude", covering_forward(n, p, cfg.dmax) == amp);
  const auto integ = integrality(n);
  std::string where;
  for (int d : integ.non_integral_degrees) where += (where.empty() ? "" : ",") + std::to_string(d);
  const std::string detail = integ.all_integral ? "all integral" : "non-integral at degrees " + where;
  if (p.sign == CoveringSign::None)
    rep.expect("integrality without sign (informational)", true, detail);
  else
    rep.expect("invariants are integers", integ.all_integral, detail);
  return rep;
}

// ---------------------------------------------------------------------------
// Table commands.

void run_disk(const JobConfig& cfg) {
  const GeometryData g = cfg.geometry();
  InvariantTable t;
  if (g.is_cy()) {
    std::optional<CoveringParams> p;
    if (cfg.covering) p = cfg.covering_params(g);
    t = bmodel_table(g, cfg.dmax, p);
  } else {
    if (cfg.covering) throw ConfigError("--covering applies to Calabi-Yau targets only");
    if (!g.is_hypersurface()) throw ConfigError("non-Calabi-Yau disk amplitudes are implemented for hypersurfaces");
    t = amodel_table(g, cfg.dmax);
  }
  emit(cfg, to_json(t), to_csv(t));
}

void run_vsc(const JobConfig& cfg) {
  const GeometryData g = cfg.geometry();
  json rows = json::array();
  std::ostringstream csv;
  if (g.is_cy()) {
    csv << "n,degree,value\n";
    const VSCTable t = vsc_recursion(g, cfg.dmax);
    for (const auto& [key, v] : t.entries) {
      rows.push_back({{"n", key.first}, {"degree", key.second}, {"value", to_string(v)}});
      csv << key.first << "," << key.second << "," << to_string(v) << "\n";
    }
  } else {
    // w(O_{h^a} O_{h^0})_{0,d} at the dimensionally allowed a.
    csv << "a,b,degree,value\n";
    for (int d = 1; d <= cfg.dmax; ++d) {
      const int a = g.dimension() - 1 + (g.N - g.degree_sum()) * d;
      if (a < 0) continue;
      const Rat v = closed_w(g, a, 0, d);
      rows.push_back({{"a", a}, {"b", 0}, {"degree", d}, {"value", to_string(v)}});
      csv << a << ",0," << d << "," << to_string(v) << "\n";
    }
  }
  json j = {{"geometry", geometry_json(g)},
            {"params", {{"pipeline", g.is_cy() ? "recursion" : "residue"}, {"dmax", cfg.dmax}}},
            {"rows", rows},
            {"engine_version", kEngineVersion}};
  emit(cfg, j, csv.str());
}

void run_open_vsc(const JobConfig& cfg) {
  const GeometryData g = cfg.geometry();
  json rows = json::array();
  std::ostringstream csv;
  csv << "degree,insertion,w_disk\n";
  for (int d = 1; d <= cfg.dmax; ++d) {
    const auto a = open_dimension(g, 2 * d - 1);
    if (!a) continue;
    const Rat v = open_vsc(g, *a, 2 * d - 1);
    rows.push_back({{"degree", 2 * d - 1}, {"insertion", *a}, {"w_disk", to_string(v)}});
    csv << 2 * d - 1 << "," << *a << "," << to_string(v) << "\n";
  }
  json j = {{"geometry", geometry_json(g)}, {"params", {{"pipeline", "residue"}, {"dmax", cfg.dmax}}}, {"rows", rows}, {"engine_version", kEngineVersion}};
  emit(cfg, j, csv.str());
}

void add_common(CLI::App* sub, JobConfig& cfg, bool covering_flags) {
  sub->add_option("--N", cfg.N, "ambient projective space is CP^{N-1}");
  sub->add_option("--k", cfg.degrees, "comma-separated odd degrees")->delimiter(',');
  sub->add_option("--dmax", cfg.dmax, "number of degrees (disk degrees 1, 3, ..., 2 dmax - 1)")->check(CLI::Range(1, 64));
  sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", cfg.out, "output path (default stdout)");
  if (covering_flags) {
    sub->add_option("--D", cfg.D, "covering parameter, target dimension 2D+3");
    sub->add_flag("--no-sign", cfg.no_sign, "drop the sign in the covering formula");
    sub->add_flag("--literal-sign", cfg.literal_sign, "use (-1)^{lD} instead of the sign matching the tables");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Open Gromov-Witten disk invariants of Fermat-type hypersurfaces and complete intersections"};
  app.require_subcommand(1);
  JobConfig cfg;

  auto* disk = app.add_subcommand("disk", "disk amplitudes and invariants");
  add_common(disk, cfg, true);
  disk->add_flag("--covering", cfg.covering, "resum multiple covers into invariants");
  auto* vsc = app.add_subcommand("vsc", "closed virtual structure constants");
  add_common(vsc, cfg, false);
  auto* ovsc = app.add_subcommand("open-vsc", "open virtual structure constants");
  add_common(ovsc, cfg, false);

  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->require_subcommand(1);
  std::map<std::string, Report (*)(const JobConfig&)> suites = {
      {"tables", verify_tables}, {"gmt", verify_gmt}, {"pf", verify_pf}, {"theorem1", verify_theorem1}, {"covering", verify_covering}};
  std::map<CLI::App*, Report (*)(const JobConfig&)> suite_of;
  for (const auto& [name, fn] : suites) {
    auto* s = verify->add_subcommand(name, "verify " + name);
    add_common(s, cfg, name == "covering");
    if (name == "tables") s->add_option("--golden", cfg.golden, "directory of golden fixtures");
    suite_of[s] = fn;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfigError;
  }

  try {
    if (disk->parsed()) run_disk(cfg);
    if (vsc->parsed()) run_vsc(cfg);
    if (ovsc->parsed()) run_open_vsc(cfg);
    for (const auto& [sub, fn] : suite_of)
      if (sub->parsed()) {
        const Report rep = fn(cfg);
        emit(cfg, rep.to_json(cfg), rep.to_csv());
        return rep.passed() ? kOk : kVerifyFailed;
      }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const InvalidGeometry& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "compute error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kOk;
}
