#include "cli/commands.hpp"

#include <cmath>
#include <cstdlib>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli/json_io.hpp"
#include "tleaf/bivector.hpp"
#include "tleaf/cartanops.hpp"
#include "tleaf/classes.hpp"
#include "tleaf/doublegroup.hpp"
#include "tleaf/errors.hpp"
#include "tleaf/suites.hpp"

namespace tleaf::cli {

using nlohmann::json;

namespace {

struct Options {
  int sl = 0;  // SL(N); 0 means the command's default
  std::string theta = "id";
  std::string class_spec = "regular-ss";
  std::string matrix_file;
  std::string suite;
  std::string weyl_type = "A";
  std::uint64_t seed = 20240601;
  int samples = -1;
  double rank_tol = Tolerances{}.rank_rel;
  double residual_tol = Tolerances{}.residual;
  bool tsv = false;

  Tolerances tolerances() const {
    Tolerances t;
    t.rank_rel = rank_tol;
    t.residual = residual_tol;
    return t;
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json tolerances_json(const Tolerances& t) {
  return {{"rank_rel", t.rank_rel},
          {"residual", t.residual},
          {"equivariance", t.equivariance},
          {"borderline_factor", t.borderline_factor},
          {"eigen_cluster", t.eigen_cluster},
          {"determinant", t.determinant}};
}

json envelope(const std::string& command, const Options& o, json params) {
  params["seed"] = o.seed;
  return {{"command", command}, {"parameters", params}, {"tolerances", tolerances_json(o.tolerances())}};
}

Automorphism make_theta(const std::string& name, const MatrixRealization& real) {
  if (name == "id") return Automorphism::identity(real);
  if (name == "outer") return Automorphism::outer(real);
  throw UsageError("--theta must be id or outer");
}

int parse_level(const std::string& spec, std::size_t prefix, int n) {
  int l = 0;
  try {
    l = std::stoi(spec.substr(prefix));
  } catch (const std::exception&) {
    throw UsageError("bad class spec '" + spec + "'");
  }
  if (l < 0 || 2 * l > n + 1) throw UsageError("class spec '" + spec + "': l out of range");
  return l;
}

CMatrix class_representative(const std::string& spec, int n) {
  const int size = n + 1;
  if (spec == "central") return CMatrix::Identity(size, size);
  if (spec == "regular-ss") {
    CMatrix g = CMatrix::Zero(size, size);
    for (int k = 0; k < size; ++k) g(k, k) = std::pow(2.0, size - 1 - 2 * k);
    return g;
  }
  if (spec.rfind("ss:", 0) == 0) {
    const int l = parse_level(spec, 3, n);
    if (l == 0) return CMatrix::Identity(size, size);
    return family_representative({SphericalFamily::Kind::Semisimple, n, l, 0}, 2.0);
  }
  if (spec.rfind("uni:", 0) == 0) {
    const int l = parse_level(spec, 4, n);
    return family_representative({SphericalFamily::Kind::Unipotent, n, l, 0}, 1.0);
  }
  return read_matrix_file(spec);
}

json weyl_json(const WeylElement& w) {
  json j{{"word", w.word_string()}, {"length", w.length}};
  if (!w.permutation.empty()) j["cycles"] = w.cycle_string();
  return j;
}

json class_json(const ClassDescriptor& c) {
  json eig = json::array();
  for (const auto& e : c.eigen_summary) eig.push_back({{"value", complex_json(e.value)}, {"multiplicity", e.multiplicity}});
  json j{{"dim_C", c.dim_C}, {"r_C", c.r_C}, {"l_C", c.l_C}, {"eigenvalues", eig}, {"borderline", c.borderline}};
  j["m_C"] = c.m_C ? weyl_json(*c.m_C) : json(nullptr);
  j["spherical"] = c.spherical ? json(*c.spherical) : json(nullptr);
  return j;
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_leaves(const Options& o, std::ostream& out) {
  const int n = (o.sl ? o.sl : 2) - 1;
  if (n < 1) throw UsageError("--sl must be at least 2");
  const auto real = build_sl_realization(n);
  const WeylGroup group(real.root_datum());
  const auto theta = make_theta(o.theta, real);
  const auto c = analyze_class(class_representative(o.class_spec, n), theta, real, group, o.tolerances());
  if (!c.m_C) throw UnsupportedError("unsupported: m_C tables out of scope for outer theta on SL(" +
                                     std::to_string(n + 1) + ")");
  const auto rows = leaf_table(c, theta.diagram(), group);
  if (o.tsv) {
    out << "w\tword\tlength\tintersection_dim\tleaf_dim\n";
    for (const auto& r : rows)
      out << r.w.cycle_string() << '\t' << r.w.word_string() << '\t' << r.w.length << '\t' << r.intersection_dim
          << '\t' << r.leaf_dim << '\n';
    return kPass;
  }
  json report = envelope("leaves", o, {{"sl", n + 1}, {"class", o.class_spec}, {"theta", o.theta}});
  json table = json::array();
  for (const auto& r : rows) {
    json row = weyl_json(r.w);
    row["intersection_dim"] = r.intersection_dim;
    row["leaf_dim"] = r.leaf_dim;
    table.push_back(row);
  }
  report["results"] = {{"class", class_json(c)},
                       {"min_rank", min_rank_in_class(c, theta.diagram())},
                       {"leaves", table}};
  report["summary"] = {{"passed", true}, {"rows", rows.size()}};
  print(out, report);
  return kPass;
}

int cmd_rank_at(const Options& o, std::ostream& out) {
  const CMatrix g = read_matrix_file(o.matrix_file);
  const int n = static_cast<int>(g.rows()) - 1;
  if (n < 1) throw UsageError("matrix must be at least 2x2");
  const auto tol = o.tolerances();
  const auto real = build_sl_realization(n);
  const WeylGroup group(real.root_datum());
  const auto theta = make_theta(o.theta, real);
  const auto pi = evaluate_bivector(g, theta, real, tol);
  const RankInfo tangent = numerical_rank(class_tangent_map(g, theta, real), tol);

  json report = envelope("rank-at", o, {{"matrix", o.matrix_file}, {"theta", o.theta}, {"sl", n + 1}});
  json results{{"rank", pi.rank.rank},
               {"singular_values", pi.rank.singular_values},
               {"threshold", pi.rank.threshold},
               {"borderline", pi.rank.borderline},
               {"dim_C", tangent.rank}};
  bool match = false;
  try {
    const auto& w = bruhat_cell_of(g, group, tol);
    const auto a = w_theta(w, theta.diagram());
    const int predicted = tangent.rank - w.length - dim_ker(CartanOperator::identity(a.size()) + a);
    match = predicted == pi.rank.rank;
    results["cell"] = weyl_json(w);
    results["predicted_rank"] = predicted;
  } catch (const NumericalQualityError& e) {
    results["cell"] = nullptr;
    results["cell_error"] = e.what();
  }
  results["match"] = match;
  report["results"] = results;
  report["summary"] = {{"passed", match}};
  print(out, report);
  return match ? kPass : kFailure;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), o.suite) == names.end())
    throw UsageError("unknown suite '" + o.suite + "'");
  SuiteConfig cfg;
  cfg.seed = o.seed;
  cfg.samples = o.samples;
  cfg.tol = o.tolerances();
  if (o.sl) {
    if (o.sl < 2) throw UsageError("--sl must be at least 2");
    cfg.ns = {o.sl - 1};
  }
  if (o.theta != "both") cfg.thetas = {o.theta};
  const auto r = run_suite(o.suite, cfg);
  json report = envelope("verify", o,
                         {{"suite", o.suite}, {"samples", o.samples}, {"sl", o.sl ? json(o.sl) : json(nullptr)},
                          {"theta", o.theta}});
  report["results"] = {{"checks", r.checks},
                       {"failures", r.failures},
                       {"excluded", r.excluded},
                       {"max_residual", r.max_residual},
                       {"metrics", r.metrics},
                       {"messages", r.messages}};
  report["summary"] = {{"passed", r.passed()}, {"passed_checks", r.checks - r.failures}, {"checks", r.checks}};
  if (o.tsv) {
    out << "suite\tchecks\tfailures\texcluded\tmax_residual\n"
        << r.name << '\t' << r.checks << '\t' << r.failures << '\t' << r.excluded << '\t' << r.max_residual << '\n';
  } else {
    print(out, report);
  }
  return r.passed() ? kPass : kFailure;
}

int cmd_weyl(const Options& o, std::ostream& out) {
  RootDatum datum = o.weyl_type == "D4" ? RootDatum::d4() : RootDatum::type_a((o.sl ? o.sl : 3) - 1);
  if (o.weyl_type != "A" && o.weyl_type != "D4") throw UsageError("--type must be A or D4");
  const WeylGroup group(datum);
  DiagramAut theta = DiagramAut::identity(datum.rank());
  if (o.theta == "outer" || o.theta == "flip") {
    if (datum.type() != RootType::A) throw UsageError("--theta flip applies to type A");
    theta = DiagramAut::type_a_flip(datum.rank());
  } else if (o.theta == "triality") {
    if (datum.type() != RootType::D4) throw UsageError("--theta triality applies to D4");
    theta = d4_triality();
  } else if (o.theta != "id") {
    throw UsageError("--theta must be id, flip/outer or triality");
  }
  const auto classes = group.twisted_classes(theta);
  std::vector<int> class_of(group.order());
  json cls = json::array();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    json entry{{"size", classes[c].size()}};
    try {
      entry["max_length"] = weyl_json(group.max_length_element(classes[c]));
    } catch (const AmbiguityError& e) {
      entry["max_length"] = nullptr;
      entry["ambiguity"] = e.what();
    }
    for (auto i : classes[c]) class_of[i] = static_cast<int>(c);
    cls.push_back(entry);
  }
  if (o.tsv) {
    out << "index\tword\tlength\tL\tL_prime\ttwisted_class\n";
    for (const auto& w : group.elements())
      out << w.index << '\t' << w.word_string() << '\t' << w.length << '\t' << L_theta(w, theta) << '\t'
          << L_theta_prime(w, theta) << '\t' << class_of[w.index] << '\n';
    return kPass;
  }
  json elems = json::array();
  for (const auto& w : group.elements()) {
    json e = weyl_json(w);
    e["index"] = w.index;
    e["L"] = L_theta(w, theta);
    e["L_prime"] = L_theta_prime(w, theta);
    e["twisted_class"] = class_of[w.index];
    elems.push_back(e);
  }
  json report = envelope("weyl", o, {{"type", datum.label()}, {"theta", o.theta}});
  report["results"] = {{"order", group.order()},
                       {"longest_length", group.longest().length},
                       {"rank_one_minus_theta_squared", rank_one_minus_theta_squared(theta)},
                       {"elements", elems},
                       {"twisted_classes", cls}};
  report["summary"] = {{"passed", true}};
  print(out, report);
  return kPass;
}

int cmd_double(const Options& o, std::ostream& out) {
  const int n = (o.sl ? o.sl : 2) - 1;
  if (n < 1) throw UsageError("--sl must be at least 2");
  const auto tol = o.tolerances();
  const auto single = build_sl_realization(n);
  const auto pair = build_product_realization(n, 2);
  const WeylGroup group(single.root_datum());
  Rng rng(o.seed);
  const int samples = o.samples > 0 ? o.samples : 5;

  json iso = json::array();
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double r = verify_double_iso(random_sl(n + 1, rng), random_sl(n + 1, rng), single, pair, group);
    worst = std::max(worst, r);
    iso.push_back(r);
  }
  bool passed = worst < tol.residual;

  const auto id = Automorphism::identity(single);
  const auto c = analyze_class(class_representative(o.class_spec, n), id, single, group, tol);
  json cells = json::array();
  if (o.tsv) out << "u\tv\tcell_dim\tleaf_dim\ttorus_dim\tsampled_rank\n";
  for (const auto& u : group.elements())
    for (const auto& v : group.elements()) {
      const auto cell = double_cell(u, v, c, group);
      json row{{"u", weyl_json(u)},
               {"v", weyl_json(v)},
               {"cell_dim", cell.cell_dim},
               {"leaf_dim", cell.leaf_dim},
               {"torus_dim", cell.torus_dim}};
      std::string sampled = "-";
      if (n == 1) {
        const auto [k1, k2] = sample_double_cell_sl2(cell, c, group, rng, tol);
        const int r = evaluate_Pist(k1, k2, single, pair, tol).rank.rank;
        row["sampled_rank"] = r;
        passed = passed && r == cell.leaf_dim;
        sampled = std::to_string(r);
      }
      if (o.tsv)
        out << u.cycle_string() << '\t' << v.cycle_string() << '\t' << cell.cell_dim << '\t' << cell.leaf_dim << '\t'
            << cell.torus_dim << '\t' << sampled << '\n';
      cells.push_back(row);
    }
  if (o.tsv) return passed ? kPass : kFailure;
  json report = envelope("double", o, {{"sl", n + 1}, {"class", o.class_spec}, {"samples", samples}});
  report["results"] = {{"iso_residuals", iso}, {"max_iso_residual", worst}, {"class", class_json(c)}, {"cells", cells}};
  report["summary"] = {{"passed", passed}};
  print(out, report);
  return passed ? kPass : kFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  if (const char* env = std::getenv("TLEAF_SEED"); env && *env) {
    try {
      o.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "TLEAF_SEED is not an unsigned integer\n";
      return kUsage;
    }
  }
  CLI::App app{"T-leaves, ranks and zero loci of twisted-conjugation Poisson structures on SL(n+1)"};
  app.require_subcommand(1);
  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "RNG seed (default: $TLEAF_SEED or 20240601)");
    sub->add_option("--rank-tol", o.rank_tol, "relative singular-value threshold")->check(CLI::PositiveNumber);
    sub->add_option("--residual-tol", o.residual_tol, "residual threshold")->check(CLI::PositiveNumber);
    sub->add_flag("--tsv", o.tsv, "tab-separated table instead of JSON");
  };

  auto* leaves = app.add_subcommand("leaves", "leaf table of a class");
  leaves->add_option("--sl", o.sl, "work in SL(N)")->check(CLI::Range(2, 6));
  leaves->add_option("--class", o.class_spec, "central | regular-ss | ss:l | uni:l | matrix file");
  leaves->add_option("--theta", o.theta, "id | outer");
  common(leaves);

  auto* rank_at = app.add_subcommand("rank-at", "rank of the bivector at a matrix");
  rank_at->add_option("matrix", o.matrix_file, "JSON matrix file")->required();
  rank_at->add_option("--theta", o.theta, "id | outer");
  common(rank_at);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", o.suite, "suite name")->required();
  verify->add_option("--sl", o.sl, "restrict to SL(N)")->check(CLI::Range(2, 5));
  verify->add_option("--theta", o.theta, "id | outer | both")->default_str("both");
  verify->add_option("--samples", o.samples, "samples per configuration")->check(CLI::PositiveNumber);
  common(verify);

  auto* weyl = app.add_subcommand("weyl", "Weyl group tables");
  weyl->add_option("--type", o.weyl_type, "A | D4");
  weyl->add_option("--sl", o.sl, "type A rank via SL(N)")->check(CLI::Range(2, 7));
  weyl->add_option("--theta", o.theta, "id | flip | triality");
  common(weyl);

  auto* dbl = app.add_subcommand("double", "double-group isomorphism residuals and double-cell table");
  dbl->add_option("--sl", o.sl, "work in SL(N)")->check(CLI::Range(2, 4));
  dbl->add_option("--class", o.class_spec, "central | regular-ss | ss:l | uni:l | matrix file");
  dbl->add_option("--samples", o.samples, "isomorphism test points")->check(CLI::PositiveNumber);
  common(dbl);

  bool theta_given = false;
  try {
    app.parse(argc, argv);
    theta_given = verify->count("--theta") > 0;
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*leaves) return cmd_leaves(o, out);
    if (*rank_at) return cmd_rank_at(o, out);
    if (*verify) {
      if (!theta_given) o.theta = "both";
      return cmd_verify(o, out);
    }
    if (*weyl) return cmd_weyl(o, out);
    if (*dbl) return cmd_double(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const NumericalQualityError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace tleaf::cli
