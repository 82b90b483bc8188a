#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "chaindepth/chains.hpp"
#include "chaindepth/error.hpp"
#include "chaindepth/families.hpp"
#include "chaindepth/formulas.hpp"
#include "chaindepth/json.hpp"
#include "chaindepth/lattice.hpp"
#include "chaindepth/repro.hpp"

extern char** environ;

namespace chaindepth::cli {

namespace {

const std::map<std::string, Format> kFormats = {{"text", Format::Text}, {"json", Format::Json}, {"dot", Format::Dot}};

template <class T>
T parse_positive(const std::string& name, const std::string& value) {
  std::size_t used = 0;
  const unsigned long long v = std::stoull(value, &used);
  if (used != value.size() || v == 0 || value.front() == '-')
    throw std::invalid_argument(name + " must be a positive integer, got '" + value + "'");
  return static_cast<T>(v);
}

struct Context {
  CliConfig config;
  std::ostream& out;

  LatticeLimits lattice_limits() const { return {config.max_group_order, config.max_subgroups}; }
  GroupLimits group_limits() const { return {config.max_group_order}; }
  FactorBudget budget() const { return {config.factor_budget}; }

  void emit(const Json& j, const std::string& text) const {
    if (config.format == Format::Json) out << j.dump(2) << "\n";
    else out << text;
  }
};

std::string chain_text(const ChainDescriptor& c) {
  std::ostringstream s;
  s << c.render() << "\n";
  for (std::size_t i = 0; i < c.steps.size(); ++i)
    s << "  " << c.steps[i].label << "  order " << c.steps[i].order.value().get_str() << "  index "
      << c.index(i).value().get_str() << "  " << to_string(c.steps[i].justification) << "\n";
  for (const auto& note : c.caveats) s << "  caveat: " << note << "\n";
  return s.str();
}

SubgroupLattice build_lattice(const Context& ctx, const std::string& spec) {
  const FamilyDescriptor d = FamilyDescriptor::parse(spec);
  return enumerate_subgroups(realize(d, ctx.group_limits()), ctx.lattice_limits());
}

void cmd_depth_exact(const Context& ctx, const std::string& spec) {
  const SubgroupLattice lat = build_lattice(ctx, spec);
  Json doc = lattice_document(lat);
  doc.erase("nodes");
  doc.erase("cover_edges");
  doc["subgroups"] = lat.size();
  std::ostringstream s;
  s << FamilyDescriptor::parse(spec).display_name() << " (order " << lat.node(lat.top()).order << ", " << lat.size()
    << " subgroups)\n";
  s << "lambda=" << doc["depth"] << " l=" << doc["length"];
  if (doc.contains("cd")) s << " cd=" << doc["cd"] << " cr=" << doc["cr"]["text"].get<std::string>();
  s << "\n";
  s << "shortest unrefinable chain: " << doc["depth_chain"]["orders"].get<std::string>() << "\n";
  s << "longest chain: " << doc["length_chain"]["orders"].get<std::string>() << "\n";
  ctx.emit(doc, s.str());
}

void cmd_depth_formula(const Context& ctx, const std::string& spec) {
  const DepthResult r = depth_formula(FamilyDescriptor::parse(spec), ctx.budget());
  std::string text = r.to_string() + "\n";
  text += "  method: " + to_string(r.method) + "\n  source: " + r.citation + "\n";
  if (!r.note.empty()) text += "  note: " + r.note + "\n";
  ctx.emit(r, text);
}

void cmd_classify(const Context& ctx, const std::string& spec) {
  const FamilyDescriptor d = FamilyDescriptor::parse(spec);
  const Depth3Verdict v = is_depth3(d);
  Json j = v;
  j["family"] = d;
  std::string text = d.display_name() + ": " + to_string(v.verdict) + "\n  " + v.reason + "\n";
  if (v.probabilistic) text += "  (probabilistic primality test)\n";
  ctx.emit(j, text);
}

void cmd_lattice(const Context& ctx, const std::string& spec, bool dump, const std::string& path) {
  const SubgroupLattice lat = build_lattice(ctx, spec);
  std::string body;
  if (ctx.config.format == Format::Dot) {
    body = lattice_dot(lat);
  } else if (dump || ctx.config.format == Format::Json) {
    Json doc = lattice_document(lat);
    if (!dump) {
      doc.erase("nodes");
      doc.erase("cover_edges");
      doc["subgroups"] = lat.size();
    }
    if (ctx.config.format == Format::Json) {
      body = doc.dump(2) + "\n";
    } else {
      std::ostringstream s;
      for (const auto& n : doc["nodes"]) {
        s << n["id"] << "\torder " << n["order"] << "\t<";
        bool first = true;
        for (const auto& g : n["generators"]) s << (first ? "" : ", ") << g.get<std::string>(), first = false;
        s << ">\n";
      }
      for (const auto& e : doc["cover_edges"]) s << e[0] << " > " << e[1] << "\n";
      s << "depth " << doc["depth"] << ", length " << doc["length"] << "\n";
      body = s.str();
    }
  } else {
    std::ostringstream s;
    s << lat.size() << " subgroups, " << lat.cover_edges().size() << " maximal inclusions\n";
    s << "depth " << depth(lat).value << ", length " << length(lat).value << "\n";
    body = s.str();
  }
  if (path.empty()) {
    ctx.out << body;
    return;
  }
  std::ofstream f(path);
  if (!f) throw DomainError("cannot write " + path);
  f << body;
  ctx.out << "wrote " << path << "\n";
}

void cmd_chain(const Context& ctx, const std::string& kind, std::uint64_t n) {
  ChainDescriptor c;
  if (kind == "an") c = an_chain(static_cast<unsigned>(n));
  else if (kind == "ap1") c = ap1_chain(n);
  else c = l2p_chain(n);
  ctx.emit(c, chain_text(c));
}

void cmd_goldbach(const Context& ctx, std::uint64_t m) {
  const GoldbachTriple t = ternary_goldbach(m);
  ctx.emit(t, std::to_string(m) + " = " + std::to_string(t.p1) + " + " + std::to_string(t.p2) + " + " +
                  std::to_string(t.p3) + "\n");
}

void cmd_search(const Context& ctx, unsigned n, std::uint64_t limit) {
  const Thm16Witness w = thm16_witness(n, limit);
  std::ostringstream s;
  s << "p = " << w.p << ": depth of L_2(" << w.p << ") = " << w.depth.to_string() << ", Omega(p-1) = "
    << w.omega_p_minus_1 << (w.length_exceeds_n ? " >= " : " < ") << n << "\n";
  ctx.emit(w, s.str());
}

void cmd_bounds(const Context& ctx, const std::string& which, const std::string& spec, std::uint64_t l) {
  const FamilyDescriptor d = FamilyDescriptor::parse(spec);
  if (which == "thm14") {
    const BoundReport r = bound_thm14(d, ctx.budget());
    std::ostringstream s;
    s << d.display_name() << ": depth <= " << (r.bound_value ? std::to_string(*r.bound_value) : "unknown") << " ("
      << to_string(r.applicable_case) << "), f1(k) = " << r.f1_value << "\n";
    if (!r.note.empty()) s << "  note: " << r.note << "\n";
    ctx.emit(r, s.str());
    return;
  }
  if (l == 0) throw std::invalid_argument("bounds thm38 needs --length");
  const Thm38Report r = bound_thm38(d, l);
  std::ostringstream s;
  s << d.display_name() << " (r=" << r.r << ", u=" << r.u << ") with length " << r.l << ": k <= " << r.k_ceiling
    << ", f1((l-2r)/u) = " << r.f1_value << "\n";
  ctx.emit(r, s.str());
}

void cmd_prop18(const Context& ctx, unsigned i) {
  const Prop18Witness w = prop18_witness(i, ctx.budget());
  std::ostringstream s;
  s.precision(12);
  s << "L_2(3^" << w.k << "): depth " << w.depth << ", Omega(|G|) = " << w.omega_order << ", log_3(Omega)+1 = "
    << w.log_term << ", depth " << (w.inequality_holds ? ">" : "<=") << " log term\n";
  ctx.emit(w, s.str());
}

void cmd_table(const Context& ctx) {
  Json j = {{"schema", kJsonSchema}, {"depths", Json::object()}};
  std::ostringstream s;
  for (const auto& name : sporadic_names()) {
    const unsigned d = sporadic_depth_table().at(name);
    j["depths"][name] = d;
    s << name << "\t" << d << "\n";
  }
  ctx.emit(j, s.str());
}

int cmd_repro(const Context& ctx, int only) {
  ReproConfig rc;
  rc.limits = ctx.lattice_limits();
  rc.budget = ctx.budget();
  rc.jobs = ctx.config.jobs;
  ReproSuite suite(rc);
  std::vector<CriterionResult> results;
  if (only) results.push_back(suite.run(only));
  else results = suite.run_all();
  bool ok = true;
  Json j = {{"schema", kJsonSchema}, {"criteria", Json::array()}};
  std::string text;
  for (const auto& r : results) {
    ok = ok && r.passed;
    j["criteria"].push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail},
                             {"seconds", r.seconds}});
    text += format_result(r) + "\n";
  }
  j["passed"] = ok;
  ctx.emit(j, text);
  return ok ? kOk : kFailed;
}

}  // namespace

CliConfig config_from_env(const std::map<std::string, std::string>& env) {
  CliConfig c;
  const auto get = [&](const char* key) -> const std::string* {
    auto it = env.find(key);
    return it == env.end() || it->second.empty() ? nullptr : &it->second;
  };
  if (auto v = get("DEPTH_MAX_ORDER")) c.max_group_order = parse_positive<std::size_t>("DEPTH_MAX_ORDER", *v);
  if (auto v = get("DEPTH_MAX_SUBGROUPS")) c.max_subgroups = parse_positive<std::size_t>("DEPTH_MAX_SUBGROUPS", *v);
  if (auto v = get("DEPTH_FACTOR_BUDGET")) c.factor_budget = parse_positive<std::uint64_t>("DEPTH_FACTOR_BUDGET", *v);
  if (auto v = get("DEPTH_JOBS")) c.jobs = parse_positive<unsigned>("DEPTH_JOBS", *v);
  if (auto v = get("DEPTH_FORMAT")) {
    auto it = kFormats.find(*v);
    if (it == kFormats.end()) throw std::invalid_argument("DEPTH_FORMAT must be text, json or dot");
    c.format = it->second;
  }
  return c;
}

std::map<std::string, std::string> process_env() {
  std::map<std::string, std::string> env;
  for (char** e = environ; e && *e; ++e) {
    const std::string kv = *e;
    if (!kv.starts_with("DEPTH_")) continue;
    const auto eq = kv.find('=');
    if (eq != std::string::npos) env[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return env;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::map<std::string, std::string>& env) {
  CliConfig config;
  try {
    config = config_from_env(env);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  CLI::App app{"Depth and length of finite groups", "chaindepth"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--max-order", config.max_group_order, "Largest group order for the lattice oracle")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-subgroups", config.max_subgroups, "Largest number of subgroups to enumerate")
      ->check(CLI::PositiveNumber);
  app.add_option("--factor-budget", config.factor_budget, "Pollard rho iterations per factor")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", config.jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_option("--format", config.format, "Output format: text, json or dot")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  std::string spec, kind, which;
  std::uint64_t number = 0, limit = 10'000'000, length_arg = 0;
  bool dump = false;
  std::string dump_path;
  int criterion = 0;

  auto* depth_cmd = app.add_subcommand("depth", "Depth of a group");
  depth_cmd->require_subcommand(1);
  auto* exact = depth_cmd->add_subcommand("exact", "Depth and length from the subgroup lattice");
  exact->add_option("spec", spec, "Group, e.g. alt:5 or psl2:7")->required();
  auto* formula = depth_cmd->add_subcommand("formula", "Depth from closed formulas, tables and bounds");
  formula->add_option("family", spec, "Family member, e.g. sporadic:He or psl:2,64,+")->required();

  auto* classify = app.add_subcommand("classify", "Classification predicates");
  classify->require_subcommand(1);
  auto* depth3 = classify->add_subcommand("depth3", "Whether a simple group has depth 3");
  depth3->add_option("family", spec)->required();

  auto* lattice_cmd = app.add_subcommand("lattice", "Subgroup lattice summary or dump");
  lattice_cmd->add_option("spec", spec)->required();
  lattice_cmd->add_flag("--dump", dump, "Emit every node and cover edge");
  lattice_cmd->add_option("--out", dump_path, "Write to a file instead of stdout");

  auto* chain = app.add_subcommand("chain", "Constructive unrefinable chains");
  chain->require_subcommand(1);
  for (const char* k : {"an", "ap1", "l2p"}) {
    auto* c = chain->add_subcommand(k, std::string("Chain for ") + k);
    c->add_option("n", number)->required()->check(CLI::PositiveNumber);
    c->callback([&kind, k] { kind = k; });
  }

  auto* goldbach_cmd = app.add_subcommand("goldbach", "Ternary Goldbach decomposition");
  goldbach_cmd->add_option("m", number)->required();

  auto* search = app.add_subcommand("search", "Prime searches");
  search->require_subcommand(1);
  auto* longs = search->add_subcommand("depth3-long", "L_2(p) of depth 3 and length above n");
  longs->add_option("n", number)->required();
  longs->add_option("--limit", limit, "Largest prime to try")->check(CLI::PositiveNumber);

  auto* bounds = app.add_subcommand("bounds", "Upper bounds for groups of Lie type");
  bounds->require_subcommand(1);
  for (const char* k : {"thm14", "thm38"}) {
    auto* b = bounds->add_subcommand(k, k == std::string("thm14") ? "Depth bound in terms of the field degree"
                                                                  : "Field degree bound in terms of the length");
    b->add_option("family", spec)->required();
    if (k == std::string("thm38")) b->add_option("--length", length_arg, "Length l of the group")->required();
    b->callback([&which, k] { which = k; });
  }

  auto* witness = app.add_subcommand("witness", "Witness computations");
  witness->require_subcommand(1);
  auto* prop18 = witness->add_subcommand("prop18", "Depth against log of length for L_2(3^(3^i))");
  prop18->add_option("i", number)->required();

  auto* table = app.add_subcommand("table", "Embedded data tables");
  table->require_subcommand(1);
  auto* sporadic = table->add_subcommand("sporadic", "Depths of the sporadic groups");

  auto* repro = app.add_subcommand("repro", "Acceptance suite");
  repro->require_subcommand(1);
  auto* all = repro->add_subcommand("all", "Run every criterion");
  all->add_option("--criterion", criterion, "Run only this criterion")->check(CLI::Range(1, ReproSuite::kCriteria));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const bool dot = config.format == Format::Dot;
  if (dot && !lattice_cmd->parsed()) {
    err << "error: --format dot applies only to the lattice command\n";
    return kUsage;
  }

  Context ctx{config, out};
  try {
    if (exact->parsed()) cmd_depth_exact(ctx, spec);
    else if (formula->parsed()) cmd_depth_formula(ctx, spec);
    else if (depth3->parsed()) cmd_classify(ctx, spec);
    else if (lattice_cmd->parsed()) cmd_lattice(ctx, spec, dump, dump_path);
    else if (chain->parsed()) cmd_chain(ctx, kind, number);
    else if (goldbach_cmd->parsed()) cmd_goldbach(ctx, number);
    else if (longs->parsed()) cmd_search(ctx, static_cast<unsigned>(number), limit);
    else if (bounds->parsed()) cmd_bounds(ctx, which, spec, length_arg);
    else if (prop18->parsed()) cmd_prop18(ctx, static_cast<unsigned>(number));
    else if (sporadic->parsed()) cmd_table(ctx);
    else if (all->parsed()) return cmd_repro(ctx, criterion);
    return kOk;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const CapExceeded& e) {
    err << "limit reached: " << e.what() << "\n";
    return kCap;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
}

}  // namespace chaindepth::cli
