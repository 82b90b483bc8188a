#include "chaindepth/json.hpp"

#include <sstream>

#include "chaindepth/error.hpp"

namespace chaindepth {

NLOHMANN_JSON_SERIALIZE_ENUM(DepthStatus, {{DepthStatus::Exact, "exact"},
                                           {DepthStatus::Interval, "interval"},
                                           {DepthStatus::Unknown, "unknown"}})
NLOHMANN_JSON_SERIALIZE_ENUM(Method, {{Method::Formula, "formula"},
                                      {Method::TableLookup, "table"},
                                      {Method::Bound, "bound"},
                                      {Method::BruteForce, "brute-force"}})
NLOHMANN_JSON_SERIALIZE_ENUM(Verdict, {{Verdict::False, "false"}, {Verdict::True, "true"}, {Verdict::Unknown, "unknown"}})
NLOHMANN_JSON_SERIALIZE_ENUM(BoundCase, {{BoundCase::Generic, "generic"},
                                         {BoundCase::CaseI, "case-i"},
                                         {BoundCase::CaseII, "case-ii"}})

namespace {

void check_schema(const Json& j) {
  if (!j.is_object()) throw Error("expected a JSON object");
  if (j.contains("schema") && j.at("schema").get<int>() != kJsonSchema)
    throw Error("unsupported schema " + j.at("schema").dump());
}

std::string big(const BigInt& x) { return x.get_str(); }
BigInt big(const Json& j) { return BigInt(j.get<std::string>()); }

}  // namespace

void to_json(Json& j, const FactoredInt& x) {
  Json factors = Json::array();
  for (const auto& [p, e] : x.factors()) factors.push_back({big(p), e});
  j = {{"value", big(x.value())}, {"factors", factors}, {"cofactor", big(x.cofactor())}, {"complete", x.complete()}};
  if (auto w = x.omega()) j["omega"] = *w;
}

void from_json(const Json& j, FactoredInt& x) {
  FactoredInt::FactorMap factors;
  for (const auto& f : j.at("factors")) factors[big(f.at(0))] += f.at(1).get<unsigned>();
  x = FactoredInt::from_partial(std::move(factors), big(j.at("cofactor")));
  if (x.value() != big(j.at("value"))) throw Error("factored value does not match its factors");
}

void to_json(Json& j, const FamilyDescriptor& x) { j = {{"spec", x.spec()}, {"name", x.display_name()}}; }

void from_json(const Json& j, FamilyDescriptor& x) { x = FamilyDescriptor::parse(j.at("spec").get<std::string>()); }

void to_json(Json& j, const DepthResult& x) {
  j = {{"schema", kJsonSchema}, {"status", x.status}, {"lo", x.lo},       {"hi", x.hi},
       {"method", x.method},    {"citation", x.citation}, {"note", x.note}, {"text", x.to_string()}};
}

void from_json(const Json& j, DepthResult& x) {
  check_schema(j);
  j.at("status").get_to(x.status);
  j.at("lo").get_to(x.lo);
  j.at("hi").get_to(x.hi);
  j.at("method").get_to(x.method);
  j.at("citation").get_to(x.citation);
  j.at("note").get_to(x.note);
}

void to_json(Json& j, const Depth3Verdict& x) {
  j = {{"schema", kJsonSchema}, {"verdict", x.verdict}, {"reason", x.reason}, {"probabilistic", x.probabilistic}};
}

void from_json(const Json& j, Depth3Verdict& x) {
  check_schema(j);
  j.at("verdict").get_to(x.verdict);
  j.at("reason").get_to(x.reason);
  j.at("probabilistic").get_to(x.probabilistic);
}

void to_json(Json& j, const BoundReport& x) {
  j = {{"schema", kJsonSchema}, {"family", x.family}, {"case", x.applicable_case},
       {"bound", nullptr},      {"f1", x.f1_value},   {"note", x.note}};
  if (x.bound_value) j["bound"] = *x.bound_value;
}

void from_json(const Json& j, BoundReport& x) {
  check_schema(j);
  j.at("family").get_to(x.family);
  j.at("case").get_to(x.applicable_case);
  x.bound_value = j.at("bound").is_null() ? std::nullopt : std::optional<unsigned>(j.at("bound").get<unsigned>());
  j.at("f1").get_to(x.f1_value);
  j.at("note").get_to(x.note);
}

void to_json(Json& j, const Thm38Report& x) {
  j = {{"schema", kJsonSchema}, {"r", x.r},        {"u", x.u}, {"l", x.l}, {"argument", x.argument},
       {"f1", x.f1_value},      {"k_ceiling", x.k_ceiling}};
}

void from_json(const Json& j, Thm38Report& x) {
  check_schema(j);
  j.at("r").get_to(x.r);
  j.at("u").get_to(x.u);
  j.at("l").get_to(x.l);
  j.at("argument").get_to(x.argument);
  j.at("f1").get_to(x.f1_value);
  j.at("k_ceiling").get_to(x.k_ceiling);
}

void to_json(Json& j, const ChainStep& x) {
  j = {{"label", x.label}, {"order", big(x.order.value())}, {"justification", to_string(x.justification)}};
}

void from_json(const Json& j, ChainStep& x) {
  j.at("label").get_to(x.label);
  x.order = factorize(big(j.at("order")));
  const auto tag = justification_from_string(j.at("justification").get<std::string>());
  if (!tag) throw Error("unknown justification " + j.at("justification").dump());
  x.justification = *tag;
}

void to_json(Json& j, const ChainDescriptor& x) {
  Json steps = Json::array();
  for (std::size_t i = 0; i < x.steps.size(); ++i) {
    Json s = x.steps[i];
    s["index"] = big(x.index(i).value());
    steps.push_back(std::move(s));
  }
  j = {{"schema", kJsonSchema},      {"top", x.top_label},          {"top_order", big(x.top_order.value())},
       {"steps", steps},             {"total_length", x.total_length}, {"caveats", x.caveats},
       {"rendering", x.render()}};
}

void from_json(const Json& j, ChainDescriptor& x) {
  check_schema(j);
  j.at("top").get_to(x.top_label);
  x.top_order = factorize(big(j.at("top_order")));
  x.steps = j.at("steps").get<std::vector<ChainStep>>();
  j.at("total_length").get_to(x.total_length);
  j.at("caveats").get_to(x.caveats);
}

void to_json(Json& j, const GoldbachTriple& x) {
  j = {{"schema", kJsonSchema}, {"m", x.m}, {"primes", {x.p1, x.p2, x.p3}}};
}

void from_json(const Json& j, GoldbachTriple& x) {
  check_schema(j);
  j.at("m").get_to(x.m);
  const auto& p = j.at("primes");
  p.at(0).get_to(x.p1);
  p.at(1).get_to(x.p2);
  p.at(2).get_to(x.p3);
}

void to_json(Json& j, const Thm16Witness& x) {
  j = {{"schema", kJsonSchema},
       {"n", x.n},
       {"p", x.p},
       {"depth", x.depth},
       {"omega_p_minus_1", x.omega_p_minus_1},
       {"length_exceeds_n", x.length_exceeds_n}};
}

void from_json(const Json& j, Thm16Witness& x) {
  check_schema(j);
  j.at("n").get_to(x.n);
  j.at("p").get_to(x.p);
  j.at("depth").get_to(x.depth);
  j.at("omega_p_minus_1").get_to(x.omega_p_minus_1);
  j.at("length_exceeds_n").get_to(x.length_exceeds_n);
}

void to_json(Json& j, const Prop18Witness& x) {
  j = {{"schema", kJsonSchema}, {"i", x.i},
       {"k", x.k},              {"depth", x.depth},
       {"order", x.order},      {"omega_order", x.omega_order},
       {"log_term", x.log_term}, {"inequality_holds", x.inequality_holds}};
}

void from_json(const Json& j, Prop18Witness& x) {
  check_schema(j);
  j.at("i").get_to(x.i);
  j.at("k").get_to(x.k);
  j.at("depth").get_to(x.depth);
  j.at("order").get_to(x.order);
  j.at("omega_order").get_to(x.omega_order);
  j.at("log_term").get_to(x.log_term);
  j.at("inequality_holds").get_to(x.inequality_holds);
}

Json lattice_document(const SubgroupLattice& lat) {
  const FiniteGroup& g = lat.parent();
  Json nodes = Json::array();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    Json gens = Json::array();
    for (auto e : lat.node(i).generators) gens.push_back(g.word_string(e));
    nodes.push_back({{"id", i}, {"order", lat.node(i).order}, {"generators", gens}});
  }
  Json edges = Json::array();
  for (const auto& [a, b] : lat.cover_edges()) edges.push_back({a, b});
  Json gens = Json::array();
  for (const auto& p : g.generators()) gens.push_back(p.to_cycle_string());

  const ChainResult d = depth(lat);
  const ChainResult l = length(lat);
  const auto chain = [&](const Chain& c) {
    return Json{{"nodes", c.nodes}, {"orders", render_orders(lat, c)}, {"length", c.length()}};
  };
  Json doc = {{"schema", kJsonSchema},
              {"group", {{"label", g.label()}, {"order", g.order()}, {"degree", g.degree()}, {"generators", gens}}},
              {"nodes", nodes},
              {"cover_edges", edges},
              {"depth", d.value},
              {"length", l.value},
              {"depth_chain", chain(d.witness)},
              {"length_chain", chain(l.witness)}};
  if (lat.size() > 1) {
    const Rational cr = chain_ratio(lat);
    doc["cd"] = chain_difference(lat);
    doc["cr"] = {{"num", cr.num}, {"den", cr.den}, {"text", cr.to_string()}};
  }
  return doc;
}

std::string lattice_dot(const SubgroupLattice& lat) {
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=TB;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < lat.size(); ++i)
    out << "  n" << i << " [label=\"" << i << ": " << lat.node(i).order << "\"];\n";
  for (const auto& [a, b] : lat.cover_edges()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace chaindepth
