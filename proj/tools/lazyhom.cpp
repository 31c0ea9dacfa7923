// Command-line front end: axiom checks, lazy homology and grading groups.

#include "lazyhom/builders.hpp"
#include "lazyhom/json_io.hpp"
#include "lazyhom/lazy_h2.hpp"
#include "lazyhom/oracles.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

using namespace lazyhom;

namespace {

enum Exit { kOk = 0, kMath = 1, kUsage = 2, kOutOfScope = 3 };

struct Options {
  std::string format = "json";
  bool skip_checks = false;
  std::size_t max_group_order = kDefaultMaxGroupOrder;
};

struct HopfInput {
  FinDimHopf h;
  std::string source;
  std::string fingerprint;
  std::optional<FiniteGroup> group;  // for group:<G> builtins
};

HopfInput load_hopf(const std::string& path, const std::string& builtin) {
  if (!path.empty() && !builtin.empty()) throw UsageError("give either a file or --builtin, not both");
  if (builtin.empty()) {
    if (path.empty()) throw UsageError("no input: give a Hopf algebra JSON file or --builtin");
    std::string bytes;
    const Json j = read_json_file(path, &bytes);
    return {hopf_from_json(j), path, fingerprint(bytes), std::nullopt};
  }
  FinDimHopf h = builtin_hopf(builtin);
  std::optional<FiniteGroup> g;
  if (builtin.rfind("group:", 0) == 0) g = group_by_name(builtin.substr(6));
  return {h, "builtin:" + builtin, fingerprint(hopf_to_json(h).dump()), std::move(g)};
}

Json report(const std::string& command, const std::string& source, const std::string& fp, Json result, const Checks& checks) {
  return Json{{"command", command},
              {"input", {{"source", source}, {"fingerprint", fp}}},
              {"result", std::move(result)},
              {"checks", to_json(checks)}};
}

void emit(const Options& opt, const Json& rep, const std::string& text) {
  if (opt.format == "json")
    std::cout << rep.dump(2) << "\n";
  else
    std::cout << text;
}

std::string checks_text(const Checks& checks) {
  std::ostringstream os;
  for (const auto& r : checks.records())
    os << "  [" << (r.passed ? "ok" : "FAIL") << "] " << r.name << (r.detail.empty() ? "" : " (" + r.detail + ")") << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------

int cmd_verify(const Options& opt, const std::string& path, const std::string& builtin) {
  const HopfInput in = load_hopf(path, builtin);
  const HopfReport rep = verify_hopf(in.h);
  Json result{{"name", in.h.name()}, {"dim", in.h.dim()}, {"all_passed", rep.all_passed()}, {"axioms", to_json(rep)}};
  std::ostringstream os;
  os << in.h.name() << " (dim " << in.h.dim() << ")\n";
  for (const auto& c : rep.checks)
    os << "  " << c.axiom << ": " << (c.passed ? "pass" : "FAIL at " + c.witness) << "\n";
  emit(opt, report("verify", in.source, in.fingerprint, std::move(result), Checks(false)), os.str());
  return rep.all_passed() ? kOk : kMath;
}

int cmd_h1(const Options& opt, const std::string& path, const std::string& builtin) {
  const HopfInput in = load_hopf(path, builtin);
  Checks checks(!opt.skip_checks);
  const H1Routes routes = compare_h1_routes(in.h, checks);
  const FinDimHopf& q = routes.quotient.quotient;

  Json lazy{{"dim", q.dim()}, {"basis", q.labels()}};
  if (routes.grouplikes) {
    lazy["grouplike_group"] = to_json(group_abelianization(*routes.grouplikes));
    lazy["text"] = "k[" + group_abelianization(*routes.grouplikes).to_string() + "]";
  } else {
    lazy["grouplike_group"] = nullptr;
    lazy["text"] = "commutative cocommutative Hopf algebra of dimension " + std::to_string(q.dim());
  }
  Json result{{"h1_lazy", std::move(lazy)}};
  std::ostringstream os;
  os << in.h.name() << "\n  H1 via H<1>_ab: " << result["h1_lazy"]["text"].get<std::string>() << " (dim " << q.dim() << ")\n";
  if (routes.homology) {
    result["h1_via_homology"] = to_json(*routes.homology);
    result["routes_agree"] = routes.agree;
    result["character_group"] = to_json(character_group_descriptor(*routes.homology));
    os << "  H1 via F(H[1]) // Im(d2): " << routes.homology->to_string() << "\n  routes agree: " << (routes.agree ? "yes" : "NO")
       << "\n  characters: " << character_group_descriptor(*routes.homology).to_string() << "\n";
  } else {
    result["h1_via_homology"] = {{"out_of_scope", routes.homology_error}};
    result["routes_agree"] = nullptr;
    os << "  H1 via F(H[1]) // Im(d2): out of scope (" << routes.homology_error << ")\n";
  }
  if (!opt.skip_checks) os << checks_text(checks);
  emit(opt, report("h1", in.source, in.fingerprint, std::move(result), checks), os.str());
  return routes.homology && !routes.agree ? kMath : kOk;
}

int cmd_h2(const Options& opt, const std::string& path, const std::string& builtin) {
  const HopfInput in = load_hopf(path, builtin);
  Checks checks(!opt.skip_checks);
  const LazyH2Result r = h2_lazy(in.h, checks);
  const PresentedCommHopf& f1 = r.context.f1.algebra;
  const PresentedCommHopf& f2 = r.context.f2.algebra;
  const PresentedCommHopf& ker = r.kernel.algebra;

  Json d2 = Json::array();
  for (std::size_t i = 0; i < f2.num_laurent(); ++i)
    d2.push_back({{"generator", f2.laurent_names()[i]}, {"image", f1.to_string(r.d2.laurent_images()[i])}});
  for (std::size_t j = 0; j < f2.num_poly(); ++j)
    d2.push_back({{"generator", f2.poly_names()[j]}, {"image", f1.to_string(r.d2.poly_images()[j])}});
  Json hker = Json::array();
  for (std::size_t i = 0; i < ker.num_laurent(); ++i)
    hker.push_back({{"generator", ker.laurent_names()[i]}, {"in_source", f2.to_string(r.kernel.laurent_inclusion[i])}});
  for (std::size_t j = 0; j < ker.num_poly(); ++j)
    hker.push_back({{"generator", ker.poly_names()[j]}, {"in_source", f2.to_string(r.kernel.poly_inclusion[j])}});
  Json table = Json::array();
  const auto& L = in.h.labels();
  for (const auto& e : r.d3_table)
    table.push_back({{"x", L[e.x]}, {"y", L[e.y]}, {"z", L[e.z]}, {"value", f2.to_string(e.value)}, {"hker", ker.to_string(e.kernel)}});

  Json result{{"c1_dim", r.context.c1.quotient.dim()},
              {"h2_quotient_dim", r.context.h2.quotient.dim()},
              {"d2", std::move(d2)},
              {"hker_generators", std::move(hker)},
              {"d3_table", std::move(table)},
              {"h2", to_json(r.h2)}};
  std::ostringstream os;
  os << in.h.name() << "\n  dim C[1] = " << r.context.c1.quotient.dim() << ", dim H[2] = " << r.context.h2.quotient.dim()
     << "\n  HKer(d2): " << ker.num_laurent() << " lattice and " << ker.num_poly() << " primitive generators\n  H2 = "
     << r.h2.to_string() << "\n";
  if (in.group && in.group->order() <= opt.max_group_order) {
    const FPAbelianGroup bar = bar_homology(*in.group, 2, opt.max_group_order);
    const bool agree = same_invariants(bar, r.h2.group_part) && r.h2.free_primitives() == 0;
    result["bar_oracle"] = {{"h2_group", to_json(bar)}, {"agrees", agree}};
    os << "  bar-complex H2(G, Z) = " << bar.to_string() << (agree ? " (agrees)" : " (DISAGREES)") << "\n";
  }
  if (!opt.skip_checks) os << checks_text(checks);
  emit(opt, report("h2", in.source, in.fingerprint, std::move(result), checks), os.str());
  return kOk;
}

int cmd_grading(const Options& opt, const std::string& path, const std::string& group) {
  FusionRing f;
  std::string source, fp;
  if (!group.empty()) {
    f = pointed_fusion(group_by_name(group));
    source = "pointed:" + group;
    fp = fingerprint(fusion_to_json(f).dump());
  } else {
    if (path.empty()) throw UsageError("no input: give a fusion JSON file or --group");
    std::string bytes;
    f = fusion_from_json(read_json_file(path, &bytes));
    source = path;
    fp = fingerprint(bytes);
  }
  const FPAbelianGroup g = fusion_grading(f);
  Json result{{"labels", f.labels}, {"grading_group", to_json(g)}};
  emit(opt, report("grading", source, fp, std::move(result), Checks(false)), "universal grading group: " + g.to_string() + "\n");
  return kOk;
}

int cmd_group_homology(const Options& opt, const std::string& name, unsigned degree) {
  const FiniteGroup g = group_by_name(name);
  const FPAbelianGroup h = bar_homology(g, degree, opt.max_group_order);
  Json result{{"group", g.name()}, {"order", g.order()}, {"degree", degree}, {"homology", to_json(h)}};
  std::ostringstream os;
  os << "H_" << degree << "(" << g.name() << ", Z) = " << h.to_string() << "\n";
  emit(opt, report("group-homology", "group:" + name, fingerprint(name), std::move(result), Checks(false)), os.str());
  return kOk;
}

int cmd_export(const std::string& builtin) {
  std::cout << hopf_to_json(builtin_hopf(builtin)).dump(1) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lazy homology of finite-dimensional Hopf algebras over Q"};
  app.require_subcommand(1);
  // Global flags may follow the subcommand.
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--skip-invariant-checks", opt.skip_checks, "Skip runtime invariant checks");
  app.add_option("--max-group-order", opt.max_group_order, "Largest group order for bar homology");

  std::string path, builtin, group, name;
  unsigned degree = 2;
  auto hopf_inputs = [&](CLI::App* sub) {
    sub->add_option("file", path, "Hopf algebra JSON file");
    sub->add_option("--builtin", builtin, "sweedler | group:<G> | functions:<G>");
  };
  auto* verify = app.add_subcommand("verify", "Check the Hopf algebra axioms");
  hopf_inputs(verify);
  auto* h1 = app.add_subcommand("h1", "First lazy homology by two routes");
  hopf_inputs(h1);
  auto* h2 = app.add_subcommand("h2", "Second lazy homology");
  hopf_inputs(h2);
  auto* grading = app.add_subcommand("grading", "Universal abelian grading group of a fusion ring");
  grading->add_option("file", path, "Fusion ring JSON file");
  grading->add_option("--group", group, "Use the pointed fusion ring of a builtin group");
  auto* gh = app.add_subcommand("group-homology", "Integral group homology from the bar complex");
  gh->add_option("group", name, "C2 | C3 | C4 | C6 | C2xC2 | S3 | D4 | Q8")->required();
  gh->add_option("--degree", degree, "1 or 2")->check(CLI::Range(1, 2));
  auto* exp = app.add_subcommand("export", "Print a builtin Hopf algebra as JSON");
  exp->add_option("--builtin", builtin, "sweedler | group:<G> | functions:<G>")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(opt, path, builtin);
    if (*h1) return cmd_h1(opt, path, builtin);
    if (*h2) return cmd_h2(opt, path, builtin);
    if (*grading) return cmd_grading(opt, path, group);
    if (*gh) return cmd_group_homology(opt, name, degree);
    if (*exp) return cmd_export(builtin);
  } catch (const Error& e) {
    std::cerr << "error [" << e.module() << "]: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Math: return kMath;
      case ErrorKind::Usage: return kUsage;
      case ErrorKind::OutOfScope: return kOutOfScope;
    }
  }
  return kUsage;
}
