// Command-line front end: build, verify, audit-oracle, gadget-facts, families.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "endtd/decomposition.hpp"
#include "endtd/families.hpp"
#include "endtd/gadget_facts.hpp"
#include "endtd/io.hpp"
#include "endtd/verify.hpp"

using namespace endtd;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kPropertyFailure = 1, kConfig = 2, kHorizon = 3 };

struct FamilyArgs {
  std::string name;
  int k = 4;
  std::string input;
  std::string mutation;

  FamilyPtr make() const {
    std::map<std::string, std::string> p{{"k", std::to_string(k)}};
    if (!input.empty()) p["input"] = input;
    if (!mutation.empty()) p["mutation"] = mutation;
    return make_family(name, p);
  }
};

GDeltaSpec parse_psi(const std::string& psi, const GraphFamily& f) {
  if (psi == "undominated") return undominated_gdelta(f);
  if (psi == "all") return all_ends_gdelta();
  if (psi.rfind("ends:", 0) == 0) {
    std::vector<std::string> ids;
    std::stringstream ss(psi.substr(5));
    for (std::string id; std::getline(ss, id, ',');)
      if (!id.empty()) ids.push_back(id);
    return listed_gdelta(std::move(ids));
  }
  throw ConfigError("--psi must be undominated, all, or ends:<id>,<id>...");
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  out << text;
}

void summarize(const VerificationReport& r) {
  for (const auto& p : r.properties) {
    std::cerr << (p.pass ? "ok   " : "FAIL ") << p.name << " (checked " << p.checked;
    if (p.unresolved) std::cerr << ", unresolved " << p.unresolved;
    std::cerr << ")\n";
    for (std::size_t i = 0; i < p.witnesses.size() && i < 5; ++i) std::cerr << "     " << p.witnesses[i] << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tree-decompositions displaying end sets of infinite graphs"};
  app.require_subcommand(1);

  FamilyArgs fam;
  std::string psi = "undominated", output, format = "json", graph;
  int horizon = 16, levels = 4;
  std::size_t pair_budget = 1'000'000;
  bool dump_env = false, dump_alg = false, no_contract = false;

  auto family_opts = [&](CLI::App* c) {
    c->add_option("--family", fam.name, "graph family")->required();
    c->add_option("--k", fam.k, "width for half_grid");
    c->add_option("--input", fam.input, "finite graph JSON for the finite family");
    c->add_option("--mutation", fam.mutation, "gadget mutation: drop-x3-s1 or drop-s2-h3");
  };

  auto* build_cmd = app.add_subcommand("build", "build, contract and verify a decomposition");
  family_opts(build_cmd);
  build_cmd->add_option("--psi", psi, "undominated | all | ends:<id>,...");
  build_cmd->add_option("--horizon", horizon, "truncation radius");
  build_cmd->add_option("--levels", levels, "construction rounds");
  build_cmd->add_option("--pair-budget", pair_budget, "comparable edge pairs checked for linkedness");
  build_cmd->add_option("--output", output, "output path (default stdout)");
  build_cmd->add_option("--format", format, "json | dot")->check(CLI::IsMember({"json", "dot"}));
  build_cmd->add_flag("--dump-envelopes", dump_env, "include envelope records in the log");
  build_cmd->add_flag("--dump-algorithm", dump_alg, "include region-algorithm transcripts in the log");
  build_cmd->add_flag("--no-contract", no_contract, "skip contraction to linked edges");

  std::string td_path;
  auto* verify_cmd = app.add_subcommand("verify", "verify a decomposition JSON against its family");
  verify_cmd->add_option("--input", td_path, "decomposition JSON")->required();
  verify_cmd->add_option("--graph", fam.input, "finite graph JSON when the family is finite");
  verify_cmd->add_option("--psi", psi, "override the distinguished end set");
  verify_cmd->add_option("--pair-budget", pair_budget, "comparable edge pairs checked for linkedness");
  verify_cmd->add_option("--output", output, "report path (default stdout)");

  auto* audit_cmd = app.add_subcommand("audit-oracle", "check a family's declared end structure");
  family_opts(audit_cmd);
  audit_cmd->add_option("--horizon", horizon, "truncation radius");
  audit_cmd->add_option("--output", output, "report path (default stdout)");

  auto* facts_cmd = app.add_subcommand("gadget-facts", "separator facts of the gadget family");
  facts_cmd->add_option("--horizon", horizon, "truncation radius");
  facts_cmd->add_option("--mutation", fam.mutation, "drop-x3-s1 or drop-s2-h3");
  facts_cmd->add_option("--output", output, "report path (default stdout)");

  auto* fam_cmd = app.add_subcommand("families", "list built-in families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    if (*fam_cmd) {
      json out = json::array();
      for (const auto& f : list_families())
        out.push_back({{"name", f.name}, {"params", f.params}, {"description", f.description}});
      emit(json{{"schema", 1}, {"kind", "families"}, {"families", out}}.dump(2) + "\n", "");
      return kOk;
    }

    if (*build_cmd) {
      auto t = Truncation::expand(fam.make(), horizon);
      auto spec = parse_psi(psi, t.family());
      auto raw = build(t, spec, levels);
      auto cov = check_coverage(t, raw);
      auto td = no_contract ? raw : contract_to_linked(t, raw);
      auto rep = verify(t, td, spec, {pair_budget, 0});
      summarize(rep);
      if (!cov.violations.empty()) std::cerr << "FAIL coverage bound: " << cov.violations.size() << " vertices late\n";
      if (format == "dot") {
        emit(to_dot(t, td), output);
      } else {
        json j = to_json(t, td, {true, dump_env, dump_alg});
        j["psi"] = gdelta_json(spec);
        j["verification"] = to_json(t, rep);
        j["coverage"] = {{"checked", cov.checked},
                         {"beyond_levels", cov.beyond_levels},
                         {"violations", cov.violations.size()}};
        emit(j.dump(2) + "\n", output);
      }
      return rep.pass() && cov.violations.empty() ? kOk : kPropertyFailure;
    }

    if (*verify_cmd) {
      std::ifstream in(td_path);
      if (!in) throw ConfigError("cannot read " + td_path);
      json j;
      try {
        j = json::parse(in);
      } catch (const json::exception& e) {
        throw ConfigError(std::string("decomposition JSON: ") + e.what());
      }
      fam.name = j.at("family").at("name").get<std::string>();
      auto params = j.at("family").at("params").get<std::map<std::string, std::string>>();
      if (!fam.input.empty()) params["input"] = fam.input;
      auto family = fam.name == "finite" && fam.input.empty()
                        ? throw ConfigError("finite family needs --graph")
                        : make_family(fam.name, params);
      auto t = Truncation::expand(family, j.at("horizon").get<int>());
      auto td = tree_from_json(t, j);
      std::string psi_arg = psi;
      if (!verify_cmd->count("--psi")) {
        const auto& p = j.at("psi");
        psi_arg = p.at("kind").get<std::string>();
        if (psi_arg == "ends") {
          psi_arg = "ends:";
          for (const auto& id : p.value("ends", std::vector<std::string>{})) psi_arg += id + ",";
        }
      }
      auto spec = parse_psi(psi_arg, t.family());
      auto rep = verify(t, td, spec, {pair_budget, 0});
      summarize(rep);
      emit(to_json(t, rep).dump(2) + "\n", output);
      return rep.pass() ? kOk : kPropertyFailure;
    }

    if (*audit_cmd) {
      auto t = Truncation::expand(fam.make(), horizon);
      auto a = audit_oracle(t);
      emit(to_json(a).dump(2) + "\n", output);
      return a.pass ? kOk : kPropertyFailure;
    }

    if (*facts_cmd) {
      fam.name = "appendix_gadget";
      auto t = Truncation::expand(fam.make(), horizon);
      auto f = gadget_facts(t);
      json j{{"schema", 1},
             {"kind", "gadget_facts"},
             {"horizon", horizon},
             {"mutation", fam.mutation},
             {"facts",
              {{{"name", "unique_h3_separator"}, {"pass", f.unique_h3_pair}, {"separators", f.h3_separators}},
               {{"name", "h4_order_three"}, {"pass", f.h4_order_three}, {"order", f.h4_order}},
               {{"name", "h4_separators"}, {"pass", f.h4_exact_pair}, {"separators", f.h4_separators}}}},
             {"pass", f.pass()}};
      emit(j.dump(2) + "\n", output);
      if (!f.pass())
        for (const auto& fact : j["facts"])
          if (!fact["pass"].get<bool>()) std::cerr << "FAIL " << fact["name"].get<std::string>() << "\n";
      return f.pass() ? kOk : kPropertyFailure;
    }
  } catch (const HorizonError& e) {
    std::cerr << "horizon insufficient: " << e.what() << "; required horizon " << e.required() << "\n";
    return kHorizon;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfig;
  } catch (const GraphError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfig;
  } catch (const PreconditionError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfig;
  } catch (const json::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfig;
  }
  return kOk;
}
