// sgt: command-line front door for the finite-semigroup toolkit.
//
// Every subcommand reads JSON artifacts, emits one JSON report on standard
// output, and exits with: 0 when all checks pass, 1 when a checked property
// fails (the witness is in the report), 2 on invalid input or usage errors,
// 3 when a structural claim the library treats as a theorem is falsified.
// Diagnostics go to standard error; reports are byte-identical across runs
// except for the "timing_ms" field.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "sgt/sgt.hpp"

namespace {

using nlohmann::json;

/// Accumulates the report document and the pass/fail outcome.
class Report {
 public:
  explicit Report(std::string command) {
    j_["command"] = std::move(command);
    j_["instance"] = json::object();
    j_["verdicts"] = json::object();
    j_["witnesses"] = json::array();
    j_["data"] = json::object();
  }

  void instance(const std::string& key, const json& value) {
    j_["instance"][key] = value;
  }
  void verdict(const std::string& name, bool ok) {
    j_["verdicts"][name] = ok;
    if (!ok) any_failed_ = true;
  }
  void witness(const sgt::Witness& w, const std::string& property = "") {
    json entry;
    entry["kind"] = w.kind;
    entry["elements"] = w.elements;
    if (!property.empty()) entry["property"] = property;
    j_["witnesses"].push_back(std::move(entry));
  }
  void error(const std::string& message) { j_["error"] = message; }
  json& data() { return j_["data"]; }

  bool any_failed() const { return any_failed_; }

  /// Prints the report and returns the exit code for the verdict outcome.
  int finish(std::chrono::steady_clock::time_point start, int exit_on_fail = 1) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    j_["timing_ms"] =
        std::chrono::duration<double, std::milli>(elapsed).count();
    std::cout << j_.dump(2) << "\n";
    return any_failed_ ? exit_on_fail : 0;
  }

 private:
  json j_;
  bool any_failed_ = false;
};

json partition_to_json(const sgt::Partition& p) { return json(p.class_of); }

json pairs_to_json(const std::vector<std::pair<int, int>>& pairs) {
  json out = json::array();
  for (const auto& [a, b] : pairs) out.push_back(json::array({a, b}));
  return out;
}

void put_verdict_data(Report& rep, const std::string& name,
                      const sgt::Verdict& v) {
  rep.verdict(name, v.holds);
  if (!v.holds && v.witness) rep.witness(*v.witness, name);
}

void describe_semigroup(Report& rep, const sgt::SemigroupDocument& doc) {
  rep.instance("n", doc.s.n);
  if (doc.star) rep.instance("star_given", true);
  if (!doc.labels.empty()) rep.instance("labels", doc.labels);
}

int run_validate(const std::string& path, int cap,
                 std::chrono::steady_clock::time_point start) {
  Report rep("validate");
  const sgt::SemigroupDocument doc = sgt::load_semigroup_file(path, cap);
  describe_semigroup(rep, doc);
  rep.verdict("loads", true);
  return rep.finish(start);
}

int run_classify(const std::string& path, int cap,
                 std::chrono::steady_clock::time_point start) {
  Report rep("classify");
  const sgt::SemigroupDocument doc = sgt::load_semigroup_file(path, cap);
  describe_semigroup(rep, doc);
  const sgt::ClassificationReport cls = sgt::classify(doc.s);
  json flags = json::object();
  const std::pair<const char*, const sgt::Verdict*> entries[] = {
      {"band", &cls.band},
      {"right_normal_band", &cls.right_normal_band},
      {"regular", &cls.regular},
      {"orthodox", &cls.orthodox},
      {"inverse", &cls.inverse},
      {"right_generalized_inverse", &cls.right_generalized_inverse},
      {"locally_inverse", &cls.locally_inverse},
  };
  for (const auto& [name, v] : entries) {
    json entry;
    entry["holds"] = v->holds;
    if (!v->holds && v->witness) {
      entry["witness"] = {{"kind", v->witness->kind},
                          {"elements", v->witness->elements}};
    }
    flags[name] = std::move(entry);
  }
  rep.data()["classification"] = std::move(flags);
  return rep.finish(start);  // classification is descriptive: always exit 0
}

int run_green(const std::string& path, int cap,
              std::chrono::steady_clock::time_point start) {
  Report rep("green");
  const sgt::SemigroupDocument doc = sgt::load_semigroup_file(path, cap);
  describe_semigroup(rep, doc);
  const sgt::GreenRelations g = sgt::green_relations(doc.s);
  rep.data()["l"] = partition_to_json(g.l);
  rep.data()["r"] = partition_to_json(g.r);
  rep.data()["h"] = partition_to_json(g.h);
  rep.data()["d"] = partition_to_json(g.d);
  rep.data()["j"] = partition_to_json(g.j);
  return rep.finish(start);
}

int run_order(const std::string& path, int cap,
              std::chrono::steady_clock::time_point start) {
  Report rep("order");
  const sgt::SemigroupDocument doc = sgt::load_semigroup_file(path, cap);
  describe_semigroup(rep, doc);
  const sgt::Relation order = sgt::natural_partial_order(doc.s);
  rep.data()["order"] = pairs_to_json(order.pairs());
  rep.verdict("partial_order", true);
  return rep.finish(start);
}

int run_star_check(const std::string& path, int cap,
                   std::chrono::steady_clock::time_point start) {
  Report rep("star-check");
  const sgt::SemigroupDocument doc = sgt::load_semigroup_file(path, cap);
  describe_semigroup(rep, doc);
  const std::vector<int> star = sgt::resolve_star(doc);
  const sgt::StarReport sr = sgt::check_star(doc.s, star);
  put_verdict_data(rep, "involution", sr.involution);
  put_verdict_data(rep, "gives_inverse", sr.gives_inverse);
  put_verdict_data(rep, "product_rule", sr.product_rule);
  put_verdict_data(rep, "fixes_idempotents", sr.fixes_idempotents);
  rep.data()["is_rgis_star"] = sr.is_rgis_star;
  rep.data()["star"] = star;
  return rep.finish(start);
}

int run_gamma(const std::string& path, const std::string& quotient_out, int cap,
              std::chrono::steady_clock::time_point start) {
  Report rep("gamma");
  const sgt::SemigroupDocument doc = sgt::load_semigroup_file(path, cap);
  describe_semigroup(rep, doc);
  const sgt::GammaQuotient gq = sgt::gamma_quotient(doc.s);
  rep.data()["partition"] = partition_to_json(gq.congruence.partition);
  rep.data()["classes"] = gq.quotient.n;
  if (!quotient_out.empty()) {
    json out = sgt::semigroup_to_json(gq.quotient);
    out["projection"] = gq.projection.map;
    sgt::write_json_file(quotient_out, out);
    rep.data()["quotient_file"] = quotient_out;
  } else {
    json out = sgt::semigroup_to_json(gq.quotient);
    out["projection"] = gq.projection.map;
    rep.data()["quotient"] = std::move(out);
  }
  return rep.finish(start);
}

int run_coordinatize(const std::string& path, int cap,
                     std::chrono::steady_clock::time_point start) {
  Report rep("coordinatize");
  const sgt::SemigroupDocument doc = sgt::load_semigroup_file(path, cap);
  describe_semigroup(rep, doc);
  const sgt::Coordinatization co = sgt::coordinatize(doc.s);
  rep.data()["pairs"] = pairs_to_json(co.pairs);
  rep.data()["kappa"] = co.kappa;
  rep.verdict("bijection", static_cast<int>(co.pairs.size()) == doc.s.n);
  return rep.finish(start);
}

int run_lcover(const std::string& path, int cap,
               std::chrono::steady_clock::time_point start) {
  Report rep("lcover");
  const sgt::SemigroupDocument doc = sgt::load_semigroup_file(path, cap);
  describe_semigroup(rep, doc);
  const sgt::GammaQuotient gq = sgt::gamma_quotient(doc.s);
  const std::optional<sgt::Witness> w = sgt::check_l_cover(gq.projection);
  rep.verdict("l_cover", !w.has_value());
  if (w) rep.witness(*w, "l_cover");
  return rep.finish(start);
}

int run_action_check(const std::string& path, int cap,
                     std::chrono::steady_clock::time_point start) {
  Report rep("action-check");
  try {
    const sgt::ActionDocument doc = sgt::load_action_file(path, cap);
    rep.instance("n", doc.action.s.n);
    rep.instance("x_size", doc.action.x_size);
    rep.verdict("action_valid", true);
    rep.data()["global_support"] = sgt::has_global_support(doc.action);
    const sgt::ActionOrderResult ord = sgt::action_order(doc.action);
    if (!ord.violation) rep.data()["order"] = pairs_to_json(ord.order.pairs());
    return rep.finish(start);
  } catch (const sgt::invalid_input& e) {
    const std::string& kind = e.witness().kind;
    if (kind == "PNotIdempotent" || kind == "ActionLawViolated" ||
        kind == "E1Violated" || kind == "E2Violated") {
      rep.verdict("action_valid", false);
      rep.witness(e.witness(), "action_valid");
      return rep.finish(start);
    }
    throw;  // structural defect in the file itself
  }
}

int run_etale_check(const std::string& path, int cap,
                    std::chrono::steady_clock::time_point start) {
  Report rep("etale-check");
  const sgt::HomDocument doc = sgt::load_hom_file(path, cap);
  rep.instance("source_n", doc.hom.source.n);
  rep.instance("target_n", doc.hom.target.n);
  const sgt::StarStructure star{doc.hom.source, sgt::resolve_star(doc.source)};
  const sgt::EtaleHomReport er = sgt::check_etale_hom(doc.hom, star);
  rep.verdict("etale", er.etale);
  rep.data()["te_injective"] = er.te_injective;
  put_verdict_data(rep, "image_left_ideal", er.image_left_ideal);
  for (std::size_t i = 0; i < er.restrictions.size(); ++i) {
    if (!er.restrictions[i].holds && er.restrictions[i].witness) {
      rep.witness(*er.restrictions[i].witness, "etale");
    }
  }
  rep.data()["kernel"] = partition_to_json(er.kernel);
  rep.data()["image"] = er.image;
  return rep.finish(start);
}

int run_build_sx(const std::string& path, const std::string& out, int cap,
                 std::chrono::steady_clock::time_point start) {
  Report rep("build-sx");
  const sgt::ActionDocument doc = sgt::load_action_file(path, cap);
  rep.instance("n", doc.action.s.n);
  rep.instance("x_size", doc.action.x_size);
  const sgt::SemidirectResult r = sgt::build_semidirect(doc.action);
  if (const auto w = sgt::check_semidirect_order(r)) {
    throw sgt::falsification_error(
        "semidirect order is the componentwise order", *w,
        "natural order on the product disagrees with the component orders");
  }
  rep.verdict("constructed", true);
  rep.data()["carrier"] = r.product.n;
  const json artifact = sgt::semidirect_to_json(r);
  if (!out.empty()) {
    sgt::write_json_file(out, artifact);
    rep.data()["output_file"] = out;
  } else {
    rep.data()["semidirect"] = artifact;
  }
  return rep.finish(start);
}

int run_build_action(const std::string& path, const std::string& out, int cap,
                     std::chrono::steady_clock::time_point start) {
  Report rep("build-action");
  const sgt::HomDocument doc = sgt::load_hom_file(path, cap);
  rep.instance("source_n", doc.hom.source.n);
  rep.instance("target_n", doc.hom.target.n);
  const sgt::StarStructure star{doc.hom.source, sgt::resolve_star(doc.source)};
  const sgt::EtaleAction a = sgt::build_action_from_etale(doc.hom, star);
  rep.verdict("constructed", true);
  rep.data()["x_size"] = a.x_size;
  std::optional<std::vector<int>> target_star;
  if (sgt::classify(a.s).is_inverse()) target_star = sgt::inversion_star(a.s);
  const json artifact =
      sgt::action_to_json(a, target_star ? &*target_star : nullptr);
  if (!out.empty()) {
    sgt::write_json_file(out, artifact);
    rep.data()["output_file"] = out;
  } else {
    rep.data()["action"] = artifact;
  }
  return rep.finish(start);
}

int run_roundtrip(const std::string& mode, const std::string& path, int cap,
                  std::chrono::steady_clock::time_point start) {
  Report rep("roundtrip");
  rep.instance("mode", mode);
  sgt::RoundTripReport rt;
  if (mode == "action") {
    const sgt::ActionDocument doc = sgt::load_action_file(path, cap);
    rep.instance("n", doc.action.s.n);
    rep.instance("x_size", doc.action.x_size);
    rt = sgt::roundtrip_action(doc.action);
  } else {
    const sgt::HomDocument doc = sgt::load_hom_file(path, cap);
    rep.instance("source_n", doc.hom.source.n);
    rep.instance("target_n", doc.hom.target.n);
    const sgt::StarStructure star{doc.hom.source, sgt::resolve_star(doc.source)};
    rt = sgt::roundtrip_etale(doc.hom, star);
  }
  for (const auto& [name, v] : rt.verdicts) {
    rep.verdict(name, v.holds);
    if (!v.holds && v.witness) rep.witness(*v.witness, name);
  }
  rep.data()["forward"] = rt.forward;
  return rep.finish(start, 3);  // a broken round trip falsifies the theory
}

int run_gen(const std::string& family, const std::vector<int>& params,
            unsigned seed, const std::string& find_stars_path, long long budget,
            const std::string& base_path, const std::string& out, int cap,
            std::chrono::steady_clock::time_point start) {
  Report rep("gen");
  if (!find_stars_path.empty()) {
    const sgt::SemigroupDocument doc =
        sgt::load_semigroup_file(find_stars_path, cap);
    describe_semigroup(rep, doc);
    const std::vector<sgt::StarStructure> stars =
        sgt::find_stars(doc.s, budget);
    json list = json::array();
    for (const auto& st : stars) list.push_back(st.star);
    rep.data()["stars"] = std::move(list);
    rep.data()["count"] = stars.size();
    return rep.finish(start);
  }
  if (family.empty()) {
    throw sgt::invalid_input(sgt::Witness{"InvalidFamily", {}},
                             "gen needs a family name or --find-stars");
  }

  json artifact;
  if (family == "conjugation" || family == "left_regular" ||
      family == "orbit" || family == "random") {
    if (base_path.empty()) {
      throw sgt::invalid_input(sgt::Witness{"InvalidParams", {}},
                               "action families need --base <semigroup.json>");
    }
    const sgt::SemigroupDocument base = sgt::load_semigroup_file(base_path, cap);
    sgt::EtaleAction a;
    if (family == "conjugation") {
      a = sgt::conjugation_action(base.s);
    } else if (family == "left_regular") {
      a = sgt::left_regular_action(base.s);
    } else if (family == "orbit") {
      if (params.size() != 1) {
        throw sgt::invalid_input(sgt::Witness{"InvalidParams", {}},
                                 "orbit needs --params <idempotent>");
      }
      a = sgt::conjugation_orbit_action(base.s, params[0]);
    } else {
      if (params.size() != 1) {
        throw sgt::invalid_input(sgt::Witness{"InvalidParams", {}},
                                 "random needs --params <min_points>");
      }
      a = sgt::random_action(base.s, params[0], seed);
    }
    rep.instance("n", a.s.n);
    rep.instance("x_size", a.x_size);
    const std::vector<int>* star = base.star ? &*base.star : nullptr;
    std::vector<int> inv;
    if (!star && sgt::classify(base.s).is_inverse()) {
      inv = sgt::inversion_star(base.s);
      star = &inv;
    }
    artifact = sgt::action_to_json(a, star);
  } else {
    const sgt::GeneratedSemigroup g =
        sgt::generate(sgt::FamilySpec{family, params, seed});
    rep.instance("n", g.s.n);
    rep.instance("family", g.family);
    artifact = sgt::semigroup_to_json(g.s, &g.star, &g.element_labels);
  }
  if (!out.empty()) {
    sgt::write_json_file(out, artifact);
    rep.data()["output_file"] = out;
  } else {
    rep.data()["artifact"] = std::move(artifact);
  }
  return rep.finish(start);
}

int run_suite_cmd(int max_n, unsigned seed, bool inject,
                  std::chrono::steady_clock::time_point start) {
  Report rep("suite");
  rep.instance("max_n", max_n);
  rep.instance("seed", seed);
  if (inject) rep.instance("inject", true);
  const sgt::SuiteResult result = sgt::run_suite(max_n, seed, inject);
  json criteria = json::array();
  for (const auto& c : result.criteria) {
    rep.verdict(c.name, c.passed);
    json entry;
    entry["name"] = c.name;
    entry["passed"] = c.passed;
    entry["checks"] = c.checks;
    entry["failures"] = c.failures;
    criteria.push_back(std::move(entry));
    for (const auto& note : c.failures) {
      std::cerr << "[" << c.name << "] " << note << "\n";
    }
  }
  rep.data()["criteria"] = std::move(criteria);
  rep.data()["total_checks"] = result.total_checks();
  // A failed criterion means a structural claim did not hold: falsification.
  return rep.finish(start, 3);
}

}  // namespace

int main(int argc, char** argv) {
  const auto start = std::chrono::steady_clock::now();

  CLI::App app{"finite semigroup toolkit: stars, quotients, etale actions"};
  app.require_subcommand(1);
  int cap = sgt::kDefaultCap;
  app.add_option("--cap", cap, "largest loadable element count");
  bool json_flag = true;
  app.add_flag("--json", json_flag, "emit JSON reports (default)");

  std::string file, out, mode;

  auto* validate = app.add_subcommand("validate", "load and validate a table");
  validate->add_option("file", file)->required();

  auto* classify = app.add_subcommand("classify", "classification flags");
  classify->add_option("file", file)->required();

  auto* green = app.add_subcommand("green", "Green's relations");
  green->add_option("file", file)->required();

  auto* order = app.add_subcommand("order", "natural partial order");
  order->add_option("file", file)->required();

  auto* star_check = app.add_subcommand("star-check", "star axiom report");
  star_check->add_option("file", file)->required();

  std::string quotient_out;
  auto* gamma = app.add_subcommand("gamma", "minimum inverse congruence");
  gamma->add_option("file", file)->required();
  gamma->add_option("--quotient", quotient_out, "write the quotient here");

  auto* coordinatize = app.add_subcommand("coordinatize", "coordinate bijection");
  coordinatize->add_option("file", file)->required();

  auto* lcover = app.add_subcommand("lcover", "L-cover check of the natural map");
  lcover->add_option("file", file)->required();

  auto* action_check = app.add_subcommand("action-check", "etale action report");
  action_check->add_option("file", file)->required();

  auto* etale_check = app.add_subcommand("etale-check", "etale map report");
  etale_check->add_option("file", file)->required();

  auto* build_sx = app.add_subcommand("build-sx", "semidirect product of an action");
  build_sx->add_option("file", file)->required();
  build_sx->add_option("-o,--output", out, "write the product here");

  auto* build_action = app.add_subcommand("build-action",
                                          "induced action of an etale map");
  build_action->add_option("file", file)->required();
  build_action->add_option("-o,--output", out, "write the action here");

  auto* roundtrip = app.add_subcommand("roundtrip", "equivalence round trips");
  roundtrip->add_option("mode", mode)
      ->required()
      ->check(CLI::IsMember({"action", "etale"}));
  roundtrip->add_option("file", file)->required();

  std::string family, find_stars_path, base_path;
  std::vector<int> params;
  unsigned seed = 0;
  long long budget = 46656;
  auto* gen = app.add_subcommand("gen", "generate example structures");
  gen->add_option("family", family,
                  "right_zero|chain|cyclic|right_group|symmetric_inverse_monoid|"
                  "brandt|conjugation|left_regular|orbit|random");
  gen->add_option("--params", params, "family parameters")->delimiter(',');
  gen->add_option("--seed", seed, "randomness seed");
  gen->add_option("--find-stars", find_stars_path,
                  "enumerate stars of this semigroup instead");
  gen->add_option("--budget", budget, "enumeration budget for --find-stars");
  gen->add_option("--base", base_path, "base semigroup for action families");
  gen->add_option("-o,--output", out, "write the artifact here");

  int max_n = 6;
  unsigned suite_seed = 7;
  bool inject = false;
  auto* suite = app.add_subcommand("suite", "run the acceptance property suite");
  suite->add_option("--max-n", max_n, "corpus size bound");
  suite->add_option("--seed", suite_seed, "corpus seed");
  suite->add_flag("--inject", inject)->group("");  // test hook, hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage message to standard error
    return 2;
  }

  try {
    if (validate->parsed()) return run_validate(file, cap, start);
    if (classify->parsed()) return run_classify(file, cap, start);
    if (green->parsed()) return run_green(file, cap, start);
    if (order->parsed()) return run_order(file, cap, start);
    if (star_check->parsed()) return run_star_check(file, cap, start);
    if (gamma->parsed()) return run_gamma(file, quotient_out, cap, start);
    if (coordinatize->parsed()) return run_coordinatize(file, cap, start);
    if (lcover->parsed()) return run_lcover(file, cap, start);
    if (action_check->parsed()) return run_action_check(file, cap, start);
    if (etale_check->parsed()) return run_etale_check(file, cap, start);
    if (build_sx->parsed()) return run_build_sx(file, out, cap, start);
    if (build_action->parsed()) return run_build_action(file, out, cap, start);
    if (roundtrip->parsed()) return run_roundtrip(mode, file, cap, start);
    if (gen->parsed())
      return run_gen(family, params, seed, find_stars_path, budget, base_path,
                     out, cap, start);
    if (suite->parsed()) return run_suite_cmd(max_n, suite_seed, inject, start);
  } catch (const sgt::falsification_error& e) {
    Report rep("error");
    rep.error(e.what());
    rep.witness(e.witness(), e.property());
    std::cerr << e.what() << "\n";
    rep.finish(start);
    return 3;
  } catch (const sgt::invalid_input& e) {
    Report rep("error");
    rep.error(e.what());
    rep.witness(e.witness());
    std::cerr << e.what() << "\n";
    rep.finish(start);
    return 2;
  } catch (const sgt::precondition_error& e) {
    Report rep("error");
    rep.error(e.what());
    rep.witness(e.witness());
    std::cerr << e.what() << "\n";
    rep.finish(start);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable: require_subcommand guarantees a dispatch
}
