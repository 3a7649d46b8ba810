// Command line front end: parses monodromy words and fibration files, runs
// the exact computations, and prints deterministic text or JSON.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "meyersig/meyersig.hpp"

using ojson = nlohmann::ordered_json;
using namespace meyersig;

namespace {

struct Envelope {
  std::string command;
  ojson inputs = ojson::object();
  ojson results = ojson::object();
  std::vector<std::string> warnings;
};

ojson json_int(const Int& v) {
  if (v.fits_slong_p()) return ojson(v.get_si());
  return ojson(v.get_str());  // too large for a JSON number; keep exact
}

std::string rat_str(const Rat& q) { return q.get_str(); }

void print_flat_object(const ojson& obj) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const ojson& v = it.value();
    std::cout << it.key() << " = ";
    if (v.is_string())
      std::cout << v.get<std::string>();
    else if (v.is_boolean())
      std::cout << (v.get<bool>() ? "true" : "false");
    else
      std::cout << v.dump();
    std::cout << "\n";
  }
}

void emit(const Envelope& env, bool json_mode) {
  if (json_mode) {
    ojson j;
    j["command"] = env.command;
    j["inputs"] = env.inputs;
    j["results"] = env.results;
    j["warnings"] = env.warnings;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "command = " << env.command << "\n";
    print_flat_object(env.inputs);
    print_flat_object(env.results);
    for (const std::string& w : env.warnings) std::cout << "warning: " << w << "\n";
  }
}

void add_report(Envelope& env, const bounds::BoundReport& r) {
  env.results["chi"] = json_int(r.chi);
  env.results["sigma_upper_closed"] = json_int(r.sigma_upper_closed);
  env.results["b2_minus_lower"] = json_int(r.b2.b2_minus_lower);
  env.results["b2_plus_lower"] = rat_str(r.b2.b2_plus_lower);
  if (r.b2.vacuous)
    env.warnings.push_back(
        "b2_minus_lower is vacuous for s = 0 (only the fiber class contributes)");
  env.results["degree"] = json_int(r.chain.degree);
  env.results["k2_upper"] = json_int(r.chain.k2_upper);
  env.results["genus_sigma_upper"] = json_int(r.chain.genus_sigma_upper);
  env.results["kneser_lower"] = json_int(r.chain.kneser_lower);
  for (const bounds::BoundEntry& e : r.entries) {
    env.results[e.name] = json_int(e.bound);
    env.results[e.name + "_satisfied"] = e.satisfied;
  }
  env.results["verdict"] = bounds::to_string(r.verdict);
  if (!r.failing.empty()) env.results["failing"] = r.failing;
}

wordlang::FibrationFile load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  return wordlang::parse_fibration_file(in);
}

int run_meyer(int genus, const std::string& a, const std::string& b, bool json) {
  const auto wa = wordlang::parse_word(a, genus, wordlang::WordPart::Flat);
  const auto wb = wordlang::parse_word(b, genus, wordlang::WordPart::Flat);
  const auto value =
      meyer::meyer_cocycle(fibration::monodromy_image(wa), fibration::monodromy_image(wb));
  Envelope env;
  env.command = "meyer";
  env.inputs["genus"] = genus;
  env.inputs["a"] = a;
  env.inputs["b"] = b;
  env.results["tau"] = value.value;
  env.results["dim_v"] = value.dim_v;
  emit(env, json);
  return 0;
}

int run_signature(const std::string& path, bool json, bool strict) {
  const wordlang::FibrationFile file = load_file(path);
  const fibration::FibrationData data = fibration::from_file(file);
  const int s = data.separating_count();
  const int n = data.nonseparating_count();
  const Int sigma_disk = fibration::signature_over_disk(file.word);

  Envelope env;
  env.command = "signature";
  env.inputs["file"] = path;
  env.results["fiber_genus"] = data.fiber_genus;
  env.results["base_genus"] = data.base_genus;
  env.results["s"] = s;
  env.results["n"] = n;
  env.results["chi"] = json_int(fibration::euler_characteristic(data));
  env.results["sigma_disk"] = json_int(sigma_disk);
  env.results["sigma_le_n_minus_s"] = (sigma_disk <= Int(n) - Int(s));

  int exit_code = 0;
  if (data.fiber_genus >= 2 && data.base_genus >= 1) {
    const bounds::BoundReport report = bounds::check(data);
    add_report(env, report);
    if (strict && report.verdict == bounds::Verdict::NoSuchFibration) exit_code = 1;
  } else {
    env.warnings.push_back(
        "bound report skipped: requires fiber genus >= 2 and base genus >= 1");
  }
  emit(env, json);
  return exit_code;
}

int run_bounds(long g, long h, long s, long n, bool torelli, bool json, bool strict) {
  const bounds::BoundReport report = bounds::check(g, h, s, n, torelli);
  Envelope env;
  env.command = "bounds";
  env.inputs["g"] = g;
  env.inputs["h"] = h;
  env.inputs["s"] = s;
  env.inputs["n"] = n;
  env.inputs["torelli"] = torelli;
  add_report(env, report);
  emit(env, json);
  return strict && report.verdict == bounds::Verdict::NoSuchFibration ? 1 : 0;
}

int run_scl(long genus, const std::string& flavor_name, long power, long factors,
            bool have_power, bool have_factors, bool json) {
  scl::Flavor flavor;
  if (flavor_name == "full")
    flavor = scl::Flavor::Full;
  else if (flavor_name == "hyperelliptic")
    flavor = scl::Flavor::Hyperelliptic;
  else if (flavor_name == "torelli")
    flavor = scl::Flavor::Torelli;
  else if (flavor_name == "torelli-refined")
    flavor = scl::Flavor::TorelliRefined;
  else
    throw Error("unknown flavor '" + flavor_name +
                "' (expected full, hyperelliptic, torelli or torelli-refined)");

  Envelope env;
  env.command = "scl";
  env.inputs["genus"] = genus;
  env.inputs["flavor"] = flavor_name;

  scl::SclQuery query{genus, flavor, 1};
  if (flavor == scl::Flavor::Full) {
    if (have_power) query.factors = power;
    if (have_factors) query.factors = factors;
    env.inputs["factors"] = json_int(query.factors);
    env.results["element"] = "product of " + query.factors.get_str() +
                             " separating Dehn twist" +
                             (query.factors == 1 ? "" : "s");
  } else {
    if (have_power || have_factors)
      env.warnings.push_back("the element is fixed for this flavor; --power/--factors ignored");
    if (flavor == scl::Flavor::Hyperelliptic) {
      const Int ord = scl::abelianization_order_hyperelliptic(genus);
      env.results["element"] = "t_a^" + ord.get_str();
      env.results["abelianization_order"] = json_int(ord);
    } else {
      env.results["element"] = "t_a^2";
    }
  }
  env.results["scl_lower"] = rat_str(scl::scl_lower(query));
  emit(env, json);
  return 0;
}

int run_commutators(long genus, long power, bool json) {
  const Int n = scl::commutator_count_lower(genus, power);
  Envelope env;
  env.command = "commutators";
  env.inputs["genus"] = genus;
  env.inputs["power"] = power;
  env.results["min_commutators"] = json_int(n);
  emit(env, json);
  return 0;
}

int run_verify(const std::string& path, bool json, bool strict) {
  const wordlang::FibrationFile file = load_file(path);
  const fibration::FibrationData data = fibration::from_file(file);
  const bool consistent = fibration::sp_consistency(data);
  Envelope env;
  env.command = "verify";
  env.inputs["file"] = path;
  env.results["fiber_genus"] = data.fiber_genus;
  env.results["base_genus"] = data.base_genus;
  env.results["s"] = data.separating_count();
  env.results["n"] = data.nonseparating_count();
  env.results["flat_pairs"] = static_cast<long>(data.flat_pairs.size());
  env.results["consistent"] = consistent;
  emit(env, json);
  return strict && !consistent ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Meyer-cocycle signatures and separating-fiber bounds "
               "for Lefschetz fibrations"};
  app.require_subcommand(1);
  int exit_code = 0;

  // meyer
  {
    auto* sub = app.add_subcommand("meyer", "Evaluate the Meyer cocycle on two words");
    auto genus = std::make_shared<int>(1);
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    auto json = std::make_shared<bool>(false);
    sub->add_option("--genus", *genus, "fiber genus h >= 1")->required();
    sub->add_option("--a", *a, "first word (flat syntax allowed)");
    sub->add_option("--b", *b, "second word (flat syntax allowed)");
    sub->add_flag("--json", *json, "emit JSON");
    sub->callback([=, &exit_code] { exit_code = run_meyer(*genus, *a, *b, *json); });
  }

  // signature
  {
    auto* sub = app.add_subcommand("signature",
                                   "Invariants of a fibration file: chi, disk "
                                   "signature, bound report");
    auto path = std::make_shared<std::string>();
    auto json = std::make_shared<bool>(false);
    auto strict = std::make_shared<bool>(false);
    sub->add_option("--file", *path, "fibration description file")->required();
    sub->add_flag("--json", *json, "emit JSON");
    sub->add_flag("--strict", *strict, "exit 1 on a NoSuchFibration verdict");
    sub->callback([=, &exit_code] { exit_code = run_signature(*path, *json, *strict); });
  }

  // bounds
  {
    auto* sub = app.add_subcommand("bounds", "Separating-fiber bound report for (g, h, s, n)");
    sub->set_help_flag("--help", "print help");  // frees -h for the fiber genus
    auto g = std::make_shared<long>(0);
    auto h = std::make_shared<long>(0);
    auto s = std::make_shared<long>(0);
    auto n = std::make_shared<long>(0);
    auto torelli = std::make_shared<bool>(false);
    auto json = std::make_shared<bool>(false);
    auto strict = std::make_shared<bool>(false);
    sub->add_option("--g", *g, "base genus")->required();
    sub->add_option("--h", *h, "fiber genus")->required();
    sub->add_option("--s", *s, "separating singular fibers")->required();
    sub->add_option("--n", *n, "nonseparating singular fibers")->required();
    sub->add_flag("--torelli", *torelli, "also check the Torelli-monodromy bound");
    sub->add_flag("--json", *json, "emit JSON");
    sub->add_flag("--strict", *strict, "exit 1 on a NoSuchFibration verdict");
    sub->callback([=, &exit_code] {
      exit_code = run_bounds(*g, *h, *s, *n, *torelli, *json, *strict);
    });
  }

  // scl
  {
    auto* sub = app.add_subcommand("scl", "Stable-commutator-length lower bounds");
    auto genus = std::make_shared<long>(0);
    auto flavor = std::make_shared<std::string>("full");
    auto power = std::make_shared<long>(1);
    auto factors = std::make_shared<long>(1);
    auto json = std::make_shared<bool>(false);
    sub->add_option("--genus", *genus, "fiber genus h >= 2")->required();
    sub->add_option("--flavor", *flavor,
                    "full | hyperelliptic | torelli | torelli-refined");
    auto* opt_power = sub->add_option("--power", *power, "twist power k (full flavor)");
    auto* opt_factors =
        sub->add_option("--factors", *factors, "separating twist factors (full flavor)");
    opt_power->excludes(opt_factors);
    sub->add_flag("--json", *json, "emit JSON");
    sub->callback([=, &exit_code] {
      exit_code = run_scl(*genus, *flavor, *power, *factors,
                          opt_power->count() > 0, opt_factors->count() > 0, *json);
    });
  }

  // commutators
  {
    auto* sub = app.add_subcommand(
        "commutators", "Minimal commutator count for a separating twist power");
    auto genus = std::make_shared<long>(0);
    auto power = std::make_shared<long>(1);
    auto json = std::make_shared<bool>(false);
    sub->add_option("--genus", *genus, "fiber genus h >= 2")->required();
    sub->add_option("--power", *power, "twist power k >= 1")->required();
    sub->add_flag("--json", *json, "emit JSON");
    sub->callback(
        [=, &exit_code] { exit_code = run_commutators(*genus, *power, *json); });
  }

  // verify
  {
    auto* sub = app.add_subcommand(
        "verify", "Sp-consistency of the monodromy data in a fibration file");
    auto path = std::make_shared<std::string>();
    auto json = std::make_shared<bool>(false);
    auto strict = std::make_shared<bool>(false);
    sub->add_option("--file", *path, "fibration description file")->required();
    sub->add_flag("--json", *json, "emit JSON");
    sub->add_flag("--strict", *strict, "exit 1 when inconsistent");
    sub->callback([=, &exit_code] { exit_code = run_verify(*path, *json, *strict); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "meyersig: error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "meyersig: error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
