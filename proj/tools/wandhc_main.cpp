// Command-line front end: solves the period-2 boundary-law system for the
// wand hard-core model, reports critical activities, bifurcation curves,
// extremality checks, finite-tree consistency and chain sampling, as JSON
// or CSV on standard output.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wandhc/serialize.hpp"

namespace {

using nlohmann::json;
using namespace wandhc;

struct RangeSpec {
  double a = 0.05;
  double b = 10.0;
  int n = 2000;
};

RangeSpec parse_range(const std::string& text) {
  RangeSpec r;
  char colon1 = 0, colon2 = 0;
  std::istringstream in(text);
  if (!(in >> r.a >> colon1 >> r.b >> colon2 >> r.n) || colon1 != ':' ||
      colon2 != ':' || !in.eof())
    throw CLI::ValidationError("--range", "expected a:b:n, got '" + text + "'");
  return r;
}

PsiVariant parse_psi_variant(const std::string& text) {
  if (text == "corrected") return PsiVariant::corrected;
  if (text == "as_printed") return PsiVariant::as_printed;
  throw CLI::ValidationError("--psi-variant",
                             "expected corrected|as_printed, got '" + text + "'");
}

void print_double(double v) { std::printf("%.17g", v); }

// Solved law for the requested measure at (k, lambda). mu1 puts the larger
// cycle component on even levels, mu2 the smaller, nu0 is the symmetric
// translation-invariant point.
PeriodicState law_for_measure(int k, double lambda, const std::string& measure) {
  if (measure == "nu0") {
    const double xi = solve_ti_symmetric(ScalarMapSpec(k, lambda));
    return {xi, xi, xi, xi};
  }
  std::optional<TwoCycle> cycle;
  if (k == 2)
    cycle = closed_form_k2(lambda);
  else if (k == 3) {
    const auto pairs = solve_k3_parametrized(lambda);
    if (!pairs.empty()) cycle = pairs.front();
  } else {
    cycle = solve_two_cycle(ScalarMapSpec(k, lambda));
  }
  if (!cycle)
    throw std::domain_error("no two-periodic measure exists at this activity");
  const double hi = std::max(cycle->z, cycle->t);
  const double lo = std::min(cycle->z, cycle->t);
  const double even = measure == "mu1" ? hi : lo;
  const double odd = measure == "mu1" ? lo : hi;
  return {odd, odd, even, even};
}

int run_critical(int k, const std::string& format) {
  const CriticalValue value{k, lambda_critical(k), CriticalSource::formula};
  if (format == "csv") {
    std::printf("k,lambda_cr,source\n%d,", value.k);
    print_double(value.lambda_cr);
    std::printf(",%s\n", to_string(value.source));
  } else {
    std::cout << json(value).dump() << "\n";
  }
  return 0;
}

int run_solve(int k, double lambda, std::uint64_t seed, const std::string& format) {
  const auto records = solve_full_4d(k, lambda, default_seed_grid(seed));
  if (format == "csv") {
    std::printf("t1,t2,z1,z2,tag,kind,k,lambda,residual,method\n");
    for (const auto& r : records) {
      print_double(r.state.t1); std::printf(",");
      print_double(r.state.t2); std::printf(",");
      print_double(r.state.z1); std::printf(",");
      print_double(r.state.z2);
      std::printf(",%s,%s,%d,", to_string(r.tag), to_string(r.kind), r.k);
      print_double(r.lambda); std::printf(",");
      print_double(r.residual);
      std::printf(",%s\n", to_string(r.method));
    }
  } else {
    std::cout << json(records).dump() << "\n";
  }
  return 0;
}

int run_curves(const std::string& which, const RangeSpec& range,
               PsiVariant variant, const std::string& format) {
  std::set<std::string> fields;
  std::stringstream ss(which);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item != "phi" && item != "psi")
      throw CLI::ValidationError("--which", "expected phi and/or psi");
    fields.insert(item);
  }
  if (fields.empty()) throw CLI::ValidationError("--which", "no curves selected");
  const auto samples = sample_curves(range.a, range.b, range.n, variant);
  const bool phi = fields.count("phi") > 0;
  const bool psi = fields.count("psi") > 0;
  if (format == "json") {
    json rows = json::array();
    for (const auto& s : samples) {
      json row{{"x", s.x}};
      if (phi) row["phi_cubed"] = s.phi_cubed;
      if (psi) row["psi_cubed"] = s.psi_cubed;
      rows.push_back(std::move(row));
    }
    std::cout << rows.dump() << "\n";
    return 0;
  }
  std::printf("x%s%s\n", phi ? ",phi_cubed" : "", psi ? ",psi_cubed" : "");
  for (const auto& s : samples) {
    print_double(s.x);
    if (phi) { std::printf(","); print_double(s.phi_cubed); }
    if (psi) { std::printf(","); print_double(s.psi_cubed); }
    std::printf("\n");
  }
  return 0;
}

int run_intersections(PsiVariant variant, const std::string& format) {
  const auto roots = find_curve_intersections(variant);
  const char* name = variant == PsiVariant::corrected ? "corrected" : "as_printed";
  if (format == "csv") {
    std::printf("x,phi,psi\n");
    for (const double x : roots) {
      print_double(x); std::printf(",");
      print_double(phi_k3(x)); std::printf(",");
      print_double(psi_k3(x, variant)); std::printf("\n");
    }
  } else {
    json j{{"psi_variant", name}, {"roots", roots}};
    std::cout << j.dump() << "\n";
  }
  return 0;
}

int run_extremality(int k, double lambda, const std::string& measure,
                    const std::string& format) {
  if (measure == "nu0")
    throw std::domain_error(
        "extremality of the translation-invariant measure is out of scope");
  auto reports = analyze(k, lambda);
  if (!measure.empty()) {
    // mu1 is the z > t report, mu2 the swap.
    const std::size_t index = measure == "mu1" ? 0 : 1;
    if (reports.size() > index)
      reports = {reports[index]};
    else
      reports.clear();
  }
  if (format == "csv") {
    std::printf(
        "k,lambda,z,t,s2,ks_value,ks_nonextremal,kappa,gamma,msw_value,"
        "msw_extremal,verdict\n");
    for (const auto& r : reports) {
      std::printf("%d,", r.k);
      for (const double v : {r.lambda, r.z, r.t, r.s2, r.ks_value}) {
        print_double(v); std::printf(",");
      }
      std::printf("%s,", r.ks_nonextremal ? "true" : "false");
      for (const double v : {r.kappa, r.gamma, r.msw_value}) {
        print_double(v); std::printf(",");
      }
      std::printf("%s,%s\n", r.msw_extremal ? "true" : "false",
                  to_string(r.verdict));
    }
  } else {
    std::cout << json(reports).dump() << "\n";
  }
  return 0;
}

int run_verify(int k, double lambda, int depth, const std::string& measure,
               const std::string& format) {
  const PeriodicState law = law_for_measure(k, lambda, measure);
  const ConsistencyResidual res = consistency_residual(k, depth, lambda, law);
  json j{{"k", k},          {"lambda", lambda},
         {"depth", depth},  {"measure", measure},
         {"law", law},      {"max_abs", res.max_abs},
         {"config_count", res.config_count}};
  if (format == "csv") {
    std::printf("k,lambda,depth,measure,max_abs,config_count\n%d,", k);
    print_double(lambda);
    std::printf(",%d,%s,", depth, measure.c_str());
    print_double(res.max_abs);
    std::printf(",%lld\n", res.config_count);
  } else {
    std::cout << j.dump() << "\n";
  }
  return 0;
}

int run_sample(int k, double lambda, int depth, long long reps,
               std::uint64_t seed, const std::string& measure,
               const std::string& format) {
  const PeriodicState law = law_for_measure(k, lambda, measure);
  const auto root = root_law(k, lambda, law);
  const auto table = sample_chain(k, depth, law.z1, law.t1, root, reps, seed);
  if (format == "json") {
    json rows = json::array();
    for (const auto& cell : table)
      rows.push_back(json{{"level", cell.level},
                          {"spin", cell.spin},
                          {"probability", cell.probability},
                          {"stderr", cell.stderr_}});
    std::cout << rows.dump() << "\n";
    return 0;
  }
  std::printf("level,spin,probability,stderr\n");
  for (const auto& cell : table) {
    std::printf("%d,%d,", cell.level, cell.spin);
    print_double(cell.probability);
    std::printf(",");
    print_double(cell.stderr_);
    std::printf("\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Boundary-law solver and analysis toolkit for the three-state "
      "wand hard-core model on Cayley trees"};
  app.require_subcommand(1);

  int k = 2;
  double lambda = 0.5;
  int depth = 2;
  long long reps = 100000;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string which = "phi,psi";
  std::string range_text = "0.05:10:2000";
  std::string psi_variant_text = "corrected";
  std::string measure = "mu1";

  auto* critical = app.add_subcommand("critical", "Critical activity for order k");
  critical->add_option("--k", k, "Cayley tree order")->required();
  critical->add_option("--format", format, "json|csv");

  auto* solve = app.add_subcommand("solve", "All period-2 boundary laws at (k, lambda)");
  solve->add_option("--k", k, "Cayley tree order")->required();
  solve->add_option("--lambda", lambda, "activity")->required();
  solve->add_option("--seed", seed, "seed for the random interior seed points");
  solve->add_option("--format", format, "json|csv");

  auto* curves = app.add_subcommand("curves", "Sample the k=3 bifurcation curves phi^3, psi^3");
  curves->add_option("--which", which, "comma list of phi,psi");
  curves->add_option("--range", range_text, "a:b:n sampling range");
  curves->add_option("--psi-variant", psi_variant_text, "corrected|as_printed");
  curves->add_option("--format", format, "json|csv");

  auto* intersections = app.add_subcommand("intersections", "Crossings of phi and psi");
  intersections->add_option("--psi-variant", psi_variant_text, "corrected|as_printed");
  intersections->add_option("--format", format, "json|csv");

  auto* extremality = app.add_subcommand("extremality", "Kesten-Stigum and contraction checks");
  extremality->add_option("--k", k, "Cayley tree order")->required();
  extremality->add_option("--lambda", lambda, "activity")->required();
  std::string extremality_measure;
  extremality->add_option("--measure", extremality_measure, "mu1|mu2 (default: both)");
  extremality->add_option("--format", format, "json|csv");

  auto* verify = app.add_subcommand("verify", "Finite-tree consistency residual of a solved law");
  verify->add_option("--k", k, "Cayley tree order")->required();
  verify->add_option("--lambda", lambda, "activity")->required();
  verify->add_option("--depth", depth, "tree depth n (>= 2)")->required();
  verify->add_option("--measure", measure, "mu1|mu2|nu0");
  verify->add_option("--format", format, "json|csv");

  auto* sample = app.add_subcommand("sample", "Monte Carlo marginals of the tree-indexed chain");
  sample->add_option("--k", k, "Cayley tree order")->required();
  sample->add_option("--lambda", lambda, "activity")->required();
  sample->add_option("--depth", depth, "tree depth")->required();
  sample->add_option("--reps", reps, "number of replicates");
  sample->add_option("--seed", seed, "RNG seed");
  sample->add_option("--measure", measure, "mu1|mu2|nu0");
  sample->add_option("--format", format, "json|csv (default csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (format != "json" && format != "csv")
      throw std::invalid_argument("unknown output format: " + format);
    for (const std::string* m : {&measure, &extremality_measure})
      if (!m->empty() && *m != "mu1" && *m != "mu2" && *m != "nu0")
        throw std::invalid_argument("unknown measure: " + *m);

    if (critical->parsed()) return run_critical(k, format);
    if (solve->parsed()) return run_solve(k, lambda, seed, format);
    if (curves->parsed())
      return run_curves(which, parse_range(range_text),
                        parse_psi_variant(psi_variant_text), format);
    if (intersections->parsed())
      return run_intersections(parse_psi_variant(psi_variant_text), format);
    if (extremality->parsed())
      return run_extremality(k, lambda, extremality_measure, format);
    if (verify->parsed()) return run_verify(k, lambda, depth, measure, format);
    if (sample->parsed()) {
      if (sample->count("--format") == 0) format = "csv";
      return run_sample(k, lambda, depth, reps, seed, measure, format);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
