#ifndef JOINTINV_CLI_HPP
#define JOINTINV_CLI_HPP

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "jointinv/discretize.hpp"
#include "jointinv/errors.hpp"
#include "jointinv/field_generators.hpp"
#include "jointinv/identities.hpp"
#include "jointinv/invariants.hpp"
#include "jointinv/io.hpp"
#include "jointinv/normal_form.hpp"
#include "jointinv/symmetric.hpp"
#include "jointinv/variants.hpp"

namespace jointinv::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kInput = 2, kUsage = 64 };

using io::json;

namespace detail {

inline void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

inline json tuples_json(const std::vector<std::pair<IndexTuple, Rat>>& vals) {
  json out = json::array();
  for (const auto& [idx, v] : vals) out.push_back(json{{"indices", idx}, {"value", io::to_json(v)}});
  return out;
}

// ---------------------------------------------------------------------------

inline int cmd_invariants(const std::string& path, std::ostream& out) {
  const PointConfig c = io::config_from_json(io::read_json_file(path));
  const GramTable g = gram(c);
  json j{{"n", c.n()}, {"m", c.m()}, {"gram", io::to_json(g)}, {"genericity", io::to_json(genericity(c))}};
  emit(out, j);
  return kOk;
}

inline int cmd_syzygy_check(const std::string& path, bool identities, std::uint64_t seed, std::ostream& out) {
  json j = json::object();
  bool ok = true;
  if (!path.empty()) {
    const json in = io::read_json_file(path);
    const std::size_t n = io::read_n(in);
    GramTable g(0);
    if (in.contains("table")) {
      g = io::table_from_json(in);
      j["input"] = "table";
    } else {
      g = gram(io::config_from_json(in));
      j["input"] = "points";
    }
    if (g.m() > 16) throw CostGuardError("syzygy-check supports m <= 16");
    j["n"] = n;
    j["m"] = g.m();

    std::vector<std::pair<IndexTuple, Rat>> bad_b;
    const auto all_b = all_min_syzygies(g, n);
    for (const auto& e : all_b)
      if (e.second != 0) bad_b.push_back(e);
    j["syzygies"] = json{{"checked", all_b.size()}, {"nonzero", tuples_json(bad_b)}};

    std::vector<std::pair<IndexTuple, Rat>> bad_q;
    std::size_t q_checked = 0;
    for_each_subset(g.m(), 4 * n + 2, [&](const IndexTuple& idx) {
      ++q_checked;
      const Rat v = q_value(g, idx);
      if (v != 0) bad_q.emplace_back(idx, v);
    });
    j["q"] = json{{"checked", q_checked}, {"nonzero", tuples_json(bad_q)}};
    ok = bad_b.empty() && bad_q.empty();
  }
  if (identities) {
    json ids = json::array();
    for (const auto& r : identity_suite(seed)) {
      ids.push_back(json{{"name", r.name}, {"pass", r.holds}});
      ok = ok && r.holds;
    }
    j["identities"] = ids;
  }
  j["pass"] = ok;
  emit(out, j);
  return ok ? kOk : kFailed;
}

inline int cmd_equiv(const std::string& pa, const std::string& pb, const std::string& group_name, bool unordered,
                     std::ostream& out) {
  const Group group = parse_group(group_name);
  const json ja = io::read_json_file(pa);
  const json jb = io::read_json_file(pb);
  json j{{"group", to_string(group)}};

  try {
    if (group == Group::Contact) {
      if (unordered) throw InputError("--unordered is not available for the contact group");
      const ContactConfig a = io::contact_from_json(ja);
      const ContactConfig b = io::contact_from_json(jb);
      const bool eq = contact_equivalent(a, b);
      j["equivalent"] = eq;
      j["signatures"] = json{{"a", io::to_json(signature(a))}, {"b", io::to_json(signature(b))}};
      emit(out, j);
      return eq ? kOk : kFailed;
    }

    const PointConfig a = io::config_from_json(ja);
    PointConfig b = io::config_from_json(jb);
    if (a.n() != b.n() || a.m() != b.m()) throw InputError("configurations differ in (n, m)");
    bool eq = false;
    if (unordered) {
      if (a.m() > 6) throw CostGuardError("--unordered supports m <= 6");
      auto perm = jointinv::detail::identity_order(b.m());
      std::optional<GenericityError> last;
      bool any_generic = false;
      do {
        try {
          if (equivalent(a, permute(b, perm), group)) {
            eq = true;
            b = permute(b, perm);
            j["permutation"] = perm;
            break;
          }
          any_generic = true;
        } catch (const GenericityError& e) {
          last = e;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (!eq && !any_generic && last) throw *last;
    } else {
      eq = equivalent(a, b, group);
    }
    j["equivalent"] = eq;
    json sigs = json::object();
    try {
      sigs["a"] = io::to_json(signature(a, group));
      sigs["b"] = io::to_json(signature(b, group));
    } catch (const GenericityError&) {
      // a fallback ordering decided the question; signatures in input order are undefined
    }
    j["signatures"] = sigs;
    if (eq && group == Group::Sp && a.m() >= 2 * a.n()) j["witness"] = io::to_json(recover_transform(a, b));
    emit(out, j);
    return eq ? kOk : kFailed;
  } catch (const GenericityError& e) {
    j["equivalent"] = nullptr;
    j["error"] = e.what();
    j["predicate"] = e.predicate();
    emit(out, j);
    throw;
  }
}

inline int cmd_symmetrize(std::size_t m, std::size_t n, unsigned maxdeg, std::uint64_t seed, std::ostream& out) {
  const GeneratorSearchResult r = generator_search(m, n, maxdeg, seed);
  json gens = json::array();
  for (const auto& g : r.kept) gens.push_back(json{{"degree", g.degree}, {"polynomial", g.poly.str()}});
  json j{{"m", m},
         {"n", n},
         {"maxdeg", maxdeg},
         {"graded_dims", r.graded_dims},
         {"product_dims", r.product_dims},
         {"saturated", r.saturated()},
         {"generators", gens}};
  if (m == 3) j["poincare"] = poincare_coeffs(maxdeg);
  j["R8"] = verify_R8();
  emit(out, j);
  return kOk;
}

inline int cmd_dims(std::size_t max_m, std::size_t max_n, std::uint64_t seed, std::ostream& out) {
  if (max_m < 1 || max_n < 1) throw InputError("--max-m and --max-n must be positive");
  if (max_m > 12 || max_n > 4) throw CostGuardError("dims supports --max-m <= 12 and --max-n <= 4");
  std::mt19937_64 rng(seed);
  out << std::setw(3) << "n" << std::setw(4) << "m" << std::setw(8) << "d" << std::setw(8) << "b_bar" << std::setw(8)
      << "stab" << "\n";
  for (std::size_t n = 1; n <= max_n; ++n)
    for (std::size_t m = 1; m <= max_m; ++m) {
      const PointConfig c = random_config(m, n, rng, 20);
      out << std::setw(3) << n << std::setw(4) << m << std::setw(8) << dim_d(m, n) << std::setw(8)
          << dim_contact(m, n) << std::setw(8) << stabilizer_dim(c.points(), n) << "\n";
    }
  return kOk;
}

inline std::vector<double> parse_list(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("cannot parse number '" + item + "'");
    }
  }
  return v;
}

inline json report_json(const discrete::ConvergenceReport& r) {
  json rows = json::array();
  for (std::size_t i = 0; i < r.steps.size(); ++i)
    rows.push_back(json{{"h", r.steps[i]}, {"estimate", r.estimates[i]}, {"error", r.errors[i]}});
  json j{{"target", r.target}, {"rows", rows}};
  j["order"] = r.exact ? json("exact") : (r.order ? json(*r.order) : json(nullptr));
  j["final_relative_error"] = r.final_relative_error;
  j["pass"] = r.pass();
  return j;
}

inline int cmd_discretize(const std::string& which, std::string curve, std::string at, const std::string& steps_text,
                          double eps_ratio, const std::string& csv_path, std::ostream& out) {
  using namespace discrete;
  const std::vector<double> steps = steps_text.empty() ? default_steps() : parse_list(steps_text);
  validate_steps(steps);
  if (!(eps_ratio > 0)) throw InputError("--eps-ratio must be positive");
  std::vector<std::pair<std::string, ConvergenceReport>> reports;

  if (which == "planar-i2") {
    if (curve.empty()) curve = "parabola";
    if (at.empty()) at = "1";
    const auto c = planar_curve(curve);
    const double x = parse_list(at).at(0);
    reports.emplace_back("I2/2", convergence_order([&](double h) { return planar_I2_estimate(c, x, h, eps_ratio * h); },
                                                   planar_I2_target(c, x), steps));
  } else if (which == "general-i2" || which == "derivation") {
    if (curve.empty()) curve = "quartic";
    if (at.empty()) at = "1";
    const auto c = space_curve(curve);
    const double t = parse_list(at).at(0);
    if (which == "general-i2")
      reports.emplace_back("2*I2",
                           convergence_order([&](double h) { return general_I2_estimate(c, t, h, eps_ratio * h); },
                                             general_I2_target(c, t), steps));
    else
      reports.emplace_back("2*nabla", convergence_order([&](double h) { return derivation_estimate(c, t, h); },
                                                        derivation_target(c, t), steps));
  } else if (which == "contact") {
    if (curve.empty()) curve = "cubic";
    if (at.empty()) at = "1";
    const auto c = contact_curve(curve);
    const double x = parse_list(at).at(0);
    const auto t = contact_targets(c, x);
    auto est = [&](double h) { return contact_estimates(c, x, h, eps_ratio * h); };
    reports.emplace_back("I1", convergence_order([&](double h) { return est(h).i1; }, t.i1, steps));
    reports.emplace_back("I2", convergence_order([&](double h) { return est(h).i2; }, t.i2, steps));
    reports.emplace_back("nabla", convergence_order([&](double h) { return est(h).grad; }, t.grad, steps));
  } else if (which == "function") {
    if (curve.empty()) curve = "wave";
    if (at.empty()) at = "1,2";
    const auto s = surface(curve);
    const auto p = parse_list(at);
    if (p.size() != 2) throw InputError("--at for the function case takes \"x,y\"");
    const auto t = function_targets(s, p[0], p[1]);
    auto est = [&](double h) { return function_estimates(s, p[0], p[1], h, eps_ratio * h); };
    reports.emplace_back("I1", convergence_order([&](double h) { return est(h).i1; }, t.i1, steps));
    reports.emplace_back("nabla1", convergence_order([&](double h) { return est(h).grad1; }, t.grad1, steps));
    reports.emplace_back("nabla2", convergence_order([&](double h) { return est(h).grad2; }, t.grad2, steps));
    reports.emplace_back("I2c", convergence_order([&](double h) { return est(h).i2c; }, t.i2c, steps));
  } else {
    throw InputError("unknown --case '" + which + "'");
  }

  json reps = json::object();
  bool pass = true;
  for (const auto& [name, r] : reports) {
    reps[name] = report_json(r);
    pass = pass && r.pass();
  }
  emit(out, json{{"case", which}, {"curve", curve}, {"at", at}, {"eps_ratio", eps_ratio}, {"reports", reps},
                 {"pass", pass}});

  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) throw InputError("cannot write '" + csv_path + "'");
    csv << std::setprecision(17) << "quantity,h,estimate,error\n";
    for (const auto& [name, r] : reports)
      for (std::size_t i = 0; i < r.steps.size(); ++i)
        csv << name << "," << r.steps[i] << "," << r.estimates[i].front() << "," << r.errors[i] << "\n";
  }
  return kOk;
}

}  // namespace detail

/// Parses argv and dispatches. JSON reports go to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Joint invariants of point configurations under symplectic groups"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "seed for every randomized choice");

  std::string cfg_path, cfg_b;
  auto* inv = app.add_subcommand("invariants", "Gram table and genericity report");
  inv->add_option("config", cfg_path, "configuration JSON")->required();

  bool identities = false;
  std::string syz_path;
  auto* syz = app.add_subcommand("syzygy-check", "evaluate syzygies on an input and/or run the identity suite");
  syz->add_option("config", syz_path, "configuration or table JSON");
  syz->add_flag("--identities", identities, "run the symbolic identity suite");

  std::string group = "sp";
  bool unordered = false;
  std::string eq_a, eq_b;
  auto* eqv = app.add_subcommand("equiv", "decide equivalence of two configurations");
  eqv->add_option("a", eq_a, "first configuration JSON")->required();
  eqv->add_option("b", eq_b, "second configuration JSON")->required();
  eqv->add_option("--group", group, "sp|csp|asp|contact");
  eqv->add_flag("--unordered", unordered, "search over point permutations (m <= 6)");

  std::size_t sm = 3, sn = 1;
  unsigned maxdeg = 8;
  auto* sym = app.add_subcommand("symmetrize", "S_m-symmetric invariants by degree");
  sym->add_option("--m", sm, "number of points");
  sym->add_option("--n", sn, "half-dimension");
  sym->add_option("--maxdeg", maxdeg, "largest degree scanned");

  std::size_t max_m = 6, max_n = 2;
  auto* dims = app.add_subcommand("dims", "table of transcendence degrees and stabilizer dimensions");
  dims->add_option("--max-m", max_m);
  dims->add_option("--max-n", max_n);

  std::string dcase = "planar-i2", curve, at, steps, csv;
  double eps_ratio = 1.0;
  bool asymmetric = false;
  auto* disc = app.add_subcommand("discretize", "convergence of discrete joint-invariant estimators");
  disc->add_option("--case", dcase, "planar-i2|general-i2|derivation|contact|function");
  disc->add_option("--curve", curve, "named test curve or surface");
  disc->add_option("--at", at, "base point (x, or x,y for surfaces)");
  disc->add_option("--steps", steps, "comma-separated step sizes, decreasing by factors >= 2");
  disc->add_option("--eps-ratio", eps_ratio, "eps = ratio * delta");
  disc->add_flag("--asymmetric", asymmetric, "shorthand for --eps-ratio 1.7");
  disc->add_option("--csv", csv, "also write (h, estimate, error) rows to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    if (app.get_subcommands().empty()) err << app.help();
    return kUsage;
  }

  try {
    if (inv->parsed()) return detail::cmd_invariants(cfg_path, out);
    if (syz->parsed()) {
      if (syz_path.empty() && !identities) {
        err << "usage error: syzygy-check needs a configuration file and/or --identities\n";
        return kUsage;
      }
      return detail::cmd_syzygy_check(syz_path, identities, seed, out);
    }
    if (eqv->parsed()) return detail::cmd_equiv(eq_a, eq_b, group, unordered, out);
    if (sym->parsed()) return detail::cmd_symmetrize(sm, sn, maxdeg, seed, out);
    if (dims->parsed()) return detail::cmd_dims(max_m, max_n, seed, out);
    if (disc->parsed()) return detail::cmd_discretize(dcase, curve, at, steps, asymmetric ? 1.7 : eps_ratio, csv, out);
  } catch (const GenericityError& e) {
    err << e.what() << "\n";
    return kInput;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kInput;
  }
  return kUsage;
}

}  // namespace jointinv::cli

#endif  // JOINTINV_CLI_HPP
