// Command-line front end: expression-driven computations in the algebraic
// model, Burnside calculus, the hom table, and the invariant suites.

#include "padic/checks.hpp"
#include "padic/expr.hpp"
#include "padic/json_io.hpp"

#include "CLI11.hpp"

#include <iostream>

namespace {

using namespace padic;

constexpr int kExitOk = 0;
constexpr int kExitComputationError = 1;
constexpr int kExitSuiteFailure = 2;

struct Options {
  long p = 2;
  bool json = false;
  unsigned seed = 12345;
  int jmax = 5;
  int kmax = 8;
};

RigidObject eval_arg(const std::string& text, long p) {
  return eval_expr_degree_zero(*parse_expr(text), p);
}

std::string dims_text(const EvSeq& dims) {
  std::string out = "(";
  for (const auto& x : dims.prefix()) out += rational_to_string(x) + ", ";
  out += "tail " + rational_to_string(dims.tail()) + ")";
  return out;
}

int cmd_hom(const Options& opt, const std::string& lhs, const std::string& rhs) {
  HomDescriptor h = hom_space(eval_arg(lhs, opt.p), eval_arg(rhs, opt.p));
  if (opt.json) {
    std::cout << hom_descriptor_to_json(h).dump() << "\n";
  } else {
    std::cout << "stable " << h.stable_dim << ", dev " << dims_text(h.dev_dims)
              << ", free " << dims_text(h.free_dims) << "\n";
  }
  return kExitOk;
}

int cmd_ext(const Options& opt, const std::string& lhs, const std::string& rhs) {
  ExtDescriptor e = ext1(eval_arg(lhs, opt.p), eval_arg(rhs, opt.p));
  if (opt.json) {
    std::cout << ext_descriptor_to_json(e).dump() << "\n";
  } else {
    std::cout << "W_dim " << e.w_dim() << ", V_dim " << e.v_dim() << ", zero "
              << (e.zero() ? "true" : "false") << "\n";
  }
  return kExitOk;
}

int cmd_maps(const Options& opt, const std::string& lhs, const std::string& rhs, int d) {
  GradedRigid x = eval_expr(*parse_expr(lhs), opt.p);
  GradedRigid y = eval_expr(*parse_expr(rhs), opt.p);
  AdamsMaps maps = adams_maps(x, y, d);
  if (opt.json) {
    std::cout << adams_to_json(maps).dump() << "\n";
    return kExitOk;
  }
  if (maps.hom.empty() && maps.ext.empty()) {
    std::cout << "no contributing degree pairs\n";
    return kExitOk;
  }
  for (const auto& [deg, h] : maps.hom)
    std::cout << "degree " << deg << " hom: stable " << h.stable_dim << ", dev "
              << dims_text(h.dev_dims) << ", free " << dims_text(h.free_dims) << "\n";
  for (const auto& [deg, e] : maps.ext)
    std::cout << "degree " << deg << " ext: W_dim " << e.w_dim() << ", V_dim "
              << e.v_dim() << (e.zero() ? " (zero)" : "") << "\n";
  return kExitOk;
}

int cmd_tensor(const Options& opt, const std::string& lhs, const std::string& rhs) {
  RigidObject t = tensor(eval_arg(lhs, opt.p), eval_arg(rhs, opt.p));
  if (opt.json) {
    std::cout << rigid_to_json(t).dump() << "\n";
    return kExitOk;
  }
  std::cout << "stab " << t.stab << ", template dim " << t.tmpl.dim() << ", minf dim "
            << t.minf.dim() << "\n";
  for (int k = 0; k < t.stab; ++k)
    std::cout << "level " << k << ": dim " << t.levels[k].dim() << "\n";
  return kExitOk;
}

int cmd_iso(const Options& opt, const std::string& lhs, const std::string& rhs) {
  bool iso = is_isomorphic(eval_arg(lhs, opt.p), eval_arg(rhs, opt.p));
  if (opt.json)
    std::cout << Json{{"isomorphic", iso}}.dump() << "\n";
  else
    std::cout << (iso ? "isomorphic" : "not isomorphic") << "\n";
  return kExitOk;
}

int cmd_mackey(const Options& opt, const std::string& expr, int k) {
  MackeyValueDescriptor d = mackey_components(eval_arg(expr, opt.p), k);
  if (opt.json)
    std::cout << mackey_to_json(d).dump() << "\n";
  else
    std::cout << "k " << d.k << ", inf_dim " << d.inf_dim << ", components "
              << dims_text(d.component_dims) << "\n";
  return kExitOk;
}

int cmd_tomdieck(const Options& opt, int n, int m, int jmax) {
  TomDieckTable t = td_split(opt.p, n, m, jmax);
  if (opt.json) {
    std::cout << tomdieck_to_json(t).dump() << "\n";
    return kExitOk;
  }
  for (int j = n; j <= jmax; ++j)
    std::cout << "j " << j << ": " << t.dim_at(j) << "\n";
  return kExitOk;
}

int cmd_burnside(const Options& opt, const std::string& op,
                 const std::vector<std::string>& args) {
  auto need = [&](size_t count) {
    if (args.size() != count)
      throw std::invalid_argument("burnside " + op + ": expected " +
                                  std::to_string(count) + " argument(s)");
  };
  EvSeq result(opt.p);
  if (op == "e") {
    need(1);
    result = idempotent_e(opt.p, std::stoi(args[0]));
  } else if (op == "f") {
    need(1);
    result = idempotent_f(opt.p, std::stoi(args[0]));
  } else if (op == "one") {
    need(0);
    result = evseq_one(opt.p);
  } else if (op == "add" || op == "mul") {
    need(2);
    EvSeq a = evseq_from_json(Json::parse(args[0]));
    EvSeq b = evseq_from_json(Json::parse(args[1]));
    result = op == "add" ? a + b : a * b;
  } else if (op == "truncate") {
    need(2);
    result = truncate(evseq_from_json(Json::parse(args[0])), std::stoi(args[1]));
  } else if (op == "embed") {
    // Orbit-basis coefficients of an element of A(Z/p^n), n from the count.
    if (args.empty()) throw std::invalid_argument("burnside embed: need coefficients");
    FiniteBurnsideElt x{opt.p, static_cast<int>(args.size()) - 1, {}};
    for (const auto& a : args) x.coeffs.push_back(rational_from_string(a));
    result = colim_embed(x);
  } else {
    throw std::invalid_argument("unknown burnside operation: " + op);
  }
  if (opt.json)
    std::cout << evseq_to_json(result).dump() << "\n";
  else
    std::cout << dims_text(EvSeq(result.p(), result.prefix(), result.tail())) << "\n";
  return kExitOk;
}

struct TableRow {
  std::string name;
  std::string value;
  bool ok;
};

bool dev_concentrated_at(const HomDescriptor& h, int level, long dim) {
  if (h.dev_dims.tail() != 0) return false;
  for (size_t j = 0; j < h.dev_dims.prefix().size(); ++j)
    if (h.dev_dims.at(j) != (static_cast<int>(j) == level ? Rational(dim) : Rational(0)))
      return false;
  return h.dev_dims.at(static_cast<size_t>(level)) == dim;
}

int cmd_table(const Options& opt, int max_index) {
  long p = opt.p;
  auto gen = [&](GenKind k, int n) { return generator(k, n, p); };
  auto is_q_power_stable = [&](const HomDescriptor& h, long dim) {
    return h.stable_dim == dim && h.dev_dims == evseq_zero(p) &&
           h.free_dims == evseq_zero(p);
  };

  std::vector<TableRow> rows;
  {
    HomDescriptor h = hom_space(gen(GenKind::A, 0), gen(GenKind::A, 0));
    rows.push_back({"hom(U, U)", "A(Z_p)",
                    h.stable_dim == 1 && h.dev_dims == evseq_one(p) &&
                        h.free_dims == evseq_zero(p)});
  }
  auto all_indices = [&](const std::string& name, const std::string& value, auto&& pred) {
    bool ok = true;
    for (int n = 0; n <= max_index && ok; ++n) ok = pred(n);
    rows.push_back({name, value, ok});
  };
  all_indices("hom(U, L^n)", "Q", [&](int n) {
    return is_q_power_stable(hom_space(gen(GenKind::A, 0), gen(GenKind::L, n)), 1);
  });
  all_indices("hom(U, E^n)", "Q", [&](int n) {
    HomDescriptor h = hom_space(gen(GenKind::A, 0), gen(GenKind::E, n));
    return h.stable_dim == 0 && dev_concentrated_at(h, n, 1) &&
           h.free_dims == evseq_zero(p);
  });
  all_indices("hom(L^n, U)", "0", [&](int n) {
    return hom_space(gen(GenKind::L, n), gen(GenKind::A, 0)).total_zero();
  });
  all_indices("hom(L^n, L^n)", "Q[Z_p/p^n]", [&](int n) {
    return is_q_power_stable(hom_space(gen(GenKind::L, n), gen(GenKind::L, n)),
                             ipow(p, n));
  });
  {
    bool ok = true;
    for (int n = 0; n <= max_index && ok; ++n)
      for (int m = 0; m <= max_index && ok; ++m)
        ok = hom_space(gen(GenKind::L, n), gen(GenKind::E, m)).total_zero();
    rows.push_back({"hom(L^n, E^m)", "0", ok});
  }
  {
    bool ok = true;
    for (int n = 0; n <= max_index && ok; ++n)
      for (int m = 0; m <= max_index && ok; ++m) {
        if (m == n) continue;
        ok = is_q_power_stable(hom_space(gen(GenKind::L, m), gen(GenKind::L, n)),
                               ipow(p, std::min(m, n)));
      }
    rows.push_back({"hom(L^m, L^n)", "Q[Z_p/p^min(m,n)]", ok});
  }
  all_indices("hom(E^n, U)", "Q", [&](int n) {
    HomDescriptor h = hom_space(gen(GenKind::E, n), gen(GenKind::A, 0));
    return h.stable_dim == 0 && dev_concentrated_at(h, n, 1) &&
           h.free_dims == evseq_zero(p);
  });
  all_indices("hom(E^n, E^n)", "Q[Z_p/p^n]", [&](int n) {
    HomDescriptor h = hom_space(gen(GenKind::E, n), gen(GenKind::E, n));
    return h.stable_dim == 0 && dev_concentrated_at(h, n, ipow(p, n)) &&
           h.free_dims == evseq_zero(p);
  });
  {
    bool ok = true;
    for (int n = 0; n <= max_index && ok; ++n)
      for (int m = 0; m <= max_index && ok; ++m)
        ok = hom_space(gen(GenKind::E, n), gen(GenKind::L, m)).total_zero();
    rows.push_back({"hom(E^n, L^m)", "0", ok});
  }
  {
    bool ok = true;
    for (int n = 0; n <= max_index && ok; ++n)
      for (int m = 0; m <= max_index && ok; ++m)
        if (m != n) ok = ok && hom_space(gen(GenKind::E, n), gen(GenKind::E, m)).total_zero();
    rows.push_back({"hom(E^n, E^m), n != m", "0", ok});
  }

  bool all_ok = true;
  if (opt.json) {
    Json out = Json::array();
    for (const auto& r : rows) {
      out.push_back(Json{{"entry", r.name}, {"value", r.value}, {"ok", r.ok}});
      all_ok = all_ok && r.ok;
    }
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& r : rows) {
      std::cout << r.name << " = " << r.value << (r.ok ? "  [ok]" : "  [MISMATCH]")
                << "\n";
      all_ok = all_ok && r.ok;
    }
  }
  return all_ok ? kExitOk : kExitSuiteFailure;
}

int cmd_check(const Options& opt) {
  CheckConfig config{opt.p, opt.seed, opt.jmax, opt.kmax};
  std::vector<CheckResult> results = run_all_checks(config);
  int failed = 0;
  for (const auto& r : results) {
    if (!r.pass) ++failed;
    if (opt.json) continue;
    std::cout << (r.pass ? "[pass] " : "[FAIL] ") << r.name;
    if (!r.detail.empty()) std::cout << " -- " << r.detail;
    std::cout << "\n";
  }
  if (opt.json) {
    Json out = Json::array();
    for (const auto& r : results)
      out.push_back(Json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    std::cout << out.dump() << "\n";
  } else {
    std::cout << results.size() - failed << " passed, " << failed << " failed\n";
  }
  return failed == 0 ? kExitOk : kExitSuiteFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculator for the algebraic model of rational Z_p-equivariant "
               "spectra"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--p", opt.p, "prime")->check(CLI::PositiveNumber);
  app.add_flag("--json", opt.json, "emit JSON on stdout");
  app.add_option("--seed", opt.seed, "seed for the randomized suites");
  app.add_option("--jmax", opt.jmax, "largest subgroup index in tables")
      ->envname("PADIC_MACKEY_JMAX");
  app.add_option("--kmax", opt.kmax, "largest truncation-oracle offset")
      ->envname("PADIC_MACKEY_KMAX");

  std::string lhs, rhs, burnside_op;
  std::vector<std::string> burnside_args;
  int degree = 0, subgroup = 0, td_n = 0, td_m = 0, td_jmax = -1, max_index = 4;

  CLI::App* hom = app.add_subcommand("hom", "Hom descriptor of two objects");
  hom->add_option("source", lhs)->required();
  hom->add_option("target", rhs)->required();

  CLI::App* ext = app.add_subcommand("ext", "Ext^1 descriptor of two objects");
  ext->add_option("source", lhs)->required();
  ext->add_option("target", rhs)->required();

  CLI::App* maps = app.add_subcommand("maps", "graded maps via the short exact sequence");
  maps->add_option("source", lhs)->required();
  maps->add_option("target", rhs)->required();
  maps->add_option("--d", degree, "degree of the maps");

  CLI::App* tensor_cmd = app.add_subcommand("tensor", "monoidal product of two objects");
  tensor_cmd->add_option("lhs", lhs)->required();
  tensor_cmd->add_option("rhs", rhs)->required();

  CLI::App* iso = app.add_subcommand("iso", "isomorphism test with witness");
  iso->add_option("lhs", lhs)->required();
  iso->add_option("rhs", rhs)->required();

  CLI::App* mackey = app.add_subcommand("mackey", "Mackey-functor value descriptor");
  mackey->add_option("object", lhs)->required();
  mackey->add_option("--k", subgroup, "subgroup level");

  CLI::App* tomdieck = app.add_subcommand("tomdieck", "splitting table by enumeration");
  tomdieck->add_option("--n", td_n)->required();
  tomdieck->add_option("--m", td_m)->required();
  tomdieck->add_option("--jmax", td_jmax);

  CLI::App* burnside = app.add_subcommand("burnside", "Burnside ring calculator");
  burnside->add_option("op", burnside_op, "e | f | one | add | mul | truncate | embed")
      ->required();
  burnside->add_option("args", burnside_args, "operation arguments");

  CLI::App* table = app.add_subcommand("table", "regenerate the generator hom table");
  table->add_option("--max-index", max_index, "largest generator index checked");

  app.add_subcommand("check", "run the invariant suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message and usage hint
    return kExitComputationError;
  }

  try {
    if (hom->parsed()) return cmd_hom(opt, lhs, rhs);
    if (ext->parsed()) return cmd_ext(opt, lhs, rhs);
    if (maps->parsed()) return cmd_maps(opt, lhs, rhs, degree);
    if (tensor_cmd->parsed()) return cmd_tensor(opt, lhs, rhs);
    if (iso->parsed()) return cmd_iso(opt, lhs, rhs);
    if (mackey->parsed()) return cmd_mackey(opt, lhs, subgroup);
    if (tomdieck->parsed())
      return cmd_tomdieck(opt, td_n, td_m, td_jmax < 0 ? opt.jmax : td_jmax);
    if (burnside->parsed()) return cmd_burnside(opt, burnside_op, burnside_args);
    if (table->parsed()) return cmd_table(opt, max_index);
    return cmd_check(opt);
  } catch (const padic::ParseError& e) {
    std::cerr << "syntax error at offset " << e.offset << ": " << e.what() << "\n";
    return kExitComputationError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputationError;
  }
}
