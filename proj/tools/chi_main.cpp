// chi: evaluates motivic Euler characteristics of combinatorially described
// spaces as elements of GW(k).  Exit codes: 0 success, 1 bad input (parse,
// validation, unsupported type, overflow), 2 internal invariant violation.

#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chimot/eval.hpp"
#include "chimot/oracles.hpp"
#include "chimot/parse.hpp"
#include "chimot/roots.hpp"
#include "json.hpp"

namespace {

using namespace chimot;

bool color_enabled() {
  if (!isatty(fileno(stdout))) return false;
  const char* v = std::getenv("CHI_COLOR");
  if (v == nullptr) return true;
  std::string s(v);
  return !(s == "0" || s == "off" || s == "never");
}

std::string pass_tag(bool ok, bool color) {
  if (!color) return ok ? "PASS" : "FAIL";
  return ok ? "\x1b[32mPASS\x1b[0m" : "\x1b[31mFAIL\x1b[0m";
}

void print_trace(const Derivation& d, const FieldModel& m, int depth) {
  std::cout << std::string(static_cast<size_t>(depth) * 2, ' ') << rule_name(d.rule) << "  ["
            << d.citation << "]  " << pretty_print(d.expr) << "  =>  "
            << value_to_string(d.value, m) << "\n";
  for (const auto& c : d.children) print_trace(c, m, depth + 1);
}

int run_eval(const std::string& field, const std::string& expr_text,
             const std::string& file_path, const std::string& format, bool trace) {
  if (expr_text.empty() == file_path.empty()) {
    std::cerr << "error: exactly one of --expr or --file is required\n";
    return 1;
  }

  FieldModel m = FieldModel::parse(field);
  SpaceExpr e = file_path.empty() ? parse(expr_text) : parse_file(file_path);
  EvalResult r = eval_chi(e, m);

  if (format == "json") {
    nlohmann::ordered_json j;
    j["expr"] = pretty_print(e);
    j["model"] = m.name();
    j["value"] = nlohmann::ordered_json::parse(value_to_json(r.value, m));
    if (trace)
      j["derivation"] = nlohmann::ordered_json::parse(derivation_to_json(r.derivation, m));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << value_to_string(r.value, m) << "\n";
    if (trace) {
      std::cout << "derivation:\n";
      print_trace(r.derivation, m, 1);
    }
  }
  return 0;
}

struct SelfTest {
  bool color = color_enabled();
  int failures = 0;

  void report(const std::string& label, const std::string& citation, bool ok) {
    std::cout << pass_tag(ok, color) << "  " << label << "  [" << citation << "]\n";
    if (!ok) ++failures;
  }
};

void selftest_fp_relations(SelfTest& st) {
  bool ok = true;
  for (long long p : {3LL, 5LL, 7LL, 11LL, 13LL}) ok = ok && oracle::gw_fp_relation_check(p);
  st.report("GW(F_p) twist relations hold for p in {3,5,7,11,13}", "oracle", ok);
}

void selftest_normal_form_sweep(SelfTest& st) {
  bool ok = true;
  for (long long p : {3LL, 5LL, 7LL, 11LL, 13LL}) {
    FieldModel m = FieldModel::finite(p);
    // All diagonal forms with entries +-1 of rank <= 4, pairwise: the GW
    // normal forms agree exactly when (rank, disc class) agree.
    struct Shape { long long pos, neg; };
    std::vector<Shape> shapes;
    for (long long n = 0; n <= 4; ++n)
      for (long long pos = 0; pos <= n; ++pos) shapes.push_back({pos, n - pos});
    for (const auto& s1 : shapes)
      for (const auto& s2 : shapes) {
        auto form = [&](const Shape& s) {
          oracle::DiagonalForm f{p, {}};
          for (long long i = 0; i < s.pos; ++i) f.entries.push_back(1);
          for (long long i = 0; i < s.neg; ++i) f.entries.push_back(-1);
          return f;
        };
        bool oracle_equal = s1.pos + s1.neg == s2.pos + s2.neg &&
                            oracle::classify_form_fp(form(s1)) ==
                                oracle::classify_form_fp(form(s2));
        bool gw_equal = gw_make(s1.pos, s1.neg, m) == gw_make(s2.pos, s2.neg, m);
        ok = ok && (oracle_equal == gw_equal);
      }
  }
  st.report("GW normal forms match (rank, disc) classification over F_p, rank <= 4 sweeps",
            "oracle", ok);
}

void selftest_weyl_orders(SelfTest& st) {
  bool ok = true;
  for (CartanType ct : supported_cartan_types()) {
    auto wd = weyl_data(ct);
    ok = ok && wd->order == oracle::weyl_order_closed_form(ct);
  }
  st.report("Weyl group orders by lattice BFS match the product formulas, all supported types",
            "oracle", ok);
}

void selftest_torus_values(SelfTest& st) {
  FieldModel g = FieldModel::generic();
  bool ok = eval_chi(gm(), g).value.representative == gw_make(1, -1, g);
  GwElement expect = gw_one(g);
  for (int n = 1; n <= 5; ++n) {
    expect = gw_mul(expect, gw_make(1, -1, g), g);
    ok = ok && eval_chi(torus(n), g).value.representative == expect;
  }
  FieldModel s = FieldModel::sqrt_minus_one();
  ok = ok && eval_chi(gm(), s).value.representative == gw_zero();
  ok = ok && eval_chi(torus(3), s).value.representative == gw_zero();
  st.report("chi(Gm) = 1<1> - 1<-1> and chi(Torus(n)) = (1 - <-1>)^n, n <= 5", "Thm 3.2(i)",
            ok);
}

void selftest_p1_flag(SelfTest& st) {
  bool ok = true;
  for (const FieldModel& m : {FieldModel::generic(), FieldModel::sqrt_minus_one(),
                              FieldModel::real_closed(), FieldModel::finite(3)}) {
    ok = ok && eval_chi(projective(1), m).value == chi_flag({CartanFamily::A, 1}, m);
  }
  st.report("chi(Projective(1)) = chi(Flag(A,1)) in all four models", "Thm 2.8(iii)", ok);
}

void selftest_flag_rank(SelfTest& st) {
  FieldModel g = FieldModel::generic();
  bool ok = true;
  for (CartanType ct : supported_cartan_types()) {
    GwValue v = chi_flag(ct, g);
    Coefficient r = rank(v.representative, g);
    ok = ok && r == Coefficient{weyl_data(ct)->order, 0};
  }
  st.report("rank chi(Flag(ct)) = |W(ct)| for all supported types", "Thm 2.8(iii)", ok);
}

void selftest_g_mod_n(SelfTest& st) {
  std::vector<CartanType> types = {{CartanFamily::A, 1}, {CartanFamily::A, 2},
                                   {CartanFamily::A, 3}, {CartanFamily::A, 4},
                                   {CartanFamily::B, 2}, {CartanFamily::B, 3},
                                   {CartanFamily::C, 3}, {CartanFamily::D, 4},
                                   {CartanFamily::G, 2}, {CartanFamily::F, 4}};
  FieldModel s = FieldModel::sqrt_minus_one();
  bool ok = true;
  for (CartanType ct : types) {
    GwValue v = eval_chi(g_mod_n(ct), s).value;
    ok = ok && v.exactness == Exactness::Exact && v.representative == gw_one(s);
  }
  st.report("chi(G/N(T)) = 1 for A1..A4, B2, B3, C3, D4, G2, F4 under sqrt-minus-one",
            "Thm 1.3", ok);
}

int run_selftest() {
  SelfTest st;
  selftest_fp_relations(st);
  selftest_normal_form_sweep(st);
  selftest_weyl_orders(st);
  selftest_torus_values(st);
  selftest_p1_flag(st);
  selftest_flag_rank(st);
  selftest_g_mod_n(st);
  if (st.failures == 0) {
    std::cout << "all checks passed\n";
    return 0;
  }
  std::cout << st.failures << " check(s) failed\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chi: motivic Euler characteristics with values in GW(k)"};
  app.require_subcommand(0, 1);

  std::string field = "generic";
  std::string expr_text;
  std::string file_path;
  std::string format = "text";
  bool trace = false;

  app.add_option("--field", field,
                 "field model: generic | sqrt-minus-one | real-closed | finite:p")
      ->capture_default_str();
  app.add_option("--expr", expr_text, "space expression to evaluate");
  app.add_option("--file", file_path, "read the expression from a .chi file");
  app.add_option("--format", format, "output format: text | json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--trace", trace, "print the derivation tree");

  CLI::App* selftest =
      app.add_subcommand("selftest", "run built-in oracle and theorem checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (selftest->parsed()) return run_selftest();
    return run_eval(field, expr_text, file_path, format, trace);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const EvalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
