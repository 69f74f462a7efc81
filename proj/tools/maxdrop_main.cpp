// maxdrop: statistics, sorting, descent polynomials and juggling
// correspondences for signed permutations. Every subcommand is a thin
// adapter over the library; --json switches to machine-readable output.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "maxdrop/descent.hpp"
#include "maxdrop/error.hpp"
#include "maxdrop/juggling.hpp"
#include "maxdrop/perm.hpp"
#include "maxdrop/poly.hpp"
#include "maxdrop/seqprops.hpp"
#include "maxdrop/textio.hpp"

using nlohmann::json;
using namespace maxdrop;

namespace {

constexpr int kTableCap = 12;

struct Options {
  bool json = false;
  int exit_code = 0;
};

void emit(const json& j) { std::cout << j.dump() << "\n"; }

void warn_cap(int cap, int standard) {
  if (cap > standard)
    std::cerr << "warning: cap raised to " << cap << " (default " << standard
              << ")\n";
}

json coeff_strings(const IntPolynomial& p) {
  json a = json::array();
  for (const BigInt& c : p.coeffs()) a.push_back(c.to_string());
  return a;
}

std::string family_token(Family f) { return f == Family::A ? "A" : "B"; }

Family parse_family(const std::string& token) {
  if (token == "A" || token == "a") return Family::A;
  if (token == "B" || token == "b") return Family::B;
  throw ParseError("family must be A or B, got '" + token + "'");
}

// ---------------------------------------------------------------------------

void run_stats(Options& opt, const std::string& perm_text) {
  SignedPermutation p = parse_signed_permutation(perm_text);
  DescentSet ds_b = descent_set(p);
  bool all_positive = true;
  for (int v : p.values()) all_positive &= v > 0;

  if (opt.json) {
    json j{{"perm", p.values()},
           {"n", p.size()},
           {"descent_set_b", ds_b.members()},
           {"des_b", descent_count(p)},
           {"maxdrop_b", max_drop(p)},
           {"bsc_b", bubble_sort_complexity(p)}};
    if (all_positive) {
      Permutation q = p.abs();
      j["descent_set_a"] = descent_set(q).members();
      j["des_a"] = descent_count(q);
      j["maxdrop_a"] = max_drop(q);
      j["bsc_a"] = bubble_sort_complexity(q);
    }
    emit(j);
    return;
  }
  std::cout << "perm: " << format_int_list(p.values()) << "\n"
            << "n: " << p.size() << "\n"
            << "descent_set_b: " << ds_b.to_string() << "\n"
            << "des_b: " << descent_count(p) << "\n"
            << "maxdrop_b: " << max_drop(p) << "\n"
            << "bsc_b: " << bubble_sort_complexity(p) << "\n";
  if (all_positive) {
    Permutation q = p.abs();
    std::cout << "descent_set_a: " << descent_set(q).to_string() << "\n"
              << "des_a: " << descent_count(q) << "\n"
              << "maxdrop_a: " << max_drop(q) << "\n"
              << "bsc_a: " << bubble_sort_complexity(q) << "\n";
  }
}

void run_sort(Options& opt, const std::string& perm_text, bool complexity) {
  SignedPermutation p = parse_signed_permutation(perm_text);
  if (complexity) {
    int c = bubble_sort_complexity(p);
    if (opt.json)
      emit(json{{"perm", p.values()}, {"complexity", c}});
    else
      std::cout << c << "\n";
    return;
  }
  SignedPermutation next = bubble_pass(p);
  if (opt.json)
    emit(json{{"perm", p.values()}, {"result", next.values()}});
  else
    std::cout << format_int_list(next.values()) << "\n";
}

void run_poly(Options& opt, const std::string& family_text, int n, int k,
              const std::string& method, int cap) {
  Family f = parse_family(family_text);
  warn_cap(cap, kEnumerationCap);

  std::map<std::string, IntPolynomial> results;
  std::vector<std::string> skipped;
  auto series_value = [&] {
    return restricted_poly_series(f, k, n)[static_cast<std::size_t>(n)];
  };
  if (method == "all") {
    if (n <= cap)
      results["brute"] = restricted_poly_brute(f, n, k, cap);
    else
      skipped.push_back("brute");
    results["recurrence"] = restricted_poly_recurrence(f, n, k);
    results["explicit"] = restricted_poly_explicit(f, n, k);
    results["series"] = series_value();
  } else if (method == "brute") {
    results["brute"] = restricted_poly_brute(f, n, k, cap);
  } else if (method == "recurrence") {
    results["recurrence"] = restricted_poly_recurrence(f, n, k);
  } else if (method == "explicit") {
    results["explicit"] = restricted_poly_explicit(f, n, k);
  } else if (method == "series") {
    results["series"] = series_value();
  } else {
    throw ParseError("unknown method '" + method + "'");
  }

  bool agree = true;
  const IntPolynomial& first = results.begin()->second;
  for (const auto& [name, poly] : results) agree &= poly == first;

  if (opt.json) {
    json methods = json::object();
    for (const auto& [name, poly] : results) methods[name] = coeff_strings(poly);
    json j{{"family", family_token(f)},
           {"n", n},
           {"k", k},
           {"methods", methods},
           {"agree", agree}};
    if (!skipped.empty()) j["skipped"] = skipped;
    if (agree) j["coefficients"] = coeff_strings(first);
    emit(j);
  } else {
    std::cout << family_token(f) << "_{" << n << "," << k
              << "}(x) = " << (agree ? first.to_pretty_string() : "(disagree)")
              << "\n";
    for (const auto& [name, poly] : results)
      std::cout << name << ": " << poly.to_list_string() << "\n";
    for (const std::string& name : skipped)
      std::cout << name << ": skipped (n exceeds cap " << cap << ")\n";
    if (results.size() > 1)
      std::cout << "agree: " << (agree ? "true" : "false") << "\n";
  }
  if (!agree) opt.exit_code = 1;
}

void run_setcount(Options& opt, int n, int k, const std::string& set_text,
                  int cap) {
  warn_cap(cap, kEnumerationCap);
  DescentSet s = parse_descent_set(n, set_text);
  std::map<std::string, BigInt> results;
  results["brute"] = restricted_count_superset_brute(n, k, s, cap);
  if (k <= n - 1)
    results["product"] = restricted_count_superset_product(n, k, s, cap);
  bool agree = true;
  for (const auto& [name, value] : results)
    agree &= value == results.begin()->second;

  if (opt.json) {
    json methods = json::object();
    for (const auto& [name, value] : results) methods[name] = value.to_string();
    emit(json{{"n", n},
              {"k", k},
              {"set", s.members()},
              {"count", results.begin()->second.to_string()},
              {"methods", methods},
              {"agree", agree}});
  } else {
    std::cout << "b_{" << n << "," << k << "}(" << s.to_string()
              << ") = " << results.begin()->second.to_string() << "\n";
    for (const auto& [name, value] : results)
      std::cout << name << ": " << value.to_string() << "\n";
    if (results.size() > 1)
      std::cout << "agree: " << (agree ? "true" : "false") << "\n";
  }
  if (!agree) opt.exit_code = 1;
}

void run_bijection_f(Options& opt, const std::string& perm_text, int k,
                     const std::string& set_text) {
  SignedPermutation p = parse_signed_permutation(perm_text);
  DescentSet s = parse_descent_set(p.size(), set_text);
  FSplit split = bijection_f(p, k, s);
  if (opt.json) {
    emit(json{{"alpha", split.alpha.values()},
              {"tail_set", split.tail_set},
              {"i", tail_run(s)}});
  } else {
    std::cout << "alpha: " << format_int_list(split.alpha.values()) << "\n"
              << "tail_set: {" << format_int_list(split.tail_set) << "}\n";
  }
}

void run_bijection_g(Options& opt, const std::string& perm_text,
                     const std::string& x_text, int n, int k) {
  SignedPermutation p = parse_signed_permutation(perm_text);
  std::vector<int> tail = parse_braced_int_list(x_text);
  SignedPermutation r = bijection_g(p, tail, n, k);
  if (opt.json)
    emit(json{{"perm", r.values()}});
  else
    std::cout << format_int_list(r.values()) << "\n";
}

void run_checkseq(Options& opt, const std::string& property,
                  const std::string& coeffs_text) {
  std::vector<BigInt> coeffs = parse_bigint_list(coeffs_text);
  SequenceVerdict verdict;
  std::vector<std::size_t> violations;
  if (property == "symmetric") {
    verdict = is_symmetric(coeffs);
  } else if (property == "unimodal") {
    verdict = is_unimodal(coeffs);
  } else {
    verdict = is_log_concave(coeffs);
    violations = log_concavity_violations(coeffs);
  }

  if (opt.json) {
    json j{{"property", property}, {"holds", verdict.holds}};
    if (!verdict.holds) {
      j["witness"] = verdict.witness;
      j["detail"] = verdict.detail;
    }
    if (property == "logconcave" && !violations.empty())
      j["violations"] = violations;
    emit(j);
  } else {
    std::cout << property << ": " << (verdict.holds ? "true" : "false") << "\n";
    if (!verdict.holds) std::cout << "witness: " << verdict.detail << "\n";
  }
  if (!verdict.holds) opt.exit_code = 1;
}

// ---------------------------------------------------------------------------
// juggle

std::vector<int> parse_throws(const std::string& text) {
  try {
    return parse_int_list(text);
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid sequence: ") + e.what());
  }
}

void run_juggle_validate(Options& opt, const std::string& seq_text) {
  std::vector<int> throws = parse_throws(seq_text);
  bool colored = false;
  for (int t : throws) colored |= t < 0;
  try {
    ColoredJugglingSequence t(throws);
    if (opt.json)
      emit(json{{"valid", true},
                {"balls", t.ball_count()},
                {"period", t.period()},
                {"colored", colored}});
    else
      std::cout << "valid: " << t.ball_count() << " balls, period "
                << t.period() << (colored ? ", 2-colored" : "") << "\n";
  } catch (const DomainError& e) {
    if (opt.json)
      emit(json{{"valid", false}, {"reason", e.what()}});
    else
      std::cout << "invalid: " << e.what() << "\n";
    opt.exit_code = 1;
  }
}

void run_juggle_state(Options& opt, const std::string& seq_text) {
  ColoredJugglingSequence t(parse_throws(seq_text));
  JugglingState st = state(t);
  if (opt.json)
    emit(json{{"state", st}, {"balls", t.ball_count()}});
  else
    std::cout << format_int_list(st) << "\n";
}

void run_juggle_landing(Options& opt, const std::string& seq_text, int k) {
  ColoredJugglingSequence t(parse_throws(seq_text));
  Permutation tau = landing_permutation(t, k);
  if (opt.json)
    emit(json{{"landing", tau.values()}});
  else
    std::cout << format_int_list(tau.values()) << "\n";
}

void run_juggle_phi(Options& opt, const std::string& perm_text,
                    const std::string& seq_text, int k) {
  if (!perm_text.empty()) {
    Permutation p = parse_permutation(perm_text);
    JugglingSequence t = to_juggling(p, k);
    if (opt.json)
      emit(json{{"seq", t.throws()}, {"balls", k}});
    else
      std::cout << format_int_list(t.throws()) << "\n";
  } else {
    JugglingSequence t(parse_throws(seq_text));
    Permutation p = from_juggling(t, k);
    if (opt.json)
      emit(json{{"perm", p.values()}});
    else
      std::cout << format_int_list(p.values()) << "\n";
  }
}

void run_juggle_psi(Options& opt, const std::string& perm_text,
                    const std::string& seq_text, int n, int k, int cap) {
  warn_cap(cap, kColoredFactorialCap);
  if (!perm_text.empty()) {
    SignedPermutation p = parse_signed_permutation(perm_text);
    ColoredJugglingSequence t = to_colored_juggling(p, k, cap);
    if (opt.json)
      emit(json{{"seq", t.throws()}, {"balls", k}, {"period", t.period()}});
    else
      std::cout << format_signed_list(t.throws()) << "\n";
  } else {
    if (n <= 0) throw ParseError("--n is required for the inverse direction");
    ColoredJugglingSequence t(parse_throws(seq_text));
    SignedPermutation p = from_colored_juggling(t, n, k);
    if (opt.json)
      emit(json{{"perm", p.values()}});
    else
      std::cout << format_int_list(p.values()) << "\n";
  }
}

void run_juggle_render(Options& opt, const std::string& seq_text,
                       const std::string& format_token) {
  ColoredJugglingSequence t(parse_throws(seq_text));
  std::string art = render_diagram(t, parse_diagram_format(format_token));
  if (opt.json)
    emit(json{{"format", format_token}, {"diagram", art}});
  else
    std::cout << art;
}

// ---------------------------------------------------------------------------
// table

void run_table_kernel(Options& opt, Family f, int max_k, int cap) {
  warn_cap(cap, kTableCap);
  if (max_k > cap)
    throw ResourceLimitError("table cap exceeded: k = " + std::to_string(max_k) +
                             " > " + std::to_string(cap));
  json rows = json::array();
  for (int k = 0; k <= max_k; ++k) {
    IntPolynomial kernel = recurrence_kernel(f, k);
    SequenceVerdict uni = is_unimodal(kernel.coeffs());
    SequenceVerdict logc = is_log_concave(kernel.coeffs());
    std::vector<std::size_t> violations =
        log_concavity_violations(kernel.coeffs());
    if (opt.json) {
      json row{{"k", k},
               {"coefficients", coeff_strings(kernel)},
               {"unimodal", uni.holds},
               {"log_concave", logc.holds}};
      if (f == Family::A) row["symmetric"] = is_symmetric(kernel.coeffs()).holds;
      if (!violations.empty()) row["violations"] = violations;
      rows.push_back(row);
    } else {
      std::string line = "k=" + std::to_string(k) + ": ";
      const std::vector<BigInt>& c = kernel.coeffs();
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) line += ",";
        line += c[i].to_string();
      }
      line += "  unimodal=";
      line += uni.holds ? "yes" : "no";
      if (f == Family::A) {
        line += " symmetric=";
        line += is_symmetric(kernel.coeffs()).holds ? "yes" : "no";
      }
      line += " log-concave=";
      line += logc.holds ? "yes" : "no";
      if (!logc.holds) line += " (" + logc.detail + ")";
      std::cout << line << "\n";
    }
  }
  if (opt.json) emit(json{{"family", family_token(f)}, {"rows", rows}});
}

void run_table_grid(Options& opt, int max_n, int cap) {
  warn_cap(cap, kTableCap);
  if (max_n > cap)
    throw ResourceLimitError("table cap exceeded: n = " + std::to_string(max_n) +
                             " > " + std::to_string(cap));
  json rows = json::array();
  for (int n = 0; n <= max_n; ++n)
    for (int k = 0; k <= n; ++k) {
      IntPolynomial p = restricted_poly_recurrence(Family::B, n, k);
      if (opt.json)
        rows.push_back(
            json{{"n", n}, {"k", k}, {"coefficients", coeff_strings(p)}});
      else
        std::cout << "B[" << n << "," << k << "] = " << p.to_list_string()
                  << "\n";
    }
  if (opt.json) emit(json{{"family", "B"}, {"rows", rows}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signed-permutation statistics, descent polynomials and "
               "2-colored juggling correspondences"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "machine-readable JSON output");

  // stats
  std::string stats_perm;
  auto* stats = app.add_subcommand("stats", "descent and drop statistics");
  stats->fallthrough();
  stats->add_option("--perm", stats_perm,
                    "signed permutation, e.g. \"-3,4,-1,-5,2\"")
      ->required();
  stats->callback([&] { run_stats(opt, stats_perm); });

  // sort
  std::string sort_perm;
  bool sort_complexity = false;
  auto* sort = app.add_subcommand("sort", "one bubble sweep or the full count");
  sort->fallthrough();
  sort->add_option("--perm", sort_perm, "signed permutation")->required();
  sort->add_flag("--complexity", sort_complexity,
                 "print the number of sweeps needed to sort");
  sort->callback([&] { run_sort(opt, sort_perm, sort_complexity); });

  // poly
  std::string poly_family = "B", poly_method = "all";
  int poly_n = 0, poly_k = 0, poly_cap = kEnumerationCap;
  auto* poly = app.add_subcommand(
      "poly", "maxdrop-restricted descent polynomial by one or all routes");
  poly->fallthrough();
  poly->add_option("--family", poly_family, "A or B")->required();
  poly->add_option("--n", poly_n, "length")->required();
  poly->add_option("--k", poly_k, "maxdrop bound")->required();
  poly->add_option("--method", poly_method,
                   "brute|recurrence|explicit|series|all");
  poly->add_option("--cap", poly_cap, "enumeration cap override");
  poly->callback(
      [&] { run_poly(opt, poly_family, poly_n, poly_k, poly_method, poly_cap); });

  // setcount
  std::string set_text;
  int sc_n = 0, sc_k = 0, sc_cap = kEnumerationCap;
  auto* setcount = app.add_subcommand(
      "setcount", "signed permutations with maxdrop <= k whose descents "
                  "contain a given set");
  setcount->fallthrough();
  setcount->add_option("--n", sc_n, "length")->required();
  setcount->add_option("--k", sc_k, "maxdrop bound")->required();
  setcount->add_option("--set", set_text, "descent positions, e.g. \"0,2,6\"");
  setcount->add_option("--cap", sc_cap, "enumeration cap override");
  setcount->callback([&] { run_setcount(opt, sc_n, sc_k, set_text, sc_cap); });

  // bijection
  bool bij_f = false, bij_g = false;
  std::string bij_perm, bij_set, bij_x;
  int bij_k = 0, bij_n = 0;
  auto* bijection =
      app.add_subcommand("bijection", "split map between restricted classes");
  bijection->fallthrough();
  bijection->add_flag("--f", bij_f, "split direction");
  bijection->add_flag("--g", bij_g, "merge direction");
  bijection->add_option("--perm", bij_perm, "signed permutation")->required();
  bijection->add_option("--set", bij_set, "descent subset (for --f)");
  bijection->add_option("--x", bij_x, "tail set (for --g)");
  bijection->add_option("--k", bij_k, "maxdrop bound")->required();
  bijection->add_option("--n", bij_n, "target length (for --g)");
  bijection->callback([&] {
    if (bij_f == bij_g)
      throw ParseError("bijection requires exactly one of --f / --g");
    if (bij_f)
      run_bijection_f(opt, bij_perm, bij_k, bij_set);
    else
      run_bijection_g(opt, bij_perm, bij_x, bij_n, bij_k);
  });

  // juggle
  bool jg_validate = false, jg_state = false, jg_landing = false,
       jg_phi = false, jg_psi = false;
  std::string jg_seq, jg_perm, jg_render;
  int jg_k = 0, jg_n = 0, jg_cap = kColoredFactorialCap;
  auto* juggle = app.add_subcommand("juggle", "juggling-sequence operations");
  juggle->fallthrough();
  juggle->add_flag("--validate", jg_validate, "check validity");
  juggle->add_flag("--state", jg_state, "landing schedule after stopping");
  juggle->add_flag("--landing", jg_landing, "landing permutation (needs --k)");
  juggle->add_flag("--phi", jg_phi,
                   "permutation <-> sequence (direction from --perm/--seq)");
  juggle->add_flag("--psi", jg_psi,
                   "signed permutation <-> 2-colored sequence");
  juggle->add_option("--render", jg_render, "draw arc diagram: ascii|svg");
  juggle->add_option("--seq", jg_seq, "throw sequence, e.g. \"+5,-2,0,-1\"");
  juggle->add_option("--perm", jg_perm, "(signed) permutation");
  juggle->add_option("--k", jg_k, "ball count");
  juggle->add_option("--n", jg_n, "base period (psi inverse)");
  juggle->add_option("--cap", jg_cap, "factorial cap override for psi");
  juggle->callback([&] {
    int modes = jg_validate + jg_state + jg_landing + jg_phi + jg_psi +
                !jg_render.empty();
    if (modes != 1)
      throw ParseError("juggle requires exactly one of --validate, --state, "
                       "--landing, --phi, --psi, --render");
    if (jg_validate)
      run_juggle_validate(opt, jg_seq);
    else if (jg_state)
      run_juggle_state(opt, jg_seq);
    else if (jg_landing)
      run_juggle_landing(opt, jg_seq, jg_k);
    else if (jg_phi)
      run_juggle_phi(opt, jg_perm, jg_seq, jg_k);
    else if (jg_psi)
      run_juggle_psi(opt, jg_perm, jg_seq, jg_n, jg_k, jg_cap);
    else
      run_juggle_render(opt, jg_seq, jg_render);
  });

  // checkseq
  bool cs_symmetric = false, cs_unimodal = false, cs_logconcave = false;
  std::string cs_coeffs;
  auto* checkseq =
      app.add_subcommand("checkseq", "shape predicates on a coefficient list");
  checkseq->fallthrough();
  checkseq->add_flag("--symmetric", cs_symmetric, "palindromic coefficients");
  checkseq->add_flag("--unimodal", cs_unimodal, "single-peaked coefficients");
  checkseq->add_flag("--logconcave", cs_logconcave, "a_i^2 >= a_{i-1}a_{i+1}");
  checkseq->add_option("--coeffs", cs_coeffs, "e.g. \"[1, 4, 6, 6, 4, 2, 1]\"")
      ->required();
  checkseq->callback([&] {
    if (cs_symmetric + cs_unimodal + cs_logconcave != 1)
      throw ParseError("checkseq requires exactly one of --symmetric, "
                       "--unimodal, --logconcave");
    run_checkseq(opt,
                 cs_symmetric ? "symmetric"
                              : (cs_unimodal ? "unimodal" : "logconcave"),
                 cs_coeffs);
  });

  // table
  int tb_qk = -1, tb_pk = -1, tb_grid = -1, tb_cap = kTableCap;
  auto* table = app.add_subcommand("table", "coefficient tables with verdicts");
  table->fallthrough();
  table->add_option("--qk", tb_qk, "kernel rows for the signed family, k = 0..N");
  table->add_option("--pk", tb_pk, "kernel rows for the plain family, k = 0..N");
  table->add_option("--bnk-grid", tb_grid, "restricted polynomials, 0<=k<=n<=N");
  table->add_option("--cap", tb_cap, "table cap override");
  table->callback([&] {
    int modes = (tb_qk >= 0) + (tb_pk >= 0) + (tb_grid >= 0);
    if (modes != 1)
      throw ParseError("table requires exactly one of --qk, --pk, --bnk-grid");
    if (tb_qk >= 0)
      run_table_kernel(opt, Family::B, tb_qk, tb_cap);
    else if (tb_pk >= 0)
      run_table_kernel(opt, Family::A, tb_pk, tb_cap);
    else
      run_table_grid(opt, tb_grid, tb_cap);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return opt.exit_code;
}
