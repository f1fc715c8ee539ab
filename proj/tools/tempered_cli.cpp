// tempered: command-line front end.
//
//   tempered eval --s 2 --x -1
//   tempered eval --s 2 --t 1 --positive-axis
//   tempered scan --s-grid 0.5,1,1.5 --x-grid -2:-0.5:4 --out scan.csv
//   tempered pair --op li --s 1 --mu 0 --sigma 1
//   tempered verify all
//   tempered golden compare tests/data/golden.json
//
// Exit codes: 0 ok, 1 verification failure, 2 domain error, 3 usage error.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "tempered/tempered.hpp"

namespace {

using tempered::cplx;
using tempered::json_number;
using tempered::json_string;

constexpr int exit_ok = 0;
constexpr int exit_verify = 1;
constexpr int exit_domain = 2;
constexpr int exit_usage = 3;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_real(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw usage_error("not a number: '" + text + "'");
  }
  if (used != text.size()) throw usage_error("not a number: '" + text + "'");
  return v;
}

// "2", "-0.5", "1.5+0.7i", "0.3i"
cplx parse_complex(std::string text) {
  text.erase(std::remove(text.begin(), text.end(), ' '), text.end());
  if (text.empty()) throw usage_error("empty number");
  if (text.back() != 'i') return parse_real(text);
  text.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = text.size(); i-- > 1;) {
    if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto imag_part = [](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_real(t);
  };
  if (split == std::string::npos) return {0.0, imag_part(text)};
  return {parse_real(text.substr(0, split)), imag_part(text.substr(split))};
}

// comma-separated entries; "lo:hi:n" expands to n evenly spaced reals
std::vector<cplx> parse_grid(const std::string& text) {
  std::vector<cplx> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.find(':') != std::string::npos) {
      std::stringstream parts(item);
      std::string lo, hi, n;
      std::getline(parts, lo, ':');
      std::getline(parts, hi, ':');
      std::getline(parts, n, ':');
      const double a = parse_real(lo), b = parse_real(hi);
      const double count = parse_real(n);
      if (count < 1 || count != std::floor(count)) throw usage_error("range count must be a positive integer");
      for (int i = 0; i < int(count); ++i) out.emplace_back(count == 1 ? a : a + (b - a) * i / (count - 1));
    } else {
      out.push_back(parse_complex(item));
    }
  }
  if (out.empty()) throw usage_error("empty grid");
  return out;
}

tempered::Side parse_side(const std::string& name) {
  try {
    return tempered::side_from_string(name);
  } catch (const tempered::error& e) {
    throw usage_error(e.what());
  }
}

int thread_count() {
  if (const char* env = std::getenv("TEMPERED_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// ---------------------------------------------------------------------------

struct EvalArgs {
  double s = 0.0;
  double s_im = 0.0;
  double x = 0.0;
  double t = 0.0;
  bool positive_axis = false;
  bool decompose = false;
  std::string side = "principal";
};

int run_eval(const EvalArgs& a, CLI::Option* x_opt, CLI::Option* t_opt) {
  const tempered::Order s(a.s, a.s_im);
  const tempered::Side side = parse_side(a.side);
  double x = a.x;
  if (a.positive_axis || t_opt->count()) {
    if (!t_opt->count()) throw usage_error("--positive-axis needs --t");
    if (!(a.t > 0.0)) throw tempered::error(tempered::errc::domain, "t must be positive");
    x = std::log(a.t);
  } else if (!x_opt->count()) {
    throw usage_error("one of --x or --t is required");
  }
  const auto r = tempered::li_eval(s, {x, side});
  std::string line = "{\"s_re\": " + json_number(a.s) + ", \"s_im\": " + json_number(a.s_im);
  if (t_opt->count()) line += ", \"t\": " + json_number(a.t);
  line += ", \"x\": " + json_number(x) + ", \"side\": " + json_string(tempered::to_string(side)) +
          ", \"value_re\": " + json_number(r.value.real()) + ", \"value_im\": " + json_number(r.value.imag()) +
          ", \"regime\": " + json_string(tempered::to_string(r.regime)) + ", \"err\": " + json_number(r.est_error);
  if (a.decompose) {
    const cplx sing = tempered::singular_part_auto(s).evaluate({x, side});
    const cplx smooth = r.value - sing;
    line += ", \"singular_re\": " + json_number(sing.real()) + ", \"singular_im\": " + json_number(sing.imag()) +
            ", \"smooth_re\": " + json_number(smooth.real()) + ", \"smooth_im\": " + json_number(smooth.imag());
  }
  std::cout << line << "}\n";
  return exit_ok;
}

// ---------------------------------------------------------------------------

struct ScanArgs {
  std::string s_grid;
  std::string x_grid;
  std::string side = "principal";
  std::string out;
};

int run_scan(const ScanArgs& a) {
  const auto s_values = parse_grid(a.s_grid);
  const auto x_values = parse_grid(a.x_grid);
  for (const auto& x : x_values)
    if (x.imag() != 0.0) throw usage_error("x grid must be real");
  const tempered::Side side = parse_side(a.side);
  const std::size_t rows = s_values.size() * x_values.size();
  std::vector<std::string> lines(rows);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows; i = next++) {
      const cplx s = s_values[i / x_values.size()];
      const double x = x_values[i % x_values.size()].real();
      std::string row = json_number(s.real()) + "," + json_number(s.imag()) + "," + json_number(x) + "," +
                        tempered::to_string(side) + ",";
      try {
        const auto r = tempered::li_eval(tempered::Order(s), {x, side});
        row += json_number(r.value.real()) + "," + json_number(r.value.imag()) + "," +
               tempered::to_string(r.regime) + "," + json_number(r.est_error);
      } catch (const tempered::error&) {
        row += "nan,nan,error,nan";
      }
      lines[i] = std::move(row);
    }
  };
  const int n_threads = std::min<int>(thread_count(), static_cast<int>(rows));
  std::vector<std::thread> pool;
  for (int i = 1; i < n_threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::ofstream file;
  if (!a.out.empty()) {
    file.open(a.out);
    if (!file) throw usage_error("cannot write " + a.out);
  }
  std::ostream& os = a.out.empty() ? std::cout : file;
  os << "s_re,s_im,x,side,value_re,value_im,regime,err\n";
  for (const auto& line : lines) os << line << "\n";
  return exit_ok;
}

// ---------------------------------------------------------------------------

struct PairArgs {
  std::string op = "li";
  double s = 0.0;
  double s_im = 0.0;
  double mu = 0.0;
  double sigma = 1.0;
  std::string coeffs = "1";
  double cutoff_a = 0.5;
  double cutoff_b = 1.0;
  std::string side = "plus";
};

int run_pair(const PairArgs& a) {
  std::vector<double> coeffs;
  for (const auto& c : parse_grid(a.coeffs)) coeffs.push_back(c.real());
  const auto f = tempered::TestFunction::from_monomial(a.mu, a.sigma, coeffs);
  const tempered::Order s(a.s, a.s_im);
  const tempered::Cutoff chi(a.cutoff_a, a.cutoff_b);
  tempered::PairingResult r;
  if (a.op == "li") r = tempered::pair_li(s, f, chi);
  else if (a.op == "li0") r = tempered::pair_li0(f, chi);
  else if (a.op == "gamma_plus") r = tempered::pair_gamma_plus(s, f);
  else if (a.op == "direct") r = tempered::pair_direct(s, f);
  else if (a.op == "eta") {
    if (a.side != "plus" && a.side != "minus") throw usage_error("--side must be plus or minus for eta");
    r = tempered::pair_eta(s, a.side == "plus" ? tempered::EtaSide::plus : tempered::EtaSide::minus, f);
  } else {
    throw usage_error("unknown pairing '" + a.op + "'");
  }
  std::cout << "{\"op\": " << json_string(a.op) << ", \"s_re\": " << json_number(a.s)
            << ", \"s_im\": " << json_number(a.s_im) << ", \"value_re\": " << json_number(r.value.real())
            << ", \"value_im\": " << json_number(r.value.imag()) << ", \"err\": " << json_number(r.est_error)
            << "}\n";
  return exit_ok;
}

// ---------------------------------------------------------------------------

int run_verify(const std::string& suite) {
  const auto& names = tempered::suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
    throw usage_error("unknown suite '" + suite + "'");
  const auto checks = tempered::run_suite(suite);
  std::size_t failed = 0;
  for (const auto& c : checks) {
    failed += c.passed ? 0 : 1;
    std::string line = "{\"suite\": " + json_string(c.suite) + ", \"check\": " + json_string(c.name) +
                       ", \"pass\": " + (c.passed ? "true" : "false") + ", \"residual\": " +
                       json_number(c.residual) + ", \"tolerance\": " + json_number(c.tolerance);
    if (!c.table.empty()) {
      line += ", \"table\": {";
      for (std::size_t i = 0; i < c.table.size(); ++i)
        line += (i ? ", " : "") + json_string(c.table[i].first) + ": " + json_number(c.table[i].second);
      line += "}";
    }
    if (!c.message.empty()) line += ", \"message\": " + json_string(c.message);
    std::cout << line << "}\n";
  }
  std::cout << "{\"summary\": {\"suite\": " << json_string(suite) << ", \"checks\": " << checks.size()
            << ", \"failed\": " << failed << ", \"pass\": " << (failed == 0 ? "true" : "false") << "}}\n";
  return failed == 0 ? exit_ok : exit_verify;
}

// ---------------------------------------------------------------------------

std::vector<tempered::GoldenRecord> read_records(const std::string& path) {
  try {
    return tempered::load_golden(path);
  } catch (const std::ios_base::failure& e) {
    throw usage_error(e.what());
  } catch (const tempered::golden_format_error& e) {
    throw usage_error(std::string(path) + ": " + e.what());
  }
}

int run_golden_compare(const std::string& path) {
  const auto records = read_records(path);
  std::vector<tempered::GoldenDiff> diffs;
  try {
    diffs = tempered::compare_golden(records);
  } catch (const tempered::golden_format_error& e) {
    throw usage_error(e.what());
  }
  for (const auto& d : diffs) {
    std::string line = "{\"index\": " + std::to_string(d.index) + ", \"op\": " + json_string(d.record.op) +
                       ", \"expected_re\": " + json_number(d.record.value_re) +
                       ", \"expected_im\": " + json_number(d.record.value_im) +
                       ", \"actual_re\": " + json_number(d.actual.real()) +
                       ", \"actual_im\": " + json_number(d.actual.imag()) + ", \"diff\": " + json_number(d.diff) +
                       ", \"abs_tol\": " + json_number(d.record.abs_tol);
    if (!d.message.empty()) line += ", \"message\": " + json_string(d.message);
    std::cout << line << "}\n";
  }
  std::cout << "{\"summary\": {\"records\": " << records.size() << ", \"mismatches\": " << diffs.size()
            << ", \"pass\": " << (diffs.empty() ? "true" : "false") << "}}\n";
  return diffs.empty() ? exit_ok : exit_verify;
}

int run_golden_emit(const std::string& path, const std::string& template_path) {
  auto records = read_records(template_path.empty() ? path : template_path);
  for (auto& r : records) {
    cplx v;
    try {
      v = tempered::evaluate(r);
    } catch (const tempered::golden_format_error& e) {
      throw usage_error(e.what());
    }
    r.value_re = v.real();
    r.value_im = v.imag();
  }
  std::ofstream out(path);
  if (!out) throw usage_error("cannot write " + path);
  out << tempered::golden_document(records);
  std::cout << "{\"summary\": {\"records\": " << records.size() << ", \"written\": " << json_string(path) << "}}\n";
  return exit_ok;
}

void report_error(const std::string& kind, const std::string& message) {
  std::cerr << "{\"error\": " << json_string(kind) << ", \"message\": " << json_string(message) << "}\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polylogarithms of complex order and their tempered-distribution pairings"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "evaluate li_s(x), or Li_s(t) on the positive axis");
  eval->add_option("--s", eval_args.s, "real part of the order")->required();
  eval->add_option("--s-im", eval_args.s_im, "imaginary part of the order");
  auto* x_opt = eval->add_option("--x", eval_args.x, "point on the real line");
  auto* t_opt = eval->add_option("--t", eval_args.t, "point t = e^x on the positive axis");
  x_opt->excludes(t_opt);
  eval->add_flag("--positive-axis", eval_args.positive_axis, "evaluate Li_s(t)");
  eval->add_flag("--decompose", eval_args.decompose, "also print the singular and smooth parts");
  eval->add_option("--side", eval_args.side, "above | below | principal");

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "evaluate li_s(x) on a grid, CSV output");
  scan->add_option("--s-grid", scan_args.s_grid, "orders, e.g. 0.5,1,1.5+0.7i")->required();
  scan->add_option("--x-grid", scan_args.x_grid, "points, e.g. -2,-1 or -2:-0.5:4")->required();
  scan->add_option("--side", scan_args.side, "above | below | principal");
  scan->add_option("--out", scan_args.out, "CSV file (default stdout)");

  PairArgs pair_args;
  auto* pair = app.add_subcommand("pair", "pair a distribution with a Hermite-Gaussian test function");
  pair->add_option("--op", pair_args.op, "li | li0 | gamma_plus | direct | eta");
  pair->add_option("--s", pair_args.s, "real part of the order (exponent for eta)");
  pair->add_option("--s-im", pair_args.s_im, "imaginary part of the order");
  pair->add_option("--mu", pair_args.mu, "center of the Gaussian");
  pair->add_option("--sigma", pair_args.sigma, "width of the Gaussian");
  pair->add_option("--coeffs", pair_args.coeffs, "polynomial coefficients in x, lowest first");
  pair->add_option("--cutoff-a", pair_args.cutoff_a, "inner cutoff radius");
  pair->add_option("--cutoff-b", pair_args.cutoff_b, "outer cutoff radius");
  pair->add_option("--side", pair_args.side, "plus | minus (eta only)");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "kernels | polylog | singular | modified | pairing | all")->required();

  std::string golden_mode, golden_path, golden_template;
  auto* golden = app.add_subcommand("golden", "compare against or emit golden vectors");
  golden->add_option("mode", golden_mode, "compare | emit")->required()->check(CLI::IsMember({"compare", "emit"}));
  golden->add_option("path", golden_path, "golden-vector JSON file")->required();
  golden->add_option("--template", golden_template, "records to evaluate when emitting (default: path)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("usage", e.what());
    return exit_usage;
  }

  try {
    if (eval->parsed()) return run_eval(eval_args, x_opt, t_opt);
    if (scan->parsed()) return run_scan(scan_args);
    if (pair->parsed()) return run_pair(pair_args);
    if (verify->parsed()) return run_verify(suite);
    if (golden->parsed())
      return golden_mode == "compare" ? run_golden_compare(golden_path) : run_golden_emit(golden_path, golden_template);
  } catch (const usage_error& e) {
    report_error("usage", e.what());
    return exit_usage;
  } catch (const tempered::error& e) {
    report_error(tempered::to_string(e.code()), e.what());
    return exit_domain;
  }
  return exit_usage;
}
