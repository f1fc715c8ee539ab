#pragma once

// Golden-vector records: one reference value per record, keyed by an
// operation name from a fixed registry. Files are JSON, either an array of
// records or an object with a "records" array.

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tempered/error.hpp"
#include "tempered/modified.hpp"
#include "tempered/pairing.hpp"
#include "tempered/polylog.hpp"
#include "tempered/singular.hpp"
#include "tempered/test_function.hpp"

namespace tempered {

struct GoldenRecord {
  std::string op;
  double s_re = 0.0;
  double s_im = 0.0;
  double x = 0.0;
  std::string side = "principal";
  std::map<std::string, double> extra;
  double value_re = 0.0;
  double value_im = 0.0;
  double abs_tol = 0.0;

  cplx value() const { return {value_re, value_im}; }
  Order order() const { return Order(s_re, s_im); }
};

class golden_format_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline const std::vector<std::string>& golden_ops() {
  static const std::vector<std::string> ops{
      "li_eval",        "Li_eval",   "zeta",      "gamma",           "smooth_remainder", "lambda_i",
      "bloch_wigner",   "modified",  "profile",   "pair_gamma_plus", "pair_li0",         "pair_li",
      "pair_direct",    "pair_eta"};
  return ops;
}

namespace detail {

inline double extra_or(const GoldenRecord& r, const std::string& key, double fallback) {
  const auto it = r.extra.find(key);
  return it == r.extra.end() ? fallback : it->second;
}

inline double extra_required(const GoldenRecord& r, const std::string& key) {
  const auto it = r.extra.find(key);
  if (it == r.extra.end()) throw golden_format_error("record '" + r.op + "' needs extra." + key);
  return it->second;
}

// f(x) = (sum c_i x^i) exp(-(x - mu)^2 / (2 sigma^2)); c0 defaults to 1.
inline TestFunction record_test_function(const GoldenRecord& r) {
  std::vector<double> coeffs;
  for (int i = 0; i <= 12; ++i) {
    const auto it = r.extra.find("c" + std::to_string(i));
    if (it == r.extra.end()) continue;
    if (coeffs.size() <= std::size_t(i)) coeffs.resize(i + 1, 0.0);
    coeffs[i] = it->second;
  }
  if (coeffs.empty()) coeffs.push_back(1.0);
  return TestFunction::from_monomial(extra_or(r, "mu", 0.0), extra_or(r, "sigma", 1.0), coeffs);
}

inline Cutoff record_cutoff(const GoldenRecord& r) {
  return Cutoff(extra_or(r, "cutoff_a", 0.5), extra_or(r, "cutoff_b", 1.0));
}

inline int record_weight(const GoldenRecord& r) {
  const double n = extra_or(r, "n", r.s_re);
  if (n != std::round(n)) throw golden_format_error("record '" + r.op + "' needs an integer weight");
  return static_cast<int>(n);
}

}  // namespace detail

/// Current value of the operation a record describes.
inline cplx evaluate(const GoldenRecord& r) {
  const EvalPoint p{r.x, side_from_string(r.side)};
  if (r.op == "li_eval") return li_eval(r.order(), p).value;
  if (r.op == "Li_eval") return Li_eval(r.order(), r.x, p.side);
  if (r.op == "zeta") return riemann_zeta(r.order());
  if (r.op == "gamma") return gamma_fn(r.order());
  if (r.op == "smooth_remainder") return smooth_remainder(r.order(), p);
  if (r.op == "lambda_i") return lambda_i_boundary(detail::record_weight(r), p);
  const cplx z(r.x, detail::extra_or(r, "y", 0.0));
  if (r.op == "bloch_wigner") return bloch_wigner(z);
  if (r.op == "modified") return classical_modified(ModifiedSpec(detail::record_weight(r)), z);
  if (r.op == "profile") {
    const int k = static_cast<int>(detail::extra_or(r, "k", -1.0));
    return profile(r.order(), r.x, detail::record_test_function(r), k);
  }
  if (r.op == "pair_gamma_plus") return pair_gamma_plus(r.order(), detail::record_test_function(r)).value;
  if (r.op == "pair_li0") return pair_li0(detail::record_test_function(r), detail::record_cutoff(r)).value;
  if (r.op == "pair_li")
    return pair_li(r.order(), detail::record_test_function(r), detail::record_cutoff(r)).value;
  if (r.op == "pair_direct") return pair_direct(r.order(), detail::record_test_function(r)).value;
  if (r.op == "pair_eta") {
    EtaSide side;
    if (r.side == "plus") side = EtaSide::plus;
    else if (r.side == "minus") side = EtaSide::minus;
    else throw golden_format_error("pair_eta record needs side plus or minus");
    return pair_eta(r.order(), side, detail::record_test_function(r)).value;
  }
  throw golden_format_error("unknown op '" + r.op + "'");
}

inline GoldenRecord record_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw golden_format_error("record must be an object");
  GoldenRecord r;
  try {
    r.op = j.at("op").get<std::string>();
    r.s_re = j.value("s_re", 0.0);
    r.s_im = j.value("s_im", 0.0);
    r.x = j.value("x", 0.0);
    r.side = j.value("side", std::string("principal"));
    if (j.contains("extra")) r.extra = j.at("extra").get<std::map<std::string, double>>();
    r.value_re = j.at("value_re").get<double>();
    r.value_im = j.value("value_im", 0.0);
    r.abs_tol = j.at("abs_tol").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw golden_format_error(std::string("malformed record: ") + e.what());
  }
  if (!(r.abs_tol > 0.0)) throw golden_format_error("abs_tol must be positive");
  bool known = false;
  for (const auto& op : golden_ops()) known = known || op == r.op;
  if (!known) throw golden_format_error("unknown op '" + r.op + "'");
  return r;
}

inline std::vector<GoldenRecord> parse_golden(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw golden_format_error(std::string("invalid JSON: ") + e.what());
  }
  const nlohmann::json* list = &doc;
  if (doc.is_object()) {
    if (!doc.contains("records")) throw golden_format_error("missing 'records' array");
    list = &doc.at("records");
  }
  if (!list->is_array()) throw golden_format_error("records must be an array");
  std::vector<GoldenRecord> out;
  for (const auto& j : *list) out.push_back(record_from_json(j));
  return out;
}

inline std::vector<GoldenRecord> load_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_golden(buf.str());
}

/// Doubles with 17 significant digits; non-finite values become null.
inline std::string json_number(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

inline std::string to_json(const GoldenRecord& r) {
  std::string out = "{\"op\": " + json_string(r.op) + ", \"s_re\": " + json_number(r.s_re) +
                    ", \"s_im\": " + json_number(r.s_im) + ", \"x\": " + json_number(r.x) +
                    ", \"side\": " + json_string(r.side) + ", \"extra\": {";
  bool first = true;
  for (const auto& [k, v] : r.extra) {
    out += (first ? "" : ", ") + json_string(k) + ": " + json_number(v);
    first = false;
  }
  out += "}, \"value_re\": " + json_number(r.value_re) + ", \"value_im\": " + json_number(r.value_im) +
         ", \"abs_tol\": " + json_number(r.abs_tol) + "}";
  return out;
}

inline std::string golden_document(const std::vector<GoldenRecord>& records) {
  std::string out = "{\"records\": [\n";
  for (std::size_t i = 0; i < records.size(); ++i)
    out += "  " + to_json(records[i]) + (i + 1 < records.size() ? ",\n" : "\n");
  out += "]}\n";
  return out;
}

struct GoldenDiff {
  std::size_t index;
  GoldenRecord record;
  cplx actual;
  double diff;
  std::string message;  // evaluation failure
};

/// Records whose current value misses the stored one by more than abs_tol.
inline std::vector<GoldenDiff> compare_golden(const std::vector<GoldenRecord>& records) {
  std::vector<GoldenDiff> out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    try {
      const cplx v = evaluate(r);
      const double d = std::abs(v - r.value());
      if (!(d <= r.abs_tol)) out.push_back({i, r, v, d, ""});
    } catch (const golden_format_error&) {
      throw;
    } catch (const std::exception& e) {
      out.push_back({i, r, cplx(std::nan(""), std::nan("")), std::nan(""), e.what()});
    }
  }
  return out;
}

}  // namespace tempered
