#ifndef UMBRA_TOOLS_REPORT_IO_HPP
#define UMBRA_TOOLS_REPORT_IO_HPP

// Serializers for verification reports, table rows and the identity catalog.
// JSON output is one object per line with keys in schema order.

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "umbra/identities.hpp"

namespace umbra::cli {

using ojson = nlohmann::ordered_json;

enum class Format { json, csv, text };

inline std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string opt_num(const std::optional<double>& v) { return v ? num(*v) : std::string(); }

inline ojson opt_json(const std::optional<double>& v) { return v ? ojson(*v) : ojson(nullptr); }

inline std::string params_string(const ParamPoint& p) {
  std::string s;
  for (const auto& [k, v] : p.values) {
    if (!s.empty()) s += ';';
    s += k + '=' + num(v);
  }
  return s;
}

inline const std::vector<std::string>& report_fields() {
  static const std::vector<std::string> f = {"id",      "params",  "lhs",    "rhs",     "abs_err", "rel_err",
                                             "tol_abs", "tol_rel", "status", "seconds", "reason"};
  return f;
}

inline ojson report_json(const VerificationReport& r) {
  ojson params = ojson::object();
  for (const auto& [k, v] : r.params.values) params[k] = v;
  ojson j;
  j["id"] = r.id;
  j["params"] = params;
  j["lhs"] = opt_json(r.lhs);
  j["rhs"] = opt_json(r.rhs);
  j["abs_err"] = opt_json(r.abs_err);
  j["rel_err"] = opt_json(r.rel_err);
  j["tol_abs"] = r.tol_abs;
  j["tol_rel"] = r.tol_rel;
  j["status"] = to_string(r.status);
  j["seconds"] = r.seconds;
  j["reason"] = r.reason;
  return j;
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + '"';
}

inline std::string report_csv_header() {
  std::string s;
  for (const auto& f : report_fields()) s += (s.empty() ? "" : ",") + f;
  return s;
}

inline std::string report_csv(const VerificationReport& r) {
  return r.id + ',' + params_string(r.params) + ',' + opt_num(r.lhs) + ',' + opt_num(r.rhs) + ',' + opt_num(r.abs_err) +
         ',' + opt_num(r.rel_err) + ',' + num(r.tol_abs) + ',' + num(r.tol_rel) + ',' + to_string(r.status) + ',' +
         num(r.seconds) + ',' + csv_escape(r.reason);
}

inline std::string report_text(const VerificationReport& r) {
  char buf[256];
  std::string s = r.id + " [" + params_string(r.params) + "] " + to_string(r.status);
  if (r.lhs) {
    std::snprintf(buf, sizeof buf, " lhs=%.16g rhs=%.16g abs_err=%.3g rel_err=%.3g", *r.lhs, *r.rhs, *r.abs_err,
                  *r.rel_err);
    s += buf;
  } else {
    s += " (" + r.reason + ")";
  }
  std::snprintf(buf, sizeof buf, " %.3fs", r.seconds);
  return s + buf;
}

inline std::string format_report(const VerificationReport& r, Format f) {
  switch (f) {
    case Format::json: return report_json(r).dump();
    case Format::csv: return report_csv(r);
    case Format::text: return report_text(r);
  }
  return {};
}

inline ojson identity_json(const Identity& I) {
  ojson j;
  j["id"] = I.id;
  j["description"] = I.description;
  j["reference"] = {{"location", I.reference.location}, {"quote", I.reference.quote}};
  ojson params = ojson::array();
  for (const auto& p : I.params)
    params.push_back({{"name", p.name},
                      {"lo", p.lo},
                      {"hi", p.hi},
                      {"lo_open", p.lo_open},
                      {"hi_open", p.hi_open},
                      {"integer", p.integer}});
  j["params"] = params;
  if (!I.constraint_note.empty()) j["condition"] = I.constraint_note;
  ojson grid = ojson::array();
  for (const auto& g : I.grid) {
    ojson pt = ojson::object();
    for (const auto& [k, v] : g.values) pt[k] = v;
    grid.push_back(pt);
  }
  j["grid"] = grid;
  j["tol_abs"] = I.tol_abs;
  j["tol_rel"] = I.tol_rel;
  j["window_note"] = I.window_note;
  j["lhs_tags"] = I.lhs.tags;
  j["rhs_tags"] = I.rhs.tags;
  return j;
}

}  // namespace umbra::cli

#endif  // UMBRA_TOOLS_REPORT_IO_HPP
