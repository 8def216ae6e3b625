#ifndef UMBRA_TOOLS_CLI_HPP
#define UMBRA_TOOLS_CLI_HPP

// Command-line front end: eval, verify, table and catalog subcommands.
// Exit codes: 0 success / all pass, 1 verification failure, 2 usage or
// domain error.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "functions.hpp"
#include "report_io.hpp"
#include "umbra/umbra.hpp"

namespace umbra::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  double rel_tol = 1e-12;
  double abs_tol = 1e-300;
  int max_terms = 500;
  Format format = Format::text;
  std::string out;
  int parallelism = 1;
  std::uint64_t seed = 0;
  bool verbose = false;
  bool no_timing = false;
  bool jitter = false;
  std::string config_path;

  [[nodiscard]] EvalPolicy policy() const {
    EvalPolicy p;
    p.rel_tol = rel_tol;
    p.abs_tol = abs_tol;
    p.max_terms = max_terms;
    return p;
  }

  void validate() const {
    if (parallelism < 1) throw usage_error("--parallelism must be at least 1");
    if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw usage_error("--rel-tol must lie in (0, 1)");
    if (!(abs_tol > 0.0)) throw usage_error("--abs-tol must be positive");
    if (max_terms < 1) throw usage_error("--max-terms must be positive");
  }
};

inline std::string shortest(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

inline double parse_double(const std::string& s, const std::string& what) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  const auto r = std::from_chars(s.data(), end, v);
  if (r.ec != std::errc() || r.ptr != end) throw usage_error("invalid number '" + s + "' for " + what);
  return v;
}

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "text") return Format::text;
  throw usage_error("unknown format '" + s + "' (json, csv, text)");
}

// Named arguments left over by CLI11: "--name value" or "--name=value".
inline std::map<std::string, std::string> parse_named(const std::vector<std::string>& extras) {
  std::map<std::string, std::string> out;
  for (std::size_t i = 0; i < extras.size(); ++i) {
    const std::string& t = extras[i];
    if (t.rfind("--", 0) != 0 || t.size() < 3) throw usage_error("unexpected argument '" + t + "'");
    std::string key = t.substr(2);
    std::string value;
    const auto eq = key.find('=');
    if (eq != std::string::npos) {
      value = key.substr(eq + 1);
      key = key.substr(0, eq);
    } else {
      if (i + 1 >= extras.size()) throw usage_error("missing value for --" + key);
      value = extras[++i];
    }
    if (out.count(key)) throw usage_error("argument --" + key + " given twice");
    out[key] = value;
  }
  return out;
}

inline bool is_number(const std::string& s) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  const auto r = std::from_chars(s.data(), end, v);
  return r.ec == std::errc() && r.ptr == end;
}

// "--name -1.5" becomes "--name=-1.5" so that negative values are never
// mistaken for options or positional ids.
inline std::vector<std::string> join_negative_values(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& t = args[i];
    if (t.rfind("--", 0) == 0 && t.size() > 2 && t.find('=') == std::string::npos && i + 1 < args.size() &&
        args[i + 1].size() > 1 && args[i + 1][0] == '-' &&
        (is_number(args[i + 1]) || args[i + 1].find(':') != std::string::npos)) {
      out.push_back(t + "=" + args[++i]);
    } else {
      out.push_back(t);
    }
  }
  return out;
}

struct Sweep {
  double start = 0.0;
  double stop = 0.0;
  long count = 0;

  [[nodiscard]] double at(long i) const {
    if (count == 1) return start;
    return start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
};

inline Sweep parse_sweep(const std::string& s, const std::string& name) {
  const auto a = s.find(':');
  const auto b = s.find(':', a + 1);
  if (a == std::string::npos || b == std::string::npos) throw usage_error("sweep for --" + name + " must be start:stop:count");
  Sweep w;
  w.start = parse_double(s.substr(0, a), "--" + name);
  w.stop = parse_double(s.substr(a + 1, b - a - 1), "--" + name);
  const double c = parse_double(s.substr(b + 1), "--" + name);
  if (!std::isfinite(w.start) || !std::isfinite(w.stop)) throw usage_error("sweep bounds must be finite");
  if (!(c >= 1.0 && c <= 1e6) || std::floor(c) != c) throw usage_error("sweep count must be an integer in [1, 1000000]");
  w.count = static_cast<long>(c);
  return w;
}

class Cli {
 public:
  Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"umbra: special functions, umbral reduction and identity verification"};
    app.require_subcommand(1);
    std::vector<CLI::App*> subs;

    std::string fname;
    auto* eval = app.add_subcommand("eval", "evaluate a function: eval NAME --param value ...");
    eval->add_option("function", fname, "function name")->required();
    eval->allow_extras();
    subs.push_back(eval);

    std::vector<std::string> ids;
    auto* verify = app.add_subcommand("verify", "verify identities: verify all | verify ID... | verify ID --param value");
    verify->add_option("ids", ids, "identity ids or 'all'")->required();
    verify->allow_extras();
    subs.push_back(verify);

    std::string tname;
    auto* table = app.add_subcommand("table", "tabulate a function: table NAME --x start:stop:count --param value");
    table->add_option("function", tname, "function name")->required();
    table->allow_extras();
    subs.push_back(table);

    auto* catalog = app.add_subcommand("catalog", "list the identity catalog");
    subs.push_back(catalog);

    auto* functions_cmd = app.add_subcommand("functions", "list the functions known to eval and table");
    subs.push_back(functions_cmd);

    std::string format = "text";
    for (auto* s : subs) add_common(s, format);

    const std::vector<std::string> joined = join_negative_values(args);
    std::vector<std::string> rev(joined.rbegin(), joined.rend());
    try {
      app.parse(rev);
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return exit_ok;
    } catch (const CLI::ParseError& e) {
      if (e.get_exit_code() == 0) {
        out_ << app.help();
        return exit_ok;
      }
      err_ << "error: " << e.what() << "\n";
      return exit_usage;
    }

    try {
      CLI::App* active = nullptr;
      for (auto* s : subs)
        if (s->parsed()) active = s;
      apply_config(*active, format);
      cfg_.format = parse_format(format);
      cfg_.validate();
      if (active == eval) return cmd_eval(fname, parse_named(eval->remaining()));
      if (active == verify) return cmd_verify(ids, parse_named(verify->remaining()));
      if (active == table) return cmd_table(tname, parse_named(table->remaining()));
      if (active == catalog) return cmd_catalog();
      return cmd_functions();
    } catch (const usage_error& e) {
      err_ << "error: " << e.what() << "\n";
      return exit_usage;
    } catch (const unknown_identity& e) {
      err_ << "error: " << e.what() << "\n";
      return exit_usage;
    } catch (const domain_error& e) {
      err_ << "domain error: " << e.what() << "\n";
      return exit_usage;
    } catch (const error& e) {
      err_ << "evaluation error: " << e.what() << "\n";
      return exit_usage;
    }
  }

 private:
  std::ostream& out_;
  std::ostream& err_;
  CliConfig cfg_;
  std::unique_ptr<std::ofstream> file_;

  void add_common(CLI::App* s, std::string& format) {
    s->add_option("--format", format, "output format: json, csv or text");
    s->add_option("--out", cfg_.out, "write records to this file instead of stdout");
    s->add_option("--rel-tol", cfg_.rel_tol, "relative tolerance of the series evaluators");
    s->add_option("--abs-tol", cfg_.abs_tol, "absolute tolerance floor of the series evaluators");
    s->add_option("--max-terms", cfg_.max_terms, "series term limit");
    s->add_option("--parallelism", cfg_.parallelism, "worker threads for verify");
    s->add_option("--seed", cfg_.seed, "seed of the grid jitter");
    s->add_flag("--verbose", cfg_.verbose, "print series metadata and per-identity summaries");
    s->add_flag("--no-timing", cfg_.no_timing, "report seconds = 0 for byte-identical output");
    s->add_flag("--jitter", cfg_.jitter, "perturb grid points by up to 1% (seeded)");
    s->add_option("--config", cfg_.config_path, "flat key=value file with the same keys as the flags");
  }

  // Config file values apply only where the flag was not given.
  void apply_config(CLI::App& s, std::string& format) {
    if (cfg_.config_path.empty()) return;
    std::ifstream in(cfg_.config_path);
    if (!in) throw usage_error("cannot read config file '" + cfg_.config_path + "'");
    const std::map<std::string, std::function<void(const std::string&)>> setters = {
        {"format", [&](const std::string& v) { format = v; }},
        {"out", [&](const std::string& v) { cfg_.out = v; }},
        {"rel-tol", [&](const std::string& v) { cfg_.rel_tol = parse_double(v, "rel-tol"); }},
        {"abs-tol", [&](const std::string& v) { cfg_.abs_tol = parse_double(v, "abs-tol"); }},
        {"max-terms", [&](const std::string& v) { cfg_.max_terms = static_cast<int>(parse_double(v, "max-terms")); }},
        {"parallelism",
         [&](const std::string& v) { cfg_.parallelism = static_cast<int>(parse_double(v, "parallelism")); }},
        {"seed", [&](const std::string& v) { cfg_.seed = std::stoull(v); }},
        {"verbose", [&](const std::string& v) { cfg_.verbose = parse_bool(v); }},
        {"no-timing", [&](const std::string& v) { cfg_.no_timing = parse_bool(v); }},
        {"jitter", [&](const std::string& v) { cfg_.jitter = parse_bool(v); }},
    };
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw usage_error(cfg_.config_path + ":" + std::to_string(lineno) + ": expected key=value");
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      const auto it = setters.find(key);
      if (it == setters.end())
        throw usage_error(cfg_.config_path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
      if (s.get_option("--" + key)->count() == 0) it->second(value);
    }
  }

  static std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    const auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  }

  static bool parse_bool(const std::string& v) {
    if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
    if (v == "0" || v == "false" || v == "no" || v == "off") return false;
    throw usage_error("invalid boolean '" + v + "'");
  }

  std::ostream& sink() {
    if (cfg_.out.empty()) return out_;
    if (!file_) {
      file_ = std::make_unique<std::ofstream>(cfg_.out);
      if (!*file_) throw usage_error("cannot open output file '" + cfg_.out + "'");
    }
    return *file_;
  }

  static const FunctionSpec& lookup(const std::string& name) {
    const FunctionSpec* f = find_function(name);
    if (!f) throw usage_error("unknown function '" + name + "' (see the functions subcommand)");
    return *f;
  }

  int cmd_eval(const std::string& name, const std::map<std::string, std::string>& named) {
    const FunctionSpec& f = lookup(name);
    Args a;
    for (const auto& [k, v] : named) a[k] = parse_double(v, "--" + k);
    check_args(f, a);
    const FunctionValue r = f.fn(a, cfg_.policy());
    std::ostream& o = sink();
    switch (cfg_.format) {
      case Format::json: {
        ojson j;
        j["function"] = name;
        ojson args = ojson::object();
        for (const auto& p : f.params) args[p] = a.at(p);
        j["args"] = args;
        j["value"] = r.value;
        if (cfg_.verbose && r.meta) {
          j["path"] = std::string(to_string(r.meta->path));
          j["terms_used"] = r.meta->terms_used;
          j["tail_estimate"] = r.meta->tail_estimate;
          j["converged"] = r.meta->converged;
        }
        o << j.dump() << "\n";
        break;
      }
      case Format::csv:
        o << "function,value" << (cfg_.verbose && r.meta ? ",path,terms_used,tail_estimate,converged" : "") << "\n";
        o << name << ',' << num(r.value);
        if (cfg_.verbose && r.meta)
          o << ',' << to_string(r.meta->path) << ',' << r.meta->terms_used << ',' << num(r.meta->tail_estimate) << ','
            << (r.meta->converged ? "true" : "false");
        o << "\n";
        break;
      case Format::text:
        o << shortest(r.value) << "\n";
        if (cfg_.verbose && r.meta)
          o << "path: " << to_string(r.meta->path) << "\nterms_used: " << r.meta->terms_used
            << "\ntail_estimate: " << shortest(r.meta->tail_estimate)
            << "\nconverged: " << (r.meta->converged ? "true" : "false") << "\n";
        break;
    }
    return exit_ok;
  }

  int cmd_verify(std::vector<std::string> ids, const std::map<std::string, std::string>& named) {
    if (ids.size() == 1 && ids[0] == "all") {
      ids.clear();
      for (const auto& I : list_identities()) ids.push_back(I.id);
    }
    for (const auto& id : ids) find_identity(id);
    const VerifyOptions opt{!cfg_.no_timing, cfg_.jitter, cfg_.seed};
    std::vector<VerificationReport> reports;
    if (!named.empty()) {
      if (ids.size() != 1) throw usage_error("parameter values require exactly one identity id");
      std::map<std::string, double> p;
      for (const auto& [k, v] : named) p[k] = parse_double(v, "--" + k);
      reports.push_back(umbra::verify(ids[0], p, cfg_.policy(), opt.timing));
    } else {
      reports = verify_many(ids, cfg_.policy(), cfg_.parallelism, opt);
    }

    std::ostream& o = sink();
    if (cfg_.format == Format::csv) o << report_csv_header() << "\n";
    int pass = 0;
    int fail = 0;
    int skipped = 0;
    for (const auto& r : reports) {
      o << format_report(r, cfg_.format) << "\n";
      (r.status == VerifyStatus::pass ? pass : r.status == VerifyStatus::fail ? fail : skipped)++;
    }
    if (cfg_.verbose) {
      std::map<std::string, std::pair<int, int>> per;
      for (const auto& r : reports) {
        auto& e = per[r.id];
        ++e.second;
        if (r.status == VerifyStatus::pass) ++e.first;
      }
      for (const auto& [id, c] : per) err_ << id << ": " << c.first << "/" << c.second << " pass\n";
    }
    err_ << reports.size() << " records: " << pass << " pass, " << fail << " fail, " << skipped << " skipped\n";
    return (fail == 0 && skipped == 0) ? exit_ok : exit_fail;
  }

  int cmd_table(const std::string& name, const std::map<std::string, std::string>& named) {
    const FunctionSpec& f = lookup(name);
    std::string var;
    Sweep sweep;
    Args a;
    for (const auto& [k, v] : named) {
      if (v.find(':') != std::string::npos) {
        if (!var.empty()) throw usage_error("only one argument may be swept");
        var = k;
        sweep = parse_sweep(v, k);
        a[k] = sweep.start;
      } else {
        a[k] = parse_double(v, "--" + k);
      }
    }
    if (var.empty()) throw usage_error("table needs one argument given as start:stop:count");
    check_args(f, a);
    const EvalPolicy pol = cfg_.policy();
    std::ostream& o = sink();
    if (cfg_.format == Format::csv) o << var << ",value,path,terms_used\n";
    for (long i = 0; i < sweep.count; ++i) {
      a[var] = sweep.at(i);
      check_args(f, a);
      const FunctionValue r = f.fn(a, pol);
      const std::string path = r.meta ? std::string(to_string(r.meta->path)) : "direct";
      const int terms = r.meta ? r.meta->terms_used : 0;
      switch (cfg_.format) {
        case Format::json: {
          ojson j;
          j[var] = a[var];
          j["value"] = r.value;
          j["path"] = path;
          j["terms_used"] = terms;
          o << j.dump() << "\n";
          break;
        }
        case Format::csv: o << num(a[var]) << ',' << num(r.value) << ',' << path << ',' << terms << "\n"; break;
        case Format::text: o << shortest(a[var]) << ' ' << shortest(r.value) << ' ' << path << ' ' << terms << "\n"; break;
      }
    }
    return exit_ok;
  }

  int cmd_catalog() {
    std::ostream& o = sink();
    for (const auto& I : list_identities()) {
      if (cfg_.format == Format::text)
        o << I.id << "  " << I.description << "  (" << I.grid.size() << " points)\n";
      else
        o << identity_json(I).dump() << "\n";
    }
    return exit_ok;
  }

  int cmd_functions() {
    std::ostream& o = sink();
    for (const auto& f : functions()) {
      o << f.name;
      for (const auto& p : f.params) o << " --" << p;
      o << "\n";
    }
    return exit_ok;
  }
};

inline int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  Cli cli(out, err);
  return cli.run(args);
}

}  // namespace umbra::cli

#endif  // UMBRA_TOOLS_CLI_HPP
