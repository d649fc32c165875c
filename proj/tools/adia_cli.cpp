// Command-line front end. Talks to the library only through adia.h.
#include <adia/adia.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "config_schema.hpp"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

struct Failure {
  int exit_code;
  std::string message;
};

// Shortest representation that parses back to the same double.
std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of zero
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

void check(adia_status s) {
  if (s == ADIA_OK) return;
  throw Failure{adia_status_is_validation(s) ? kExitValidation : kExitNumerical,
                adia_last_error()};
}

void invalid(const std::string& msg) { throw Failure{kExitValidation, msg}; }

using TablePtr = std::unique_ptr<adia_table, decltype(&adia_table_free)>;

void write_table(std::ostream& out, const adia_table* t) {
  const std::size_t cols = adia_table_cols(t);
  for (std::size_t j = 0; j < cols; ++j) out << (j ? "," : "") << adia_table_column(t, j);
  out << '\n';
  for (std::size_t i = 0; i < adia_table_rows(t); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (j) out << ',';
      if (const char* s = adia_table_text(t, i, j)) out << s;
      else out << fmt(adia_table_number(t, i, j));
    }
    out << '\n';
  }
}

// Values collected from flags and the config file.
struct Args {
  std::string json_config, output;
  std::string fn, side = "none", method = "contour", check = "adiabatic", snap = "cell-average";
  double re = 0, im = 0, t = 0, tau = 0, t0 = 0, t1 = 0, xi = 0, x_min = 0, x_max = 0;
  double delta_reg = 0, dt = 0.01;
  std::vector<double> eps;
  int n = 1, x_steps = 0, samples = 0, nx = 4000;
  long long seed = 20240601;
};

struct Command {
  CLI::App* app;
  std::vector<std::string> required;  // long names that must be set by flag or config
};

std::string json_to_arg(const nlohmann::json& v) {
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + json_to_arg(v[i]);
    return s;
  }
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return fmt(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void build(CLI::App& app, Args& a, std::map<std::string, Command>& cmds) {
  app.require_subcommand(1, 1);
  auto common = [&](CLI::App* s) {
    s->add_option("--json-config", a.json_config, "JSON config file; flags win on conflict");
    s->add_option("-o,--output", a.output, "Output file (default stdout)");
  };
  auto eps_single = [&](CLI::App* s) { s->add_option("--eps", a.eps, "Adiabatic parameter")->expected(1); };

  CLI::App* special = app.add_subcommand("special", "Branch, special and difference-equation functions");
  common(special);
  special->add_option("--fn", a.fn, "Function name");
  special->add_option("--re", a.re, "Real part of the argument");
  special->add_option("--im", a.im, "Imaginary part of the argument");
  special->add_option("--eps", a.eps, "Adiabatic parameter for L0, L1, P, R0, A, R")->expected(1);
  special->add_option("--side", a.side, "Limit side on the real axis: none, above, below");
  cmds["special"] = {special, {"fn", "re"}};

  CLI::App* eigen = app.add_subcommand("eigen", "Instantaneous eigen-momentum and eigenvalue");
  common(eigen);
  eigen->add_option("--n", a.n, "Level index");
  eigen->add_option("--tau", a.tau, "Slow time");
  cmds["eigen"] = {eigen, {"n", "tau"}};

  CLI::App* field = app.add_subcommand("field", "Psi_n on an x grid");
  common(field);
  eps_single(field);
  field->add_option("--n", a.n, "Level index");
  field->add_option("--t", a.t, "Time");
  field->add_option("--x-min", a.x_min, "First x");
  field->add_option("--x-max", a.x_max, "Last x (default 1 - eps t)");
  field->add_option("--x-steps", a.x_steps, "Number of x samples (default 200)");
  field->add_option("--method", a.method, "contour or series");
  cmds["field"] = {field, {"eps", "t"}};

  CLI::App* compare = app.add_subcommand("compare", "Exact Psi_n against the regime leading term");
  common(compare);
  eps_single(compare);
  compare->add_option("--n", a.n, "Level index");
  compare->add_option("--t", a.t, "Time");
  compare->add_option("--x-steps", a.x_steps, "Number of x samples on [0, 1 - eps t] (default 50)");
  compare->add_option("--delta-reg", a.delta_reg, "Transition window width (default 5 eps^(1/3))");
  cmds["compare"] = {compare, {"eps", "t"}};

  CLI::App* sweep = app.add_subcommand("sweep", "Named verification runs over parameter lists");
  common(sweep);
  sweep->add_option("--check", a.check, "Check name")->default_str("adiabatic");
  sweep->add_option("--eps", a.eps, "Comma-separated eps list")->delimiter(',');
  sweep->add_option("--n", a.n, "Level index");
  sweep->add_option("--tau", a.tau, "Slow time");
  sweep->add_option("--xi", a.xi, "Exterior coordinate");
  sweep->add_option("--x-steps", a.x_steps, "Samples per profile");
  sweep->add_option("--samples", a.samples, "Random samples per eps");
  sweep->add_option("--seed", a.seed, "Seed for random samples");
  cmds["sweep"] = {sweep, {}};

  CLI::App* oracle = app.add_subcommand("oracle", "Crank-Nicolson propagation against Psi_n");
  common(oracle);
  eps_single(oracle);
  oracle->add_option("--n", a.n, "Level index");
  oracle->add_option("--t0", a.t0, "Start time");
  oracle->add_option("--t1", a.t1, "End time");
  oracle->add_option("--x-max", a.x_max, "Domain length (default 40)");
  oracle->add_option("--nx", a.nx, "Grid intervals");
  oracle->add_option("--dt", a.dt, "Time step");
  oracle->add_option("--snap", a.snap, "cell-average or nearest-node");
  cmds["oracle"] = {oracle, {"eps", "t0", "t1"}};
}

bool given(const CLI::App* sub, const std::string& name) {
  const CLI::Option* o = sub->get_option_no_throw("--" + name);
  return o != nullptr && o->count() > 0;
}

// Rebuilds argv with config values for flags the user did not pass.
std::vector<std::string> merge_config(const std::vector<std::string>& argv, const std::string& sub_name,
                                      const CLI::App* sub, const std::string& path) {
  std::ifstream in(path);
  if (!in) invalid("cannot open config file " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const std::exception& e) {
    invalid(std::string("config is not valid JSON: ") + e.what());
  }
  const auto errs = adia_cli::validate_schema(adia_cli::config_schema(), doc);
  if (!errs.empty()) {
    std::string msg = "config does not match the schema:";
    for (const auto& e : errs) msg += "\n  " + e;
    invalid(msg);
  }
  std::vector<std::string> extra;
  for (const auto& [key, val] : doc.items()) {
    if (key == "format_version") continue;
    if (sub->get_option_no_throw("--" + key) == nullptr)
      invalid("config key '" + key + "' is not accepted by " + sub_name);
    if (given(sub, key)) continue;
    extra.push_back("--" + key);
    extra.push_back(json_to_arg(val));
  }
  std::vector<std::string> merged(argv.begin(), argv.end());
  merged.insert(merged.end(), extra.begin(), extra.end());
  return merged;
}

double eps_one(const Args& a) {
  if (a.eps.size() != 1) invalid("--eps takes a single value here");
  return a.eps.front();
}

void run_special(const Args& a, std::ostream& out) {
  adia_complex v;
  check(adia_special(a.fn.c_str(), {a.re, a.im}, a.eps.empty() ? 0.1 : eps_one(a), a.side.c_str(), &v));
  out << "re,im\n" << fmt(v.re) << ',' << fmt(v.im) << '\n';
}

void run_eigen(const Args& a, std::ostream& out) {
  double p, e, d;
  check(adia_eigen(a.n, a.tau, &p, &e, &d));
  out << "p_n,E_n,dlnpn_dtau\n" << fmt(p) << ',' << fmt(e) << ',' << fmt(d) << '\n';
}

void run_field(const Args& a, const CLI::App* sub, std::ostream& out) {
  const double eps = eps_one(a);
  const double x_max = given(sub, "x-max") ? a.x_max : 1.0 - eps * a.t;
  adia_table* t = nullptr;
  check(adia_field_table(eps, a.n, a.t, a.x_min, x_max, a.x_steps > 0 ? a.x_steps : 200,
                         a.method.c_str(), &t));
  TablePtr hold(t, adia_table_free);
  write_table(out, t);
}

void run_compare(const Args& a, std::ostream& out) {
  adia_table* t = nullptr;
  check(adia_compare_table(eps_one(a), a.n, a.t, a.x_steps > 0 ? a.x_steps : 50, a.delta_reg, &t));
  TablePtr hold(t, adia_table_free);
  write_table(out, t);
}

void run_sweep(const Args& a, const CLI::App* sub, std::ostream& out) {
  adia_check_params p;
  adia_check_params_init(&p);
  p.eps = a.eps.empty() ? nullptr : a.eps.data();
  p.eps_count = a.eps.size();
  if (given(sub, "n")) p.n = a.n;
  if (given(sub, "tau")) p.tau = a.tau;
  if (given(sub, "xi")) p.xi = a.xi;
  p.x_steps = a.x_steps;
  p.samples = a.samples;
  if (a.seed < 0) invalid("--seed must be >= 0");
  p.seed = static_cast<unsigned long long>(a.seed);
  adia_table* t = nullptr;
  check(adia_check(a.check.c_str(), &p, &t));
  TablePtr hold(t, adia_table_free);
  write_table(out, t);
}

void run_oracle(const Args& a, const CLI::App* sub, std::ostream& out) {
  adia_oracle_report r;
  check(adia_oracle(eps_one(a), a.n, a.t0, a.t1, given(sub, "x-max") ? a.x_max : 40.0, a.nx, a.dt,
                    a.snap.c_str(), &r));
  out << "deviation,norm_drift,boundary_amplitude,steps,runtime_ms\n"
      << fmt(r.deviation) << ',' << fmt(r.norm_drift) << ',' << fmt(r.boundary_amplitude) << ','
      << r.steps << ',' << fmt(r.runtime_ms) << '\n';
}

int run(const std::vector<std::string>& argv) {
  Args a;
  CLI::App app{"adia_cli: adiabatic evolution in a shrinking well", "adia_cli"};
  std::map<std::string, Command> cmds;
  build(app, a, cmds);
  auto parse = [&](const std::vector<std::string>& args) {
    std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
    app.clear();
    app.parse(rev);
  };
  try {
    parse(argv);
    const CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (!a.json_config.empty()) {
      const std::string path = a.json_config;
      parse(merge_config(argv, name, sub, path));
      sub = app.get_subcommands().front();
    }
    for (const auto& req : cmds[name].required)
      if (!given(sub, req)) invalid("missing required option --" + req);

    std::ofstream file;
    std::ostringstream buffer;
    std::ostream& out = buffer;
    if (name == "special") run_special(a, out);
    else if (name == "eigen") run_eigen(a, out);
    else if (name == "field") run_field(a, sub, out);
    else if (name == "compare") run_compare(a, out);
    else if (name == "sweep") run_sweep(a, sub, out);
    else if (name == "oracle") run_oracle(a, sub, out);
    if (a.output.empty()) {
      std::cout << buffer.str();
    } else {
      file.open(a.output);
      if (!file) invalid("cannot open output file " + a.output);
      file << buffer.str();
    }
    return kExitOk;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.exit_code;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(std::vector<std::string>(argv, argv + argc)); }
