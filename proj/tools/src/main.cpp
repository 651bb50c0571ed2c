// Command-line surface for the jackpoly library: evaluation, expansion, and
// identity-verification campaigns.  Exit codes: 0 on success or when the
// checked identity holds, 1 on an identity violation, 2 on usage errors.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "jackpoly/bessel.hpp"
#include "jackpoly/binomial.hpp"
#include "jackpoly/integral.hpp"
#include "jackpoly/jack.hpp"
#include "jackpoly/shifted.hpp"
#include "jackpoly/sym_expansion.hpp"
#include "jackpoly/thetadim.hpp"
#include "jackpoly/verify.hpp"

namespace {

using namespace jackpoly;

// Invalid input, reported with the offending flag; mapped to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto named(const char* flag, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

Partition parse_partition(const char* flag, const std::string& text) {
  return named(flag, [&] { return Partition::parse(text); });
}

Rational parse_theta(const char* flag, const std::string& text) {
  return named(flag, [&] {
    const Rational theta = Rational::parse(text);
    if (theta.sign() <= 0) throw std::invalid_argument("theta must be positive");
    return theta;
  });
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::string item;
  for (char c : text) {
    if (c == ',') {
      items.push_back(item);
      item.clear();
    } else {
      item += c;
    }
  }
  items.push_back(item);
  return items;
}

std::vector<Rational> parse_rational_list(const char* flag, const std::string& text) {
  return named(flag, [&] {
    std::vector<Rational> out;
    for (const std::string& item : split_list(text)) out.push_back(Rational::parse(item));
    return out;
  });
}

std::vector<double> parse_double_list(const char* flag, const std::string& text) {
  return named(flag, [&] {
    std::vector<double> out;
    for (const std::string& item : split_list(text)) {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument("bad number '" + item + "'");
      out.push_back(v);
    }
    return out;
  });
}

std::string fmt15(long double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.15Lg", static_cast<long double>(v));
  return buf;
}

std::string expansion_text(const SymExpansion& e) {
  if (e.is_zero()) return "0";
  const char* tag = e.basis() == SymBasis::monomial ? "m" : "P";
  std::string out;
  for (const auto& [part, coeff] : e.coeffs()) {
    if (!out.empty()) out += '\n';
    out += std::string(tag) + "[" + part.str() + "] " + coeff.str();
  }
  return out;
}

// Where the payload goes: --output path or stdout.
struct Sink {
  std::string path;
  void write(const std::string& payload) const {
    if (path.empty()) {
      std::cout << payload << '\n';
      return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("--output: cannot open '" + path + "'");
    out << payload << '\n';
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jack polynomials, shifted Jack polynomials, and their identities"};
  app.require_subcommand(1);

  // Shared option storage; exactly one leaf subcommand runs per invocation.
  std::string mu_text, lambda_text = "0", theta_text, point_text, l_text, x_text;
  std::string method = "combinatorial", rule_text = "jacobi", format = "text";
  Sink sink;
  int n = 0, degree_cut = 20, nodes = 16, max_size = 4;
  double tol = 1e-9;
  int exit_code = 0;

  const auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output", sink.path, "write the result to a file instead of stdout");
    cmd->add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* jack_cmd = app.add_subcommand("jack", "Jack polynomial operations");
  jack_cmd->require_subcommand(1);

  CLI::App* jack_expand = jack_cmd->add_subcommand("expand", "monomial expansion of P_mu(x; theta)");
  jack_expand->add_option("--mu", mu_text, "partition, e.g. 3,1")->required();
  jack_expand->add_option("--theta", theta_text, "Jack parameter as p/q")->required();
  jack_expand->add_option("--n", n, "number of variables")->required();
  jack_expand->add_option("--method", method, "construction: combinatorial or branching")
      ->check(CLI::IsMember({"combinatorial", "branching"}));
  add_output(jack_expand);
  jack_expand->callback([&] {
    const Partition mu = parse_partition("--mu", mu_text);
    const Rational theta = parse_theta("--theta", theta_text);
    const JackParams params = named("--n", [&] { return JackParams(n, theta); });
    const MultiPoly p =
        method == "branching" ? jack_by_branching(mu, params) : jack_combinatorial(mu, params);
    const SymExpansion expansion = to_monomial_expansion(p);
    sink.write(format == "json" ? expansion.to_json() : expansion_text(expansion));
  });

  CLI::App* jack_eval = jack_cmd->add_subcommand("eval", "evaluate P_mu at a rational point");
  jack_eval->add_option("--mu", mu_text, "partition, e.g. 3,1")->required();
  jack_eval->add_option("--theta", theta_text, "Jack parameter as p/q")->required();
  jack_eval->add_option("--n", n, "number of variables")->required();
  jack_eval->add_option("--point", point_text, "comma-separated rational coordinates")->required();
  add_output(jack_eval);
  jack_eval->callback([&] {
    const Partition mu = parse_partition("--mu", mu_text);
    const Rational theta = parse_theta("--theta", theta_text);
    const JackParams params = named("--n", [&] { return JackParams(n, theta); });
    const std::vector<Rational> point = parse_rational_list("--point", point_text);
    if (static_cast<int>(point.size()) != n)
      throw UsageError("--point: expected " + std::to_string(n) + " coordinates");
    const Rational value = jack_combinatorial(mu, params).evaluate(point);
    sink.write(format == "json" ? nlohmann::ordered_json{{"value", value.str()}}.dump()
                                : value.str());
  });

  CLI::App* shifted_cmd = app.add_subcommand("shifted", "shifted Jack polynomial operations");
  shifted_cmd->require_subcommand(1);

  CLI::App* shifted_eval_cmd =
      shifted_cmd->add_subcommand("eval", "evaluate P*_mu at a partition lambda");
  shifted_eval_cmd->add_option("--mu", mu_text, "partition, e.g. 2,1")->required();
  shifted_eval_cmd->add_option("--lambda", lambda_text, "evaluation partition")->required();
  shifted_eval_cmd->add_option("--theta", theta_text, "Jack parameter as p/q")->required();
  shifted_eval_cmd->add_option("--n", n, "number of variables (default: fit both partitions)");
  add_output(shifted_eval_cmd);
  shifted_eval_cmd->callback([&] {
    const Partition mu = parse_partition("--mu", mu_text);
    const Partition lambda = parse_partition("--lambda", lambda_text);
    const Rational theta = parse_theta("--theta", theta_text);
    const int vars = shifted_eval_cmd->count("--n") ? n : std::max({mu.length(), lambda.length(), 1});
    const Rational value =
        named("--n", [&] { return shifted_eval(mu, lambda, JackParams(vars, theta)); });
    sink.write(format == "json" ? nlohmann::ordered_json{{"value", value.str()}}.dump()
                                : value.str());
  });

  CLI::App* binom_cmd = app.add_subcommand("binom", "generalized binomial coefficients");
  binom_cmd->require_subcommand(1);

  CLI::App* binom_coeff = binom_cmd->add_subcommand("coeff", "(lambda choose mu)_theta");
  binom_coeff->add_option("--lambda", lambda_text, "upper partition")->required();
  binom_coeff->add_option("--mu", mu_text, "lower partition")->required();
  binom_coeff->add_option("--theta", theta_text, "Jack parameter as p/q")->required();
  add_output(binom_coeff);
  binom_coeff->callback([&] {
    const Partition lambda = parse_partition("--lambda", lambda_text);
    const Partition mu = parse_partition("--mu", mu_text);
    const Rational theta = parse_theta("--theta", theta_text);
    const Rational value = binomial_coefficient(lambda, mu, theta);
    sink.write(format == "json" ? nlohmann::ordered_json{{"value", value.str()}}.dump()
                                : value.str());
  });

  CLI::App* binom_verify = binom_cmd->add_subcommand("verify", "check the binomial formula");
  binom_verify->add_option("--lambda", lambda_text, "partition")->required();
  binom_verify->add_option("--n", n, "number of variables")->required();
  binom_verify->add_option("--theta", theta_text, "Jack parameter as p/q")->required();
  add_output(binom_verify);
  binom_verify->callback([&] {
    const Partition lambda = parse_partition("--lambda", lambda_text);
    const Rational theta = parse_theta("--theta", theta_text);
    const JackParams params = named("--n", [&] { return JackParams(n, theta); });
    const BinomialReport report = named("--lambda", [&] { return verify_binomial(lambda, params); });
    exit_code = report.equal ? 0 : 1;
    if (format == "json") {
      sink.write(to_json(report));
    } else {
      sink.write(std::string("equal ") + (report.equal ? "true" : "false") + "\nmax_abs_diff " +
                 report.max_abs_diff.str());
    }
  });

  CLI::App* thetadim_cmd = app.add_subcommand("thetadim", "theta-dimension of a (skew) diagram");
  thetadim_cmd->add_option("--lambda", lambda_text, "outer partition")->required();
  thetadim_cmd->add_option("--mu", mu_text, "inner partition (default: empty)");
  thetadim_cmd->add_option("--theta", theta_text, "Jack parameter as p/q")->required();
  add_output(thetadim_cmd);
  thetadim_cmd->callback([&] {
    const Partition lambda = parse_partition("--lambda", lambda_text);
    const Partition mu = thetadim_cmd->count("--mu") ? parse_partition("--mu", mu_text) : Partition();
    const Rational theta = parse_theta("--theta", theta_text);
    const ThetaDim result = thetadim(lambda, mu, theta);
    if (format == "json") {
      nlohmann::ordered_json j;
      j["lambda"] = result.lambda.parts();
      j["mu"] = result.mu.parts();
      j["theta"] = result.theta.str();
      j["value"] = result.value.str();
      sink.write(j.dump());
    } else {
      sink.write(result.value.str());
    }
  });

  CLI::App* bessel_cmd = app.add_subcommand("bessel", "truncated multivariate Bessel series");
  bessel_cmd->add_option("--l", l_text, "comma-separated coordinates, weakly decreasing")->required();
  bessel_cmd->add_option("--x", x_text, "comma-separated coordinates")->required();
  bessel_cmd->add_option("--theta", theta_text, "Jack parameter as p/q")->required();
  bessel_cmd->add_option("--degree-cut", degree_cut, "series truncation degree")
      ->check(CLI::NonNegativeNumber);
  add_output(bessel_cmd);
  bessel_cmd->callback([&] {
    const std::vector<double> l = parse_double_list("--l", l_text);
    const std::vector<double> x = parse_double_list("--x", x_text);
    if (l.size() != x.size()) throw UsageError("--x: must have the same length as --l");
    const Rational theta = parse_theta("--theta", theta_text);
    const BesselEval eval = named("--l", [&] { return bessel_series(l, x, theta, degree_cut); });
    const long double gap = bessel_symmetry_gap(l, x, theta, degree_cut);
    if (format == "json") {
      nlohmann::ordered_json j;
      j["l"] = l;
      j["x"] = x;
      j["theta"] = theta.str();
      j["degree_cut"] = degree_cut;
      j["value"] = static_cast<double>(eval.value);
      j["tail_estimate"] = static_cast<double>(eval.tail_estimate);
      j["symmetry_gap"] = static_cast<double>(gap);
      sink.write(j.dump());
    } else {
      sink.write("value " + fmt15(eval.value) + "\ntail_estimate " + fmt15(eval.tail_estimate) +
                 "\nsymmetry_gap " + fmt15(gap));
    }
  });

  CLI::App* integral_cmd = app.add_subcommand("integral", "integral representation of P_mu");
  integral_cmd->require_subcommand(1);

  CLI::App* integral_verify = integral_cmd->add_subcommand("verify", "quadrature vs exact P_mu(lambda)");
  integral_verify->add_option("--mu", mu_text, "partition with fewer parts than lambda has entries")
      ->required();
  integral_verify->add_option("--lambda", lambda_text, "strictly decreasing real coordinates")
      ->required();
  integral_verify->add_option("--theta", theta_text, "Jack parameter as p/q")->required();
  integral_verify->add_option("--nodes", nodes, "quadrature nodes per dimension")
      ->check(CLI::PositiveNumber);
  integral_verify->add_option("--rule", rule_text, "quadrature rule: jacobi or legendre")
      ->check(CLI::IsMember({"jacobi", "legendre"}));
  integral_verify->add_option("--tol", tol, "relative error bound for exit code 0");
  add_output(integral_verify);
  integral_verify->callback([&] {
    const Partition mu = parse_partition("--mu", mu_text);
    const std::vector<double> lambda = parse_double_list("--lambda", lambda_text);
    const Rational theta = parse_theta("--theta", theta_text);
    QuadratureSpec spec;
    spec.nodes_per_dim = nodes;
    spec.rule = rule_text == "jacobi" ? QuadRule::gauss_jacobi : QuadRule::gauss_legendre;
    if (spec.rule == QuadRule::gauss_jacobi) spec.jacobi_exponent = theta.to_double() - 1;
    const IntegralCheck check =
        named("--lambda", [&] { return verify_integral(mu, lambda, theta, spec); });
    exit_code = check.rel_err <= tol ? 0 : 1;
    if (format == "json") {
      sink.write(to_json(check));
    } else {
      sink.write("lhs " + fmt15(check.lhs) + "\nrhs " + fmt15(check.rhs) + "\nrel_err " +
                 fmt15(check.rel_err));
    }
  });

  CLI::App* verify_cmd = app.add_subcommand("verify", "identity verification batteries");
  verify_cmd->require_subcommand(1);

  CLI::App* verify_suite = verify_cmd->add_subcommand("suite", "run the full property battery");
  verify_suite->add_option("--max-size", max_size, "bound on |mu| and |lambda|")
      ->check(CLI::PositiveNumber);
  add_output(verify_suite);
  verify_suite->callback([&] {
    const std::vector<CheckResult> results = run_verification_suite(max_size);
    bool all_pass = true;
    if (format == "json") {
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      for (const CheckResult& r : results) {
        all_pass = all_pass && r.pass;
        j.push_back({{"name", r.name}, {"pass", r.pass}, {"cases", r.cases}, {"detail", r.detail}});
      }
      sink.write(j.dump());
    } else {
      std::string out;
      for (const CheckResult& r : results) {
        all_pass = all_pass && r.pass;
        if (!out.empty()) out += '\n';
        out += (r.pass ? "PASS " : "FAIL ") + r.name + " (" + std::to_string(r.cases) + " cases)";
        if (!r.pass) out += ": " + r.detail;
      }
      sink.write(out);
    }
    exit_code = all_pass ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
