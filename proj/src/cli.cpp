#include "deuring/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "deuring/drinfeld.hpp"
#include "deuring/errors.hpp"
#include "deuring/isogeny_graph.hpp"
#include "deuring/tower.hpp"
#include "deuring/universal.hpp"

namespace deuring {

namespace {

struct RunConfig {
  std::string command;
  unsigned q = 0;
  std::string prime;
  std::string var = "delta";
  std::string method = "all";
  unsigned max_degree = 2;
  std::string format = "text";
  std::string output;
  std::string dot;
};

/// Thrown for bad command-line values; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

ConstantField make_constants(unsigned q) {
  if (q > 65536) throw UsageError("q = " + std::to_string(q) + " is too large");
  return ConstantField::make(q);
}

PrimeModulus make_prime(const ConstantField& fq, const std::string& text) {
  if (text.empty()) throw UsageError("--prime is required");
  return PrimeModulus::parse(fq, text);
}

FieldPoly pick(const DeuringResult& r, const RunConfig& cfg) { return cfg.var == "lambda" ? r.H : r.h; }

DeuringResult run_method(Method m, const PrimeModulus& p) {
  switch (m) {
    case Method::Direct:
      return deuring_h_direct(p);
    case Method::GRecurrence:
      return deuring_h_grec(p);
    case Method::Universal:
      return deuring_universal(p);
  }
  throw DomainError("unknown method");
}

int cmd_compute(const RunConfig& cfg, std::ostream& out) {
  const ConstantField fq = make_constants(cfg.q);
  const PrimeModulus p = make_prime(fq, cfg.prime);
  std::vector<Method> methods;
  if (cfg.method == "all")
    methods = {Method::Direct, Method::GRecurrence, Method::Universal};
  else
    methods = {method_from_name(cfg.method)};

  std::vector<DeuringResult> results;
  for (auto m : methods) results.push_back(run_method(m, p));
  bool match = true;
  for (const auto& r : results) match = match && r.h == results.front().h && r.H == results.front().H;

  if (cfg.format == "json") {
    if (results.size() == 1) {
      out << to_json(results.front()).dump(2) << "\n";
    } else {
      nlohmann::json j{{"results", nlohmann::json::array()}, {"verdict", match ? "MATCH" : "MISMATCH"}};
      for (const auto& r : results) j["results"].push_back(to_json(r));
      out << j.dump(2) << "\n";
    }
  } else if (results.size() == 1) {
    out << to_string(pick(results.front(), cfg)) << "\n";
  } else {
    for (const auto& r : results) {
      const std::string label = method_name(r.method) + ":";
      out << label << std::string(11 - label.size(), ' ') << to_string(pick(r, cfg)) << "\n";
    }
    out << "verdict: " << (match ? "MATCH" : "MISMATCH") << "\n";
  }
  return match ? kExitOk : kExitVerificationFailed;
}

void print_checks(const std::vector<CheckResult>& checks, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : checks) j.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    out << j.dump(2) << "\n";
    return;
  }
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  std::size_t failed = 0;
  for (const auto& c : checks) {
    if (!c.passed) ++failed;
    out << (c.passed ? "PASS  " : "FAIL  ") << c.name;
    if (!c.detail.empty()) out << std::string(width - c.name.size() + 2, ' ') << c.detail;
    out << "\n";
  }
  out << checks.size() - failed << "/" << checks.size() << " checks passed\n";
}

bool all_passed(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  make_constants(cfg.q);
  const auto checks = run_verification(cfg.q, cfg.max_degree);
  print_checks(checks, cfg, out);
  return all_passed(checks) ? kExitOk : kExitVerificationFailed;
}

int cmd_graph(const RunConfig& cfg, std::ostream& out) {
  const ConstantField fq = make_constants(cfg.q);
  const PrimeModulus p = make_prime(fq, cfg.prime);
  const IsogenyGraph g = build_supersingular_graph(p);
  const ComponentReport r = verify_component(g);
  if (!cfg.dot.empty()) {
    std::ofstream f(cfg.dot);
    if (!f) throw UsageError("cannot write " + cfg.dot);
    f << to_dot(g);
  }
  if (cfg.format == "json") {
    out << nlohmann::json{{"graph", to_json(g)}, {"report", to_json(r)}}.dump(2) << "\n";
  } else {
    out << "q = " << fq.q << ", p(T) = " << p.to_string() << ", d = " << p.degree() << "\n";
    out << "h = " << to_string(g.h) << "\n";
    out << "ambient degree over residue field: " << r.ambient_degree << "\n";
    out << "size: " << r.size << " (expected " << r.expected_size << ")\n";
    out << "out-degree:";
    for (const auto& [deg, n] : r.out_degree_histogram) out << " " << deg << " x" << n;
    out << "\n";
    out << "self-loops: " << r.self_loops << "\n";
    out << "closed: " << (r.closed ? "yes" : "no") << "\n";
    out << "connected: " << (r.connected ? "yes" : "no") << "\n";
    out << "edges on curve: " << (r.edges_on_curve ? "yes" : "no") << "\n";
    out << "vertices:\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      out << "  v" << i << " = " << g.vertices[i].to_string() << " ->";
      for (const auto& e : g.edges) {
        if (e.from != i) continue;
        out << " " << (e.to == GraphEdge::kOutside ? e.target.to_string() : "v" + std::to_string(e.to));
        if (e.multiplicity > 1) out << " (x" << e.multiplicity << ")";
      }
      out << "\n";
    }
    for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  }
  return r.ok() ? kExitOk : kExitVerificationFailed;
}

int cmd_tower(const RunConfig& cfg, std::ostream& out) {
  const auto reports = verify_tower(make_constants(cfg.q));
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.verified;
  if (cfg.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : reports) j.push_back(to_json(r));
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      out << (r.verified ? "PASS  " : "FAIL  ") << r.name << "  (terms " << r.lhs_terms << "/" << r.rhs_terms;
      if (r.name == "j_chain") out << ", j-map degree " << r.j_map_degree;
      out << ")\n";
      for (const auto& f : r.failures) out << "      " << f << "\n";
    }
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_identities(const RunConfig& cfg, std::ostream& out) {
  const ConstantField fq = make_constants(cfg.q);
  std::vector<CheckResult> checks;
  const auto u = u_sequence(fq, cfg.max_degree);
  checks.push_back({"u_i(0) = T^(q(q^i-1)/(q-1))", check_constant_terms(u), "i <= " + std::to_string(cfg.max_degree)});
  checks.push_back({"u_i monic of degree (q^i-1)/(q-1)", check_degrees(u), "i <= " + std::to_string(cfg.max_degree)});
  for (unsigned i = 0; i <= cfg.max_degree; ++i)
    checks.push_back({"key identity i=" + std::to_string(i), check_key_identity(fq, i), ""});
  const auto dr = check_derivative_recursion(fq, cfg.max_degree);
  checks.push_back({"derivative recursion", dr.ok(), "i <= " + std::to_string(cfg.max_degree)});
  print_checks(checks, cfg, out);
  return all_passed(checks) ? kExitOk : kExitVerificationFailed;
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
  if (cfg.command == "compute") return cmd_compute(cfg, out);
  if (cfg.command == "verify") return cmd_verify(cfg, out);
  if (cfg.command == "graph") return cmd_graph(cfg, out);
  if (cfg.command == "tower") return cmd_tower(cfg, out);
  return cmd_identities(cfg, out);
}

std::string join_names(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

}  // namespace

std::vector<CheckResult> run_verification(unsigned q, unsigned max_degree) {
  const ConstantField fq = ConstantField::make(q);
  std::vector<CheckResult> checks;
  for (const auto& p : enumerate_primes(fq, max_degree)) {
    const std::string tag = "p=" + p.to_string() + ": ";
    const unsigned d = p.degree();
    const auto N = deuring_degree(q, d);
    const auto direct = deuring_h_direct(p);
    const auto grec = deuring_h_grec(p);
    const auto uni = deuring_universal(p);
    checks.push_back({tag + "h direct = grec = universal", direct.h == grec.h && grec.h == uni.h, to_string(direct.h)});
    checks.push_back({tag + "H = U_d mod p", deuring_H(p, uni.h) == uni.H, "degree " + std::to_string(uni.H.degree())});

    const FieldPoly& h = direct.h;
    const bool shape = h.is_monic() && h.degree() == static_cast<int>(N) && !h[0].is_zero() &&
                       poly_gcd(h, derivative(h)).degree() == 0;
    checks.push_back({tag + "h monic, separable, h(0) != 0", shape, "degree " + std::to_string(N)});

    const auto g = g_coefficients_direct(p);
    bool structure = true;
    for (unsigned k = 0; k < d; ++k) structure = structure && g[k].is_zero();
    std::uint64_t e2d = 0;
    for (unsigned i = 0; i < d; ++i) e2d += checked_pow(q, 2 * i);
    structure = structure && g[2 * d] == FieldPoly::monomial(one_like(h.zero()), e2d);
    for (unsigned k = d; k < 2 * d; ++k) structure = structure && divides(h, g[k]);
    checks.push_back({tag + "g_k structure of psi_p", structure, "k < 2d = " + std::to_string(2 * d)});

    const auto report = verify_component(build_supersingular_graph(p, h));
    checks.push_back({tag + "supersingular graph", report.ok(),
                      "size " + std::to_string(report.size) + ", ambient degree " + std::to_string(report.ambient_degree)});
  }

  const auto u = u_sequence(fq, max_degree);
  const std::string range = "i <= " + std::to_string(max_degree);
  checks.push_back({"u_i(0) = T^(q(q^i-1)/(q-1))", check_constant_terms(u), range});
  checks.push_back({"u_i monic of degree (q^i-1)/(q-1)", check_degrees(u), range});
  for (unsigned i = 0; i <= max_degree; ++i)
    checks.push_back({"key identity i=" + std::to_string(i), check_key_identity(fq, i), ""});
  checks.push_back({"derivative recursion", check_derivative_recursion(fq, max_degree).ok(), range});
  for (const auto& r : verify_tower(fq))
    checks.push_back({"tower " + r.name, r.verified, join_names(r.failures)});
  return checks;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Supersingular invariants of rank-2 Drinfeld modules over F_q[T]", "deuring"};
  app.require_subcommand(1);

  auto add_q = [&](CLI::App* sub) { sub->add_option("--q", cfg.q, "size of the constant field (prime power)")->required(); };
  auto add_prime = [&](CLI::App* sub) {
    sub->add_option("--prime", cfg.prime, "monic irreducible p(T) != T, e.g. \"T^2+T+1\"")->required();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output", cfg.output, "write output to this file instead of stdout");
  };

  auto* compute = app.add_subcommand("compute", "compute h (Delta-invariant) or H (lambda-invariant)");
  add_q(compute);
  add_prime(compute);
  compute->add_option("--var", cfg.var, "delta prints h, lambda prints H")->check(CLI::IsMember({"delta", "lambda"}));
  compute->add_option("--method", cfg.method, "computation method")
      ->check(CLI::IsMember({"direct", "grec", "universal", "all"}));
  add_format(compute);

  auto* verify = app.add_subcommand("verify", "run the property suite for every prime up to a degree bound");
  add_q(verify);
  verify->add_option("--max-degree", cfg.max_degree, "largest degree of p(T)")->check(CLI::Range(1u, 6u));
  add_format(verify);

  auto* graph = app.add_subcommand("graph", "build the supersingular isogeny graph");
  add_q(graph);
  add_prime(graph);
  graph->add_option("--dot", cfg.dot, "also write the graph in DOT format to this file");
  add_format(graph);

  auto* tower = app.add_subcommand("tower", "verify the identities defining the tower X_0(T^n)");
  add_q(tower);
  add_format(tower);

  auto* identities = app.add_subcommand("identities", "verify identities of the universal sequence u_i");
  add_q(identities);
  identities->add_option("--max-degree", cfg.max_degree, "largest index i")->check(CLI::Range(0u, 6u));
  add_format(identities);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }
  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();

  try {
    if (cfg.output.empty()) return dispatch(cfg, out);
    std::ostringstream buffer;
    const int code = dispatch(cfg, buffer);
    std::ofstream f(cfg.output);
    if (!f) throw UsageError("cannot write " + cfg.output);
    f << buffer.str();
    return code;
  } catch (const InvalidPrime& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const Error& e) {
    err << "verification error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
}

}  // namespace deuring
