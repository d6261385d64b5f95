#include "deuring/isogeny_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "deuring/errors.hpp"

namespace deuring {

namespace {

bool by_code(const FieldElement& a, const FieldElement& b) { return a.code() < b.code(); }

FieldElement to_ambient(const FieldElement& x, const FieldPtr& ambient) {
  const FieldPtr f = common_field(x.field(), ambient);
  if (f != ambient) throw ContextMismatch("element does not lie in the ambient field");
  return x.embed(ambient);
}

std::vector<FieldElement> roots_or_throw(const FieldPoly& f, const FieldPtr& ambient, std::size_t expected) {
  auto roots = roots_in_field(f, ambient);
  if (roots.size() < expected) throw AmbientTooSmall(roots.size(), expected);
  return roots;
}

/// Groups a sorted multiset into edges leaving vertex `from`.
std::vector<GraphEdge> group_edges(std::size_t from, const std::vector<FieldElement>& targets,
                                   const std::vector<FieldElement>& vertices) {
  std::vector<GraphEdge> out;
  for (const auto& t : targets) {
    if (!out.empty() && out.back().target == t) {
      ++out.back().multiplicity;
      continue;
    }
    GraphEdge e;
    e.from = from;
    e.target = t;
    e.multiplicity = 1;
    const auto it = std::lower_bound(vertices.begin(), vertices.end(), t, by_code);
    if (it != vertices.end() && *it == t) e.to = static_cast<std::size_t>(it - vertices.begin());
    out.push_back(e);
  }
  return out;
}

std::size_t repeated(const std::vector<FieldElement>& sorted_roots) {
  std::size_t n = 0;
  for (std::size_t i = 1; i < sorted_roots.size(); ++i)
    if (sorted_roots[i] == sorted_roots[i - 1] && (i < 2 || sorted_roots[i - 2] != sorted_roots[i])) ++n;
  return n;
}

}  // namespace

FieldPoly neighbor_polynomial(const FieldElement& delta0, const PrimeModulus& p) {
  const std::uint64_t q = p.q();
  const FieldPtr F = common_field(delta0.field(), p.residue_field());
  const FieldElement zero = FieldElement::zero(F);
  const FieldPoly Y = FieldPoly::x(zero);
  const FieldPoly one = FieldPoly::constant(one_like(zero));
  return -(p.alpha().pow(q) * power(Y + one, q - 1) * Y) - FieldPoly::constant(delta0);
}

FieldPoly reverse_polynomial(const FieldElement& delta1, const PrimeModulus& p) {
  const std::uint64_t q = p.q();
  const FieldPtr F = common_field(delta1.field(), p.residue_field());
  const FieldElement zero = FieldElement::zero(F);
  const FieldPoly Y = FieldPoly::x(zero);
  const FieldPoly one = FieldPoly::constant(one_like(zero));
  return p.alpha() * power(Y, q) + delta1 * power(Y + one, q - 1);
}

std::vector<FieldElement> neighbors(const FieldElement& delta0, const PrimeModulus& p, const FieldPtr& ambient) {
  if (delta0.is_zero()) throw DomainError("Delta = 0 is a cusp, not a vertex");
  const std::uint64_t q = p.q();
  const FieldElement d0 = to_ambient(delta0, ambient);
  const FieldElement alpha = p.alpha().embed(ambient);
  std::vector<FieldElement> out;
  for (const auto& y : roots_or_throw(neighbor_polynomial(d0, p), ambient, q)) {
    const FieldElement y1 = y + one_like(y);
    if (y1.is_zero()) throw InternalConsistency("Y = -1 on the correspondence with Delta0 != 0");
    out.push_back(-(alpha * y.pow(q)) / y1.pow(q - 1));
  }
  std::sort(out.begin(), out.end(), by_code);
  return out;
}

std::vector<FieldElement> reverse_neighbors(const FieldElement& delta1, const PrimeModulus& p,
                                            const FieldPtr& ambient) {
  if (delta1.is_zero()) throw DomainError("Delta = 0 is a cusp, not a vertex");
  const std::uint64_t q = p.q();
  const FieldElement d1 = to_ambient(delta1, ambient);
  const FieldElement alpha = p.alpha().embed(ambient);
  std::vector<FieldElement> out;
  for (const auto& y : roots_or_throw(reverse_polynomial(d1, p), ambient, q)) {
    const FieldElement y1 = y + one_like(y);
    out.push_back(-(alpha.pow(q) * y1.pow(q - 1) * y));
  }
  std::sort(out.begin(), out.end(), by_code);
  return out;
}

IsogenyGraph build_supersingular_graph(const PrimeModulus& p) {
  return build_supersingular_graph(p, deuring_h_direct(p).h);
}

IsogenyGraph build_supersingular_graph(const PrimeModulus& p, const FieldPoly& h) {
  const FieldPtr& kappa = p.residue_field();
  if (h.degree() < 1) throw DomainError("h must have positive degree");
  const unsigned m = splitting_degree(h);
  unsigned M = m;
  for (;;) {
    IsogenyGraph g;
    g.prime = p;
    g.h = h;
    g.h_splitting_degree = m;
    g.ambient_degree = M;
    g.ambient = M == 1 ? kappa : FiniteField::extension(kappa, M, "b");
    g.vertices = roots_or_throw(h, g.ambient, static_cast<std::size_t>(h.degree()));
    std::sort(g.vertices.begin(), g.vertices.end(), by_code);
    try {
      for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        const FieldElement& v = g.vertices[i];
        if (v.is_zero()) throw InternalConsistency("0 is a root of h");
        auto fwd = group_edges(i, neighbors(v, p, g.ambient), g.vertices);
        g.edges.insert(g.edges.end(), fwd.begin(), fwd.end());
        auto rev = group_edges(i, reverse_neighbors(v, p, g.ambient), g.vertices);
        g.reverse_edges.insert(g.reverse_edges.end(), rev.begin(), rev.end());
        auto ys = roots_in_field(neighbor_polynomial(v.embed(g.ambient), p), g.ambient);
        g.repeated_roots += repeated(ys);
      }
      return g;
    } catch (const AmbientTooSmall&) {
      // Enlarge by the splitting degree of the first polynomial that failed to split.
      unsigned e = 1;
      for (const auto& v : g.vertices) {
        const FieldElement x = v.embed(g.ambient);
        e = std::lcm(e, splitting_degree(neighbor_polynomial(x, p)));
        e = std::lcm(e, splitting_degree(reverse_polynomial(x, p)));
      }
      if (e == 1) throw InternalConsistency("neighbor polynomials split but roots are missing");
      M *= e;
      if (checked_pow(kappa->cardinality(), M) > (std::uint64_t{1} << 40))
        throw DomainError("ambient field for the isogeny graph is too large");
    }
  }
}

ComponentReport verify_component(const IsogenyGraph& g) {
  const std::uint64_t q = g.prime.q();
  const unsigned d = g.prime.degree();
  ComponentReport r;
  r.size = g.vertices.size();
  r.expected_size = deuring_degree(q, d);
  r.ambient_degree = g.ambient_degree;
  r.h_splitting_degree = g.h_splitting_degree;

  std::vector<unsigned> out(g.vertices.size(), 0), in(g.vertices.size(), 0);
  bool closed = true;
  for (const auto& e : g.edges) {
    out[e.from] += e.multiplicity;
    if (e.to == GraphEdge::kOutside) closed = false;
    if (e.to == e.from) r.self_loops += e.multiplicity;
  }
  for (const auto& e : g.reverse_edges) {
    in[e.from] += e.multiplicity;
    if (e.to == GraphEdge::kOutside) closed = false;
  }
  for (auto k : out) ++r.out_degree_histogram[k];
  r.regular = !out.empty() && std::all_of(out.begin(), out.end(), [&](unsigned k) { return k == q; }) &&
              std::all_of(in.begin(), in.end(), [&](unsigned k) { return k == q; });
  r.closed = closed;

  std::vector<std::size_t> parent(g.vertices.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges)
    if (e.to != GraphEdge::kOutside) parent[find(e.from)] = find(e.to);
  std::size_t components = 0;
  for (std::size_t i = 0; i < parent.size(); ++i)
    if (find(i) == i) ++components;
  r.connected = components == 1;

  const FieldElement alpha = g.prime.alpha().embed(g.ambient);
  const FieldElement aq = alpha.pow(q);
  r.edges_on_curve = true;
  for (const auto& e : g.edges) {
    const FieldElement& d0 = g.vertices[e.from];
    const FieldElement& d1 = e.target;
    if (d1.is_zero() || (d0 + aq).pow(q + 1) / d0.pow(q) != (d1 + alpha).pow(q + 1) / d1) r.edges_on_curve = false;
  }

  r.vertices_in_q2d = 2 % g.h_splitting_degree == 0;
  if (!r.vertices_in_q2d)
    r.warnings.push_back("h splits only in degree " + std::to_string(g.h_splitting_degree) +
                         " over the residue field, so some vertices lie outside F_(q^(2d))");
  if (g.repeated_roots > 0)
    r.warnings.push_back(std::to_string(g.repeated_roots) + " neighbor root(s) with multiplicity > 1");
  return r;
}

nlohmann::json to_json(const IsogenyGraph& g) {
  nlohmann::json vertices = nlohmann::json::array();
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    vertices.push_back({{"index", i}, {"code", g.vertices[i].code()}, {"value", g.vertices[i].to_string()}});
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges) {
    nlohmann::json j{{"from", e.from}, {"multiplicity", e.multiplicity}};
    if (e.to == GraphEdge::kOutside)
      j["to"] = nullptr;
    else
      j["to"] = e.to;
    j["target"] = e.target.to_string();
    edges.push_back(std::move(j));
  }
  std::vector<std::string> modulus;
  for (auto c : g.ambient->modulus()) modulus.push_back(FieldElement(g.ambient->base(), c).to_string());
  return {{"q", g.prime.q()},
          {"p", g.prime.to_string()},
          {"d", g.prime.degree()},
          {"h", to_string(g.h)},
          {"ambient_degree", g.ambient_degree},
          {"ambient_generator", g.ambient->generator_name()},
          {"ambient_modulus", modulus},
          {"vertices", std::move(vertices)},
          {"edges", std::move(edges)}};
}

nlohmann::json to_json(const ComponentReport& r) {
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [deg, n] : r.out_degree_histogram) hist[std::to_string(deg)] = n;
  return {{"size", r.size},
          {"expected_size", r.expected_size},
          {"out_degree_histogram", std::move(hist)},
          {"regular", r.regular},
          {"closed", r.closed},
          {"connected", r.connected},
          {"edges_on_curve", r.edges_on_curve},
          {"self_loops", r.self_loops},
          {"ambient_degree", r.ambient_degree},
          {"h_splitting_degree", r.h_splitting_degree},
          {"vertices_in_q2d", r.vertices_in_q2d},
          {"warnings", r.warnings}};
}

std::string to_dot(const IsogenyGraph& g) {
  std::ostringstream out;
  out << "digraph supersingular {\n";
  out << "  // q = " << g.prime.q() << ", p(T) = " << g.prime.to_string() << "\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    out << "  v" << i << " [label=\"" << g.vertices[i].to_string() << "\"];\n";
  for (const auto& e : g.edges) {
    out << "  v" << e.from << " -> ";
    if (e.to == GraphEdge::kOutside)
      out << "\"" << e.target.to_string() << "\"";
    else
      out << "v" << e.to;
    if (e.multiplicity > 1) out << " [label=\"" << e.multiplicity << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace deuring
