#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rectcut/errors.hpp"
#include "rectcut/field.hpp"
#include "rectcut/linsolve.hpp"
#include "rectcut/rat_func.hpp"

namespace rectcut {

template <FieldElement K>
struct Resistor {
  std::string id;
  std::size_t a = 0;  // current is counted positive from a to b
  std::size_t b = 0;
  K r{1};
};

template <FieldElement K>
struct Battery {
  std::size_t plus = 0;
  std::size_t minus = 0;
  K U{1};
};

/// Resistor network with one battery. Nodes are referred to by index; names
/// are kept for I/O.
template <FieldElement K>
class Netlist {
 public:
  std::size_t add_node(const std::string& name) {
    if (auto i = find_node(name)) return *i;
    index_.emplace(name, nodes_.size());
    nodes_.push_back(name);
    return nodes_.size() - 1;
  }

  std::optional<std::size_t> find_node(const std::string& name) const {
    const auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t node(const std::string& name) const {
    if (auto i = find_node(name)) return *i;
    throw NetlistError("unknown node " + name);
  }

  void add_resistor(const std::string& id, const std::string& a, const std::string& b, K r) {
    for (const Resistor<K>& existing : resistors_) {
      if (existing.id == id) throw NetlistError("duplicate resistor id " + id);
    }
    const std::size_t ia = add_node(a);
    const std::size_t ib = add_node(b);
    resistors_.push_back({id, ia, ib, std::move(r)});
  }

  void set_battery(const std::string& plus, const std::string& minus, K U) {
    if (battery_) throw NetlistError("more than one battery");
    const std::size_t p = add_node(plus);
    const std::size_t m = add_node(minus);
    battery_ = Battery<K>{p, m, std::move(U)};
  }

  void set_voltage(K U) {
    if (!battery_) throw NetlistError("network has no battery");
    battery_->U = std::move(U);
  }

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<Resistor<K>>& resistors() const { return resistors_; }
  std::vector<Resistor<K>>& resistors() { return resistors_; }
  const Battery<K>& battery() const {
    if (!battery_) throw NetlistError("network has no battery");
    return *battery_;
  }
  bool has_battery() const { return battery_.has_value(); }

  std::optional<std::size_t> resistor_index(const std::string& id) const {
    for (std::size_t i = 0; i < resistors_.size(); ++i) {
      if (resistors_[i].id == id) return i;
    }
    return std::nullopt;
  }

 private:
  std::vector<std::string> nodes_;
  std::map<std::string, std::size_t> index_;
  std::vector<Resistor<K>> resistors_;
  std::optional<Battery<K>> battery_;
};

/// Throws NetlistError unless there is exactly one battery between distinct
/// nodes, all resistances are positive (when K is ordered), and the resistors
/// alone connect every node.
template <FieldElement K>
void validate_netlist(const Netlist<K>& net) {
  if (!net.has_battery()) throw NetlistError("network has no battery");
  const Battery<K>& bat = net.battery();
  if (bat.plus == bat.minus) throw NetlistError("battery terminals coincide");
  for (const Resistor<K>& r : net.resistors()) {
    if (r.r.is_zero()) throw NetlistError("resistor " + r.id + " has zero resistance");
    if constexpr (OrderedField<K>) {
      if (r.r.sign() < 0) throw NetlistError("resistor " + r.id + " has negative resistance");
    }
  }
  const std::size_t n = net.nodes().size();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const Resistor<K>& r : net.resistors()) {
    const std::size_t a = root(r.a);
    const std::size_t b = root(r.b);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  if (components != 1) {
    throw NetlistError(root(bat.plus) == root(bat.minus) ? "network is disconnected"
                                                         : "battery terminals are not joined by resistors");
  }
}

inline std::string current_variable(const std::string& resistor_id) { return "I_" + resistor_id; }

namespace detail {

// Edge of the full graph: resistors first, battery last (minus -> plus).
struct GraphEdge {
  std::size_t from;
  std::size_t to;
  std::size_t index;  // resistor index, or resistor count for the battery
};

template <FieldElement K>
std::vector<GraphEdge> graph_edges(const Netlist<K>& net) {
  std::vector<GraphEdge> edges;
  for (std::size_t i = 0; i < net.resistors().size(); ++i) {
    edges.push_back({net.resistors()[i].a, net.resistors()[i].b, i});
  }
  edges.push_back({net.battery().minus, net.battery().plus, net.resistors().size()});
  return edges;
}

// Linear form over the current variables plus a constant.
template <FieldElement K>
struct Form {
  std::vector<K> coeffs;
  K constant{0};
};

}  // namespace detail

/// Kirchhoff equations. Unknowns: I_<id> per resistor (signed along a -> b),
/// then I, the battery current flowing from minus to plus inside the battery.
/// Current law at every node but the last; voltage law on the fundamental
/// cycles of a BFS spanning tree rooted at node 0 (edges explored in input
/// order, battery last). Equation count = resistors + 1.
template <FieldElement K>
LinearSystem<K> kirchhoff_system(const Netlist<K>& net) {
  validate_netlist(net);
  const std::size_t n = net.nodes().size();
  const std::size_t m = net.resistors().size();
  LinearSystem<K> sys;
  for (const Resistor<K>& r : net.resistors()) sys.variables.push_back(current_variable(r.id));
  sys.variables.push_back("I");
  const std::vector<detail::GraphEdge> edges = detail::graph_edges(net);

  for (std::size_t v = 0; v + 1 < n; ++v) {
    std::vector<std::pair<std::size_t, K>> terms;
    for (const detail::GraphEdge& e : edges) {
      if (e.from == e.to) continue;
      if (e.to == v) terms.emplace_back(e.index, K(1));
      if (e.from == v) terms.emplace_back(e.index, K(-1));
    }
    sys.add_equation(terms, K(0));
  }

  // Voltage drop along an edge in its own direction.
  auto drop = [&](const detail::GraphEdge& e) {
    detail::Form<K> f{std::vector<K>(m + 1, K(0)), K(0)};
    if (e.index < m) {
      f.coeffs[e.index] = net.resistors()[e.index].r;
    } else {
      f.constant = -net.battery().U;  // potential rises from minus to plus
    }
    return f;
  };

  std::vector<std::vector<std::size_t>> adjacency(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    adjacency[edges[i].from].push_back(i);
    if (edges[i].to != edges[i].from) adjacency[edges[i].to].push_back(i);
  }
  // phi[v] = potential of v relative to node 0, as a form in the unknowns.
  std::vector<std::optional<detail::Form<K>>> phi(n);
  std::vector<bool> tree_edge(edges.size(), false);
  phi[0] = detail::Form<K>{std::vector<K>(m + 1, K(0)), K(0)};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t ei : adjacency[u]) {
      const detail::GraphEdge& e = edges[ei];
      const std::size_t w = e.from == u ? e.to : e.from;
      if (phi[w]) continue;
      const detail::Form<K> d = drop(e);
      detail::Form<K> f = *phi[u];
      const K sign = e.from == u ? K(-1) : K(1);
      for (std::size_t j = 0; j <= m; ++j) {
        if (!d.coeffs[j].is_zero()) f.coeffs[j] += sign * d.coeffs[j];
      }
      f.constant += sign * d.constant;
      phi[w] = std::move(f);
      tree_edge[ei] = true;
      queue.push_back(w);
    }
  }

  for (std::size_t ei = 0; ei < edges.size(); ++ei) {
    if (tree_edge[ei]) continue;
    const detail::GraphEdge& e = edges[ei];
    // drop(e) - (phi[from] - phi[to]) = 0
    detail::Form<K> f = drop(e);
    for (std::size_t j = 0; j <= m; ++j) f.coeffs[j] = f.coeffs[j] - phi[e.from]->coeffs[j] + phi[e.to]->coeffs[j];
    f.constant = f.constant - phi[e.from]->constant + phi[e.to]->constant;
    Row<K> row{std::move(f.coeffs), -f.constant};
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

template <FieldElement K>
struct FlowSolution {
  std::vector<K> edge_current;  // by resistor index
  K battery_current;
  std::vector<K> potential;     // by node index; minus terminal at 0
  K total_resistance;
};

/// Potentials from the plus terminal (at U) along a resistor spanning tree.
template <FieldElement K>
std::vector<K> node_potentials(const Netlist<K>& net, const std::vector<K>& currents) {
  const std::size_t n = net.nodes().size();
  std::vector<std::vector<std::size_t>> adjacency(n);
  for (std::size_t i = 0; i < net.resistors().size(); ++i) {
    adjacency[net.resistors()[i].a].push_back(i);
    adjacency[net.resistors()[i].b].push_back(i);
  }
  std::vector<std::optional<K>> phi(n);
  phi[net.battery().plus] = net.battery().U;
  std::deque<std::size_t> queue{net.battery().plus};
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t i : adjacency[u]) {
      const Resistor<K>& r = net.resistors()[i];
      const K drop = r.r * currents[i];
      if (r.a == u && !phi[r.b]) {
        phi[r.b] = *phi[u] - drop;
        queue.push_back(r.b);
      } else if (r.b == u && !phi[r.a]) {
        phi[r.a] = *phi[u] + drop;
        queue.push_back(r.a);
      }
    }
  }
  std::vector<K> out;
  out.reserve(n);
  for (const auto& p : phi) {
    if (!p) throw NetlistError("network is disconnected");
    out.push_back(*p);
  }
  return out;
}

/// Unique flow for U != 0. A non-unique outcome contradicts the uniqueness
/// theorem and is reported as an internal error.
template <FieldElement K>
FlowSolution<K> solve_flow(const Netlist<K>& net) {
  const LinearSystem<K> sys = kirchhoff_system(net);
  if (net.battery().U.is_zero()) throw NetlistError("battery voltage must be nonzero");
  const SolveOutcome<K> outcome = gauss_jordan(sys);
  const auto* u = std::get_if<UniqueSolution<K>>(&outcome);
  if (u == nullptr) throw InternalError("Kirchhoff system is not uniquely solvable");
  FlowSolution<K> out;
  out.edge_current.assign(u->values.begin(), u->values.end() - 1);
  out.battery_current = u->values.back();
  if (out.battery_current.is_zero()) throw InternalError("no current through the battery");
  out.potential = node_potentials(net, out.edge_current);
  if (!out.potential[net.battery().minus].is_zero()) throw InternalError("potentials violate the voltage law");
  out.total_resistance = net.battery().U / out.battery_current;
  if constexpr (OrderedField<K>) {
    if (out.total_resistance.sign() <= 0) throw InternalError("nonpositive total resistance");
  }
  return out;
}

template <FieldElement K>
K resistance(const Netlist<K>& net) {
  return solve_flow(net).total_resistance;
}

/// Resistance over Q(t); resistances may mention the indeterminate.
inline RatFunc symbolic_resistance(const Netlist<RatFunc>& net) { return resistance(net); }

template <FieldElement K>
K series(const K& r1, const K& r2) {
  if constexpr (OrderedField<K>) {
    if (r1.sign() <= 0 || r2.sign() <= 0) throw MathError("series needs positive resistances");
  }
  return r1 + r2;
}

template <FieldElement K>
K parallel(const K& r1, const K& r2) {
  if constexpr (OrderedField<K>) {
    if (r1.sign() <= 0 || r2.sign() <= 0) throw MathError("parallel needs positive resistances");
  }
  return r1 * r2 / (r1 + r2);
}

/// Splices `inner` in place of resistor `id`: inner plus goes to the
/// resistor's a end, inner minus to its b end. Other inner nodes and inner
/// resistor ids are prefixed with "<id>/".
template <FieldElement K>
Netlist<K> replace_resistor_with_network(const Netlist<K>& outer, const std::string& id, const Netlist<K>& inner) {
  const auto idx = outer.resistor_index(id);
  if (!idx) throw NetlistError("no resistor " + id);
  const Resistor<K>& target = outer.resistors()[*idx];
  const K r_inner = resistance(inner);
  if (!(r_inner == target.r)) {
    throw MathError("inner network has resistance " + r_inner.to_string() + ", resistor " + id + " has " +
                    target.r.to_string());
  }
  Netlist<K> out;
  for (const std::string& name : outer.nodes()) out.add_node(name);
  const std::string prefix = id + "/";
  auto inner_name = [&](std::size_t v) {
    if (v == inner.battery().plus) return outer.nodes()[target.a];
    if (v == inner.battery().minus) return outer.nodes()[target.b];
    return prefix + inner.nodes()[v];
  };
  for (const Resistor<K>& r : outer.resistors()) {
    if (r.id == id) {
      for (const Resistor<K>& s : inner.resistors()) out.add_resistor(prefix + s.id, inner_name(s.a), inner_name(s.b), s.r);
    } else {
      out.add_resistor(r.id, outer.nodes()[r.a], outer.nodes()[r.b], r.r);
    }
  }
  const Battery<K>& bat = outer.battery();
  out.set_battery(outer.nodes()[bat.plus], outer.nodes()[bat.minus], bat.U);
  return out;
}

}  // namespace rectcut
