#pragma once

#include <string>
#include <vector>

#include "rectcut/algcheck.hpp"
#include "rectcut/circuit.hpp"
#include "rectcut/dissection.hpp"
#include "rectcut/rat_func.hpp"

namespace rectcut {

/// Node name for vertical node i of a cut structure.
inline std::string terminal_name(const CutStructure& cs, std::size_t i) {
  if (i == cs.left_boundary) return "left";
  if (i == cs.right_boundary) return "right";
  return "c" + std::to_string(i);
}

/// Smith diagram: a terminal per vertical node, a resistor per tile with
/// resistance = aspect oriented left -> right, battery plus on the left
/// boundary and minus on the right with voltage U.
template <FieldElement K>
Netlist<K> circuit_of_cuts(const CutStructure& cs, const std::vector<Tile<K>>& tiles, const K& U) {
  Netlist<K> net;
  for (std::size_t i = 0; i < cs.v_nodes.size(); ++i) net.add_node(terminal_name(cs, i));
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    net.add_resistor(std::to_string(tiles[i].id), terminal_name(cs, cs.left_node[i]),
                     terminal_name(cs, cs.right_node[i]), tiles[i].aspect);
  }
  net.set_battery(terminal_name(cs, cs.left_boundary), terminal_name(cs, cs.right_boundary), U);
  return net;
}

/// U is the big horizontal side: big_w when known, else the solved width for
/// vertical side big_h (or 1).
template <FieldElement K>
Netlist<K> circuit_of_dissection(const Dissection<K>& d) {
  const CutStructure cs = extract_cuts(d);
  const K U = d.big_w ? *d.big_w : solve_sizes(d).sized.big_w.value();
  return circuit_of_cuts(cs, d.tiles, U);
}

template <FieldElement K>
struct EquivalenceReport {
  bool ok = true;
  std::vector<std::string> mismatches;
  SizingResult<K> sizing;
  FlowSolution<K> flow;
  Netlist<K> net;
};

/// Solves both systems and checks that they describe the same thing: currents
/// equal vertical sides, battery current equals the big vertical side, the
/// resistance equals the big ratio, and each solution satisfies the other
/// system.
template <FieldElement K>
EquivalenceReport<K> certify_equivalence(const Dissection<K>& d) {
  const CutStructure cs = extract_cuts(d);
  SizingResult<K> sizing = solve_sizes(d);
  const K x = *sizing.sized.big_w;
  const K h = *sizing.sized.big_h;
  Netlist<K> net = circuit_of_cuts(cs, d.tiles, x);
  FlowSolution<K> flow = solve_flow(net);
  std::vector<std::string> bad;
  for (std::size_t i = 0; i < d.tiles.size(); ++i) {
    const K& v = sizing.sized.tiles[i].rect->h;
    if (!(flow.edge_current[i] == v)) {
      bad.push_back("tile " + std::to_string(d.tiles[i].id) + ": side " + v.to_string() + ", current " +
                    flow.edge_current[i].to_string());
    }
  }
  if (!(flow.battery_current == h)) {
    bad.push_back("battery current " + flow.battery_current.to_string() + ", vertical side " + h.to_string());
  }
  if (!(flow.total_resistance == sizing.ratio)) {
    bad.push_back("resistance " + flow.total_resistance.to_string() + ", ratio " + sizing.ratio.to_string());
  }

  const LinearSystem<K> junction = junction_system(cs, d.tiles, h);
  const LinearSystem<K> kirchhoff = kirchhoff_system(net);
  std::vector<K> as_currents;
  for (std::size_t i = 0; i < d.tiles.size(); ++i) as_currents.push_back(sizing.sized.tiles[i].rect->h);
  as_currents.push_back(h);
  if (!satisfies(kirchhoff, std::span<const K>(as_currents))) bad.push_back("sizes violate the Kirchhoff system");
  std::vector<K> as_sizes{net.battery().U};
  as_sizes.insert(as_sizes.end(), flow.edge_current.begin(), flow.edge_current.end());
  if (!satisfies(junction, std::span<const K>(as_sizes))) bad.push_back("currents violate the stitching system");

  EquivalenceReport<K> report{bad.empty(), std::move(bad), std::move(sizing), std::move(flow), std::move(net)};
  return report;
}

template <OrderedField K>
struct Theorem1Certificate {
  RatFunc W;        // resistance of the stretched network, t standing for R^2
  IntPoly F;        // q(x^2) x - p(x^2), denominators cleared
  K value_at_R;     // F(R), zero by construction
  std::size_t resistors = 0;
  Netlist<RatFunc> net;
};

/// For a dissection of a square into tiles of aspect R or 1/R: stretch by R,
/// read the network with tiles of ratio R^2 as resistance t and the others
/// as 1, and turn W(R^2) = R into an integer polynomial vanishing at R.
template <OrderedField K>
Theorem1Certificate<K> theorem1_certificate(const Dissection<K>& d, const K& R) {
  if (R.sign() <= 0) throw MathError("R must be positive");
  const SizingResult<K> sized = solve_sizes(d);
  if (!(sized.ratio == K(1))) throw MathError("dissection is not of a square (ratio " + sized.ratio.to_string() + ")");
  const CutStructure cs = extract_cuts(d);
  const K R2 = R * R;
  std::vector<Tile<RatFunc>> tiles;
  for (const Tile<K>& t : d.tiles) {
    const K stretched = t.aspect * R;
    Tile<RatFunc> s;
    s.id = t.id;
    s.sketch = t.sketch;
    if (stretched == K(1)) {
      s.aspect = RatFunc(1);
    } else if (stretched == R2) {
      s.aspect = RatFunc::t();
    } else {
      throw MathError("tile " + std::to_string(t.id) + " has aspect " + t.aspect.to_string() + ", expected R or 1/R");
    }
    tiles.push_back(std::move(s));
  }
  Theorem1Certificate<K> cert;
  cert.net = circuit_of_cuts(cs, tiles, RatFunc(1));
  cert.resistors = tiles.size();
  cert.W = symbolic_resistance(cert.net);
  const RatPoly p = cert.W.num().compose_power(2);
  const RatPoly q = cert.W.den().compose_power(2);
  cert.F = IntPoly::from_rational(q * RatPoly::x() - p);
  if (cert.F.is_zero()) throw InternalError("certificate polynomial vanished identically");
  cert.value_at_R = eval(cert.F, R);
  if (!cert.value_at_R.is_zero()) throw InternalError("certificate polynomial does not vanish at R");
  return cert;
}

/// Continued fraction c1 R + 1/(c2 R + 1/(... + 1/(cn R))).
template <OrderedField K>
struct LadderSpec {
  FieldDescriptor field;
  K R;
  std::vector<Rational> c;
};

/// Tails T_k = c_k R + 1/T_{k+1}, T_n = c_n R; element 0 is the whole value.
template <OrderedField K>
std::vector<K> cf_tails(const LadderSpec<K>& spec) {
  if (spec.c.empty()) throw MathError("ladder needs at least one coefficient");
  std::vector<K> tails(spec.c.size());
  for (std::size_t k = spec.c.size(); k-- > 0;) {
    K t = K(spec.c[k]) * spec.R;
    if (k + 1 < spec.c.size()) {
      if (tails[k + 1].is_zero()) throw MathError("continued fraction tail " + std::to_string(k + 2) + " is zero");
      t += tails[k + 1].inverse();
    }
    tails[k] = t;
  }
  return tails;
}

template <OrderedField K>
K cf_eval(const LadderSpec<K>& spec) {
  return cf_tails(spec).front();
}

/// Number of tiles ladder_dissection produces: sum of p_k q_k for c_k = p_k/q_k.
template <OrderedField K>
BigInt ladder_tile_count(const LadderSpec<K>& spec) {
  BigInt n = 0;
  for (const Rational& c : spec.c) n += c.abs().numerator() * c.denominator();
  return n;
}

/// Unit square cut into tiles of aspect R and 1/R. A region whose long side
/// over short side is T_k = c_k R + 1/T_{k+1} gets a slab of c_k R (short
/// side) split into a q x p grid of aspect-R cells (c_k = p/q); the rest has
/// ratio 1/T_{k+1} and is handled the same way with the axes swapped.
template <OrderedField K>
Dissection<K> ladder_dissection(const LadderSpec<K>& spec) {
  if (spec.R.sign() <= 0) throw MathError("R must be positive");
  for (const Rational& c : spec.c) {
    if (c.sign() <= 0) throw MathError("ladder coefficients must be positive");
  }
  const std::vector<K> tails = cf_tails(spec);
  for (const K& t : tails) {
    if (t.sign() <= 0) throw MathError("continued fraction has a nonpositive tail");
  }
  if (!(tails.front() == K(1))) {
    throw MathError("continued fraction evaluates to " + tails.front().to_string() + ", not 1");
  }
  Dissection<K> d;
  d.field = spec.field;
  d.big_w = K(1);
  d.big_h = K(1);
  // Remaining region [x0, x0 + w] x [y0, y0 + h].
  K x0(0), y0(0), w(1), h(1);
  bool horizontal = true;  // slab widths measured along x
  int id = 1;
  for (std::size_t k = 0; k < spec.c.size(); ++k) {
    const BigInt p = spec.c[k].numerator();
    const BigInt q = spec.c[k].denominator();
    const K across = horizontal ? h : w;  // side shared with the slab
    const K slab = K(spec.c[k]) * spec.R * across;
    const K cell_along = slab / K(Rational(p));
    const K cell_across = across / K(Rational(q));
    for (BigInt i = 0; i < q; ++i) {
      for (BigInt j = 0; j < p; ++j) {
        Tile<K> t;
        t.id = id++;
        const K a0 = cell_along * K(Rational(j));
        const K c0 = cell_across * K(Rational(i));
        if (horizontal) {
          t.rect = ExactRect<K>{x0 + a0, y0 + c0, cell_along, cell_across};
        } else {
          t.rect = ExactRect<K>{x0 + c0, y0 + a0, cell_across, cell_along};
        }
        t.aspect = t.rect->w / t.rect->h;
        t.sketch = {t.rect->x.to_double(), t.rect->y.to_double(), t.rect->w.to_double(), t.rect->h.to_double()};
        d.tiles.push_back(std::move(t));
      }
    }
    if (horizontal) {
      x0 += slab;
      w -= slab;
    } else {
      y0 += slab;
      h -= slab;
    }
    horizontal = !horizontal;
  }
  const ValidationReport report = validate_geometric(d);
  if (!report.ok) throw InternalError("ladder tiling failed validation: " + report.problems.front());
  return d;
}

}  // namespace rectcut
