// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <Eigen/Eigenvalues>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

#include "fixtures.hpp"
#include "generators.hpp"
#include "networks.hpp"
#include "rectcut/algcheck.hpp"
#include "rectcut/correspondence.hpp"
#include "rectcut/linsolve.hpp"

using namespace rectcut;
using namespace rectcut::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& why) {
    if (!ok && pass) {
      pass = false;
      detail = why;
    }
  }
};

// 1
Outcome shelf_reproduction() {
  Outcome o;
  const auto r = solve_sizes(load_fixture<Rational>("shelf.json"));
  const std::vector<Rational> expected{Rational(1, 32), Rational(5, 16), Rational(9, 32), Rational(1, 4), Rational(7, 32),
                                       Rational(1, 8),  Rational(1, 2),  Rational(7, 16), Rational(15, 32)};
  o.require(r.ratio == Rational(33, 32), "x = " + r.ratio.to_string());
  o.require(r.sized.tiles.size() == expected.size(), "tile count");
  for (std::size_t i = 0; i < expected.size() && i < r.sized.tiles.size(); ++i) {
    const auto& rect = *r.sized.tiles[i].rect;
    o.require(rect.w == rect.h, "tile " + std::to_string(i + 1) + " is not a square");
    o.require(rect.h == expected[i], "x" + std::to_string(i + 1) + " = " + rect.h.to_string() + ", expected " +
                                         expected[i].to_string());
  }
  if (o.pass) o.detail = "x = 33/32, all nine sides exact";
  return o;
}

// 2
Outcome series_parallel() {
  Outcome o;
  Gen gen(2002);
  for (int i = 0; i < 50; ++i) {
    const Rational r1 = gen.positive_rational(40);
    const Rational r2 = gen.positive_rational(40);
    Netlist<Rational> path;
    path.add_resistor("1", "a", "m", r1);
    path.add_resistor("2", "m", "b", r2);
    path.set_battery("a", "b", 1);
    Netlist<Rational> multi;
    multi.add_resistor("1", "a", "b", r1);
    multi.add_resistor("2", "a", "b", r2);
    multi.set_battery("a", "b", 1);
    o.require(resistance(path) == r1 + r2, "series " + r1.to_string() + ", " + r2.to_string());
    o.require(resistance(multi) == r1 * r2 / (r1 + r2), "parallel " + r1.to_string() + ", " + r2.to_string());
  }
  if (o.pass) o.detail = "50 random pairs";
  return o;
}

// 3
Outcome gauss_jordan_taxonomy() {
  Outcome o;
  LinearSystem<Rational> s;
  s.variables = {"x1", "x2", "x3"};
  s.add_equation({{0, 1}, {1, 1}}, 0);
  s.add_equation({{0, 1}, {2, 1}}, 1);
  const auto outcome = gauss_jordan(s);
  const auto* p = std::get_if<ParametricSolution<Rational>>(&outcome);
  o.require(p != nullptr, "parametric example not parametric");
  if (p) {
    o.require(p->free == std::vector<std::size_t>{1}, "free set is not {x2}");
    for (int x2 = -3; x2 <= 3; ++x2) {
      const std::vector<Rational> fv{Rational(x2)};
      const auto sol = p->instantiate(fv, 3);
      o.require(sol[0] == Rational(-x2) && sol[2] == Rational(1 + x2), "bound values wrong at x2 = " + std::to_string(x2));
    }
  }
  LinearSystem<Rational> bad;
  bad.variables = {"x1", "x2"};
  bad.add_equation({{0, 1}, {1, 1}}, 1);
  bad.add_equation({{0, 2}, {1, 2}}, 3);
  o.require(std::holds_alternative<InconsistentSystem<Rational>>(gauss_jordan(bad)), "inconsistent system not detected");
  const auto fixture = load_fixture<Rational>("inconsistent.json");
  const auto stitched = gauss_jordan(junction_system(fixture, Rational(1)));
  o.require(std::holds_alternative<InconsistentSystem<Rational>>(stitched), "inconsistent fixture not detected");
  if (o.pass) o.detail = "free = {x2}, x1 = -x2, x3 = 1 + x2; inconsistent fixture rejected";
  return o;
}

// 4
Outcome kirchhoff_uniqueness() {
  Outcome o;
  Gen gen(4004);
  for (int i = 0; i < 200; ++i) {
    Netlist<Rational> net = random_network(gen, 8, 16);
    const auto outcome = gauss_jordan(kirchhoff_system(net));
    o.require(std::holds_alternative<UniqueSolution<Rational>>(outcome), "network " + std::to_string(i) + " not unique");
    o.require(resistance(net).sign() > 0, "network " + std::to_string(i) + " has nonpositive resistance");
    net.set_voltage(0);
    const auto zero = gauss_jordan(kirchhoff_system(net));
    const auto* u = std::get_if<UniqueSolution<Rational>>(&zero);
    o.require(u != nullptr, "zero-voltage network " + std::to_string(i) + " not unique");
    if (u) {
      for (const Rational& v : u->values) o.require(v.is_zero(), "zero-voltage network carries current");
    }
  }
  if (o.pass) o.detail = "200 random networks, zero-voltage variants all-zero";
  return o;
}

// 5
Outcome equivalence() {
  Outcome o;
  for (const char* name : {"shelf.json", "series_pair.json", "parallel_pair.json", "pinwheel.json"}) {
    const auto r = certify_equivalence(load_fixture<Rational>(name));
    o.require(r.ok, std::string(name) + ": " + (r.mismatches.empty() ? "" : r.mismatches.front()));
  }
  const auto r = certify_equivalence(load_fixture<QuadExt>("sqrt3_square.json"));
  o.require(r.ok, "sqrt3_square.json: " + (r.mismatches.empty() ? "" : r.mismatches.front()));
  if (o.pass) o.detail = "shelf, two-tile pairs, pinwheel, sqrt(3) tiling";
  return o;
}

// 6
Outcome dehn() {
  Outcome o;
  int square_tiled = 0;
  for (const char* name : {"shelf.json", "series_pair.json", "parallel_pair.json", "pinwheel.json", "single_square.json",
                           "grid_3x2.json", "brick_pair.json"}) {
    const auto v = dehn_check(solve_sizes(load_fixture<Rational>(name)).sized);
    if (!v.all_squares) continue;
    ++square_tiled;
    o.require(v.ratio_rational, std::string(name) + ": irrational ratio");
  }
  const auto shelf = dehn_check(solve_sizes(load_fixture<Rational>("shelf.json")).sized);
  o.require(shelf.all_squares && shelf.ratio == Rational(33, 32), "shelf ratio " + shelf.ratio.to_string());
  o.require(square_tiled >= 2, "too few square-tiled fixtures");
  if (o.pass) o.detail = std::to_string(square_tiled) + " square-tiled fixtures, shelf 33/32";
  return o;
}

// 7
Outcome sqrt3_certificate() {
  Outcome o;
  const QuadExt R(Rational(3, 2), Rational(1, 2), 3);
  o.require(R - R * R / QuadExt(3) == QuadExt(Rational(1, 2)), "R - R^2/3 != 1/2");
  const auto cert = theorem1_certificate(load_fixture<QuadExt>("sqrt3_square.json"), R);
  o.require(!cert.F.is_zero(), "F is zero");
  o.require(cert.F.degree() >= 1, "F is constant");
  o.require(eval(cert.F, R).is_zero(), "F(R) != 0");
  if (o.pass) o.detail = "F(x) = " + cert.F.to_string() + ", F(R) = 0";
  return o;
}

// 8
Outcome condition3() {
  Outcome o;
  o.require(!lfs_condition3(QuadExt(1, 1, 2)).pass, "1+sqrt2 passed");
  o.require(lfs_condition3(QuadExt(1, 1, 2)).poly == parse_int_poly("x^2-2x-1"), "minpoly of 1+sqrt2");
  o.require(!lfs_condition3(QuadExt(0, 1, 2)).pass, "sqrt2 passed");
  o.require(lfs_condition3(QuadExt(0, 1, 2)).poly == parse_int_poly("x^2-2"), "minpoly of sqrt2");
  const QuadExt R(Rational(3, 2), Rational(1, 2), 3);
  o.require(lfs_condition3(R).pass, "(3+sqrt3)/2 failed");
  o.require(lfs_condition3(R).poly == parse_int_poly("2x^2-6x+3"), "minpoly of (3+sqrt3)/2");
  o.require(!lfs_condition3(parse_int_poly("x^2-2x-1")).pass, "x^2-2x-1 passed");
  Gen gen(8008);
  for (int i = 0; i < 100; ++i) {
    const Rational q = gen.positive_rational(1000);
    o.require(lfs_condition3(QuadExt(q)).pass, "positive rational " + q.to_string() + " failed");
  }
  if (o.pass) o.detail = "1+sqrt2 FAIL, sqrt2 FAIL, (3+sqrt3)/2 PASS, 100 rationals PASS";
  return o;
}

// 9
std::optional<bool> companion_oracle(const IntPoly& p, double band) {
  const int n = p.degree();
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  const double lead = p.coeffs().back().convert_to<double>();
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) c(i, n - 1) = -p.coeffs()[static_cast<std::size_t>(i)].convert_to<double>() / lead;
  const Eigen::VectorXcd roots = c.eigenvalues();
  bool all = true;
  for (int i = 0; i < n; ++i) {
    if (std::abs(roots[i].real()) <= band) return std::nullopt;
    if (roots[i].real() < 0) all = false;
  }
  return all;
}

Outcome routh_oracle() {
  Outcome o;
  Gen gen(9009);
  int compared = 0;
  int generated = 0;
  while (generated < 500) {
    std::vector<BigInt> c;
    const int deg = gen.integer(1, 6);
    for (int k = 0; k <= deg; ++k) c.emplace_back(gen.integer(-9, 9));
    if (c.back() == 0) c.back() = gen.coin() ? 1 : -1;
    const IntPoly p(c);
    if (p.degree() < 1 || !is_squarefree(p.to_rational())) continue;
    ++generated;
    const auto oracle = companion_oracle(p, 1e-3);
    if (!oracle) continue;
    ++compared;
    o.require(positive_real_part_all_roots(p) == *oracle, "disagreement on " + p.to_string());
  }
  if (o.pass) o.detail = std::to_string(compared) + " of 500 outside the exclusion band, all agree";
  return o;
}

// 10
Outcome ladder() {
  Outcome o;
  const QuadExt R(Rational(3, 2), Rational(1, 2), 3);
  const LadderSpec<QuadExt> spec{FieldDescriptor::quadratic(3), R, {Rational(1, 3), Rational(2)}};
  o.require(cf_eval(spec) == QuadExt(1), "cf_eval != 1");
  const auto d = ladder_dissection(spec);
  o.require(validate_geometric(d).ok, "ladder tiling invalid");
  for (const auto& t : d.tiles) o.require(t.aspect == R || t.aspect == R.inverse(), "tile aspect not R or 1/R");
  auto unsized = d;
  unsized.big_w.reset();
  unsized.big_h.reset();
  for (auto& t : unsized.tiles) t.rect.reset();
  o.require(solve_sizes(unsized).ratio == QuadExt(1), "big ratio != 1");
  if (o.pass) o.detail = std::to_string(d.tiles.size()) + " tiles, big ratio 1";
  return o;
}

// 11
Outcome composition() {
  Outcome o;
  Gen gen(1111);
  for (int i = 0; i < 20; ++i) {
    Netlist<Rational> inner;
    int counter = 0;
    const Rational r_inner = add_series_parallel(inner, gen, "p", "q", gen.integer(1, 3), counter);
    inner.set_battery("p", "q", 1);

    // Random outer network whose resistor "1" has the inner resistance.
    const Netlist<Rational> base = random_network(gen, 8, 16);
    Netlist<Rational> outer;
    for (const auto& name : base.nodes()) outer.add_node(name);
    for (const auto& r : base.resistors()) {
      outer.add_resistor(r.id, base.nodes()[r.a], base.nodes()[r.b], r.id == "1" ? r_inner : r.r);
    }
    outer.set_battery(base.nodes()[base.battery().plus], base.nodes()[base.battery().minus], base.battery().U);

    const auto composed = replace_resistor_with_network(outer, "1", inner);
    const auto before = solve_flow(outer);
    const auto after = solve_flow(composed);
    const std::string tag = "fixture " + std::to_string(i);
    o.require(after.total_resistance == before.total_resistance, tag + ": resistance changed");
    o.require(after.battery_current == before.battery_current, tag + ": battery current changed");
    for (std::size_t k = 0; k < outer.resistors().size(); ++k) {
      const auto j = composed.resistor_index(outer.resistors()[k].id);
      if (outer.resistors()[k].id == "1") continue;
      o.require(j && after.edge_current[*j] == before.edge_current[k], tag + ": outer current changed");
    }
  }
  if (o.pass) o.detail = "20 random compositions";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"shelf reproduction", shelf_reproduction},
      {"series/parallel formulas", series_parallel},
      {"Gauss-Jordan outcome taxonomy", gauss_jordan_taxonomy},
      {"Kirchhoff uniqueness and positivity", kirchhoff_uniqueness},
      {"dissection/circuit equivalence", equivalence},
      {"Dehn property", dehn},
      {"sqrt(3) tiling and certificate polynomial", sqrt3_certificate},
      {"condition 3 verdicts", condition3},
      {"Routh-Hurwitz oracle agreement", routh_oracle},
      {"condition-2 ladder", ladder},
      {"composition invariance", composition},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << o.detail << "\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
