#include "doctest.h"

#include "fixtures.hpp"
#include "generators.hpp"
#include "rectcut/correspondence.hpp"
#include "rectcut/ladder_io.hpp"

using namespace rectcut;
using namespace rectcut::testing;

namespace {

const QuadExt kR(Rational(3, 2), Rational(1, 2), 3);

template <class K>
std::size_t count_between(const Netlist<K>& net, const std::string& a, const std::string& b) {
  std::size_t n = 0;
  for (const auto& r : net.resistors()) {
    if (net.nodes()[r.a] == a && net.nodes()[r.b] == b) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("Smith diagrams of the small layouts") {
  const auto series = circuit_of_dissection(load_fixture<Rational>("series_pair.json"));
  CHECK(series.nodes().size() == 3);
  CHECK(series.resistors().size() == 2);
  CHECK(series.resistors()[0].b == series.resistors()[1].a);  // series
  CHECK(resistance(series) == Rational(1, 2) + Rational(3, 4));

  const auto par = circuit_of_dissection(load_fixture<Rational>("parallel_pair.json"));
  CHECK(par.nodes().size() == 2);
  CHECK(count_between(par, "left", "right") == 2);  // parallel
  CHECK(resistance(par) == Rational(6, 5));

  const auto shelf = circuit_of_dissection(load_fixture<Rational>("shelf.json"));
  CHECK(shelf.nodes().size() == 6);
  CHECK(shelf.resistors().size() == 9);
  CHECK(shelf.battery().U == Rational(33, 32));
  CHECK(shelf.nodes()[shelf.battery().plus] == "left");
}

TEST_CASE("shelf circuit with unit resistances") {
  auto net = circuit_of_dissection(load_fixture<Rational>("shelf.json"));
  net.set_voltage(1);
  const auto flow = solve_flow(net);
  CHECK(flow.battery_current == Rational(32, 33));
  CHECK(flow.total_resistance == Rational(33, 32));
  // Currents at U = 1 are the sides scaled by 32/33.
  const auto sized = solve_sizes(load_fixture<Rational>("shelf.json"));
  for (std::size_t i = 0; i < 9; ++i) CHECK(flow.edge_current[i] == sized.sized.tiles[i].rect->h * Rational(32, 33));

  // All resistances t: linear in t.
  Netlist<RatFunc> sym;
  for (const auto& name : net.nodes()) sym.add_node(name);
  for (const auto& r : net.resistors()) sym.add_resistor(r.id, net.nodes()[r.a], net.nodes()[r.b], RatFunc::t());
  sym.set_battery("left", "right", RatFunc(1));
  const RatFunc w = symbolic_resistance(sym);
  CHECK(w == RatFunc(Rational(33, 32)) * RatFunc::t());
  for (int t0 = 1; t0 <= 3; ++t0) CHECK(w.evaluate(Rational(t0)) == Rational(33 * t0, 32));

  // Replace a resistor of value 1 by two 2s in parallel; battery current unchanged.
  Netlist<Rational> pair;
  pair.add_resistor("a", "p", "q", 2);
  pair.add_resistor("b", "p", "q", 2);
  pair.set_battery("p", "q", 1);
  CHECK(solve_flow(replace_resistor_with_network(net, "7", pair)).battery_current == Rational(32, 33));
}

TEST_CASE("equivalence holds on the corpus") {
  for (const char* name : {"shelf.json", "series_pair.json", "parallel_pair.json", "pinwheel.json", "single_square.json",
                           "grid_3x2.json", "brick_pair.json"}) {
    INFO(name);
    const auto report = certify_equivalence(load_fixture<Rational>(name));
    CHECK(report.ok);
    CHECK(report.mismatches.empty());
    CHECK(report.flow.total_resistance == report.sizing.ratio);
  }
  const auto shelf = certify_equivalence(load_fixture<Rational>("shelf.json"));
  CHECK(shelf.flow.battery_current == Rational(1));
  CHECK(shelf.flow.edge_current[6] == Rational(9, 16));

  const auto single = certify_equivalence(load_fixture<Rational>("single_square.json"));
  CHECK(single.flow.battery_current == Rational(1));
  CHECK(single.flow.total_resistance == Rational(1));

  const auto sq3 = certify_equivalence(load_fixture<QuadExt>("sqrt3_square.json"));
  CHECK(sq3.ok);
  CHECK(sq3.flow.total_resistance == QuadExt(1));

  // A scaled normalization is still equivalent.
  auto scaled = load_fixture<Rational>("pinwheel.json");
  scaled.big_h = Rational(3, 7);
  CHECK(certify_equivalence(scaled).ok);
}

TEST_CASE("certificate polynomials for tilings of a square") {
  const auto sq3 = load_fixture<QuadExt>("sqrt3_square.json");
  const auto cert = theorem1_certificate(sq3, kR);
  CHECK_FALSE(cert.F.is_zero());
  CHECK(cert.value_at_R.is_zero());
  CHECK(eval(cert.F, kR).is_zero());
  CHECK(eval(cert.F, kR.conjugate()).is_zero());  // the conjugate is a root too
  CHECK(cert.F.degree() <= 2 * static_cast<int>(cert.resistors) + 1);
  CHECK(cert.W.evaluate(kR * kR) == kR);
  // Stretched: bottom tiles become squares (1), top tiles ratio R^2 (t).
  CHECK(cert.W == RatFunc(6) * RatFunc::t() / (RatFunc(2) * RatFunc::t() + RatFunc(3)));

  const auto one = theorem1_certificate(load_fixture<Rational>("single_square.json"), Rational(1));
  CHECK(one.F == parse_int_poly("x-1"));

  // Two 2:1 bricks stacked: stretched ratio 4 -> t each, in parallel: t/2.
  const auto brick = theorem1_certificate(load_fixture<Rational>("brick_pair.json"), Rational(2));
  CHECK(brick.W == RatFunc::t() / RatFunc(2));
  CHECK(brick.F == parse_int_poly("x^2-2x"));
  CHECK(eval(brick.F, Rational(2)).is_zero());

  CHECK_THROWS_AS(theorem1_certificate(load_fixture<Rational>("shelf.json"), Rational(1)), MathError);
  CHECK_THROWS_AS(theorem1_certificate(load_fixture<Rational>("brick_pair.json"), Rational(3)), MathError);
}

TEST_CASE("stretching a square tiling") {
  const auto d = load_fixture<Rational>("shelf.json");
  const Rational r(5, 2);
  const auto st = stretch(d, r);
  for (const auto& t : st.tiles) CHECK(t.aspect == r);
  CHECK(solve_sizes(st).ratio == solve_sizes(d).ratio * r);
  CHECK(certify_equivalence(st).ok);
}

TEST_CASE("continued fractions and ladders") {
  CHECK(cf_eval(LadderSpec<Rational>{{}, 1, {Rational(1)}}) == Rational(1));
  CHECK(cf_eval(LadderSpec<Rational>{{}, 2, {Rational(1, 2)}}) == Rational(1));
  const LadderSpec<QuadExt> sq3{FieldDescriptor::quadratic(3), kR, {Rational(1, 3), Rational(2)}};
  CHECK(cf_eval(sq3) == QuadExt(1));
  CHECK(QuadExt(Rational(1, 3)) * kR + (QuadExt(2) * kR).inverse() == QuadExt(1));

  const auto one = ladder_dissection(LadderSpec<Rational>{{}, 1, {Rational(1)}});
  CHECK(one.tiles.size() == 1);

  const auto two = ladder_dissection(LadderSpec<Rational>{{}, 2, {Rational(1, 2)}});
  REQUIRE(two.tiles.size() == 2);
  for (const auto& t : two.tiles) {
    CHECK(t.rect->w == Rational(1));
    CHECK(t.rect->h == Rational(1, 2));
  }

  const auto lad = ladder_dissection(sq3);
  CHECK(lad.tiles.size() == 1 * 3 + 2 * 1);
  CHECK(ladder_tile_count(sq3) == 5);
  CHECK(validate_geometric(lad).ok);
  for (const auto& t : lad.tiles) CHECK((t.aspect == kR || t.aspect == kR.inverse()));
  auto unsized = lad;
  unsized.big_w.reset();
  unsized.big_h.reset();
  for (auto& t : unsized.tiles) t.rect.reset();
  CHECK(solve_sizes(unsized).ratio == QuadExt(1));
  CHECK(theorem1_certificate(unsized, kR).value_at_R.is_zero());

  CHECK_THROWS_AS(ladder_dissection(LadderSpec<Rational>{{}, 2, {Rational(1)}}), MathError);
  CHECK_THROWS_AS(ladder_dissection(LadderSpec<Rational>{{}, 2, {}}), MathError);
  CHECK_THROWS_AS(ladder_dissection(LadderSpec<Rational>{{}, 1, {Rational(-1), Rational(1, 2)}}), MathError);
}

TEST_CASE("random rational ladders are sound") {
  Gen gen(321);
  int built = 0;
  for (int trial = 0; trial < 2000 && built < 40; ++trial) {
    const Rational R = gen.positive_rational(6);
    std::vector<Rational> c{Rational(0)};
    const int n = gen.integer(1, 4);
    for (int k = 1; k < n; ++k) c.push_back(gen.positive_rational(4));
    if (n == 1) {
      c[0] = R.inverse();
    } else {
      LadderSpec<Rational> tail{{}, R, std::vector<Rational>(c.begin() + 1, c.end())};
      const Rational T2 = cf_eval(tail);
      if (T2 <= Rational(1)) continue;
      c[0] = (Rational(1) - T2.inverse()) / R;
    }
    const LadderSpec<Rational> spec{{}, R, c};
    REQUIRE(cf_eval(spec) == Rational(1));
    if (ladder_tile_count(spec) > 60) continue;
    const auto d = ladder_dissection(spec);
    ++built;
    CHECK(validate_geometric(d).ok);
    for (const auto& t : d.tiles) CHECK((t.aspect == R || t.aspect == R.inverse()));
    auto unsized = d;
    for (auto& t : unsized.tiles) t.rect.reset();
    unsized.big_w.reset();
    unsized.big_h.reset();
    CHECK(solve_sizes(unsized).ratio == Rational(1));
  }
  CHECK(built == 40);
}

TEST_CASE("ladder json") {
  const auto any = load_ladder(fixture_path("ladder_sqrt3.json"));
  REQUIRE(std::holds_alternative<LadderSpec<QuadExt>>(any));
  const auto& spec = std::get<LadderSpec<QuadExt>>(any);
  CHECK(spec.R == kR);
  CHECK(spec.c == std::vector<Rational>{Rational(1, 3), Rational(2)});
  CHECK(ladder_to_json(spec)["R"] == "3/2 + 1/2*sqrt(3)");
  CHECK(std::holds_alternative<LadderSpec<Rational>>(load_ladder(fixture_path("ladder_two.json"))));
  CHECK_THROWS_AS(any_ladder_from_json(parse_json_text(R"({"R": "2"})")), ParseError);
  CHECK_THROWS_AS(any_ladder_from_json(parse_json_text(R"j({"R": "2", "c": ["sqrt(2)"]})j")), ParseError);
}

TEST_CASE("inconsistent sizing is reported") {
  try {
    solve_sizes(load_fixture<Rational>("inconsistent.json"));
    FAIL("expected inconsistency");
  } catch (const SizingError& e) {
    CHECK(e.kind() == SizingError::Kind::inconsistent);
  }
}
