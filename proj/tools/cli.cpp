#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rectcut/algcheck.hpp"
#include "rectcut/correspondence.hpp"
#include "rectcut/dissection_io.hpp"
#include "rectcut/ladder_io.hpp"
#include "rectcut/netlist_io.hpp"

namespace rectcut::cli {

namespace {

/// Output file could not be written; reported as a usage error.
class OutputError : public Error {
 public:
  using Error::Error;
};

struct Ctx {
  std::ostream& out;
  std::ostream& err;
  bool json = false;

  void emit(const Json& j) const { out << j.dump(2) << "\n"; }
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw OutputError("cannot write " + path);
  f << content;
  if (!f) throw OutputError("write to " + path + " failed");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

template <OrderedField K>
Dissection<K> ensure_sized(const Dissection<K>& d) {
  return d.is_sized() ? d : solve_sizes(d).sized;
}

// validate

template <OrderedField K>
int validate(const Ctx& ctx, const Dissection<K>& d) {
  ValidationReport report;
  const bool sized = d.is_sized();
  if (sized) {
    report = validate_geometric(d);
  } else {
    extract_cuts(d);  // throws GeometryError unless the sketches tile
    for (const Tile<K>& t : d.tiles) {
      if (t.aspect.sign() <= 0) {
        report.ok = false;
        report.problems.push_back("tile " + std::to_string(t.id) + " has nonpositive aspect " + t.aspect.to_string());
      }
    }
  }
  if (ctx.json) {
    ctx.emit(Json{{"valid", report.ok}, {"sized", sized}, {"tiles", d.tiles.size()}, {"problems", report.problems}});
  } else {
    if (report.ok) {
      ctx.out << "valid" << (sized ? "" : " sketch (unsized)") << ": " << d.tiles.size() << " tiles\n";
    } else {
      ctx.out << "invalid\n";
      for (const auto& p : report.problems) ctx.out << "  " << p << "\n";
    }
  }
  return report.ok ? kOk : kMathFailure;
}

// solve

template <OrderedField K>
int solve(const Ctx& ctx, const Dissection<K>& d, const std::string& out_path) {
  const SizingResult<K> r = solve_sizes(d);
  const K inverse = r.ratio.inverse();
  if (!out_path.empty()) write_file(out_path, dissection_to_json(r.sized).dump(2) + "\n");
  if (ctx.json) {
    Json tiles = Json::array();
    for (const Tile<K>& t : r.sized.tiles) {
      tiles.push_back(Json{{"id", t.id}, {"w", format_scalar(t.rect->w)}, {"h", format_scalar(t.rect->h)}});
    }
    ctx.emit(Json{{"x", format_scalar(r.ratio)},
                  {"inverse", format_scalar(inverse)},
                  {"big", {{"w", format_scalar(*r.sized.big_w)}, {"h", format_scalar(*r.sized.big_h)}}},
                  {"tiles", std::move(tiles)}});
    return kOk;
  }
  ctx.out << "x = " << format_scalar(r.ratio) << "\n";
  ctx.out << "1/x = " << format_scalar(inverse) << "\n";
  ctx.out << "big: w = " << format_scalar(*r.sized.big_w) << ", h = " << format_scalar(*r.sized.big_h) << "\n";
  for (const Tile<K>& t : r.sized.tiles) {
    ctx.out << "tile " << t.id << ": w = " << format_scalar(t.rect->w) << ", h = " << format_scalar(t.rect->h) << "\n";
  }
  return kOk;
}

// dehn-check

template <OrderedField K>
int dehn(const Ctx& ctx, const Dissection<K>& input) {
  const Dissection<K> d = ensure_sized(input);
  const ValidationReport report = validate_geometric(d);
  if (!report.ok) {
    for (const auto& p : report.problems) ctx.err << "invalid tiling: " << p << "\n";
    return kMathFailure;
  }
  const DehnVerdict<K> v = dehn_check(d);
  const bool contradiction = v.all_squares && !v.ratio_rational;
  std::string verdict;
  if (!v.all_squares) {
    verdict = "not a square tiling";
  } else {
    verdict = contradiction ? "FAIL" : "PASS";
  }
  if (ctx.json) {
    ctx.emit(Json{{"all_squares", v.all_squares},
                  {"non_squares", v.non_squares},
                  {"ratio", format_scalar(v.ratio)},
                  {"ratio_rational", v.ratio_rational},
                  {"verdict", verdict}});
  } else {
    ctx.out << "all squares: " << yes_no(v.all_squares) << "\n";
    if (!v.all_squares) {
      ctx.out << "non-square tiles:";
      for (int id : v.non_squares) ctx.out << " " << id;
      ctx.out << "\n";
    }
    ctx.out << "ratio = " << format_scalar(v.ratio) << "\n";
    ctx.out << "ratio rational: " << yes_no(v.ratio_rational) << "\n";
    ctx.out << "verdict: " << verdict << "\n";
  }
  return contradiction ? kMathFailure : kOk;
}

// to-circuit

template <OrderedField K>
int to_circuit(const Ctx& ctx, const Dissection<K>& d, const std::string& out_path) {
  const Netlist<K> net = circuit_of_dissection(d);
  const std::string text = format_netlist(net);
  if (!out_path.empty()) write_file(out_path, text);
  if (ctx.json) {
    ctx.emit(Json{{"nodes", net.nodes().size()}, {"resistors", net.resistors().size()}, {"netlist", text}});
  } else if (out_path.empty()) {
    ctx.out << text;
  } else {
    ctx.out << "wrote " << net.resistors().size() << " resistors to " << out_path << "\n";
  }
  return kOk;
}

// resistance

template <FieldElement K>
int resistance_of(const Ctx& ctx, const Netlist<K>& net) {
  const FlowSolution<K> flow = solve_flow(net);
  if (ctx.json) {
    Json currents = Json::object();
    for (std::size_t i = 0; i < net.resistors().size(); ++i) {
      currents[net.resistors()[i].id] = format_scalar(flow.edge_current[i]);
    }
    ctx.emit(Json{{"resistance", format_scalar(flow.total_resistance)},
                  {"battery_current", format_scalar(flow.battery_current)},
                  {"currents", std::move(currents)}});
  } else {
    ctx.out << format_scalar(flow.total_resistance) << "\n";
  }
  return kOk;
}

// equiv-check

template <OrderedField K>
int equiv(const Ctx& ctx, const Dissection<K>& d) {
  const EquivalenceReport<K> r = certify_equivalence(d);
  if (ctx.json) {
    ctx.emit(Json{{"ok", r.ok},
                  {"ratio", format_scalar(r.sizing.ratio)},
                  {"resistance", format_scalar(r.flow.total_resistance)},
                  {"battery_current", format_scalar(r.flow.battery_current)},
                  {"vertical_side", format_scalar(*r.sizing.sized.big_h)},
                  {"mismatches", r.mismatches}});
  } else {
    ctx.out << "ratio = " << format_scalar(r.sizing.ratio) << "\n";
    ctx.out << "resistance = " << format_scalar(r.flow.total_resistance) << "\n";
    ctx.out << "battery current = " << format_scalar(r.flow.battery_current) << ", vertical side = "
            << format_scalar(*r.sizing.sized.big_h) << "\n";
    for (const auto& m : r.mismatches) ctx.out << "  mismatch: " << m << "\n";
    ctx.out << "verdict: " << (r.ok ? "PASS" : "FAIL") << "\n";
  }
  return r.ok ? kOk : kMathFailure;
}

// theorem1

template <OrderedField K>
int theorem1(const Ctx& ctx, const Dissection<K>& d, const std::string& r_text) {
  K R;
  if (!r_text.empty()) {
    R = parse_scalar<K>(r_text, d.field);
  } else {
    if (d.tiles.empty()) throw MathError("empty dissection");
    R = d.tiles.front().aspect;
    for (const Tile<K>& t : d.tiles) {
      if (R < t.aspect) R = t.aspect;
    }
  }
  const Theorem1Certificate<K> cert = theorem1_certificate(d, R);
  if (ctx.json) {
    ctx.emit(Json{{"R", format_scalar(R)},
                  {"W", cert.W.to_string()},
                  {"F", cert.F.to_string()},
                  {"F_at_R", format_scalar(cert.value_at_R)},
                  {"resistors", cert.resistors}});
  } else {
    ctx.out << "R = " << format_scalar(R) << "\n";
    ctx.out << "W(t) = " << cert.W.to_string() << "\n";
    ctx.out << "F(x) = " << cert.F.to_string() << "\n";
    ctx.out << "F(R) = " << format_scalar(cert.value_at_R) << "\n";
  }
  return kOk;
}

// lfs

int cond3(const Ctx& ctx, const std::string& elem, std::int64_t d, const std::string& poly) {
  Cond3Verdict v;
  if (!poly.empty()) {
    v = lfs_condition3(parse_int_poly(poly));
  } else {
    if (d != 0 && (d <= 1 || !is_squarefree(d))) throw ParseError("--d must be a squarefree integer > 1");
    v = lfs_condition3(parse_quad(elem, d));
  }
  std::vector<std::string> column;
  for (const Rational& c : routh_first_column(v.poly)) column.push_back(c.to_string());
  const std::string verdict = v.pass ? "PASS" : "FAIL";
  if (ctx.json) {
    ctx.emit(Json{{"polynomial", v.poly.to_string()},
                  {"routh_column", column},
                  {"verdict", verdict},
                  {"conclusive", v.conclusive},
                  {"caveat", v.caveat}});
  } else {
    ctx.out << "polynomial: " << v.poly.to_string() << "\n";
    ctx.out << "Routh column:";
    for (const auto& c : column) ctx.out << " " << c;
    ctx.out << "\n";
    ctx.out << "condition 3: " << verdict << "\n";
    if (!v.caveat.empty()) ctx.out << "caveat: " << v.caveat << "\n";
  }
  return v.pass ? kOk : kMathFailure;
}

template <OrderedField K>
int eval_cf(const Ctx& ctx, const LadderSpec<K>& spec) {
  const K value = cf_eval(spec);
  const bool holds = value == K(1);
  if (ctx.json) {
    ctx.emit(Json{{"R", format_scalar(spec.R)}, {"value", format_scalar(value)}, {"equals_one", holds}});
  } else {
    ctx.out << "value = " << format_scalar(value) << "\n";
    ctx.out << "condition 2: " << (holds ? "PASS" : "FAIL") << "\n";
  }
  return holds ? kOk : kMathFailure;
}

template <OrderedField K>
int build_ladder(const Ctx& ctx, const LadderSpec<K>& spec, const std::string& out_path) {
  const Dissection<K> d = ladder_dissection(spec);
  write_file(out_path, dissection_to_json(d).dump(2) + "\n");
  if (ctx.json) {
    ctx.emit(Json{{"tiles", d.tiles.size()}, {"out", out_path}});
  } else {
    ctx.out << "wrote " << d.tiles.size() << " tiles to " << out_path << "\n";
  }
  return kOk;
}

// render

template <OrderedField K>
int render(const Ctx& ctx, const Dissection<K>& input, const std::string& out_path) {
  const Dissection<K> d = ensure_sized(input);
  std::ostringstream svg;
  render_svg(d, svg);
  if (out_path.empty()) {
    ctx.out << svg.str();
  } else {
    write_file(out_path, svg.str());
    if (ctx.json) ctx.emit(Json{{"tiles", d.tiles.size()}, {"out", out_path}});
  }
  return kOk;
}

template <class F>
int on_dissection(const std::string& path, F&& f) {
  return std::visit([&](const auto& d) { return f(d); }, load_dissection(path));
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact rectangle dissections, resistor networks and LFS criteria", "rectcut"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Machine-readable JSON on standard output");

  std::string input;
  std::string out_path;

  auto* validate_cmd = app.add_subcommand("validate", "Check a dissection file");
  validate_cmd->add_option("file", input, "Dissection JSON")->required()->check(CLI::ExistingFile);

  auto* solve_cmd = app.add_subcommand("solve", "Solve the stitching system and size every tile");
  solve_cmd->add_option("file", input, "Dissection JSON")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--out", out_path, "Write the sized dissection here");

  auto* dehn_cmd = app.add_subcommand("dehn-check", "Square tiling => rational ratio");
  dehn_cmd->add_option("file", input, "Dissection JSON")->required()->check(CLI::ExistingFile);

  auto* circuit_cmd = app.add_subcommand("to-circuit", "Emit the network of a dissection");
  circuit_cmd->add_option("file", input, "Dissection JSON")->required()->check(CLI::ExistingFile);
  circuit_cmd->add_option("--out", out_path, "Write the netlist here");

  bool symbolic = false;
  auto* resistance_cmd = app.add_subcommand("resistance", "Total resistance of a netlist");
  resistance_cmd->add_option("file", input, "Netlist text")->required()->check(CLI::ExistingFile);
  resistance_cmd->add_flag("--symbolic", symbolic, "Read values as expressions in t");

  auto* equiv_cmd = app.add_subcommand("equiv-check", "Certify that sizes and currents agree");
  equiv_cmd->add_option("file", input, "Dissection JSON")->required()->check(CLI::ExistingFile);

  std::string r_text;
  auto* theorem1_cmd = app.add_subcommand("theorem1", "Integer polynomial vanishing at R for a square tiling");
  theorem1_cmd->add_option("file", input, "Dissection JSON")->required()->check(CLI::ExistingFile);
  theorem1_cmd->add_option("--R", r_text, "Ratio R (default: the largest tile aspect)");

  auto* lfs_cmd = app.add_subcommand("lfs", "Laczkovich-Szekeres / Freiling-Rinne criteria");
  lfs_cmd->require_subcommand(1);
  std::string elem;
  std::int64_t radicand = 0;
  std::string poly;
  auto* cond3_cmd = lfs_cmd->add_subcommand("cond3", "All conjugates have positive real part");
  auto* elem_opt = cond3_cmd->add_option("--elem", elem, "Element of Q(sqrt d), e.g. \"3/2 + 1/2*sqrt(3)\"");
  cond3_cmd->add_option("--d", radicand, "Radicand for --elem")->needs(elem_opt);
  auto* poly_opt = cond3_cmd->add_option("--poly", poly, "Integer polynomial, e.g. \"2x^2-6x+3\"");
  elem_opt->excludes(poly_opt);
  cond3_cmd->require_option(1, 2);
  auto* eval_cmd = lfs_cmd->add_subcommand("eval-cf", "Evaluate the continued fraction of a ladder spec");
  eval_cmd->add_option("file", input, "Ladder JSON")->required()->check(CLI::ExistingFile);
  auto* build_cmd = lfs_cmd->add_subcommand("build", "Tile the unit square from a ladder spec");
  build_cmd->add_option("file", input, "Ladder JSON")->required()->check(CLI::ExistingFile);
  build_cmd->add_option("--out", out_path, "Dissection JSON to write")->required();

  auto* render_cmd = app.add_subcommand("render", "Draw a dissection as SVG");
  render_cmd->add_option("file", input, "Dissection JSON")->required()->check(CLI::ExistingFile);
  render_cmd->add_option("-o,--out", out_path, "SVG file (default: standard output)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const Ctx ctx{out, err, json};
  if (*validate_cmd) return on_dissection(input, [&](const auto& d) { return validate(ctx, d); });
  if (*solve_cmd) return on_dissection(input, [&](const auto& d) { return solve(ctx, d, out_path); });
  if (*dehn_cmd) return on_dissection(input, [&](const auto& d) { return dehn(ctx, d); });
  if (*circuit_cmd) return on_dissection(input, [&](const auto& d) { return to_circuit(ctx, d, out_path); });
  if (*resistance_cmd) {
    return std::visit([&](const auto& net) { return resistance_of(ctx, net); }, load_netlist(input, symbolic));
  }
  if (*equiv_cmd) return on_dissection(input, [&](const auto& d) { return equiv(ctx, d); });
  if (*theorem1_cmd) return on_dissection(input, [&](const auto& d) { return theorem1(ctx, d, r_text); });
  if (*cond3_cmd) return cond3(ctx, elem, radicand, poly);
  if (*eval_cmd) return std::visit([&](const auto& s) { return eval_cf(ctx, s); }, load_ladder(input));
  if (*build_cmd) return std::visit([&](const auto& s) { return build_ladder(ctx, s, out_path); }, load_ladder(input));
  if (*render_cmd) return on_dissection(input, [&](const auto& d) { return render(ctx, d, out_path); });
  err << "error: no command\n";
  return kUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const OutputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kMathFailure;
  } catch (const Error& e) {
    // MathError, SizingError, GeometryError, NetlistError, ArithmeticError
    err << "error: " << e.what() << "\n";
    return kMathFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kMathFailure;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace rectcut::cli
