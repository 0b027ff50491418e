#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "rectcut/algcheck.hpp"
#include "rectcut/correspondence.hpp"
#include "rectcut/dissection_io.hpp"
#include "rectcut/ladder_io.hpp"
#include "rectcut/netlist_io.hpp"

namespace py = pybind11;
using namespace rectcut;

namespace {

AnyDissection dissection_of(const std::string& text) { return any_dissection_from_json(parse_json_text(text)); }

py::dict solve(const std::string& text) {
  return std::visit(
      [](const auto& d) {
        const auto r = solve_sizes(d);
        py::list tiles;
        for (const auto& t : r.sized.tiles) {
          tiles.append(py::make_tuple(t.id, format_scalar(t.rect->w), format_scalar(t.rect->h)));
        }
        py::dict out;
        out["x"] = format_scalar(r.ratio);
        out["inverse"] = format_scalar(r.ratio.inverse());
        out["tiles"] = tiles;
        out["sized"] = dissection_to_json(r.sized).dump();
        return out;
      },
      dissection_of(text));
}

std::vector<std::string> validate(const std::string& text) {
  return std::visit([](const auto& d) { return validate_geometric(d).problems; }, dissection_of(text));
}

py::tuple equivalence(const std::string& text) {
  return std::visit(
      [](const auto& d) {
        const auto r = certify_equivalence(d);
        return py::make_tuple(r.ok, r.mismatches);
      },
      dissection_of(text));
}

py::dict theorem1(const std::string& text, std::optional<std::string> R) {
  return std::visit(
      [&](const auto& d) {
        using K = std::decay_t<decltype(d.tiles.front().aspect)>;
        K r = d.tiles.empty() ? K(1) : d.tiles.front().aspect;
        if (R) {
          r = parse_scalar<K>(*R, d.field);
        } else {
          for (const auto& t : d.tiles) {
            if (r < t.aspect) r = t.aspect;
          }
        }
        const auto cert = theorem1_certificate(d, r);
        py::dict out;
        out["R"] = format_scalar(r);
        out["W"] = cert.W.to_string();
        out["F"] = cert.F.to_string();
        out["F_at_R"] = format_scalar(cert.value_at_R);
        return out;
      },
      dissection_of(text));
}

std::string resistance_of(const std::string& text, bool symbolic) {
  return std::visit([](const auto& net) { return format_scalar(resistance(net)); }, parse_any_netlist(text, symbolic));
}

py::dict condition3(const std::optional<std::string>& poly, const std::optional<std::string>& elem) {
  if (poly.has_value() == elem.has_value()) throw ParseError("give exactly one of poly and elem");
  const Cond3Verdict v = poly ? lfs_condition3(parse_int_poly(*poly)) : lfs_condition3(parse_quad(*elem));
  py::dict out;
  out["pass"] = v.pass;
  out["conclusive"] = v.conclusive;
  out["poly"] = v.poly.to_string();
  out["caveat"] = v.caveat;
  return out;
}

std::string cf_value(const std::string& text) {
  return std::visit([](const auto& s) { return format_scalar(cf_eval(s)); },
                    any_ladder_from_json(parse_json_text(text)));
}

std::string ladder(const std::string& text) {
  return std::visit([](const auto& s) { return dissection_to_json(ladder_dissection(s)).dump(2); },
                    any_ladder_from_json(parse_json_text(text)));
}

py::tuple run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_rectcut, m) {
  m.doc() = "Exact rectangle dissections, resistor networks and LFS criteria";

  static py::exception<Error> base(m, "RectcutError");
  static py::exception<ArithmeticError> arithmetic(m, "ArithmeticError", base.ptr());
  static py::exception<ParseError> parse(m, "ParseError", base.ptr());
  static py::exception<DimensionError> dimension(m, "DimensionError", base.ptr());
  static py::exception<GeometryError> geometry(m, "GeometryError", base.ptr());
  static py::exception<NetlistError> netlist(m, "NetlistError", base.ptr());
  static py::exception<DomainError> domain(m, "DomainError", base.ptr());
  static py::exception<MathError> math(m, "MathError", base.ptr());
  static py::exception<SizingError> sizing(m, "SizingError", math.ptr());
  static py::exception<InternalError> internal(m, "InternalError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const SizingError& e) {
      sizing(e.what());
    } catch (const MathError& e) {
      math(e.what());
    } catch (const ArithmeticError& e) {
      arithmetic(e.what());
    } catch (const ParseError& e) {
      parse(e.what());
    } catch (const DimensionError& e) {
      dimension(e.what());
    } catch (const GeometryError& e) {
      geometry(e.what());
    } catch (const NetlistError& e) {
      netlist(e.what());
    } catch (const DomainError& e) {
      domain(e.what());
    } catch (const InternalError& e) {
      internal(e.what());
    } catch (const Error& e) {
      base(e.what());
    }
  });

  m.def("solve", &solve, py::arg("dissection_json"),
        "Size every tile; returns x, 1/x, (id, w, h) per tile and the sized JSON.");
  m.def("validate", &validate, py::arg("dissection_json"), "Problems with a sized dissection (empty if valid).");
  m.def("equivalence", &equivalence, py::arg("dissection_json"), "(ok, mismatches) of the circuit correspondence.");
  m.def("theorem1", &theorem1, py::arg("dissection_json"), py::arg("R") = py::none());
  m.def("resistance", &resistance_of, py::arg("netlist"), py::arg("symbolic") = false);
  m.def("condition3", &condition3, py::arg("poly") = py::none(), py::arg("elem") = py::none());
  m.def("minpoly", [](const std::string& elem) { return minpoly_quadratic(parse_quad(elem)).to_string(); });
  m.def("cf_eval", &cf_value, py::arg("ladder_json"));
  m.def("ladder_dissection", &ladder, py::arg("ladder_json"));
  m.def("run", &run, py::arg("args"), "Run the command-line tool; returns (exit code, stdout, stderr).");
}
