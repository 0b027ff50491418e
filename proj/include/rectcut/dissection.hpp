#pragma once

#include <cstdio>
#include <deque>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "rectcut/cuts.hpp"
#include "rectcut/errors.hpp"
#include "rectcut/field.hpp"
#include "rectcut/linsolve.hpp"
#include "rectcut/scalar_io.hpp"

namespace rectcut {

template <FieldElement K>
struct ExactRect {
  K x{0};
  K y{0};
  K w{0};
  K h{0};
  friend bool operator==(const ExactRect&, const ExactRect&) = default;
};

template <FieldElement K>
struct Tile {
  int id = 0;
  SketchRect sketch;
  K aspect{1};  // horizontal / vertical
  std::optional<ExactRect<K>> rect;
};

template <FieldElement K>
struct Dissection {
  FieldDescriptor field;
  std::optional<K> big_w;
  std::optional<K> big_h;
  std::vector<Tile<K>> tiles;

  std::vector<SketchRect> sketches() const {
    std::vector<SketchRect> out;
    out.reserve(tiles.size());
    for (const Tile<K>& t : tiles) out.push_back(t.sketch);
    return out;
  }

  bool is_sized() const {
    if (!big_w || !big_h) return false;
    for (const Tile<K>& t : tiles) {
      if (!t.rect) return false;
    }
    return true;
  }
};

template <FieldElement K>
CutStructure extract_cuts(const Dissection<K>& d) {
  std::set<int> ids;
  for (const Tile<K>& t : d.tiles) {
    if (!ids.insert(t.id).second) throw GeometryError("duplicate tile id " + std::to_string(t.id));
  }
  const auto sketches = d.sketches();
  return extract_cuts(std::span<const SketchRect>(sketches));
}

inline std::string tile_variable(int id) { return "v" + std::to_string(id); }

/// Stitching equations. Unknowns: x (big horizontal side), then v_k for each
/// tile in input order. The big vertical side is fixed to `height`.
///
/// Vertical nodes: left boundary gives sum v = height, interior nodes give
/// left sum - right sum = 0, the right boundary is implied by the others.
/// Horizontal cuts: the top edge gives x - sum R_k v_k = 0, interior cuts give
/// above sum - below sum = 0, the bottom edge is implied.
template <FieldElement K>
LinearSystem<K> junction_system(const CutStructure& cs, const std::vector<Tile<K>>& tiles, const K& height = K(1)) {
  LinearSystem<K> sys;
  sys.variables.push_back("x");
  for (const Tile<K>& t : tiles) sys.variables.push_back(tile_variable(t.id));
  auto var = [](std::size_t tile) { return tile + 1; };

  for (std::size_t v = 0; v < cs.v_nodes.size(); ++v) {
    if (v == cs.right_boundary) continue;
    std::vector<std::pair<std::size_t, K>> terms;
    for (const Incidence& inc : cs.v_nodes[v].incident) {
      // Tiles on the right of the node count +1 at the left boundary; elsewhere
      // the left side is +1 and the right side -1.
      const bool left_of_node = inc.side == Side::left;
      terms.emplace_back(var(inc.tile), left_of_node ? K(1) : K(v == cs.left_boundary ? 1 : -1));
    }
    sys.add_equation(terms, v == cs.left_boundary ? height : K(0));
  }
  for (std::size_t h = cs.h_cuts.size(); h-- > 0;) {
    if (h == cs.bottom_boundary) continue;
    std::vector<std::pair<std::size_t, K>> terms;
    if (h == cs.top_boundary) terms.emplace_back(0, K(1));
    for (const Incidence& inc : cs.h_cuts[h].incident) {
      const K& r = tiles[inc.tile].aspect;
      terms.emplace_back(var(inc.tile), inc.side == Side::above ? r : -r);
    }
    sys.add_equation(terms, K(0));
  }
  return sys;
}

template <FieldElement K>
LinearSystem<K> junction_system(const Dissection<K>& d, const K& height = K(1)) {
  return junction_system(extract_cuts(d), d.tiles, height);
}

template <FieldElement K>
struct SizingResult {
  Dissection<K> sized;
  K ratio;  // horizontal / vertical
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Exact tiling check: containment, disjoint interiors, total area, and
/// w = aspect * h for every tile.
template <OrderedField K>
ValidationReport validate_geometric(const Dissection<K>& d) {
  if (!d.big_w || !d.big_h) throw GeometryError("validation needs the big rectangle size");
  for (const Tile<K>& t : d.tiles) {
    if (!t.rect) throw GeometryError("tile " + std::to_string(t.id) + " has no exact rectangle");
  }
  ValidationReport report;
  auto fail = [&](std::string msg) {
    report.ok = false;
    report.problems.push_back(std::move(msg));
  };
  const K& W = *d.big_w;
  const K& H = *d.big_h;
  if (W.sign() <= 0 || H.sign() <= 0) fail("big rectangle has nonpositive side");
  K area(0);
  for (const Tile<K>& t : d.tiles) {
    const ExactRect<K>& r = *t.rect;
    const std::string name = "tile " + std::to_string(t.id);
    if (r.w.sign() <= 0 || r.h.sign() <= 0) fail(name + " has nonpositive side");
    if (r.x.sign() < 0 || r.y.sign() < 0 || r.x + r.w > W || r.y + r.h > H) fail(name + " leaves the big rectangle");
    if (!(r.w == t.aspect * r.h)) fail(name + " does not have its declared aspect");
    area += r.w * r.h;
  }
  for (std::size_t i = 0; i < d.tiles.size(); ++i) {
    const ExactRect<K>& a = *d.tiles[i].rect;
    for (std::size_t j = i + 1; j < d.tiles.size(); ++j) {
      const ExactRect<K>& b = *d.tiles[j].rect;
      const bool apart = a.x + a.w <= b.x || b.x + b.w <= a.x || a.y + a.h <= b.y || b.y + b.h <= a.y;
      if (!apart) {
        fail("tiles " + std::to_string(d.tiles[i].id) + " and " + std::to_string(d.tiles[j].id) + " overlap");
      }
    }
  }
  if (!(area == W * H)) fail("tile areas sum to " + area.to_string() + ", big rectangle has " + (W * H).to_string());
  return report;
}

/// Solves the stitching system and places every tile exactly. The big
/// vertical side is big_h when given, else 1.
template <FieldElement K>
SizingResult<K> solve_sizes(const Dissection<K>& d) {
  const CutStructure cs = extract_cuts(d);
  const K height = d.big_h ? *d.big_h : K(1);
  if constexpr (OrderedField<K>) {
    if (height.sign() <= 0) throw SizingError(SizingError::Kind::degenerate, "big vertical side must be positive");
  }
  const LinearSystem<K> sys = junction_system(cs, d.tiles, height);
  const SolveOutcome<K> outcome = gauss_jordan(sys);
  if (const auto* bad = std::get_if<InconsistentSystem<K>>(&outcome)) {
    throw SizingError(SizingError::Kind::inconsistent,
                      "tiling cannot be sized with these ratios (equation " + std::to_string(bad->row + 1) +
                          " contradicts the others)");
  }
  if (const auto* p = std::get_if<ParametricSolution<K>>(&outcome)) {
    std::string names;
    for (std::size_t f : p->free) names += (names.empty() ? "" : ", ") + sys.variables[f];
    throw SizingError(SizingError::Kind::underdetermined, "combinatorics under-determined (free: " + names + ")");
  }
  const std::vector<K>& values = std::get<UniqueSolution<K>>(outcome).values;
  const std::size_t n = d.tiles.size();
  if constexpr (OrderedField<K>) {
    for (std::size_t i = 0; i < n; ++i) {
      if (values[i + 1].sign() <= 0 || d.tiles[i].aspect.sign() <= 0) {
        throw SizingError(SizingError::Kind::degenerate, "degenerate sizing: tile " + std::to_string(d.tiles[i].id) +
                                                             " gets vertical side " + values[i + 1].to_string());
      }
    }
  }

  // Node x-coordinates and cut y-coordinates, propagated across tiles.
  std::vector<std::optional<K>> xs(cs.v_nodes.size());
  std::vector<std::optional<K>> ys(cs.h_cuts.size());
  xs[cs.left_boundary] = K(0);
  ys[cs.bottom_boundary] = K(0);
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < n; ++i) {
      const K v = values[i + 1];
      const K w = d.tiles[i].aspect * v;
      auto link = [&](std::vector<std::optional<K>>& pos, std::size_t lo, std::size_t hi, const K& len) {
        if (pos[lo] && !pos[hi]) {
          pos[hi] = *pos[lo] + len;
          progress = true;
        } else if (pos[hi] && !pos[lo]) {
          pos[lo] = *pos[hi] - len;
          progress = true;
        }
      };
      link(xs, cs.left_node[i], cs.right_node[i], w);
      link(ys, cs.bottom_cut[i], cs.top_cut[i], v);
    }
  }

  SizingResult<K> out{d, values[0] / height};
  out.sized.big_w = values[0];
  out.sized.big_h = height;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t l = cs.left_node[i];
    const std::size_t b = cs.bottom_cut[i];
    if (!xs[l] || !ys[b]) throw InternalError("tile placement did not reach every cut");
    const K v = values[i + 1];
    out.sized.tiles[i].rect = ExactRect<K>{*xs[l], *ys[b], d.tiles[i].aspect * v, v};
  }
  if constexpr (OrderedField<K>) {
    const ValidationReport report = validate_geometric(out.sized);
    if (!report.ok) throw InternalError("sized tiling failed validation: " + report.problems.front());
  }
  return out;
}

template <FieldElement K>
struct DehnVerdict {
  bool all_squares = true;
  std::vector<int> non_squares;
  K ratio;                     // big_w / big_h
  bool ratio_rational = false;
};

template <FieldElement K>
DehnVerdict<K> dehn_check(const Dissection<K>& d) {
  if (!d.is_sized()) throw GeometryError("dehn-check needs a sized dissection");
  DehnVerdict<K> out;
  for (const Tile<K>& t : d.tiles) {
    if (!(t.rect->w == t.rect->h)) {
      out.all_squares = false;
      out.non_squares.push_back(t.id);
    }
  }
  out.ratio = *d.big_w / *d.big_h;
  out.ratio_rational = is_rational_value(out.ratio);
  return out;
}

/// Multiplies every aspect and every horizontal length by s.
template <OrderedField K>
Dissection<K> stretch(const Dissection<K>& d, const K& s) {
  if (s.sign() <= 0) throw MathError("stretch factor must be positive");
  const double sd = s.to_double();
  Dissection<K> out = d;
  if (out.big_w) *out.big_w = *out.big_w * s;
  for (Tile<K>& t : out.tiles) {
    t.aspect = t.aspect * s;
    t.sketch.x *= sd;
    t.sketch.w *= sd;
    if (t.rect) {
      t.rect->x = t.rect->x * s;
      t.rect->w = t.rect->w * s;
    }
  }
  return out;
}

namespace detail {
inline std::string svg_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0 ? 0.0 : v);
  return buf;
}
}  // namespace detail

/// One rect and one label per tile; y axis flipped so the picture is upright.
template <OrderedField K>
void render_svg(const Dissection<K>& d, std::ostream& out) {
  if (!d.is_sized()) throw GeometryError("render needs a sized dissection");
  using detail::svg_number;
  const double W = d.big_w->to_double();
  const double H = d.big_h->to_double();
  const double stroke = std::max(W, H) / 400;
  const double font = std::max(W, H) / 30;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\""
      << svg_number(600 * H / W) << "\" viewBox=\"0 0 " << svg_number(W) << " " << svg_number(H) << "\">\n"
      << "<g fill=\"none\" stroke=\"black\" stroke-width=\"" << svg_number(stroke) << "\">\n";
  for (const Tile<K>& t : d.tiles) {
    const ExactRect<K>& r = *t.rect;
    const double top = H - (r.y + r.h).to_double();
    out << "<rect id=\"tile-" << t.id << "\" x=\"" << svg_number(r.x.to_double()) << "\" y=\"" << svg_number(top)
        << "\" width=\"" << svg_number(r.w.to_double()) << "\" height=\"" << svg_number(r.h.to_double()) << "\"/>\n";
  }
  out << "</g>\n<g font-family=\"sans-serif\" font-size=\"" << svg_number(font)
      << "\" text-anchor=\"middle\" dominant-baseline=\"central\">\n";
  for (const Tile<K>& t : d.tiles) {
    const ExactRect<K>& r = *t.rect;
    const double cx = (r.x + r.w / K(2)).to_double();
    const double cy = H - (r.y + r.h / K(2)).to_double();
    out << "<text x=\"" << svg_number(cx) << "\" y=\"" << svg_number(cy) << "\">" << t.id << "</text>\n";
  }
  out << "</g>\n</svg>\n";
}

}  // namespace rectcut
