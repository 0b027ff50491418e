#include "rectcut/cuts.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "rectcut/errors.hpp"

namespace rectcut {
namespace {

struct Bounds {
  double x0, y0, x1, y1;
  double scale() const { return std::max(x1 - x0, y1 - y0); }
};

Bounds bounding_box(std::span<const SketchRect> sketches) {
  Bounds b{sketches[0].x, sketches[0].y, sketches[0].x + sketches[0].w, sketches[0].y + sketches[0].h};
  for (const SketchRect& s : sketches) {
    b.x0 = std::min(b.x0, s.x);
    b.y0 = std::min(b.y0, s.y);
    b.x1 = std::max(b.x1, s.x + s.w);
    b.y1 = std::max(b.y1, s.y + s.h);
  }
  return b;
}

struct Edge {
  double position;
  double lo;
  double hi;
  Incidence incidence;
};

// Clusters edges by position, then merges each line's edges into maximal
// connected segments.
std::vector<CutSegment> merge_edges(std::vector<Edge> edges, double eps) {
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    if (a.position != b.position) return a.position < b.position;
    return a.lo < b.lo;
  });
  std::vector<CutSegment> out;
  std::size_t i = 0;
  while (i < edges.size()) {
    std::size_t j = i;
    const double anchor = edges[i].position;
    while (j < edges.size() && edges[j].position - anchor <= eps) ++j;
    std::vector<Edge> line(edges.begin() + static_cast<std::ptrdiff_t>(i), edges.begin() + static_cast<std::ptrdiff_t>(j));
    std::sort(line.begin(), line.end(), [](const Edge& a, const Edge& b) { return a.lo < b.lo; });
    CutSegment current{anchor, line[0].lo, line[0].hi, {line[0].incidence}};
    for (std::size_t k = 1; k < line.size(); ++k) {
      if (line[k].lo <= current.hi + eps) {
        current.hi = std::max(current.hi, line[k].hi);
        current.incident.push_back(line[k].incidence);
      } else {
        out.push_back(std::move(current));
        current = CutSegment{anchor, line[k].lo, line[k].hi, {line[k].incidence}};
      }
    }
    out.push_back(std::move(current));
    i = j;
  }
  return out;
}

// Splits horizontal cuts where a vertical node passes straight through them.
// Tiles stacked in one column then get their own cut, which is the voltage
// law for the two parallel paths through the crossing.
std::vector<CutSegment> split_at_crossings(const std::vector<CutSegment>& cuts, const std::vector<CutSegment>& nodes,
                                           std::span<const SketchRect> sketches, double eps) {
  std::vector<CutSegment> out;
  for (const CutSegment& cut : cuts) {
    std::vector<double> splits;
    for (const CutSegment& node : nodes) {
      if (node.lo < cut.position - eps && node.hi > cut.position + eps && node.position > cut.lo + eps &&
          node.position < cut.hi - eps) {
        splits.push_back(node.position);
      }
    }
    if (splits.empty()) {
      out.push_back(cut);
      continue;
    }
    std::sort(splits.begin(), splits.end());
    std::vector<CutSegment> pieces(splits.size() + 1);
    for (CutSegment& p : pieces) {
      p.position = cut.position;
      p.lo = cut.hi;
      p.hi = cut.lo;
    }
    for (const Incidence& inc : cut.incident) {
      const SketchRect& s = sketches[inc.tile];
      const double mid = s.x + s.w / 2;
      const auto k = static_cast<std::size_t>(std::upper_bound(splits.begin(), splits.end(), mid) - splits.begin());
      pieces[k].incident.push_back(inc);
      pieces[k].lo = std::min(pieces[k].lo, s.x);
      pieces[k].hi = std::max(pieces[k].hi, s.x + s.w);
    }
    for (CutSegment& p : pieces) {
      if (!p.incident.empty()) out.push_back(std::move(p));
    }
  }
  return out;
}

std::string describe(std::size_t tile) { return "tile #" + std::to_string(tile + 1); }

}  // namespace

void check_sketch_tiling(std::span<const SketchRect> sketches) {
  if (sketches.empty()) throw GeometryError("dissection has no tiles");
  const Bounds b = bounding_box(sketches);
  const double eps = kSketchTolerance * b.scale();
  if (!(b.scale() > 0) || !std::isfinite(b.scale())) throw GeometryError("degenerate sketch bounding box");
  double area = 0;
  for (std::size_t i = 0; i < sketches.size(); ++i) {
    const SketchRect& s = sketches[i];
    if (!(s.w > eps) || !(s.h > eps)) throw GeometryError(describe(i) + " has nonpositive sketch size");
    area += s.w * s.h;
    for (std::size_t j = i + 1; j < sketches.size(); ++j) {
      const SketchRect& t = sketches[j];
      const double ox = std::min(s.x + s.w, t.x + t.w) - std::max(s.x, t.x);
      const double oy = std::min(s.y + s.h, t.y + t.h) - std::max(s.y, t.y);
      if (ox > eps && oy > eps) {
        throw GeometryError("sketch overlap between " + describe(i) + " and " + describe(j));
      }
    }
  }
  const double box = (b.x1 - b.x0) * (b.y1 - b.y0);
  if (std::abs(area - box) > kSketchTolerance * box) {
    std::ostringstream os;
    os << "sketch tiles leave gaps: tile area " << area << " vs bounding box " << box;
    throw GeometryError(os.str());
  }
}

CutStructure extract_cuts(std::span<const SketchRect> sketches) {
  check_sketch_tiling(sketches);
  const Bounds b = bounding_box(sketches);
  const double eps = kSketchTolerance * b.scale();

  std::vector<Edge> vertical;
  std::vector<Edge> horizontal;
  for (std::size_t i = 0; i < sketches.size(); ++i) {
    const SketchRect& s = sketches[i];
    vertical.push_back({s.x, s.y, s.y + s.h, {i, Side::right}});
    vertical.push_back({s.x + s.w, s.y, s.y + s.h, {i, Side::left}});
    horizontal.push_back({s.y, s.x, s.x + s.w, {i, Side::above}});
    horizontal.push_back({s.y + s.h, s.x, s.x + s.w, {i, Side::below}});
  }

  CutStructure cs;
  cs.v_nodes = merge_edges(std::move(vertical), eps);
  cs.h_cuts = split_at_crossings(merge_edges(std::move(horizontal), eps), cs.v_nodes, sketches, eps);

  const std::size_t n = sketches.size();
  constexpr auto unset = static_cast<std::size_t>(-1);
  cs.left_node.assign(n, unset);
  cs.right_node.assign(n, unset);
  cs.bottom_cut.assign(n, unset);
  cs.top_cut.assign(n, unset);
  for (std::size_t v = 0; v < cs.v_nodes.size(); ++v) {
    for (const Incidence& inc : cs.v_nodes[v].incident) {
      // A tile on the right of a node has that node as its left edge.
      (inc.side == Side::right ? cs.left_node : cs.right_node)[inc.tile] = v;
    }
  }
  for (std::size_t h = 0; h < cs.h_cuts.size(); ++h) {
    for (const Incidence& inc : cs.h_cuts[h].incident) {
      (inc.side == Side::above ? cs.bottom_cut : cs.top_cut)[inc.tile] = h;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (cs.left_node[i] == unset || cs.right_node[i] == unset || cs.bottom_cut[i] == unset || cs.top_cut[i] == unset) {
      throw GeometryError(describe(i) + " touches no cut on some side");
    }
  }

  cs.left_boundary = 0;
  cs.right_boundary = cs.v_nodes.size() - 1;
  cs.bottom_boundary = 0;
  cs.top_boundary = cs.h_cuts.size() - 1;
  auto spans = [&](const CutSegment& seg, double lo, double hi) {
    return std::abs(seg.lo - lo) <= eps && std::abs(seg.hi - hi) <= eps;
  };
  if (cs.v_nodes.size() < 2 || !spans(cs.v_nodes.front(), b.y0, b.y1) || !spans(cs.v_nodes.back(), b.y0, b.y1)) {
    throw GeometryError("vertical sides of the big rectangle are not single segments");
  }
  if (cs.h_cuts.size() < 2 || !spans(cs.h_cuts.front(), b.x0, b.x1) || !spans(cs.h_cuts.back(), b.x0, b.x1)) {
    throw GeometryError("horizontal sides of the big rectangle are not single segments");
  }
  return cs;
}

}  // namespace rectcut
