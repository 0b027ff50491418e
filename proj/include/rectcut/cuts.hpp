#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rectcut {

/// Approximate tile placement read off a figure. Only the combinatorics matter.
struct SketchRect {
  double x = 0;
  double y = 0;
  double w = 0;
  double h = 0;
};

/// Which side of a cut the incident tile lies on.
enum class Side { left, right, below, above };

struct Incidence {
  std::size_t tile;  // index into the tile list
  Side side;
};

/// A maximal segment of the union of tile edges along one line.
struct CutSegment {
  double position = 0;  // x for vertical nodes, y for horizontal cuts
  double lo = 0;
  double hi = 0;
  std::vector<Incidence> incident;
};

/// Combinatorial structure of a dissection: vertical nodes and horizontal cuts.
///
/// Vertical nodes are ordered by (x, lo), horizontal cuts by (y, lo), so the
/// left boundary is the first vertical node and the right boundary the last;
/// likewise bottom first and top last.
struct CutStructure {
  std::vector<CutSegment> v_nodes;
  std::vector<CutSegment> h_cuts;
  std::size_t left_boundary = 0;
  std::size_t right_boundary = 0;
  std::size_t bottom_boundary = 0;
  std::size_t top_boundary = 0;
  // Per tile: node on its left/right edge, cut on its bottom/top edge.
  std::vector<std::size_t> left_node;
  std::vector<std::size_t> right_node;
  std::vector<std::size_t> bottom_cut;
  std::vector<std::size_t> top_cut;
};

/// Relative tolerance for sketch coordinates.
inline constexpr double kSketchTolerance = 1e-6;

/// Throws GeometryError if the sketches do not tile their bounding box
/// (gaps, overlaps, or degenerate tiles beyond tolerance).
void check_sketch_tiling(std::span<const SketchRect> sketches);

/// Groups tile edges into maximal connected segments. Segments on the same
/// line that share a point are merged into one vertical node. Horizontal cuts
/// are additionally split where a vertical node crosses them.
CutStructure extract_cuts(std::span<const SketchRect> sketches);

}  // namespace rectcut
