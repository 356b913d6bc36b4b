#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "morselab/presentation.hpp"
#include "morselab/words.hpp"

namespace morselab {

// Oriented edge reference: +k is edge k-1 read forwards, -k backwards.
using DartRef = std::int32_t;

struct DiagramEdge {
  std::size_t src = 0;
  std::size_t dst = 0;
  Letter label    = 0;
  bool operator==(DiagramEdge const&) const = default;
};

// Planar 2-complex given by its faces and outer boundary as cycles of darts.
// Every dart is used exactly once by a face or by the boundary, so faces
// run opposite to the boundary along shared edges. Sides are the boundary
// positions where each side starts.
struct DiskDiagram {
  Alphabet alphabet;
  std::size_t vertices = 0;
  std::vector<DiagramEdge> edges;
  std::vector<std::vector<DartRef>> faces;
  std::vector<DartRef> boundary;
  std::vector<std::size_t> sides;

  std::size_t src(DartRef d) const;
  std::size_t dst(DartRef d) const;
  Letter label(DartRef d) const;
  Word cycle_label(std::vector<DartRef> const& cycle) const;
  Word face_label(std::size_t f) const {
    return cycle_label(faces.at(f));
  }
  Word boundary_label() const {
    return cycle_label(boundary);
  }
  bool operator==(DiskDiagram const&) const = default;
};

struct Arc {
  std::size_t start = 0;  // position of the first dart in its cycle
  std::vector<DartRef> darts;
  bool interior = false;
};

struct FaceArcs {
  std::vector<Arc> arcs;  // in cycle order
  std::size_t interior_degree = 0;
  std::size_t exterior_degree = 0;
};

struct ArcDecomposition {
  std::vector<std::size_t> degree;  // per vertex
  std::vector<FaceArcs> faces;
  std::vector<Arc> boundary;
};

struct DiagramIssue {
  std::string where;  // "face 2", "edge 5", "vertex 0", "boundary", ...
  std::string what;
};

struct DiagramVerdict {
  bool valid  = false;
  bool simple = false;  // homeomorphic to a disk
  std::vector<DiagramIssue> issues;
  std::optional<ArcDecomposition> arcs;
};

DiagramVerdict validate_diagram(DiskDiagram const& d);
// Also requires every face label to lie in the symmetrised closure.
DiagramVerdict validate_diagram(DiskDiagram const& d, Presentation const& p);

struct NgonViolation {
  std::size_t face      = 0;
  int condition         = 0;  // 1: boundary face, 2: interior face
  std::size_t interior_degree = 0;
  std::size_t arcs      = 0;
};

struct NgonVerdict {
  bool pass = true;
  std::vector<NgonViolation> violations;
};

// Throws StructureError unless d is valid and simple with n marked sides.
NgonVerdict ngon_conditions(DiskDiagram const& d, std::size_t n);

enum class BigonShape { single_face, i1, not_classified };
std::string to_string(BigonShape s);

struct BigonClassification {
  BigonShape shape = BigonShape::not_classified;
  std::vector<std::size_t> chain;  // faces in order along the sides (I1)
  std::optional<std::size_t> obstruction;
  std::string reason;
};

// Throws InvalidArgument if d is not a combinatorial geodesic bigon.
BigonClassification classify_bigon(DiskDiagram const& d);

struct DiagramSearchOptions {
  std::size_t max_faces = 6;
  std::size_t max_nodes = 2'000'000;
  unsigned jobs         = 1;
};

// Diagrams over R with boundary word w and at most max_faces faces, up to
// label- and orientation-preserving isomorphism fixing the boundary base
// point, in canonical form and canonical order.
std::vector<DiskDiagram> search_small_diagrams(
    Presentation const& p,
    WordView boundary,
    DiagramSearchOptions const& options = {});

// Canonical code of a connected diagram rooted at boundary dart 0.
std::vector<std::uint32_t> canonical_code(DiskDiagram const& d);
// Relabels vertices, edges and faces into canonical order.
DiskDiagram canonical_form(DiskDiagram const& d);

}  // namespace morselab
