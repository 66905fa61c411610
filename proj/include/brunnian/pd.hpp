#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brunnian/errors.hpp"

namespace brunnian {

// Arcs between crossings.  Dense 1..E in a normalized diagram.
using edge_id = int;
using component_id = int;  // 1..n, derived; free loops numbered last

// One 4-valent vertex.  Slots are listed counterclockwise starting at the
// incoming under-strand: s0 = under-in, s2 = under-out, the over-strand
// occupies s1 and s3.  Sign is +1 iff the over-strand runs s3 -> s1.
struct crossing {
  std::array<edge_id, 4> s{0, 0, 0, 0};
  edge_id operator[](int i) const { return s[i]; }
  edge_id& operator[](int i) { return s[i]; }
  friend bool operator==(const crossing&, const crossing&) = default;
};

// Oriented link diagram: PD crossings plus crossingless free loops.
// Plain data; all structure (orientation, components, faces) is derived.
struct link_diagram {
  std::vector<crossing> crossings;
  int free_loops = 0;
  std::map<component_id, std::string> names;  // optional labels

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  friend bool operator==(const link_diagram& a, const link_diagram& b) {
    return a.crossings == b.crossings && a.free_loops == b.free_loops;
  }
};

struct validation_report {
  bool ok = false;
  std::vector<std::pair<std::string, std::string>> violations;  // (rule, location)
  // stats, filled on success
  int crossing_count = 0;
  int component_count = 0;
  int writhe = 0;
  int face_count = 0;
};

// Derived orientation and incidence tables for a valid diagram.
struct diagram_info {
  int edge_count = 0;
  std::vector<int> sign;          // sign[c] in {+1,-1}
  std::vector<int> over_in_slot;  // over_in_slot[c] in {1,3}
  // head_of[e] / tail_of[e]: the (crossing, slot) where edge e ends / starts,
  // packed as 4*crossing + slot.  Index 1..E.
  std::vector<int> head_of, tail_of;
  std::vector<component_id> component_of;        // per edge, 1-based
  int component_count = 0;                       // including free loops
  std::vector<std::vector<edge_id>> components;  // edge cycles, index 1..n (0 unused)
  // true when some component never passes under and its direction was chosen
  bool orientation_ambiguous = false;

  int over_out_slot(int c) const { return over_in_slot[c] == 1 ? 3 : 1; }
};

// --- structural operations (link-core) ---

validation_report validate(const link_diagram& d);

// Orientation + component analysis; throws precondition_error on invalid input.
diagram_info analyze(const link_diagram& d);

// Component partition: edge cycles per component id plus free-loop count.
struct component_partition {
  std::vector<std::vector<edge_id>> cycles;  // index 1..n_edge_components
  int free_loops = 0;
  int count() const { return static_cast<int>(cycles.size()) - 1 + free_loops; }
};
component_partition components(const link_diagram& d);

// Renumber edges densely 1..E preserving structure (order by current id).
link_diagram normalize(const link_diagram& d);

// Sub-diagram induced by a set of components; merges strands that passed
// over/under deleted components.  Result is normalized and validated.
link_diagram sublink(const link_diagram& d, const std::vector<component_id>& keep);

link_diagram disjoint_union(const link_diagram& a, const link_diagram& b);

// Exchange over/under at every crossing (all signs negate).
link_diagram mirror(const link_diagram& d);

// Faces of the rotation system.  A dart is identified by its destination
// (crossing, slot), packed as 4*crossing + slot; each face is the cyclic
// dart list of its boundary walk.
std::vector<std::vector<int>> faces(const link_diagram& d);

// Canonical code: minimal serialization over start edge, traversal
// direction (orientation of any free class) and component order, under a
// deterministic relabeling scheme.  Equal codes <=> relabeling-related.
std::string canonical(const link_diagram& d);

struct canonical_result {
  link_diagram diagram;  // canonically relabeled
  std::string code;
};
canonical_result canonical_form(const link_diagram& d);

// Insert |k| full twists between two arcs co-bounding a face.  When the
// strands are parallel-oriented every new crossing has sign sgn(k).
link_diagram insert_twists(const link_diagram& d, edge_id e1, edge_id e2, int k);

// n-component unlink (n free loops, no crossings).
link_diagram unlink(int n);

// Low-level helper shared by sublink and the reducing moves: delete the
// flagged crossings, reconnect strands per the edge joins, drop the flagged
// edges, turn closed orphan classes into free loops, renumber densely.
link_diagram smooth_crossings(const link_diagram& d, const std::vector<char>& remove_crossing,
                              const std::vector<std::pair<edge_id, edge_id>>& joins,
                              const std::vector<char>& drop_edge);

int writhe(const link_diagram& d);

}  // namespace brunnian
