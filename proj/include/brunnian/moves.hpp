#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brunnian/pd.hpp"

namespace brunnian {

enum class move_kind { r1_minus, r1_plus, r2_minus, r2_plus, r3 };

std::string move_kind_name(move_kind k);
move_kind move_kind_from_name(const std::string& s);

// Site encodings (ids refer to the diagram the move is applied to):
//   R1-: [crossing]
//   R2-: [crossing_a, crossing_b]
//   R3 : [crossing_a, crossing_b, crossing_c]   (the triangle, sorted)
//   R1+: [edge, sign(+1/-1), side(0/1)]
//   R2+: [over_edge, over_forward, under_edge, under_forward]
struct move {
  move_kind kind;
  std::vector<int> site;
  friend bool operator==(const move&, const move&) = default;
};

// Replayable witness that a diagram reduces to a crossingless unlink.
// Moves are recorded against the canonical relabeling of each intermediate
// state: replay canonicalizes after every application.
struct move_certificate {
  std::string initial;  // canonical code of the start diagram
  std::vector<move> moves;
  int final_free_loops = 0;
};

std::string certificate_to_json(const move_certificate& c);
move_certificate certificate_from_json(const std::string& text);

struct search_budget {
  long max_nodes = 1000000;
  int max_extra_crossings = 2;
  int max_depth = 64;
};

// Which kinds to enumerate.
struct move_filter {
  bool reducing = true;    // R1-, R2-
  bool r3 = true;
  bool insertions = true;  // R1+, R2+
  int insertion_cap = -1;  // at most this many insertion moves (-1: all)
};

std::vector<move> enumerate_moves(const link_diagram& d, const move_filter& f = {});

link_diagram apply_move(const link_diagram& d, const move& m);

enum class certify_status { certified, unknown };

struct certify_result {
  certify_status status = certify_status::unknown;
  std::optional<move_certificate> certificate;
  int best_crossings = 0;  // fewest crossings reached within budget
  long nodes = 0;
  bool exhausted = false;  // search space fully explored under the caps
};

// Sound, semi-complete unlink certification: certified results replay; an
// unknown result means the budget (or the bounded search space) ran out.
certify_result certify_unlink(const link_diagram& d, const search_budget& b = {});

// Greedy + bounded search for a small diagram; returns the best diagram
// found (canonical form) and the move trace reaching it.
std::pair<link_diagram, std::vector<move>> simplify(const link_diagram& d,
                                                    const search_budget& b = {});

// True iff the certificate's moves all apply in order from the canonical
// form of start and finish at a crossingless diagram with the recorded
// number of loops.  Throws precondition_error on a canonical-code mismatch.
bool replay(const link_diagram& start, const move_certificate& cert);

}  // namespace brunnian
