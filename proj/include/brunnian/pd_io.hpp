#pragma once

#include <iosfwd>
#include <string>

#include "brunnian/pd.hpp"

namespace brunnian {

// PD text format, one diagram per block:
//   X a b c d    crossing, slot order s0..s3
//   O n          n crossingless free loops
//   C id: e1 e2  optional component declaration (checked against derived)
//   # comment
link_diagram parse_pd_text(const std::string& text);

// Emits X lines, an O line when free loops are present, and derived C lines.
std::string write_pd_text(const link_diagram& d);

// JSON mirror: {"crossings":[[a,b,c,d],...],"free_loops":n}
link_diagram parse_pd_json(const std::string& text);
std::string write_pd_json(const link_diagram& d);

// Reads a diagram from a file (or "-" for stdin); sniffs JSON vs PD text.
link_diagram read_diagram_file(const std::string& path);

}  // namespace brunnian
