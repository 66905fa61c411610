#include "brunnian/pd_io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace brunnian {

link_diagram parse_pd_text(const std::string& text) {
  link_diagram d;
  std::vector<std::pair<component_id, std::vector<edge_id>>> declared;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    auto fail = [&](const std::string& m) {
      throw argument_error("pd line " + std::to_string(lineno) + ": " + m);
    };
    if (tag == "X") {
      crossing x;
      for (int k = 0; k < 4; k++)
        if (!(ls >> x[k]) || x[k] <= 0) fail("expected four positive edge ids");
      d.crossings.push_back(x);
    } else if (tag == "O") {
      int n;
      if (!(ls >> n) || n < 0) fail("expected a loop count");
      d.free_loops += n;
    } else if (tag == "C") {
      std::string idtok;
      if (!(ls >> idtok) || idtok.empty()) fail("expected component id");
      if (idtok.back() == ':') idtok.pop_back();
      component_id cid;
      try {
        cid = std::stoi(idtok);
      } catch (...) {
        fail("bad component id");
        return d;  // unreachable
      }
      std::vector<edge_id> es;
      edge_id e;
      while (ls >> e) es.push_back(e);
      declared.emplace_back(cid, es);
    } else {
      fail("unknown record '" + tag + "'");
    }
  }
  if (!declared.empty()) {
    // each declaration must name exactly one derived edge cycle
    auto info = analyze(d);
    for (auto& [cid, es] : declared) {
      if (es.empty()) throw argument_error("pd: component " + std::to_string(cid) + " empty");
      component_id derived = info.component_of[es[0]];
      std::vector<edge_id> cyc = info.components[derived];
      std::vector<edge_id> want = es;
      std::sort(cyc.begin(), cyc.end());
      std::sort(want.begin(), want.end());
      if (cyc != want)
        throw argument_error("pd: component declaration " + std::to_string(cid) +
                             " does not match the derived partition");
    }
  }
  return d;
}

std::string write_pd_text(const link_diagram& d) {
  std::ostringstream os;
  for (const auto& x : d.crossings)
    os << "X " << x[0] << " " << x[1] << " " << x[2] << " " << x[3] << "\n";
  if (d.free_loops > 0) os << "O " << d.free_loops << "\n";
  if (!d.crossings.empty()) {
    auto info = analyze(d);
    for (size_t c = 1; c < info.components.size(); c++) {
      os << "C " << c << ":";
      for (edge_id e : info.components[c]) os << " " << e;
      os << "\n";
    }
  }
  return os.str();
}

link_diagram parse_pd_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw argument_error(std::string("bad json: ") + e.what());
  }
  link_diagram d;
  if (!j.is_object()) throw argument_error("json diagram must be an object");
  if (j.contains("crossings")) {
    for (const auto& arr : j["crossings"]) {
      if (!arr.is_array() || arr.size() != 4)
        throw argument_error("json crossing must be a 4-array");
      crossing x;
      for (int k = 0; k < 4; k++) x[k] = arr[k].get<int>();
      d.crossings.push_back(x);
    }
  }
  if (j.contains("free_loops")) d.free_loops = j["free_loops"].get<int>();
  if (d.free_loops < 0) throw argument_error("json: negative free_loops");
  if (j.contains("names")) {
    for (auto& [k, v] : j["names"].items()) d.names[std::stoi(k)] = v.get<std::string>();
  }
  return d;
}

std::string write_pd_json(const link_diagram& d) {
  nlohmann::ordered_json j;
  j["crossings"] = nlohmann::json::array();
  for (const auto& x : d.crossings) j["crossings"].push_back({x[0], x[1], x[2], x[3]});
  j["free_loops"] = d.free_loops;
  if (!d.names.empty()) {
    nlohmann::ordered_json names;
    for (auto& [k, v] : d.names) names[std::to_string(k)] = v;
    j["names"] = names;
  }
  return j.dump();
}

link_diagram read_diagram_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(path);
    if (!f) throw argument_error("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_pd_json(text);
  return parse_pd_text(text);
}

}  // namespace brunnian
