#include "brunnian/moves.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include <json.hpp>

namespace brunnian {

std::string move_kind_name(move_kind k) {
  switch (k) {
    case move_kind::r1_minus: return "R1-";
    case move_kind::r1_plus: return "R1+";
    case move_kind::r2_minus: return "R2-";
    case move_kind::r2_plus: return "R2+";
    case move_kind::r3: return "R3";
  }
  return "?";
}

move_kind move_kind_from_name(const std::string& s) {
  if (s == "R1-") return move_kind::r1_minus;
  if (s == "R1+") return move_kind::r1_plus;
  if (s == "R2-") return move_kind::r2_minus;
  if (s == "R2+") return move_kind::r2_plus;
  if (s == "R3") return move_kind::r3;
  throw argument_error("unknown move kind: " + s);
}

namespace {

bool is_over_slot(int slot) { return slot == 1 || slot == 3; }

// R1 kink pattern at crossing c: some edge occupies two cyclically adjacent
// slots.  Returns that loop edge or 0.
edge_id kink_loop_edge(const crossing& x) {
  for (int k = 0; k < 4; k++)
    if (x[k] == x[(k + 1) % 4]) return x[k];
  return 0;
}

// R2- pattern for crossings (c1, c2): they share exactly two distinct edges,
// one occupying over slots at both ends and the other under slots at both.
bool r2_pattern(const link_diagram& d, int c1, int c2) {
  if (c1 == c2) return false;
  const auto& x = d.crossings[c1];
  const auto& y = d.crossings[c2];
  std::vector<std::pair<edge_id, std::pair<int, int>>> shared;
  for (int i = 0; i < 4; i++)
    for (int j = 0; j < 4; j++)
      if (x[i] == y[j]) shared.push_back({x[i], {i, j}});
  if (shared.size() != 2) return false;
  if (shared[0].first == shared[1].first) return false;
  bool ok_a = is_over_slot(shared[0].second.first) == is_over_slot(shared[0].second.second);
  bool ok_b = is_over_slot(shared[1].second.first) == is_over_slot(shared[1].second.second);
  if (!ok_a || !ok_b) return false;
  bool a_over = is_over_slot(shared[0].second.first);
  bool b_over = is_over_slot(shared[1].second.first);
  return a_over != b_over;
}

struct triangle_data {
  bool ok = false;
  std::array<edge_id, 3> side{};     // side edges
  std::array<edge_id, 3> ext_in{};   // strand in-edge before the side
  std::array<edge_id, 3> ext_out{};  // strand out-edge after the side
  std::array<int, 3> tail_cr{}, head_cr{};
};

triangle_data triangle_at(const link_diagram& d, const diagram_info& info,
                          const std::vector<int>& face) {
  triangle_data t;
  std::set<int> cs;
  std::set<edge_id> es;
  for (int dart : face) {
    cs.insert(dart / 4);
    es.insert(d.crossings[dart / 4][dart % 4]);
  }
  if (cs.size() != 3 || es.size() != 3) return t;
  int i = 0;
  bool any_over = false;
  for (edge_id e : es) {
    int ho = info.head_of[e], to = info.tail_of[e];
    if (ho / 4 == to / 4) return t;  // side is a kink: not admissible
    t.side[i] = e;
    t.head_cr[i] = ho / 4;
    t.tail_cr[i] = to / 4;
    t.ext_in[i] = d.crossings[to / 4][(to % 4 + 2) % 4];
    t.ext_out[i] = d.crossings[ho / 4][(ho % 4 + 2) % 4];
    any_over |= (is_over_slot(ho % 4) && is_over_slot(to % 4));
    i++;
  }
  if (!any_over) return t;  // cyclic triangle admits no Reidemeister III
  t.ok = true;
  return t;
}

link_diagram apply_r1_minus(const link_diagram& d, int c) {
  if (c < 0 || c >= d.crossing_count()) throw rewrite_error("R1-: no such crossing");
  if (!kink_loop_edge(d.crossings[c])) throw rewrite_error("R1-: crossing is not a kink");
  std::vector<char> rem(d.crossing_count(), 0);
  rem[c] = 1;
  const auto& x = d.crossings[c];
  std::vector<std::pair<edge_id, edge_id>> joins{{x[0], x[2]}, {x[1], x[3]}};
  return smooth_crossings(d, rem, joins, {});
}

link_diagram apply_r2_minus(const link_diagram& d, int c1, int c2) {
  if (c1 < 0 || c2 < 0 || c1 >= d.crossing_count() || c2 >= d.crossing_count())
    throw rewrite_error("R2-: no such crossing");
  if (!r2_pattern(d, c1, c2)) throw rewrite_error("R2-: crossings do not form a bigon pair");
  std::vector<char> rem(d.crossing_count(), 0);
  rem[c1] = rem[c2] = 1;
  std::vector<std::pair<edge_id, edge_id>> joins;
  for (int c : {c1, c2}) {
    const auto& x = d.crossings[c];
    joins.emplace_back(x[0], x[2]);
    joins.emplace_back(x[1], x[3]);
  }
  return smooth_crossings(d, rem, joins, {});
}

link_diagram apply_r1_plus(const link_diagram& d, edge_id e, int sgn, int side) {
  auto info = analyze(d);
  if (e < 1 || e > info.edge_count) throw rewrite_error("R1+: unknown edge");
  if (sgn != 1 && sgn != -1) throw rewrite_error("R1+: bad sign");
  if (side != 0 && side != 1) throw rewrite_error("R1+: bad side");
  edge_id p = info.edge_count + 1, q = info.edge_count + 2, l = info.edge_count + 3;
  link_diagram out = d;
  out.crossings[info.tail_of[e] / 4][info.tail_of[e] % 4] = p;
  out.crossings[info.head_of[e] / 4][info.head_of[e] % 4] = q;
  crossing x;
  if (sgn == 1 && side == 0) x = {p, q, l, l};
  else if (sgn == -1 && side == 1) x = {p, l, l, q};
  else if (sgn == -1 && side == 0) x = {l, p, q, l};
  else x = {l, l, q, p};
  out.crossings.push_back(x);
  return normalize(out);
}

link_diagram apply_r2_plus(const link_diagram& d, edge_id eo, int fwd_o, edge_id eu, int fwd_u) {
  auto info = analyze(d);
  if (eo == eu) throw rewrite_error("R2+: edges must differ");
  if (eo < 1 || eo > info.edge_count || eu < 1 || eu > info.edge_count)
    throw rewrite_error("R2+: unknown edge");
  int dart_o = fwd_o ? info.head_of[eo] : info.tail_of[eo];
  int dart_u = fwd_u ? info.head_of[eu] : info.tail_of[eu];
  bool found = false;
  for (const auto& f : faces(d)) {
    bool a = false, b = false;
    for (int dart : f) {
      a |= (dart == dart_o);
      b |= (dart == dart_u);
    }
    if (a && b) {
      found = true;
      break;
    }
  }
  if (!found) throw rewrite_error("R2+: darts do not co-bound a face");

  edge_id o0 = info.edge_count + 1, om = info.edge_count + 2, o1 = info.edge_count + 3;
  edge_id u0 = info.edge_count + 4, um = info.edge_count + 5, u1 = info.edge_count + 6;
  link_diagram out = d;
  out.crossings[info.tail_of[eo] / 4][info.tail_of[eo] % 4] = o0;
  out.crossings[info.head_of[eo] / 4][info.head_of[eo] % 4] = o1;
  out.crossings[info.tail_of[eu] / 4][info.tail_of[eu] % 4] = u0;
  out.crossings[info.head_of[eu] / 4][info.head_of[eu] % 4] = u1;
  crossing c1, c2;
  if (fwd_o && fwd_u) {
    c1 = {um, om, u1, o0};
    c2 = {u0, om, um, o1};
  } else if (fwd_o && !fwd_u) {
    c1 = {u0, o0, um, om};
    c2 = {um, o1, u1, om};
  } else if (!fwd_o && fwd_u) {
    c1 = {u0, om, um, o0};
    c2 = {um, om, u1, o1};
  } else {
    c1 = {um, o0, u1, om};
    c2 = {u0, o1, um, om};
  }
  out.crossings.push_back(c1);
  out.crossings.push_back(c2);
  return normalize(out);
}

link_diagram apply_r3(const link_diagram& d, std::array<int, 3> want) {
  auto info = analyze(d);
  std::sort(want.begin(), want.end());
  for (const auto& f : faces(d)) {
    if (f.size() != 3) continue;
    std::array<int, 3> cs{f[0] / 4, f[1] / 4, f[2] / 4};
    std::sort(cs.begin(), cs.end());
    if (cs != want) continue;
    auto t = triangle_at(d, info, f);
    if (!t.ok) throw rewrite_error("R3: triangle not admissible");
    link_diagram out = d;
    // along each side strand the two triangle crossings exchange their order
    for (int k = 0; k < 3; k++) {
      struct passage { int c; edge_id in, out; };
      passage pa{t.head_cr[k], t.ext_in[k], t.side[k]};   // now first along strand
      passage pb{t.tail_cr[k], t.side[k], t.ext_out[k]};  // now second
      for (const auto& p : {pa, pb}) {
        crossing& x = out.crossings[p.c];
        // the side strand occupies under or over slots at this crossing
        int side_occ = (p.c == t.head_cr[k]) ? info.head_of[t.side[k]] : info.tail_of[t.side[k]];
        bool under = !is_over_slot(side_occ % 4);
        int sign = info.sign[p.c];
        if (under) {
          x[0] = p.in;
          x[2] = p.out;
        } else if (sign > 0) {
          x[3] = p.in;
          x[1] = p.out;
        } else {
          x[1] = p.in;
          x[3] = p.out;
        }
      }
    }
    auto rep = validate(out);
    if (!rep.ok) throw rewrite_error("R3: rewrite produced an invalid diagram");
    return normalize(out);
  }
  throw rewrite_error("R3: no triangle face at the requested crossings");
}

}  // namespace

std::vector<move> enumerate_moves(const link_diagram& d, const move_filter& filt) {
  std::vector<move> out;
  int n = d.crossing_count();
  auto fs = n > 0 ? faces(d) : std::vector<std::vector<int>>{};

  if (filt.reducing) {
    std::set<std::pair<int, int>> seen2;
    for (const auto& f : fs) {
      if (f.size() != 2) continue;
      int c1 = f[0] / 4, c2 = f[1] / 4;
      if (c1 == c2) continue;
      if (!r2_pattern(d, c1, c2)) continue;
      auto key = std::minmax(c1, c2);
      if (seen2.insert(key).second)
        out.push_back({move_kind::r2_minus, {key.first, key.second}});
    }
    for (int c = 0; c < n; c++)
      if (kink_loop_edge(d.crossings[c])) out.push_back({move_kind::r1_minus, {c}});
  }
  if (filt.r3 && n >= 3) {
    auto info = analyze(d);
    std::set<std::array<int, 3>> seen3;
    for (const auto& f : fs) {
      if (f.size() != 3) continue;
      auto t = triangle_at(d, info, f);
      if (!t.ok) continue;
      std::array<int, 3> cs{f[0] / 4, f[1] / 4, f[2] / 4};
      std::sort(cs.begin(), cs.end());
      if (seen3.insert(cs).second) out.push_back({move_kind::r3, {cs[0], cs[1], cs[2]}});
    }
  }
  if (filt.insertions && n > 0) {
    int emitted = 0;
    auto cap_reached = [&]() {
      return filt.insertion_cap >= 0 && emitted >= filt.insertion_cap;
    };
    auto info = analyze(d);
    for (const auto& f : fs) {
      if (cap_reached()) break;
      for (size_t i = 0; i < f.size() && !cap_reached(); i++) {
        for (size_t j = 0; j < f.size() && !cap_reached(); j++) {
          if (i == j) continue;
          edge_id eo = d.crossings[f[i] / 4][f[i] % 4];
          edge_id eu = d.crossings[f[j] / 4][f[j] % 4];
          if (eo == eu) continue;
          int fo = info.head_of[eo] == f[i] ? 1 : 0;
          int fu = info.head_of[eu] == f[j] ? 1 : 0;
          out.push_back({move_kind::r2_plus, {eo, fo, eu, fu}});
          emitted++;
        }
      }
    }
    for (edge_id e = 1; e <= info.edge_count && !cap_reached(); e++) {
      out.push_back({move_kind::r1_plus, {e, 1, 0}});
      emitted++;
    }
  }
  return out;
}

link_diagram apply_move(const link_diagram& d, const move& m) {
  link_diagram out;
  switch (m.kind) {
    case move_kind::r1_minus:
      if (m.site.size() != 1) throw rewrite_error("R1-: bad site");
      out = apply_r1_minus(d, m.site[0]);
      break;
    case move_kind::r2_minus:
      if (m.site.size() != 2) throw rewrite_error("R2-: bad site");
      out = apply_r2_minus(d, m.site[0], m.site[1]);
      break;
    case move_kind::r3:
      if (m.site.size() != 3) throw rewrite_error("R3: bad site");
      out = apply_r3(d, {m.site[0], m.site[1], m.site[2]});
      break;
    case move_kind::r1_plus:
      if (m.site.size() != 3) throw rewrite_error("R1+: bad site");
      out = apply_r1_plus(d, m.site[0], m.site[1], m.site[2]);
      break;
    case move_kind::r2_plus:
      if (m.site.size() != 4) throw rewrite_error("R2+: bad site");
      out = apply_r2_plus(d, m.site[0], m.site[1], m.site[2], m.site[3]);
      break;
  }
  auto rep = validate(out);
  if (!rep.ok)
    throw rewrite_error(move_kind_name(m.kind) + ": rewrite produced an invalid diagram (" +
                        rep.violations[0].first + ")");
  return out;
}

// ---- certificate serialization ----

std::string certificate_to_json(const move_certificate& c) {
  nlohmann::ordered_json j;
  j["initial"] = c.initial;
  j["moves"] = nlohmann::json::array();
  for (const auto& m : c.moves) {
    nlohmann::ordered_json jm;
    jm["kind"] = move_kind_name(m.kind);
    jm["site"] = m.site;
    j["moves"].push_back(jm);
  }
  j["final_free_loops"] = c.final_free_loops;
  return j.dump();
}

move_certificate certificate_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw argument_error(std::string("bad certificate json: ") + e.what());
  }
  move_certificate c;
  c.initial = j.at("initial").get<std::string>();
  for (const auto& jm : j.at("moves")) {
    move m;
    m.kind = move_kind_from_name(jm.at("kind").get<std::string>());
    m.site = jm.at("site").get<std::vector<int>>();
    c.moves.push_back(m);
  }
  c.final_free_loops = j.at("final_free_loops").get<int>();
  return c;
}

// ---- search ----

namespace {

int heuristic(const link_diagram& d) { return (d.crossing_count() + 1) / 2; }

struct search_ctx {
  search_budget budget;
  long nodes = 0;
  int crossing_cap = 0;
  int best_crossings = 0;
  std::string best_code;
  std::vector<move> best_trace;
  std::vector<move> prefix;  // greedy moves already applied
  bool found = false;
  std::vector<move> found_path;
  int found_free_loops = 0;
  bool any_cutoff = false;
  bool budget_hit = false;
  std::unordered_map<std::string, int> seen_g;

  void note_best(const link_diagram& d, const std::string& code, const std::vector<move>& path) {
    int c = d.crossing_count();
    if (c < best_crossings || (c == best_crossings && code < best_code)) {
      best_crossings = c;
      best_code = code;
      best_trace = prefix;
      best_trace.insert(best_trace.end(), path.begin(), path.end());
    }
  }
};

void dfs(const link_diagram& d, const std::string& code, int g, int threshold,
         std::vector<move>& path, search_ctx& ctx) {
  if (ctx.found || ctx.budget_hit) return;
  ctx.nodes++;
  if (ctx.nodes > ctx.budget.max_nodes) {
    ctx.budget_hit = true;
    return;
  }
  ctx.note_best(d, code, path);
  if (d.crossing_count() == 0) {
    ctx.found = true;
    ctx.found_path = path;
    ctx.found_free_loops = d.free_loops;
    return;
  }
  int f = g + heuristic(d);
  if (f > threshold || g >= ctx.budget.max_depth) {
    ctx.any_cutoff = true;
    return;
  }
  auto it = ctx.seen_g.find(code);
  if (it != ctx.seen_g.end() && it->second <= g) return;
  ctx.seen_g[code] = g;

  move_filter filt;
  filt.insertions = (d.crossing_count() + 2 <= ctx.crossing_cap);
  filt.insertion_cap = g > 8 ? 16 : -1;
  auto ms = enumerate_moves(d, filt);
  for (const auto& m : ms) {
    link_diagram child;
    try {
      child = apply_move(d, m);
    } catch (const rewrite_error&) {
      continue;
    }
    if (child.crossing_count() > ctx.crossing_cap) continue;
    auto cf = canonical_form(child);
    path.push_back(m);
    dfs(cf.diagram, cf.code, g + 1, threshold, path, ctx);
    path.pop_back();
    if (ctx.found || ctx.budget_hit) return;
  }
}

struct search_outcome {
  bool certified = false;
  move_certificate cert;
  int best_crossings = 0;
  std::vector<move> best_trace;
  long nodes = 0;
  bool exhausted = false;
};

search_outcome run_search(const link_diagram& d, const search_budget& b) {
  auto rep = validate(d);
  if (!rep.ok) throw precondition_error("search: invalid diagram");
  search_outcome out;
  auto cf = canonical_form(d);
  std::string initial_code = cf.code;

  search_ctx ctx;
  ctx.budget = b;

  // greedy reducing phase
  link_diagram cur = cf.diagram;
  std::string cur_code = cf.code;
  for (;;) {
    ctx.nodes++;
    move_filter filt;
    filt.r3 = false;
    filt.insertions = false;
    auto ms = enumerate_moves(cur, filt);
    if (ms.empty()) break;
    auto next = apply_move(cur, ms.front());
    ctx.prefix.push_back(ms.front());
    auto ncf = canonical_form(next);
    cur = ncf.diagram;
    cur_code = ncf.code;
  }
  ctx.best_crossings = cur.crossing_count();
  ctx.best_code = cur_code;
  ctx.best_trace = ctx.prefix;
  ctx.crossing_cap = cur.crossing_count() + b.max_extra_crossings;

  if (cur.crossing_count() == 0) {
    out.certified = true;
    out.cert.initial = initial_code;
    out.cert.moves = ctx.prefix;
    out.cert.final_free_loops = cur.free_loops;
    out.best_crossings = 0;
    out.best_trace = ctx.prefix;
    out.nodes = ctx.nodes;
    out.exhausted = true;
    return out;
  }

  bool exhausted = false;
  for (int threshold = heuristic(cur); threshold <= b.max_depth; threshold++) {
    ctx.seen_g.clear();
    ctx.any_cutoff = false;
    std::vector<move> path;
    dfs(cur, cur_code, 0, threshold, path, ctx);
    if (ctx.found || ctx.budget_hit) break;
    if (!ctx.any_cutoff) {
      exhausted = true;  // bounded space fully explored, no certificate in it
      break;
    }
  }

  out.nodes = ctx.nodes;
  out.best_crossings = ctx.best_crossings;
  out.best_trace = ctx.best_trace;
  out.exhausted = exhausted;
  if (ctx.found) {
    out.certified = true;
    out.cert.initial = initial_code;
    out.cert.moves = ctx.prefix;
    out.cert.moves.insert(out.cert.moves.end(), ctx.found_path.begin(), ctx.found_path.end());
    out.cert.final_free_loops = ctx.found_free_loops;
  }
  return out;
}

}  // namespace

certify_result certify_unlink(const link_diagram& d, const search_budget& b) {
  auto out = run_search(d, b);
  certify_result r;
  r.nodes = out.nodes;
  r.best_crossings = out.best_crossings;
  r.exhausted = out.exhausted;
  if (out.certified) {
    r.status = certify_status::certified;
    r.certificate = out.cert;
  }
  return r;
}

std::pair<link_diagram, std::vector<move>> simplify(const link_diagram& d,
                                                    const search_budget& b) {
  auto out = run_search(d, b);
  link_diagram cur = canonical_form(d).diagram;
  for (const auto& m : out.best_trace) cur = canonical_form(apply_move(cur, m)).diagram;
  return {cur, out.best_trace};
}

bool replay(const link_diagram& start, const move_certificate& cert) {
  auto cf = canonical_form(start);
  if (cf.code != cert.initial)
    throw precondition_error("replay: canonical code mismatch with certificate");
  link_diagram cur = cf.diagram;
  for (const auto& m : cert.moves) {
    try {
      cur = canonical_form(apply_move(cur, m)).diagram;
    } catch (const rewrite_error&) {
      return false;
    }
  }
  return cur.crossing_count() == 0 && cur.free_loops == cert.final_free_loops;
}

}  // namespace brunnian
