#include "rotorlab/diagram.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "json.hpp"

namespace rotorlab::diagram {

namespace {

int opposite_slot(int s) { return (s + 2) % 4; }

struct Inc {
  int c, s;
  bool operator==(const Inc& o) const { return c == o.c && s == o.s; }
};

}  // namespace

Info::Info(const Diagram& d) : d_(d) { validate_and_build(); }

void Info::validate_and_build() {
  const long C = n_crossings();
  const long E = 2 * C;
  if (d_.free_loops < 0) throw ValidationError("negative free_loops");
  if (C == 0 && d_.free_loops == 0) throw ValidationError("empty diagram");

  // edge incidences
  std::vector<std::vector<Inc>> inc(E);
  for (long c = 0; c < C; ++c)
    for (int s = 0; s < 4; ++s) {
      int e = d_.crossings[c][s];
      if (e < 0 || e >= E)
        throw ValidationError("edge label out of range: " + std::to_string(e));
      inc[e].push_back({static_cast<int>(c), s});
    }
  for (long e = 0; e < E; ++e)
    if (inc[e].size() != 2)
      throw ValidationError("edge " + std::to_string(e) + " appears " +
                            std::to_string(inc[e].size()) + " times, expected 2");

  // Orientation: decide which incidence of each edge is its head (the end
  // pointing into a crossing). Slot conventions pin most of it: slot 0 is
  // the incoming under-strand, slot 2 the outgoing one, and the over-strand
  // enters at exactly one of slots 1/3. Constraints propagate along strands;
  // closed all-over components are label-ambiguous and get a deterministic
  // orientation (first incidence of their smallest edge is the head).
  head_.assign(E, {-1, -1});
  tail_.assign(E, {-1, -1});
  comp_of_.assign(E, -1);

  std::vector<int> head_idx(E, -1);  // which of inc[e] is the head
  auto pin = [&](int e, int idx, const char* why) {
    if (head_idx[e] == -1)
      head_idx[e] = idx;
    else if (head_idx[e] != idx)
      throw ValidationError(std::string("orientation conflict at edge ") + std::to_string(e) +
                            " (" + why + ")");
  };
  auto inc_index = [&](int e, const Inc& i) {
    if (inc[e][0] == i) return 0;
    return 1;
  };
  for (long c = 0; c < C; ++c) {
    int a = d_.crossings[c][0];
    pin(a, inc_index(a, {static_cast<int>(c), 0}), "slot 0 must be the incoming under-strand");
    int u = d_.crossings[c][2];
    pin(u, 1 - inc_index(u, {static_cast<int>(c), 2}), "slot 2 must be the outgoing under-strand");
  }
  // over-pair propagation until stable
  for (bool changed = true; changed;) {
    changed = false;
    for (long c = 0; c < C; ++c) {
      int u = d_.crossings[c][1], v = d_.crossings[c][3];
      int iu = inc_index(u, {static_cast<int>(c), 1});
      int iv = inc_index(v, {static_cast<int>(c), 3});
      // head-at-slot1 <=> tail-at-slot3
      if (head_idx[u] != -1 && head_idx[v] == -1) {
        head_idx[v] = (head_idx[u] == iu) ? 1 - iv : iv;
        changed = true;
      } else if (head_idx[v] != -1 && head_idx[u] == -1) {
        head_idx[u] = (head_idx[v] == iv) ? 1 - iu : iu;
        changed = true;
      } else if (head_idx[u] != -1 && head_idx[v] != -1) {
        bool u_in = head_idx[u] == iu, v_in = head_idx[v] == iv;
        if (u_in == v_in)
          throw ValidationError("over-strand orientation broken at crossing " + std::to_string(c));
      }
    }
    if (!changed) {
      // seed one unoriented edge deterministically, if any remain
      for (long e = 0; e < E; ++e)
        if (head_idx[e] == -1) {
          head_idx[e] = 0;
          changed = true;
          break;
        }
    }
  }
  for (long e = 0; e < E; ++e) {
    Inc hd = inc[e][head_idx[e]], tl = inc[e][1 - head_idx[e]];
    head_[e] = {hd.c, hd.s};
    tail_[e] = {tl.c, tl.s};
  }

  // components: walk successors, check labels consecutive per component
  std::vector<bool> seen(E, false);
  for (long s = 0; s < E; ++s) {
    if (seen[s]) continue;
    std::vector<int> order;
    int e = static_cast<int>(s);
    do {
      if (static_cast<long>(order.size()) > E)
        throw ValidationError("component trace does not close");
      order.push_back(e);
      seen[e] = true;
      auto [c, sl] = head_[e];
      e = d_.crossings[c][opposite_slot(sl)];
    } while (e != static_cast<int>(s));
    for (size_t k = 0; k < order.size(); ++k)
      if (order[k] != static_cast<int>(s) + static_cast<int>(k))
        throw ValidationError("edges are not numbered consecutively along a component near edge " +
                              std::to_string(s));
    // the successor's tail must sit at the opposite slot of our head
    for (size_t k = 0; k < order.size(); ++k) {
      int cur = order[k], nxt = order[(k + 1) % order.size()];
      auto [c, sl] = head_[cur];
      if (tail_[nxt] != std::make_pair(c, opposite_slot(sl)))
        throw ValidationError("orientation inconsistency along component at edge " +
                              std::to_string(cur));
    }
    int comp = static_cast<int>(comps_.size());
    for (int x : order) comp_of_[x] = comp;
    comps_.push_back(order);
  }

  succ_.assign(E, -1);
  for (const auto& comp : comps_)
    for (size_t k = 0; k < comp.size(); ++k) succ_[comp[k]] = comp[(k + 1) % comp.size()];

  // slot roles: slot0 must be the incoming under-strand
  sign_.assign(C, 0);
  over_in_.assign(C, 0);
  for (long c = 0; c < C; ++c) {
    int a = d_.crossings[c][0];
    if (head_[a] != std::make_pair(static_cast<int>(c), 0))
      throw ValidationError("crossing " + std::to_string(c) +
                            ": slot 0 is not the incoming under-strand");
    int b = d_.crossings[c][1], dd = d_.crossings[c][3];
    bool b_in = head_[b] == std::make_pair(static_cast<int>(c), 1);
    bool d_in = head_[dd] == std::make_pair(static_cast<int>(c), 3);
    if (b_in == d_in)
      throw ValidationError("crossing " + std::to_string(c) + ": over-strand orientation broken");
    over_in_[c] = d_in ? 3 : 1;
    sign_[c] = d_in ? 1 : -1;
  }

  // connectivity of the 4-valent graph
  if (C > 0) {
    std::vector<int> uf(C);
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
    for (long e = 0; e < E; ++e) {
      int a = find(head_[e].first), b = find(tail_[e].first);
      if (a != b) uf[a] = b;
    }
    int roots = 0;
    for (long c = 0; c < C; ++c)
      if (find(static_cast<int>(c)) == c) ++roots;
    connected_ = roots == 1 && d_.free_loops == 0;

    // faces: orbit of darts under arrive->turn
    face_of_.assign(2 * E, -1);
    for (long e = 0; e < E; ++e)
      for (int dir = 0; dir < 2; ++dir) {
        Dart d0 = 2 * static_cast<int>(e) + dir;
        if (face_of_[d0] != -1) continue;
        Face f;
        Dart d = d0;
        do {
          face_of_[d] = static_cast<int>(faces_.size());
          f.darts.push_back(d);
          auto [c, s] = dart_forward(d) ? head_[dart_edge(d)] : tail_[dart_edge(d)];
          int l = (s + 3) % 4;
          int en = d_.crossings[c][l];
          bool leaving_forward = tail_[en] == std::make_pair(c, l);
          d = leaving_forward ? fwd(en) : bwd(en);
        } while (d != d0);
        faces_.push_back(std::move(f));
      }

    // Euler check per crossing-connected block
    std::map<int, long> vcount, fcount;
    for (long c = 0; c < C; ++c) vcount[find(static_cast<int>(c))]++;
    for (const auto& f : faces_) fcount[find(head_[dart_edge(f.darts[0])].first)]++;
    for (const auto& [root, v] : vcount) {
      long fc = fcount.count(root) ? fcount[root] : 0;
      if (v - 2 * v + fc != 2)
        throw ValidationError("Euler check failed: diagram is not a sphere map");
    }

    unbounded_face_ = face_of_[bwd(0)];

    // checkerboard coloring: proper 2-coloring with unbounded face white
    if (connected_) {
      std::vector<int> color(faces_.size(), -1);
      std::queue<int> q;
      color[unbounded_face_] = 0;
      q.push(unbounded_face_);
      while (!q.empty()) {
        int f = q.front();
        q.pop();
        for (Dart d : faces_[f].darts) {
          int g = face_of_[dart_reverse(d)];
          if (color[g] == -1) {
            color[g] = 1 - color[f];
            q.push(g);
          } else if (color[g] == color[f]) {
            throw ValidationError("checkerboard coloring impossible");
          }
        }
      }
      for (size_t f = 0; f < faces_.size(); ++f) faces_[f].shaded = color[f] == 1;
    }
  } else {
    connected_ = d_.free_loops == 1;
  }

  // seifert smoothing successor
  seifert_succ_.assign(E, -1);
  for (long c = 0; c < C; ++c) {
    int a = d_.crossings[c][0], b = d_.crossings[c][1];
    int cc = d_.crossings[c][2], dd = d_.crossings[c][3];
    if (sign_[c] > 0) {  // over-strand enters at slot 3
      seifert_succ_[a] = b;
      seifert_succ_[dd] = cc;
    } else {
      seifert_succ_[a] = dd;
      seifert_succ_[b] = cc;
    }
  }
}

long Info::writhe() const {
  long w = 0;
  for (int s : sign_) w += s;
  return w;
}

long Info::self_writhe(int comp) const {
  long w = 0;
  for (long c = 0; c < n_crossings(); ++c) {
    int under = d_.crossings[c][0];
    int over = d_.crossings[c][over_in_[c]];
    if (comp_of_[under] == comp && comp_of_[over] == comp) w += sign_[c];
  }
  return w;
}

int Info::quadrant_face(int c, int q) const {
  // face between slots q and q+1: its trace arrives at slot q+1 and leaves
  // via slot q.
  int s = (q + 1) % 4;
  int e = d_.crossings[c][s];
  bool arriving_forward = head_[e] == std::make_pair(c, s);
  return face_of_[arriving_forward ? fwd(e) : bwd(e)];
}

// ---------------------------------------------------------------------------

Diagram parse_diagram(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
  if (!j.is_object() || !j.contains("crossings") || !j["crossings"].is_array())
    throw ParseError("expected object with a \"crossings\" array");
  Diagram d;
  for (const auto& q : j["crossings"]) {
    if (!q.is_array() || q.size() != 4) throw ParseError("crossing must be a quadruple");
    std::array<int, 4> x{};
    for (int i = 0; i < 4; ++i) {
      if (!q[i].is_number_integer()) throw ParseError("edge labels must be integers");
      x[i] = q[i].get<int>();
    }
    d.crossings.push_back(x);
  }
  d.free_loops = j.value("free_loops", 0);
  d.framed = j.value("framed", false);
  Info check(d);  // full validation
  return d;
}

std::string serialize(const Diagram& d) {
  nlohmann::json j;
  j["crossings"] = nlohmann::json::array();
  for (const auto& x : d.crossings) j["crossings"].push_back({x[0], x[1], x[2], x[3]});
  j["free_loops"] = d.free_loops;
  j["framed"] = d.framed;
  return j.dump();
}

Diagram mirror(const Diagram& d) {
  Info info(d);
  Diagram m = d;
  for (long c = 0; c < info.n_crossings(); ++c) {
    const auto& x = d.crossings[c];
    if (info.over_in_slot(static_cast<int>(c)) == 1)
      m.crossings[c] = {x[1], x[2], x[3], x[0]};
    else
      m.crossings[c] = {x[3], x[0], x[1], x[2]};
  }
  Info check(m);
  return m;
}

Diagram reverse(const Diagram& d, const std::vector<int>& components) {
  Info info(d);
  long ncomp = static_cast<long>(info.edge_components().size());
  std::vector<bool> rev(ncomp, false);
  for (int c : components) {
    if (c < 0 || c >= info.n_components())
      throw ValidationError("unknown component index " + std::to_string(c));
    if (c >= ncomp) continue;  // free loop: reversal is a no-op
    rev[c] = true;
  }

  // relabel reversed blocks: walking the new orientation from the block
  // start s gives s, t, t-1, ..., s+1
  std::vector<int> relabel(info.n_edges());
  for (long e = 0; e < info.n_edges(); ++e) relabel[e] = static_cast<int>(e);
  for (long ci = 0; ci < ncomp; ++ci) {
    if (!rev[ci]) continue;
    const auto& comp = info.edge_components()[ci];
    int s = comp.front(), t = comp.back();
    for (int e = s; e <= t; ++e) relabel[e] = (e == s) ? s : s + (t - e + 1);
  }

  Diagram out = d;
  for (long c = 0; c < info.n_crossings(); ++c) {
    const auto& x = d.crossings[c];
    bool under_rev = rev[info.comp_of_edge(x[0])];
    std::array<int, 4> y{};
    for (int i = 0; i < 4; ++i) y[i] = relabel[x[i]];
    if (under_rev) y = {y[2], y[3], y[0], y[1]};
    out.crossings[c] = y;
  }
  Info check(out);
  return out;
}

Diagram reverse_all(const Diagram& d) {
  Info info(d);
  std::vector<int> all(info.n_components());
  std::iota(all.begin(), all.end(), 0);
  return reverse(d, all);
}

long writhe(const Diagram& d) { return Info(d).writhe(); }

Diagram unknot() { return Diagram{{}, 1, false}; }

Diagram hopf_positive() {
  return Diagram{{{0, 3, 1, 2}, {3, 0, 2, 1}}, 0, false};
}

Diagram trefoil_right() {
  return Diagram{{{3, 1, 4, 0}, {5, 3, 0, 2}, {1, 5, 2, 4}}, 0, false};
}

Diagram figure_eight() {
  return Diagram{{{3, 0, 4, 1}, {1, 7, 2, 6}, {7, 4, 0, 5}, {5, 3, 6, 2}}, 0, false};
}

}  // namespace rotorlab::diagram
