#include "geometry.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace gtpa {

namespace {

struct DSU {
  std::vector<int> parent;
  int add() {
    parent.push_back(static_cast<int>(parent.size()));
    return parent.back();
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x)
      x = parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
    return x;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

[[noreturn]] void bug(const std::string& msg) { fail(errc::internal, "geometry: " + msg); }

}  // namespace

Geometry analyze(const Tangle& t) {
  validate_tangle(t);
  Geometry geo;
  geo.external_color = t.external_color;
  geo.external_shaded = t.external_shaded;
  int n0 = t.external_color;
  int R = static_cast<int>(t.rows.size());

  DSU cells, strings;
  std::vector<char> cell_shade;  // per cell id, fixed at creation
  auto new_cell = [&](int col) {
    int id = cells.add();
    cell_shade.push_back(t.col_shaded(col) ? 1 : 0);
    return id;
  };
  auto unite_cells = [&](int a, int b) {
    if (cell_shade[static_cast<size_t>(a)] != cell_shade[static_cast<size_t>(b)])
      bug("merging cells of opposite shading");
    cells.unite(a, b);
  };

  // Current cross-section: cell ids per column, string slot ids per strand.
  std::vector<int> cell_at(static_cast<size_t>(n0) + 1);
  std::vector<int> slot_at(static_cast<size_t>(n0));
  for (int c = 0; c <= n0; ++c) cell_at[static_cast<size_t>(c)] = new_cell(c);
  for (int p = 0; p < n0; ++p) slot_at[static_cast<size_t>(p)] = strings.add();

  // Every (level, position) occurrence of every strand, for network location.
  struct SlotOcc {
    int pos, level, slot, left_cell;
  };
  std::vector<SlotOcc> occs;
  auto record_level = [&](int level) {
    for (size_t p = 0; p < slot_at.size(); ++p)
      occs.push_back({static_cast<int>(p) + 1, level, slot_at[p], cell_at[p]});
  };
  record_level(0);

  std::vector<int> bottom_slots = slot_at;  // external bottom points
  std::vector<int> bottom_cells = cell_at;

  // Marked point bookkeeping per disc: point i (1..2k) -> string slot, and
  // opening i -> cell id.
  int D = t.num_discs();
  std::vector<std::vector<int>> point_slot(static_cast<size_t>(D));
  std::vector<std::vector<int>> opening_cell(static_cast<size_t>(D));
  std::vector<int> disc_color(static_cast<size_t>(D), -1);

  for (int ri = 0; ri < R; ++ri) {
    const Row& r = t.rows[static_cast<size_t>(ri)];
    int w = static_cast<int>(slot_at.size());
    std::vector<int> ncell, nslot;
    switch (r.kind) {
      case Row::Id:
        ncell = cell_at;
        nslot = slot_at;
        break;
      case Row::Cup: {
        int p = r.pos;
        for (int c = 0; c <= p - 1; ++c) ncell.push_back(cell_at[static_cast<size_t>(c)]);
        ncell.push_back(new_cell(p));
        for (int c = p + 1; c <= w + 2; ++c) ncell.push_back(cell_at[static_cast<size_t>(c - 2)]);
        for (int q = 1; q <= p - 1; ++q) nslot.push_back(slot_at[static_cast<size_t>(q - 1)]);
        int arc = strings.add();
        nslot.push_back(arc);
        nslot.push_back(arc);
        for (int q = p + 2; q <= w + 2; ++q) nslot.push_back(slot_at[static_cast<size_t>(q - 3)]);
        ++geo.criticals[0][t.col_shaded(p) ? 1 : 0];
        break;
      }
      case Row::Cap: {
        int p = r.pos;
        strings.unite(slot_at[static_cast<size_t>(p - 1)], slot_at[static_cast<size_t>(p)]);
        unite_cells(cell_at[static_cast<size_t>(p - 1)], cell_at[static_cast<size_t>(p + 1)]);
        for (int c = 0; c <= p - 1; ++c) ncell.push_back(cell_at[static_cast<size_t>(c)]);
        for (int c = p; c <= w - 2; ++c) ncell.push_back(cell_at[static_cast<size_t>(c + 2)]);
        for (int q = 1; q <= p - 1; ++q) nslot.push_back(slot_at[static_cast<size_t>(q - 1)]);
        for (int q = p; q <= w - 2; ++q) nslot.push_back(slot_at[static_cast<size_t>(q + 1)]);
        ++geo.criticals[1][t.col_shaded(p) ? 1 : 0];
        break;
      }
      case Row::Box: {
        int p = r.pos, k = r.color, d = r.disc;
        disc_color[static_cast<size_t>(d)] = k;
        ncell = cell_at;
        for (int c = p; c <= p + k - 2; ++c) ncell[static_cast<size_t>(c)] = new_cell(c);
        nslot = slot_at;
        auto& pts = point_slot[static_cast<size_t>(d)];
        auto& ops = opening_cell[static_cast<size_t>(d)];
        pts.assign(static_cast<size_t>(2 * k) + 1, -1);
        ops.assign(static_cast<size_t>(2 * k) + 1, -1);
        for (int j = 1; j <= k; ++j) {
          // Bottom strand j from the left is marked point 2k+1-j.
          pts[static_cast<size_t>(2 * k + 1 - j)] = slot_at[static_cast<size_t>(p + j - 2)];
          int fresh = strings.add();
          nslot[static_cast<size_t>(p + j - 2)] = fresh;
          pts[static_cast<size_t>(j)] = fresh;
        }
        if (k >= 1) {
          for (int j = 1; j <= k - 1; ++j) {
            ops[static_cast<size_t>(j)] = ncell[static_cast<size_t>(p + j - 1)];
            ops[static_cast<size_t>(k + j)] = cell_at[static_cast<size_t>(p + (k - j) - 1)];
          }
          ops[static_cast<size_t>(k)] = cell_at[static_cast<size_t>(p + k - 1)];
          ops[static_cast<size_t>(2 * k)] = cell_at[static_cast<size_t>(p - 1)];
        }
        break;
      }
    }
    // Cells not displaced by the row continue straight through; both arrays
    // already share ids there, so nothing to merge.
    cell_at = std::move(ncell);
    slot_at = std::move(nslot);
    record_level(ri + 1);
  }
  if (static_cast<int>(slot_at.size()) != n0) bug("final width mismatch");
  std::vector<int> top_slots = slot_at;

  // External openings -> cells.
  std::vector<int> ext_opening_cell(static_cast<size_t>(2 * n0) + 1, -1);
  if (n0 >= 1) {
    for (int j = 1; j <= n0 - 1; ++j) {
      ext_opening_cell[static_cast<size_t>(j)] = cell_at[static_cast<size_t>(j)];
      ext_opening_cell[static_cast<size_t>(n0 + j)] = bottom_cells[static_cast<size_t>(n0 - j)];
    }
    ext_opening_cell[static_cast<size_t>(n0)] = cell_at[static_cast<size_t>(n0)];
    ext_opening_cell[static_cast<size_t>(2 * n0)] = bottom_cells[0];
  }

  // ---- Components of strings and boxes ------------------------------------
  // Needed before walk tracing: a walk that wraps a component from outside
  // (an inner boundary of its face) comes out of the tracer in the reverse of
  // the clockwise reading the face relations use.
  std::map<int, int> comp_of_string;
  DSU comp;
  std::set<int> all_strings;
  for (const SlotOcc& o : occs) all_strings.insert(strings.find(o.slot));
  for (int cls : all_strings) comp_of_string[cls] = comp.add();
  std::vector<int> comp_of_disc(static_cast<size_t>(D), -1);
  for (int d = 0; d < D; ++d)
    if (disc_color[static_cast<size_t>(d)] >= 1) comp_of_disc[static_cast<size_t>(d)] = comp.add();
  for (int d = 0; d < D; ++d)
    for (int i = 1; i <= 2 * disc_color[static_cast<size_t>(d)]; ++i)
      comp.unite(comp_of_disc[static_cast<size_t>(d)],
                 comp_of_string.at(strings.find(point_slot[static_cast<size_t>(d)][static_cast<size_t>(i)])));
  std::set<int> external_comps;
  for (int j = 0; j < n0; ++j) {
    external_comps.insert(comp.find(comp_of_string.at(strings.find(bottom_slots[static_cast<size_t>(j)]))));
    external_comps.insert(comp.find(comp_of_string.at(strings.find(top_slots[static_cast<size_t>(j)]))));
  }
  // Leftmost slot occurrence per component locates its containing face.
  std::map<int, SlotOcc> leftmost;
  for (const SlotOcc& o : occs) {
    int c = comp.find(comp_of_string.at(strings.find(o.slot)));
    auto it = leftmost.find(c);
    if (it == leftmost.end() || o.pos < it->second.pos ||
        (o.pos == it->second.pos && o.level < it->second.level))
      leftmost[c] = o;
  }
  std::map<int, int> containing_face;
  for (const auto& [c, o] : leftmost) containing_face[c] = cells.find(o.left_cell);

  // ---- Marked point graph ----------------------------------------------
  // Vertices: points of color >= 1 boxes, then external points.
  std::map<std::pair<int, int>, int> vid;  // (disc, point) -> vertex
  int V = 0;
  for (int d = 0; d < D; ++d)
    for (int i = 1; i <= 2 * disc_color[static_cast<size_t>(d)]; ++i)
      vid[{d, i}] = V++;
  for (int i = 1; i <= 2 * n0; ++i) vid[{-1, i}] = V++;

  struct Edge {
    int a, b;
    bool is_opening;
    OpeningRef op;
  };
  std::vector<Edge> edges;
  // rot[v] = the three out-darts clockwise; filled per the tables below.
  std::vector<std::array<int, 3>> rot(static_cast<size_t>(V), {-1, -1, -1});
  auto put = [&](int v, int slot, int dart) {
    if (rot[static_cast<size_t>(v)][static_cast<size_t>(slot)] != -1) bug("rotation slot clash");
    rot[static_cast<size_t>(v)][static_cast<size_t>(slot)] = dart;
  };

  // Opening edges. Rotation slots: at a box, top point j carries
  // [string, op_j, op_{j-1}], bottom point b carries [op_{b-1}, string, op_b];
  // externally top j is [op_j, string, op_{j-1}] and bottom b is
  // [string, op_{b-1}, op_b]. String darts fill the remaining slot later.
  auto add_openings = [&](int disc, int k) {
    for (int i = 1; i <= 2 * k; ++i) {
      int from = vid.at({disc, i}), to = vid.at({disc, i % (2 * k) + 1});
      int e = static_cast<int>(edges.size());
      edges.push_back({from, to, true, OpeningRef{disc, i}});
      int ifrom = i, ito = i % (2 * k) + 1;
      bool from_top = disc >= 0 ? ifrom <= k : ifrom <= n0;
      bool to_top = disc >= 0 ? ito <= k : ito <= n0;
      if (disc >= 0) {
        put(from, from_top ? 1 : 2, 2 * e);      // op_i at point i
        put(to, to_top ? 2 : 0, 2 * e + 1);      // op_i at point i+1 is op_{(i+1)-1}
      } else {
        put(from, from_top ? 0 : 2, 2 * e);
        put(to, to_top ? 2 : 1, 2 * e + 1);
      }
    }
  };
  for (int d = 0; d < D; ++d)
    if (disc_color[static_cast<size_t>(d)] >= 1) add_openings(d, disc_color[static_cast<size_t>(d)]);
  if (n0 >= 1) add_openings(-1, n0);

  // String edges: collect the marked point(s) on each string class.
  std::map<int, std::vector<std::pair<int, int>>> string_pts;  // class -> points
  auto attach = [&](int slot, int disc, int point) {
    string_pts[strings.find(slot)].push_back({disc, point});
  };
  for (int d = 0; d < D; ++d)
    for (int i = 1; i <= 2 * disc_color[static_cast<size_t>(d)]; ++i)
      attach(point_slot[static_cast<size_t>(d)][static_cast<size_t>(i)], d, i);
  for (int j = 1; j <= n0; ++j) {
    attach(bottom_slots[static_cast<size_t>(j - 1)], -1, 2 * n0 + 1 - j);
    attach(top_slots[static_cast<size_t>(j - 1)], -1, j);
  }
  geo.num_strings = static_cast<int>(all_strings.size());
  for (const auto& [cls, pts] : string_pts) {
    (void)cls;
    if (pts.size() != 2) bug("string with " + std::to_string(pts.size()) + " endpoints");
    int u = vid.at(pts[0]), v = vid.at(pts[1]);
    int e = static_cast<int>(edges.size());
    edges.push_back({u, v, false, {}});
    auto string_slot_of = [&](std::pair<int, int> pt) {
      auto [disc, i] = pt;
      if (disc >= 0) return i <= disc_color[static_cast<size_t>(disc)] ? 0 : 1;
      return i <= n0 ? 1 : 0;
    };
    put(u, string_slot_of(pts[0]), 2 * e);
    put(v, string_slot_of(pts[1]), 2 * e + 1);
  }
  for (int v = 0; v < V; ++v)
    for (int s = 0; s < 3; ++s)
      if (rot[static_cast<size_t>(v)][static_cast<size_t>(s)] == -1) bug("unfilled rotation slot");

  // ---- Face walks: trace the orbits of the next-dart map -----------------
  auto head = [&](int dart) {
    const Edge& e = edges[static_cast<size_t>(dart / 2)];
    return dart % 2 == 0 ? e.b : e.a;
  };
  auto next = [&](int dart) {
    int v = head(dart);
    const auto& rv = rot[static_cast<size_t>(v)];
    int rev = dart ^ 1;
    for (int s = 0; s < 3; ++s)
      if (rv[static_cast<size_t>(s)] == rev) return rv[static_cast<size_t>((s + 2) % 3)];
    bug("reverse dart missing from rotation");
  };
  auto opening_cell_of = [&](const OpeningRef& op) {
    int raw = op.disc < 0 ? ext_opening_cell[static_cast<size_t>(op.idx)]
                          : opening_cell[static_cast<size_t>(op.disc)][static_cast<size_t>(op.idx)];
    return cells.find(raw);
  };

  std::vector<char> seen(edges.size() * 2, 0);
  std::map<OpeningRef, std::pair<int, int>> coverage;  // opening -> (face walks, interior walks)
  for (size_t d0 = 0; d0 < edges.size() * 2; ++d0) {
    if (seen[d0]) continue;
    std::vector<int> cycle;
    int d = static_cast<int>(d0);
    do {
      seen[static_cast<size_t>(d)] = 1;
      cycle.push_back(d);
      d = next(d);
    } while (d != static_cast<int>(d0));
    bool has_string = false;
    FaceWalk walk;
    for (int dart : cycle) {
      const Edge& e = edges[static_cast<size_t>(dart / 2)];
      if (e.is_opening)
        walk.steps.push_back(e.op);
      else
        has_string = true;
    }
    if (!has_string) {
      // A walk that never leaves one disc's boundary is the disc interior.
      if (walk.steps.empty()) bug("empty orbit");
      int d0disc = walk.steps[0].disc;
      for (const auto& op : walk.steps) {
        if (op.disc != d0disc) bug("interior orbit spans several discs");
        ++coverage[op].second;
      }
      continue;
    }
    if (walk.steps.empty()) bug("face walk with no openings");
    walk.face = opening_cell_of(walk.steps[0]);
    walk.shaded = cell_shade[static_cast<size_t>(walk.face)] != 0;
    for (const auto& op : walk.steps) {
      if (opening_cell_of(op) != walk.face) bug("face walk touches two faces");
      ++coverage[op].first;
    }
    // A walk around a component enclosed by its own face is an inner boundary
    // of that face; the tracer reads those opposite to the clockwise order the
    // face relations use, so flip them.
    int wc = -1;
    for (const auto& op : walk.steps)
      if (op.disc >= 0) {
        wc = comp.find(comp_of_disc[static_cast<size_t>(op.disc)]);
        break;
      }
    if (wc >= 0 && !external_comps.count(wc) && containing_face.at(wc) == walk.face)
      std::reverse(walk.steps.begin(), walk.steps.end());
    geo.walks.push_back(std::move(walk));
  }
  int total_openings = 2 * n0;
  for (int d = 0; d < D; ++d)
    if (disc_color[static_cast<size_t>(d)] >= 1) total_openings += 2 * disc_color[static_cast<size_t>(d)];
  if (static_cast<int>(coverage.size()) != total_openings) bug("opening coverage incomplete");
  for (const auto& [op, cnt] : coverage) {
    (void)op;
    if (cnt.first != 1 || cnt.second != 1) bug("opening not covered exactly once per side");
  }

  // ---- Networks -----------------------------------------------------------
  // Components not reaching the external boundary are networks, weighted by
  // the shading of the face containing them.
  for (const auto& [c, f] : containing_face) {
    if (external_comps.count(c)) continue;
    bool shaded = cell_shade[static_cast<size_t>(f)] != 0;
    ++(shaded ? geo.networks_shaded : geo.networks_unshaded);
  }

  std::set<int> face_classes;
  for (int id = 0; id < static_cast<int>(cell_shade.size()); ++id)
    face_classes.insert(cells.find(id));
  geo.num_faces = static_cast<int>(face_classes.size());
  return geo;
}

}  // namespace gtpa
