#include "tangle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gtpa {

namespace {

[[noreturn]] void row_fail(int row1, const std::string& msg) {
  fail(errc::domain, "row " + std::to_string(row1) + ": " + msg);
}

}  // namespace

int Tangle::disc_index(const std::string& name) const {
  for (int i = 0; i < num_discs(); ++i)
    if (disc_names[static_cast<size_t>(i)] == name) return i;
  fail(errc::argument, "tangle has no disc named '" + name + "'");
}

const Row& Tangle::disc_row(int d) const {
  for (const Row& r : rows)
    if (r.kind == Row::Box && r.disc == d) return r;
  fail(errc::argument, "tangle has no box for disc " + std::to_string(d));
}

void validate_tangle(const Tangle& t) {
  if (t.external_color < 0) fail(errc::argument, "negative external color");
  if (t.external_shaded && t.external_color != 0)
    fail(errc::argument, "external shading flag only applies to color-0 tangles");
  std::set<std::string> names;
  for (const auto& n : t.disc_names) {
    if (n.empty() || n.find_first_of(" \t\r\n#") != std::string::npos)
      fail(errc::argument, "bad disc name '" + n + "'");
    if (!names.insert(n).second) fail(errc::argument, "duplicate disc name '" + n + "'");
  }
  std::vector<bool> seen(static_cast<size_t>(t.num_discs()), false);
  int width = t.external_color;
  for (size_t i = 0; i < t.rows.size(); ++i) {
    const Row& r = t.rows[i];
    int row1 = static_cast<int>(i) + 1;
    switch (r.kind) {
      case Row::Id:
        break;
      case Row::Cup:
        if (r.pos < 1 || r.pos > width + 1) row_fail(row1, "cup position out of range");
        width += 2;
        break;
      case Row::Cap:
        if (r.pos < 1 || r.pos > width - 1) row_fail(row1, "cap position out of range");
        width -= 2;
        break;
      case Row::Box: {
        if (r.color < 0) row_fail(row1, "negative box color");
        if (r.disc < 0 || r.disc >= t.num_discs()) row_fail(row1, "box disc out of range");
        if (seen[static_cast<size_t>(r.disc)])
          row_fail(row1, "disc " + t.disc_names[static_cast<size_t>(r.disc)] + " used twice");
        seen[static_cast<size_t>(r.disc)] = true;
        int max_pos = r.color == 0 ? width + 1 : width - r.color + 1;
        if (r.pos < 1 || r.pos > max_pos) row_fail(row1, "box position out of range");
        // Boxes with strands must start in an unshaded cell; color-0 boxes
        // carry their cell's type implicitly and may sit anywhere.
        if (r.color >= 1 && t.col_shaded(r.pos - 1))
          row_fail(row1, "box starts in a shaded cell");
        break;
      }
    }
  }
  if (width != t.external_color)
    fail(errc::domain, "strand count ends at " + std::to_string(width) + ", expected " +
                           std::to_string(t.external_color));
  for (size_t d = 0; d < seen.size(); ++d)
    if (!seen[d]) fail(errc::argument, "disc " + t.disc_names[d] + " has no box row");
}

Tangle parse_tangle(const std::string& text) {
  Tangle t;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  auto parse_int = [&](const std::string& tok) {
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("");
      return v;
    } catch (...) {
      fail(errc::parse, "line " + std::to_string(lineno) + ": expected an integer, got '" +
                            tok + "'");
    }
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string w; ls >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    if (!have_header) {
      if (tok[0] != "tangle" || tok.size() < 2 || tok.size() > 3)
        fail(errc::parse, "line " + std::to_string(lineno) + ": expected 'tangle <color>'");
      t.external_color = parse_int(tok[1]);
      if (tok.size() == 3) {
        if (tok[2] != "shaded")
          fail(errc::parse, "line " + std::to_string(lineno) + ": unknown flag '" + tok[2] + "'");
        t.external_shaded = true;
      }
      have_header = true;
      continue;
    }
    Row r;
    if (tok[0] == "id" && tok.size() == 1) {
      r.kind = Row::Id;
    } else if (tok[0] == "cup" && tok.size() == 2) {
      r.kind = Row::Cup;
      r.pos = parse_int(tok[1]);
    } else if (tok[0] == "cap" && tok.size() == 2) {
      r.kind = Row::Cap;
      r.pos = parse_int(tok[1]);
    } else if (tok[0] == "box" && tok.size() == 4) {
      r.kind = Row::Box;
      const std::string& name = tok[1];
      auto it = std::find(t.disc_names.begin(), t.disc_names.end(), name);
      if (it != t.disc_names.end())
        fail(errc::parse, "line " + std::to_string(lineno) + ": disc '" + name + "' reused");
      r.disc = t.num_discs();
      t.disc_names.push_back(name);
      r.color = parse_int(tok[2]);
      r.pos = parse_int(tok[3]);
    } else {
      fail(errc::parse, "line " + std::to_string(lineno) + ": unrecognized row '" + tok[0] + "'");
    }
    t.rows.push_back(r);
  }
  if (!have_header) fail(errc::parse, "missing 'tangle <color>' header");
  try {
    validate_tangle(t);
  } catch (const error& e) {
    fail(errc::parse, std::string("invalid tangle: ") + e.what());
  }
  return t;
}

std::string render_tangle(const Tangle& t) {
  std::ostringstream out;
  out << "tangle " << t.external_color;
  if (t.external_shaded) out << " shaded";
  out << "\n";
  for (const Row& r : t.rows) {
    switch (r.kind) {
      case Row::Id: out << "id\n"; break;
      case Row::Cup: out << "cup " << r.pos << "\n"; break;
      case Row::Cap: out << "cap " << r.pos << "\n"; break;
      case Row::Box:
        out << "box " << t.disc_names[static_cast<size_t>(r.disc)] << " " << r.color << " "
            << r.pos << "\n";
        break;
    }
  }
  return out.str();
}

Tangle compose(const Tangle& outer, int d, const Tangle& inner) {
  validate_tangle(outer);
  validate_tangle(inner);
  if (d < 0 || d >= outer.num_discs())
    fail(errc::argument, "compose: no disc " + std::to_string(d));
  size_t slot = 0;
  while (outer.rows[slot].kind != Row::Box || outer.rows[slot].disc != d) ++slot;
  const Row& box = outer.rows[slot];
  if (inner.external_color != box.color)
    fail(errc::argument, "compose: inner tangle color " +
                             std::to_string(inner.external_color) + " does not fit a color-" +
                             std::to_string(box.color) + " slot");
  if (box.color == 0 && inner.external_shaded != outer.col_shaded(box.pos - 1))
    fail(errc::argument, "compose: color-0 shading mismatch at the slot");

  Tangle out;
  out.external_color = outer.external_color;
  out.external_shaded = outer.external_shaded;

  // Disc table: outer discs before d, inner discs, outer discs after d.
  std::vector<int> outer_map(static_cast<size_t>(outer.num_discs()), -1);
  std::vector<int> inner_map(static_cast<size_t>(inner.num_discs()), -1);
  std::set<std::string> used;
  for (int j = 0; j < outer.num_discs(); ++j)
    if (j != d) used.insert(outer.disc_names[static_cast<size_t>(j)]);
  auto splice_inner = [&] {
    for (int j = 0; j < inner.num_discs(); ++j) {
      std::string name = inner.disc_names[static_cast<size_t>(j)];
      while (!used.insert(name).second) name += "'";
      inner_map[static_cast<size_t>(j)] = out.num_discs();
      out.disc_names.push_back(name);
    }
  };
  for (int j = 0; j < outer.num_discs(); ++j) {
    if (j == d) {
      splice_inner();
      continue;
    }
    outer_map[static_cast<size_t>(j)] = out.num_discs();
    out.disc_names.push_back(outer.disc_names[static_cast<size_t>(j)]);
  }

  for (size_t i = 0; i < outer.rows.size(); ++i) {
    if (i == slot) {
      for (Row r : inner.rows) {
        if (r.kind != Row::Id) r.pos += box.pos - 1;
        if (r.kind == Row::Box) r.disc = inner_map[static_cast<size_t>(r.disc)];
        out.rows.push_back(r);
      }
      continue;
    }
    Row r = outer.rows[i];
    if (r.kind == Row::Box) r.disc = outer_map[static_cast<size_t>(r.disc)];
    out.rows.push_back(r);
  }
  validate_tangle(out);
  return out;
}

namespace {

Tangle with_discs(int color, std::vector<Row> rows, int discs, bool shaded = false) {
  Tangle t;
  t.external_color = color;
  t.external_shaded = shaded;
  t.rows = std::move(rows);
  for (int i = 1; i <= discs; ++i) t.disc_names.push_back("D" + std::to_string(i));
  validate_tangle(t);
  return t;
}

Row cup(int p) { return Row{Row::Cup, p, 0, -1}; }
Row cap(int p) { return Row{Row::Cap, p, 0, -1}; }
Row box(int d, int k, int p) { return Row{Row::Box, p, k, d}; }

}  // namespace

Tangle identity_tangle(int n) {
  if (n < 0) fail(errc::argument, "identity tangle needs color >= 0");
  return with_discs(n, {}, 0);
}

Tangle multiplication_tangle(int n) {
  if (n < 0) fail(errc::argument, "multiplication tangle needs color >= 0");
  return with_discs(n, {box(1, n, 1), box(0, n, 1)}, 2);
}

Tangle inclusion_tangle(int n) { return cap_inclusion_tangle(n, n + 1); }

Tangle jones_tangle(int n) {
  if (n < 2) fail(errc::argument, "jones tangle needs color >= 2");
  return with_discs(n, {cap(n - 1), cup(n - 1)}, 0);
}

Tangle cond_exp_right_tangle(int n) {
  if (n < 0) fail(errc::argument, "right expectation tangle needs color >= 0");
  return with_discs(n, {cup(n + 1), box(0, n + 1, 1), cap(n + 1)}, 1);
}

Tangle cond_exp_left_tangle(int n) {
  if (n < 1) fail(errc::argument, "left expectation tangle needs color >= 1");
  return with_discs(n, {cup(2), box(0, n, 3), cap(2)}, 1);
}

Tangle closure_tangle(int n) {
  if (n < 0) fail(errc::argument, "closure tangle needs color >= 0");
  std::vector<Row> rows;
  for (int j = 1; j <= n; ++j) rows.push_back(cup(j));
  rows.push_back(box(0, n, n + 1));
  for (int j = n; j >= 1; --j) rows.push_back(cap(j));
  return with_discs(0, std::move(rows), 1, n % 2 == 1);
}

Tangle capping_tangle(int n, int i) {
  if (n < 1 || i < 1 || i > 2 * n - 1)
    fail(errc::argument, "capping tangle: need color >= 1 and 1 <= i <= 2*color-1");
  if (i <= n) return with_discs(n - 1, {cup(n), box(0, n, 1), cap(i)}, 1);
  return with_discs(n - 1, {cup(2 * n - i), box(0, n, 1), cap(n)}, 1);
}

Tangle cap_inclusion_tangle(int n, int i) {
  if (n < 0 || i < 1 || i > 2 * n + 1)
    fail(errc::argument, "cap inclusion tangle: need color >= 0 and 1 <= i <= 2*color+1");
  if (i <= n) return with_discs(n + 1, {box(0, n, 1), cap(n), cup(i)}, 1);
  if (i == n + 1) return with_discs(n + 1, {box(0, n, 1)}, 1);
  return with_discs(n + 1, {cap(2 * n + 2 - i), cup(n), box(0, n, 1)}, 1);
}

Tangle left_inclusion_tangle(int n) {
  if (n < 0) fail(errc::argument, "left inclusion tangle needs color >= 0");
  return with_discs(n + 2, {box(0, n, 3)}, 1);
}

Tangle disc_inclusion_tangle(int n, int p, int q, bool second_above) {
  int r = n - p - q;
  if (n < 0 || p < 0 || q < 0 || r < 0 || p % 2 != 0)
    fail(errc::argument, "disc inclusion tangle: need p + q <= color with p even");
  std::vector<Row> rows = second_above ? std::vector<Row>{box(0, n, 1), box(1, q, p + 1)}
                                       : std::vector<Row>{box(1, q, p + 1), box(0, n, 1)};
  return with_discs(n, std::move(rows), 2);
}

}  // namespace gtpa
