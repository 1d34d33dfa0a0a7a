#include "diagre/render.hpp"

#include <algorithm>

namespace diagre {

namespace {

struct Block {
  std::vector<std::string> lines;
  int in_wires = 0;
  int out_wires = 0;

  int height() const { return static_cast<int>(lines.size()); }
  int width() const {
    int w = 0;
    for (const auto& l : lines) w = std::max(w, static_cast<int>(l.size()));
    return w;
  }
};

// Pads every line to the block's width; wire rows extend with '-' so
// outputs reach the right edge.
void square_off(Block& b) {
  int w = b.width();
  for (int r = 0; r < b.height(); ++r) {
    char pad = r < b.out_wires ? '-' : ' ';
    b.lines[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(w),
                                                pad);
  }
}

Block wires(int n) {
  Block b;
  b.in_wires = b.out_wires = n;
  for (int i = 0; i < n; ++i) b.lines.push_back("---");
  return b;
}

Block box(const std::string& label, int dom, int cod) {
  Block b;
  b.in_wires = dom;
  b.out_wires = cod;
  int h = std::max({dom, cod, 1});
  for (int r = 0; r < h; ++r) {
    std::string body =
        r == 0 ? label : std::string(label.size(), ' ');
    std::string line;
    line += (r < dom) ? '-' : ' ';
    line += '[';
    line += body;
    line += ']';
    line += (r < cod) ? '-' : ' ';
    b.lines.push_back(line);
  }
  return b;
}

Block crossing() {
  Block b;
  b.in_wires = b.out_wires = 2;
  b.lines = {"-\\/-", "-/\\-"};
  return b;
}

Block empty_block() {
  Block b;
  b.lines = {};
  return b;
}

Block hcat(Block a, Block b) {
  square_off(a);
  square_off(b);
  int h = std::max(a.height(), b.height());
  Block out;
  out.in_wires = a.in_wires;
  out.out_wires = b.out_wires;
  for (int r = 0; r < h; ++r) {
    std::string left = r < a.height()
                           ? a.lines[static_cast<std::size_t>(r)]
                           : std::string(static_cast<std::size_t>(a.width()), ' ');
    std::string right = r < b.height()
                            ? b.lines[static_cast<std::size_t>(r)]
                            : std::string(static_cast<std::size_t>(b.width()), ' ');
    out.lines.push_back(left + right);
  }
  return out;
}

Block vcat(Block a, Block b) {
  int w = std::max(a.width(), b.width());
  auto widen = [&](Block& x) {
    for (int r = 0; r < x.height(); ++r) {
      char pad = r < x.out_wires ? '-' : ' ';
      x.lines[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(w),
                                                  pad);
    }
  };
  widen(a);
  widen(b);
  Block out;
  out.in_wires = a.in_wires + b.in_wires;
  out.out_wires = a.out_wires + b.out_wires;
  out.lines = a.lines;
  out.lines.insert(out.lines.end(), b.lines.begin(), b.lines.end());
  return out;
}

Block draw(const TermPtr& t) {
  switch (t->kind()) {
    case TermKind::Id:
      return t->id_width() == 0 ? empty_block() : wires(t->id_width());
    case TermKind::Gen:
      return box(t->gen_name(), t->dom(), t->cod());
    case TermKind::Swap: {
      if (t->swap_n() == 1 && t->swap_m() == 1) return crossing();
      if (t->swap_n() == 0) return wires(t->swap_m());
      if (t->swap_m() == 0) return wires(t->swap_n());
      return box("x" + std::to_string(t->swap_n()) + "," +
                     std::to_string(t->swap_m()),
                 t->dom(), t->cod());
    }
    case TermKind::Seq:
      return hcat(draw(t->left()), draw(t->right()));
    case TermKind::Par:
      return vcat(draw(t->left()), draw(t->right()));
  }
  return empty_block();
}

}  // namespace

std::string render_term(const TermPtr& t) {
  Block b = draw(t);
  if (b.lines.empty()) return "(empty diagram)\n";
  std::string out;
  for (const auto& line : b.lines) {
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace diagre
