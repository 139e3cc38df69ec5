#include "schroeder/paths.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "schroeder/errors.hpp"

namespace schroeder {

std::vector<int> start_heights(std::span<const Step> steps) {
  std::vector<int> h(steps.size() + 1, 0);
  for (std::size_t i = 0; i < steps.size(); ++i) h[i + 1] = h[i] + step_delta(steps[i]);
  return h;
}

LatticePath::LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {
  int height = 0;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    height += step_delta(steps_[i]);
    if (height < 0) fail(ErrorCode::NegativeHeight, "at step " + std::to_string(i + 1));
  }
  if (height != 0) fail(ErrorCode::NonzeroFinalHeight, "ends at height " + std::to_string(height));
}

int LatticePath::length() const noexcept {
  int n = 0;
  for (auto s : steps_) n += step_width(s);
  return n;
}

std::size_t LatticePath::count(Step kind) const noexcept {
  return static_cast<std::size_t>(std::count(steps_.begin(), steps_.end(), kind));
}

int LatticePath::unit_position(std::size_t index) const {
  if (index >= steps_.size()) fail(ErrorCode::OutOfRange, "step index " + std::to_string(index));
  int pos = 1;
  for (std::size_t i = 0; i < index; ++i) pos += step_width(steps_[i]);
  return pos;
}

std::size_t LatticePath::index_at(int pos) const {
  int cur = 1;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (cur == pos) return i;
    if (cur > pos) break;
    cur += step_width(steps_[i]);
  }
  fail(ErrorCode::OutOfRange, "no step starts at unit position " + std::to_string(pos));
}

LatticePath parse_path(std::string_view text) {
  std::string compact;
  compact.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);

  std::vector<Step> steps;
  for (std::size_t i = 0; i < compact.size(); ++i) {
    switch (compact[i]) {
      case 'U': steps.push_back(Step::Up); break;
      case 'D': steps.push_back(Step::Down); break;
      case 'd': steps.push_back(Step::SpecialDown); break;
      case 'H': {
        std::size_t run = 0;
        while (i + run < compact.size() && compact[i + run] == 'H') ++run;
        if (run % 2 != 0) fail(ErrorCode::OddHorizontalRun, "at character " + std::to_string(i + 1));
        steps.insert(steps.end(), run / 2, Step::Horiz);
        i += run - 1;
        break;
      }
      default:
        fail(ErrorCode::UnknownToken, std::string("'") + compact[i] + "'");
    }
  }
  return LatticePath(std::move(steps));
}

std::string to_tokens(const LatticePath& path) {
  std::string out;
  out.reserve(path.size() * 2);
  for (auto s : path.steps()) {
    switch (s) {
      case Step::Up: out += 'U'; break;
      case Step::Down: out += 'D'; break;
      case Step::SpecialDown: out += 'd'; break;
      case Step::Horiz: out += "HH"; break;
    }
  }
  return out;
}

namespace {

std::string render_ascii(const LatticePath& path) {
  if (path.empty()) return "";
  const auto h = path.heights();
  int top = *std::max_element(h.begin(), h.end());
  bool horiz_on_top = false;
  for (std::size_t i = 0; i < path.size(); ++i)
    if (path[i] == Step::Horiz && h[i] == top) horiz_on_top = true;
  const int rows = std::max(1, top + (horiz_on_top ? 1 : 0));

  std::vector<std::string> grid(static_cast<std::size_t>(rows),
                                std::string(static_cast<std::size_t>(path.length()), ' '));
  std::size_t col = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const auto row = [&](int r) -> std::string& { return grid[static_cast<std::size_t>(r)]; };
    switch (path[i]) {
      case Step::Up: row(h[i])[col] = '/'; break;
      case Step::Down: row(h[i] - 1)[col] = '\\'; break;
      case Step::SpecialDown: row(h[i] - 1)[col] = 'x'; break;
      case Step::Horiz:
        row(h[i])[col] = '_';
        row(h[i])[col + 1] = '_';
        break;
    }
    col += static_cast<std::size_t>(step_width(path[i]));
  }

  std::string out;
  for (int r = rows - 1; r >= 0; --r) {
    auto line = grid[static_cast<std::size_t>(r)];
    line.erase(line.find_last_not_of(' ') + 1);
    out += line;
    out += '\n';
  }
  return out;
}

std::string render_svg(const LatticePath& path) {
  constexpr int kScale = 20;
  constexpr int kMargin = 10;
  const auto h = path.heights();
  const int top = *std::max_element(h.begin(), h.end());
  const int width = path.length() * kScale + 2 * kMargin;
  const int height = top * kScale + 2 * kMargin;
  const auto px = [&](int x) { return kMargin + x * kScale; };
  const auto py = [&](int y) { return kMargin + (top - y) * kScale; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
     << "  <title>" << to_tokens(path) << "</title>\n"
     << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(path.length())
     << "\" y2=\"" << py(0) << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n"
     << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
  int x = 0;
  os << px(0) << ',' << py(0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] == Step::Horiz) {
      os << ' ' << px(x + 1) << ',' << py(h[i]);
    }
    x += step_width(path[i]);
    os << ' ' << px(x) << ',' << py(h[i + 1]);
  }
  os << "\"/>\n";

  x = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] == Step::SpecialDown) {
      // Blank the solid segment, then redraw it dashed.
      for (const char* style : {"stroke=\"white\" stroke-width=\"4\"",
                                "stroke=\"black\" stroke-width=\"2\" stroke-dasharray=\"4,3\""}) {
        os << "  <line class=\"special\" x1=\"" << px(x) << "\" y1=\"" << py(h[i]) << "\" x2=\""
           << px(x + 1) << "\" y2=\"" << py(h[i + 1]) << "\" " << style << "/>\n";
      }
    }
    x += step_width(path[i]);
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render_path(const LatticePath& path, RenderFormat format) {
  switch (format) {
    case RenderFormat::Tokens: return to_tokens(path);
    case RenderFormat::Ascii: return render_ascii(path);
    case RenderFormat::Svg: return render_svg(path);
  }
  return {};
}

PathClass classify(const LatticePath& path) {
  const auto h = path.heights();
  bool has_horiz = false, has_special = false, horiz_on_axis = false;
  bool special_even = false, special_odd = false;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] == Step::Horiz) {
      has_horiz = true;
      if (h[i] == 0) horiz_on_axis = true;
    } else if (path[i] == Step::SpecialDown) {
      has_special = true;
      (h[i] % 2 == 0 ? special_even : special_odd) = true;
    }
  }
  PathClass c;
  c.dyck = !has_horiz && !has_special;
  c.esdp = !has_horiz && !special_odd;
  c.osdp = !has_horiz && !special_even;
  c.big_schroeder = !has_special;
  c.little_schroeder = !has_special && !horiz_on_axis;
  return c;
}

std::size_t match_index(std::span<const Step> steps, std::span<const int> heights,
                        std::size_t index) {
  const std::size_t none = steps.size();
  const Step s = steps[index];
  const int from = heights[index];
  if (s == Step::Up || s == Step::Horiz) {
    // An up ending at g (or a horizontal at g) is matched by the first down
    // afterwards that leaves from g.
    const int level = s == Step::Up ? from + 1 : from;
    if (level == 0) return none;
    for (std::size_t j = index + 1; j < steps.size(); ++j)
      if (is_down(steps[j]) && heights[j] == level) return j;
    return none;
  }
  for (std::size_t j = index; j-- > 0;)
    if (steps[j] == Step::Up && heights[j] == from - 1) return j;
  return none;
}

int match_step(const LatticePath& path, int unit_pos) {
  const std::size_t index = path.index_at(unit_pos);
  const auto h = path.heights();
  const std::size_t m = match_index(path.steps(), h, index);
  if (m == path.size()) fail(ErrorCode::NoMatch, "step at unit position " + std::to_string(unit_pos));
  return path.unit_position(m);
}

std::pair<int, int> peaks_and_ravines(const LatticePath& path) {
  if (!classify(path).dyck) fail(ErrorCode::NotDyck, to_tokens(path));
  int peaks = 0, ravines = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (path[i] == Step::Up && path[i + 1] == Step::Down) ++peaks;
    if (path[i] == Step::Down && path[i + 1] == Step::Up) ++ravines;
  }
  return {peaks, ravines};
}

std::uint64_t pack(std::span<const Step> steps) {
  if (steps.size() > 32) fail(ErrorCode::LengthTooLarge, "more than 32 steps");
  std::uint64_t code = 0;
  int shift = 62;
  for (auto s : steps) {
    code |= static_cast<std::uint64_t>(s) << shift;
    shift -= 2;
  }
  return code;
}

std::vector<Step> unpack(std::uint64_t code, int length) {
  std::vector<Step> steps;
  int shift = 62;
  for (int used = 0; used < length; shift -= 2) {
    const auto s = static_cast<Step>((code >> shift) & 3u);
    steps.push_back(s);
    used += step_width(s);
  }
  return steps;
}

}  // namespace schroeder
