#include "pbp/render.hpp"

#include <sstream>
#include <vector>

#include "pbp/error.hpp"

namespace pbp {

namespace {

constexpr int kCell = 16;
constexpr int kLabel = 20;
constexpr int kGap = 12;

// round_of[idx]: -1 never infected, 0 seed, t infected in round t.
std::vector<int> infection_rounds(const GridSpec& spec, const PercolationTrace& trace) {
  std::vector<int> round_of(spec.vertex_count(), -1);
  for (std::size_t t = 0; t < trace.rounds.size(); ++t) {
    for (const auto idx : trace.rounds[t].indices()) round_of[idx] = static_cast<int>(t);
  }
  return round_of;
}

char glyph(bool polluted, int round, int frame) {
  if (polluted) return 'X';
  if (round == 0) return 'o';
  if (round < 0 || round > frame) return '.';
  return round <= 9 ? static_cast<char>('0' + round) : '+';
}

std::string summary(const PollutedInstance& instance, const PercolationTrace& trace) {
  return "percolated=" + std::string(trace.percolated ? "true" : "false") +
         " rounds=" + std::to_string(trace.round_count) + " infected=" + std::to_string(trace.final_set.size()) +
         "/" + std::to_string(instance.residual_count());
}

std::string render_ascii(const PollutedInstance& instance, const PercolationTrace& trace) {
  const GridSpec& spec = instance.spec();
  const auto round_of = infection_rounds(spec, trace);
  std::ostringstream out;
  out << "# " << spec.m() << "x" << spec.n() << " " << to_string(spec.topology()) << ", k=" << instance.k()
      << ", seeds=" << trace.rounds.front().size() << "\n";
  if (spec.is_torus()) out << "# torus: left/right and top/bottom edges wrap\n";
  for (int frame = 0; frame <= trace.round_count; ++frame) {
    out << "round " << frame << "\n";
    std::size_t idx = 0;
    for (int row = 0; row < spec.n(); ++row) {
      for (int col = 0; col < spec.m(); ++col, ++idx) {
        out << glyph(instance.polluted().test(idx), round_of[idx], frame);
      }
      out << "\n";
    }
  }
  out << summary(instance, trace) << "\n";
  return out.str();
}

std::string render_svg(const PollutedInstance& instance, const PercolationTrace& trace) {
  const GridSpec& spec = instance.spec();
  const auto round_of = infection_rounds(spec, trace);
  const int frame_w = spec.m() * kCell;
  const int frame_h = spec.n() * kCell + kLabel;
  const int frames = trace.round_count + 1;
  const int height = frames * (frame_h + kGap) + kLabel;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << frame_w + 2 * kGap << "\" height=\"" << height
      << "\" font-family=\"monospace\" font-size=\"12\">\n";
  if (spec.is_torus()) {
    out << "  <desc>torus: left/right and top/bottom edges wrap</desc>\n";
  }
  for (int frame = 0; frame < frames; ++frame) {
    out << "  <g id=\"round-" << frame << "\" transform=\"translate(" << kGap << "," << frame * (frame_h + kGap)
        << ")\">\n";
    out << "    <text x=\"0\" y=\"14\">round " << frame << "</text>\n";
    std::size_t idx = 0;
    for (int row = 0; row < spec.n(); ++row) {
      for (int col = 0; col < spec.m(); ++col, ++idx) {
        const char c = glyph(instance.polluted().test(idx), round_of[idx], frame);
        const char* fill = c == 'X' ? "#9e9e9e" : c == 'o' ? "#000000" : c == '.' ? "#ffffff" : "#e57373";
        out << "    <rect x=\"" << col * kCell << "\" y=\"" << kLabel + row * kCell << "\" width=\"" << kCell
            << "\" height=\"" << kCell << "\" fill=\"" << fill << "\" stroke=\"#424242\"";
        if (c == 'X') out << " stroke-dasharray=\"2,2\"";
        out << "/>\n";
        if (c != 'X' && c != 'o' && c != '.') {
          out << "    <text x=\"" << col * kCell + 4 << "\" y=\"" << kLabel + row * kCell + 12 << "\">" << c
              << "</text>\n";
        }
      }
    }
    out << "  </g>\n";
  }
  out << "  <text x=\"" << kGap << "\" y=\"" << height - 6 << "\">" << summary(instance, trace) << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace

RenderStyle parse_render_style(std::string_view name) {
  if (name == "ascii") return RenderStyle::ascii;
  if (name == "svg") return RenderStyle::svg;
  throw Error(ErrorKind::parameter, "unknown render style '" + std::string(name) + "' (ascii|svg)");
}

std::string render_trace(const PollutedInstance& instance, const PercolationTrace& trace, RenderStyle style) {
  if (!(trace.final_set.spec() == instance.spec())) {
    throw Error(ErrorKind::invariant, "trace belongs to a different grid");
  }
  return style == RenderStyle::svg ? render_svg(instance, trace) : render_ascii(instance, trace);
}

}  // namespace pbp
