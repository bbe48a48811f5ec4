#include <doctest.h>

#include <string>

#include "pbp/constructions.hpp"
#include "pbp/engine.hpp"
#include "pbp/error.hpp"
#include "pbp/render.hpp"

using pbp::CellSet;
using pbp::GridSpec;
using pbp::PollutedInstance;
using pbp::RenderStyle;

namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("two by two ascii frames") {
  const GridSpec g(2, 2);
  const PollutedInstance inst(g);
  const auto trace = pbp::percolate(inst, CellSet(g, {{1, 1}, {2, 2}}), 2);
  CHECK(pbp::render_trace(inst, trace, RenderStyle::ascii) ==
        "# 2x2 grid, k=0, seeds=2\n"
        "round 0\n"
        ".o\n"
        "o.\n"
        "round 1\n"
        "1o\n"
        "o1\n"
        "percolated=true rounds=1 infected=4/4\n");
}

TEST_CASE("round zero shows the witness pattern") {
  const auto w = pbp::construct_extremal(8, 5, 8);
  const auto trace = pbp::percolate(w.instance, w.seeds, 2);
  const auto text = pbp::render_trace(w.instance, trace, RenderStyle::ascii);
  CHECK(text.find("round 0\no.....XX\n......XX\no.....XX\n.......X\no.o.o.oX\nround 1\n") != std::string::npos);
  CHECK(count_of(text, "round ") == static_cast<std::size_t>(trace.round_count + 1));
  CHECK(text.find("percolated=true") != std::string::npos);
}

TEST_CASE("late rounds use the overflow glyph") {
  const GridSpec g(12, 1);
  const PollutedInstance inst(g);
  const auto trace = pbp::percolate(inst, CellSet(g, {{1, 1}}), 1);
  CHECK(trace.round_count == 11);
  const auto text = pbp::render_trace(inst, trace, RenderStyle::ascii);
  CHECK(text.find("round 11\no123456789++\n") != std::string::npos);
}

TEST_CASE("empty seed set gives one frame") {
  const GridSpec g(3, 2);
  const PollutedInstance inst(g);
  const auto trace = pbp::percolate(inst, CellSet(g), 2);
  const auto text = pbp::render_trace(inst, trace, RenderStyle::ascii);
  CHECK(count_of(text, "round ") == 1);
  CHECK(text.find("percolated=false") != std::string::npos);
  const auto svg = pbp::render_trace(inst, trace, RenderStyle::svg);
  CHECK(count_of(svg, "<g id=\"round-") == 1);
}

TEST_CASE("svg has one group per round") {
  const GridSpec g(2, 2);
  const PollutedInstance inst(g);
  const auto trace = pbp::percolate(inst, CellSet(g, {{1, 1}, {2, 2}}), 2);
  const auto svg = pbp::render_trace(inst, trace, RenderStyle::svg);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count_of(svg, "<g id=\"round-") == 2);
  CHECK(count_of(svg, "<rect") >= 8);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("torus renders flat with a wrap note") {
  const GridSpec t(3, 3, pbp::Topology::torus);
  const PollutedInstance inst(t);
  const auto trace = pbp::percolate(inst, CellSet(t, {{1, 1}, {2, 2}}), 2);
  CHECK(pbp::render_trace(inst, trace, RenderStyle::ascii).find("wrap") != std::string::npos);
  CHECK(pbp::render_trace(inst, trace, RenderStyle::svg).find("<desc>") != std::string::npos);
}

TEST_CASE("style names") {
  CHECK(pbp::parse_render_style("ascii") == RenderStyle::ascii);
  CHECK(pbp::parse_render_style("svg") == RenderStyle::svg);
  CHECK_THROWS_AS(pbp::parse_render_style("png"), pbp::Error);
}
