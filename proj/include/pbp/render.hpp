#pragma once

#include <string>
#include <string_view>

#include "pbp/engine.hpp"
#include "pbp/grid.hpp"

namespace pbp {

enum class RenderStyle { ascii, svg };

/// Throws Error(parameter) for anything other than "ascii" or "svg".
RenderStyle parse_render_style(std::string_view name);

/// One frame per round of `trace`, top row first. Frame t marks polluted cells
/// 'X', seeds 'o', cells infected in round 1..t by their round digit ('+' from
/// round 10 on) and everything else '.'. Tori render flat with a wrap note.
std::string render_trace(const PollutedInstance& instance, const PercolationTrace& trace, RenderStyle style);

}  // namespace pbp
