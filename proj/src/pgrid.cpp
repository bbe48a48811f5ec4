#include <charconv>
#include <string>
#include <vector>

#include "pbp/error.hpp"
#include "pbp/grid.hpp"

namespace pbp {

namespace {

constexpr std::string_view kMagic = "pgrid v1";

std::string_view trim_right(std::string_view s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

int parse_dimension(std::string_view token, std::string_view key, int line, int column) {
  if (token.substr(0, key.size()) != key) {
    throw ParseError(line, column, "expected '" + std::string(key) + "<int>', got '" + std::string(token) + "'");
  }
  const auto digits = token.substr(key.size());
  int value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw ParseError(line, column + static_cast<int>(key.size()), "bad integer '" + std::string(digits) + "'");
  }
  return value;
}

GridSpec parse_dimensions(std::string_view text, int line) {
  struct Token {
    std::string_view text;
    int column;
  };
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ' || text[pos] == '\t') {
      ++pos;
      continue;
    }
    const auto end = text.find_first_of(" \t", pos);
    const auto stop = end == std::string_view::npos ? text.size() : end;
    tokens.push_back({text.substr(pos, stop - pos), static_cast<int>(pos) + 1});
    pos = stop;
  }
  if (tokens.size() != 3) throw ParseError(line, 0, "expected 'm=<int> n=<int> topology=<grid|torus>'");

  const int m = parse_dimension(tokens[0].text, "m=", line, tokens[0].column);
  const int n = parse_dimension(tokens[1].text, "n=", line, tokens[1].column);
  Topology topology = Topology::grid;
  if (tokens[2].text == "topology=grid") {
    topology = Topology::grid;
  } else if (tokens[2].text == "topology=torus") {
    topology = Topology::torus;
  } else {
    throw ParseError(line, tokens[2].column, "expected topology=grid or topology=torus");
  }
  try {
    return GridSpec(m, n, topology);
  } catch (const Error& e) {
    throw ParseError(line, 0, e.what());
  }
}

}  // namespace

InstanceDocument parse_instance(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t cursor = 0;
  while (cursor < lines.size() && !lines[cursor].empty() && lines[cursor].front() == '#') ++cursor;

  const auto line_no = [](std::size_t idx) { return static_cast<int>(idx) + 1; };

  if (cursor >= lines.size() || trim_right(lines[cursor]) != kMagic) {
    throw ParseError(line_no(cursor), 0, "expected header 'pgrid v1'");
  }
  ++cursor;
  if (cursor >= lines.size()) throw ParseError(line_no(cursor), 0, "missing dimension line");
  const GridSpec spec = parse_dimensions(trim_right(lines[cursor]), line_no(cursor));
  ++cursor;

  CellSet polluted(spec);
  CellSet seeds(spec);
  for (int j = spec.n(); j >= 1; --j, ++cursor) {
    if (cursor >= lines.size()) {
      throw ParseError(line_no(cursor), 0, "expected " + std::to_string(spec.n()) + " grid rows");
    }
    const auto row = trim_right(lines[cursor]);
    if (row.size() != static_cast<std::size_t>(spec.m())) {
      throw ParseError(line_no(cursor), 0,
                       "row has " + std::to_string(row.size()) + " cells, expected " + std::to_string(spec.m()));
    }
    for (int i = 1; i <= spec.m(); ++i) {
      switch (row[i - 1]) {
        case '.': break;
        case 'X': polluted.insert({i, j}); break;
        case 'o': seeds.insert({i, j}); break;
        default:
          throw ParseError(line_no(cursor), i, std::string("unknown cell character '") + row[i - 1] + "'");
      }
    }
  }
  for (; cursor < lines.size(); ++cursor) {
    if (!trim_right(lines[cursor]).empty()) throw ParseError(line_no(cursor), 0, "unexpected content after grid rows");
  }
  return InstanceDocument{PollutedInstance(spec, std::move(polluted)), std::move(seeds)};
}

std::string write_instance(const PollutedInstance& instance, const CellSet& seeds) {
  const GridSpec& spec = instance.spec();
  if (!(seeds.spec() == spec)) throw Error(ErrorKind::invariant, "seed set belongs to a different grid");
  if (seeds.intersects(instance.polluted())) throw Error(ErrorKind::invariant, "seed placed on a polluted vertex");

  std::string out;
  out.reserve(32 + (spec.vertex_count() + spec.n()));
  out += kMagic;
  out += '\n';
  out += "m=" + std::to_string(spec.m()) + " n=" + std::to_string(spec.n()) + " topology=" + to_string(spec.topology());
  out += '\n';
  std::size_t idx = 0;
  for (int row = 0; row < spec.n(); ++row) {
    for (int col = 0; col < spec.m(); ++col, ++idx) {
      out += instance.polluted().test(idx) ? 'X' : seeds.test(idx) ? 'o' : '.';
    }
    out += '\n';
  }
  return out;
}

}  // namespace pbp
