#include "pbp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pbp/constructions.hpp"
#include "pbp/engine.hpp"
#include "pbp/error.hpp"
#include "pbp/formulas.hpp"
#include "pbp/grid.hpp"
#include "pbp/perimeter.hpp"
#include "pbp/render.hpp"
#include "pbp/search.hpp"
#include "pbp/simd/closure.hpp"
#include "pbp/verify.hpp"

namespace pbp::cli {

namespace {

using json = nlohmann::ordered_json;

// Verification failures are reported through the exit code only.
struct VerificationFailed {};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::parameter, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::parameter, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorKind::parameter, "failed writing '" + path + "'");
}

json vertex_list(const CellSet& cells) {
  json list = json::array();
  for (const Vertex v : cells.vertices()) list.push_back({v.i, v.j});
  return list;
}

struct Options {
  bool json = false;

  std::string formula_name;
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t t = 0;

  std::string output;
  std::string input;
  int r = 2;
  std::string render_style;
  std::uint64_t budget = kDefaultBudget;
  std::string kernel;

  std::string suite;
  int max_exhaustive = 12;
  int max_construction = 400;
  int max_side = 0;
  int max_mn = 12;
  int max_torus_mn = 16;
  int max_pollution_mn = 20;
  int max_t = 8;
  int samples = 100;
  std::uint64_t seed = 0;
  bool csv = false;
  bool no_timing = false;
};

const std::vector<std::string> kFormulaNames = {
    "mkmin",        "mkmin-remark", "mkmin-lower-bound", "mkmax-lower-bound", "grid",
    "torus",        "ceil-two-sqrt", "min-perimeter",    "params",
};

void run_formula(const Options& o, std::ostream& out) {
  std::int64_t value = 0;
  json doc;
  doc["formula"] = o.formula_name;
  const auto need_k = o.formula_name.rfind("mk", 0) == 0 || o.formula_name == "params";
  if (o.formula_name == "ceil-two-sqrt" || o.formula_name == "min-perimeter") {
    doc["t"] = o.t;
  } else {
    doc["m"] = o.m;
    doc["n"] = o.n;
    if (need_k) doc["k"] = o.k;
  }

  if (o.formula_name == "params") {
    const ExtremalParams p = extremal_params(o.m, o.n, o.k);
    doc["columns_removed"] = p.columns_removed;
    doc["residual"] = p.residual;
    doc["side"] = p.side;
    doc["remainder"] = p.remainder;
    doc["branch"] = to_string(p.branch);
    if (o.json) {
      out << doc.dump() << "\n";
    } else {
      out << "l=" << p.columns_removed << " t=" << p.residual << " x=" << p.side << " rem=" << p.remainder
          << " branch=" << to_string(p.branch) << "\n";
    }
    return;
  }

  if (o.formula_name == "mkmin") value = mkmin(o.m, o.n, o.k);
  else if (o.formula_name == "mkmin-remark") value = mkmin_remark_form(o.m, o.n, o.k);
  else if (o.formula_name == "mkmin-lower-bound") value = mkmin_lower_bound(o.m, o.n, o.k);
  else if (o.formula_name == "mkmax-lower-bound") value = mkmax_lower_bound(o.m, o.n, o.k);
  else if (o.formula_name == "grid") value = percolation_number_grid(o.m, o.n);
  else if (o.formula_name == "torus") value = percolation_number_torus(o.m, o.n);
  else if (o.formula_name == "ceil-two-sqrt") value = ceil_two_sqrt(o.t);
  else if (o.formula_name == "min-perimeter") value = min_perimeter(o.t);

  doc["value"] = value;
  if (o.json) {
    out << doc.dump() << "\n";
  } else {
    out << value << "\n";
  }
}

void run_construct(const Options& o, std::ostream& out) {
  const auto witness = construct_extremal(static_cast<int>(o.m), static_cast<int>(o.n), static_cast<int>(o.k));
  const std::string document = write_instance(witness.instance, witness.seeds);
  if (!o.output.empty()) write_file(o.output, document);
  if (o.json) {
    json doc;
    doc["m"] = o.m;
    doc["n"] = o.n;
    doc["k"] = o.k;
    doc["claimed_size"] = witness.claimed_size;
    doc["seeds"] = vertex_list(witness.seeds);
    doc["polluted"] = vertex_list(witness.instance.polluted());
    doc["document"] = document;
    out << doc.dump() << "\n";
  } else if (!o.output.empty()) {
    out << "wrote " << o.output << ": m=" << o.m << " n=" << o.n << " k=" << o.k
        << " seeds=" << witness.claimed_size << "\n";
  } else {
    out << document;
  }
}

void run_percolate(const Options& o, std::ostream& out) {
  const InstanceDocument doc = parse_instance(read_file(o.input));
  const PercolationTrace trace = percolate(doc.instance, doc.seeds, o.r);
  std::string rendered;
  if (!o.render_style.empty()) rendered = render_trace(doc.instance, trace, parse_render_style(o.render_style));
  if (o.json) {
    json j;
    j["percolated"] = trace.percolated;
    j["seeds"] = doc.seeds.size();
    j["rounds"] = trace.round_count;
    j["infected"] = trace.final_set.size();
    j["residual"] = doc.instance.residual_count();
    json sizes = json::array();
    for (const CellSet& round : trace.rounds) sizes.push_back(round.size());
    j["round_sizes"] = sizes;
    if (!rendered.empty()) j["render"] = rendered;
    out << j.dump() << "\n";
    return;
  }
  out << "percolated=" << (trace.percolated ? "true" : "false") << " seeds=" << doc.seeds.size()
      << " rounds=" << trace.round_count << " infected=" << trace.final_set.size() << "/"
      << doc.instance.residual_count() << "\n";
  out << rendered;
}

void run_search(const Options& o, std::ostream& out) {
  const InstanceDocument doc = parse_instance(read_file(o.input));
  const SearchResult result = min_percolating_exact(doc.instance, o.r, o.budget);
  if (o.json) {
    json j;
    j["size"] = result.size;
    j["nodes_explored"] = result.nodes_explored;
    j["witness"] = vertex_list(result.witness);
    out << j.dump() << "\n";
    return;
  }
  out << "size=" << result.size << " nodes=" << result.nodes_explored << "\n";
  out << write_instance(doc.instance, result.witness);
}

void run_render(const Options& o, std::ostream& out) {
  const InstanceDocument doc = parse_instance(read_file(o.input));
  const PercolationTrace trace = percolate(doc.instance, doc.seeds, o.r);
  const std::string rendered =
      render_trace(doc.instance, trace, parse_render_style(o.render_style.empty() ? "ascii" : o.render_style));
  if (o.json) {
    out << json{{"render", rendered}}.dump() << "\n";
  } else {
    out << rendered;
  }
}

void run_verify(const Options& o, std::ostream& out) {
  VerifyOptions vo;
  vo.seed = o.seed;
  vo.budget = o.budget;
  vo.record_timing = !o.no_timing;

  std::vector<SuiteReport> reports;
  const bool all = o.suite == "all";
  if (all || o.suite == "theorem1") {
    reports.push_back(verify_theorem1(o.max_exhaustive, o.max_construction, o.max_side, vo));
  }
  if (all || o.suite == "monotonicity") reports.push_back(verify_monotonicity(o.max_mn, vo));
  if (all || o.suite == "perimeter") reports.push_back(verify_perimeter(o.max_t, o.samples, vo));
  if (all || o.suite == "torus-max") reports.push_back(verify_torus_and_max(o.max_torus_mn, o.max_pollution_mn, vo));

  std::string machine;
  if (o.json) {
    if (reports.size() == 1) {
      machine = report_json(reports.front());
    } else {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(json::parse(report_json(r)));
      machine = arr.dump(2) + "\n";
    }
  } else {
    for (const auto& r : reports) machine += report_csv(r);
  }

  if (!o.output.empty()) write_file(o.output, machine);
  if (o.json || o.csv) {
    if (o.output.empty()) out << machine;
  } else {
    for (const auto& r : reports) {
      out << r.name << ": " << r.rows.size() << " rows, " << r.passed() << " passed, " << r.failed() << " failed\n";
      for (const auto& row : r.rows) {
        if (row.pass) continue;
        out << "  FAIL " << row.suite << " m=" << row.m << " n=" << row.n << " k=" << row.k
            << " expected=" << row.expected << " actual=" << row.actual << " " << row.note << "\n";
      }
      for (const auto& note : r.notes) out << "  note: " << note << "\n";
    }
  }
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.ok(); });
  if (!ok) throw VerificationFailed{};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extremal 2-neighbour bootstrap percolation on polluted grids and tori", "pbp"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Machine-readable JSON output");
  app.add_option("--kernel", o.kernel, "Closure kernel: auto, scalar or avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  auto* formula = app.add_subcommand("formula", "Evaluate a closed-form value");
  formula->add_option("name", o.formula_name, "Formula name")->required()->check(CLI::IsMember(kFormulaNames));
  formula->add_option("-m", o.m, "Columns");
  formula->add_option("-n", o.n, "Rows");
  formula->add_option("-k", o.k, "Polluted vertices");
  formula->add_option("-t", o.t, "Square count (ceil-two-sqrt, min-perimeter)");

  auto* construct = app.add_subcommand("construct", "Build an extremal polluted instance with its seeds");
  construct->add_option("-m", o.m, "Columns")->required();
  construct->add_option("-n", o.n, "Rows")->required();
  construct->add_option("-k", o.k, "Polluted vertices")->required();
  construct->add_option("-o,--output", o.output, "Write the pgrid document here");

  auto* perc = app.add_subcommand("percolate", "Run the bootstrap process from a pgrid file's seeds");
  perc->add_option("file", o.input, "pgrid v1 file")->required();
  perc->add_option("-r", o.r, "Infection threshold")->check(CLI::PositiveNumber);
  perc->add_option("--render", o.render_style, "Also render the trace")->check(CLI::IsMember({"ascii", "svg"}));

  auto* search = app.add_subcommand("search", "Exact minimum percolating set of a pgrid instance");
  search->add_option("file", o.input, "pgrid v1 file")->required();
  search->add_option("-r", o.r, "Infection threshold")->check(CLI::PositiveNumber);
  search->add_option("--budget", o.budget, "Closure evaluation budget");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", o.suite, "theorem1, monotonicity, perimeter, torus-max or all")
      ->required()
      ->check(CLI::IsMember({"theorem1", "monotonicity", "perimeter", "torus-max", "all"}));
  verify->add_option("--max-exhaustive", o.max_exhaustive, "theorem1: largest mn for the oracle sweep");
  verify->add_option("--max-construction", o.max_construction, "theorem1: largest mn for construction checks");
  verify->add_option("--max-side", o.max_side, "theorem1: largest m for construction checks (0 = no limit)");
  verify->add_option("--max-mn", o.max_mn, "monotonicity: largest mn");
  verify->add_option("--max-torus-mn", o.max_torus_mn, "torus-max: largest torus mn");
  verify->add_option("--max-pollution-mn", o.max_pollution_mn, "torus-max: largest grid mn for the m_k^max bound");
  verify->add_option("--max-t", o.max_t, "perimeter: largest polyomino size");
  verify->add_option("--samples", o.samples, "perimeter: random trace samples");
  verify->add_option("--seed", o.seed, "perimeter: 64-bit sampling seed");
  verify->add_option("--budget", o.budget, "Closure evaluation budget per oracle call");
  verify->add_flag("--csv", o.csv, "Print the CSV report");
  verify->add_flag("--no-timing", o.no_timing, "Record elapsed_ms as 0 for byte-stable reports");
  verify->add_option("-o,--output", o.output, "Write the CSV (or JSON with --json) report here");

  auto* render = app.add_subcommand("render", "Render the trace of a pgrid file's seeds");
  render->add_option("file", o.input, "pgrid v1 file")->required();
  render->add_option("--style", o.render_style, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  render->add_option("-r", o.r, "Infection threshold")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  try {
    if (o.kernel == "scalar") simd::set_active_isa(simd::Isa::scalar);
    if (o.kernel == "avx2") simd::set_active_isa(simd::Isa::avx2);
    if (*formula) {
      const bool on_t = o.formula_name == "ceil-two-sqrt" || o.formula_name == "min-perimeter";
      if (!on_t && (formula->count("-m") == 0 || formula->count("-n") == 0)) {
        err << "error: formula " << o.formula_name << " needs -m and -n\n" << formula->help();
        return kUsageError;
      }
      if (on_t && formula->count("-t") == 0) {
        err << "error: formula " << o.formula_name << " needs -t\n" << formula->help();
        return kUsageError;
      }
      run_formula(o, out);
    } else if (*construct) {
      run_construct(o, out);
    } else if (*perc) {
      run_percolate(o, out);
    } else if (*search) {
      run_search(o, out);
    } else if (*verify) {
      run_verify(o, out);
    } else if (*render) {
      run_render(o, out);
    }
  } catch (const VerificationFailed&) {
    return kVerificationFailed;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kDomainError;
  }
  return kOk;
}

}  // namespace pbp::cli
