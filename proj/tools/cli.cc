// Copyright 2026 The k3inst Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <charconv>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string_view>

#include "CLI11.hpp"
#include "k3inst/diff.h"
#include "k3inst/emit.h"
#include "k3inst/errors.h"
#include "k3inst/golden.h"
#include "k3inst/reid.h"

namespace k3inst::cli {
namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

WeightVector parse_weights(const std::string& text) {
  WeightVector::Weights raw{};
  std::size_t n = 0;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw UsageError("--weights: cannot parse '" + std::string(item) + "' as an integer");
    }
    if (n == raw.size()) throw UsageError("--weights: expected exactly 4 weights");
    raw[n++] = v;
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (n != raw.size()) throw UsageError("--weights: expected exactly 4 weights");
  try {
    return normalize_weights(raw);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--weights: ") + e.what());
  }
}

template <typename F>
auto as_usage(F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Singularity data and ASD contact instanton invariants of orbifold K3 "
               "hypersurfaces in weighted projective 3-space",
               "k3inst"};
  app.require_subcommand(1);

  std::string weights_text;
  std::string format_text;
  std::int64_t max_weight = kDefaultMaxWeight;
  unsigned threads = 0;
  std::string table_text = "both";
  std::uint64_t seed = 1;

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one weight vector");
  analyze_cmd->add_option("--weights", weights_text, "Four positive weights, e.g. 1,4,6,11")
      ->required();
  analyze_cmd->add_option("--format", format_text, "markdown (default), csv or json");

  auto* search_cmd = app.add_subcommand("search", "Exhaustive search for K3 candidates");
  search_cmd->add_option("--max-weight", max_weight, "Largest weight to try (default 40)");
  search_cmd->add_option("--format", format_text, "csv (default), markdown or json");
  search_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");

  auto* reproduce_cmd =
      app.add_subcommand("reproduce", "Recompute the published tables from the search");
  reproduce_cmd->add_option("--table", table_text, "1, 2 or both (default)");
  reproduce_cmd->add_option("--format", format_text, "markdown (default), csv or json");

  auto* diff_cmd = app.add_subcommand("diff", "Compare computed and published tables");
  diff_cmd->add_option("--format", format_text, "markdown (default), csv or json");
  diff_cmd->add_option("--seed", seed, "Seed for the finite-field edge oracle");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (analyze_cmd->parsed()) {
      const auto format = as_usage([&] {
        return parse_format(format_text.empty() ? "markdown" : format_text);
      });
      const auto w = parse_weights(weights_text);
      out << render_analysis(analyze(w), format);
    } else if (search_cmd->parsed()) {
      const auto format =
          as_usage([&] { return parse_format(format_text.empty() ? "csv" : format_text); });
      if (max_weight < 1) throw UsageError("--max-weight must be >= 1");
      const auto records = analyze_all(search(max_weight, threads));
      out << emit(records, format);
    } else if (reproduce_cmd->parsed()) {
      const auto format = as_usage([&] {
        return parse_format(format_text.empty() ? "markdown" : format_text);
      });
      const auto table = as_usage([&] { return parse_table_selection(table_text); });
      out << emit_tables(reproduce_records(), table, format);
    } else if (diff_cmd->parsed()) {
      const auto format = as_usage([&] {
        return parse_format(format_text.empty() ? "markdown" : format_text);
      });
      DiffOptions options;
      options.seed = seed;
      const auto records = analyze_all(search(kDefaultMaxWeight));
      out << render_diff(diff(records, golden_table(), options), format);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace k3inst::cli
