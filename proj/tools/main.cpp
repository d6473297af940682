// Copyright 2026 The Symharm Authors. All Rights Reserved.
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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symharm/symharm.hpp"

namespace {

using namespace symharm;

struct CommonOptions {
  std::string scale_id = "A";
  std::string scale_file;
  std::string format = "md";
  std::string tolerance = "0.01";
};

void add_scale_options(CLI::App* cmd, CommonOptions* opts) {
  cmd->add_option("--scale", opts->scale_id, "Built-in scale id (A..E)")
      ->check(CLI::IsMember({"A", "B", "C", "D", "E"}));
  cmd->add_option("--scale-file", opts->scale_file,
                  "Path to a scale file (12 ratios, optional name line)");
  cmd->add_option("--tolerance", opts->tolerance,
                  "Relative tolerance for the continued-fraction scale C "
                  "(default 0.01)");
}

void add_format_option(CLI::App* cmd, CommonOptions* opts) {
  cmd->add_option("--format", opts->format, "Output format")
      ->check(CLI::IsMember({"md", "csv", "json"}));
}

Scale load_scale_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open scale file \"" + path + "\"");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_scale(text.str(), std::filesystem::path(path).stem().string());
}

Scale resolve_scale(const CommonOptions& opts) {
  if (!opts.scale_file.empty()) {
    return load_scale_file(opts.scale_file);
  }
  ScaleId id = parse_scale_id(opts.scale_id);
  if (id == ScaleId::C && opts.tolerance != "0.01") {
    Rational tol = parse_decimal(opts.tolerance);
    return continued_fraction_scale(tol, "C(" + opts.tolerance + ")");
  }
  return builtin_scale(id);
}

std::vector<int> parse_notes(const std::string& text) {
  std::vector<int> notes;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("invalid note list \"" + text + "\"");
    }
    notes.push_back(std::stoi(part));
  }
  if (notes.empty()) {
    throw std::invalid_argument("invalid note list \"" + text + "\"");
  }
  return notes;
}

BigInt parse_threshold(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("invalid threshold \"" + text +
                                "\" (expected a positive integer)");
  }
  BigInt value{text};
  if (value <= 0) {
    throw std::invalid_argument("invalid threshold \"" + text + "\"");
  }
  return value;
}

int run(int argc, char** argv) {
  CLI::App app{
      "Consonance measures for chords in twelve-note just scales: symmetric "
      "harmonicity plus the Brefeld and Stolzenburg reference models."};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  CommonOptions scales_opts;
  CLI::App* scales_cmd =
      app.add_subcommand("scales", "Print the built-in scales");
  add_format_option(scales_cmd, &scales_opts);
  scales_cmd->add_option("--scale-file", scales_opts.scale_file,
                         "Append a custom scale from file");

  CommonOptions intervals_opts;
  CLI::App* intervals_cmd = app.add_subcommand(
      "intervals", "Per-interval symmetric harmonicities h1..h11 of a scale");
  add_scale_options(intervals_cmd, &intervals_opts);
  add_format_option(intervals_cmd, &intervals_opts);

  CommonOptions rank_opts;
  int rank_k = 3;
  std::string rank_measure = "symm";
  std::string rank_threshold;
  CLI::App* rank_cmd = app.add_subcommand(
      "rank", "Ranked table of all k-chord equivalence classes");
  add_scale_options(rank_cmd, &rank_opts);
  add_format_option(rank_cmd, &rank_opts);
  rank_cmd->add_option("-k", rank_k, "Chord size (default 3)");
  rank_cmd->add_option("--measure", rank_measure,
                       "Class measure: symm or stolzenburg-avg");
  rank_cmd->add_option("--threshold", rank_threshold,
                       "Keep only classes with value below this integer; "
                       "sorts by ascending value");

  CommonOptions chord_opts;
  std::string chord_notes;
  std::string chord_class;
  std::string chord_measure;
  CLI::App* chord_cmd = app.add_subcommand(
      "chord", "Report on one chord (--notes) or one class (--class)");
  add_scale_options(chord_cmd, &chord_opts);
  add_format_option(chord_cmd, &chord_opts);
  chord_cmd->add_option("--notes", chord_notes,
                        "Comma-separated absolute note indices, e.g. 0,4,7");
  chord_cmd->add_option("--class", chord_class,
                        "Class label, e.g. 3,7 (any member works)");
  chord_cmd->add_option("--measure", chord_measure,
                        "Print a single measure instead of all");

  CommonOptions compare_opts;
  int compare_k = 3;
  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "Align a scale's symmetric harmonicity ranks with the "
                 "published empirical consonance ranks");
  add_scale_options(compare_cmd, &compare_opts);
  add_format_option(compare_cmd, &compare_opts);
  compare_cmd->add_option("-k", compare_k, "3 (triads) or 4 (4-chords)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (scales_cmd->parsed()) {
    std::vector<Scale> scales;
    for (ScaleId id :
         {ScaleId::A, ScaleId::B, ScaleId::C, ScaleId::D, ScaleId::E}) {
      scales.push_back(builtin_scale(id));
    }
    if (!scales_opts.scale_file.empty()) {
      scales.push_back(load_scale_file(scales_opts.scale_file));
    }
    std::cout << render_scales(scales, parse_format(scales_opts.format));
    return 0;
  }

  if (intervals_cmd->parsed()) {
    Scale scale = resolve_scale(intervals_opts);
    std::cout << render_intervals(harmonicity_table(scale),
                                  parse_format(intervals_opts.format));
    return 0;
  }

  if (rank_cmd->parsed()) {
    Scale scale = resolve_scale(rank_opts);
    RankedTable table =
        ranked_classes(scale, rank_k, parse_measure(rank_measure));
    if (!rank_threshold.empty()) {
      table = apply_threshold(table, parse_threshold(rank_threshold));
    }
    std::cout << render_ranked(table, parse_format(rank_opts.format));
    return 0;
  }

  if (chord_cmd->parsed()) {
    if (chord_notes.empty() == chord_class.empty()) {
      throw std::invalid_argument("chord: give exactly one of --notes/--class");
    }
    Scale scale = resolve_scale(chord_opts);
    Format format = parse_format(chord_opts.format);
    if (!chord_notes.empty()) {
      std::optional<Measure> only;
      if (!chord_measure.empty()) only = parse_measure(chord_measure);
      ChordReport report = make_chord_report(scale, parse_notes(chord_notes));
      std::cout << render_chord_report(report, format, only);
    } else {
      Chord chord = parse_chord_label(chord_class);
      std::cout << render_class_report(make_class_report(scale, chord), format);
    }
    return 0;
  }

  if (compare_cmd->parsed()) {
    Scale scale = resolve_scale(compare_opts);
    Format format = parse_format(compare_opts.format);
    if (compare_k == 3) {
      EmpiricalComparison cmp = compare_to_empirical(ranked_classes(scale, 3));
      std::cout << render_comparison(cmp, format);
    } else if (compare_k == 4) {
      RankedTable table = fourchord_table(scale, BigInt(100000000));
      std::cout << render_comparison(compare_fourchords_to_empirical(table),
                                     format);
    } else {
      throw std::invalid_argument("compare: -k must be 3 or 4");
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "symharm: " << e.what() << "\n";
    return 1;
  }
}
