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

#ifndef SYMHARM_REPORT_HPP
#define SYMHARM_REPORT_HPP

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "symharm/chord.hpp"
#include "symharm/measures.hpp"
#include "symharm/ranking.hpp"
#include "symharm/rational.hpp"
#include "symharm/scale.hpp"

namespace symharm {

enum class Format { markdown, csv, json };

inline Format parse_format(std::string_view text) {
  if (text == "md" || text == "markdown") return Format::markdown;
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw std::invalid_argument("unknown format \"" + std::string(text) +
                              "\" (expected md, csv, or json)");
}

namespace detail {

inline std::string format_double(double value, const char* spec = "%.15g") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, value);
  return buf;
}

/// Exact serialized value: plain digits for integers, "p/q" otherwise.
inline std::string exact_value(const Rational& v) {
  return v.is_integer() ? v.num().str() : v.str();
}

/// Exact decimal string of value / 10^k with trailing zeros trimmed
/// (value must be an integer Rational).
inline std::string scaled_exact(const BigInt& value, int k) {
  BigInt divisor = pow10(static_cast<unsigned>(k));
  BigInt whole = value / divisor;
  BigInt rem = value % divisor;
  if (rem == 0) return whole.str();
  std::string frac = rem.str();
  frac.insert(frac.begin(), static_cast<size_t>(k) - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  return whole.str() + "." + frac;
}

/// value / 10^6 rounded to one decimal, e.g. 55987200 -> "56.0".
inline std::string millions_rounded(const BigInt& value) {
  BigInt tenths = (value + 50000) / 100000;
  BigInt whole = tenths / 10;
  BigInt frac = tenths % 10;
  return whole.str() + "." + frac.str();
}

/// Human-readable value for the ranked markdown tables. Triad harmonicities
/// print in exact thousands, 4-chord harmonicities in rounded millions.
inline std::string display_value(const Rational& v, int k, Measure measure) {
  if (measure == Measure::symmetric_harmonicity) {
    if (k == 3) return scaled_exact(v.num(), 3);
    if (k == 4) return millions_rounded(v.num());
    return v.num().str();
  }
  return format_double(v.to_double(), "%.3f");
}

inline std::string display_value_header(int k, Measure measure) {
  if (measure == Measure::symmetric_harmonicity) {
    if (k == 3) return "value (thousands)";
    if (k == 4) return "value (millions)";
    return "value";
  }
  return "average";
}

inline std::string markdown_table(
    const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  for (size_t r = 0; r < rows.size(); ++r) {
    out << "|";
    for (const std::string& cell : rows[r]) out << " " << cell << " |";
    out << "\n";
    if (r == 0) {
      out << "|";
      for (size_t c = 0; c < rows[0].size(); ++c) out << "---|";
      out << "\n";
    }
  }
  return out.str();
}

inline std::string csv_text(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

inline const std::array<const char*, 12>& note_names() {
  static const std::array<const char*, 12> names = {
      "C", "C#", "D", "Eb", "E", "F", "F#", "G", "G#", "A", "Bb", "B"};
  return names;
}

}  // namespace detail

inline std::string render_scales(const std::vector<Scale>& scales,
                                 Format format) {
  using nlohmann::ordered_json;
  switch (format) {
    case Format::markdown: {
      std::vector<std::vector<std::string>> rows;
      std::vector<std::string> header = {"scale"};
      for (const char* n : detail::note_names()) header.emplace_back(n);
      rows.push_back(header);
      for (const Scale& s : scales) {
        std::vector<std::string> row = {s.name()};
        for (int n = 0; n < Scale::kNotes; ++n) row.push_back(s.at(n).str());
        rows.push_back(row);
      }
      return detail::markdown_table(rows);
    }
    case Format::csv: {
      std::ostringstream out;
      out << detail::csv_text("scale");
      for (const char* n : detail::note_names()) out << "," << detail::csv_text(n);
      out << "\n";
      for (const Scale& s : scales) {
        out << detail::csv_text(s.name());
        for (int n = 0; n < Scale::kNotes; ++n) {
          out << "," << detail::csv_text(s.at(n).str());
        }
        out << "\n";
      }
      return out.str();
    }
    case Format::json: {
      ordered_json doc;
      doc["scales"] = ordered_json::array();
      for (const Scale& s : scales) {
        ordered_json entry;
        entry["name"] = s.name();
        entry["ratios"] = ordered_json::array();
        for (int n = 0; n < Scale::kNotes; ++n) {
          entry["ratios"].push_back(s.at(n).str());
        }
        doc["scales"].push_back(entry);
      }
      return doc.dump(2) + "\n";
    }
  }
  throw std::invalid_argument("invalid format");
}

inline std::string render_intervals(const HarmonicityTable& table,
                                    Format format) {
  using nlohmann::ordered_json;
  switch (format) {
    case Format::markdown: {
      std::vector<std::string> header = {"scale"};
      std::vector<std::string> row = {table.scale_name()};
      for (int n = 1; n <= 11; ++n) {
        header.push_back("h" + std::to_string(n));
        row.push_back(table.h(n).str());
      }
      return detail::markdown_table({header, row});
    }
    case Format::csv: {
      std::ostringstream out;
      out << detail::csv_text("n") << "," << detail::csv_text("h") << "\n";
      for (int n = 1; n <= 11; ++n) {
        out << n << "," << table.h(n).str() << "\n";
      }
      return out.str();
    }
    case Format::json: {
      ordered_json doc;
      doc["scale"] = table.scale_name();
      doc["h"] = ordered_json::array();
      for (int n = 1; n <= 11; ++n) doc["h"].push_back(table.h(n).str());
      return doc.dump(2) + "\n";
    }
  }
  throw std::invalid_argument("invalid format");
}

inline std::string render_ranked(const RankedTable& table, Format format) {
  using nlohmann::ordered_json;
  switch (format) {
    case Format::markdown: {
      std::ostringstream out;
      out << "scale " << table.scale_name << ", k=" << table.k << ", measure "
          << to_string(table.measure) << "\n\n";
      std::vector<std::string> header = {"class"};
      std::vector<std::string> values = {
          detail::display_value_header(table.k, table.measure)};
      std::vector<std::string> ranks = {"rank"};
      for (size_t i = 0; i < table.classes.size(); ++i) {
        header.push_back(table.classes[i].str());
        values.push_back(
            detail::display_value(table.values[i], table.k, table.measure));
        ranks.push_back(std::to_string(table.ranks[i]));
      }
      out << detail::markdown_table({header, values, ranks});
      return out.str();
    }
    case Format::csv: {
      std::ostringstream out;
      out << detail::csv_text("class") << "," << detail::csv_text("value")
          << "," << detail::csv_text("rank") << "\n";
      for (size_t i = 0; i < table.classes.size(); ++i) {
        out << detail::csv_text(table.classes[i].str()) << ","
            << detail::exact_value(table.values[i]) << "," << table.ranks[i]
            << "\n";
      }
      return out.str();
    }
    case Format::json: {
      ordered_json doc;
      doc["scale"] = table.scale_name;
      doc["k"] = table.k;
      doc["measure"] = to_string(table.measure);
      doc["classes"] = ordered_json::array();
      for (size_t i = 0; i < table.classes.size(); ++i) {
        ordered_json entry;
        entry["class"] = table.classes[i].str();
        entry["value"] = detail::exact_value(table.values[i]);
        if (!table.values[i].is_integer()) {
          entry["approx"] = table.values[i].to_double();
        }
        entry["rank"] = table.ranks[i];
        doc["classes"].push_back(entry);
      }
      return doc.dump(2) + "\n";
    }
  }
  throw std::invalid_argument("invalid format");
}

inline std::string render_comparison(const EmpiricalComparison& cmp,
                                     Format format) {
  using nlohmann::ordered_json;
  const bool has_reference = !cmp.avg_harm_reference.empty();
  auto opt_str = [](const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string("n/a");
  };
  switch (format) {
    case Format::markdown: {
      std::ostringstream out;
      out << "scale " << cmp.scale_name << ", measure " << cmp.measure_label
          << " vs. empirical\n\n";
      std::vector<std::vector<std::string>> rows;
      std::vector<std::string> header = {"class", "empirical",
                                         cmp.measure_label};
      if (has_reference) header.push_back("avg harm (reference)");
      header.push_back("agree");
      rows.push_back(header);
      for (size_t i = 0; i < cmp.classes.size(); ++i) {
        std::vector<std::string> row = {cmp.classes[i].str(),
                                        opt_str(cmp.empirical[i]),
                                        std::to_string(cmp.measure_ranks[i])};
        if (has_reference) row.push_back(opt_str(cmp.avg_harm_reference[i]));
        row.push_back(cmp.agreement[i]
                          ? (*cmp.agreement[i] ? std::string("yes")
                                               : std::string("no"))
                          : std::string("-"));
        rows.push_back(row);
      }
      out << detail::markdown_table(rows);
      out << "\nagreement: " << cmp.agreed << "/" << cmp.comparable
          << " classes; spearman (informational, not from the published "
             "tables): "
          << detail::format_double(cmp.spearman_informational, "%.4f") << "\n";
      return out.str();
    }
    case Format::csv: {
      std::ostringstream out;
      out << detail::csv_text("class") << "," << detail::csv_text("empirical")
          << "," << detail::csv_text(cmp.measure_label);
      if (has_reference) out << "," << detail::csv_text("avg_harm_reference");
      out << "," << detail::csv_text("agree") << "\n";
      for (size_t i = 0; i < cmp.classes.size(); ++i) {
        out << detail::csv_text(cmp.classes[i].str()) << ","
            << opt_str(cmp.empirical[i]) << "," << cmp.measure_ranks[i];
        if (has_reference) out << "," << opt_str(cmp.avg_harm_reference[i]);
        out << ","
            << (cmp.agreement[i] ? (*cmp.agreement[i] ? "yes" : "no") : "n/a")
            << "\n";
      }
      return out.str();
    }
    case Format::json: {
      ordered_json doc;
      doc["scale"] = cmp.scale_name;
      doc["measure"] = cmp.measure_label;
      doc["classes"] = ordered_json::array();
      for (size_t i = 0; i < cmp.classes.size(); ++i) {
        ordered_json entry;
        entry["class"] = cmp.classes[i].str();
        entry["empirical"] =
            cmp.empirical[i] ? ordered_json(*cmp.empirical[i]) : nullptr;
        entry["rank"] = cmp.measure_ranks[i];
        if (has_reference) {
          entry["avg_harm_reference"] =
              cmp.avg_harm_reference[i] ? ordered_json(*cmp.avg_harm_reference[i])
                                        : nullptr;
        }
        entry["agree"] =
            cmp.agreement[i] ? ordered_json(*cmp.agreement[i]) : nullptr;
        doc["classes"].push_back(entry);
      }
      doc["agreement"] = {{"matched", cmp.agreed},
                          {"comparable", cmp.comparable}};
      doc["spearman_informational"] = cmp.spearman_informational;
      return doc.dump(2) + "\n";
    }
  }
  throw std::invalid_argument("invalid format");
}

/// Per-chord report for a concrete voicing (absolute note indices). The
/// translation-dependent measures use the notes as given; symmetric
/// harmonicity reduces to the chord's class, which requires distinct pitch
/// classes.
struct ChordReport {
  std::string scale_name;
  std::vector<int> notes;
  std::optional<Chord> chord;  // octave-reduced, rebased at the lowest class
  std::optional<Chord> class_label;
  std::optional<BigInt> symm;
  BigInt stolzenburg;
  BigInt brefeld_mod;
  double brefeld = 0.0;
};

inline ChordReport make_chord_report(const Scale& scale,
                                     const std::vector<int>& notes) {
  ChordReport report;
  report.scale_name = scale.name();
  report.notes = notes;
  report.stolzenburg = stolzenburg_harmonicity(scale, notes);
  report.brefeld_mod = brefeld_modified(scale, notes);
  report.brefeld = brefeld_chord(scale, notes);
  std::vector<int> residues;
  for (int n : notes) residues.push_back(n % 12);
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
  if (residues.size() == notes.size() && residues.size() >= 2) {
    std::vector<int> offsets;
    for (size_t i = 1; i < residues.size(); ++i) {
      offsets.push_back(residues[i] - residues[0]);
    }
    Chord chord(std::move(offsets));
    report.symm = symmetric_harmonicity(scale, chord);
    report.class_label =
        find_class(equivalence_classes(chord.num_notes()), chord).label;
    report.chord = std::move(chord);
  }
  return report;
}

inline std::string render_chord_report(const ChordReport& report,
                                       Format format,
                                       std::optional<Measure> only = {}) {
  using nlohmann::ordered_json;
  auto want = [&](Measure m) { return !only || *only == m; };
  switch (format) {
    case Format::markdown: {
      std::ostringstream out;
      out << "scale " << report.scale_name << ", notes ";
      for (size_t i = 0; i < report.notes.size(); ++i) {
        if (i > 0) out << ",";
        out << report.notes[i];
      }
      if (report.class_label) out << " (class " << report.class_label->str() << ")";
      out << "\n\n";
      std::vector<std::vector<std::string>> rows;
      rows.push_back({"measure", "value"});
      if (want(Measure::symmetric_harmonicity)) {
        rows.push_back({"symmetric harmonicity",
                        report.symm ? report.symm->str()
                                    : "n/a (duplicate pitch classes)"});
      }
      if (want(Measure::stolzenburg)) {
        rows.push_back({"stolzenburg", report.stolzenburg.str()});
      }
      if (want(Measure::brefeld)) {
        rows.push_back({"brefeld",
                        detail::format_double(report.brefeld, "%.4f")});
      }
      if (want(Measure::brefeld_modified)) {
        rows.push_back({"brefeld-mod", report.brefeld_mod.str()});
      }
      out << detail::markdown_table(rows);
      return out.str();
    }
    case Format::csv: {
      std::ostringstream out;
      out << detail::csv_text("measure") << "," << detail::csv_text("value")
          << "\n";
      if (want(Measure::symmetric_harmonicity)) {
        out << detail::csv_text("symm") << ","
            << (report.symm ? report.symm->str() : "n/a") << "\n";
      }
      if (want(Measure::stolzenburg)) {
        out << detail::csv_text("stolzenburg") << ","
            << report.stolzenburg.str() << "\n";
      }
      if (want(Measure::brefeld)) {
        out << detail::csv_text("brefeld") << ","
            << detail::format_double(report.brefeld) << "\n";
      }
      if (want(Measure::brefeld_modified)) {
        out << detail::csv_text("brefeld-mod") << ","
            << report.brefeld_mod.str() << "\n";
      }
      return out.str();
    }
    case Format::json: {
      ordered_json doc;
      doc["scale"] = report.scale_name;
      doc["notes"] = report.notes;
      doc["class"] =
          report.class_label ? ordered_json(report.class_label->str()) : nullptr;
      ordered_json measures;
      if (want(Measure::symmetric_harmonicity)) {
        measures["symm"] =
            report.symm ? ordered_json(report.symm->str()) : nullptr;
      }
      if (want(Measure::stolzenburg)) {
        measures["stolzenburg"] = report.stolzenburg.str();
      }
      if (want(Measure::brefeld)) measures["brefeld"] = report.brefeld;
      if (want(Measure::brefeld_modified)) {
        measures["brefeld_mod"] = report.brefeld_mod.str();
      }
      doc["measures"] = measures;
      return doc.dump(2) + "\n";
    }
  }
  throw std::invalid_argument("invalid format");
}

/// Class listing: members grouped by translation/inversion orbit, with the
/// shared symmetric harmonicity.
struct ClassReport {
  std::string scale_name;
  ChordClass cls;
  BigInt symm;
  std::vector<std::vector<Chord>> orbits;
};

inline ClassReport make_class_report(const Scale& scale, const Chord& chord) {
  auto classes = equivalence_classes(chord.num_notes());
  const ChordClass& cls = find_class(classes, chord);
  return ClassReport{scale.name(), cls, symmetric_harmonicity(scale, cls.label),
                     translation_inversion_orbits(cls)};
}

inline std::string render_class_report(const ClassReport& report,
                                       Format format) {
  using nlohmann::ordered_json;
  switch (format) {
    case Format::markdown: {
      std::ostringstream out;
      out << "class " << report.cls.label.str() << ", intervals "
          << report.cls.signature.str() << ", scale " << report.scale_name
          << "\n\n";
      out << "symmetric harmonicity (shared by all members): "
          << report.symm.str() << "\n\n";
      std::vector<std::vector<std::string>> rows;
      rows.push_back({"orbit", "members"});
      for (size_t i = 0; i < report.orbits.size(); ++i) {
        std::string members;
        for (size_t j = 0; j < report.orbits[i].size(); ++j) {
          if (j > 0) members += " ";
          members += report.orbits[i][j].str();
        }
        rows.push_back({std::to_string(i + 1), members});
      }
      out << detail::markdown_table(rows);
      return out.str();
    }
    case Format::csv: {
      std::ostringstream out;
      out << detail::csv_text("member") << "," << detail::csv_text("orbit")
          << "," << detail::csv_text("symm") << "\n";
      for (size_t i = 0; i < report.orbits.size(); ++i) {
        for (const Chord& member : report.orbits[i]) {
          out << detail::csv_text(member.str()) << "," << (i + 1) << ","
              << report.symm.str() << "\n";
        }
      }
      return out.str();
    }
    case Format::json: {
      ordered_json doc;
      doc["scale"] = report.scale_name;
      doc["class"] = report.cls.label.str();
      doc["intervals"] = report.cls.signature.str();
      doc["symm"] = report.symm.str();
      doc["orbits"] = ordered_json::array();
      for (const auto& orbit : report.orbits) {
        ordered_json members = ordered_json::array();
        for (const Chord& member : orbit) members.push_back(member.str());
        doc["orbits"].push_back(members);
      }
      return doc.dump(2) + "\n";
    }
  }
  throw std::invalid_argument("invalid format");
}

}  // namespace symharm

#endif  // SYMHARM_REPORT_HPP
