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

#ifndef SYMHARM_RANKING_HPP
#define SYMHARM_RANKING_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symharm/chord.hpp"
#include "symharm/measures.hpp"
#include "symharm/rational.hpp"
#include "symharm/scale.hpp"

namespace symharm {

/// Competition ranking, ascending: rank[i] = 1 + |{j : values[j] < values[i]}|.
/// Equal values share the minimal rank; the next distinct value skips.
template <typename T>
std::vector<int> competition_rank(const std::vector<T>& values) {
  if (values.empty()) {
    throw std::invalid_argument("competition_rank: empty list");
  }
  std::vector<int> ranks(values.size());
  for (size_t i = 0; i < values.size(); ++i) {
    int smaller = 0;
    for (size_t j = 0; j < values.size(); ++j) {
      if (values[j] < values[i]) ++smaller;
    }
    ranks[i] = 1 + smaller;
  }
  return ranks;
}

/// Per-class measure values with tie-aware ranks for one scale. Values are
/// exact rationals; integer-valued measures have denominator 1.
struct RankedTable {
  std::string scale_name;
  int k = 3;
  Measure measure = Measure::symmetric_harmonicity;
  std::vector<Chord> classes;
  std::vector<Rational> values;
  std::vector<int> ranks;
};

/// Measure values for all k-chord equivalence classes of one scale, columns
/// in ascending label order. Supported measures: symm and stolzenburg-avg
/// (the class-invariant ones).
inline RankedTable ranked_classes(
    const Scale& scale, int k, Measure measure = Measure::symmetric_harmonicity,
    OctaveConvention convention = OctaveConvention::closed_voicing) {
  if (measure != Measure::symmetric_harmonicity &&
      measure != Measure::stolzenburg_avg) {
    throw std::invalid_argument(
        "ranked_classes: measure \"" + to_string(measure) +
        "\" is not constant on equivalence classes; use symm or stolzenburg-avg");
  }
  RankedTable table;
  table.scale_name = scale.name();
  table.k = k;
  table.measure = measure;
  HarmonicityTable h(scale);
  for (const ChordClass& cls : equivalence_classes(k)) {
    table.classes.push_back(cls.label);
    if (measure == Measure::symmetric_harmonicity) {
      table.values.emplace_back(symmetric_harmonicity(h, cls.label));
    } else {
      table.values.push_back(stolzenburg_class_average(scale, cls, convention));
    }
  }
  table.ranks = competition_rank(table.values);
  return table;
}

/// Symmetric harmonicities with ranks for the 12 triad classes, one table
/// per scale.
inline std::vector<RankedTable> triad_ranking_table(
    const std::vector<Scale>& scales) {
  std::vector<RankedTable> tables;
  tables.reserve(scales.size());
  for (const Scale& scale : scales) {
    tables.push_back(ranked_classes(scale, 3));
  }
  return tables;
}

/// Class-averaged relative periodicity with ranks, one table per scale.
inline std::vector<RankedTable> averaged_stolzenburg_table(
    const std::vector<Scale>& scales,
    OctaveConvention convention = OctaveConvention::closed_voicing) {
  std::vector<RankedTable> tables;
  tables.reserve(scales.size());
  for (const Scale& scale : scales) {
    tables.push_back(ranked_classes(scale, 3, Measure::stolzenburg_avg,
                                    convention));
  }
  return tables;
}

/// Rows with value below the threshold, re-sorted by ascending value (label
/// breaks ties). Raising the threshold only appends rows.
inline RankedTable apply_threshold(const RankedTable& table,
                                   const BigInt& threshold) {
  if (threshold <= 0) {
    throw std::invalid_argument("apply_threshold: threshold must be positive");
  }
  Rational limit{threshold};
  std::vector<size_t> order(table.classes.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (table.values[a] != table.values[b]) {
      return table.values[a] < table.values[b];
    }
    return table.classes[a] < table.classes[b];
  });
  RankedTable out;
  out.scale_name = table.scale_name;
  out.k = table.k;
  out.measure = table.measure;
  for (size_t idx : order) {
    if (!(table.values[idx] < limit)) continue;
    out.classes.push_back(table.classes[idx]);
    out.values.push_back(table.values[idx]);
  }
  if (!out.values.empty()) out.ranks = competition_rank(out.values);
  return out;
}

/// All 4-chord classes with symmetric harmonicity below the threshold,
/// ascending by value.
inline RankedTable fourchord_table(const Scale& scale, const BigInt& threshold) {
  return apply_threshold(ranked_classes(scale, 4), threshold);
}

/// Published empirical consonance ranks for the 12 triad classes, in
/// ascending label order; classes absent from the study carry no rank.
inline std::vector<std::optional<int>> empirical_triad_ranks() {
  return {10, 6, std::nullopt, 7, 8, std::nullopt, 3, 5, 2, 4, 1, 9};
}

/// Reference ranks of the translation-invariant averaged periodicity against
/// the same study; display-only constants, not recomputed.
inline std::vector<std::optional<int>> averaged_harmonicity_reference_ranks() {
  return {9, 10, std::nullopt, 8, 6, std::nullopt, 4, 7, 2, 4, 1, 3};
}

/// Empirical ranks of the four best 4-chord classes, keyed by class label.
inline std::vector<std::pair<Chord, int>> empirical_fourchord_ranks() {
  return {
      {Chord({2, 5, 9}), 4},
      {Chord({2, 5, 7}), 6},
      {Chord({1, 5, 8}), 2},
      {Chord({2, 4, 7}), 1},
  };
}

/// Side-by-side alignment of the empirical ranks with a measure's ranks.
/// Classes without empirical data are displayed but excluded from the
/// agreement statistics.
struct EmpiricalComparison {
  std::string scale_name;
  std::string measure_label;
  std::vector<Chord> classes;
  std::vector<std::optional<int>> empirical;
  std::vector<int> measure_ranks;
  std::vector<std::optional<int>> avg_harm_reference;
  std::vector<std::optional<bool>> agreement;  // nullopt where empirical is n/a
  int agreed = 0;
  int comparable = 0;
  double spearman_informational = 0.0;  // over comparable classes; not from
                                        // the published tables
};

namespace detail {

inline EmpiricalComparison finish_comparison(EmpiricalComparison cmp) {
  double sum_d2 = 0.0;
  for (size_t i = 0; i < cmp.classes.size(); ++i) {
    if (!cmp.empirical[i].has_value()) {
      cmp.agreement.push_back(std::nullopt);
      continue;
    }
    bool agree = *cmp.empirical[i] == cmp.measure_ranks[i];
    cmp.agreement.push_back(agree);
    ++cmp.comparable;
    if (agree) ++cmp.agreed;
    double d = static_cast<double>(*cmp.empirical[i] - cmp.measure_ranks[i]);
    sum_d2 += d * d;
  }
  if (cmp.comparable > 1) {
    double n = cmp.comparable;
    cmp.spearman_informational = 1.0 - 6.0 * sum_d2 / (n * (n * n - 1.0));
  }
  return cmp;
}

}  // namespace detail

inline EmpiricalComparison compare_to_empirical(const RankedTable& ranked) {
  if (ranked.k != 3 || ranked.classes.size() != 12) {
    throw std::invalid_argument(
        "compare_to_empirical: expects the 12-class triad table");
  }
  EmpiricalComparison cmp;
  cmp.scale_name = ranked.scale_name;
  cmp.measure_label = to_string(ranked.measure);
  cmp.classes = ranked.classes;
  cmp.empirical = empirical_triad_ranks();
  cmp.measure_ranks = ranked.ranks;
  cmp.avg_harm_reference = averaged_harmonicity_reference_ranks();
  return detail::finish_comparison(std::move(cmp));
}

/// Aligns a 4-chord ranking with the four class ranks quoted from the
/// empirical study. The table must contain those four classes (the default
/// threshold 10^8 does).
inline EmpiricalComparison compare_fourchords_to_empirical(
    const RankedTable& ranked) {
  if (ranked.k != 4) {
    throw std::invalid_argument(
        "compare_fourchords_to_empirical: expects a 4-chord table");
  }
  EmpiricalComparison cmp;
  cmp.scale_name = ranked.scale_name;
  cmp.measure_label = to_string(ranked.measure);
  for (const auto& [label, empirical_rank] : empirical_fourchord_ranks()) {
    auto it = std::find(ranked.classes.begin(), ranked.classes.end(), label);
    if (it == ranked.classes.end()) {
      throw std::invalid_argument(
          "compare_fourchords_to_empirical: table lacks class " + label.str());
    }
    size_t idx = static_cast<size_t>(it - ranked.classes.begin());
    cmp.classes.push_back(label);
    cmp.empirical.push_back(empirical_rank);
    cmp.measure_ranks.push_back(ranked.ranks[idx]);
  }
  return detail::finish_comparison(std::move(cmp));
}

}  // namespace symharm

#endif  // SYMHARM_RANKING_HPP
