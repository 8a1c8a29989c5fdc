// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Forward greedy and lazy greedy drivers over an abstract marginal-gain
// evaluator.
//
// Both drivers pick, at every step, the candidate with the largest marginal
// gain; candidates whose gains are within kTieTolerance (relative, floor 1) of
// the best are tied and the lowest index wins. With a submodular gain the two
// drivers return identical sequences.

#ifndef VARSEL_GREEDY_H_
#define VARSEL_GREEDY_H_

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "varsel/dataset.h"

namespace varsel {

inline constexpr double kTieTolerance = 1e-12;

// Gain value meaning "not selectable". A driver only picks such a candidate
// when every remaining candidate is excluded, in ascending index order.
inline constexpr double kExcluded = -std::numeric_limits<double>::infinity();

// Marginal gain g(S + i) - g(S) of a set function g, possibly backed by
// incremental state that is advanced by commit().
class GainFunction {
 public:
  virtual ~GainFunction() = default;

  // Number of candidate variables v.
  virtual int size() const = 0;

  // Must be deterministic given (sets.selected(), candidate).
  virtual double gain(const IndexSets& sets, int candidate) = 0;

  // Evaluates many candidates at once. The default loops over gain().
  virtual void gains(const IndexSets& sets, std::span<const int> candidates,
                     std::span<double> out);

  // Called once `candidate` has been added; `sets` already contains it.
  virtual void commit(const IndexSets& sets, int candidate) {
    (void)sets;
    (void)candidate;
  }

  // Current g(S) for threshold stopping. NaN when the function does not
  // track it.
  virtual double value() const { return std::numeric_limits<double>::quiet_NaN(); }
};

class StoppingRule {
 public:
  enum class Kind { kCardinality, kThreshold };

  static StoppingRule Cardinality(int k) { return StoppingRule(Kind::kCardinality, k, 0.0); }
  static StoppingRule Threshold(double tau) { return StoppingRule(Kind::kThreshold, 0, tau); }

  Kind kind() const { return kind_; }
  int k() const { return k_; }
  double tau() const { return tau_; }

  // Throws Error(kInvalidArgument) if the rule cannot apply to v candidates.
  void Validate(int v) const;

 private:
  StoppingRule(Kind kind, int k, double tau) : kind_(kind), k_(k), tau_(tau) {}

  Kind kind_;
  int k_;
  double tau_;
};

struct GreedyRun {
  std::vector<int> order;
  // Marginal gain of each selection at the time it was made (NaN for seeds).
  std::vector<double> gains;
  // gain.value() after each selection (seeds included).
  std::vector<double> values;
  std::int64_t evaluations = 0;
  double elapsed_seconds = 0.0;
};

// Plain forward greedy. `seed` is committed first, in order, and counts toward
// the cardinality. Throws Error(kThresholdNeverReached) if a threshold rule is
// not met after selecting every variable.
GreedyRun greedy_select(GainFunction& gain, const StoppingRule& stop,
                        std::span<const int> seed = {});

// Lazy greedy: stale gains are kept as upper bounds in a descending list and
// only the head is re-evaluated until it is exact. Exactness flags are reset
// at the start of every step.
GreedyRun lazy_greedy_select(GainFunction& gain, const StoppingRule& stop,
                             std::span<const int> seed = {});

struct GainEntry {
  int index;
  double bound;
  bool exact;
};

// Candidates ordered by bound, descending; equal bounds by ascending index.
class GainList {
 public:
  GainList() = default;
  explicit GainList(std::vector<GainEntry> entries);

  bool empty() const { return entries_.empty(); }
  int size() const { return static_cast<int>(entries_.size()); }
  const GainEntry& head() const { return entries_.back(); }
  // i-th entry from the head.
  const GainEntry& at(int i) const { return entries_[entries_.size() - 1 - i]; }
  GainEntry pop_head();
  // Removes and returns the i-th entry from the head.
  GainEntry take(int i);

  // Inserts `entry` at its sorted position (binary search + shift). The list
  // must not already hold entry.index.
  void reorder(const GainEntry& entry);

  void reset_flags();

  // Head first.
  std::vector<GainEntry> entries() const;

 private:
  // Stored tail first so that the head can be popped in O(1).
  std::vector<GainEntry> entries_;
};

}  // namespace varsel

#endif  // VARSEL_GREEDY_H_
