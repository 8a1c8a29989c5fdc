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

#include "varsel/greedy.h"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "varsel/errors.h"

namespace varsel {

namespace {

// a comes before b in the descending list.
bool Precedes(const GainEntry& a, const GainEntry& b) {
  if (a.bound != b.bound) return a.bound > b.bound;
  return a.index < b.index;
}

// Storage order: tail first.
bool StoredBefore(const GainEntry& a, const GainEntry& b) { return Precedes(b, a); }

double TieTolerance(double best) {
  return kTieTolerance * std::max(1.0, std::abs(best));
}

double CheckedGain(double g, int candidate) {
  if (std::isnan(g)) {
    throw Error(ErrorCode::kInvalidArgument, "gain function returned NaN", {candidate});
  }
  return g;
}

class Run {
 public:
  Run(GainFunction& gain, const StoppingRule& stop)
      : gain_(gain), stop_(stop), sets_(gain.size()),
        start_(std::chrono::steady_clock::now()) {
    stop_.Validate(gain.size());
    if (stop_.kind() == StoppingRule::Kind::kThreshold && std::isnan(gain_.value())) {
      throw Error(ErrorCode::kInvalidArgument,
                  "threshold stopping needs a gain function that tracks g(S)");
    }
  }

  IndexSets& sets() { return sets_; }
  GreedyRun& result() { return result_; }

  bool Done() const {
    if (stop_.kind() == StoppingRule::Kind::kCardinality) {
      return static_cast<int>(result_.order.size()) >= stop_.k();
    }
    return gain_.value() >= stop_.tau();
  }

  void Select(int index, double marginal) {
    sets_.select(index);
    gain_.commit(sets_, index);
    result_.order.push_back(index);
    result_.gains.push_back(marginal);
    result_.values.push_back(gain_.value());
  }

  void Seed(std::span<const int> seed) {
    for (int s : seed) Select(s, std::numeric_limits<double>::quiet_NaN());
  }

  [[noreturn]] void Exhausted() const {
    throw Error(ErrorCode::kThresholdNeverReached,
                "selected every variable without reaching tau = " +
                    std::to_string(stop_.tau()));
  }

  GreedyRun Finish() {
    result_.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(result_);
  }

 private:
  GainFunction& gain_;
  const StoppingRule& stop_;
  IndexSets sets_;
  GreedyRun result_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

void GainFunction::gains(const IndexSets& sets, std::span<const int> candidates,
                         std::span<double> out) {
  for (size_t i = 0; i < candidates.size(); ++i) out[i] = gain(sets, candidates[i]);
}

void StoppingRule::Validate(int v) const {
  if (v < 1) throw Error(ErrorCode::kInvalidArgument, "need at least one candidate");
  if (kind_ == Kind::kCardinality && (k_ < 1 || k_ > v)) {
    throw Error(ErrorCode::kInvalidArgument,
                "k must lie in [1, " + std::to_string(v) + "], got " + std::to_string(k_));
  }
  if (kind_ == Kind::kThreshold && !std::isfinite(tau_)) {
    throw Error(ErrorCode::kInvalidArgument, "tau must be finite");
  }
}

GreedyRun greedy_select(GainFunction& gain, const StoppingRule& stop,
                        std::span<const int> seed) {
  Run run(gain, stop);
  run.Seed(seed);
  std::vector<double> values;
  while (!run.Done()) {
    const std::vector<int> candidates = run.sets().unselected();
    if (candidates.empty()) run.Exhausted();
    values.resize(candidates.size());
    gain.gains(run.sets(), candidates, values);
    run.result().evaluations += static_cast<std::int64_t>(candidates.size());

    double best = kExcluded;
    for (size_t i = 0; i < candidates.size(); ++i) {
      best = std::max(best, CheckedGain(values[i], candidates[i]));
    }
    size_t pick = 0;
    if (best != kExcluded) {
      const double tol = TieTolerance(best);
      while (values[pick] < best - tol) ++pick;
    }
    run.Select(candidates[pick], values[pick]);
  }
  return run.Finish();
}

GreedyRun lazy_greedy_select(GainFunction& gain, const StoppingRule& stop,
                             std::span<const int> seed) {
  Run run(gain, stop);
  run.Seed(seed);
  if (run.Done()) return run.Finish();

  GainList list;
  {
    const std::vector<int> candidates = run.sets().unselected();
    if (candidates.empty()) run.Exhausted();
    std::vector<double> values(candidates.size());
    gain.gains(run.sets(), candidates, values);
    run.result().evaluations += static_cast<std::int64_t>(candidates.size());
    std::vector<GainEntry> entries;
    entries.reserve(candidates.size());
    for (size_t i = 0; i < candidates.size(); ++i) {
      entries.push_back({candidates[i], CheckedGain(values[i], candidates[i]), true});
    }
    list = GainList(std::move(entries));
  }

  auto refresh = [&](int position) {
    GainEntry entry = list.take(position);
    entry.bound = CheckedGain(gain.gain(run.sets(), entry.index), entry.index);
    entry.exact = true;
    ++run.result().evaluations;
    list.reorder(entry);
  };

  bool first_step = true;
  while (!run.Done()) {
    if (list.empty()) run.Exhausted();
    if (!first_step) list.reset_flags();
    first_step = false;

    int winner_pos = -1;
    while (winner_pos < 0) {
      const GainEntry& head = list.head();
      if (head.bound == kExcluded) {
        // Everything left is excluded: fall back to the lowest index.
        winner_pos = 0;
        for (int i = 1; i < list.size(); ++i) {
          if (list.at(i).index < list.at(winner_pos).index) winner_pos = i;
        }
        break;
      }
      if (!head.exact) {
        refresh(0);
        continue;
      }
      // The head is exact and dominates every bound below it. Candidates whose
      // bounds fall inside the tie band must be exact too before the lowest
      // index among them can be declared the winner.
      const double floor = head.bound - TieTolerance(head.bound);
      int best = 0;
      int stale = -1;
      for (int i = 1; i < list.size() && list.at(i).bound >= floor; ++i) {
        if (!list.at(i).exact) {
          stale = i;
          break;
        }
        if (list.at(i).index < list.at(best).index) best = i;
      }
      if (stale >= 0) {
        refresh(stale);
        continue;
      }
      winner_pos = best;
    }
    const GainEntry winner = list.take(winner_pos);
    run.Select(winner.index, winner.bound);
  }
  return run.Finish();
}

GainList::GainList(std::vector<GainEntry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), StoredBefore);
}

GainEntry GainList::pop_head() { return take(0); }

GainEntry GainList::take(int i) {
  const auto it = entries_.end() - 1 - i;
  GainEntry entry = *it;
  entries_.erase(it);
  return entry;
}

void GainList::reorder(const GainEntry& entry) {
  const auto pos = std::lower_bound(entries_.begin(), entries_.end(), entry, StoredBefore);
  entries_.insert(pos, entry);
}

void GainList::reset_flags() {
  for (auto& e : entries_) e.exact = false;
}

std::vector<GainEntry> GainList::entries() const {
  return {entries_.rbegin(), entries_.rend()};
}

}  // namespace varsel
