#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symmin/set_function.hpp"

namespace symmin {

// Records a sequence of pair merges. Each live element of the current
// ground set owns a block: the subset of ORIGINAL elements it stands
// for. Live blocks always partition the original ground set.
class ContractionTrace {
 public:
  struct MergeRecord {
    std::string u;
    std::string v;
    std::string merged;
  };

  explicit ContractionTrace(GroundSet original)
      : original_(std::move(original)), current_(original_) {
    int n = original_.size();
    blocks_.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) blocks_.push_back(Subset::singleton(n, i));
  }

  const GroundSet& original_ground() const { return original_; }
  const GroundSet& current_ground() const { return current_; }
  const std::vector<MergeRecord>& merges() const { return merges_; }

  const Subset& block(int current_element) const {
    if (current_element < 0 || current_element >= current_.size()) {
      throw std::out_of_range("ContractionTrace: element is not live");
    }
    return blocks_[static_cast<std::size_t>(current_element)];
  }

  // Merges live elements u and v into a fresh element labelled
  // "(<u>+<v>)", appended after the surviving elements. Returns the
  // merged element's index in the new current ground set.
  int merge(int u, int v) {
    if (u == v) throw std::invalid_argument("ContractionTrace: cannot merge an element with itself");
    if (u < 0 || u >= current_.size() || v < 0 || v >= current_.size()) {
      throw std::out_of_range("ContractionTrace: element is not live");
    }
    std::string merged_label = "(" + current_.label(u) + "+" + current_.label(v) + ")";
    merges_.push_back({current_.label(u), current_.label(v), merged_label});

    std::vector<std::string> labels;
    std::vector<Subset> blocks;
    labels.reserve(static_cast<std::size_t>(current_.size()) - 1);
    blocks.reserve(static_cast<std::size_t>(current_.size()) - 1);
    for (int i = 0; i < current_.size(); ++i) {
      if (i == u || i == v) continue;
      labels.push_back(current_.label(i));
      blocks.push_back(blocks_[static_cast<std::size_t>(i)]);
    }
    labels.push_back(std::move(merged_label));
    blocks.push_back(blocks_[static_cast<std::size_t>(u)] | blocks_[static_cast<std::size_t>(v)]);

    current_ = GroundSet(std::move(labels));
    blocks_ = std::move(blocks);
    return current_.size() - 1;
  }

  // Maps a subset of the current ground set to the union of its blocks
  // over the original ground set.
  Subset expand(const Subset& x) const {
    if (x.universe_size() != current_.size()) {
      throw std::invalid_argument("ContractionTrace: stale subset (universe does not match)");
    }
    Subset out(original_.size());
    x.for_each([&](int e) { out |= blocks_[static_cast<std::size_t>(e)]; });
    return out;
  }

 private:
  GroundSet original_;
  GroundSet current_;
  std::vector<Subset> blocks_;
  std::vector<MergeRecord> merges_;
};

// View of a base oracle through a contraction trace: evaluating X costs
// exactly one base call, f'(X) = f(expand(X)). Requires a symmetric
// base oracle for f' to agree with the contracted function obtained by
// complementation. Holds a reference; the base must outlive the view.
template <SetFunction F>
class ContractedFunction {
 public:
  explicit ContractedFunction(const F& base) : base_(&base), trace_(base.ground()) {}

  const GroundSet& ground() const { return trace_.current_ground(); }
  const ContractionTrace& trace() const { return trace_; }

  double evaluate(const Subset& x) const { return base_->evaluate(trace_.expand(x)); }

  std::int64_t calls() const { return base_->calls(); }
  void reset_calls() const { base_->reset_calls(); }

  // Merges live elements u and v of the current ground set.
  int merge(int u, int v) { return trace_.merge(u, v); }

 private:
  const F* base_;
  ContractionTrace trace_;
};

// Contracts u and v of f's current ground set into one fresh element.
template <SetFunction F>
ContractedFunction<F> contract(const ContractedFunction<F>& f, int u, int v) {
  ContractedFunction<F> out = f;
  out.merge(u, v);
  return out;
}

template <SetFunction F>
ContractedFunction<F> contract(const F& base, int u, int v) {
  ContractedFunction<F> out(base);
  out.merge(u, v);
  return out;
}

// Lifts a subset of the contracted ground set back to the original one.
// When `avoid` names a live element whose block must stay outside the
// result, a subset containing it is replaced by its complement first
// (sound for symmetric functions, which take equal values on both).
inline Subset lift(const ContractionTrace& trace, Subset x,
                   std::optional<int> avoid = std::nullopt) {
  if (x.universe_size() != trace.current_ground().size()) {
    throw std::invalid_argument("lift: stale subset (universe does not match)");
  }
  if (avoid.has_value() && x.test(*avoid)) x = x.complement();
  return trace.expand(x);
}

}  // namespace symmin
