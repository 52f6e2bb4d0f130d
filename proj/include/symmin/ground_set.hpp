#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace symmin {

// Absolute tolerance shared by every inequality, tie and symmetry check.
inline constexpr double kEps = 1e-9;

// Finite ordered universe of named elements; index i <-> labels()[i].
class GroundSet {
 public:
  explicit GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) {
      throw std::invalid_argument("GroundSet: element list must be nonempty");
    }
    index_.reserve(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      auto [it, inserted] = index_.emplace(labels_[i], static_cast<int>(i));
      if (!inserted) {
        throw std::invalid_argument("GroundSet: duplicate label '" + labels_[i] + "'");
      }
    }
  }

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }

  const std::string& label(int i) const {
    if (i < 0 || i >= size()) throw std::out_of_range("GroundSet: element index out of range");
    return labels_[static_cast<std::size_t>(i)];
  }

  int index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) {
      throw std::invalid_argument("GroundSet: unknown label '" + label + "'");
    }
    return it->second;
  }

  bool contains(const std::string& label) const { return index_.count(label) > 0; }

  bool operator==(const GroundSet& other) const { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

// "p1", "p2", ..., "p<n>" style label lists.
inline std::vector<std::string> numbered_labels(const std::string& prefix, int n, int start = 1) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(start + i));
  return out;
}

// Subset of a ground set, stored as a bit mask over element indices.
// Element 0 is the least significant bit; operator< compares the masks
// as integers, which is the tie-break order used throughout.
class Subset {
 public:
  explicit Subset(int universe_size) : n_(universe_size), words_(word_count(universe_size), 0) {
    if (universe_size < 0) throw std::invalid_argument("Subset: negative universe size");
  }

  static Subset full(int universe_size) {
    Subset s(universe_size);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  static Subset singleton(int universe_size, int element) {
    Subset s(universe_size);
    s.set(element);
    return s;
  }

  static Subset of(int universe_size, std::initializer_list<int> elements) {
    Subset s(universe_size);
    for (int e : elements) s.set(e);
    return s;
  }

  // Bit j of `mask` is element j. Usable whenever the universe fits in 64 bits.
  static Subset from_mask(int universe_size, std::uint64_t mask) {
    if (universe_size > 64) throw std::invalid_argument("Subset::from_mask: universe exceeds 64");
    Subset s(universe_size);
    if (universe_size > 0) {
      if (universe_size < 64 && (mask >> universe_size) != 0) {
        throw std::out_of_range("Subset::from_mask: mask has bits beyond the universe");
      }
      s.words_[0] = mask;
    } else if (mask != 0) {
      throw std::out_of_range("Subset::from_mask: mask has bits beyond the universe");
    }
    return s;
  }

  int universe_size() const { return n_; }

  bool test(int i) const {
    check_index(i);
    return (words_[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1u;
  }

  void set(int i) {
    check_index(i);
    words_[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (i % 64);
  }

  void reset(int i) {
    check_index(i);
    words_[static_cast<std::size_t>(i) / 64] &= ~(std::uint64_t{1} << (i % 64));
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  bool is_proper_nonempty() const {
    int c = count();
    return c > 0 && c < n_;
  }

  Subset complement() const {
    Subset s(n_);
    for (std::size_t k = 0; k < words_.size(); ++k) s.words_[k] = ~words_[k];
    s.trim();
    return s;
  }

  Subset operator|(const Subset& other) const {
    check_same_universe(other);
    Subset s(n_);
    for (std::size_t k = 0; k < words_.size(); ++k) s.words_[k] = words_[k] | other.words_[k];
    return s;
  }

  Subset& operator|=(const Subset& other) {
    check_same_universe(other);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }

  Subset operator&(const Subset& other) const {
    check_same_universe(other);
    Subset s(n_);
    for (std::size_t k = 0; k < words_.size(); ++k) s.words_[k] = words_[k] & other.words_[k];
    return s;
  }

  bool intersects(const Subset& other) const {
    check_same_universe(other);
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & other.words_[k]) return true;
    }
    return false;
  }

  std::uint64_t to_mask() const {
    if (n_ > 64) throw std::invalid_argument("Subset::to_mask: universe exceeds 64");
    return words_.empty() ? 0 : words_[0];
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w != 0) {
        int bit = std::countr_zero(w);
        fn(static_cast<int>(k * 64) + bit);
        w &= w - 1;
      }
    }
  }

  bool operator==(const Subset& other) const {
    return n_ == other.n_ && words_ == other.words_;
  }

  // Numeric order of the underlying mask; the canonical tie-break.
  bool operator<(const Subset& other) const {
    check_same_universe(other);
    for (std::size_t k = words_.size(); k-- > 0;) {
      if (words_[k] != other.words_[k]) return words_[k] < other.words_[k];
    }
    return false;
  }

 private:
  static std::size_t word_count(int n) { return (static_cast<std::size_t>(std::max(n, 0)) + 63) / 64; }

  void check_index(int i) const {
    if (i < 0 || i >= n_) throw std::out_of_range("Subset: element index out of range");
  }

  void check_same_universe(const Subset& other) const {
    if (n_ != other.n_) throw std::invalid_argument("Subset: universes differ");
  }

  void trim() {
    if (n_ % 64 != 0 && !words_.empty()) {
      words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    }
  }

  int n_;
  std::vector<std::uint64_t> words_;
};

// Labels of the members of x, in index order.
inline std::vector<std::string> member_labels(const GroundSet& ground, const Subset& x) {
  std::vector<std::string> out;
  x.for_each([&](int i) { out.push_back(ground.label(i)); });
  return out;
}

}  // namespace symmin
