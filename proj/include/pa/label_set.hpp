#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace pa {

/// An element of the ground set X = {0, ..., n}.
using Label = int;

/// Largest n the bitmask encoding can hold (labels 0..kMaxN).
inline constexpr int kMaxN = 62;

/// A finite subset of X, stored as a bitmask.
class LabelSet {
 public:
  constexpr LabelSet() = default;

  static constexpr LabelSet from_bits(std::uint64_t bits) {
    LabelSet s;
    s.bits_ = bits;
    return s;
  }

  static LabelSet of(std::initializer_list<Label> labels);
  static LabelSet of(const std::vector<Label>& labels);

  /// {0, ..., n}
  static LabelSet ground(int n);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr bool contains(Label x) const {
    return x >= 0 && x <= kMaxN && ((bits_ >> x) & 1U) != 0;
  }

  constexpr bool subset_of(LabelSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr bool proper_subset_of(LabelSet other) const {
    return subset_of(other) && bits_ != other.bits_;
  }

  LabelSet with(Label x) const;

  /// Ascending list of members.
  std::vector<Label> labels() const;

  /// "{0,1,3}"
  std::string to_string() const;

  friend constexpr bool operator==(LabelSet, LabelSet) = default;

  friend constexpr LabelSet operator|(LabelSet a, LabelSet b) {
    return from_bits(a.bits_ | b.bits_);
  }
  friend constexpr LabelSet operator&(LabelSet a, LabelSet b) {
    return from_bits(a.bits_ & b.bits_);
  }
  friend constexpr LabelSet operator-(LabelSet a, LabelSet b) {
    return from_bits(a.bits_ & ~b.bits_);
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic comparison of the ascending member lists.
bool lex_less(LabelSet a, LabelSet b);

}  // namespace pa
