#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permfe {

// A bijective word on {1..n}, stored in one-line notation.
class Permutation {
 public:
  Permutation() = default;

  // Throws InvalidInput unless `elems` is a bijection on {1..elems.size()}.
  explicit Permutation(std::vector<int> elems);

  static Permutation identity(int n);

  // Parses one-line notation. Entries may be separated by spaces and/or
  // commas ("2 5 1 4 3", "2,5,1,4,3"); a bare digit string such as "132" is
  // read one digit per entry.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(elems_.size()); }
  int operator[](int pos) const { return elems_[pos]; }
  std::span<const int> elems() const { return elems_; }

  Permutation reversed() const;
  Permutation complemented() const;

  // Space-separated one-line notation.
  std::string to_string() const;
  // Digit string, only meaningful for n <= 9 ("1243").
  std::string to_compact_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> elems_;
};

// The order-isomorphic permutation of a word of distinct positive integers.
// Throws InvalidInput on duplicates or non-positive entries.
Permutation reduce(std::span<const int> word);

// Number of index subsequences of `pi` whose reduction equals `tau`.
std::uint64_t count_occurrences(const Permutation& pi, const Permutation& tau);

// Pairs i < j with pi_i > pi_j.
std::uint64_t inversions(const Permutation& pi);

// Pattern families with a dedicated functional-equation engine, plus
// arbitrary explicit patterns (oracle only).
class PatternSpec {
 public:
  enum class Kind { Increasing, TailSwap, Cycle, Explicit };

  // 12...k, k >= 2.
  static PatternSpec increasing(int k);
  // 12...(k-2)(k)(k-1), k >= 3.
  static PatternSpec tail_swap(int k);
  // 23...k1, k >= 3.
  static PatternSpec cycle(int k);
  static PatternSpec explicit_pattern(Permutation tau);

  // Recognizes the named families from a one-line pattern ("132" is
  // TailSwap(3), "2341" is Cycle(4)); anything else becomes Explicit.
  static PatternSpec from_permutation(const Permutation& tau);
  static PatternSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  int length() const { return pattern_.size(); }
  const Permutation& permutation() const { return pattern_; }
  std::string name() const;

  friend bool operator==(const PatternSpec&, const PatternSpec&) = default;

 private:
  PatternSpec(Kind kind, Permutation pattern)
      : kind_(kind), pattern_(std::move(pattern)) {}

  Kind kind_ = Kind::Explicit;
  Permutation pattern_;
};

}  // namespace permfe
