#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>

#include "xham/formula.hpp"

namespace xham {

/// Either ⊥ (no x-model) or a maximum Hamming distance, optionally with a
/// witness pair of x-models at that distance.
///
/// ⊥ orders below every distance and absorbs addition: ⊥ + 1 = ⊥ and
/// ⊥ + k = ⊥. max_bot(⊥, z) = z for every z, including ⊥.
class HammingResult {
 public:
  using Witnesses = std::pair<Assignment, Assignment>;

  static HammingResult unsat() { return HammingResult(); }
  static HammingResult distance(int k, std::optional<Witnesses> w = std::nullopt) {
    HammingResult r;
    r.distance_ = k;
    r.witnesses_ = std::move(w);
    return r;
  }

  bool is_unsat() const { return !distance_.has_value(); }
  /// The distance; throws std::bad_optional_access on ⊥.
  int value() const { return distance_.value(); }
  const std::optional<Witnesses>& witnesses() const { return witnesses_; }
  void set_witnesses(Witnesses w) { witnesses_ = std::move(w); }
  void drop_witnesses() { witnesses_.reset(); }

  /// "UNSAT" or the decimal distance.
  std::string to_string() const;

  // Arithmetic and ordering look only at the status/distance. Witnesses are
  // dropped by +, kept from the winning operand by max_bot.
  friend HammingResult operator+(const HammingResult& a, int k);
  friend HammingResult operator+(const HammingResult& a, const HammingResult& b);
  friend bool operator==(const HammingResult& a, const HammingResult& b) {
    return a.distance_ == b.distance_;
  }
  friend std::strong_ordering operator<=>(const HammingResult& a, const HammingResult& b);

 private:
  std::optional<int> distance_;
  std::optional<Witnesses> witnesses_;
};

HammingResult max_bot(const HammingResult& a, const HammingResult& b);

template <typename... Rest>
HammingResult max_bot(const HammingResult& a, const HammingResult& b, const Rest&... rest) {
  return max_bot(max_bot(a, b), rest...);
}

}  // namespace xham
