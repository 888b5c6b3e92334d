#include "xham/hamming_result.hpp"

namespace xham {

std::string HammingResult::to_string() const {
  return is_unsat() ? std::string("UNSAT") : std::to_string(*distance_);
}

HammingResult operator+(const HammingResult& a, int k) {
  if (a.is_unsat()) return HammingResult::unsat();
  return HammingResult::distance(*a.distance_ + k);
}

HammingResult operator+(const HammingResult& a, const HammingResult& b) {
  if (a.is_unsat() || b.is_unsat()) return HammingResult::unsat();
  return HammingResult::distance(*a.distance_ + *b.distance_);
}

std::strong_ordering operator<=>(const HammingResult& a, const HammingResult& b) {
  if (a.is_unsat() || b.is_unsat()) return !a.is_unsat() <=> !b.is_unsat();
  return *a.distance_ <=> *b.distance_;
}

HammingResult max_bot(const HammingResult& a, const HammingResult& b) {
  return b > a ? b : a;
}

}  // namespace xham
