#include "xham/tau.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace xham {

double tau_polynomial(std::span<const int> decrements, double x) {
  double s = 1.0;
  for (int r : decrements) s -= std::pow(x, -r);
  return s;
}

double tau_root(std::span<const int> decrements) {
  if (decrements.empty()) throw std::invalid_argument("tau_root: empty branch vector");
  for (int r : decrements)
    if (r < 1) throw std::invalid_argument("tau_root: decrements must be >= 1");
  if (decrements.size() == 1) return 1.0;

  // f is increasing on (1, inf), f(1) = 1 - k < 0 and f(k+1) > 0 since every
  // term is at most 1/(k+1).
  double lo = 1.0;
  double hi = static_cast<double>(decrements.size()) + 1.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (tau_polynomial(decrements, mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

namespace {

int parse_positive(std::string_view tok, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v < 1)
    throw std::invalid_argument("parse_branch_spec: bad token '" + std::string(whole) + "'");
  return v;
}

}  // namespace

BranchVector parse_branch_spec(std::string_view text) {
  BranchVector out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    const auto caret = tok.find('^');
    if (caret == std::string::npos) {
      out.decrements.push_back(parse_positive(tok, tok));
      continue;
    }
    const std::string_view view(tok);
    const int r = parse_positive(view.substr(0, caret), tok);
    const int k = parse_positive(view.substr(caret + 1), tok);
    out.decrements.insert(out.decrements.end(), static_cast<std::size_t>(k), r);
  }
  if (out.decrements.empty()) throw std::invalid_argument("parse_branch_spec: empty spec");
  return out;
}

double root_power(double n, int l) {
  if (l < 1) throw std::invalid_argument("root_power: exponent must be >= 1");
  return std::pow(n, 1.0 / l);
}

}  // namespace xham
