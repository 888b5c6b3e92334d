#include "xham/formula.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <random>
#include <sstream>

namespace xham {

Formula Formula::unsat(std::int32_t num_vars) {
  Formula f;
  f.num_vars = num_vars;
  f.clauses.emplace_back();
  return f;
}

std::vector<Variable> Formula::variables() const {
  std::vector<bool> seen(static_cast<std::size_t>(num_vars) + 1, false);
  for (const auto& c : clauses)
    for (Literal l : c) {
      auto v = static_cast<std::size_t>(l.var());
      if (v >= seen.size()) seen.resize(v + 1, false);
      seen[v] = true;
    }
  std::vector<Variable> out;
  for (std::size_t v = 1; v < seen.size(); ++v)
    if (seen[v]) out.push_back(static_cast<Variable>(v));
  return out;
}

std::vector<int> Formula::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(num_vars) + 1, 0);
  std::vector<std::size_t> stamp(deg.size(), 0);
  std::size_t id = 0;
  for (const auto& c : clauses) {
    ++id;
    for (Literal l : c) {
      auto v = static_cast<std::size_t>(l.var());
      if (stamp[v] == id) continue;
      stamp[v] = id;
      ++deg[v];
    }
  }
  return deg;
}

std::vector<Variable> Assignment::assigned_variables() const {
  std::vector<Variable> out;
  for (std::size_t v = 1; v < values_.size(); ++v)
    if (values_[v]) out.push_back(static_cast<Variable>(v));
  return out;
}

int hamming_distance(const Assignment& a, const Assignment& b) {
  int d = 0;
  const auto n = std::min(a.num_vars(), b.num_vars());
  for (Variable v = 1; v <= n; ++v) {
    auto x = a.get(v), y = b.get(v);
    if (x && y && *x != *y) ++d;
  }
  return d;
}

namespace {

bool parse_int(std::string_view tok, long long& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

}  // namespace

Formula parse_formula(std::istream& in) {
  Formula f;
  bool have_header = false;
  long long declared_clauses = 0;
  Clause current;
  bool open = false;
  int open_line = 0;
  int lineno = 0;
  std::string line;

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok[0] == 'c') continue;
    if (tok == "p") {
      if (have_header) throw ParseError(lineno, "duplicate header");
      std::string kind, extra;
      std::string ntok, mtok;
      if (!(ls >> kind >> ntok >> mtok) || kind != "xsat")
        throw ParseError(lineno, "expected header 'p xsat <vars> <clauses>'");
      long long n = 0, m = 0;
      if (!parse_int(ntok, n) || !parse_int(mtok, m) || n < 0 || m < 0 || n > INT32_MAX)
        throw ParseError(lineno, "malformed header counts");
      if (ls >> extra) throw ParseError(lineno, "trailing tokens after header");
      f.num_vars = static_cast<std::int32_t>(n);
      declared_clauses = m;
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(lineno, "clause data before 'p xsat' header");

    // Re-scan the line, including the first token.
    std::istringstream body(line);
    while (body >> tok) {
      long long k = 0;
      if (!parse_int(tok, k)) throw ParseError(lineno, "invalid literal '" + tok + "'");
      if (tok == "-0") throw ParseError(lineno, "variable index 0");
      if (k == 0) {
        if (static_cast<long long>(f.clauses.size()) >= declared_clauses)
          throw ParseError(lineno, "more clauses than declared in header");
        f.clauses.push_back(std::move(current));
        current.clear();
        open = false;
        continue;
      }
      const long long var = k < 0 ? -k : k;
      if (var > f.num_vars)
        throw ParseError(lineno, "variable " + std::to_string(var) + " exceeds declared count " +
                                     std::to_string(f.num_vars));
      if (!open) open_line = lineno;
      open = true;
      current.push_back(Literal::from_dimacs(static_cast<std::int32_t>(k)));
    }
  }
  if (!have_header) throw ParseError(std::max(lineno, 1), "missing 'p xsat' header");
  if (open) throw ParseError(open_line, "clause is missing its terminating 0");
  if (static_cast<long long>(f.clauses.size()) != declared_clauses)
    throw ParseError(lineno, "header declares " + std::to_string(declared_clauses) +
                                 " clauses, found " + std::to_string(f.clauses.size()));
  return f;
}

Formula parse_formula(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_formula(in);
}

std::string serialize_formula(const Formula& f) {
  std::int32_t n = f.num_vars;
  if (n == 0)
    for (const auto& c : f.clauses)
      for (Literal l : c) n = std::max(n, l.var());
  std::ostringstream out;
  out << "p xsat " << n << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (Literal l : c) out << l.dimacs() << ' ';
    out << "0\n";
  }
  return out.str();
}

std::vector<Formula> connected_components(const Formula& f) {
  // Union-find over variables; empty clauses form their own component.
  std::vector<Variable> parent(static_cast<std::size_t>(f.num_vars) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Variable v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      auto& p = parent[static_cast<std::size_t>(v)];
      p = parent[static_cast<std::size_t>(p)];
      v = p;
    }
    return v;
  };
  for (const auto& c : f.clauses)
    for (std::size_t i = 1; i < c.size(); ++i) {
      auto a = find(c[0].var()), b = find(c[i].var());
      if (a != b) parent[static_cast<std::size_t>(b)] = a;
    }

  std::vector<Formula> out;
  std::vector<int> slot(parent.size(), -1);
  for (const auto& c : f.clauses) {
    if (c.empty()) {
      Formula g;
      g.num_vars = f.num_vars;
      g.clauses.push_back(c);
      out.push_back(std::move(g));
      continue;
    }
    auto root = static_cast<std::size_t>(find(c[0].var()));
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.size());
      out.emplace_back().num_vars = f.num_vars;
    }
    out[static_cast<std::size_t>(slot[root])].clauses.push_back(c);
  }
  return out;
}

bool verify_xmodel(const Formula& f, const Assignment& a) {
  for (const auto& c : f.clauses)
    for (Literal l : c)
      if (l.var() > a.num_vars() || !a.assigned(l.var()))
        throw std::invalid_argument("verify_xmodel: variable " + std::to_string(l.var()) +
                                    " is unassigned");
  return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const Clause& c) {
    return std::count_if(c.begin(), c.end(), [&](Literal l) { return l.holds(a.value(l.var())); }) == 1;
  });
}

Formula random_formula(int n, int m, int len, std::uint64_t seed) {
  if (n < 0 || m < 0 || len < 0) throw std::invalid_argument("random_formula: negative size");
  if (len > n) throw std::invalid_argument("random_formula: clause length exceeds variable count");
  std::mt19937_64 rng(seed);
  auto below = [&](std::uint64_t bound) { return rng() % bound; };

  Formula f;
  f.num_vars = n;
  std::vector<Variable> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  for (int i = 0; i < m; ++i) {
    Clause c;
    for (int j = 0; j < len; ++j) {
      auto k = static_cast<std::size_t>(j) + below(static_cast<std::uint64_t>(n - j));
      std::swap(pool[static_cast<std::size_t>(j)], pool[k]);
      c.emplace_back(pool[static_cast<std::size_t>(j)], (rng() & 1) == 0);
    }
    f.clauses.push_back(std::move(c));
  }
  return f;
}

}  // namespace xham
