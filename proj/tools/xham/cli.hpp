#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace xham::cli {

inline constexpr int kExitAnswer = 10;
inline constexpr int kExitUnsat = 20;
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;

/// One row of `bench` output.
struct BenchRecord {
  std::uint64_t id = 0;
  int n = 0;
  int m = 0;
  int len = 0;
  std::string algo;
  std::string result;  // distance or "unsat"
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  double ms = 0.0;
};

inline constexpr const char* kBenchHeader = "id,n,m,len,algo,result,nodes,leaves,ms";
std::string to_csv_row(const BenchRecord& r);

/// Runs one subcommand. `args` excludes the program name. Everything the
/// command prints goes to `out` in one write at the end; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xham::cli
