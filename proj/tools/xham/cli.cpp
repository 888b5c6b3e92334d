#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "xham/formula.hpp"
#include "xham/max_hamming_p.hpp"
#include "xham/max_hamming_q.hpp"
#include "xham/oracle.hpp"
#include "xham/solver.hpp"
#include "xham/tau.hpp"

namespace xham::cli {

namespace {

// Raised for usage-level failures inside a subcommand: exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Formula read_formula(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  try {
    return parse_formula(in);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string v_line(const Assignment& a, const std::vector<Variable>& vars) {
  std::ostringstream s;
  s << 'v';
  for (Variable v : vars) s << ' ' << (a.value(v) ? v : -v);
  s << " 0";
  return s.str();
}

// Variables declared in the header but absent from every clause.
std::vector<Variable> unused_variables(const Formula& f) {
  std::vector<bool> used(static_cast<std::size_t>(f.num_vars) + 1, false);
  for (Variable v : f.variables()) used[static_cast<std::size_t>(v)] = true;
  std::vector<Variable> out;
  for (Variable v = 1; v <= f.num_vars; ++v)
    if (!used[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

struct MaxhamOptions {
  std::string algo = "q";
  std::string file;
  bool witness = false;
  bool stats = false;
  bool count_free = false;
};

int cmd_maxham(const MaxhamOptions& o, std::ostream& out) {
  const auto f = read_formula(o.file);
  std::ostringstream stats;
  HammingResult r = HammingResult::unsat();

  if (o.algo == "q") {
    NodeCounter counter;
    r = max_hamming_q(f, &counter);
    stats << "c nodes " << counter.nodes << "\nc leaves " << counter.leaves << '\n';
    if (o.witness && !r.is_unsat()) {
      auto p = max_hamming_p(f);
      if (p != r)
        throw std::logic_error("algorithms disagree: q=" + r.to_string() + " p=" + p.to_string());
      r = p;
    }
  } else if (o.algo == "p") {
    PStats st;
    r = max_hamming_p(f, &st);
    stats << "c subsets " << st.subsets_tested << "\nc solver_calls " << st.solver_calls << '\n';
  } else if (o.algo == "brute") {
    r = max_hamming_brute(f);
    stats << "c variables " << f.variables().size() << '\n';
  } else {
    throw UsageError("unknown algorithm '" + o.algo + "'");
  }

  if (o.stats) out << stats.str();
  if (r.is_unsat()) {
    out << "s UNSATISFIABLE\n";
    return kExitUnsat;
  }

  auto vars = f.variables();
  int distance = r.value();
  if (o.count_free) {
    const auto unused = unused_variables(f);
    distance += static_cast<int>(unused.size());
    vars.insert(vars.end(), unused.begin(), unused.end());
    std::sort(vars.begin(), vars.end());
    if (r.witnesses()) {
      auto w = *r.witnesses();
      for (Variable v : unused) {
        w.first.set(v, false);
        w.second.set(v, true);
      }
      r.set_witnesses(std::move(w));
    }
  }
  out << "s MAXHAM " << distance << '\n';
  if (o.witness) {
    const auto& w = r.witnesses().value();
    out << v_line(w.first, vars) << '\n' << v_line(w.second, vars) << '\n';
  }
  return kExitAnswer;
}

int cmd_solve(const std::string& file, std::ostream& out) {
  const auto f = read_formula(file);
  auto model = find_xmodel(f);
  if (!model) {
    out << "s UNSAT\n";
    return kExitUnsat;
  }
  out << "s XSAT\n" << v_line(*model, f.variables()) << '\n';
  return kExitAnswer;
}

int cmd_models(const std::string& file, std::ostream& out) {
  const auto f = read_formula(file);
  std::vector<Assignment> models;
  try {
    models = enumerate_xmodels(f);
  } catch (const OracleCapExceeded& e) {
    throw UsageError(e.what());
  }
  const auto vars = f.variables();
  out << "c models " << models.size() << '\n';
  for (const auto& m : models) out << v_line(m, vars) << '\n';
  return kExitOk;
}

int cmd_tau(const std::vector<std::string>& tokens, std::ostream& out) {
  std::string joined;
  for (const auto& t : tokens) joined += t + ' ';
  std::vector<std::string> specs;
  std::string cur;
  for (char c : joined) {
    if (c == ',') {
      specs.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  specs.push_back(cur);

  out << std::fixed << std::setprecision(6);
  for (const auto& s : specs) {
    try {
      out << tau_root(parse_branch_spec(s)) << '\n';
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return kExitOk;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

std::uint64_t default_seed(std::uint64_t given, bool set) {
  if (set) return given;
  if (const char* env = std::getenv("XHAM_SEED")) return std::strtoull(env, nullptr, 10);
  return 1;
}

struct GenOptions {
  int vars = 0;
  int clauses = 0;
  int len = 3;
  std::uint64_t seed = 1;
  bool seed_set = false;
  std::string output;
};

Formula generate(const GenOptions& o, std::uint64_t seed) {
  try {
    return random_formula(o.vars, o.clauses, o.len, seed);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_gen(const GenOptions& o, std::ostream& out) {
  write_text(o.output, serialize_formula(generate(o, default_seed(o.seed, o.seed_set))), out);
  return kExitOk;
}

BenchRecord bench_one(const Formula& f, const GenOptions& o, std::uint64_t id, const std::string& algo) {
  BenchRecord rec;
  rec.id = id;
  rec.n = o.vars;
  rec.m = o.clauses;
  rec.len = o.len;
  rec.algo = algo;
  const auto start = std::chrono::steady_clock::now();
  HammingResult r = HammingResult::unsat();
  if (algo == "q") {
    NodeCounter c;
    r = max_hamming_q(f, &c);
    rec.nodes = c.nodes;
    rec.leaves = c.leaves;
  } else if (algo == "p") {
    PStats st;
    r = max_hamming_p(f, &st);
    rec.nodes = st.subsets_tested;
    rec.leaves = st.solver_calls;
  } else if (algo == "brute") {
    r = max_hamming_brute(f);
    rec.nodes = std::uint64_t{1} << f.variables().size();
    rec.leaves = enumerate_xmodels(f).size();
  } else {
    throw UsageError("unknown algorithm '" + algo + "'");
  }
  rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  rec.result = r.is_unsat() ? "unsat" : std::to_string(r.value());
  return rec;
}

int cmd_bench(const GenOptions& o, std::vector<std::string> algos, int runs, std::ostream& out) {
  if (algos.empty()) algos = {"q"};
  const auto seed = default_seed(o.seed, o.seed_set);
  std::ostringstream csv;
  csv << kBenchHeader << '\n';
  for (int run = 0; run < runs; ++run) {
    const auto f = generate(o, seed + static_cast<std::uint64_t>(run));
    for (const auto& a : algos) csv << to_csv_row(bench_one(f, o, static_cast<std::uint64_t>(run), a)) << '\n';
  }
  write_text(o.output, csv.str(), out);
  return kExitOk;
}

Assignment parse_v_line(const std::string& line, const Formula& f, std::vector<Variable>& vars) {
  std::istringstream in(line.substr(1));
  Assignment a(f.num_vars);
  long long k = 0;
  bool terminated = false;
  while (in >> k) {
    if (k == 0) {
      terminated = true;
      break;
    }
    const auto v = static_cast<Variable>(k < 0 ? -k : k);
    if (v > f.num_vars) throw UsageError("witness mentions variable " + std::to_string(v) + " beyond n");
    if (a.assigned(v)) throw UsageError("witness assigns variable " + std::to_string(v) + " twice");
    a.set(v, k > 0);
    vars.push_back(v);
  }
  if (!terminated) throw UsageError("witness line is not terminated by 0");
  std::sort(vars.begin(), vars.end());
  return a;
}

int cmd_verify(const std::string& file, const std::string& witness_file, std::ostream& out) {
  const auto f = read_formula(file);
  std::ifstream in(witness_file);
  if (!in) throw UsageError("cannot read '" + witness_file + "'");
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] == 'v') lines.push_back(line);
  if (lines.size() != 2)
    throw UsageError("expected two witness 'v' lines, found " + std::to_string(lines.size()));

  std::vector<Variable> vars1, vars2;
  const auto m1 = parse_v_line(lines[0], f, vars1);
  const auto m2 = parse_v_line(lines[1], f, vars2);
  if (vars1 != vars2) throw UsageError("witness lines assign different variable sets");
  for (Variable v : f.variables())
    if (!m1.assigned(v)) throw UsageError("witnesses do not assign variable " + std::to_string(v));

  for (const auto* m : {&m1, &m2})
    if (!verify_xmodel(f, *m)) {
      out << "s REJECTED\nc witness " << (m == &m1 ? 1 : 2) << " is not an x-model\n";
      return kExitUnsat;
    }
  out << "s VERIFIED " << hamming_distance(m1, m2) << '\n';
  return kExitAnswer;
}

}  // namespace

std::string to_csv_row(const BenchRecord& r) {
  std::ostringstream s;
  s << r.id << ',' << r.n << ',' << r.m << ',' << r.len << ',' << r.algo << ',' << r.result << ',' << r.nodes
    << ',' << r.leaves << ',' << std::fixed << std::setprecision(3) << r.ms;
  return s.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximum Hamming distance between exact-satisfiability models", "xham"};
  app.require_subcommand(1);

  std::string file, witness_file;
  std::vector<std::string> tau_tokens;

  auto* solve = app.add_subcommand("solve", "Find one x-model");
  solve->add_option("file", file, "Instance file")->required();

  MaxhamOptions mh;
  auto* maxham = app.add_subcommand("maxham", "Maximum Hamming distance between two x-models");
  maxham->add_option("--algo", mh.algo, "p, q or brute")->check(CLI::IsMember({"p", "q", "brute"}));
  maxham->add_flag("--witness", mh.witness, "Print a witness pair");
  maxham->add_flag("--stats", mh.stats, "Print search statistics as comments");
  maxham->add_flag("--count-free", mh.count_free, "Count declared variables that occur in no clause");
  maxham->add_option("file", mh.file, "Instance file")->required();

  auto* models = app.add_subcommand("models", "List every x-model");
  models->add_option("file", file, "Instance file")->required();

  auto* tau = app.add_subcommand("tau", "Branching-number roots; specs separated by ','");
  tau->add_option("spec", tau_tokens, "Tokens r or r^k")->required();

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--vars", gen.vars)->required();
  gen_cmd->add_option("--clauses", gen.clauses)->required();
  gen_cmd->add_option("--len", gen.len)->required();
  gen_cmd->add_option("--seed", gen.seed)->each([&](const std::string&) { gen.seed_set = true; });
  gen_cmd->add_option("-o,--output", gen.output);

  GenOptions bench_gen;
  std::vector<std::string> bench_algos;
  int runs = 1;
  auto* bench = app.add_subcommand("bench", "Time algorithms on random instances, CSV output");
  bench->add_option("--algo", bench_algos, "Repeatable: p, q, brute")
      ->check(CLI::IsMember({"p", "q", "brute"}));
  bench->add_option("--runs", runs)->check(CLI::PositiveNumber);
  bench->add_option("--vars", bench_gen.vars)->required();
  bench->add_option("--clauses", bench_gen.clauses)->required();
  bench->add_option("--len", bench_gen.len)->required();
  bench->add_option("--seed", bench_gen.seed)->each([&](const std::string&) { bench_gen.seed_set = true; });
  bench->add_option("-o,--output", bench_gen.output);

  auto* verify = app.add_subcommand("verify", "Check a witness pair and print its distance");
  verify->add_option("file", file, "Instance file")->required();
  verify->add_option("witness", witness_file, "File with two v lines")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitUsage;
  try {
    if (*solve)
      code = cmd_solve(file, buffer);
    else if (*maxham)
      code = cmd_maxham(mh, buffer);
    else if (*models)
      code = cmd_models(file, buffer);
    else if (*tau)
      code = cmd_tau(tau_tokens, buffer);
    else if (*gen_cmd)
      code = cmd_gen(gen, buffer);
    else if (*bench)
      code = cmd_bench(bench_gen, bench_algos, runs, buffer);
    else if (*verify)
      code = cmd_verify(file, witness_file, buffer);
  } catch (const UsageError& e) {
    err << "xham: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "xham: internal error: " << e.what() << '\n';
    return kExitUsage;
  }
  out << buffer.str() << std::flush;
  return code;
}

}  // namespace xham::cli
