// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// fails. Criteria 1-8 exercise the library directly at fixed sizes and time
// budgets; criterion 9 runs the CLI against golden files twice to pin byte
// determinism. Usage: acceptance <kbc-binary> <golden-dir>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kbc/verify.hpp"

namespace {

struct Criterion {
  std::string label;
  kbc::CheckResult result;
  double budget_ms = 0;  // 0 = no stated budget
};

bool passed(const Criterion& c) {
  if (c.result.violations != 0) return false;
  if (c.budget_ms > 0 && c.result.elapsed_ms >= c.budget_ms) return false;
  return true;
}

void print_line(int index, const Criterion& c) {
  std::string budget;
  if (c.budget_ms > 0)
    budget = ", budget " + std::to_string(static_cast<long>(c.budget_ms)) + " ms";
  std::printf("[%s] %d %s: cases=%lld violations=%lld (%.2f ms%s)\n",
              passed(c) ? "PASS" : "FAIL", index, c.label.c_str(), c.result.cases,
              c.result.violations, c.result.elapsed_ms, budget.c_str());
  for (const std::string& n : c.result.notes) std::printf("       note: %s\n", n.c_str());
}

std::optional<std::string> run_command(const std::string& command) {
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return std::nullopt;
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  if (status != 0) return std::nullopt;
  return out;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Golden-file determinism for one invocation of every subcommand.
kbc::CheckResult check_cli_golden(const std::string& cli, const std::string& golden_dir) {
  kbc::CheckResult r;
  r.name = "cli-golden";
  kbc::detail::Timer t(r);
  const struct {
    const char* name;
    const char* args;
  } invocations[] = {
      {"classify.json", "classify 'ab^3ab^3'"},
      {"act.json", "act 'y tb-' 'ab^3'"},
      {"canonicalize.json", "canonicalize 'ab^3'"},
      {"rep.json", "rep 'ab^-1a^-1b^-1'"},
      {"enumerate.json", "enumerate --max-len 3"},
      {"kernel_witness.json", "kernel-witness"},
      {"verify.json", "verify --max-n 3 --max-len 6 --max-power 2 --alpha 2 --beta 3"},
  };
  for (const auto& inv : invocations) {
    ++r.cases;
    std::string command = "'" + cli + "' " + inv.args;
    std::optional<std::string> first = run_command(command);
    std::optional<std::string> second = run_command(command);
    std::optional<std::string> golden = read_file(golden_dir + "/" + inv.name);
    if (!first || !second) {
      r.fail(std::string(inv.name) + ": command failed");
      continue;
    }
    if (*first != *second) {
      r.fail(std::string(inv.name) + ": output differs between runs");
      continue;
    }
    if (!golden) {
      r.fail(std::string(inv.name) + ": golden file missing");
      continue;
    }
    if (*first != *golden) r.fail(std::string(inv.name) + ": output differs from golden file");
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <kbc-binary> <golden-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string golden_dir = argv[2];
  const kbc::Params params(2, 3);

  std::vector<Criterion> criteria;
  criteria.push_back({"generator tables", kbc::check_generator_tables(), 1});
  criteria.push_back({"orbit closure |n|<=20", kbc::check_scc_closure(20), 1000});
  criteria.push_back(
      {"reachability |n|<=20, 100 conjugates", kbc::check_reachability(20, 100, 0x5cc0u), 5000});
  criteria.push_back({"classifier vs enumeration, length<=10",
                      kbc::check_oracle_agreement(10), 60000});
  criteria.push_back({"ten classes of length 4", kbc::check_length4_count(), 0});
  criteria.push_back({"representation, |n|<=10, powers<=5, (2,3)",
                      kbc::check_representation(10, 5, params), 10000});
  criteria.push_back({"kernel witness", kbc::check_kernel_witness(), 1});
  criteria.push_back(
      {"algebraic invariants, 200 samples", kbc::check_algebraic_invariants(200, 0xa1b2u), 5000});
  criteria.push_back({"CLI golden determinism", check_cli_golden(cli, golden_dir), 0});

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    print_line(static_cast<int>(i) + 1, criteria[i]);
    if (!passed(criteria[i])) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  else std::printf("all %zu criteria passed\n", criteria.size());
  return failures == 0 ? 0 : 1;
}
