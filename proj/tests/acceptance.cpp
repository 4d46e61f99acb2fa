// Acceptance battery runner: one line per criterion, nonzero exit on any
// failure. Criterion 9 (report determinism) shells out to the CLI twice and
// compares bytes; the CLI path comes in via HELMSENS_CLI_PATH.

#include <array>
#include <cstdio>
#include <cstring>
#include <string>

#include "helmsens/battery.hpp"

namespace {

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string(HELMSENS_CLI_PATH) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), n);
  if (pclose(pipe) != 0) out += "<nonzero exit>";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  const helmsens::BatteryReport rep = helmsens::run_acceptance_battery(quick);

  bool all = true;
  int idx = 1;
  for (const auto& c : rep.criteria) {
    // criteria 1..8 in battery order
    std::printf("AC%d %s  (%s", idx, c.pass ? "PASS" : "FAIL", c.name.c_str());
    for (const auto& [k, v] : c.metrics)
      if (!c.pass) std::printf(" %s=%.3g", k.c_str(), v);
    std::printf(")\n");
    if (!c.note.empty()) std::printf("     note: %s\n", c.note.c_str());
    all = all && c.pass;
    ++idx;
  }

  const std::string a = run_cli("suite --quick");
  const std::string b = run_cli("suite --quick");
  const bool deterministic = !a.empty() && a == b;
  std::printf("AC9 %s  (suite --quick byte-identity, %zu bytes)\n",
              deterministic ? "PASS" : "FAIL", a.size());
  all = all && deterministic;

  bool covered = true;
  std::string missing;
  for (const auto& ce : rep.coverage) {
    if (!ce.covered) {
      covered = false;
      missing += " " + ce.formula;
    }
  }
  if (quick)
    std::printf("COVERAGE (quick mode, informational)%s\n",
                covered ? " complete" : (":" + missing).c_str());
  else {
    std::printf("COVERAGE %s%s\n", covered ? "PASS" : "FAIL",
                covered ? "" : (":" + missing).c_str());
    all = all && covered;
  }

  return all ? 0 : 1;
}
