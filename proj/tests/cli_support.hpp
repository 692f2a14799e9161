#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace testing {

struct CliRun {
  int code = -1;
  std::string out, err;
};

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

// Runs the CLI from `cwd` with a clean OPERFORGE_PRECISION unless `env` sets it.
inline CliRun run_cli(const std::string& args, const std::string& cwd, const std::string& env = "") {
  static int counter = 0;
  auto err = std::filesystem::temp_directory_path() /
             ("operforge_err_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
  std::string cmd = "cd '" + cwd + "' && env -u OPERFORGE_PRECISION " + env + " '" + OPERFORGE_CLI + "' " + args +
                    " 2>'" + err.string() + "'";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err);
  std::filesystem::remove(err);
  return r;
}

struct GoldenCase {
  std::string name;
  int code = 0;
  std::string args;
};

inline std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t"), b = s.find_last_not_of(" \t");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

inline std::vector<GoldenCase> golden_cases() {
  std::ifstream f(std::string(OPERFORGE_GOLDEN_DIR) + "/cases.txt");
  std::vector<GoldenCase> out;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto a = line.find('|'), b = line.find('|', a + 1);
    out.push_back({trim(line.substr(0, a)), std::stoi(line.substr(a + 1, b - a - 1)), trim(line.substr(b + 1))});
  }
  return out;
}

inline std::string golden_inputs() { return std::string(OPERFORGE_GOLDEN_DIR) + "/inputs"; }
inline std::string golden_expected(const GoldenCase& c) {
  return slurp(std::string(OPERFORGE_GOLDEN_DIR) + "/" + c.name + ".out");
}

}  // namespace testing
