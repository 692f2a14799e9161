#pragma once

#include <string>
#include <vector>

#include "operforge/json_io.hpp"

namespace operforge::cli {

constexpr int kDefaultPrecision = 12;

struct JobConfig {
  char family = 'A';
  int rank = 1;
  int precision = kDefaultPrecision;
  std::string group, command;  // e.g. "oper", "canonicalize"
  std::string input;           // path of the input document, if the command takes one
  std::string lambda;          // comma-separated rationals
  int depth = -1;
  int height = -1;
  bool loop_only = false;
  std::string delta = "0";
  bool emit_witness = false;
};

struct JobResult {
  int exit_code = 0;  // 0 ok, 1 parse error, 2 precondition, 3 precision
  io::Json doc;
  std::string error;
};

JobResult run(const JobConfig& cfg);
JobResult run(const JobConfig& cfg, const io::Json& input);

// Text form: one "key = <compact json>" line per top-level member.
std::string render_text(const io::Json& doc);

int main(int argc, char** argv);

}  // namespace operforge::cli
