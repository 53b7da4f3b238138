#pragma once

// Runs the dyckpaths binary through the shell, feeding `input` on stdin.
// DYCKPATHS_BINARY is set by the build.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace cli {

struct Result {
  int status = -1;
  std::string out;
  std::string err;
};

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string binary() { return std::string("'") + DYCKPATHS_BINARY + "'"; }

/// `line` is a full shell command line; stdin, stdout and stderr of the whole
/// line are redirected.
inline Result run_shell(const std::string& line, const std::string& input = "") {
  namespace fs = std::filesystem;
  static std::mt19937_64 names(std::random_device{}());
  const fs::path base = fs::temp_directory_path() / ("dyckpaths-" + std::to_string(names()));
  const fs::path in = base.string() + ".in", out = base.string() + ".out", err = base.string() + ".err";
  std::ofstream(in, std::ios::binary) << input;
  const std::string cmd =
      "( " + line + " ) <'" + in.string() + "' >'" + out.string() + "' 2>'" + err.string() + "'";
  const int raw = std::system(cmd.c_str());
  Result r;
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  fs::remove(in);
  fs::remove(out);
  fs::remove(err);
  return r;
}

inline Result run(const std::string& args, const std::string& input = "") { return run_shell(binary() + " " + args, input); }

}  // namespace cli
