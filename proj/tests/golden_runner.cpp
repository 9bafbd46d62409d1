// Replays recorded command lines against the CLI binary and compares the
// output token streams.  Usage: golden_runner <cli-path> <fixtures-file>
//
// Fixture lines look like
//     dim2 L2(96;34^8) | 1
// with the expected stdout to the right of the bar.  Blank lines and lines
// starting with '#' are skipped.  Every command is expected to exit 0.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  out += "'";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: golden_runner <cli> <fixtures>\n";
    return 2;
  }
  std::ifstream in(argv[2]);
  if (!in) {
    std::cerr << "cannot open " << argv[2] << "\n";
    return 2;
  }

  int failures = 0;
  int total = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const std::size_t bar = line.find('|');
    if (bar == std::string::npos) {
      std::cerr << "bad fixture line: " << line << "\n";
      ++failures;
      continue;
    }
    const std::string lhs = line.substr(0, bar);
    const std::string rhs = line.substr(bar + 1);
    ++total;

    std::string cmd = shell_quote(argv[1]);
    for (const std::string& t : tokens(lhs)) cmd += " " + shell_quote(t);

    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
      std::cerr << "FAIL: could not run: " << cmd << "\n";
      ++failures;
      continue;
    }
    std::string output;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
    const int status = pclose(pipe);

    const std::vector<std::string> want = tokens(rhs);
    const std::vector<std::string> have = tokens(output);
    bool ok = (want == have);
    if (status == -1 || !WIFEXITED(status) || WEXITSTATUS(status) != 0)
      ok = false;
    if (ok) {
      std::cout << "PASS: " << lhs << "\n";
    } else {
      ++failures;
      std::cout << "FAIL: " << lhs << "\n  expected: " << rhs
                << "\n  got:      " << output
                << "  exit:     " << (WIFEXITED(status) ? WEXITSTATUS(status) : -1)
                << "\n";
    }
  }
  std::cout << (total - failures) << "/" << total << " sessions matched\n";
  return failures == 0 ? 0 : 1;
}
