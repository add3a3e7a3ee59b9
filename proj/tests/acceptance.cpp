// Acceptance run: one PASS/FAIL line per criterion. argv[1] is the CLI binary
// used for the determinism criterion.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "lgschub/checks.hpp"

using namespace lgschub;

namespace {

struct Criterion {
  int id;
  std::string what;
  std::optional<double> bound;  // seconds
  std::function<bool(std::string&)> body;
};

long instances = 0;

bool suites_pass(std::initializer_list<const char*> names, int n, CheckOptions opt, std::string& why) {
  bool ok = true;
  for (const char* s : names) {
    Json r = run_checks(s, n, opt);
    for (const auto& run : r["runs"]) instances += run["instances"].get<long>();
    if (!r["passed"].get<bool>()) {
      ok = false;
      why += std::string(s) + ": " + r["failures"][0].dump() + "; ";
    }
  }
  return ok;
}

std::optional<std::string> capture(const std::string& cmd) {
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) return std::nullopt;
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
  if (::pclose(p) != 0) return std::nullopt;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "./lgschub";
  CheckOptions base{.seed = 20240601, .points = 5, .parallelism = 4};

  std::vector<Criterion> criteria = {
      {1, "bijection round trips for n <= 8 and the n=5 example", 1.0,
       [&](std::string& why) { return suites_pass({"bijection"}, 8, base, why); }},
      {2, "restriction table satisfies the recurrence, n <= 5, 5 points per column", 60.0,
       [&](std::string& why) { return suites_pass({"recurrence"}, 5, base, why); }},
      {3, "diagonal and divisor closed forms, n <= 5, (5,3) diagonal", std::nullopt,
       [&](std::string& why) { return suites_pass({"closedforms"}, 5, base, why); }},
      {4, "factorial Q vs tableau oracle, n = 4, 20 points", 30.0,
       [&](std::string& why) {
         CheckOptions o = base;
         o.points = 20;
         return suites_pass({"oracle"}, 4, o, why);
       }},
      {5, "Pieri, generating function, rectangle, square, vanishing, n <= 4", std::nullopt,
       [&](std::string& why) { return suites_pass({"pieri", "genfun", "rectangle", "square", "vanishing"}, 4, base, why); }},
      {6, "Giambelli Pfaffian, n <= 4", std::nullopt,
       [&](std::string& why) { return suites_pass({"giambelli"}, 4, base, why); }},
      {7, "structure constants and positivity, n <= 3", 30.0,
       [&](std::string& why) { return suites_pass({"structure", "positivity"}, 3, base, why); }},
      {8, "presentation, n <= 3", std::nullopt,
       [&](std::string& why) { return suites_pass({"presentation"}, 3, base, why); }},
      {9, "check --suite all --n 4 --seed 42 is byte-identical across runs", std::nullopt,
       [&](std::string& why) {
         std::string cmd = "'" + cli + "' check --suite all --n 4 --seed 42";
         auto a = capture(cmd), b = capture(cmd);
         if (!a || !b) {
           why = "CLI run failed";
           return false;
         }
         if (*a != *b) why = "reports differ";
         return *a == *b && !a->empty();
       }},
  };

  int failed = 0;
  for (auto& c : criteria) {
    std::string why;
    instances = 0;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.body(why);
    } catch (const std::exception& e) {
      why = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && c.bound && secs >= *c.bound) {
      ok = false;
      why = "over time bound";
    }
    char line[256];
    if (c.bound)
      std::snprintf(line, sizeof line, "%s %d  %.2fs (bound %.0fs)  ", ok ? "PASS" : "FAIL", c.id, secs, *c.bound);
    else
      std::snprintf(line, sizeof line, "%s %d  %.2fs  ", ok ? "PASS" : "FAIL", c.id, secs);
    if (instances) std::snprintf(line + std::strlen(line), sizeof line - std::strlen(line), "%ld instances  ", instances);
    std::cout << line << c.what << (why.empty() ? "" : "  [" + why + "]") << std::endl;
    failed += !ok;
  }
  std::cout << (failed ? "FAILED " + std::to_string(failed) + " of 9" : "all 9 criteria pass") << std::endl;
  return failed ? 1 : 0;
}
