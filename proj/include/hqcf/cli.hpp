#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hqcf {

enum class Command { expand, generate, verify_prop1, verify_prop2, verify_conj1, verify_conj2, exponent };

struct RunConfig {
  Command command = Command::expand;
  std::int64_t p = 0;
  std::size_t n = 200;
  bool json = false;
  bool quartic = false;
  std::optional<std::string> poly;
  std::optional<std::uint32_t> k, i, l;
  std::optional<std::int64_t> e1, e2;
  std::vector<std::int64_t> lambdas;
  std::vector<std::uint32_t> indices;  // i(1)..i(l) for generate
};

// Exit codes.
inline constexpr int exit_pass = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_usage = 2;

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a config and runs it.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Worker count for sweeps: HQCF_THREADS when set, else the hardware concurrency.
unsigned worker_count();

}  // namespace hqcf
