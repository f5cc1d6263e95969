#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "monoendo/char_param.hpp"
#include "monoendo/error.hpp"
#include "monoendo/frobenius.hpp"

namespace monoendo {

inline constexpr const char* kReportSchema = "monoendo.report/1";

// InputError tied to a line of the config text (0 when unknown).
class ConfigError : public InputError {
 public:
  ConfigError(const std::string& source, int line, const std::string& msg);
  int line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  int line_;
  std::string detail_;
};

struct TwistSpec {
  TwistKind kind = TwistKind::frobenius;
  std::string delta = "split";      // split | identity | unitary | opposition | permutation | matrix
  std::vector<int> permutation;     // 0-based, when delta = permutation
  IntMat matrix;                    // when delta = matrix
  std::optional<std::int64_t> q;
};

struct Config {
  std::string source;
  std::string sha256;
  std::string cartan_type;
  std::string isogeny;  // simply_connected | adjoint | custom
  DatumPtr datum;
  CharParam chi;
  std::optional<TwistSpec> twist;
  std::optional<std::int64_t> q;
};

// JSON document: {"cartan_type", "isogeny" | "lattice", "chi", "twist"?, "q"?}.
Config parse_config(const std::string& text, const std::string& source = "<config>");
Config load_config(const std::string& path);

std::string sha256_hex(const std::string& bytes);

// q from the command line overrides twist.q, which overrides the top-level q.
Twist make_twist(const Config& cfg, std::optional<std::int64_t> q);

struct RunOptions {
  std::optional<std::int64_t> q;
  std::optional<std::vector<int>> word;  // 0-based simple indices
  std::optional<int> depth;              // maximal length of w in kl tables
  std::optional<std::size_t> cell;       // count: b_set at this cell instead of counting
};

// command: analyze | kl | cells | cocycle | count | bsl
nlohmann::ordered_json run_command(const std::string& command, const Config& cfg, const RunOptions& opts);
std::string render(const nlohmann::ordered_json& report);

// "s1,s2,3" -> {0, 1, 2}
std::vector<int> parse_word(const std::string& text);

}  // namespace monoendo
