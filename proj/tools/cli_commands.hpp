#pragma once

#include <fstream>
#include <memory>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace weberdex::cli {

using nlohmann::json;

enum ExitCode { kOk = 0, kVerifyFailed = 1, kBadInput = 2 };

/// Bad configuration: unknown key, wrong type, unknown command or family.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flat key/value configuration. File entries first, command-line flags on top.
struct RunConfig {
  json values = json::object();

  std::string command() const;
  std::string format() const;  // csv | json
  bool has(const std::string& key) const { return values.contains(key); }

  /// Throws ConfigError on a key the command does not take or a value of the wrong type.
  void validate() const;
};

RunConfig load_config_file(const std::string& path);

/// Where tables and reports go: the --out file or stdout.
class Output {
 public:
  explicit Output(const RunConfig& cfg);
  std::ostream& stream();
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::ostream* os_ = nullptr;
  std::unique_ptr<std::ofstream> file_;
};

int cmd_kernel(const RunConfig& cfg);
int cmd_transform(const RunConfig& cfg);
int cmd_verify(const RunConfig& cfg);
int cmd_bvp(const RunConfig& cfg);

/// Dispatch on cfg.command(); maps library and config errors to exit codes.
int run(const RunConfig& cfg);

}  // namespace weberdex::cli
