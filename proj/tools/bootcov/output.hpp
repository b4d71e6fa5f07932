#pragma once

#include <chrono>
#include <fstream>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace bootcov::cli {

/// 17 significant digits, enough to round-trip a double.
std::string num(double v);

/// Stderr note when a full C_pN simulation needs more than 1e10 resample draws.
void warn_simulation_cost(long n, long m, long reps);

/// CSV destination: a file when a path is given, stdout otherwise.
class CsvOut {
 public:
  explicit CsvOut(const std::string& path);
  std::ostream& stream() { return *out_; }
  void header(const std::vector<std::string>& cols);
  void row(const std::vector<std::string>& cells);
  bool to_file() const { return file_ != nullptr; }
  void close();

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_;
};

/// Run record written next to an output file as <out>.manifest.json.
class Manifest {
 public:
  Manifest(std::string command, int argc, char** argv);
  nlohmann::json& params() { return doc_["params"]; }
  nlohmann::json& tolerances() { return doc_["tolerances"]; }
  nlohmann::json& results() { return doc_["results"]; }
  void seed(std::uint64_t s) { doc_["seeds"].push_back(s); }
  /// No-op when out is empty (output went to stdout).
  void write(const std::string& out);

 private:
  nlohmann::json doc_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace bootcov::cli
