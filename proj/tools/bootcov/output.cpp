#include "output.hpp"

#include <iostream>
#include <stdexcept>

#include <fmt/format.h>

#include "bootcov/version.hpp"

namespace bootcov::cli {

std::string num(double v) { return fmt::format("{:.17g}", v); }

void warn_simulation_cost(long n, long m, long reps) {
  const double draws = static_cast<double>(n) * static_cast<double>(m) * static_cast<double>(reps);
  if (draws > 1e10)
    std::cerr << fmt::format("note: C_pN at n={} m={} simulates {:.2g} resample draws; lower --reps for a quick run\n", n,
                             m, draws);
}

CsvOut::CsvOut(const std::string& path) : out_(&std::cout) {
  if (path.empty() || path == "-") return;
  file_ = std::make_unique<std::ofstream>(path);
  if (!*file_) throw std::runtime_error("cannot open " + path + " for writing");
  out_ = file_.get();
}

void CsvOut::header(const std::vector<std::string>& cols) { row(cols); }

void CsvOut::row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) *out_ << ',';
    *out_ << cells[i];
  }
  *out_ << '\n';
}

void CsvOut::close() {
  out_->flush();
  if (file_) {
    file_->close();
    if (!*file_) throw std::runtime_error("write failed");
  }
}

Manifest::Manifest(std::string command, int argc, char** argv) : start_(std::chrono::steady_clock::now()) {
  doc_["command"] = std::move(command);
  doc_["argv"] = std::vector<std::string>(argv, argv + argc);
  doc_["version"] = kVersion;
  doc_["params"] = nlohmann::json::object();
  doc_["seeds"] = nlohmann::json::array();
  doc_["tolerances"] = nlohmann::json::object();
}

void Manifest::write(const std::string& out) {
  if (out.empty() || out == "-") return;
  doc_["wall_time_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  std::ofstream f(out + ".manifest.json");
  if (!f) throw std::runtime_error("cannot write manifest for " + out);
  f << doc_.dump(2) << '\n';
}

}  // namespace bootcov::cli
