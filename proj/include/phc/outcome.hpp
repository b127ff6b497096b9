#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "phc/certificate.hpp"

namespace phc {

enum class Status { found, infeasible, hypothesis_violation, timeout };

const char* to_string(Status s);

/// Search limits. Exceeding either one yields Status::timeout, never
/// Status::infeasible.
struct Budget {
  std::uint64_t max_nodes = 500'000'000;
  std::chrono::milliseconds max_time{120'000};
};

/// One failed hypothesis of a theorem, with the value that witnessed it.
struct Violation {
  std::string hypothesis;  // e.g. "edge-count", "rainbow-degree"
  long long actual = 0;
  long long required = 0;
  std::optional<Vertex> vertex;
};

/// Ordered proof-branch tags recorded by a constructive solver. Tags from a
/// delegated theorem carry that theorem's id as a prefix ("3colgen/...").
struct TheoremTrace {
  std::vector<std::string> steps;

  void add(std::string tag) { steps.push_back(std::move(tag)); }
  bool contains(const std::string& tag) const;
  bool empty() const { return steps.empty(); }
};

struct SolveOutcome {
  Status status = Status::infeasible;
  std::optional<CycleCertificate> cycle;
  std::optional<PathCertificate> path;
  std::vector<Violation> violations;
  TheoremTrace trace;
  std::uint64_t nodes = 0;  // search nodes expanded by exact search

  bool found() const { return status == Status::found; }
};

}  // namespace phc
