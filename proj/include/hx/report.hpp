#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hx/linalg.hpp"

namespace hx {

struct CheckEntry {
  std::string axiom;
  bool pass = false;
  std::string detail;  // counterexample or note, empty on pass
};

struct Report {
  std::string subject;
  std::string mode = "full";  // "full" or "sampled"
  std::vector<CheckEntry> entries;
  std::vector<std::string> notes;

  bool all_pass() const;
  void add(const std::string& axiom, bool pass, const std::string& detail = "");
  void merge(const std::string& prefix, const Report& sub);
  std::string text() const;
};

struct AxiomFailure : std::runtime_error {
  explicit AxiomFailure(const Report& r);
  Report report;
};

/// Throws AxiomFailure unless every entry passed.
const Report& require_pass(const Report& r);

/// Whether checks on an object of this dimension run over every tuple or a
/// seeded 10% sample.
bool full_mode(int dim);

/// Enumerate tuples idx in prod(ranges), full or sampled per full_mode(dim).
/// body returns a failure detail, or nullopt on pass. Records one entry.
void check_tuples(Report& r, const std::string& axiom, int dim, const std::vector<int>& ranges,
                  const std::function<std::optional<std::string>(const std::vector<int>&)>& body);

}  // namespace hx
