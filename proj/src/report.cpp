#include "hx/report.hpp"

#include <sstream>

namespace hx {

bool Report::all_pass() const {
  for (auto& e : entries)
    if (!e.pass) return false;
  return true;
}

void Report::add(const std::string& axiom, bool pass, const std::string& detail) {
  entries.push_back({axiom, pass, detail});
}

void Report::merge(const std::string& prefix, const Report& sub) {
  for (auto& e : sub.entries)
    entries.push_back({prefix.empty() ? e.axiom : prefix + "/" + e.axiom, e.pass, e.detail});
  for (auto& n : sub.notes) notes.push_back(prefix.empty() ? n : prefix + ": " + n);
  if (sub.mode == "sampled") mode = "sampled";
}

std::string Report::text() const {
  std::ostringstream os;
  os << subject << " [" << mode << "]\n";
  for (auto& e : entries) {
    os << "  " << (e.pass ? "pass" : "FAIL") << "  " << e.axiom;
    if (!e.detail.empty()) os << "  (" << e.detail << ")";
    os << "\n";
  }
  for (auto& n : notes) os << "  note: " << n << "\n";
  return os.str();
}

AxiomFailure::AxiomFailure(const Report& r) : std::runtime_error("check failed:\n" + r.text()), report(r) {}

const Report& require_pass(const Report& r) {
  if (!r.all_pass()) throw AxiomFailure(r);
  return r;
}

bool full_mode(int dim) {
  switch (config().paranoid) {
    case Config::Paranoid::On:
      return true;
    case Config::Paranoid::Off:
      return false;
    case Config::Paranoid::Auto:
      return dim <= config().full_check_ceiling;
  }
  return true;
}

void check_tuples(Report& r, const std::string& axiom, int dim, const std::vector<int>& ranges,
                  const std::function<std::optional<std::string>(const std::vector<int>&)>& body) {
  bool full = full_mode(dim);
  std::mt19937_64 rng(config().sample_seed);
  std::uniform_int_distribution<int> pct(0, 99);
  if (!full) r.mode = "sampled";
  std::vector<int> idx(ranges.size(), 0);
  long total = 1;
  for (int x : ranges) total *= x;
  for (long t = 0; t < total; ++t) {
    long rem = t;
    for (int k = (int)ranges.size() - 1; k >= 0; --k) {
      idx[k] = (int)(rem % ranges[k]);
      rem /= ranges[k];
    }
    if (!full && pct(rng) >= config().sample_percent) continue;
    auto fail = body(idx);
    if (fail) {
      std::ostringstream os;
      os << "at (";
      for (size_t k = 0; k < idx.size(); ++k) os << (k ? "," : "") << idx[k];
      os << "): " << *fail;
      r.add(axiom, false, os.str());
      return;
    }
  }
  r.add(axiom, true);
}

}  // namespace hx
