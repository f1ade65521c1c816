#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>

#include "json.hpp"

#include "hx/grouporacle.hpp"
#include "hx/square.hpp"

namespace hx {

using json = nlohmann::ordered_json;

/// On-disk object: {"schema_version": "1", "kind": ..., "payload": ...}.
/// Component references inside a payload are either inline payload objects
/// or relative paths to other manifest files (resolved against `dir`).
struct Manifest {
  std::string kind;
  json payload;
  std::filesystem::path dir;  // directory the file was loaded from
};

extern const char* kSchemaVersion;

Manifest load_manifest(const std::filesystem::path& path);
/// Canonical serialization: fixed key order, canonical scalar strings,
/// two-space indent, trailing newline. Byte-identical for identical input.
void save_manifest(const std::string& kind, const json& payload,
                   const std::filesystem::path& path);

// Payload writers. All scalars are rendered with Scalar::str() ("p/q" over
// the rationals, a canonical residue mod p otherwise).
json map_to_json(const LinMap& f);
json vec_to_json(const Vec& v);
json hopf_to_json(const FinHopf& h);
json group_to_json(const FiniteGroup& g);
json morphism_to_json(const HopfMorphism& f);
json action_to_json(const HopfAction& a);
json xmod_to_json(const CrossedModule& cm);
json cat1_to_json(const Cat1& c);
json square_to_json(const CrossedSquare& sq);
json twoaction_to_json(const Hopf2Action& a);
json pt2_to_json(const SplitEpi2& s);
json cat2_to_json(const Cat2& c);
json group_square_to_json(const GroupCrossedSquare& g);

// Payload readers. `dir` anchors relative references.
LinMap map_from_json(const json& j, const Field& f);
Vec vec_from_json(const json& j, const Field& f, int dim);
HopfPtr hopf_from_json(const json& j, const std::filesystem::path& dir);
FiniteGroup group_from_json(const json& j, const std::filesystem::path& dir);
HopfMorphism morphism_from_json(const json& j, const std::filesystem::path& dir);
HopfAction action_from_json(const json& j, const std::filesystem::path& dir);
CrossedModule xmod_from_json(const json& j, const std::filesystem::path& dir);
Cat1 cat1_from_json(const json& j, const std::filesystem::path& dir);
CrossedSquare square_from_json(const json& j, const std::filesystem::path& dir);
Hopf2Action twoaction_from_json(const json& j, const std::filesystem::path& dir);
SplitEpi2 pt2_from_json(const json& j, const std::filesystem::path& dir);
Cat2 cat2_from_json(const json& j, const std::filesystem::path& dir);
GroupCrossedSquare group_square_from_json(const json& j);

json report_to_json(const Report& r);

/// Shared command flags; paranoid/seed/budget land in the global config().
struct CliOptions {
  std::string field = "q";      // for gen and group_square lifting
  std::string report = "text";  // "text" or "json"
};

/// Exit codes: 0 all axioms pass, 1 axiom failure, 2 input/parse error.
int cmd_check(const std::string& kind, const std::string& path, const CliOptions& opt,
              std::ostream& out);
int cmd_convert(const std::string& from, const std::string& to, const std::string& path,
                const std::string& out_path, const CliOptions& opt, std::ostream& out);
int cmd_roundtrip(const std::string& kind, const std::string& path, const CliOptions& opt,
                  std::ostream& out);
int cmd_gen(const std::string& name, const std::map<std::string, std::string>& params,
            const std::string& out_path, const CliOptions& opt, std::ostream& out);

}  // namespace hx
