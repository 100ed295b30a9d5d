#pragma once

#include <optional>
#include <string>

#include "hopfrb/search.hpp"

namespace hopfrb::io {

/// Reads a whole file; throws SchemaError when it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/// {"elements": [...], "table": [[...]]}
FiniteGroup parse_group(const std::string& text);
std::string serialize_group(const FiniteGroup& g);

/// Algebra files carry either explicit structure constants
///   field/basis/unit/counit/mult/comult/antipode
/// with coefficients as exact "num/den" strings, or the group shorthand
///   field/group/build  (build = group_algebra | dual_group_algebra).
/// The two forms are mutually exclusive.  serialize_algebra always emits the
/// explicit canonical form: sorted keys, entries in sorted index order,
/// reduced coefficients.
struct ParsedAlgebra {
  FiniteHopfAlgebra algebra;
  std::string provenance;  // canonical JSON of the provenance block, "" if absent
};
ParsedAlgebra parse_algebra(const std::string& text, std::optional<Field> field = {});
std::string serialize_algebra(const FiniteHopfAlgebra& a, const std::string& provenance = "");

/// {"algebra": ref, "kind": operator|co-operator|plain, "matrix": [{j,i,c}]}
struct ParsedMap {
  LinearOperator op;
  std::string kind;
  std::string algebra_ref;
};
ParsedMap parse_map(const std::string& text, std::size_t expected_dim = 0,
                    std::optional<Field> field = {});
std::string serialize_map(const LinearOperator& op, const std::string& kind,
                          const std::string& algebra_ref);

/// Action files reference their algebra files by path (resolved relative to
/// the action file) and carry the two structure tensors as index triples.
BimoduleAction load_action(const std::string& path, std::optional<Field> field = {});
BicomoduleCoaction load_coaction(const std::string& path, std::optional<Field> field = {});
std::string serialize_action(const BimoduleAction& act, const std::string& h_ref,
                             const std::string& a_ref);
std::string serialize_coaction(const BicomoduleCoaction& coact, const std::string& h_ref,
                               const std::string& c_ref);

FiniteHopfAlgebra load_algebra(const std::string& path, std::optional<Field> field = {});
ParsedAlgebra load_algebra_file(const std::string& path, std::optional<Field> field = {});
FiniteGroup load_group(const std::string& path);
ParsedMap load_map(const std::string& path, std::size_t expected_dim = 0,
                   std::optional<Field> field = {});

std::string serialize_report(const VerificationReport& rep);
std::string harness_verdict_line(const HarnessVerdict& v);
std::string harness_summary_line(const HarnessSummary& s);
std::string group_rb_map_line(const GroupRBMap& m, std::size_t index);

/// Fixture directory: $HOPFRB_FIXTURES when set, else the compiled-in
/// default.
std::string fixtures_dir();
std::string fixture_path(const std::string& name);

}  // namespace hopfrb::io
