#pragma once

#include <optional>
#include <string>

#include "hopfrb/report.hpp"

namespace hopfrb::detail {

/// Accumulates one labeled check over many basis tuples, keeping the first
/// counterexample as the witness.
struct Check {
  std::string label;
  std::string equation;
  bool pass = true;
  std::optional<CheckWitness> witness;

  void expect(const std::vector<std::size_t>& inputs, const SparseTensor& lhs,
              const SparseTensor& rhs) {
    if (!pass || lhs == rhs) return;
    pass = false;
    witness = CheckWitness{inputs, lhs, rhs};
  }
  void expect_scalar(const std::vector<std::size_t>& inputs, const Scalar& lhs,
                     const Scalar& rhs) {
    if (!pass || lhs == rhs) return;
    SparseTensor l({1}, lhs.field()), r({1}, rhs.field());
    l.set({0}, lhs);
    r.set({0}, rhs);
    pass = false;
    witness = CheckWitness{inputs, l, r};
  }
  void expect_flag(const std::vector<std::size_t>& inputs, bool lhs, bool rhs,
                   const Field& f) {
    expect_scalar(inputs, lhs ? Scalar::one(f) : Scalar::zero(f),
                  rhs ? Scalar::one(f) : Scalar::zero(f));
  }
  void emit(VerificationReport& rep) && {
    rep.add(CheckResult{std::move(label), std::move(equation), pass, std::move(witness)});
  }
};

/// Collapses a sub-report into a single labeled entry, inheriting the first
/// failing witness.
inline CheckResult flatten(std::string label, std::string equation,
                           const VerificationReport& rep) {
  CheckResult r{std::move(label), std::move(equation), rep.pass(), std::nullopt};
  if (!rep.pass())
    for (const auto& c : rep.checks())
      if (!c.pass && c.witness) {
        r.witness = c.witness;
        break;
      }
  return r;
}

}  // namespace hopfrb::detail
