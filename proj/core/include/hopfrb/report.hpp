#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfrb/tensor.hpp"

namespace hopfrb {

/// Concrete counterexample for a failed identity: the basis indices of the
/// free variables and the two sides of the identity, as sparse tensors over
/// the ambient space the identity lives in.
struct CheckWitness {
  std::vector<std::size_t> inputs;
  SparseTensor lhs;
  SparseTensor rhs;
};

struct CheckResult {
  std::string label;     // equation tag or axiom name, e.g. "antipode", "2a", "COR24-B"
  std::string equation;  // human-readable form of the identity being checked
  bool pass = false;
  std::optional<CheckWitness> witness;  // present exactly when pass == false
};

/// Pass/fail per identity, with a witness on every failure.
class VerificationReport {
public:
  bool pass() const { return pass_; }
  const std::vector<CheckResult>& checks() const { return checks_; }

  void add(CheckResult r) {
    pass_ = pass_ && r.pass;
    checks_.push_back(std::move(r));
  }
  void add_pass(std::string label, std::string equation) {
    add(CheckResult{std::move(label), std::move(equation), true, std::nullopt});
  }
  void add_fail(std::string label, std::string equation, CheckWitness w) {
    add(CheckResult{std::move(label), std::move(equation), false, std::move(w)});
  }
  void merge(const VerificationReport& o) {
    for (const auto& c : o.checks()) add(c);
  }
  const CheckResult* find(const std::string& label) const {
    for (const auto& c : checks_)
      if (c.label == label) return &c;
    return nullptr;
  }

private:
  bool pass_ = true;
  std::vector<CheckResult> checks_;
};

}  // namespace hopfrb
