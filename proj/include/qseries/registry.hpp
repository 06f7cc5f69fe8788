#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qseries/series.hpp"

namespace qs::registry {

enum class Expectation { MustPass, Exploratory };

struct IdentityEntry {
  std::string id;
  std::string paper_ref;
  std::function<Series(long)> lhs;
  std::function<Series(long)> rhs;
  Expectation expectation = Expectation::MustPass;
  long default_order = 512;
  bool integral = true;  // both sides are integer series when the claim holds
};

struct VerificationReport {
  std::string id;
  std::string paper_ref;
  std::string status;  // pass | fail | exploratory-pass | exploratory-fail
  long order = 0;
  std::optional<long> first_mismatch;
  Rat lhs_coeff, rhs_coeff;  // at the first mismatch, if any
  long elapsed_ms = 0;
};

const std::vector<IdentityEntry>& catalog();

VerificationReport verify(const IdentityEntry& entry, long N);
VerificationReport verify(const std::string& id, std::optional<long> N = std::nullopt);
std::vector<VerificationReport> verify_all(std::optional<long> N = std::nullopt, bool parallel = true);

bool all_must_pass_ok(const std::vector<VerificationReport>& reports);
std::string report_json(const std::vector<VerificationReport>& reports, long order);

}  // namespace qs::registry
