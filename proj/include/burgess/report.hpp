#pragma once

#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "burgess/common.hpp"

namespace burgess {

enum class CheckStatus { pass, float_ambiguous, fail };

// Uniform record for one verified inequality: lhs <= rhs is the claim.
// Checks on floating paths carry an explicit slack; a margin inside
// (-slack, 0) is flagged float-ambiguous instead of failed.
struct InequalityReport {
  std::string name;
  std::string params;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;

  double margin() const { return rhs - lhs; }
  bool holds() const { return margin() >= 0.0; }
  CheckStatus status() const {
    double m = margin();
    if (m >= 0.0) return CheckStatus::pass;
    if (m > -slack) return CheckStatus::float_ambiguous;
    return CheckStatus::fail;
  }
};

// Aggregate over a family of checks too numerous to keep individually.
struct SweepSummary {
  u64 checks = 0;
  u64 failures = 0;
  u64 ambiguous = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  std::string worst;                            // name/params of the minimum-margin check
  std::vector<InequalityReport> failure_detail; // capped at a few entries

  void absorb(const InequalityReport& r);
  void merge(const SweepSummary& other);
  bool pass() const { return failures == 0; }
};

// Fixed-width significant-digit formatting so identical inputs always
// produce byte-identical output (JSON uses 17, human text uses 6).
std::string fmt_g(double v, int significant);
std::string csv_escape(const std::string& s);
std::string json_escape(const std::string& s);

void write_reports_csv(std::ostream& os, const std::vector<InequalityReport>& reports);
void write_reports_json(std::ostream& os, const std::vector<InequalityReport>& reports);
void write_reports_text(std::ostream& os, const std::vector<InequalityReport>& reports);

}  // namespace burgess
