#pragma once

// Discrepancy ledger: every published Smarandache claim, measured against
// the oracle on one curve.

#include <ostream>
#include <string>
#include <vector>

#include "dualruled/oracle.hpp"
#include "dualruled/range.hpp"

namespace dualruled {

class CurveSpec;

enum class Gate { MustVerify, Advisory };

const char* to_string(Gate g) noexcept;

struct LedgerRow {
  std::string location;  // the formula under test
  Gate gate = Gate::Advisory;
  double tol_re = 0.0;
  double tol_du = 0.0;
  ResidualReport report;

  bool passed() const { return gate == Gate::Advisory || report.verdict == Verdict::Verified; }
};

struct Ledger {
  std::string curve;
  std::vector<LedgerRow> rows;  // sorted by claim id

  bool passed() const;
  const LedgerRow* find(const std::string& claim_id) const;
};

struct VerifyOptions {
  double tol_re = kDefaultTolRe;
  double tol_du = kDefaultTolDu;
  double identity_tol = 1e-9;  // orthogonality, radius identities, Bertrand offset
};

/// Runs every claim over the window samples of `base`.
Ledger verify(const CurveSpec& base, const Range& window, const VerifyOptions& options = {});

/// Tab-separated table with a header row.
void write_ledger(std::ostream& out, const Ledger& ledger);

}  // namespace dualruled
