#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxplus/matrix.hpp"

namespace maxplus {

/// Summary of the transient behaviour of one matrix.
struct TransientReport {
  int n = 0;
  MaxPlus lambda;
  std::optional<int> g;                  // maximal girth of crit(A)
  std::optional<int> gamma;              // cyclicity of crit(A)
  std::optional<std::int64_t> T;         // empty for reducible A or when the scan limit is hit
  std::string T_note;                    // why T is empty
  int T1 = 1;
  int wi = 0;
  std::optional<int> dm;
  bool attains_dm = false;
  bool attains_wiel = false;
  std::optional<int> crit_rc_transient;
  std::vector<int> crit_nodes;
  std::vector<int> crit_rc_rows;         // per node, 0 for non-critical
  std::vector<int> crit_rc_cols;
};

TransientReport analyze(const Matrix& a);

/// Stable key order: lambda, g, gamma, T, T1, wi, dm, attains_dm,
/// attains_wiel, crit_rc_transient, then a diagnostics object.  Rationals
/// are strings; node indices are 1-based.
std::string to_json(const TransientReport& r, int indent = 2);
std::string to_text(const TransientReport& r);

}  // namespace maxplus
