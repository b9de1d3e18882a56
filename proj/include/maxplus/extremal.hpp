#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "maxplus/matrix.hpp"

namespace maxplus {

/// numbering[k] is the original node that receives label k (0-based).
using Numbering = std::vector<int>;

Numbering identity_numbering(int n);
/// Throws std::invalid_argument unless p is a permutation of 0..n-1.
void validate_numbering(const Numbering& p, int n);
/// The matrix in the new labels: out(k, l) = a(p[k], p[l]).
Matrix renumber(const Matrix& a, const Numbering& p);
/// Parses a 1-based comma separated list such as "3,1,2".
Numbering parse_numbering(const std::string& text);
std::string format_numbering(const Numbering& p);

/// Support patterns, 0-based.  The A1 pattern is the Hamiltonian path
/// i -> i+1, the closing arc n -> 1 and the chord g -> 1 (1-based).  The B1
/// pattern is every arc i -> j with i, j > g and j = i + 1 (mod g); it
/// includes the path arcs beyond g, which A1 also carries.
bool in_a1_pattern(int i, int j, int g, int n);
bool in_b1_pattern(int i, int j, int g);

struct Decomposition {
  Matrix A1;
  Matrix B1;
  Matrix A2;  // entries outside the A1 and B1 patterns
  int g = 0;
  Numbering numbering;
};

/// Renumbers A and splits it so that A1 (+) B1 (+) A2 equals the renumbered
/// matrix.  Requires 1 <= g <= n.
Decomposition decompose(const Matrix& a, int g, const Numbering& numbering);

struct ConditionResult {
  bool holds = false;
  bool vacuous = false;     // no index pair is constrained
  std::string detail;       // witness on failure
};

/// Verdict for attainment of the Dulmage-Mendelsohn bound by T1.
struct DmVerdict {
  bool holds = false;
  int n = 0;
  int g = 0;
  std::optional<Numbering> numbering;  // the witnessing (or, on failure, last examined) numbering
  bool crit_strongly_connected = false;
  bool unique_girth_cycle = false;
  bool leading_cycle_critical = false;
  ConditionResult coprime;           // gcd(g, n) = 1
  ConditionResult a2_dominated;      // A2 < CSR[A1]
  ConditionResult chord_inequality;  // B1 chords below the A1 path they skip
  ConditionResult power_inequality;  // (B1^{DM-1})_{g+1,n} below the CSR entry
  int candidates = 0;
  std::string diagnostic;
};

inline constexpr int kNumberingSearchLimit = 10;

/// Checks the DM characterization.  Without a numbering, every rotation of
/// every maximum-weight Hamiltonian cycle is tried (n <= 10).  Throws
/// std::domain_error for acyclic input or maximal critical girth 1 (not
/// characterized) and std::length_error when a search is needed above the
/// limit.
DmVerdict verify_dm(const Matrix& a, const std::optional<Numbering>& numbering = std::nullopt);

enum class WielandtCase { kGirthNMinusOne, kGirthN };
std::string to_string(WielandtCase c);

struct WielandtVerdict {
  bool holds = false;
  int n = 0;
  int g = 0;
  std::optional<WielandtCase> which;
  std::optional<Numbering> numbering;
  bool leading_cycle_critical = false;
  ConditionResult a2_dominated;
  int candidates = 0;
  std::string diagnostic;
};

/// Checks the Wielandt characterization: g in {n-1, n} with the matching
/// leading cycle critical, and A2 < CSR[A1] where A1 uses the g = n-1
/// pattern and A2 is everything outside it.  Requires n >= 2.
WielandtVerdict verify_wielandt(const Matrix& a, const std::optional<Numbering>& numbering = std::nullopt);

/// Critical row/column verdicts.  `index` is the Boolean index of crit(A)
/// (DM variant) or of the digraph of A1 (Wielandt variant); `consistent`
/// records whether the verdict agrees with crit_row_col_transient == bound.
struct CritRcVerdict {
  bool holds = false;
  int bound = 0;
  std::optional<std::int64_t> index;
  int crit_rc_transient = 0;
  bool consistent = false;
  std::optional<Numbering> numbering;
  std::string diagnostic;
};

CritRcVerdict verify_crit_rc_dm(const Matrix& a);
CritRcVerdict verify_crit_rc_wielandt(const Matrix& a, const std::optional<Numbering>& numbering = std::nullopt);

/// All Hamiltonian cycles of maximal weight, each as a node sequence starting
/// at node 0.  Exhaustive; throws std::length_error above `limit` nodes.
std::vector<std::vector<int>> max_weight_hamiltonian_cycles(const Matrix& a, int limit = kNumberingSearchLimit);

// --- generators -----------------------------------------------------------

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GeneratorOptions {
  /// Make the Hamiltonian cycle 1..n1 critical as well (DM family).  Required
  /// for the critical row/column transient to reach the bound.
  bool critical_hamiltonian = true;
  /// Probability of populating each optional B1 / A2 entry.
  double fill_probability = 0.5;
  /// Apply a random diagonal scaling and a random scalar shift at the end.
  bool randomize = true;
  int max_attempts = 64;
};

struct GeneratedInstance {
  Matrix matrix;
  std::string family;  // "dm" or "wielandt"
  int n = 0;
  int g = 0;
  std::uint64_t seed = 0;
  std::string wielandt_case;  // "n-1" / "n" for the Wielandt family
  Numbering numbering;
  int verified_T1 = 0;
};

/// A matrix with T1 = DM(g, n), verified before return.  Requires
/// 2 <= g < n and gcd(g, n) = 1.
GeneratedInstance generate_dm(int n, int g, std::uint64_t seed, const GeneratorOptions& options = {});

/// A matrix with T1 = Wi(n) and a critical Hamiltonian cycle, verified
/// before return.  Requires n >= 2.
GeneratedInstance generate_wielandt(int n, std::uint64_t seed, WielandtCase which,
                                    const GeneratorOptions& options = {});

/// The 0/-inf matrix of Wielandt's digraph: the cycle 1..n1 plus the chord
/// (n-1) -> 1.
Matrix wielandt_skeleton(int n);

std::string provenance_json(const GeneratedInstance& g, int indent = 2);

// --- walk oracle ----------------------------------------------------------

struct TwiceOptimalWalk {
  std::vector<int> nodes;  // 0-based, first i, last j
  MaxPlus weight;
  int length = 0;
  int g = 0;
  /// length == min(Wi(n), DM(g, n)) + g - 1
  bool interesting = false;
};

inline constexpr int kWalkOracleLimit = 8;

/// Among walks i -> j through the unique critical cycle Z0 of length g with
/// length = t (mod g): the maximal weight, then the minimal length.  Returns
/// nullopt when no such walk exists.  Throws std::length_error for n > 8 and
/// std::domain_error when A is acyclic or Z0 is not unique.
std::optional<TwiceOptimalWalk> twice_optimal_walk(const Matrix& a, int i, int j, std::int64_t t);

}  // namespace maxplus
