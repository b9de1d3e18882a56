#include "maxplus/report.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "maxplus/bounds.hpp"
#include "maxplus/csr.hpp"
#include "maxplus/spectral.hpp"

namespace maxplus {

TransientReport analyze(const Matrix& a) {
  detail::require_square(a);
  TransientReport r;
  r.n = static_cast<int>(a.rows());
  const Spectrum s = spectrum(a);
  r.lambda = s.lambda;
  r.wi = wielandt_bound(r.n);
  r.T1 = weak_threshold_T1(a).T1;
  r.attains_wiel = r.n >= 2 && r.T1 == r.wi;
  if (s.crit) {
    r.g = s.crit->girth;
    r.gamma = s.crit->cyclicity;
    r.dm = dm_bound(*r.g, r.n);
    r.attains_dm = r.T1 == *r.dm;
    const auto rc = crit_row_col_transient(a);
    r.crit_rc_transient = rc.value;
    r.crit_nodes = s.crit->nodes;
    r.crit_rc_rows = rc.per_row;
    r.crit_rc_cols = rc.per_col;
  }
  try {
    r.T = transient_T(a);
  } catch (const std::invalid_argument&) {
    r.T_note = "reducible";
  } catch (const std::runtime_error& e) {
    r.T_note = e.what();
  }
  return r;
}

namespace {

template <typename T>
nlohmann::ordered_json opt(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

std::vector<int> one_based(const std::vector<int>& nodes) {
  std::vector<int> out;
  for (int v : nodes) out.push_back(v + 1);
  return out;
}

}  // namespace

std::string to_json(const TransientReport& r, int indent) {
  nlohmann::ordered_json j;
  j["lambda"] = to_string(r.lambda);
  j["g"] = opt(r.g);
  j["gamma"] = opt(r.gamma);
  j["T"] = opt(r.T);
  j["T1"] = r.T1;
  j["wi"] = r.wi;
  j["dm"] = opt(r.dm);
  j["attains_dm"] = r.attains_dm;
  j["attains_wiel"] = r.attains_wiel;
  j["crit_rc_transient"] = opt(r.crit_rc_transient);
  nlohmann::ordered_json diag;
  diag["n"] = r.n;
  diag["crit_nodes"] = one_based(r.crit_nodes);
  diag["crit_rc_rows"] = r.crit_rc_rows;
  diag["crit_rc_cols"] = r.crit_rc_cols;
  if (!r.T_note.empty()) diag["T_note"] = r.T_note;
  j["diagnostics"] = diag;
  return j.dump(indent);
}

std::string to_text(const TransientReport& r) {
  auto show = [](const auto& v) { return v ? std::to_string(*v) : std::string("-"); };
  std::ostringstream os;
  os << "n                    " << r.n << '\n'
     << "lambda               " << to_string(r.lambda) << '\n'
     << "maximal girth g      " << show(r.g) << '\n'
     << "cyclicity gamma      " << show(r.gamma) << '\n'
     << "transient T          " << (r.T ? std::to_string(*r.T) : "- (" + r.T_note + ")") << '\n'
     << "weak threshold T1    " << r.T1 << '\n'
     << "Wi(n)                " << r.wi << (r.attains_wiel ? "  (attained)" : "") << '\n'
     << "DM(g,n)              " << show(r.dm) << (r.attains_dm ? "  (attained)" : "") << '\n'
     << "crit row/col trans.  " << show(r.crit_rc_transient) << '\n';
  if (!r.crit_nodes.empty()) {
    os << "critical nodes      ";
    for (int v : r.crit_nodes) os << ' ' << v + 1;
    os << '\n';
  }
  return os.str();
}

}  // namespace maxplus
