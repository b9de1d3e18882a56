#include "maxplus/matrix.hpp"

#include <fstream>
#include <sstream>

namespace maxplus {

Matrix zero_matrix(Eigen::Index n) { return Matrix(n, n); }

Matrix identity_matrix(Eigen::Index n) {
  Matrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) out(i, i) = MaxPlus::unit();
  return out;
}

void detail::require_square(const Matrix& a) {
  if (a.rows() != a.cols() || a.rows() < 1)
    throw std::invalid_argument("expected a non-empty square matrix, got " + std::to_string(a.rows()) +
                                "x" + std::to_string(a.cols()));
}

Matrix scalar_times(const MaxPlus& alpha, const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out(i, j) = otimes(alpha, a(i, j));
  return out;
}

Matrix mat_power(const Matrix& a, std::int64_t t) {
  detail::require_square(a);
  if (t < 1) throw std::invalid_argument("mat_power: exponent must be >= 1, got " + std::to_string(t));
  Matrix base = a;
  Matrix result;
  bool have_result = false;
  while (t > 0) {
    if (t & 1) {
      result = have_result ? mat_mul(result, base) : base;
      have_result = true;
    }
    t >>= 1;
    if (t > 0) base = mat_mul(base, base);
  }
  return result;
}

Matrix kleene_star(const Matrix& a) {
  detail::require_square(a);
  const Eigen::Index n = a.rows();
  Matrix closure = a;
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (closure(i, k).is_bottom()) continue;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (closure(k, j).is_bottom()) continue;
        Rational w = closure(i, k).value() + closure(k, j).value();
        if (closure(i, j).is_bottom() || closure(i, j).value() < w) closure(i, j) = MaxPlus(std::move(w));
      }
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (closure(i, i) > MaxPlus::unit())
      throw std::domain_error("kleene_star: cycle of positive weight through node " + std::to_string(i + 1));
    closure(i, i) = MaxPlus::unit();
  }
  return closure;
}

DiagonalScaling DiagonalScaling::inverse() const {
  std::vector<Rational> inv;
  inv.reserve(d_.size());
  for (const auto& x : d_) inv.emplace_back(-x);
  return DiagonalScaling(std::move(inv));
}

Matrix scale(const Matrix& a, const DiagonalScaling& d) {
  detail::require_square(a);
  if (static_cast<Eigen::Index>(d.size()) != a.rows())
    throw std::invalid_argument("scaling length does not match matrix dimension");
  Matrix out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j).is_finite()) out(i, j) = MaxPlus(Rational(a(i, j).value() - d[i] + d[j]));
  return out;
}

void write_matrix(std::ostream& os, const Matrix& a) {
  os << a.rows() << '\n';
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (j > 0) os << ' ';
      os << to_string(a(i, j));
    }
    os << '\n';
  }
}

std::string to_text(const Matrix& a) {
  std::ostringstream os;
  write_matrix(os, a);
  return os.str();
}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

bool next_content_line(std::istream& is, std::string& line, int& lineno) {
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

Matrix read_matrix(std::istream& is) {
  std::string line;
  int lineno = 0;
  if (!next_content_line(is, line, lineno)) throw std::invalid_argument("matrix text: empty input");
  const auto head = tokens_of(line);
  long n = 0;
  try {
    std::size_t used = 0;
    n = head.size() == 1 ? std::stol(head[0], &used) : 0;
    if (used != head[0].size()) n = 0;
  } catch (const std::exception&) {
    n = 0;
  }
  if (n < 1) throw std::invalid_argument("matrix text line " + std::to_string(lineno) + ": expected dimension n >= 1");
  Matrix a(n, n);
  for (long i = 0; i < n; ++i) {
    if (!next_content_line(is, line, lineno))
      throw std::invalid_argument("matrix text: expected " + std::to_string(n) + " rows, got " + std::to_string(i));
    const auto row = tokens_of(line);
    if (static_cast<long>(row.size()) != n)
      throw std::invalid_argument("matrix text line " + std::to_string(lineno) + ": expected " + std::to_string(n) +
                                  " entries, got " + std::to_string(row.size()));
    for (long j = 0; j < n; ++j) {
      try {
        a(i, j) = parse_scalar(row[j]);
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("matrix text line " + std::to_string(lineno) + ": " + e.what());
      }
    }
  }
  if (next_content_line(is, line, lineno))
    throw std::invalid_argument("matrix text line " + std::to_string(lineno) + ": trailing content");
  return a;
}

Matrix parse_matrix(const std::string& text) {
  std::istringstream is(text);
  return read_matrix(is);
}

Matrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file '" + path + "'");
  return read_matrix(in);
}

}  // namespace maxplus
