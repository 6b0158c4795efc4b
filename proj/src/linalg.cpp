#include "galeforge/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace galeforge {

namespace {

// Forward elimination with row pivoting. Returns pivot column per used row.
std::vector<std::size_t> eliminate(RMat& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) {
      ++p;
    }
    if (p == rows) {
      continue;
    }
    std::swap(m[p], m[r]);
    const Rational inv = Rational(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) {
      m[r][j] *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != r && !m[i][c].is_zero()) {
        const Rational f = m[i][c];
        for (std::size_t j = c; j < cols; ++j) {
          m[i][j] -= f * m[r][j];
        }
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

}  // namespace

Rational det(RMat a) {
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) {
      throw std::invalid_argument("det: matrix not square");
    }
  }
  Rational result(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) {
      ++p;
    }
    if (p == n) {
      return Rational(0);
    }
    if (p != c) {
      std::swap(a[p], a[c]);
      result = -result;
    }
    result *= a[c][c];
    const Rational inv = Rational(1) / a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (!a[i][c].is_zero()) {
        const Rational f = a[i][c] * inv;
        for (std::size_t j = c; j < n; ++j) {
          a[i][j] -= f * a[c][j];
        }
      }
    }
  }
  return result;
}

std::size_t rank(RMat a) {
  return eliminate(a).size();
}

std::optional<RVec> solve_unique(RMat a, RVec b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) {
    throw std::invalid_argument("solve_unique: size mismatch");
  }
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (std::size_t i = 0; i < rows; ++i) {
    a[i].push_back(b[i]);
  }
  const auto pivots = eliminate(a);
  // Inconsistent if the augmented column is a pivot.
  if (!pivots.empty() && pivots.back() == cols) {
    return std::nullopt;
  }
  if (pivots.size() != cols) {
    return std::nullopt;  // underdetermined: no unique solution
  }
  RVec x(cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    x[pivots[r]] = a[r][cols];
  }
  return x;
}

RMat kernel_basis(RMat a) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  const auto pivots = eliminate(a);
  std::vector<bool> is_pivot(cols, false);
  for (const auto c : pivots) {
    is_pivot[c] = true;
  }
  RMat basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) {
      continue;
    }
    RVec v(cols);
    v[f] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -a[r][f];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RVec> relint_point(const RMat& a, const RVec& b, bool stop_when_positive) {
  const std::size_t rows = a.size();
  if (b.size() != rows) {
    throw std::invalid_argument("relint_point: size mismatch");
  }
  const std::size_t n = rows == 0 ? 0 : a[0].size();
  const std::size_t max_support = std::min(rows, n);

  std::set<RVec> vertices;
  RVec sum(n, Rational(0));
  std::vector<bool> positive_seen(n, false);
  std::size_t covered = 0;

  const auto consider = [&](const std::vector<std::size_t>& support) -> bool {
    RMat sub(rows, RVec(support.size()));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < support.size(); ++j) {
        sub[i][j] = a[i][support[j]];
      }
    }
    const auto sol = solve_unique(std::move(sub), b);
    if (!sol) {
      return false;
    }
    for (const auto& v : *sol) {
      if (v.sign() < 0) {
        return false;
      }
    }
    RVec full(n, Rational(0));
    for (std::size_t j = 0; j < support.size(); ++j) {
      full[support[j]] = (*sol)[j];
    }
    if (!vertices.insert(full).second) {
      return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
      sum[i] += full[i];
      if (!positive_seen[i] && full[i].sign() > 0) {
        positive_seen[i] = true;
        ++covered;
      }
    }
    return covered == n;
  };

  bool full_cover = false;
  // Supports by increasing size; the empty support handles b = 0.
  for (std::size_t k = 0; k <= max_support && !full_cover; ++k) {
    if (k == 0) {
      if (std::all_of(b.begin(), b.end(), [](const Rational& v) { return v.is_zero(); })) {
        vertices.insert(RVec(n, Rational(0)));
      }
      full_cover = (n == 0 && !vertices.empty());
      continue;
    }
    std::vector<std::size_t> support(k);
    for (std::size_t i = 0; i < k; ++i) {
      support[i] = i;
    }
    if (k > n) {
      break;
    }
    while (true) {
      if (consider(support) && stop_when_positive) {
        full_cover = true;
        break;
      }
      // next combination
      std::size_t i = k;
      while (i > 0 && support[i - 1] == n - k + i - 1) {
        --i;
      }
      if (i == 0) {
        break;
      }
      ++support[i - 1];
      for (std::size_t j = i; j < k; ++j) {
        support[j] = support[j - 1] + 1;
      }
    }
  }

  if (vertices.empty()) {
    return std::nullopt;
  }
  const Rational count(static_cast<long>(vertices.size()));
  RVec avg(n);
  for (std::size_t i = 0; i < n; ++i) {
    avg[i] = sum[i] / count;
  }
  return avg;
}

}  // namespace galeforge
