#include "galeforge/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "galeforge/subsets.hpp"

namespace galeforge {

VectorConfig3 lift(const Diagram& x) {
  VectorConfig3 v;
  for (const auto& p : x.points()) {
    v.labels.push_back(p.label);
    if (p.color == Color::Black) {
      v.columns.push_back({p.position.x, p.position.y, Rational(1)});
    } else {
      v.columns.push_back({-p.position.x, -p.position.y, Rational(-1)});
    }
  }
  return v;
}

RVec positive_dependence(const VectorConfig3& v) {
  const std::size_t n = v.columns.size();
  RMat a(4, RVec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    a[0][i] = v.columns[i][0];
    a[1][i] = v.columns[i][1];
    a[2][i] = v.columns[i][2];
    a[3][i] = Rational(1);
  }
  const RVec b = {Rational(0), Rational(0), Rational(0), Rational(1)};
  const auto lambda = relint_point(a, b, /*stop_when_positive=*/false);
  if (!lambda || std::any_of(lambda->begin(), lambda->end(),
                             [](const Rational& r) { return r.sign() <= 0; })) {
    throw std::invalid_argument("positive_dependence: not a polytope diagram");
  }
  return *lambda;
}

PointConfig gale_inverse(const Diagram& x) {
  const VectorConfig3 v = lift(x);
  const RVec lambda = positive_dependence(v);
  const std::size_t n = v.columns.size();
  RMat c(3, RVec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t rrow = 0; rrow < 3; ++rrow) {
      c[rrow][i] = v.columns[i][rrow] * lambda[i];
    }
  }
  if (rank(c) != 3) {
    throw std::invalid_argument("gale_inverse: lifted configuration must have rank 3");
  }
  // ker(C) has dimension n-3 = D+1 and contains the all-ones vector; in the
  // reduced-echelon kernel basis the all-ones vector is the sum of all basis
  // vectors, so replacing the first one by it keeps a basis.
  RMat basis = kernel_basis(c);
  if (basis.size() != n - 3) {
    throw std::logic_error("gale_inverse: unexpected kernel dimension");
  }
  basis[0] = RVec(n, Rational(1));

  PointConfig p;
  p.dim = n - 4;
  p.labels = v.labels;
  p.points.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    RVec coords(p.dim);
    for (std::size_t rrow = 1; rrow < basis.size(); ++rrow) {
      coords[rrow - 1] = basis[rrow][i];
    }
    p.points[i] = std::move(coords);
  }

  // General position: every D+1 points affinely independent.
  bool general = true;
  for_each_combination(n, p.dim + 1, [&](const std::vector<std::size_t>& idx) -> bool {
    RMat m(p.dim + 1, RVec(p.dim + 1));
    for (std::size_t r = 0; r < idx.size(); ++r) {
      m[r][0] = Rational(1);
      for (std::size_t ccol = 0; ccol < p.dim; ++ccol) {
        m[r][ccol + 1] = p.points[idx[r]][ccol];
      }
    }
    general = !det(m).is_zero();
    return general;
  });
  if (!general) {
    throw std::logic_error("gale_inverse: configuration not in general position");
  }

  const auto facets = facets_bruteforce(p);
  for (const auto& label : p.labels) {
    const bool in_facet = std::any_of(facets.begin(), facets.end(), [&](const VertexSubset& f) {
      return f.count(label) != 0;
    });
    if (!in_facet) {
      throw std::logic_error("gale_inverse: point '" + label + "' is not a vertex");
    }
  }
  return p;
}

namespace {

int side_sign(const PointConfig& p, const std::vector<std::size_t>& subset, std::size_t j) {
  const std::size_t k = subset.size();
  RMat m(k + 1, RVec(k + 1));
  for (std::size_t r = 0; r < k; ++r) {
    m[r][0] = Rational(1);
    for (std::size_t c = 0; c < p.dim; ++c) {
      m[r][c + 1] = p.points[subset[r]][c];
    }
  }
  m[k][0] = Rational(1);
  for (std::size_t c = 0; c < p.dim; ++c) {
    m[k][c + 1] = p.points[j][c];
  }
  return det(std::move(m)).sign();
}

}  // namespace

std::set<VertexSubset> facets_bruteforce(const PointConfig& p) {
  const std::size_t n = p.points.size();
  std::set<VertexSubset> facets;
  for_each_combination(n, p.dim, [&](const std::vector<std::size_t>& idx) {
    int common = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (std::find(idx.begin(), idx.end(), j) != idx.end()) {
        continue;
      }
      const int s = side_sign(p, idx, j);
      if (s == 0) {
        throw std::invalid_argument("facets_bruteforce: general-position violation");
      }
      if (common == 0) {
        common = s;
      } else if (common != s) {
        return;
      }
    }
    VertexSubset facet;
    for (const auto i : idx) {
      facet.insert(p.labels[i]);
    }
    facets.insert(std::move(facet));
  });
  return facets;
}

std::string OracleReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["diagram"] = nlohmann::ordered_json::parse(diagram_json);
  doc["facet_count"] = facet_count;
  doc["mismatches"] = nlohmann::ordered_json::array();
  for (const auto& mm : mismatches) {
    nlohmann::ordered_json jm;
    jm["subset"] = std::vector<std::string>(mm.subset.begin(), mm.subset.end());
    jm["face_by_diagram"] = mm.face_by_diagram;
    jm["face_by_oracle"] = mm.face_by_oracle;
    doc["mismatches"].push_back(jm);
  }
  doc["ok"] = ok;
  return doc.dump(2) + "\n";
}

OracleReport verify_against_oracle(const Diagram& x, const OracleOptions& options) {
  const PointConfig p = gale_inverse(x);
  const auto facets = facets_bruteforce(p);
  const auto labels = x.labels();
  const std::size_t dim = static_cast<std::size_t>(2 * x.d());

  OracleReport report;
  report.facet_count = static_cast<long>(facets.size());
  report.diagram_json = diagram_to_json(x);

  const auto face_by_oracle = [&](const VertexSubset& s) {
    return std::any_of(facets.begin(), facets.end(), [&](const VertexSubset& f) {
      return std::includes(f.begin(), f.end(), s.begin(), s.end());
    });
  };
  const auto check = [&](const VertexSubset& s) {
    const bool by_diagram = is_face(x, s);
    const bool by_oracle = face_by_oracle(s);
    if (by_diagram != by_oracle) {
      report.mismatches.push_back({s, by_diagram, by_oracle});
    }
  };

  std::mt19937_64 rng(options.seed);
  for (std::size_t t = 1; t <= dim; ++t) {
    if (t == dim || t <= options.exhaustive_max_size) {
      for_each_combination(labels.size(), t, [&](const std::vector<std::size_t>& idx) {
        VertexSubset s;
        for (const auto i : idx) {
          s.insert(labels[i]);
        }
        check(s);
      });
    } else {
      for (std::size_t it = 0; it < options.samples; ++it) {
        std::vector<std::size_t> pool(labels.size());
        for (std::size_t i = 0; i < pool.size(); ++i) {
          pool[i] = i;
        }
        VertexSubset s;
        for (std::size_t c = 0; c < t; ++c) {
          const std::size_t pick =
              c + static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(pool.size() - c));
          std::swap(pool[c], pool[pick]);
          s.insert(labels[pool[c]]);
        }
        check(s);
      }
    }
  }
  std::sort(report.mismatches.begin(), report.mismatches.end(),
            [](const OracleMismatch& a, const OracleMismatch& b) { return a.subset < b.subset; });
  report.ok = report.mismatches.empty();
  return report;
}

}  // namespace galeforge
