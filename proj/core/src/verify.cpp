// Copyright 2026 The astat Authors
// SPDX-License-Identifier: Apache-2.0

#include "astat/verify.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace astat {

namespace {

// Restriction to columns whose source state passes the selector.
Operator restrict_columns(const Operator& x, const StateSelector& keep) {
  Operator out(x.module(), x.grade());
  for (const auto& [rc, v] : x.entries()) {
    if (keep(x.module()->state_at(rc.second))) out.set_entry(rc.first, rc.second, v);
  }
  return out;
}

RelationReport vector_report(std::string identity, std::vector<int> indices,
                             const StatisticsFamily& family,
                             const std::vector<RadicalScalar>& residual) {
  RelationReport r;
  r.identity = std::move(identity);
  r.indices = std::move(indices);
  r.family = family;
  r.exact_pass = true;
  for (const auto& c : residual) {
    if (!c.is_zero()) r.exact_pass = false;
    r.residual_max_abs = std::max(r.residual_max_abs, std::abs(c.to_complex()));
  }
  return r;
}

}  // namespace

RelationReport make_report(std::string identity, std::vector<int> indices,
                           const Operator& residual) {
  RelationReport r;
  r.identity = std::move(identity);
  r.indices = std::move(indices);
  r.family = residual.module()->family();
  r.exact_pass = residual.is_zero();
  r.residual_max_abs = max_abs_entry(residual);
  return r;
}

Operator commutator(const Operator& x, const Operator& y) {
  return sub(compose(x, y), compose(y, x));
}

Operator anticommutator(const Operator& x, const Operator& y) {
  return add(compose(x, y), compose(y, x));
}

Operator bracket(const Operator& x, const Operator& y) {
  if (x.grade() == Parity::Odd && y.grade() == Parity::Odd) return anticommutator(x, y);
  return commutator(x, y);
}

CaoSet make_cao_set(std::shared_ptr<const FockModule> module, PhaseConvention phase) {
  CaoSet set;
  set.module = module;
  const int n = module->family().n;
  set.raise.reserve(n);
  set.lower.reserve(n);
  for (int i = 1; i <= n; ++i) {
    set.raise.push_back(creation(module, i, phase));
    set.lower.push_back(annihilation(module, i, phase));
  }
  return set;
}

std::vector<RelationReport> verify_A_relations(const CaoSet& ops) {
  const int n = static_cast<int>(ops.raise.size());
  std::vector<RelationReport> reports;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Operator inner = commutator(ops.raise[i - 1], ops.lower[j - 1]);
      for (int k = 1; k <= n; ++k) {
        Operator expected_plus(ops.module, ops.raise[0].grade());
        if (j == k) expected_plus = add(expected_plus, ops.raise[i - 1]);
        if (i == j) expected_plus = add(expected_plus, ops.raise[k - 1]);
        reports.push_back(make_report("A:[[a+,a-],a+]", {i, j, k},
                                      sub(commutator(inner, ops.raise[k - 1]), expected_plus)));

        Operator expected_minus(ops.module, ops.lower[0].grade());
        if (i == k) expected_minus = sub(expected_minus, ops.lower[j - 1]);
        if (i == j) expected_minus = sub(expected_minus, ops.lower[k - 1]);
        reports.push_back(make_report("A:[[a+,a-],a-]", {i, j, k},
                                      sub(commutator(inner, ops.lower[k - 1]), expected_minus)));
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      reports.push_back(make_report("A:[a+,a+]", {i, j},
                                    commutator(ops.raise[i - 1], ops.raise[j - 1])));
      reports.push_back(make_report("A:[a-,a-]", {i, j},
                                    commutator(ops.lower[i - 1], ops.lower[j - 1])));
    }
  }
  return reports;
}

std::vector<RelationReport> verify_A_relations(int n, int p) {
  return verify_A_relations(make_cao_set(build_module(StatisticsFamily::a(n, p))));
}

std::vector<RelationReport> verify_ASuper_relations(const CaoSet& ops) {
  const int n = static_cast<int>(ops.raise.size());
  std::vector<RelationReport> reports;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Operator inner = anticommutator(ops.raise[i - 1], ops.lower[j - 1]);
      for (int k = 1; k <= n; ++k) {
        Operator expected_plus(ops.module, ops.raise[0].grade());
        if (j == k) expected_plus = add(expected_plus, ops.raise[i - 1]);
        if (i == j) expected_plus = sub(expected_plus, ops.raise[k - 1]);
        reports.push_back(make_report("ASuper:[{a+,a-},a+]", {i, j, k},
                                      sub(commutator(inner, ops.raise[k - 1]), expected_plus)));

        Operator expected_minus(ops.module, ops.lower[0].grade());
        if (i == k) expected_minus = sub(expected_minus, ops.lower[j - 1]);
        if (i == j) expected_minus = add(expected_minus, ops.lower[k - 1]);
        reports.push_back(make_report("ASuper:[{a+,a-},a-]", {i, j, k},
                                      sub(commutator(inner, ops.lower[k - 1]), expected_minus)));
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      reports.push_back(make_report("ASuper:{a+,a+}", {i, j},
                                    anticommutator(ops.raise[i - 1], ops.raise[j - 1])));
      reports.push_back(make_report("ASuper:{a-,a-}", {i, j},
                                    anticommutator(ops.lower[i - 1], ops.lower[j - 1])));
    }
  }
  return reports;
}

std::vector<RelationReport> verify_ASuper_relations(int n, int p, PhaseConvention phase) {
  return verify_ASuper_relations(make_cao_set(build_module(StatisticsFamily::a_super(n, p)), phase));
}

std::vector<RelationReport> verify_paraFermi_relations(const CaoSet& ops, int p_expected) {
  const int n = static_cast<int>(ops.raise.size());
  std::vector<RelationReport> reports;
  const RadicalScalar two = RadicalScalar::from_int(2);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Operator inner = commutator(ops.raise[i - 1], ops.lower[j - 1]);
      Operator inner_pp = commutator(ops.raise[i - 1], ops.raise[j - 1]);
      Operator inner_mm = commutator(ops.lower[i - 1], ops.lower[j - 1]);
      for (int k = 1; k <= n; ++k) {
        Operator expected_plus(ops.module, ops.raise[0].grade());
        if (j == k) expected_plus = add(expected_plus, scale(two, ops.raise[i - 1]));
        reports.push_back(make_report("pF:[[f+,f-],f+]", {i, j, k},
                                      sub(commutator(inner, ops.raise[k - 1]), expected_plus)));

        Operator expected_minus(ops.module, ops.lower[0].grade());
        if (i == k) expected_minus = sub(expected_minus, scale(two, ops.lower[j - 1]));
        reports.push_back(make_report("pF:[[f+,f-],f-]", {i, j, k},
                                      sub(commutator(inner, ops.lower[k - 1]), expected_minus)));

        reports.push_back(make_report("pF:[[f+,f+],f+]", {i, j, k},
                                      commutator(inner_pp, ops.raise[k - 1])));
        reports.push_back(make_report("pF:[[f-,f-],f-]", {i, j, k},
                                      commutator(inner_mm, ops.lower[k - 1])));
      }
    }
  }
  // Vacuum/order condition: f_i^- f_j^+ |0> = d_ij * p * |0>.
  std::vector<RadicalScalar> vacuum(ops.module->dim());
  vacuum[ops.module->vacuum_index()] = RadicalScalar::one();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      std::vector<RadicalScalar> w = ops.lower[i - 1].apply(ops.raise[j - 1].apply(vacuum));
      if (i == j) {
        w[ops.module->vacuum_index()] -= RadicalScalar::from_int(p_expected);
      }
      reports.push_back(vector_report("pF:vacuum-order", {i, j}, ops.module->family(), w));
    }
  }
  return reports;
}

StateSelector interior_selector(const StatisticsFamily& family, int margin) {
  if (family.tag != FamilyTag::TruncatedBose) {
    return [](const Occupation&) { return true; };
  }
  const int cutoff = family.p;
  return [cutoff, margin](const Occupation& occ) {
    return std::all_of(occ.begin(), occ.end(),
                       [&](int l) { return l <= cutoff - margin; });
  };
}

std::vector<RelationReport> verify_paraBose_relations(const CaoSet& ops,
                                                      const StateSelector& interior) {
  const int n = static_cast<int>(ops.raise.size());
  std::vector<RelationReport> reports;
  const RadicalScalar two = RadicalScalar::from_int(2);
  auto restricted = [&](std::string identity, std::vector<int> indices, const Operator& residual) {
    return make_report(std::move(identity), std::move(indices),
                       restrict_columns(residual, interior));
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Operator inner = anticommutator(ops.raise[i - 1], ops.lower[j - 1]);
      Operator inner_pp = anticommutator(ops.raise[i - 1], ops.raise[j - 1]);
      Operator inner_mm = anticommutator(ops.lower[i - 1], ops.lower[j - 1]);
      for (int k = 1; k <= n; ++k) {
        Operator expected_plus(ops.module, ops.raise[0].grade());
        if (j == k) expected_plus = add(expected_plus, scale(two, ops.raise[i - 1]));
        reports.push_back(restricted("pB:[{b+,b-},b+]", {i, j, k},
                                     sub(commutator(inner, ops.raise[k - 1]), expected_plus)));

        Operator expected_minus(ops.module, ops.lower[0].grade());
        if (i == k) expected_minus = sub(expected_minus, scale(two, ops.lower[j - 1]));
        reports.push_back(restricted("pB:[{b+,b-},b-]", {i, j, k},
                                     sub(commutator(inner, ops.lower[k - 1]), expected_minus)));

        reports.push_back(restricted("pB:[{b+,b+},b+]", {i, j, k},
                                     commutator(inner_pp, ops.raise[k - 1])));
        reports.push_back(restricted("pB:[{b-,b-},b-]", {i, j, k},
                                     commutator(inner_mm, ops.lower[k - 1])));
      }
    }
  }
  // Bose commutation relations on the same interior block.
  Operator id = Operator::identity(ops.module);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Operator expected = i == j ? id : Operator(ops.module, Parity::Even);
      reports.push_back(restricted("Bose:[b-,b+]", {i, j},
                                   sub(commutator(ops.lower[i - 1], ops.raise[j - 1]), expected)));
      reports.push_back(restricted("Bose:[b+,b+]", {i, j},
                                   commutator(ops.raise[i - 1], ops.raise[j - 1])));
      reports.push_back(restricted("Bose:[b-,b-]", {i, j},
                                   commutator(ops.lower[i - 1], ops.lower[j - 1])));
    }
  }
  return reports;
}

std::vector<RelationReport> verify_gl_relations(int n, int p) {
  auto module = build_module(StatisticsFamily::a(n, p));
  std::vector<std::vector<Operator>> e;
  e.reserve(n + 1);
  for (int a = 0; a <= n; ++a) {
    std::vector<Operator> row;
    row.reserve(n + 1);
    for (int b = 0; b <= n; ++b) row.push_back(gl_generator(module, a, b));
    e.push_back(std::move(row));
  }

  std::vector<RelationReport> reports;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b)
      for (int c = 0; c <= n; ++c)
        for (int d = 0; d <= n; ++d) {
          Operator expected(module, Parity::Even);
          if (c == b) expected = add(expected, e[a][d]);
          if (a == d) expected = sub(expected, e[c][b]);
          reports.push_back(make_report("gl:[e,e]", {a, b, c, d},
                                        sub(commutator(e[a][b], e[c][d]), expected)));
        }

  Operator trace(module, Parity::Even);
  for (int a = 0; a <= n; ++a) trace = add(trace, e[a][a]);
  trace = sub(trace, scale(RadicalScalar::from_int(p), Operator::identity(module)));
  reports.push_back(make_report("gl:sum(e_aa)=p*I", {}, trace));
  return reports;
}

std::vector<RelationReport> verify_adjointness(const CaoSet& ops) {
  std::vector<RelationReport> reports;
  for (std::size_t i = 0; i < ops.raise.size(); ++i) {
    reports.push_back(make_report("adjoint:a-=(a+)^dag", {static_cast<int>(i + 1)},
                                  sub(ops.lower[i], ops.raise[i].adjoint())));
  }
  return reports;
}

SpanCheck span_membership(const std::vector<Operator>& generators, const Operator& target) {
  SpanCheck out;
  if (generators.empty()) {
    out.in_span = target.is_zero();
    return out;
  }

  // Vectorize over the union of occupied (row, col) positions.
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  for (const auto& g : generators)
    for (const auto& [rc, v] : g.entries()) positions.push_back(rc);
  for (const auto& [rc, v] : target.entries()) positions.push_back(rc);
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());

  const std::size_t rows = positions.size();
  const std::size_t cols = generators.size();
  std::vector<std::vector<RadicalScalar>> m(rows, std::vector<RadicalScalar>(cols));
  std::vector<RadicalScalar> rhs(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = generators[c].entry(positions[r].first, positions[r].second);
    rhs[r] = target.entry(positions[r].first, positions[r].second);
  }

  // Exact Gauss-Jordan over the radical field.
  std::vector<std::size_t> pivot_row_of_col(cols, rows);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (!m[r][c].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    std::swap(rhs[pivot], rhs[rank]);
    RadicalScalar inv = m[rank][c].inverse();
    for (std::size_t cc = c; cc < cols; ++cc) m[rank][cc] *= inv;
    rhs[rank] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      RadicalScalar factor = m[r][c];
      for (std::size_t cc = c; cc < cols; ++cc) m[r][cc] -= factor * m[rank][cc];
      rhs[r] -= factor * rhs[rank];
    }
    pivot_row_of_col[c] = rank;
    ++rank;
  }

  // Inconsistent row: zero coefficients, nonzero right-hand side.
  for (std::size_t r = rank; r < rows; ++r) {
    if (!rhs[r].is_zero()) return out;
  }

  out.coefficients.assign(cols, RadicalScalar::zero());
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_row_of_col[c] < rows) out.coefficients[c] = rhs[pivot_row_of_col[c]];
  }
  out.in_span = true;
  return out;
}

std::vector<RelationReport> verify_A_closure(int n, int p) {
  auto module = build_module(StatisticsFamily::a(n, p));
  CaoSet ops = make_cao_set(module);

  std::vector<Operator> caos;
  std::vector<std::vector<int>> cao_labels;  // {sign, mode}: sign +1 raise, -1 lower
  for (int i = 1; i <= n; ++i) {
    caos.push_back(ops.raise[i - 1]);
    cao_labels.push_back({+1, i});
    caos.push_back(ops.lower[i - 1]);
    cao_labels.push_back({-1, i});
  }

  std::vector<Operator> span = caos;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b) span.push_back(gl_generator(module, a, b));

  std::vector<RelationReport> reports;
  auto in_span_report = [&](std::string identity, std::vector<int> indices, const Operator& t) {
    RelationReport r;
    r.identity = std::move(identity);
    r.indices = std::move(indices);
    r.family = module->family();
    r.exact_pass = span_membership(span, t).in_span;
    r.residual_max_abs = r.exact_pass ? 0.0 : max_abs_entry(t);
    reports.push_back(std::move(r));
  };

  std::vector<Operator> first_brackets;
  std::vector<std::vector<int>> first_labels;
  for (std::size_t x = 0; x < caos.size(); ++x) {
    for (std::size_t y = 0; y < caos.size(); ++y) {
      Operator b = commutator(caos[x], caos[y]);
      std::vector<int> label = {cao_labels[x][0], cao_labels[x][1],
                                cao_labels[y][0], cao_labels[y][1]};
      in_span_report("closure:[cao,cao]", label, b);
      first_brackets.push_back(std::move(b));
      first_labels.push_back(std::move(label));
    }
  }
  for (std::size_t b = 0; b < first_brackets.size(); ++b) {
    for (std::size_t z = 0; z < caos.size(); ++z) {
      std::vector<int> label = first_labels[b];
      label.push_back(cao_labels[z][0]);
      label.push_back(cao_labels[z][1]);
      in_span_report("closure:[[cao,cao],cao]", label,
                     commutator(first_brackets[b], caos[z]));
    }
  }
  return reports;
}

bool all_pass(const std::vector<RelationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const RelationReport& r) { return r.exact_pass; });
}

std::size_t count_failures(const std::vector<RelationReport>& reports) {
  return static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(),
                    [](const RelationReport& r) { return !r.exact_pass; }));
}

std::string summary_line(std::string_view suite_name,
                         const std::vector<RelationReport>& reports) {
  std::ostringstream os;
  os << suite_name << ": " << reports.size() << " instances, " << count_failures(reports)
     << " failures";
  return os.str();
}

void to_json(nlohmann::json& j, const RelationReport& r) {
  j = nlohmann::json{{"identity", r.identity},
                     {"indices", r.indices},
                     {"family", r.family},
                     {"residual_max_abs", r.residual_max_abs},
                     {"exact_pass", r.exact_pass}};
}

}  // namespace astat
