#include "quartic/table.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace quartic {

namespace {

std::pair<Int, Int> canonical(Int x, Int y) {
  if (y < 0 || (y == 0 && x < 0)) return {-x, -y};
  return {x, y};
}

}  // namespace

bool TableReport::matches() const {
  if (!problems.empty()) return false;
  return std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.problems.empty(); });
}

bool same_solution_set(const std::vector<SolutionRecord>& got, const std::vector<ExpectedSolution>& want) {
  std::set<std::pair<Int, Int>> a, b;
  for (const auto& s : got) a.insert(canonical(s.x, s.y));
  for (const auto& s : want) b.insert(canonical(Int(s.x), Int(s.y)));
  return a == b && a.size() == got.size() && b.size() == want.size();
}

TableReport build_table(const TableOptions& opt) {
  TableReport report;
  const Int one = 1;
  std::vector<FormClass> classes = enumerate_forms(opt.I_max, opt.coeff_bound);
  std::vector<bool> used(expected_table().size(), false);

  for (auto& cls : classes) {
    TableRow row;
    row.cls = cls;
    const ExpectedRow* want = nullptr;
    for (std::size_t i = 0; i < expected_table().size(); ++i) {
      const ExpectedRow& e = expected_table()[i];
      if (Int(e.I) != cls.invariant_I || used[i]) continue;
      if (auto w = equivalent_up_to_sign(e.form, cls.representative)) {
        row.published = e.form;
        row.witness = w;
        used[i] = true;
        want = &e;
        break;
      }
    }
    QuarticForm target = row.published ? *row.published : cls.representative;
    row.solutions = solve_equation(target, one, opt.height_bound);
    populate_omegas(target, row.solutions, opt.precision_bits);
    row.census = census(row.solutions);
    row.representative_count = static_cast<long>(solve_equation(cls.representative, one, opt.height_bound).size());
    row.cls.solution_count = static_cast<long>(row.solutions.size());

    if (!want) {
      row.problems.push_back("class " + cls.representative.to_string() + " with I = " + cls.invariant_I.get_str() +
                             " is not in the published table");
    } else {
      if (!same_solution_set(row.solutions, want->solutions))
        row.problems.push_back("solution set differs from the published list");
      for (const auto& s : row.solutions) {
        Int value = target(s.x, s.y);
        for (const auto& e : want->solutions) {
          auto [ex, ey] = canonical(Int(e.x), Int(e.y));
          if (ex != s.x || ey != s.y) continue;
          if (e.value && value != *e.value)
            row.problems.push_back("F(" + s.x.get_str() + ", " + s.y.get_str() + ") = " + value.get_str());
          if (e.omega && s.omega_index != e.omega)
            row.problems.push_back("omega of (" + s.x.get_str() + ", " + s.y.get_str() + ") differs");
        }
      }
    }
    if (row.representative_count != static_cast<long>(row.solutions.size()))
      row.problems.push_back("representative has " + std::to_string(row.representative_count) + " solutions");
    if (!row.census.within_bounds) row.problems.push_back("per-omega census exceeds 3 or total exceeds 12");
    report.rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < expected_table().size(); ++i) {
    const ExpectedRow& e = expected_table()[i];
    if (!used[i] && e.I <= opt.I_max)
      report.problems.push_back("published class " + e.form.to_string() + " (I = " + std::to_string(e.I) +
                                ") was not enumerated");
  }
  return report;
}

}  // namespace quartic
