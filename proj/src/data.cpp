#include "tlearn/data.hpp"

#include "tlearn/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace tlearn {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(',', start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  std::size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& cell, double& out) {
  const std::string t = trim(cell);
  if (t.empty()) return false;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last && std::isfinite(out);
}

void render_double(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

}  // namespace

void ColumnSchema::check() const {
  std::set<std::string> seen;
  auto add = [&](const std::string& name, const char* role) {
    if (name.empty())
      fail(ErrorCode::bad_argument, std::string(role) + " column name is empty");
    if (!seen.insert(name).second)
      fail(ErrorCode::bad_argument, "duplicate column name '" + name + "'");
  };
  for (const auto& c : covariate_names) add(c, "covariate");
  add(treatment_name, "treatment");
  add(outcome_name, "outcome");
}

Dataset Dataset::rows(const std::vector<Eigen::Index>& idx) const {
  Dataset out;
  out.covariate_names = covariate_names;
  out.outcome_kind = outcome_kind;
  out.treatment_name = treatment_name;
  out.outcome_name = outcome_name;
  const Eigen::Index m = static_cast<Eigen::Index>(idx.size());
  out.covariates.resize(m, covariates.cols());
  out.treatment.resize(m);
  out.outcome.resize(m);
  for (Eigen::Index r = 0; r < m; ++r) {
    out.covariates.row(r) = covariates.row(idx[static_cast<std::size_t>(r)]);
    out.treatment[r] = treatment[idx[static_cast<std::size_t>(r)]];
    out.outcome[r] = outcome[idx[static_cast<std::size_t>(r)]];
  }
  return out;
}

Dataset parse_csv(std::istream& in, const ColumnSchema& schema) {
  schema.check();
  std::string line;
  if (!std::getline(in, line))
    fail(ErrorCode::empty_body, "input has no header row");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  const std::vector<std::string> header = split_fields(line);
  auto column_of = [&](const std::string& name) -> std::size_t {
    for (std::size_t j = 0; j < header.size(); ++j)
      if (trim(header[j]) == name) return j;
    fail(ErrorCode::missing_column, "column '" + name + "' not found in header");
  };

  std::vector<std::size_t> cov_cols;
  cov_cols.reserve(schema.covariate_names.size());
  for (const auto& name : schema.covariate_names) cov_cols.push_back(column_of(name));
  const std::size_t a_col = column_of(schema.treatment_name);
  const std::size_t y_col = column_of(schema.outcome_name);

  std::vector<std::vector<double>> w_rows;
  std::vector<double> a_vals, y_vals;
  std::ptrdiff_t row = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ++row;
    const std::vector<std::string> fields = split_fields(line);
    auto cell = [&](std::size_t col) -> const std::string& {
      if (col >= fields.size())
        fail(ErrorCode::non_numeric_cell,
             "row " + std::to_string(row) + ": missing cell in column " +
                 std::to_string(col + 1));
      return fields[col];
    };
    auto numeric = [&](std::size_t col) {
      double v;
      if (!parse_double(cell(col), v))
        fail(ErrorCode::non_numeric_cell,
             "row " + std::to_string(row) + ", column '" + trim(header[col]) +
                 "': cannot parse '" + trim(cell(col)) + "' as a finite number");
      return v;
    };
    std::vector<double> w(cov_cols.size());
    for (std::size_t j = 0; j < cov_cols.size(); ++j) w[j] = numeric(cov_cols[j]);
    const double a = numeric(a_col);
    if (a != 0.0 && a != 1.0)
      fail(ErrorCode::bad_treatment_value,
           "row " + std::to_string(row) + ": treatment value must be 0 or 1");
    const double y = numeric(y_col);
    if (schema.outcome_kind == OutcomeKind::binary && y != 0.0 && y != 1.0)
      fail(ErrorCode::non_numeric_cell,
           "row " + std::to_string(row) + ": binary outcome must be 0 or 1");
    w_rows.push_back(std::move(w));
    a_vals.push_back(a);
    y_vals.push_back(y);
  }
  if (row == 0) fail(ErrorCode::empty_body, "no data rows after the header");

  Dataset ds;
  ds.covariate_names = schema.covariate_names;
  ds.outcome_kind = schema.outcome_kind;
  ds.treatment_name = schema.treatment_name;
  ds.outcome_name = schema.outcome_name;
  const Eigen::Index n = static_cast<Eigen::Index>(row);
  const Eigen::Index p = static_cast<Eigen::Index>(cov_cols.size());
  ds.covariates.resize(n, p);
  ds.treatment.resize(n);
  ds.outcome.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < p; ++j)
      ds.covariates(i, j) = w_rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    ds.treatment[i] = a_vals[static_cast<std::size_t>(i)];
    ds.outcome[i] = y_vals[static_cast<std::size_t>(i)];
  }
  return ds;
}

Dataset parse_csv_file(const std::string& path, const ColumnSchema& schema) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io_failure, "cannot open '" + path + "'");
  return parse_csv(in, schema);
}

std::vector<Violation> validate_dataset(const Dataset& ds) {
  std::vector<Violation> out;
  if (ds.n() < 1) {
    out.push_back({ViolationKind::empty_dataset, 0, "dataset has no rows"});
    return out;
  }
  if (ds.covariates.rows() != ds.n() || ds.treatment.size() != ds.n() ||
      static_cast<Eigen::Index>(ds.covariate_names.size()) != ds.p()) {
    out.push_back({ViolationKind::shape_mismatch, 0,
                   "covariate/treatment/outcome lengths disagree"});
    return out;
  }
  for (Eigen::Index i = 0; i < ds.n(); ++i) {
    for (Eigen::Index j = 0; j < ds.p(); ++j)
      if (!std::isfinite(ds.covariates(i, j))) {
        out.push_back({ViolationKind::non_finite_covariate, i + 1,
                       "covariate '" + ds.covariate_names[static_cast<std::size_t>(j)] +
                           "' is not finite"});
      }
    if (ds.treatment[i] != 0.0 && ds.treatment[i] != 1.0)
      out.push_back({ViolationKind::bad_treatment, i + 1, "treatment not in {0,1}"});
    if (!std::isfinite(ds.outcome[i]))
      out.push_back({ViolationKind::non_finite_outcome, i + 1, "outcome is not finite"});
    else if (ds.outcome_kind == OutcomeKind::binary && ds.outcome[i] != 0.0 &&
             ds.outcome[i] != 1.0)
      out.push_back({ViolationKind::binary_outcome_violation, i + 1,
                     "binary outcome not in {0,1}"});
  }
  return out;
}

std::string serialize_csv(const Dataset& ds) {
  std::string out;
  for (const auto& name : ds.covariate_names) {
    out += name;
    out += ',';
  }
  out += ds.treatment_name;
  out += ',';
  out += ds.outcome_name;
  out += '\n';
  for (Eigen::Index i = 0; i < ds.n(); ++i) {
    for (Eigen::Index j = 0; j < ds.p(); ++j) {
      render_double(out, ds.covariates(i, j));
      out += ',';
    }
    render_double(out, ds.treatment[i]);
    out += ',';
    render_double(out, ds.outcome[i]);
    out += '\n';
  }
  return out;
}

DatasetSummary summarize(const Dataset& ds) {
  if (ds.n() < 1) fail(ErrorCode::empty_data, "summarize requires n >= 1");
  DatasetSummary s;
  s.n = ds.n();
  for (Eigen::Index j = 0; j < ds.p(); ++j) {
    const auto col = ds.covariates.col(j);
    s.columns.push_back({ds.covariate_names[static_cast<std::size_t>(j)],
                         col.mean(), col.minCoeff(), col.maxCoeff()});
  }
  s.columns.push_back({ds.outcome_name, ds.outcome.mean(), ds.outcome.minCoeff(),
                       ds.outcome.maxCoeff()});
  s.treated_fraction = ds.treatment.mean();
  return s;
}

std::string violation_text(const Violation& v) {
  std::ostringstream os;
  os << "row " << v.row << ": " << v.detail;
  return os.str();
}

}  // namespace tlearn
