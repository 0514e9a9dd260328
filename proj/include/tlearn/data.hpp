#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace tlearn {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

enum class OutcomeKind { continuous, binary };

/// Maps CSV columns onto the (W, A, Y) roles.
struct ColumnSchema {
  std::vector<std::string> covariate_names;
  std::string treatment_name;
  std::string outcome_name;
  OutcomeKind outcome_kind = OutcomeKind::continuous;

  /// Throws bad_argument when names collide or are empty.
  void check() const;
};

/// One observed-data sample: rows are units O_i = (W_i, A_i, Y_i).
/// Immutable by convention after construction; safe to share across threads.
struct Dataset {
  Matrix covariates;  // n x p, column j named covariate_names[j]
  std::vector<std::string> covariate_names;
  Vector treatment;  // entries exactly 0.0 or 1.0
  Vector outcome;
  OutcomeKind outcome_kind = OutcomeKind::continuous;
  std::string treatment_name = "A";
  std::string outcome_name = "Y";

  Eigen::Index n() const { return outcome.size(); }
  Eigen::Index p() const { return covariates.cols(); }

  Dataset rows(const std::vector<Eigen::Index>& idx) const;
};

enum class ViolationKind {
  empty_dataset,
  shape_mismatch,
  non_finite_covariate,
  non_finite_outcome,
  bad_treatment,
  binary_outcome_violation,
};

/// A single invariant violation; row is 1-based (0 = dataset-level).
struct Violation {
  ViolationKind kind;
  std::ptrdiff_t row = 0;
  std::string detail;
};

/// Parses header+body CSV per the schema. Data rows are numbered from 1 in
/// error messages. Accepts LF or CRLF; cells must be finite decimals
/// (scientific notation allowed, '.' separator, locale-independent).
Dataset parse_csv(std::istream& in, const ColumnSchema& schema);
Dataset parse_csv_file(const std::string& path, const ColumnSchema& schema);

/// Returns every invariant violation (empty result = valid). Never throws.
std::vector<Violation> validate_dataset(const Dataset& ds);

/// Renders with 17 significant digits so parse_csv(serialize_csv(ds))
/// round-trips bit-exactly.
std::string serialize_csv(const Dataset& ds);

struct ColumnSummary {
  std::string name;
  double mean = 0, min = 0, max = 0;
};

struct DatasetSummary {
  Eigen::Index n = 0;
  std::vector<ColumnSummary> columns;  // covariates then outcome
  double treated_fraction = 0;
};

DatasetSummary summarize(const Dataset& ds);

std::string violation_text(const Violation& v);

}  // namespace tlearn
