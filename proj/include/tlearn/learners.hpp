#pragma once

#include "tlearn/data.hpp"

#include <string>
#include <vector>

namespace tlearn {

enum class LearnerFamily { mean, ols, ols_interact, poly2, lasso, logistic, knn, cart };

/// A candidate algorithm plus its tuning parameters. Different tuning choices
/// of the same family enter the Super Learner roster as distinct candidates.
struct LearnerSpec {
  LearnerFamily family = LearnerFamily::ols;
  double lambda = 0.1;  // lasso: penalty >= 0
  int k = 5;            // knn: neighbors >= 1
  int max_depth = 3;    // cart
  int min_leaf = 5;     // cart
  int degree = 1;       // logistic: 1 = plain basis, 2 = poly2 basis

  std::string name() const;
  void check() const;
  /// Parses "lasso(0.1)", "knn(5)", "cart(3)", "cart(3,1)", "logistic_poly2", ...
  static LearnerSpec parse(const std::string& text);
};

/// How raw (A, W) maps to design columns. Ordering is fixed: intercept,
/// A (if present), W columns, then family-specific terms.
enum class BasisKind {
  none,      // mean: no design matrix
  raw,       // knn/cart: [A?, W] unexpanded
  plain,     // [1, A?, W]
  interact,  // [1, A, W, A*W_j]
  poly2,     // [1, A?, W, W_j^2, W_j*W_k (j<k)]
};

BasisKind basis_for(const LearnerSpec& spec);

Matrix expand_basis(const Matrix& W, const Vector* a, BasisKind kind);

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0;
  int left = -1, right = -1;
  double value = 0;
};

struct FittedLearner {
  LearnerSpec spec;
  BasisKind basis = BasisKind::plain;
  bool uses_treatment = false;
  Vector coef;             // linear families, aligned with expand_basis columns
  bool converged = true;   // logistic only
  Matrix train_features;   // knn
  Vector train_targets;    // knn
  std::vector<TreeNode> tree;  // cart
};

/// Fits one candidate on (W, a, y). `a` may be null for treatment-free tasks
/// (e.g. propensity regression on W alone). Offsets are honored by the ols
/// and logistic families only. Deterministic: no internal randomness.
FittedLearner fit_learner(const LearnerSpec& spec, const Matrix& W, const Vector* a,
                          const Vector& y, const Vector* weights = nullptr,
                          const Vector* offset = nullptr);

/// Pure function of (fit, inputs). Logistic-family predictions are
/// probabilities clamped to [1e-12, 1-1e-12].
Vector predict_learner(const FittedLearner& fit, const Matrix& W, const Vector* a);

struct LogisticFit {
  Vector beta;
  bool converged = false;
  int iterations = 0;
};

/// Weighted logistic MLE with offset via Newton-Raphson. Convergence is
/// declared when the weighted-mean score has sup-norm <= 1e-10; otherwise
/// coefficients are clamped into [-40, 40] and converged=false is returned.
/// Targets may be fractional in [0,1]. Also powers the TMLE targeting step.
LogisticFit solve_logistic(const Matrix& X, const Vector& y,
                           const Vector* weights = nullptr,
                           const Vector* offset = nullptr);

/// Minimum-norm weighted least squares (pseudo-inverse on rank deficiency).
Vector ols_solve(const Matrix& X, const Vector& y, const Vector* weights = nullptr,
                 const Vector* offset = nullptr);

inline double expit(double x) { return 1.0 / (1.0 + std::exp(-x)); }

inline double logit(double p) { return std::log(p / (1.0 - p)); }

inline double clamp_probability(double p) {
  return std::min(1.0 - 1e-12, std::max(1e-12, p));
}

}  // namespace tlearn
