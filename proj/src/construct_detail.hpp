#pragma once

// Helpers shared by the constructor sources. Not installed.

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cnniep/realization.hpp"

namespace cnniep::detail {

using Params = std::vector<std::pair<std::string, double>>;

/// Checks lambda0 >= 0, b_j > 0, reals nonincreasing, at least `min_reals`
/// reals, each < 0, and lambda0 + sum(reals) - 2 sum|z| >= -slack.
void require_standard_hypotheses(double lambda0, std::span<const double> reals,
                                 std::span<const Complex> pairs, std::size_t min_reals);

/// b > 0 and finite parts for every pair representative.
void require_valid_pairs(std::span<const Complex> pairs);

/// Margin slack for a construction with Perron root lambda0.
double margin_slack(double lambda0);

/// Throws ConditionFailed(inequality, margin) when margin < -slack.
void require_margin(const std::string& inequality, double margin, double slack);

/// Flat multiset {lambda0} + reals + each pair and its conjugate.
std::vector<Complex> flat_spectrum(double lambda0, std::span<const double> reals,
                                   std::span<const Complex> pairs);

/// Removes the element nearest to `value`; InternalCheck if it is not close.
void remove_one(std::vector<Complex>& values, Complex value);

/// Eigenvalues (larger first) and the unit nonnegative eigenvector of the
/// larger one for the symmetric [[p, r], [r, q]] with r >= 0.
struct Symmetric2x2 {
  double larger = 0.0;
  double smaller = 0.0;
  double v0 = 0.0;
  double v1 = 0.0;
};
Symmetric2x2 symmetric_2x2(double p, double r, double q);

/// Validates a realization used as input to a combination step: square,
/// nonnegative, normal, Perron vector unit, nonnegative and an eigenvector
/// for the recorded root; when `centro`, also centrosymmetric with an
/// exchange-symmetric Perron vector.
void require_combinable(const Realization& r, bool centro, const char* who);

/// Enforces exact centrosymmetry on a result that should already be
/// centrosymmetric up to rounding.
DenseMatrix finalize_centro(const DenseMatrix& m, const char* who);

TraceStep make_step(std::string operation, Params params, const Realization& r);

void append_traces(RealizationTrace& out, const RealizationTrace& part);

Vector uniform_vector(std::size_t n);

}  // namespace cnniep::detail
