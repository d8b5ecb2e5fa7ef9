#pragma once

#include "hlab/form.hpp"

#include <vector>

namespace hlab {

struct PivotDiagnostics {
  double largest_pivot = 0.0;
  double smallest_accepted_ratio = 0.0; // min accepted pivot / largest pivot
  double largest_rejected_ratio = 0.0;  // max rejected residual / largest pivot
};

struct RankResult {
  int rank = 0;
  bool exact = false;
  PivotDiagnostics pivots;
};

// exact rank over the rationals
int rank_exact(std::vector<std::vector<Rational>> rows);

// floating rank: complete pivoting, pivots below rel_tol * (largest pivot)
// are treated as zero; diagnostics expose how decisive the cutoff was
RankResult rank_float(std::vector<std::vector<double>> rows, double rel_tol = 1e-8);

// rank of the span of a list of forms (shared coefficient grid)
int span_rank(const std::vector<QForm>& forms);
int span_rank(const std::vector<Form>& forms); // requires constant coefficients
RankResult span_rank_float(const std::vector<DForm>& forms, double rel_tol = 1e-8);

} // namespace hlab
