#pragma once

#include <cstddef>
#include <vector>

#include "randurv/bounds.hpp"
#include "randurv/matrix.hpp"
#include "randurv/rrr.hpp"

namespace randurv {

// The measured quantities of one factorization trial.  ratio1 and ratio2 are
// the two rank-revealing quality ratios (both >= 1 up to roundoff by Cauchy
// interlacing), norm3 the strong-rank-revealing block norm.  A trial whose
// leading block is numerically singular is flagged: its ratio1/norm3 are
// infinite and it is excluded from percentile statistics but still counted.
struct TrialRecord {
    std::size_t trial_index = 0;
    double ratio1 = 0.0;          // sigma_r / smin(R11)
    double ratio2 = 0.0;          // smax(R22) / sigma_{r+1}
    double norm3 = 0.0;           // |R11^{-1} R12|_2
    double backward_error = 0.0;  // |A - U R V|_F / |A|_F
    double orth_u = 0.0;          // |U^T U - I|_F
    double orth_v = 0.0;          // |V^T V - I|_F
    bool flagged = false;
};

// Order statistics of one metric over the non-flagged records of a run.
// p97 holds the value at the configured percentile (0.97 by default).
struct MetricStats {
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double p97 = 0.0;
    double max = 0.0;
    std::size_t exceed_count = 0;  // records above the matching bound
};

struct Summary {
    std::size_t count = 0;           // records included in the statistics
    std::size_t singular_count = 0;  // flagged records (excluded)
    double percentile = 0.97;
    MetricStats ratio1;
    MetricStats ratio2;
    MetricStats norm3;
    MetricStats backward_error;
};

// Value at percentile p of a sample, by linear interpolation at zero-based
// index p * (N - 1) of the sorted data.
double percentile_value(std::vector<double> values, double p);

// |a - u r v|_F / |a|_F; an exactly zero input with zero residual returns 0.
double backward_error(const Matrix& a, const Matrix& u, const Matrix& r, const Matrix& v);

// |q^T q - I|_F for square q.
double orthogonality_defect(const Matrix& q);

// Ratio and orthogonality part of the bundle, computable without the input
// matrix; backward_error is left 0.
TrialRecord rank_reveal_core(const std::vector<double>& sigma, const RurvResult& result,
                             std::size_t r);

// Full metric bundle for one factorization of the matrix `a`, which was
// synthesized from the spectrum `sigma`, split at index r.
TrialRecord rank_reveal_metrics(const std::vector<double>& sigma, const Matrix& a,
                                const RurvResult& result, std::size_t r);

// Reduction over a run's records against the probabilistic bound set.
// exceed counts compare ratio1 vs b1, ratio2 vs b2, and norm3 vs b4 when
// applicable (falling back to b3 when only the gap-dependent bound exists).
Summary summarize(const std::vector<TrialRecord>& records, const BoundSet& bounds,
                  double percentile = 0.97);

}  // namespace randurv
