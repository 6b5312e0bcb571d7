/**
 * Copyright 2026 The qmeasure Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <functional>
#include <vector>

#include "qmeasure/pair_matrix.hpp"
#include "qmeasure/report.hpp"

namespace qmeasure {

using RealVector = std::vector<double>;

/// Symmetric bilinear form B(u,v) = u^T M v on R^n.
class BilinearForm {
  public:
    BilinearForm(int dim, std::vector<std::vector<double>> matrix);

    int dim() const { return dim_; }
    double at(int i, int j) const { return matrix_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const std::vector<std::vector<double>>& matrix() const { return matrix_; }

    double operator()(const RealVector& u, const RealVector& v) const;

  private:
    int dim_;
    std::vector<std::vector<double>> matrix_;
};

/// Total map Q: R^n -> R, either wrapping a bilinear form or a caller
/// supplied black box. Black boxes can only be probed, never proved
/// quadratic; reports say which probe set passed.
class QuadraticForm {
  public:
    QuadraticForm(int dim, std::function<double(const RealVector&)> evaluator);
    explicit QuadraticForm(const BilinearForm& b);

    int dim() const { return dim_; }
    double operator()(const RealVector& v) const { return evaluator_(v); }

  private:
    int dim_;
    std::function<double(const RealVector&)> evaluator_;
};

/// Probe-set parameters for the black-box checks: basis vectors, pairwise
/// basis sums, plus seeded uniform vectors in [-1,1]^n.
struct ProbeConfig {
    std::uint64_t seed = 1729;
    int random_probes = 1000;
    double tolerance = 1e-8;  // relative, scaled by the magnitudes involved
};

/// Q(v) = B(v,v).
double eval_Q(const BilinearForm& b, const RealVector& v);

/// B(u,v) = [Q(u+v) - Q(u) - Q(v)] / 2. The alternative form
/// [Q(u+v) - Q(u-v)] / 4 is computed as well; the two agree for genuinely
/// quadratic Q and a disagreement beyond 1e-9 throws.
double polarize(const QuadraticForm& q, const RealVector& u, const RealVector& v);

/// Q(u+v) + Q(u-v) = 2[Q(u) + Q(v)] on the probe set.
CheckReport parallelogram_check(const QuadraticForm& q, const ProbeConfig& config = {});

/// Q(u+v+w) = Q(u+v) + Q(u+w) + Q(v+w) - Q(u) - Q(v) - Q(w) on probe
/// triples, plus evenness Q(-v) = Q(v). Equivalent to the parallelogram law
/// for continuous Q; the report records that both verdicts agree.
CheckReport grade2_form_check(const QuadraticForm& q, const ProbeConfig& config = {});

/// Reconstructs the matrix of Q by polarizing basis pairs, after checking
/// the parallelogram law on the probe set. Verifies the reconstruction
/// against Q on seeded random vectors; throws with a witness on failure.
BilinearForm from_quadratic(const QuadraticForm& q, int dim, const ProbeConfig& config = {});

/// sum_{i<j} Q(vi+vj) - (n-2) sum Q(vi) for n >= 3 vectors. Equals
/// Q(sum vi) for grade-2 additive Q; for exactly 4 vectors the alternating
/// grade-3 expansion is verified as well (throws on mismatch).
double graden_form_expand(const QuadraticForm& q, const std::vector<RealVector>& vs, double tolerance = 1e-8);

/// The quantum form induced by a pair matrix: Q_q(f) = sum_ij lambda_ij f_i f_j,
/// exact in rational arithmetic. For an indicator f = chi_A this equals
/// lambda(A x A) = mu(A).
Rat quantum_form(const PairMeasureMatrix& lambda, const std::vector<Rat>& f);

struct QuantumFormMeasureReport {
    Rat quantum_form_value;     // f^T lambda f with the diagonal atom matrix
    Rat squared_integral;       // sum f_i^2 w_i
    bool match = false;
    double deviation = 0.0;
};

/// When mu is an ordinary measure with weights w, the induced quantum form
/// is f -> sum f_i^2 w_i. Builds the diagonal atom matrix (lambda(AxB) =
/// mu(A^B) has atoms only on the diagonal) and compares the two routes.
QuantumFormMeasureReport theorem36_check(const FiniteMeasure& nu, const RealVector& f);

}  // namespace qmeasure
