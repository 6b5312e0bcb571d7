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

#include "qmeasure/checks.hpp"
#include "qmeasure/table.hpp"

namespace qmeasure {

/// Real-valued function on a finite universe, f(x_i) = values[i].
class FiniteFunction {
  public:
    FiniteFunction(Universe universe, std::vector<Rat> values);

    const Universe& universe() const { return universe_; }
    const std::vector<Rat>& values() const { return values_; }
    const Rat& at(int i) const { return values_[static_cast<std::size_t>(i)]; }
    int points() const { return universe_.size(); }

    /// max(f,0) and -min(f,0): the unique split f = f1 - f2 with
    /// f1, f2 >= 0 and f1*f2 = 0.
    FiniteFunction positive_part() const;
    FiniteFunction negative_part() const;

    SubsetMask support() const;
    /// {x : f(x) > lambda} (strict).
    SubsetMask superlevel_set(const Rat& lambda) const;

    static FiniteFunction indicator(const Universe& universe, SubsetMask a);
    static FiniteFunction constant(const Universe& universe, const Rat& c);

    FiniteFunction operator+(const FiniteFunction& other) const;
    FiniteFunction scaled(const Rat& c) const;
    FiniteFunction shifted(const Rat& c) const;
    /// Pointwise product with an indicator: f restricted to A.
    FiniteFunction restricted_to(SubsetMask a) const;

  private:
    Universe universe_;
    std::vector<Rat> values_;
};

/// lambda -> mu[f^{-1}(lambda, inf)], a right-continuous step function on
/// [0, inf) that is 0 beyond max f. thresholds[0] = 0 and plateaus[i] is the
/// value on [thresholds[i], thresholds[i+1]); the last plateau (beyond the
/// largest threshold) is 0. Negative values of f do not contribute.
struct LayerFunction {
    std::vector<Rat> thresholds;
    std::vector<Rat> plateaus;

    Rat evaluate(const Rat& lambda) const;
    /// Exact integral over [0, inf): sum of plateau * width.
    Rat integral() const;
};

/// Layer function of the nonnegative part of f under mu.
LayerFunction layer_function(const QMeasureTable& mu, const FiniteFunction& f);

/// The q-integral: integral of mu[f > lambda] over lambda >= 0 minus the
/// integral of mu[f < -lambda]. Exact when the inputs are exact.
Rat q_integral(const QMeasureTable& mu, const FiniteFunction& f);

/// Independent second route for nonnegative simple functions: the telescoped
/// pairwise-union expansion (level sets A1..An with values a1 < ... < an):
///   a1 [mu(A1uA2)+...+mu(A1uAn) - (n-2)mu(A1) - mu(A2) - ... - mu(An)]
/// + a2 [...] + ... + an mu(An).
/// Agrees with `q_integral` exactly on grade-2 additive tables.
Rat q_integral_closed_form(const QMeasureTable& mu, const FiniteFunction& f);

/// The representation-dependent sum over the canonical representation:
/// sum of c_i mu(level set of c_i) over distinct nonzero values. Kept as a
/// foil: it is ambiguous under non-canonical representations and has no
/// convergence theorem.
Rat naive_integral(const QMeasureTable& mu, const FiniteFunction& f);

/// Integral over A: q-integral of f * chi_A.
Rat restricted_integral(const QMeasureTable& mu, const FiniteFunction& f, SubsetMask a);

struct IntegralIdentityReport {
    Rat lhs;
    Rat rhs;
    bool match = false;
    std::vector<std::string> notes;
};

/// Grade-2 additivity of the q-integral for functions with mutually
/// disjoint support (throws otherwise, since the identity genuinely fails
/// for overlapping supports):
/// I(f+g+h) = I(f+g) + I(f+h) + I(g+h) - I(f) - I(g) - I(h).
IntegralIdentityReport theorem44_check(const QMeasureTable& mu, const FiniteFunction& f, const FiniteFunction& g,
                                       const FiniteFunction& h);

/// The n-function extension (3 to 5 functions, mutually disjoint supports):
/// sum_{i<j} I(fi+fj) - (n-2) sum I(fi). Returns the expansion; equals
/// I(sum fi) on grade-2 additive tables.
Rat integral_expand(const QMeasureTable& mu, const std::vector<FiniteFunction>& fs);

struct Grade2GapReport {
    Rat combined;        // I(f+g+h) for the overlapping quantum-coin triple
    Rat expansion;       // the six-term right-hand side
    bool gap = false;    // true: the two differ, as they must here
};

/// The overlapping-support counterexample on the quantum coin:
/// A={x1,x2}, B={x2,x3}, C={x3,x4} gives I = 5/4 but expansion 3/2.
Grade2GapReport grade2_integral_counterexample();

struct AdditivityEquivalenceReport {
    Rat combined;           // I(chi_A + chi_B)
    Rat sum_of_integrals;   // mu(A) + mu(B)
    Rat union_intersection; // mu(AuB) + mu(A^B), always equal to combined
    bool additive = false;
    bool compatible = false;  // A mu B; equivalent to additivity
};

/// I(chi_A + chi_B) = mu(AuB) + mu(A^B) always; additivity of the integral
/// holds exactly when A and B are compatible. Throws if the internal
/// identity fails (library bug) or the equivalence breaks.
AdditivityEquivalenceReport lemma43_check(const QMeasureTable& mu, SubsetMask a, SubsetMask b);

struct ConvergenceFailureReport {
    std::vector<Rat> naive_sequence;  // N(f_n) = 2 - 1/n
    Rat naive_limit;                  // 2
    Rat naive_of_limit;               // N(1) = 1
    std::vector<Rat> q_sequence;      // q-integral of f_n (constant 1)
    Rat q_of_limit;                   // q-integral of 1 = mu(X)
    bool naive_converges_wrong = false;
    bool q_converges_right = false;
};

/// On the three-point null-singleton space, the increasing sequence
/// f_n = chi_{x1,x2} + (1 - 1/n) chi_{x3} converges to 1, but the naive
/// integrals tend to 2 while N(1) = 1. The q-integral of the same sequence
/// is constantly 1 = q-integral of the limit.
ConvergenceFailureReport convergence_failure_demo(int max_n = 100);

/// g dominates f under mu: mu[f > t] <= mu[g > t] for every t (checked at
/// every breakpoint of either layer function and at midpoints between them).
bool dominates(const QMeasureTable& mu, const FiniteFunction& g, const FiniteFunction& f);

struct MonotoneConvergenceReport {
    std::vector<Rat> integrals;   // q-integral of each probed f_i
    Rat limit_integral;           // q-integral of the limit f
    Rat gap;                      // |I(f_{i_max}) - I(f)|
    bool domination_ok = false;
    bool increasing_ok = false;
    bool pass = false;
};

/// Monotone convergence on a finite space: f_i increasing to f, all
/// dominated by g; then I(f_i) -> I(f). The gap at i_max is compared
/// against `tol`.
MonotoneConvergenceReport monotone_convergence_check(const QMeasureTable& mu,
                                                     const std::function<FiniteFunction(int)>& sequence,
                                                     const FiniteFunction& limit, const FiniteFunction& dominator,
                                                     int i_max, const Rat& tol);

}  // namespace qmeasure
