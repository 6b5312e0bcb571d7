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

#include "qmeasure/forms.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace qmeasure {

namespace {

void require_dim(int dim, const RealVector& v, const char* what) {
    if (static_cast<int>(v.size()) != dim) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

RealVector add(const RealVector& a, const RealVector& b) {
    RealVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RealVector sub(const RealVector& a, const RealVector& b) {
    RealVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

RealVector negate(const RealVector& a) {
    RealVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return out;
}

double scaled_tol(double tol, std::initializer_list<double> magnitudes) {
    double scale = 1.0;
    for (double m : magnitudes) scale = std::max(scale, std::fabs(m));
    return tol * scale;
}

// Basis vectors, pairwise basis sums, then seeded uniform vectors.
std::vector<RealVector> probe_vectors(int dim, const ProbeConfig& config) {
    std::vector<RealVector> probes;
    for (int i = 0; i < dim; ++i) {
        RealVector e(static_cast<std::size_t>(dim), 0.0);
        e[static_cast<std::size_t>(i)] = 1.0;
        probes.push_back(std::move(e));
    }
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            RealVector e(static_cast<std::size_t>(dim), 0.0);
            e[static_cast<std::size_t>(i)] = 1.0;
            e[static_cast<std::size_t>(j)] = 1.0;
            probes.push_back(std::move(e));
        }
    }
    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int k = 0; k < config.random_probes; ++k) {
        RealVector v(static_cast<std::size_t>(dim));
        for (auto& x : v) x = unit(rng);
        probes.push_back(std::move(v));
    }
    return probes;
}

// All basis pairs (including u = v) plus `random_probes` seeded random pairs.
std::vector<std::pair<RealVector, RealVector>> probe_pairs(int dim, const ProbeConfig& config) {
    std::vector<std::pair<RealVector, RealVector>> pairs;
    std::vector<RealVector> basis;
    for (int i = 0; i < dim; ++i) {
        RealVector e(static_cast<std::size_t>(dim), 0.0);
        e[static_cast<std::size_t>(i)] = 1.0;
        basis.push_back(std::move(e));
    }
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) pairs.emplace_back(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]);
    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int k = 0; k < config.random_probes; ++k) {
        RealVector u(static_cast<std::size_t>(dim)), v(static_cast<std::size_t>(dim));
        for (auto& x : u) x = unit(rng);
        for (auto& x : v) x = unit(rng);
        pairs.emplace_back(std::move(u), std::move(v));
    }
    return pairs;
}

}  // namespace

BilinearForm::BilinearForm(int dim, std::vector<std::vector<double>> matrix)
    : dim_(dim), matrix_(std::move(matrix)) {
    if (matrix_.size() != static_cast<std::size_t>(dim)) throw std::invalid_argument("matrix dimension mismatch");
    for (const auto& row : matrix_)
        if (row.size() != static_cast<std::size_t>(dim)) throw std::invalid_argument("matrix must be square");
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            if (at(i, j) != at(j, i)) throw std::invalid_argument("bilinear form matrix must be symmetric");
}

double BilinearForm::operator()(const RealVector& u, const RealVector& v) const {
    require_dim(dim_, u, "bilinear form");
    require_dim(dim_, v, "bilinear form");
    double sum = 0.0;
    for (int i = 0; i < dim_; ++i) {
        double row = 0.0;
        for (int j = 0; j < dim_; ++j) row += at(i, j) * v[static_cast<std::size_t>(j)];
        sum += u[static_cast<std::size_t>(i)] * row;
    }
    return sum;
}

QuadraticForm::QuadraticForm(int dim, std::function<double(const RealVector&)> evaluator)
    : dim_(dim), evaluator_(std::move(evaluator)) {}

QuadraticForm::QuadraticForm(const BilinearForm& b)
    : dim_(b.dim()), evaluator_([b](const RealVector& v) { return b(v, v); }) {}

double eval_Q(const BilinearForm& b, const RealVector& v) { return b(v, v); }

double polarize(const QuadraticForm& q, const RealVector& u, const RealVector& v) {
    require_dim(q.dim(), u, "polarize");
    require_dim(q.dim(), v, "polarize");
    double quv = q(add(u, v));
    double qu = q(u);
    double qv = q(v);
    double primary = (quv - qu - qv) / 2.0;
    double alternative = (quv - q(sub(u, v))) / 4.0;
    if (std::fabs(primary - alternative) > scaled_tol(1e-9, {quv, qu, qv}))
        throw std::logic_error("polarization forms disagree; Q is not quadratic");
    return primary;
}

CheckReport parallelogram_check(const QuadraticForm& q, const ProbeConfig& config) {
    CheckReport report;
    report.name = "parallelogram";
    report.sampled = true;
    report.seed = config.seed;

    std::vector<std::pair<RealVector, RealVector>> pairs = probe_pairs(q.dim(), config);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [u, v] = pairs[i];
        double lhs = q(add(u, v)) + q(sub(u, v));
        double rhs = 2.0 * (q(u) + q(v));
        double dev = std::fabs(lhs - rhs);
        ++report.cases_checked;
        if (dev > report.max_deviation) report.max_deviation = dev;
        if (dev > scaled_tol(config.tolerance, {lhs, rhs})) {
            report.pass = false;
            report.witness = "probe pair " + std::to_string(i);
            break;
        }
    }
    report.notes.push_back("passed on probe set only; probing cannot prove Q quadratic");
    return report;
}

CheckReport grade2_form_check(const QuadraticForm& q, const ProbeConfig& config) {
    CheckReport report;
    report.name = "grade2-form";
    report.sampled = true;
    report.seed = config.seed;

    std::vector<RealVector> probes = probe_vectors(q.dim(), config);
    for (std::size_t i = 0; i < probes.size() && report.pass; ++i) {
        const RealVector& u = probes[i];
        double qu = q(u);
        double qnu = q(negate(u));
        ++report.cases_checked;
        if (std::fabs(qu - qnu) > scaled_tol(config.tolerance, {qu, qnu})) {
            report.pass = false;
            report.witness = "evenness fails at probe " + std::to_string(i);
            break;
        }
        const RealVector& v = probes[(i + 1) % probes.size()];
        const RealVector& w = probes[(i + 2) % probes.size()];
        double lhs = q(add(add(u, v), w));
        double rhs = q(add(u, v)) + q(add(u, w)) + q(add(v, w)) - qu - q(v) - q(w);
        double dev = std::fabs(lhs - rhs);
        ++report.cases_checked;
        if (dev > report.max_deviation) report.max_deviation = dev;
        if (dev > scaled_tol(config.tolerance, {lhs, rhs})) {
            report.pass = false;
            report.witness = "grade-2 identity fails at probe triple " + std::to_string(i);
        }
    }

    CheckReport para = parallelogram_check(q, config);
    report.notes.push_back(std::string("parallelogram verdict: ") + (para.pass ? "pass" : "fail"));
    if (para.pass != report.pass) {
        report.pass = false;
        report.notes.push_back("VERDICT DISAGREEMENT with parallelogram check");
    } else {
        report.notes.push_back("verdicts agree");
    }
    return report;
}

BilinearForm from_quadratic(const QuadraticForm& q, int dim, const ProbeConfig& config) {
    CheckReport para = parallelogram_check(q, config);
    if (!para.pass)
        throw std::invalid_argument("parallelogram law fails on the probe set at " + para.witness +
                                    "; Q is not quadratic");

    std::vector<std::vector<double>> matrix(static_cast<std::size_t>(dim),
                                            std::vector<double>(static_cast<std::size_t>(dim)));
    for (int i = 0; i < dim; ++i) {
        RealVector ei(static_cast<std::size_t>(dim), 0.0);
        ei[static_cast<std::size_t>(i)] = 1.0;
        for (int j = i; j < dim; ++j) {
            RealVector ej(static_cast<std::size_t>(dim), 0.0);
            ej[static_cast<std::size_t>(j)] = 1.0;
            double value = polarize(q, ei, ej);
            matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = value;
            matrix[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = value;
        }
    }
    BilinearForm b(dim, std::move(matrix));

    std::mt19937_64 rng(config.seed + 1);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    int checks = std::max(100, config.random_probes / 10);
    for (int k = 0; k < checks; ++k) {
        RealVector v(static_cast<std::size_t>(dim));
        for (auto& x : v) x = unit(rng);
        double reconstructed = b(v, v);
        double direct = q(v);
        if (std::fabs(reconstructed - direct) > scaled_tol(config.tolerance, {reconstructed, direct}))
            throw std::invalid_argument("reconstruction mismatch on probe vector " + std::to_string(k) +
                                        "; Q was not quadratic");
    }
    return b;
}

double graden_form_expand(const QuadraticForm& q, const std::vector<RealVector>& vs, double tolerance) {
    if (vs.size() < 3) throw std::invalid_argument("expansion needs at least 3 vectors");
    for (const auto& v : vs) require_dim(q.dim(), v, "graden_form_expand");

    double pairs = 0.0;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) pairs += q(add(vs[i], vs[j]));
    double singles = 0.0;
    for (const auto& v : vs) singles += q(v);
    double rhs = pairs - (static_cast<double>(vs.size()) - 2.0) * singles;

    if (vs.size() == 4) {
        // Alternating grade-3 expansion: triples - pairs + singles.
        double triples = 0.0;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j)
                for (std::size_t k = j + 1; k < 4; ++k) triples += q(add(add(vs[i], vs[j]), vs[k]));
        double grade3 = triples - pairs + singles;
        RealVector total = vs[0];
        for (std::size_t i = 1; i < 4; ++i) total = add(total, vs[i]);
        double direct = q(total);
        if (std::fabs(grade3 - direct) > scaled_tol(tolerance, {grade3, direct}))
            throw std::logic_error("grade-3 alternating expansion disagrees with Q(sum)");
    }
    return rhs;
}

Rat quantum_form(const PairMeasureMatrix& lambda, const std::vector<Rat>& f) {
    if (f.size() != static_cast<std::size_t>(lambda.dim()))
        throw std::invalid_argument("quantum form: dimension mismatch");
    Rat sum = 0;
    for (int i = 0; i < lambda.dim(); ++i) {
        if (f[static_cast<std::size_t>(i)] == 0) continue;
        Rat row = 0;
        for (int j = 0; j < lambda.dim(); ++j) row += lambda.at(i, j) * f[static_cast<std::size_t>(j)];
        sum += f[static_cast<std::size_t>(i)] * row;
    }
    return sum;
}

QuantumFormMeasureReport theorem36_check(const FiniteMeasure& nu, const RealVector& f) {
    if (!nu.nonnegative()) throw std::invalid_argument("measure has a negative weight");
    if (f.size() != static_cast<std::size_t>(nu.universe().size()))
        throw std::invalid_argument("function length must match universe size");

    // lambda(A x B) = mu(A ^ B): atoms only on the diagonal.
    int n = nu.universe().size();
    std::vector<std::vector<Rat>> entries(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = nu.weights()[static_cast<std::size_t>(i)];
    PairMeasureMatrix lambda(nu.universe(), std::move(entries));

    std::vector<Rat> fr;
    fr.reserve(f.size());
    for (double x : f) fr.emplace_back(x);

    QuantumFormMeasureReport report;
    report.quantum_form_value = quantum_form(lambda, fr);
    Rat direct = 0;
    for (std::size_t i = 0; i < fr.size(); ++i) direct += fr[i] * fr[i] * nu.weights()[i];
    report.squared_integral = direct;
    report.deviation = std::fabs(to_double(report.quantum_form_value - direct));
    report.match = abs_rat(report.quantum_form_value - direct) <= Rat(1e-12);
    return report;
}

}  // namespace qmeasure
