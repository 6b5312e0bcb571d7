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

#include "qmeasure/checks.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace qmeasure {

std::string CheckReport::summary() const {
    std::string out = name + ": " + (pass ? "pass" : "fail");
    if (!pass && !witness.empty()) out += " at " + witness;
    out += " (" + std::to_string(cases_checked) + (sampled ? " sampled" : " exhaustive") + " cases)";
    for (const auto& n : notes) out += "; " + n;
    return out;
}

namespace {

std::string format_triple(const Universe& u, SubsetMask a, SubsetMask b, SubsetMask c) {
    return "A=" + u.format_subset(a) + " B=" + u.format_subset(b) + " C=" + u.format_subset(c);
}

// Visits every assignment of the n points to {rest, A, B, C} and evaluates
// the grade-2 identity on the double view. Stops at the first violation so
// the witness is the first one in enumeration order.
struct Grade2Sweep {
    const std::vector<double>& v;
    int n;
    double tol;

    std::uint64_t checked = 0;
    double max_dev = 0.0;
    bool failed = false;
    std::uint32_t wa = 0, wb = 0, wc = 0;

    void test(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        double lhs = v[a | b | c];
        double rhs = v[a | b] + v[a | c] + v[b | c] - v[a] - v[b] - v[c];
        double dev = std::fabs(lhs - rhs);
        ++checked;
        if (dev > max_dev) max_dev = dev;
        if (dev > tol) {
            failed = true;
            wa = a;
            wb = b;
            wc = c;
        }
    }

    void run(int i, std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        if (failed) return;
        if (i == n) {
            test(a, b, c);
            return;
        }
        std::uint32_t bit = 1u << i;
        run(i + 1, a, b, c);
        run(i + 1, a | bit, b, c);
        run(i + 1, a, b | bit, c);
        run(i + 1, a, b, c | bit);
    }
};

}  // namespace

CheckReport grade2_check(const QMeasureTable& mu, const CheckConfig& config) {
    CheckReport report;
    report.name = "grade2";
    report.notes.push_back("continuity conditions on monotone sequences: satisfied by finiteness");
    const auto& v = mu.value_doubles();
    int n = mu.points();

    Grade2Sweep sweep{v, n, config.tolerance};
    if (n <= config.exhaustive_max_points) {
        sweep.run(0, 0, 0, 0);
    } else {
        report.sampled = true;
        report.seed = config.seed;
        std::mt19937_64 rng(config.seed);
        for (std::uint64_t s = 0; s < config.sample_count && !sweep.failed; ++s) {
            std::uint64_t word = rng();
            std::uint32_t a = 0, b = 0, c = 0;
            for (int i = 0; i < n; ++i) {
                switch ((word >> (2 * i)) & 3u) {
                    case 1: a |= 1u << i; break;
                    case 2: b |= 1u << i; break;
                    case 3: c |= 1u << i; break;
                    default: break;
                }
            }
            sweep.test(a, b, c);
        }
    }

    report.pass = !sweep.failed;
    report.cases_checked = sweep.checked;
    report.max_deviation = sweep.max_dev;
    if (sweep.failed)
        report.witness = format_triple(mu.universe(), SubsetMask{sweep.wa}, SubsetMask{sweep.wb}, SubsetMask{sweep.wc});
    return report;
}

namespace {

struct GradeNSweep {
    const std::vector<double>& v;
    int n;
    int parts;  // n_grade + 1
    double tol;
    std::vector<std::uint32_t> assignment;  // part masks

    std::uint64_t checked = 0;
    double max_dev = 0.0;
    bool failed = false;
    std::vector<std::uint32_t> witness;

    GradeNSweep(const std::vector<double>& values, int points, int part_count, double tolerance)
        : v(values), n(points), parts(part_count), tol(tolerance), assignment(static_cast<std::size_t>(part_count), 0) {}

    void test() {
        // Union masks for every subset S of the parts, by lowest-bit DP.
        std::uint32_t subsets = 1u << parts;
        static thread_local std::vector<std::uint32_t> un;
        un.assign(subsets, 0);
        for (std::uint32_t s = 1; s < subsets; ++s) {
            std::uint32_t low = s & (~s + 1);
            un[s] = un[s ^ low] | assignment[static_cast<std::size_t>(std::countr_zero(low))];
        }
        double lhs = v[un[subsets - 1]];
        double rhs = 0.0;
        int n_grade = parts - 1;
        for (std::uint32_t s = 1; s + 1 < subsets; ++s) {
            int k = std::popcount(s);
            double term = v[un[s]];
            rhs += ((n_grade - k) % 2 == 0) ? term : -term;
        }
        double dev = std::fabs(lhs - rhs);
        ++checked;
        if (dev > max_dev) max_dev = dev;
        if (dev > tol) {
            failed = true;
            witness.assign(assignment.begin(), assignment.end());
        }
    }

    void run(int i) {
        if (failed) return;
        if (i == n) {
            test();
            return;
        }
        std::uint32_t bit = 1u << i;
        run(i + 1);
        for (int p = 0; p < parts && !failed; ++p) {
            assignment[static_cast<std::size_t>(p)] |= bit;
            run(i + 1);
            assignment[static_cast<std::size_t>(p)] &= ~bit;
        }
    }
};

}  // namespace

CheckReport graden_check(const QMeasureTable& mu, int n_grade, const CheckConfig& config) {
    if (n_grade < 2) throw std::invalid_argument("grade must be at least 2");
    CheckReport report;
    report.name = "grade" + std::to_string(n_grade);
    const auto& v = mu.value_doubles();
    int n = mu.points();
    int parts = n_grade + 1;

    double leaves = std::pow(static_cast<double>(parts + 1), n);
    GradeNSweep sweep(v, n, parts, config.tolerance);
    if (n <= config.exhaustive_max_points && leaves <= 2.5e7) {
        sweep.run(0);
    } else {
        report.sampled = true;
        report.seed = config.seed;
        std::mt19937_64 rng(config.seed);
        std::uniform_int_distribution<int> pick(0, parts);
        for (std::uint64_t s = 0; s < config.sample_count && !sweep.failed; ++s) {
            std::fill(sweep.assignment.begin(), sweep.assignment.end(), 0u);
            for (int i = 0; i < n; ++i) {
                int p = pick(rng);
                if (p > 0) sweep.assignment[static_cast<std::size_t>(p - 1)] |= 1u << i;
            }
            sweep.test();
        }
    }

    report.pass = !sweep.failed;
    report.cases_checked = sweep.checked;
    report.max_deviation = sweep.max_dev;
    if (sweep.failed) {
        std::string w;
        for (std::size_t p = 0; p < sweep.witness.size(); ++p) {
            if (p) w += " ";
            w += "A" + std::to_string(p + 1) + "=" + mu.universe().format_subset(SubsetMask{sweep.witness[p]});
        }
        report.witness = w;
    }
    return report;
}

CheckReport theorem21_check(const QMeasureTable& mu, const CheckConfig& config) {
    CheckReport report;
    report.name = "grade2-pair-identity";
    const auto& v = mu.value_doubles();
    int n = mu.points();
    std::uint32_t count = mu.subset_count();
    std::uint32_t full = count - 1;

    bool failed = false;
    std::uint32_t wa = 0, wb = 0;
    if (n <= config.exhaustive_max_points) {
        for (std::uint32_t a = 0; a < count && !failed; ++a) {
            for (std::uint32_t b = 0; b < count; ++b) {
                double lhs = v[a | b];
                double rhs = v[a] + v[b] - v[a & b] + v[a ^ b] - v[a & (full ^ b)] - v[b & (full ^ a)];
                double dev = std::fabs(lhs - rhs);
                ++report.cases_checked;
                if (dev > report.max_deviation) report.max_deviation = dev;
                if (dev > config.tolerance) {
                    failed = true;
                    wa = a;
                    wb = b;
                    break;
                }
            }
        }
    } else {
        report.sampled = true;
        report.seed = config.seed;
        std::mt19937_64 rng(config.seed);
        for (std::uint64_t s = 0; s < config.sample_count && !failed; ++s) {
            std::uint32_t a = static_cast<std::uint32_t>(rng()) & full;
            std::uint32_t b = static_cast<std::uint32_t>(rng()) & full;
            double lhs = v[a | b];
            double rhs = v[a] + v[b] - v[a & b] + v[a ^ b] - v[a & (full ^ b)] - v[b & (full ^ a)];
            double dev = std::fabs(lhs - rhs);
            ++report.cases_checked;
            if (dev > report.max_deviation) report.max_deviation = dev;
            if (dev > config.tolerance) {
                failed = true;
                wa = a;
                wb = b;
            }
        }
    }
    report.pass = !failed;
    if (failed)
        report.witness = "A=" + mu.universe().format_subset(SubsetMask{wa}) + " B=" + mu.universe().format_subset(SubsetMask{wb});

    // The pair identity is equivalent to grade-2 additivity; record that the
    // two independently computed verdicts agree.
    CheckReport g2 = grade2_check(mu, config);
    report.notes.push_back(std::string("grade2 verdict: ") + (g2.pass ? "pass" : "fail"));
    if (g2.pass != report.pass) {
        report.pass = false;
        report.notes.push_back("VERDICT DISAGREEMENT with grade-2 sweep");
    } else {
        report.notes.push_back("verdicts agree");
    }
    return report;
}

Rat disjoint_union_expand(const QMeasureTable& mu, const std::vector<SubsetMask>& parts) {
    if (parts.size() < 3) throw std::invalid_argument("expansion needs at least 3 parts");
    SubsetMask seen;
    for (SubsetMask p : parts) {
        if (!mu.universe().valid(p)) throw std::invalid_argument("part outside the universe");
        if (!p.disjoint_with(seen)) throw std::invalid_argument("parts are not mutually disjoint");
        seen = seen | p;
    }
    Rat sum = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j) sum += mu[parts[i] | parts[j]];
    Rat singles = 0;
    for (SubsetMask p : parts) singles += mu[p];
    return sum - Rat(static_cast<long>(parts.size()) - 2) * singles;
}

bool is_compatible(const QMeasureTable& mu, SubsetMask a, SubsetMask b, double tolerance) {
    if (!mu.universe().valid(a) || !mu.universe().valid(b))
        throw std::invalid_argument("subset outside the table's universe");
    SubsetMask ac = mu.universe().complement(a);
    SubsetMask bc = mu.universe().complement(b);
    Rat tol = Rat(tolerance);

    Rat d1 = mu[a | b] - (mu[a] + mu[b] - mu[a & b]);
    bool compatible = abs_rat(d1) <= tol;

    // Equivalent form via the symmetric difference; the two can only
    // disagree when the table is not grade-2 additive.
    Rat d2 = mu[a ^ b] - (mu[a & bc] + mu[ac & b]);
    bool alt = abs_rat(d2) <= tol;
    if (compatible != alt)
        throw std::logic_error("compatibility forms disagree at A=" + mu.universe().format_subset(a) +
                               " B=" + mu.universe().format_subset(b) +
                               "; the table is not grade-2 additive");
    return compatible;
}

namespace {

constexpr int kMaxExhaustiveCenterPoints = 12;

bool compatible_fast(const std::vector<double>& v, std::uint32_t full, std::uint32_t a, std::uint32_t b,
                     double tol) {
    double d1 = v[a | b] - (v[a] + v[b] - v[a & b]);
    double d2 = v[a ^ b] - (v[a & (full ^ b)] + v[b & (full ^ a)]);
    bool c1 = std::fabs(d1) <= tol;
    bool c2 = std::fabs(d2) <= tol;
    if (c1 != c2) throw std::logic_error("compatibility forms disagree; the table is not grade-2 additive");
    return c1;
}

}  // namespace

std::vector<SubsetMask> mu_center(const QMeasureTable& mu, double tolerance) {
    if (mu.points() > kMaxExhaustiveCenterPoints)
        throw std::invalid_argument("universe too large for exhaustive center computation");
    const auto& v = mu.value_doubles();
    std::uint32_t count = mu.subset_count();
    std::uint32_t full = count - 1;
    std::vector<SubsetMask> center;
    for (std::uint32_t a = 0; a < count; ++a) {
        bool central = true;
        for (std::uint32_t b = 0; b < count; ++b) {
            if (!compatible_fast(v, full, a, b, tolerance)) {
                central = false;
                break;
            }
        }
        if (central) center.push_back(SubsetMask{a});
    }
    return center;
}

bool is_splitting(const QMeasureTable& mu, SubsetMask a, double tolerance) {
    if (!mu.universe().valid(a)) throw std::invalid_argument("subset outside the table's universe");
    const auto& v = mu.value_doubles();
    std::uint32_t count = mu.subset_count();
    std::uint32_t full = count - 1;
    std::uint32_t ac = full ^ a.bits;
    for (std::uint32_t b = 0; b < count; ++b)
        if (std::fabs(v[b] - v[b & a.bits] - v[b & ac]) > tolerance) return false;
    return true;
}

CheckReport center_measure_check(const QMeasureTable& mu, const CheckConfig& config) {
    CheckReport report;
    report.name = "center-measure";
    const auto& v = mu.value_doubles();
    const Universe& u = mu.universe();
    std::uint32_t count = mu.subset_count();

    std::vector<SubsetMask> center = mu_center(mu, config.tolerance);

    // Splitting sets coincide with the center.
    std::size_t next_central = 0;
    for (std::uint32_t a = 0; a < count; ++a) {
        bool in_center = next_central < center.size() && center[next_central].bits == a;
        if (in_center) ++next_central;
        ++report.cases_checked;
        if (is_splitting(mu, SubsetMask{a}, config.tolerance) != in_center) {
            report.pass = false;
            report.witness = "splitting/center mismatch at " + u.format_subset(SubsetMask{a});
            return report;
        }
    }

    // mu restricted to the center is additive on disjoint pairs.
    for (SubsetMask a : center) {
        for (SubsetMask b : center) {
            if (!a.disjoint_with(b)) continue;
            ++report.cases_checked;
            double dev = std::fabs(v[a.bits | b.bits] - v[a.bits] - v[b.bits]);
            if (dev > report.max_deviation) report.max_deviation = dev;
            if (dev > config.tolerance) {
                report.pass = false;
                report.witness = "additivity fails at A=" + u.format_subset(a) + " B=" + u.format_subset(b);
                return report;
            }
        }
    }

    // Relativized additivity: for disjoint A1..Ak in the center (k <= 3) and
    // any B, mu(union of B^Ai) = sum mu(B^Ai). Large centers (ordinary
    // measures) are decimated to stay within a fixed budget.
    std::size_t z = center.size();
    std::uint64_t families = z * z * z;
    std::uint64_t budget = 20'000'000 / std::max<std::uint64_t>(count, 1);
    std::uint64_t stride = families > budget ? families / budget + 1 : 1;
    if (stride > 1) report.notes.push_back("family sweep decimated by stride " + std::to_string(stride));

    std::uint64_t family_index = 0;
    for (std::size_t i = 0; i < z; ++i) {
        for (std::size_t j = i + 1; j < z; ++j) {
            if (!center[i].disjoint_with(center[j])) continue;
            for (std::size_t k = j; k < z; ++k) {
                bool pair_only = k == j;  // family {Ai, Aj}
                SubsetMask a3 = pair_only ? SubsetMask::empty() : center[k];
                if (!pair_only && (!a3.disjoint_with(center[i]) || !a3.disjoint_with(center[j]))) continue;
                if (family_index++ % stride != 0) continue;
                for (std::uint32_t b = 0; b < count; ++b) {
                    // For a pair family p3 is empty and contributes mu(empty) = 0.
                    std::uint32_t p1 = b & center[i].bits, p2 = b & center[j].bits, p3 = b & a3.bits;
                    double dev = std::fabs(v[p1 | p2 | p3] - v[p1] - v[p2] - v[p3]);
                    ++report.cases_checked;
                    if (dev > report.max_deviation) report.max_deviation = dev;
                    if (dev > config.tolerance) {
                        report.pass = false;
                        report.witness = "relativized additivity fails for B=" + u.format_subset(SubsetMask{b}) +
                                         " A1=" + u.format_subset(center[i]) + " A2=" + u.format_subset(center[j]) +
                                         (pair_only ? "" : " A3=" + u.format_subset(a3));
                        return report;
                    }
                }
            }
        }
    }
    return report;
}

RegularityReport regularity_check(const QMeasureTable& mu, double tolerance) {
    if (mu.points() > kMaxExhaustiveCenterPoints)
        throw std::invalid_argument("universe too large for exhaustive regularity check");
    RegularityReport report;
    const auto& v = mu.value_doubles();
    const Universe& u = mu.universe();
    std::uint32_t count = mu.subset_count();
    std::uint32_t full = count - 1;

    for (std::uint32_t a = 0; a < count; ++a) {
        if (v[a] > tolerance) continue;
        // mu(A) = 0: disjoint unions with A keep their value, and subsets
        // of A stay null under complete regularity.
        std::uint32_t comp = full ^ a;
        for (std::uint32_t b = comp;; b = (b - 1) & comp) {
            ++report.cases_checked;
            if (report.regular && std::fabs(v[a | b] - v[b]) > tolerance) {
                report.regular = false;
                report.witness_regular =
                    "mu(A)=0 but mu(AuB) != mu(B) for A=" + u.format_subset(SubsetMask{a}) + " B=" + u.format_subset(SubsetMask{b});
            }
            if (b == 0) break;
        }
        for (std::uint32_t b = a;; b = (b - 1) & a) {
            ++report.cases_checked;
            if (report.completely_regular && v[b] > tolerance) {
                report.completely_regular = false;
                report.witness_complete =
                    "mu(A)=0 but mu(B)>0 for B=" + u.format_subset(SubsetMask{b}) + " subset of A=" + u.format_subset(SubsetMask{a});
            }
            if (b == 0) break;
        }
    }

    // mu(AuB) = 0 for disjoint A, B forces mu(A) = mu(B).
    for (std::uint32_t un = 0; un < count && report.regular; ++un) {
        if (v[un] > tolerance) continue;
        for (std::uint32_t a = un;; a = (a - 1) & un) {
            ++report.cases_checked;
            if (std::fabs(v[a] - v[un ^ a]) > tolerance) {
                report.regular = false;
                report.witness_regular =
                    "mu(AuB)=0 but mu(A) != mu(B) for A=" + u.format_subset(SubsetMask{a}) + " B=" + u.format_subset(SubsetMask{un ^ a});
                break;
            }
            if (a == 0) break;
        }
    }

    report.completely_regular = report.completely_regular && report.regular;
    return report;
}

EquivalenceReport theorem24_check(const QMeasureTable& mu, const Rat& total, double tolerance) {
    EquivalenceReport report;
    const Universe& u = mu.universe();
    std::uint32_t count = mu.subset_count();
    Rat tol = Rat(tolerance);

    std::vector<SubsetMask> center = mu_center(mu, tolerance);
    std::vector<bool> central(count, false);
    for (SubsetMask a : center) central[a.bits] = true;

    for (std::uint32_t a = 0; a < count; ++a) {
        SubsetMask mask{a};
        SubsetMask comp = u.complement(mask);
        bool in_center = central[a];
        bool self_compatible = is_compatible(mu, mask, comp, tolerance);
        bool total_matches = abs_rat(mu[mask] + mu[comp] - total) <= tol;
        ++report.cases_checked;
        if (in_center != self_compatible || self_compatible != total_matches) {
            report.equivalent = false;
            report.witness = "A=" + u.format_subset(mask) + ": center=" + (in_center ? "y" : "n") +
                             " compat(A,A')=" + (self_compatible ? "y" : "n") +
                             " sum=total=" + (total_matches ? "y" : "n");
            return report;
        }
    }
    return report;
}

}  // namespace qmeasure
