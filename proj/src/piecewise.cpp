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

#include "qmeasure/piecewise.hpp"

#include <cmath>
#include <stdexcept>

namespace qmeasure {

PiecewiseMonotone::PiecewiseMonotone(std::vector<MonotonePiece> pieces, std::string description)
    : pieces_(std::move(pieces)), description_(std::move(description)) {
    if (pieces_.empty()) throw std::invalid_argument("at least one piece required");
    double cursor = 0.0;
    for (const auto& p : pieces_) {
        if (!p.eval) throw std::invalid_argument("piece without an evaluator");
        if (std::fabs(p.lo - cursor) > 1e-12) throw std::invalid_argument("pieces must partition [0,1] contiguously");
        if (!(p.lo < p.hi)) throw std::invalid_argument("piece domain must be nondegenerate");
        cursor = p.hi;
    }
    if (std::fabs(cursor - 1.0) > 1e-12) throw std::invalid_argument("pieces must cover [0,1]");
}

double PiecewiseMonotone::operator()(double x) const {
    for (const auto& p : pieces_)
        if (x <= p.hi || &p == &pieces_.back()) return p.eval(x);
    return pieces_.back().eval(x);
}

double PiecewiseMonotone::sup_on(const IntervalUnionD& domain) const {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& d : domain.pieces()) {
        for (const auto& p : pieces_) {
            double lo = std::max(d.lo, p.lo), hi = std::min(d.hi, p.hi);
            if (lo > hi) continue;
            best = std::max({best, p.eval(lo), p.eval(hi)});
        }
    }
    if (domain.includes_one()) best = std::max(best, (*this)(1.0));
    return best;
}

double PiecewiseMonotone::inf_on(const IntervalUnionD& domain) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& d : domain.pieces()) {
        for (const auto& p : pieces_) {
            double lo = std::max(d.lo, p.lo), hi = std::min(d.hi, p.hi);
            if (lo > hi) continue;
            best = std::min({best, p.eval(lo), p.eval(hi)});
        }
    }
    if (domain.includes_one()) best = std::min(best, (*this)(1.0));
    return best;
}

std::vector<double> PiecewiseMonotone::breakpoints() const {
    std::vector<double> out;
    for (const auto& p : pieces_) out.push_back(p.lo);
    out.push_back(pieces_.back().hi);
    return out;
}

bool PiecewiseMonotone::is_monotone() const {
    bool has_inc = false, has_dec = false;
    for (const auto& p : pieces_) {
        if (p.direction == Direction::increasing) has_inc = true;
        if (p.direction == Direction::decreasing) has_dec = true;
    }
    return !(has_inc && has_dec);
}

PiecewiseMonotone PiecewiseMonotone::identity() { return linear(1.0, 0.0); }

PiecewiseMonotone PiecewiseMonotone::monomial(int n) {
    if (n < 0) throw std::invalid_argument("monomial degree must be nonnegative");
    if (n == 0) return constant(1.0);
    MonotonePiece p;
    p.lo = 0.0;
    p.hi = 1.0;
    p.direction = Direction::increasing;
    p.eval = [n](double x) { return std::pow(x, n); };
    p.inverse = [n](double y) { return std::pow(y, 1.0 / n); };
    return PiecewiseMonotone({p}, n == 1 ? "x" : "x^" + std::to_string(n));
}

PiecewiseMonotone PiecewiseMonotone::exponential() {
    MonotonePiece p;
    p.lo = 0.0;
    p.hi = 1.0;
    p.direction = Direction::increasing;
    p.eval = [](double x) { return std::exp(x); };
    p.inverse = [](double y) { return std::log(y); };
    return PiecewiseMonotone({p}, "exp");
}

PiecewiseMonotone PiecewiseMonotone::quadratic_plus_linear() {
    MonotonePiece p;
    p.lo = 0.0;
    p.hi = 1.0;
    p.direction = Direction::increasing;
    p.eval = [](double x) { return x * x + x; };
    p.inverse = [](double y) { return -0.5 + 0.5 * std::sqrt(1.0 + 4.0 * y); };
    return PiecewiseMonotone({p}, "x^2+x");
}

PiecewiseMonotone PiecewiseMonotone::constant(double c) {
    MonotonePiece p;
    p.lo = 0.0;
    p.hi = 1.0;
    p.direction = Direction::constant;
    p.eval = [c](double) { return c; };
    return PiecewiseMonotone({p}, "const:" + format_decimal(c));
}

PiecewiseMonotone PiecewiseMonotone::step_indicator(double a, double b, double height) {
    if (!(0.0 <= a && a < b && b <= 1.0)) throw std::invalid_argument("indicator needs 0 <= a < b <= 1");
    std::vector<MonotonePiece> pieces;
    auto constant_piece = [](double lo, double hi, double c) {
        MonotonePiece p;
        p.lo = lo;
        p.hi = hi;
        p.direction = Direction::constant;
        p.eval = [c](double) { return c; };
        return p;
    };
    if (a > 0.0) pieces.push_back(constant_piece(0.0, a, 0.0));
    pieces.push_back(constant_piece(a, b, height));
    if (b < 1.0) pieces.push_back(constant_piece(b, 1.0, 0.0));
    return PiecewiseMonotone(std::move(pieces),
                             "indicator:" + format_decimal(a) + "," + format_decimal(b) + ":" + format_decimal(height));
}

PiecewiseMonotone PiecewiseMonotone::linear(double slope, double intercept) {
    MonotonePiece p;
    p.lo = 0.0;
    p.hi = 1.0;
    p.direction = slope > 0 ? Direction::increasing : (slope < 0 ? Direction::decreasing : Direction::constant);
    p.eval = [slope, intercept](double x) { return slope * x + intercept; };
    if (slope != 0.0) p.inverse = [slope, intercept](double y) { return (y - intercept) / slope; };
    return PiecewiseMonotone({p}, "linear:" + format_decimal(slope) + "," + format_decimal(intercept));
}

namespace {

double invert_on_piece(const MonotonePiece& p, double lambda) {
    double x;
    if (p.inverse) {
        x = p.inverse(lambda);
    } else {
        // Bisection fallback to 1e-13 interval width.
        double lo = p.lo, hi = p.hi;
        bool increasing = p.direction == Direction::increasing;
        for (int iter = 0; iter < 200 && hi - lo > 1e-13; ++iter) {
            double mid = 0.5 * (lo + hi);
            bool above = p.eval(mid) > lambda;
            if (above == increasing)
                hi = mid;
            else
                lo = mid;
        }
        x = 0.5 * (lo + hi);
    }
    x = std::clamp(x, p.lo, p.hi);
    double residual = std::fabs(p.eval(x) - lambda);
    if (residual > 1e-10 * std::max(1.0, std::fabs(lambda)))
        throw std::domain_error("inverse oracle out of tolerance (residual " + format_decimal(residual) + ")");
    return x;
}

}  // namespace

IntervalUnionD superlevel_set(const PiecewiseMonotone& f, double lambda, const IntervalUnionD& domain) {
    if (lambda < 0) throw std::invalid_argument("superlevel threshold must be nonnegative");
    std::vector<IntervalUnionD::Piece> pieces;
    for (const auto& p : f.pieces()) {
        double flo = p.eval(p.lo), fhi = p.eval(p.hi);
        switch (p.direction) {
            case Direction::constant:
                if (flo > lambda) pieces.push_back({p.lo, p.hi});
                break;
            case Direction::increasing:
                if (lambda >= fhi) break;                      // nothing exceeds
                if (lambda < flo) pieces.push_back({p.lo, p.hi});  // whole piece
                else pieces.push_back({invert_on_piece(p, lambda), p.hi});
                break;
            case Direction::decreasing:
                if (lambda >= flo) break;
                if (lambda < fhi) pieces.push_back({p.lo, p.hi});
                else pieces.push_back({p.lo, invert_on_piece(p, lambda)});
                break;
        }
    }
    bool one_in = f(1.0) > lambda;
    return IntervalUnionD::from_pieces(std::move(pieces), one_in) & domain;
}

IntervalUnionD sublevel_set(const PiecewiseMonotone& f, double threshold, const IntervalUnionD& domain) {
    std::vector<IntervalUnionD::Piece> pieces;
    for (const auto& p : f.pieces()) {
        double flo = p.eval(p.lo), fhi = p.eval(p.hi);
        switch (p.direction) {
            case Direction::constant:
                if (flo < threshold) pieces.push_back({p.lo, p.hi});
                break;
            case Direction::increasing:
                if (threshold <= flo) break;
                if (threshold > fhi) pieces.push_back({p.lo, p.hi});
                else pieces.push_back({p.lo, invert_on_piece(p, threshold)});
                break;
            case Direction::decreasing:
                if (threshold <= fhi) break;
                if (threshold > flo) pieces.push_back({p.lo, p.hi});
                else pieces.push_back({invert_on_piece(p, threshold), p.hi});
                break;
        }
    }
    bool one_in = f(1.0) < threshold;
    return IntervalUnionD::from_pieces(std::move(pieces), one_in) & domain;
}

PiecewiseMonotone parse_function_spec(const std::string& spec) {
    if (spec == "x") return PiecewiseMonotone::identity();
    if (spec == "exp") return PiecewiseMonotone::exponential();
    if (spec == "x^2+x") return PiecewiseMonotone::quadratic_plus_linear();
    if (spec.rfind("x^", 0) == 0) {
        try {
            std::size_t used = 0;
            int n = std::stoi(spec.substr(2), &used);
            if (used == spec.size() - 2 && n >= 0) return PiecewiseMonotone::monomial(n);
        } catch (const std::exception&) {
        }
        throw std::invalid_argument("bad monomial spec: " + spec);
    }
    if (spec.rfind("const:", 0) == 0) {
        try {
            return PiecewiseMonotone::constant(std::stod(spec.substr(6)));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad constant spec: " + spec);
        }
    }
    if (spec.rfind("linear:", 0) == 0) {
        std::string rest = spec.substr(7);
        std::size_t comma = rest.find(',');
        try {
            double slope = std::stod(rest.substr(0, comma));
            double intercept = comma == std::string::npos ? 0.0 : std::stod(rest.substr(comma + 1));
            return PiecewiseMonotone::linear(slope, intercept);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad linear spec: " + spec);
        }
    }
    if (spec.rfind("indicator:", 0) == 0) {
        std::string rest = spec.substr(10);
        std::size_t colon = rest.find(':');
        std::size_t comma = rest.find(',');
        if (colon == std::string::npos || comma == std::string::npos || comma > colon)
            throw std::invalid_argument("bad indicator spec: " + spec);
        try {
            double a = std::stod(rest.substr(0, comma));
            double b = std::stod(rest.substr(comma + 1, colon - comma - 1));
            double h = std::stod(rest.substr(colon + 1));
            return PiecewiseMonotone::step_indicator(a, b, h);
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("bad indicator spec: " + spec);
        }
    }
    throw std::invalid_argument("unknown function spec: " + spec);
}

}  // namespace qmeasure
