#include "conserv/utility.hpp"

#include <algorithm>
#include <cmath>

#include "conserv/errors.hpp"
#include "conserv/tolerances.hpp"

namespace conserv {

namespace {

void check_domain(const OutcomeInterval& d) {
    if (!std::isfinite(d.lo) || !std::isfinite(d.hi) || !(d.lo < d.hi))
        throw ValidationError("outcomes", "outcome interval must satisfy lo < hi");
}

void check_affine(double scale, double shift) {
    if (!(scale > 0.0) || !std::isfinite(scale)) throw ValidationError("utility/scale", "scale must be positive");
    if (!std::isfinite(shift)) throw ValidationError("utility/shift", "shift must be finite");
}

}  // namespace

UtilityFunction UtilityFunction::linear(OutcomeInterval domain, double scale, double shift) {
    check_domain(domain);
    check_affine(scale, shift);
    UtilityFunction u;
    u.kind_ = Kind::linear;
    u.domain_ = domain;
    u.scale_ = scale;
    u.shift_ = shift;
    return u;
}

UtilityFunction UtilityFunction::power(OutcomeInterval domain, double exponent, double scale, double shift) {
    check_domain(domain);
    check_affine(scale, shift);
    if (domain.lo < 0.0) throw ValidationError("outcomes", "power utility needs a nonnegative domain");
    if (!(exponent > 0.0) || !std::isfinite(exponent))
        throw ValidationError("utility/exponent", "exponent must be positive");
    UtilityFunction u;
    u.kind_ = Kind::power;
    u.domain_ = domain;
    u.scale_ = scale;
    u.shift_ = shift;
    u.exponent_ = exponent;
    return u;
}

UtilityFunction UtilityFunction::piecewise_linear(std::vector<std::pair<double, double>> knots, double scale,
                                                  double shift) {
    check_affine(scale, shift);
    if (knots.size() < 2) throw ValidationError("utility/knots", "need at least two knots");
    for (std::size_t i = 0; i < knots.size(); ++i) {
        if (!std::isfinite(knots[i].first) || !std::isfinite(knots[i].second))
            throw ValidationError("utility/knots/" + std::to_string(i), "non-finite knot");
        if (i > 0 && !(knots[i].first > knots[i - 1].first && knots[i].second > knots[i - 1].second))
            throw ValidationError("utility/knots/" + std::to_string(i), "knots must be strictly increasing");
    }
    UtilityFunction u;
    u.kind_ = Kind::piecewise_linear;
    u.domain_ = {knots.front().first, knots.back().first};
    u.scale_ = scale;
    u.shift_ = shift;
    u.knots_ = std::move(knots);
    return u;
}

double UtilityFunction::base(double x) const {
    switch (kind_) {
        case Kind::linear:
            return x;
        case Kind::power:
            return std::pow(x, exponent_);
        case Kind::piecewise_linear: {
            auto it = std::upper_bound(knots_.begin(), knots_.end(), x,
                                       [](double v, const auto& k) { return v < k.first; });
            if (it == knots_.begin()) return knots_.front().second;
            if (it == knots_.end()) return knots_.back().second;
            const auto& [x1, v1] = *it;
            const auto& [x0, v0] = *(it - 1);
            return v0 + (v1 - v0) * (x - x0) / (x1 - x0);
        }
    }
    return x;
}

double UtilityFunction::base_inverse(double v) const {
    switch (kind_) {
        case Kind::linear:
            return v;
        case Kind::power:
            return std::pow(std::max(v, 0.0), 1.0 / exponent_);
        case Kind::piecewise_linear: {
            auto it = std::upper_bound(knots_.begin(), knots_.end(), v,
                                       [](double y, const auto& k) { return y < k.second; });
            if (it == knots_.begin()) return knots_.front().first;
            if (it == knots_.end()) return knots_.back().first;
            const auto& [x1, v1] = *it;
            const auto& [x0, v0] = *(it - 1);
            return x0 + (x1 - x0) * (v - v0) / (v1 - v0);
        }
    }
    return v;
}

double UtilityFunction::operator()(double x) const {
    if (!domain_.contains(x, kCompareTolerance))
        throw DomainError("outcome " + std::to_string(x) + " outside the utility domain");
    x = std::clamp(x, domain_.lo, domain_.hi);
    return scale_ * base(x) + shift_;
}

OutcomeInterval UtilityFunction::range() const {
    return {scale_ * base(domain_.lo) + shift_, scale_ * base(domain_.hi) + shift_};
}

double UtilityFunction::inverse(double value) const {
    const OutcomeInterval r = range();
    const double slack = kCompareTolerance * std::max(1.0, r.hi - r.lo);
    if (!std::isfinite(value) || !r.contains(value, slack))
        throw RangeError("utility value " + std::to_string(value) + " outside u(domain)");
    value = std::clamp(value, r.lo, r.hi);
    const double x = base_inverse((value - shift_) / scale_);
    return std::clamp(x, domain_.lo, domain_.hi);
}

UtilityFunction UtilityFunction::affine(double a, double b) const {
    if (!(a > 0.0)) throw DomainError("affine transformation needs a positive slope");
    UtilityFunction u = *this;
    u.scale_ = a * scale_;
    u.shift_ = a * shift_ + b;
    return u;
}

bool affinely_equivalent(const UtilityFunction& u, const UtilityFunction& v, std::size_t probes) {
    const auto& d = u.domain();
    if (!(d == v.domain()) || probes < 2) return false;
    const double ulo = u(d.lo), uhi = u(d.hi);
    const double vlo = v(d.lo), vhi = v(d.hi);
    const double a = (vhi - vlo) / (uhi - ulo);
    if (!(a > 0.0)) return false;
    const double b = vlo - a * ulo;
    const double tol = kCompareTolerance * std::max(1.0, std::abs(vhi - vlo));
    for (std::size_t i = 0; i < probes; ++i) {
        const double x = d.lo + (d.hi - d.lo) * static_cast<double>(i) / static_cast<double>(probes - 1);
        if (std::abs(v(x) - (a * u(x) + b)) > tol) return false;
    }
    return true;
}

}  // namespace conserv
