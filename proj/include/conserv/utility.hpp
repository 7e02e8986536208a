#pragma once

#include <utility>
#include <vector>

namespace conserv {

/// Closed real interval of outcomes, lo < hi.
struct OutcomeInterval {
    double lo = 0.0;
    double hi = 1.0;

    bool contains(double x, double slack = 0.0) const noexcept { return x >= lo - slack && x <= hi + slack; }
    bool operator==(const OutcomeInterval&) const = default;
};

/// A strictly increasing utility index on an outcome interval:
///
///   linear:             u(x) = scale * x + shift
///   power:              u(x) = scale * x^exponent + shift   (lo >= 0, exponent > 0)
///   piecewise linear:   interpolates (x_i, v_i) knots, both strictly increasing,
///                       then scale/shift are applied
///
/// Strict monotonicity makes certainty equivalents well defined.
class UtilityFunction {
public:
    enum class Kind { linear, power, piecewise_linear };

    static UtilityFunction linear(OutcomeInterval domain, double scale = 1.0, double shift = 0.0);
    static UtilityFunction power(OutcomeInterval domain, double exponent, double scale = 1.0, double shift = 0.0);
    static UtilityFunction piecewise_linear(std::vector<std::pair<double, double>> knots, double scale = 1.0,
                                            double shift = 0.0);

    /// u(x). Outcomes within kCompareTolerance of the domain are clamped onto
    /// it; anything further out is a DomainError.
    double operator()(double x) const;

    /// u^{-1}(v); throws RangeError when v lies outside u(domain).
    double inverse(double value) const;

    /// a * u + b, a > 0.
    UtilityFunction affine(double a, double b) const;

    Kind kind() const noexcept { return kind_; }
    const OutcomeInterval& domain() const noexcept { return domain_; }
    OutcomeInterval range() const;
    double scale() const noexcept { return scale_; }
    double shift() const noexcept { return shift_; }
    double exponent() const noexcept { return exponent_; }
    const std::vector<std::pair<double, double>>& knots() const noexcept { return knots_; }

    bool operator==(const UtilityFunction&) const = default;

private:
    UtilityFunction() = default;
    double base(double x) const;
    double base_inverse(double v) const;

    Kind kind_ = Kind::linear;
    OutcomeInterval domain_{};
    double scale_ = 1.0;
    double shift_ = 0.0;
    double exponent_ = 1.0;
    std::vector<std::pair<double, double>> knots_;
};

/// True when `v` is a positive affine transformation of `u`, checked on a
/// probe grid over the shared domain. Domains must coincide.
bool affinely_equivalent(const UtilityFunction& u, const UtilityFunction& v, std::size_t probes = 33);

}  // namespace conserv
