#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace bakfem {

/// Thrown when a coefficient or solution evaluator returns NaN/Inf.
class EvaluationError : public std::runtime_error {
public:
    explicit EvaluationError(const std::string& what) : std::runtime_error(what) {}
};

/// A real-valued function on [0,1], optionally with an analytic derivative.
/// Constant fields are flagged so downstream code can use closed forms.
class ScalarField {
public:
    using Fn = std::function<double(double)>;

    explicit ScalarField(Fn f) : f_(std::move(f)) {}
    ScalarField(Fn f, Fn df) : f_(std::move(f)), df_(std::move(df)) {}

    static ScalarField constant(double v) {
        ScalarField s([v](double) { return v; }, [](double) { return 0.0; });
        s.const_value_ = v;
        s.is_const_ = true;
        return s;
    }

    double operator()(double x) const {
        const double y = f_(x);
        if (!std::isfinite(y)) {
            throw EvaluationError("non-finite field value at x=" + std::to_string(x));
        }
        return y;
    }

    bool has_derivative() const { return static_cast<bool>(df_); }

    /// Analytic derivative if supplied, central difference (step 1e-6) otherwise.
    double derivative(double x) const {
        if (df_) {
            return df_(x);
        }
        const double h = 1e-6;
        const double xl = std::max(0.0, x - h);
        const double xr = std::min(1.0, x + h);
        return (f_(xr) - f_(xl)) / (xr - xl);
    }

    bool is_constant() const { return is_const_; }
    double constant_value() const { return const_value_; }

private:
    Fn f_;
    Fn df_;
    bool is_const_ = false;
    double const_value_ = 0.0;
};

}  // namespace bakfem
