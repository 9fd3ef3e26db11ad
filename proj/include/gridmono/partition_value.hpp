#pragma once

#include <string>

#include "gridmono/grid.hpp"
#include "gridmono/kasteleyn.hpp"
#include "gridmono/rational.hpp"
#include "gridmono/real.hpp"

namespace gridmono {

enum class Method { Det, Formula, Enumeration, Pfaffian };

std::string to_string(Method m);

// A partition-function result tagged with the method that produced it.
// Exact-mode values are exact rationals; Real-mode values carry a
// relative-error estimate.
struct PartitionValue {
    Method method = Method::Det;
    Arithmetic arithmetic = Arithmetic::Exact;
    Rational exact;       // valid when arithmetic == Exact
    Real real;            // valid when arithmetic == Real
    double rel_error = 0.0;
    GridSpec spec;
    WeightSpec weights;

    static PartitionValue of_exact(Method m, Rational v, GridSpec s, WeightSpec w) {
        PartitionValue p;
        p.method = m;
        p.arithmetic = Arithmetic::Exact;
        p.exact = std::move(v);
        p.spec = std::move(s);
        p.weights = std::move(w);
        return p;
    }
    static PartitionValue of_real(Method m, Real v, double err, GridSpec s, WeightSpec w) {
        PartitionValue p;
        p.method = m;
        p.arithmetic = Arithmetic::Real;
        p.real = std::move(v);
        p.rel_error = err;
        p.spec = std::move(s);
        p.weights = std::move(w);
        return p;
    }

    Real as_real() const { return arithmetic == Arithmetic::Exact ? Real(exact) : real; }
    std::string value_string() const {
        return arithmetic == Arithmetic::Exact ? rational_to_string(exact) : real.to_string();
    }
};

}  // namespace gridmono
