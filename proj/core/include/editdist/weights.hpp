#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "editdist/errors.hpp"

namespace editdist {

class Space;

// One element of an editable weight space. Plain tagged data: a non-negative
// real, an ordered tuple, or a right-continuous step function stored as a
// sorted list of (breakpoint, value) pieces. All algebra lives on Space.
class Weight {
  public:
    enum class Kind { Real, Tuple, Step };

    Weight() : kind_(Kind::Real), real_(0.0) {}

    static Weight real(double v);
    static Weight tuple(std::vector<Weight> parts);
    // pieces are (breakpoint, value); the function is `value` from one
    // breakpoint to the next and 0 before the first one.
    static Weight step(std::vector<std::pair<double, double>> pieces);

    Kind kind() const { return kind_; }
    bool is_real() const { return kind_ == Kind::Real; }
    bool is_tuple() const { return kind_ == Kind::Tuple; }
    bool is_step() const { return kind_ == Kind::Step; }

    double as_real() const;
    const std::vector<Weight>& parts() const;
    const std::vector<std::pair<double, double>>& pieces() const;

    // Value of a step weight at point x.
    double step_value_at(double x) const;

  private:
    Kind kind_;
    double real_ = 0.0;
    std::vector<Weight> parts_;
    std::vector<std::pair<double, double>> pieces_;
};

// Descriptor of an editable space: non-negative reals, a finite product of
// editable spaces with a positively weighted sum metric, or L1 step functions
// over a closed interval with non-negative real values.
class Space {
  public:
    enum class Kind { Real, Product, Step };

    static constexpr double kDefaultTolerance = 1e-9;

    static Space reals(double tolerance = kDefaultTolerance);
    static Space product(std::vector<Space> factors, std::vector<double> scales = {},
                         double tolerance = kDefaultTolerance);
    static Space step_functions(double lo, double hi, double tolerance = kDefaultTolerance);

    Kind kind() const { return kind_; }
    double tolerance() const { return tolerance_; }
    const std::vector<Space>& factors() const { return factors_; }
    const std::vector<double>& scales() const { return scales_; }
    double interval_lo() const { return lo_; }
    double interval_hi() const { return hi_; }

    // Structural identity; the tolerance is a comparison aid and not part of it.
    bool same_space(const Space& other) const;

    Weight zero() const;
    Weight combine(const Weight& a, const Weight& b) const;
    double distance(const Weight& a, const Weight& b) const;
    double norm(const Weight& a) const;

    // Throws SpaceMismatchError if w is not a well-formed element of this space.
    void check(const Weight& w) const;

    bool equals(const Weight& a, const Weight& b) const {
        return distance(a, b) <= tolerance_;
    }

    // Reconstructs a descriptor from a sample weight (unit scales, default
    // tolerance). Step intervals are taken from the JSON side channel, so the
    // sample must come from weight_from_json.
    static Space infer(const Weight& w, double step_lo = 0.0, double step_hi = 1.0,
                       double tolerance = kDefaultTolerance);

    std::string describe() const;

  private:
    Kind kind_ = Kind::Real;
    double tolerance_ = kDefaultTolerance;
    std::vector<Space> factors_;
    std::vector<double> scales_;
    double lo_ = 0.0, hi_ = 1.0;
};

// JSON encoding:
//   {"kind":"real","v":x}
//   {"kind":"tuple","v":[...]}
//   {"kind":"step","interval":[a,b],"pieces":[[t,v],...]}
std::string weight_to_json(const Weight& w, const Space& space);
Weight weight_from_json(const std::string& text);
// Parses a weight and infers its space descriptor in one pass.
std::pair<Weight, Space> weight_and_space_from_json(const std::string& text);

}  // namespace editdist
