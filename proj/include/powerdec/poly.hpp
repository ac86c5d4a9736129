#pragma once

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "powerdec/ff.hpp"

namespace powerdec {

/// Dense univariate polynomial over one Field. Coefficients are stored
/// packed (canonical values), lowest degree first, with no trailing zeros;
/// the zero polynomial has an empty coefficient vector and a degree that
/// compares below every integer.
class Poly {
  public:
    /// Degree of the zero polynomial. Never do arithmetic on it.
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    Poly() = default;  // detached; assign before use
    explicit Poly(FieldPtr field) : field_(std::move(field)) {}
    Poly(FieldPtr field, std::vector<uint32_t> coeffs);

    static Poly constant(const FieldPtr& field, const FieldElement& c);
    static Poly x_power(const FieldPtr& field, size_t degree);  // x^degree
    static Poly from_elements(const FieldPtr& field, const std::vector<FieldElement>& coeffs);
    /// Parses "[c0,c1,...]" (lowest degree first, canonical values).
    static Poly parse(const FieldPtr& field, const std::string& text);

    const FieldPtr& field() const { return field_; }
    const std::vector<uint32_t>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? kZeroDegree : (int)c_.size() - 1; }
    FieldElement coeff(size_t i) const {
        return {field_.get(), i < c_.size() ? c_[i] : 0};
    }
    FieldElement leading() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const FieldElement& c) const;
    Poly shifted(size_t k) const;  // * x^k
    Poly monic() const;
    Poly pow(unsigned e) const;

    /// In-place this -= c * x^shift * o; the workhorse of row reduction.
    void sub_scaled_shifted(const Poly& o, const FieldElement& c, size_t shift);

    /// Euclidean division by nonzero b: returns (quotient, remainder) with
    /// deg r < deg b. Throws std::domain_error when b is zero.
    std::pair<Poly, Poly> divmod(const Poly& b) const;
    Poly operator%(const Poly& b) const { return divmod(b).second; }
    /// Exact quotient; nullopt when b does not divide this.
    std::optional<Poly> exact_div(const Poly& b) const;

    FieldElement eval(const FieldElement& x) const;

    /// Coefficient reversal x^deg * p(1/x). Throws on the zero polynomial.
    Poly reversed() const;
    /// Reversal within a fixed window: x^(window) * p(1/x), window >= deg.
    Poly reversed_window(size_t window) const;

    /// Power-series inverse modulo x^precision; requires p(0) != 0.
    Poly series_inverse(size_t precision) const;

    /// Truncation mod x^precision.
    Poly truncated(size_t precision) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// "[c0,c1,...]" lowest degree first.
    std::string to_string() const;

  private:
    void strip();
    const Field* raw() const { return field_.get(); }
    void check_field(const Poly& o) const;

    FieldPtr field_;
    std::vector<uint32_t> c_;
};

/// Unique interpolant of degree < #points through distinct-x points.
Poly interpolate(const FieldPtr& field, const std::vector<FieldElement>& xs,
                 const std::vector<FieldElement>& ys);

}  // namespace powerdec
