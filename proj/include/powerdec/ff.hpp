#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace powerdec {

class Field;
class FieldElement;

using FieldPtr = std::shared_ptr<const Field>;

/// Finite field GF(p^m). Prime fields (m = 1) use plain modular integers;
/// extension fields pack the coefficient vector of an element into one
/// machine word, base p, and (for q <= 2^16) use discrete-log tables for
/// multiplication. Immutable after construction.
class Field : public std::enable_shared_from_this<Field> {
  public:
    /// Builds GF(p^m). For m > 1 a modulus (coefficients low degree first,
    /// length m+1) may be supplied; when omitted, the lexicographically
    /// first monic irreducible of degree m is searched deterministically.
    /// Throws std::invalid_argument on non-prime p, wrong-degree or
    /// reducible modulus, or q > 2^20.
    static FieldPtr make(uint32_t p, uint32_t m = 1,
                         const std::vector<uint32_t>& modulus = {});

    /// Parses the textual form used by CLI configs: "17", "251^1",
    /// "2^3", "2^8/[1,1,0,1,1,0,0,0,1]" or "2^8/x8+x4+x3+x2+1".
    static FieldPtr parse(const std::string& text);

    uint32_t characteristic() const { return p_; }
    uint32_t extension_degree() const { return m_; }
    uint32_t order() const { return q_; }
    /// Modulus coefficients, low degree first (empty for prime fields).
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    std::string to_string() const;

    FieldPtr handle() const { return shared_from_this(); }

    FieldElement zero() const;
    FieldElement one() const;
    /// Element from its canonical packed value in [0, q).
    FieldElement element(uint32_t canonical) const;
    /// Element from its coefficient vector over GF(p), length <= m.
    FieldElement from_coeffs(const std::vector<uint32_t>& coeffs) const;

    bool operator==(const Field& o) const {
        return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

    // Packed-value arithmetic. FieldElement wraps these.
    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;
    uint32_t div(uint32_t a, uint32_t b) const;
    uint32_t pow(uint32_t a, uint64_t e) const;

  private:
    Field() = default;

    uint32_t mul_nocache(uint32_t a, uint32_t b) const;
    void build_log_tables();

    uint32_t p_ = 0;
    uint32_t m_ = 1;
    uint32_t q_ = 0;
    std::vector<uint32_t> modulus_;    // empty for m == 1
    std::vector<uint32_t> exp_, log_;  // discrete-log tables (m > 1, q <= 2^16)
};

/// Immutable element of a Field, stored as a fully reduced canonical value.
/// Mixing elements of structurally different fields throws.
class FieldElement {
  public:
    FieldElement() = default;  // detached zero; assign before use
    FieldElement(const Field* field, uint32_t v) : field_(field), v_(v) {}

    uint32_t canonical() const { return v_; }
    const Field& field() const { return *field_; }
    const Field* field_ptr() const { return field_; }
    bool is_zero() const { return v_ == 0; }

    /// Coefficient vector over GF(p), length m, low degree first.
    std::vector<uint32_t> coefficients() const;

    FieldElement operator+(const FieldElement& o) const {
        return {check(o), field_->add(v_, o.v_)};
    }
    FieldElement operator-(const FieldElement& o) const {
        return {check(o), field_->sub(v_, o.v_)};
    }
    FieldElement operator*(const FieldElement& o) const {
        return {check(o), field_->mul(v_, o.v_)};
    }
    FieldElement operator/(const FieldElement& o) const {
        return {check(o), field_->div(v_, o.v_)};
    }
    FieldElement operator-() const { return {field_, field_->neg(v_)}; }
    FieldElement inv() const { return {field_, field_->inv(v_)}; }
    FieldElement pow(uint64_t e) const { return {field_, field_->pow(v_, e)}; }

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

    bool operator==(const FieldElement& o) const {
        return v_ == o.v_ && same_field(o);
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

  private:
    bool same_field(const FieldElement& o) const {
        return field_ == o.field_ ||
               (field_ && o.field_ && *field_ == *o.field_);
    }
    const Field* check(const FieldElement& o) const {
        if (!field_ || !o.field_)
            throw std::invalid_argument("operation on detached field element");
        if (!same_field(o))
            throw std::invalid_argument("field elements from different fields");
        return field_;
    }

    const Field* field_ = nullptr;
    uint32_t v_ = 0;
};

}  // namespace powerdec
