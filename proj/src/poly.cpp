#include "powerdec/poly.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace powerdec {

Poly::Poly(FieldPtr field, std::vector<uint32_t> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    for (uint32_t v : c_)
        if (v >= field_->order())
            throw std::invalid_argument("coefficient out of range for field");
    strip();
}

void Poly::strip() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_field(const Poly& o) const {
    if (!field_ || !o.field_)
        throw std::invalid_argument("operation on detached polynomial");
    if (field_ != o.field_ && *field_ != *o.field_)
        throw std::invalid_argument("polynomials over different fields");
}

Poly Poly::constant(const FieldPtr& field, const FieldElement& c) {
    Poly p(field);
    if (!c.is_zero()) p.c_ = {c.canonical()};
    return p;
}

Poly Poly::x_power(const FieldPtr& field, size_t degree) {
    Poly p(field);
    p.c_.assign(degree + 1, 0);
    p.c_.back() = 1;
    return p;
}

Poly Poly::from_elements(const FieldPtr& field, const std::vector<FieldElement>& coeffs) {
    std::vector<uint32_t> packed(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) packed[i] = coeffs[i].canonical();
    return Poly(field, std::move(packed));
}

FieldElement Poly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return {raw(), c_.back()};
}

Poly Poly::operator+(const Poly& o) const {
    check_field(o);
    Poly r(field_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    const Field& f = *raw();
    for (size_t i = 0; i < r.c_.size(); ++i) {
        uint32_t a = i < c_.size() ? c_[i] : 0;
        uint32_t b = i < o.c_.size() ? o.c_[i] : 0;
        r.c_[i] = f.add(a, b);
    }
    r.strip();
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    check_field(o);
    Poly r(field_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    const Field& f = *raw();
    for (size_t i = 0; i < r.c_.size(); ++i) {
        uint32_t a = i < c_.size() ? c_[i] : 0;
        uint32_t b = i < o.c_.size() ? o.c_[i] : 0;
        r.c_[i] = f.sub(a, b);
    }
    r.strip();
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_field(o);
    Poly r(field_);
    if (c_.empty() || o.c_.empty()) return r;
    const Field& f = *raw();
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (!o.c_[j]) continue;
            r.c_[i + j] = f.add(r.c_[i + j], f.mul(c_[i], o.c_[j]));
        }
    }
    r.strip();
    return r;
}

Poly Poly::scaled(const FieldElement& c) const {
    Poly r(field_);
    if (c.is_zero()) return r;
    const Field& f = *raw();
    r.c_.resize(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = f.mul(c_[i], c.canonical());
    return r;
}

Poly Poly::shifted(size_t k) const {
    Poly r(field_);
    if (c_.empty()) return r;
    r.c_.assign(c_.size() + k, 0);
    std::copy(c_.begin(), c_.end(), r.c_.begin() + (long)k);
    return r;
}

Poly Poly::monic() const {
    if (c_.empty()) throw std::domain_error("cannot normalize zero polynomial");
    if (c_.back() == 1) return *this;
    return scaled(leading().inv());
}

Poly Poly::pow(unsigned e) const {
    Poly r = Poly::constant(field_, FieldElement(raw(), 1));
    Poly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        if (e >>= 1) b = b * b;
    }
    return r;
}

void Poly::sub_scaled_shifted(const Poly& o, const FieldElement& c, size_t shift) {
    check_field(o);
    if (o.c_.empty() || c.is_zero()) return;
    const Field& f = *raw();
    if (c_.size() < o.c_.size() + shift) c_.resize(o.c_.size() + shift, 0);
    const uint32_t cv = c.canonical();
    for (size_t i = 0; i < o.c_.size(); ++i) {
        if (!o.c_[i]) continue;
        uint32_t& t = c_[i + shift];
        t = f.sub(t, f.mul(cv, o.c_[i]));
    }
    strip();
}

std::pair<Poly, Poly> Poly::divmod(const Poly& b) const {
    check_field(b);
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly q(field_), r = *this;
    if (r.c_.size() < b.c_.size()) return {q, r};
    const Field& f = *raw();
    const uint32_t lead_inv = f.inv(b.c_.back());
    q.c_.assign(r.c_.size() - b.c_.size() + 1, 0);
    while (r.c_.size() >= b.c_.size() && !r.c_.empty()) {
        size_t shift = r.c_.size() - b.c_.size();
        uint32_t coef = f.mul(r.c_.back(), lead_inv);
        q.c_[shift] = coef;
        for (size_t i = 0; i < b.c_.size(); ++i)
            r.c_[shift + i] = f.sub(r.c_[shift + i], f.mul(coef, b.c_[i]));
        r.strip();
    }
    q.strip();
    return {q, r};
}

std::optional<Poly> Poly::exact_div(const Poly& b) const {
    auto [q, r] = divmod(b);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

FieldElement Poly::eval(const FieldElement& x) const {
    const Field& f = *raw();
    if (!x.field_ptr() || (x.field_ptr() != raw() && *x.field_ptr() != f))
        throw std::invalid_argument("evaluation point from different field");
    uint32_t acc = 0;
    const uint32_t xv = x.canonical();
    for (size_t i = c_.size(); i-- > 0;) acc = f.add(f.mul(acc, xv), c_[i]);
    return {raw(), acc};
}

Poly Poly::reversed() const {
    if (c_.empty()) throw std::domain_error("reversal of zero polynomial undefined");
    Poly r(field_);
    r.c_.assign(c_.rbegin(), c_.rend());
    r.strip();
    return r;
}

Poly Poly::reversed_window(size_t window) const {
    if ((int)window < degree()) throw std::invalid_argument("window below degree");
    Poly r(field_);
    if (c_.empty()) return r;
    r.c_.assign(window + 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[window - i] = c_[i];
    r.strip();
    return r;
}

Poly Poly::series_inverse(size_t precision) const {
    if (c_.empty() || c_[0] == 0)
        throw std::domain_error("series inverse needs a unit constant term");
    if (precision == 0) throw std::invalid_argument("precision must be >= 1");
    const Field& f = *raw();
    const uint32_t c0_inv = f.inv(c_[0]);
    Poly r(field_);
    r.c_.assign(precision, 0);
    r.c_[0] = c0_inv;
    for (size_t j = 1; j < precision; ++j) {
        // coefficient j of (this * r) must vanish
        uint32_t acc = 0;
        size_t lo = 1, hi = std::min(j, c_.size() - 1);
        for (size_t i = lo; i <= hi; ++i)
            acc = f.add(acc, f.mul(c_[i], r.c_[j - i]));
        r.c_[j] = f.mul(f.neg(acc), c0_inv);
    }
    r.strip();
    return r;
}

Poly Poly::truncated(size_t precision) const {
    Poly r(field_);
    r.c_.assign(c_.begin(), c_.begin() + (long)std::min(precision, c_.size()));
    r.strip();
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (c_ != o.c_) return false;
    if (field_ == o.field_) return true;
    return field_ && o.field_ && *field_ == *o.field_;
}

std::string Poly::to_string() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ',';
        os << c_[i];
    }
    if (c_.empty()) os << '0';
    os << ']';
    return os.str();
}

Poly Poly::parse(const FieldPtr& field, const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace((unsigned char)ch)) s += ch;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("polynomial text must be [c0,c1,...]");
    std::vector<uint32_t> coeffs;
    std::istringstream is(s.substr(1, s.size() - 2));
    std::string tok;
    while (std::getline(is, tok, ','))
        if (!tok.empty()) coeffs.push_back((uint32_t)std::stoul(tok));
    return Poly(field, std::move(coeffs));
}

Poly interpolate(const FieldPtr& field, const std::vector<FieldElement>& xs,
                 const std::vector<FieldElement>& ys) {
    if (xs.empty() || xs.size() != ys.size())
        throw std::invalid_argument("interpolation needs matching nonempty point lists");
    const size_t n = xs.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (xs[i] == xs[j]) throw std::invalid_argument("duplicate interpolation abscissa");

    // master = prod (x - x_i); per-point quotient by synthetic division
    Poly master = Poly::constant(field, FieldElement(field.get(), 1));
    for (const auto& x : xs) {
        Poly lin(field, {field->neg(x.canonical()), 1});
        master = master * lin;
    }
    const Field& f = *field;
    Poly acc(field);
    std::vector<uint32_t> quot(n);
    for (size_t i = 0; i < n; ++i) {
        if (ys[i].is_zero()) continue;
        // synthetic division of master by (x - x_i): master is monic deg n
        const uint32_t xi = xs[i].canonical();
        uint32_t carry = master.coeffs()[n];
        for (size_t j = n; j-- > 0;) {
            quot[j] = carry;
            carry = f.add(master.coeffs()[j], f.mul(carry, xi));
        }
        // weight = y_i / quotient(x_i)
        uint32_t qx = 0;
        for (size_t j = n; j-- > 0;) qx = f.add(f.mul(qx, xi), quot[j]);
        uint32_t w = f.div(ys[i].canonical(), qx);
        acc.sub_scaled_shifted(Poly(field, std::vector<uint32_t>(quot.begin(), quot.end())),
                               FieldElement(field.get(), f.neg(w)), 0);
    }
    return acc;
}

}  // namespace powerdec
