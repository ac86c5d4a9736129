#include "powerdec/grs.hpp"

#include <algorithm>
#include <stdexcept>

namespace powerdec {

size_t hamming_distance(const Word& a, const Word& b) {
    if (a.size() != b.size()) throw std::invalid_argument("word lengths differ");
    size_t d = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (a.symbols[i] != b.symbols[i]) ++d;
    return d;
}

GrsCode::GrsCode(FieldPtr field, size_t n, size_t k, std::vector<FieldElement> alphas,
                 std::vector<FieldElement> betas)
    : field_(std::move(field)), n_(n), k_(k), alphas_(std::move(alphas)),
      betas_(std::move(betas)), vanishing_(field_) {
    if (!field_) throw std::invalid_argument("code needs a field");
    if (k_ < 1 || k_ > n_) throw std::invalid_argument("need 1 <= k <= n");
    if (n_ > field_->order()) throw std::invalid_argument("length exceeds field size");
    if (alphas_.size() != n_ || betas_.size() != n_)
        throw std::invalid_argument("need n evaluation points and n multipliers");

    std::vector<bool> seen(field_->order(), false);
    for (const auto& a : alphas_) {
        if (a.field_ptr() != field_.get() && *a.field_ptr() != *field_)
            throw std::invalid_argument("evaluation point from wrong field");
        if (seen[a.canonical()]) throw std::invalid_argument("duplicate evaluation point");
        seen[a.canonical()] = true;
        if (a.is_zero()) has_zero_alpha_ = true;
    }
    for (const auto& b : betas_) {
        if (b.field_ptr() != field_.get() && *b.field_ptr() != *field_)
            throw std::invalid_argument("column multiplier from wrong field");
        if (b.is_zero()) throw std::invalid_argument("column multipliers must be nonzero");
    }

    const Field& f = *field_;
    vanishing_ = Poly::constant(field_, f.one());
    for (const auto& a : alphas_)
        vanishing_ = vanishing_ * Poly(field_, {f.neg(a.canonical()), 1});

    // weights_[i] = 1 / V'(alpha_i) = 1 / prod_{j != i} (alpha_i - alpha_j)
    Poly deriv(field_);
    {
        std::vector<uint32_t> dc(n_);
        const auto& vc = vanishing_.coeffs();
        for (size_t i = 1; i <= n_; ++i)
            dc[i - 1] = f.mul(vc[i], (uint32_t)(i % f.characteristic()));
        deriv = Poly(field_, std::move(dc));
    }
    weights_.reserve(n_);
    for (const auto& a : alphas_) weights_.push_back(deriv.eval(a).inv());
}

Word GrsCode::encode(const Poly& message) const {
    if (message.degree() >= (int)k_)
        throw std::invalid_argument("message degree must be below k");
    Word w;
    w.role = WordRole::Codeword;
    w.symbols.reserve(n_);
    for (size_t i = 0; i < n_; ++i)
        w.symbols.push_back(betas_[i] * message.eval(alphas_[i]));
    return w;
}

std::vector<FieldElement> GrsCode::normalize(const Word& received) const {
    if (received.size() != n_) throw std::invalid_argument("word length mismatch");
    std::vector<FieldElement> out;
    out.reserve(n_);
    for (size_t i = 0; i < n_; ++i) out.push_back(received.symbols[i] / betas_[i]);
    return out;
}

std::vector<Poly> GrsCode::power_lagrangians(const std::vector<FieldElement>& normalized,
                                             size_t powering) const {
    if (normalized.size() != n_) throw std::invalid_argument("word length mismatch");
    if (powering < 1) throw std::invalid_argument("powering degree must be >= 1");
    const Field& f = *field_;

    std::vector<std::vector<uint32_t>> acc(powering, std::vector<uint32_t>(n_, 0));
    std::vector<uint32_t> quot(n_);
    const auto& vc = vanishing_.coeffs();
    for (size_t i = 0; i < n_; ++i) {
        if (normalized[i].is_zero()) continue;
        // quotient of the vanishing polynomial by (x - alpha_i)
        const uint32_t xi = alphas_[i].canonical();
        uint32_t carry = vc[n_];
        for (size_t j = n_; j-- > 0;) {
            quot[j] = carry;
            carry = f.add(vc[j], f.mul(carry, xi));
        }
        uint32_t rpow = normalized[i].canonical();
        const uint32_t wi = weights_[i].canonical();
        for (size_t t = 0; t < powering; ++t) {
            uint32_t scale = f.mul(rpow, wi);
            auto& dst = acc[t];
            for (size_t j = 0; j < n_; ++j)
                if (quot[j]) dst[j] = f.add(dst[j], f.mul(scale, quot[j]));
            if (t + 1 < powering) rpow = f.mul(rpow, normalized[i].canonical());
        }
    }
    std::vector<Poly> out;
    out.reserve(powering);
    for (auto& a : acc) out.emplace_back(field_, std::move(a));
    return out;
}

ErrorPattern make_error_pattern(const GrsCode& code, std::vector<size_t> support,
                                std::vector<FieldElement> values) {
    if (support.size() != values.size())
        throw std::invalid_argument("support and value counts differ");
    std::sort(support.begin(), support.end());
    for (size_t i = 0; i + 1 < support.size(); ++i)
        if (support[i] == support[i + 1])
            throw std::invalid_argument("duplicate support position");
    if (!support.empty() && support.back() >= code.n())
        throw std::invalid_argument("support position out of range");
    for (const auto& v : values)
        if (v.is_zero()) throw std::invalid_argument("error values must be nonzero");

    const Field& f = *code.field();
    Poly locator = Poly::constant(code.field(), f.one());
    for (size_t j : support) {
        locator = locator *
                  Poly(code.field(), {f.neg(code.eval_points()[j].canonical()), 1});
    }
    return {std::move(support), std::move(values), std::move(locator)};
}

ErrorPattern sample_error(const GrsCode& code, size_t weight, Rng& rng) {
    if (weight > code.n()) throw std::invalid_argument("error weight exceeds length");
    auto support = rng.subset(code.n(), weight);
    std::vector<FieldElement> values;
    values.reserve(weight);
    for (size_t i = 0; i < weight; ++i) values.push_back(rng.uniform_nonzero(*code.field()));
    return make_error_pattern(code, std::move(support), std::move(values));
}

Word apply_error(const GrsCode& code, const Word& codeword, const ErrorPattern& error) {
    if (codeword.size() != code.n()) throw std::invalid_argument("word length mismatch");
    Word out = codeword;
    out.role = WordRole::Received;
    for (size_t i = 0; i < error.support.size(); ++i) {
        size_t pos = error.support[i];
        out.symbols[pos] = out.symbols[pos] + code.multipliers()[pos] * error.values[i];
    }
    return out;
}

}  // namespace powerdec
