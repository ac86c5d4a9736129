#pragma once

#include <vector>

#include "powerdec/ff.hpp"
#include "powerdec/poly.hpp"
#include "powerdec/rng.hpp"

namespace powerdec {

enum class WordRole { Codeword, Received, Error };

/// Length-n vector over the code's field.
struct Word {
    std::vector<FieldElement> symbols;
    WordRole role = WordRole::Received;

    size_t size() const { return symbols.size(); }
};

size_t hamming_distance(const Word& a, const Word& b);

/// [n, k, n-k+1] generalised Reed-Solomon code: evaluations of degree-<k
/// polynomials at distinct points alpha_i, scaled by nonzero beta_i.
/// Precomputes the vanishing polynomial of the evaluation points and the
/// barycentric interpolation weights 1/prod_{j!=i}(alpha_i - alpha_j).
class GrsCode {
  public:
    GrsCode(FieldPtr field, size_t n, size_t k, std::vector<FieldElement> alphas,
            std::vector<FieldElement> betas);

    const FieldPtr& field() const { return field_; }
    size_t n() const { return n_; }
    size_t k() const { return k_; }
    size_t d() const { return n_ - k_ + 1; }
    const std::vector<FieldElement>& eval_points() const { return alphas_; }
    const std::vector<FieldElement>& multipliers() const { return betas_; }
    /// Monic prod_i (x - alpha_i), degree n.
    const Poly& vanishing_poly() const { return vanishing_; }
    const std::vector<FieldElement>& interp_weights() const { return weights_; }
    bool has_zero_eval_point() const { return has_zero_alpha_; }

    /// (beta_1 f(alpha_1), ..., beta_n f(alpha_n)); requires deg f < k.
    Word encode(const Poly& message) const;

    /// Divides out the column multipliers: r_i := received_i / beta_i.
    std::vector<FieldElement> normalize(const Word& received) const;

    /// Minimal-degree interpolants through the componentwise powers of the
    /// normalized word: result[t-1](alpha_i) = r_i^(t) for t = 1..powering.
    std::vector<Poly> power_lagrangians(const std::vector<FieldElement>& normalized,
                                        size_t powering) const;

  private:
    FieldPtr field_;
    size_t n_, k_;
    std::vector<FieldElement> alphas_, betas_;
    Poly vanishing_;
    std::vector<FieldElement> weights_;
    bool has_zero_alpha_ = false;
};

/// Support positions (sorted, 0-based), nonzero normalized values on the
/// support, and the monic locator polynomial with roots at the supported
/// evaluation points.
struct ErrorPattern {
    std::vector<size_t> support;
    std::vector<FieldElement> values;
    Poly locator;

    size_t weight() const { return support.size(); }
};

ErrorPattern make_error_pattern(const GrsCode& code, std::vector<size_t> support,
                                std::vector<FieldElement> values);

/// Fixed-weight conditioning of the q-ary symmetric channel: support uniform
/// among weight-sized subsets, values i.i.d. uniform nonzero.
ErrorPattern sample_error(const GrsCode& code, size_t weight, Rng& rng);

/// r_i = c_i + beta_i e_i.
Word apply_error(const GrsCode& code, const Word& codeword, const ErrorPattern& error);

}  // namespace powerdec
