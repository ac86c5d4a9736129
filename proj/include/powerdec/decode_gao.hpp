#pragma once

#include <optional>

#include "powerdec/grs.hpp"
#include "powerdec/polymat.hpp"

namespace powerdec {

enum class DecodeStatus { Success, Failure };
enum class FailureReason { StructureCheck, WeightMismatch };

struct DecodeOutcome {
    DecodeStatus status = DecodeStatus::Failure;
    Poly message;        // valid on success, degree < k
    Poly locator;        // monic candidate locator (also populated on failure)
    size_t error_count = 0;
    std::optional<FailureReason> failure_reason;

    bool ok() const { return status == DecodeStatus::Success; }
};

/// The relaxed key-equation module for one received word: tuples
/// (locator, remainder_1..remainder_l) with locator * lagrangian_t congruent
/// to remainder_t modulo the vanishing polynomial. Row space of `basis`
/// is exactly the set of congruence-satisfying tuples; the shifts encode
/// the per-column degree budget so that pivot column 0 identifies solutions.
struct GaoInstance {
    const GrsCode* code;
    size_t powering;
    std::vector<FieldElement> normalized;
    std::vector<Poly> lagrangians;
    PolyMatrix basis;
    ShiftVector shifts;
};

/// Requires powering >= 1 and powering * (k-1) < n.
GaoInstance build_gao_module(const GrsCode& code,
                             std::vector<FieldElement> normalized, size_t powering);

/// Shifts for the Gao module: column 0 gets l(k-1)+1, column t gets
/// (l-t)(k-1). A row then has pivot 0 exactly when every remainder obeys
/// deg remainder_t <= deg locator + t(k-1).
ShiftVector gao_shifts(size_t k, size_t powering);

/// Tests whether a minimal row (locator, r_1..r_l) has the shape
/// (L, L f, ..., L f^l) for some message f of degree < k; returns f if so.
/// The row's first entry must be nonzero and is normalized to monic first.
std::optional<Poly> structure_check(const std::vector<Poly>& row, size_t k);

/// Power Gao decoding: interpolate the powered received word, reduce the
/// key-equation module, take the minimal solution and verify its structure.
/// Success additionally requires the recovered codeword to differ from the
/// received word in exactly deg(locator) positions.
DecodeOutcome power_gao_decode(const GrsCode& code, const Word& received,
                               size_t powering);

}  // namespace powerdec
