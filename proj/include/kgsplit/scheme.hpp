#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace kgsplit {

// One factor of a splitting integrator. `coeff` multiplies the step size
// tau for drifts and kicks, and tau^3 for corrector stages.
enum class StageKind { DriftA, KickB, CorrectorC };

struct Stage {
    StageKind kind;
    double coeff;
};

// A two-part splitting scheme as an ordered stage sequence. Catalog schemes
// are symmetric (palindromic) with drift and kick coefficients each summing
// to 1. Adjacent stages of the same kind are merged at construction.
struct Scheme {
    std::string name;
    std::string order_label;  // "2", "4", "(8,2)" or "(8,6,4)"
    int nominal_order = 2;    // convergence order with the full potential
    std::vector<Stage> stages;

    int count(StageKind k) const;
    int kicks_per_step() const { return count(StageKind::KickB); }
    int correctors_per_step() const { return count(StageKind::CorrectorC); }
    double coeff_sum(StageKind k) const;
};

struct ValidationCheck {
    std::string name;
    bool passed;
    double residual;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool ok() const;
};

// Names accepted by catalog_scheme, in catalog order.
const std::vector<std::string>& catalog_names();

// Build a scheme from the catalog. Throws std::invalid_argument for an
// unknown name; the message lists the valid names.
Scheme catalog_scheme(std::string_view name);

// Triple-jump composition S2(a1*t) S2(a0*t) S2(a1*t) with
// a1 = 1/(2 - 2^(1/3)), a0 = -2^(1/3)/(2 - 2^(1/3)).  Requires a symmetric
// order-2 scheme without corrector stages; seam stages of equal kind merge.
Scheme yoshida_compose(const Scheme& s2);

// Checks every scheme invariant and reports measured residuals. Never throws.
ValidationReport validate(const Scheme& s);

std::string format_catalog_table();

}  // namespace kgsplit
