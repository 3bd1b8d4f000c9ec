#pragma once

#include <optional>
#include <span>
#include <vector>

#include "berkline/berkovich.hpp"

namespace berkline {

// Complex conjugation acting on the Berkovich line: conjugates centers,
// preserves radii.  An involution; its fixed locus is the real subtree T.
BerkPoint galois_conjugate(const BerkPoint& p);

struct MaxSquaresReport {
    bool holds = false;
    LogValue lhs; // eta(f_1^2 + ... + f_q^2)
    LogValue rhs; // max_i eta(f_i^2)
};

// Exact comparison of eta(sum f_i^2) with max_i eta(f_i^2) for f_i over K.
// Real points satisfy equality for every family.
MaxSquaresReport check_max_squares(const BerkPoint& p, std::span<const PolyK> fs);

struct RealnessCertificate {
    bool verdict = false;

    // verdict == true: the conjugate point, equal to p.
    std::optional<BerkPoint> galois_fixed_witness;

    // verdict == false: a family over K violating the max-of-squares
    // equality, re-verified at construction.
    struct ViolatingFamily {
        std::vector<PolyK> family;
        LogValue lhs;
        LogValue rhs;
    };
    std::optional<ViolatingFamily> violating_family;
};

// Disk criterion: D(v, r) is real iff |im v| <= r, i.e. the disk meets the
// K-line; equivalently iff the point is Galois fixed.  Negative verdicts
// carry the canonical violating family {z - re(v), im(v)}.
RealnessCertificate is_real_point(const BerkPoint& p);

// Closest-point projection onto the real subtree: the midpoint of the arc
// from p to its conjugate, which is join(p, conj p).  Identity on real
// points, idempotent, 1-Lipschitz.
BerkPoint project_to_real_tree(const BerkPoint& p);

} // namespace berkline
