#pragma once

#include <vector>

#include "berkline/polynomial.hpp"
#include "berkline/puiseux.hpp"

namespace berkline {

// A point of the Berkovich projective line over F = K(sqrt(-1)) in the
// closed-disk model: a type-1 point (an element of F, or infinity) or the
// sup-seminorm over a closed disk D(center, e^log_radius).
//
// Canonical form keeps every disk in chart Z: the image of any disk under
// any Moebius map is again a chart-Z disk as a seminorm point, so chart W
// is only ever needed for the type-1 point at infinity and for describing
// open sets (BasicOpenSpec).  Chart-W disks are accepted on input and
// normalized (see serialize).
class BerkPoint {
public:
    enum class Kind { type1, disk };

    static BerkPoint type1(ComplexPuiseux v);
    static BerkPoint infinity();
    static BerkPoint disk(ComplexPuiseux center, Rational log_radius);
    // The canonical basepoint D(0, e^0).
    static BerkPoint gauss();

    Kind kind() const { return kind_; }
    bool is_infinity() const { return kind_ == Kind::type1 && at_infinity_; }
    bool is_disk() const { return kind_ == Kind::disk; }
    const ComplexPuiseux& center() const { return center_; }
    const Rational& log_radius() const; // pre: is_disk()

private:
    Kind kind_ = Kind::type1;
    bool at_infinity_ = false;
    ComplexPuiseux center_;
    Rational log_radius_;
};

// Disk equality is center-free: same radius and |v1 - v2| <= r.
bool points_equal(const BerkPoint& p, const BerkPoint& q);

// eta_p(f): type-1 evaluation |f(v)|, disks via the term-wise maximum
// max_n |a_n| r^n of the expansion of f around the center.
LogValue seminorm_eval(const BerkPoint& p, const PolyF& f);
LogValue seminorm_eval(const BerkPoint& p, const PolyK& f);

LogValue diam(const BerkPoint& p); // type-1 -> zero; infinity -> error

// Least upper bound in the seminorm partial order; the apex of the tripod.
BerkPoint join(const BerkPoint& p, const BerkPoint& q);

// Whether p lies weakly below q (p <= q), i.e. join(p, q) == q.
bool below(const BerkPoint& p, const BerkPoint& q);

// Hyperbolic metric on points of positive diameter:
// 2 log diam(p v q) - log diam(p) - log diam(q), exact.
Rational dan_distance(const BerkPoint& p, const BerkPoint& q);

// The unique point on the arc [p, q] at distance s from p.
BerkPoint path_point(const BerkPoint& p, const BerkPoint& q, const Rational& s);

// Basic open sets of the Berkovich topology.
struct BasicOpenSpec {
    enum class Shape { open_disk, open_disk_minus_closed, complement_of_closed };
    struct ClosedDisk {
        ComplexPuiseux center;
        Rational log_radius;
    };

    Shape shape = Shape::open_disk;
    ComplexPuiseux center;   // open_disk / open_disk_minus_closed
    Rational log_radius;
    std::vector<ClosedDisk> excluded;

    static BasicOpenSpec open_disk(ComplexPuiseux v, Rational t);
    static BasicOpenSpec open_disk_minus_closed(ComplexPuiseux v, Rational t,
                                                std::vector<ClosedDisk> excluded);
    static BasicOpenSpec complement_of_closed(std::vector<ClosedDisk> excluded);
};

bool in_basic_open(const BerkPoint& p, const BasicOpenSpec& u);

} // namespace berkline
