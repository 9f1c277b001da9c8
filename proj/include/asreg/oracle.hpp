#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "asreg/ec.hpp"
#include "asreg/hesse.hpp"
#include "asreg/qalg.hpp"
#include "asreg/tables.hpp"

namespace asreg {

// Supported point-scheme shapes. LineConic2 is a line meeting a smooth conic
// in two points (the conic is kappa x^2 = yz together with the line x = 0);
// LineConic1 is the tangent configuration y = 0, x^2 = yz.
enum class Family {
    P2,
    Triangle,
    LineConic2,
    LineConic1,
    ThreeLinesConcurrent,
    NodalCubic,
    HesseCubic,
};

// Componentwise triangle automorphism:
//   (0:b:c) -> (0:b:alpha c),  (a:0:c) -> (beta a:0:c),  (a:b:0) -> (a:gamma b:0).
struct TriangleSigma {
    FieldElem alpha, beta, gamma;
};

// One of the two nodal-cubic automorphism families (see nc_sigma).
struct NodalSigma {
    int variant;
    FieldElem param;
};

// sigma reconstructed from a relation set: sigma(p) is the kernel direction
// of the multilinearization M(p), which must have rank exactly 2.
struct NullvectorSigma {
    RelationSet relations;
};

using SigmaData = std::variant<Mat3, AutElem, TriangleSigma, NodalSigma, NullvectorSigma>;

struct GeometricPair {
    Family family;
    SigmaData sigma;
    std::optional<FieldElem> kappa;  // required for LineConic2 only
};

bool pair_contains(const GeometricPair& g, const ProjPoint& p);
ProjPoint pair_sigma(const GeometricPair& g, const ProjPoint& p);

// n distinct points on the pair's variety, from fixed rational streams (the
// Hesse case walks multiples and 3-torsion translates of the automorphism's
// translation point). Throws SamplingExhausted when the variety has too few
// rational points (possible only for Hesse pairs with a torsion seed).
std::vector<ProjPoint> sample_points(const GeometricPair& g, int n);

// Recovers the relation space from the vanishing condition: nullspace of the
// n x 9 evaluation matrix at (p, sigma(p)). Throws WrongDimension when the
// nullspace dimension is not exactly 3, and NotOnCurve if a sigma image
// leaves the variety.
RelationSet g2_relations(const GeometricPair& g, int n = 12);

struct G1Entry {
    ProjPoint point;
    std::string check;  // "vanishing" | "rank" | "nullvector"
    bool pass;
    std::string detail;
};

// Pointwise graph condition: relations vanish at (p, sigma(p)), M(p) has rank
// exactly 2, and its kernel is sigma(p). Failures are report entries, never
// exceptions; rank <= 1 entries are flagged "NotG1".
std::vector<G1Entry> g1_check(const RelationSet& rel, const GeometricPair& g, int n = 12);

// The verification pair for a classification row: explicit sigma where one is
// on record (S1 componentwise, NC1/NC2 formulas), the nullvector
// reconstruction elsewhere. CC/WL/TL rows have no implemented pair and throw
// InvalidParameters.
GeometricPair pair_for_row(const TypedAlgebra& t);

GeometricPair pair_for_ec(const EcDescriptor& d);

}  // namespace asreg
