// Closed-form enumerative counts and the recursion for rational plane curves.
#pragma once

#include "gwcount/exact.hpp"

#include <cstdint>
#include <map>

namespace gwcount {

/// Memo of N_d, the number of degree-d rational plane curves through 3d - 1
/// general points. Always holds N_1 = 1; every entry is a nonnegative integer.
class CountTable {
public:
    CountTable();

    bool contains(int d) const { return values_.contains(d); }
    /// Throws DomainError("missing_degree") if d has not been computed.
    const BigInt& at(int d) const;
    /// Stores N_d. Rejects d < 1, negative values, and any N_1 other than 1.
    void set(int d, BigInt value);
    /// Largest d such that N_1..N_d are all present.
    int complete_up_to() const;

    const std::map<int, BigInt>& values() const { return values_; }
    friend bool operator==(const CountTable&, const CountTable&) = default;

private:
    std::map<int, BigInt> values_;
};

struct DimensionInput {
    int dim_x = 0;
    int genus = 0;
    int marked_points = 0;
    /// Value of the first Chern class of TX on the curve class.
    std::int64_t c1_beta = 0;
};

/// (dim X - 3)(1 - g) + c1_beta + n.
std::int64_t virtual_dimension(const DimensionInput& input);

/// Genus (d - 1)(d - 2)/2 of a smooth plane curve of degree d.
std::int64_t plane_genus(std::int64_t d);

struct FamilyDimension {
    /// Projective dimension C(d + 2, 2) - 1 of the space of degree-d equations.
    std::int64_t coefficient_space = 0;
    /// Dimension 3d - 1 of the family of rational (maximally nodal) curves.
    std::int64_t rational_family = 0;
};

FamilyDimension plane_curve_family_dim(std::int64_t d);

/// Number of point conditions (g - 1) + c1_beta cut out on a surface.
/// Negative results are returned unchanged.
std::int64_t surface_point_insertions(std::int64_t genus, std::int64_t c1_beta);

/// Degree-d unramified covers of an elliptic curve through one point: sigma_1(d).
BigInt elliptic_cover_count(std::uint64_t d);

/// N_d from the quadratic recursion, filling in N_2..N_d in `table` as needed.
BigInt kontsevich_nd(int d, CountTable& table);

}  // namespace gwcount
