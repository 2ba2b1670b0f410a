#include "gwcount/enumerative.hpp"

#include <string>

namespace gwcount {

namespace {

void require_positive_degree(std::int64_t d) {
    if (d < 1) throw DomainError("invalid_degree", "degree must be >= 1, got " + std::to_string(d));
}

}  // namespace

CountTable::CountTable() { values_.emplace(1, BigInt(1)); }

const BigInt& CountTable::at(int d) const {
    auto it = values_.find(d);
    if (it == values_.end())
        throw DomainError("missing_degree", "N_" + std::to_string(d) + " has not been computed");
    return it->second;
}

void CountTable::set(int d, BigInt value) {
    require_positive_degree(d);
    if (value < 0) throw DomainError("invalid_count", "curve counts are nonnegative");
    if (d == 1 && value != 1) throw DomainError("invalid_count", "N_1 is fixed to 1");
    values_[d] = std::move(value);
}

int CountTable::complete_up_to() const {
    int d = 0;
    while (values_.contains(d + 1)) ++d;
    return d;
}

std::int64_t virtual_dimension(const DimensionInput& input) {
    if (input.genus < 0 || input.marked_points < 0)
        throw DomainError("invalid_input", "genus and marked points must be nonnegative");
    return static_cast<std::int64_t>(input.dim_x - 3) * (1 - input.genus) + input.c1_beta +
           input.marked_points;
}

std::int64_t plane_genus(std::int64_t d) {
    require_positive_degree(d);
    return (d - 1) * (d - 2) / 2;
}

FamilyDimension plane_curve_family_dim(std::int64_t d) {
    require_positive_degree(d);
    return {(d + 2) * (d + 1) / 2 - 1, 3 * d - 1};
}

std::int64_t surface_point_insertions(std::int64_t genus, std::int64_t c1_beta) {
    return (genus - 1) + c1_beta;
}

BigInt elliptic_cover_count(std::uint64_t d) {
    require_positive_degree(static_cast<std::int64_t>(d));
    return sigma1(d);
}

BigInt kontsevich_nd(int d, CountTable& table) {
    require_positive_degree(d);
    for (int n = table.complete_up_to() + 1; n <= d; ++n) {
        if (table.contains(n)) continue;
        const std::uint64_t top = static_cast<std::uint64_t>(3 * n - 4);
        BigInt total = 0;
        for (int d1 = 1; d1 < n; ++d1) {
            const int d2 = n - d1;
            const BigInt pair = table.at(d1) * table.at(d2);
            const BigInt a = BigInt(d1) * d1 * d2 * d2 * binomial(top, 3 * d1 - 2);
            const BigInt b = BigInt(d1) * d1 * d1 * d2 * binomial(top, 3 * d1 - 1);
            total += pair * (a - b);
        }
        if (total <= 0)
            throw DomainError("invalid_count", "recursion produced non-positive N_" + std::to_string(n));
        table.set(n, std::move(total));
    }
    return table.at(d);
}

}  // namespace gwcount
