#include "gwcount/potential.hpp"

#include <array>
#include <string>

namespace gwcount {

namespace {

const std::vector<std::string> kClassicalVars = {"y0", "y1", "y2"};
const std::vector<std::string> kQuantumVars = {"t", "y2"};

void require_positive(int max_degree) {
    if (max_degree < 1)
        throw DomainError("invalid_degree", "truncation degree must be >= 1, got " + std::to_string(max_degree));
}

Exponents quantum_bounds(int max_degree) { return {max_degree, 3 * max_degree - 1}; }

Series classical_cubic() {
    const Exponents bounds = {3, 3, 3};
    Series s(kClassicalVars, bounds);
    s.accumulate({2, 0, 1}, Rational(1, 2));
    s.accumulate({1, 2, 0}, Rational(1, 2));
    return s;
}

// Quantum series using every N_d the table holds for d <= max_degree.
Series quantum_part(int max_degree, const CountTable& table) {
    Series s(kQuantumVars, quantum_bounds(max_degree));
    for (const auto& [d, n] : table.values()) {
        if (d > max_degree) break;
        const int power = 3 * d - 1;
        s.accumulate({d, power}, Rational(n, factorial(static_cast<std::uint64_t>(power))));
    }
    return s;
}

void require_index(int i) {
    if (i < 0 || i > 2) throw DomainError("invalid_basis_index", "P^2 index must be 0, 1 or 2");
}

}  // namespace

P2Potential assemble_potential(int max_degree, CountTable& table) {
    require_positive(max_degree);
    kontsevich_nd(max_degree, table);
    return assemble_potential_from(max_degree, table);
}

P2Potential assemble_potential_from(int max_degree, const CountTable& table) {
    require_positive(max_degree);
    for (int d = 1; d <= max_degree; ++d) table.at(d);
    return {max_degree, classical_cubic(), quantum_part(max_degree, table)};
}

Series phi_ijk(const P2Potential& p, int i, int j, int k) {
    const std::array<int, 3> idx = {i, j, k};
    for (int v : idx) require_index(v);

    Series classical = p.classical;
    Series quantum = p.quantum;
    for (int v : idx) {
        classical = derive(classical, kClassicalVars[static_cast<std::size_t>(v)]);
        switch (v) {
            case 0: quantum = Series(quantum.vars(), quantum.bounds()); break;
            case 1: quantum = euler(quantum, "t"); break;
            default: quantum = derive(quantum, "y2"); break;
        }
    }
    // The cubic's third derivatives are constants.
    quantum.accumulate({0, 0}, classical.coefficient({0, 0, 0}));
    return quantum;
}

ResidualWindow residual_window(const P2Potential& p) {
    return {p.truncation_degree, 3 * p.truncation_degree - 4};
}

Series wdvv_residual(const P2Potential& p) {
    const Series f222 = phi_ijk(p, 2, 2, 2);
    const Series f111 = phi_ijk(p, 1, 1, 1);
    const Series f122 = phi_ijk(p, 1, 2, 2);
    const Series f112 = phi_ijk(p, 1, 1, 2);
    return f222 + f111 * f122 - f112 * f112;
}

ResidualReport check_wdvv(const P2Potential& p) {
    ResidualReport report;
    report.window = residual_window(p);
    const Series residual = wdvv_residual(p);
    for (int t = 0; t <= report.window.max_t; ++t) {
        for (int y = 0; y <= report.window.max_y2; ++y) {
            ++report.exponents_checked;
            const Rational c = residual.coefficient({t, y});
            if (c.is_zero()) continue;
            ++report.nonzero_count;
            BigInt n = abs(c.num());
            if (n > report.max_abs_numerator) report.max_abs_numerator = n;
        }
    }
    return report;
}

CountTable nd_from_wdvv(int max_degree) {
    require_positive(max_degree);
    CountTable table;
    for (int d = 2; d <= max_degree; ++d) {
        P2Potential partial{max_degree, classical_cubic(), quantum_part(max_degree, table)};
        const Series f112 = phi_ijk(partial, 1, 1, 2);
        const Series rhs = f112 * f112 - phi_ijk(partial, 1, 1, 1) * phi_ijk(partial, 1, 2, 2);
        // Phi_222 contributes N_d y2^(3d-4) / (3d-4)! at t^d.
        const int power = 3 * d - 4;
        const Rational n = rhs.coefficient({d, power}) * Rational(factorial(static_cast<std::uint64_t>(power)));
        if (!n.is_integer())
            throw DomainError("non_integer_count", "WDVV gave non-integral N_" + std::to_string(d) + " = " +
                                                       n.to_string());
        table.set(d, n.num());
    }
    return table;
}

}  // namespace gwcount
