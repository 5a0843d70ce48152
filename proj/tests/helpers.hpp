#pragma once

// Shared fixtures for the unit tests: named points of the cell, random
// interior points, and random Lorentz isometries (orthochronous, built by
// Gram-Schmidt in the Lorentz metric).

#include <array>
#include <cmath>
#include <optional>
#include <random>

#include "h24/cell24.hpp"
#include "h24/lorentz.hpp"

namespace h24::test {

inline const Cell24& cell() { return canonical_cell24(); }
inline const ProjectivePoint& A(int i) { return cell().vertex(i); }
inline const SpecialPoints& named() {
    static const SpecialPoints sp = special_points(cell());
    return sp;
}

inline ProjectivePoint pt(double x0, double x1, double x2, double x3, double x4) {
    return ProjectivePoint(Vec5{x0, x1, x2, x3, x4});
}

template <typename F>
std::optional<Err> thrown_code(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

inline ProjectivePoint random_interior(std::mt19937_64& rng, double radius = 0.9) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (;;) {
        Vec5 v{1.0, 0, 0, 0, 0};
        double n2 = 0.0;
        for (int k = 1; k < 5; ++k) {
            v[static_cast<std::size_t>(k)] = radius * unit(rng);
            n2 += v[static_cast<std::size_t>(k)] * v[static_cast<std::size_t>(k)];
        }
        if (n2 < radius * radius) return ProjectivePoint(v);
    }
}

inline ProjectivePoint random_ideal(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (;;) {
        Vec5 v{1.0, 0, 0, 0, 0};
        double n2 = 0.0;
        for (int k = 1; k < 5; ++k) {
            v[static_cast<std::size_t>(k)] = unit(rng);
            n2 += v[static_cast<std::size_t>(k)] * v[static_cast<std::size_t>(k)];
        }
        if (n2 < 1e-4) continue;
        const double s = 1.0 / std::sqrt(n2);
        for (int k = 1; k < 5; ++k) v[static_cast<std::size_t>(k)] *= s;
        return ProjectivePoint(v);
    }
}

// Columns of an orthochronous Lorentz matrix.
struct LorentzMap {
    std::array<Vec5, 5> col;

    ProjectivePoint apply(const ProjectivePoint& p) const {
        Vec5 y{0, 0, 0, 0, 0};
        for (int k = 0; k < 5; ++k)
            y = add(y, scale(col[static_cast<std::size_t>(k)], p[k]));
        return ProjectivePoint(y);
    }
};

inline LorentzMap random_isometry(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    LorentzMap m;
    // timelike column on the forward sheet
    for (;;) {
        Vec5 t{1.0, 0.6 * unit(rng), 0.6 * unit(rng), 0.6 * unit(rng), 0.6 * unit(rng)};
        const double q = lorentz_dot(t, t);
        if (q >= -0.1) continue;
        m.col[0] = scale(t, 1.0 / std::sqrt(-q));
        break;
    }
    for (int k = 1; k < 5; ++k) {
        for (;;) {
            Vec5 r{unit(rng), unit(rng), unit(rng), unit(rng), unit(rng)};
            r = add(r, scale(m.col[0], lorentz_dot(r, m.col[0])));
            for (int j = 1; j < k; ++j)
                r = sub(r, scale(m.col[static_cast<std::size_t>(j)],
                                 lorentz_dot(r, m.col[static_cast<std::size_t>(j)])));
            const double q = lorentz_dot(r, r);
            if (q < 1e-6) continue;
            m.col[static_cast<std::size_t>(k)] = scale(r, 1.0 / std::sqrt(q));
            break;
        }
    }
    return m;
}

}  // namespace h24::test
