/** Small presentations shared by the test suites. */
#pragma once

#include <vector>

#include "oracles.hpp"
#include "toriclag/polytope.hpp"

namespace fixtures {

using namespace toriclag;

/// x1 >= 0, x2 >= 0, 1 - x2 >= 0, k + 1 - x1 - k x2 >= 0
inline HalfspacePresentation trapezoid(long k) {
    return HalfspacePresentation::from_normals({{1, 0}, {0, 1}, {0, -1}, {-1, -k}}, {0, 0, 1, k + 1});
}

inline HalfspacePresentation unit_square() { return trapezoid(0); }

inline HalfspacePresentation standard_simplex() {
    return HalfspacePresentation::from_normals({{1, 0}, {0, 1}, {-1, -1}}, {0, 0, 1});
}

/// Vertex (0,1) spans an index-2 sublattice.
inline HalfspacePresentation thin_triangle() {
    return HalfspacePresentation::from_normals({{1, 0}, {0, 1}, {-1, -2}}, {0, 0, 2});
}

inline HalfspacePresentation pentagon() {
    return HalfspacePresentation::from_normals({{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {-1, -1}}, {0, 0, 2, 2, 3});
}

inline oracle::Mat to_mat(const IntMatrix& m) {
    oracle::Mat out(m.rows(), std::vector<long long>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).get_si();
    return out;
}

inline IntMatrix from_mat(const oracle::Mat& m) {
    IntMatrix out(m.size(), m.empty() ? 0 : m[0].size());
    for (std::size_t r = 0; r < out.rows(); ++r)
        for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) = static_cast<long>(m[r][c]);
    return out;
}

/// Normals as rows and offsets as fractions, for the brute-force vertex oracle.
inline std::pair<oracle::Mat, std::vector<oracle::Frac>> oracle_input(const HalfspacePresentation& p) {
    oracle::Mat normals = to_mat(p.a.transpose());
    std::vector<oracle::Frac> b;
    for (const auto& q : p.b) b.emplace_back(q.get_num().get_si(), q.get_den().get_si());
    return {normals, b};
}

inline std::vector<oracle::Frac> to_fracs(const RatVector& v) {
    std::vector<oracle::Frac> out;
    for (const auto& q : v) out.emplace_back(q.get_num().get_si(), q.get_den().get_si());
    return out;
}

}  // namespace fixtures
