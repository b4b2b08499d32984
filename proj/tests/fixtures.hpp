#pragma once

#include "auslander/auslander.hpp"

namespace fixtures {

using namespace auslander;

/// Representation from literal arrow matrices (rows of the target dimension).
inline Representation rep(const QuiverPtr& q, const Field& f, std::vector<std::size_t> dims,
                          const std::vector<std::vector<std::vector<long long>>>& maps)
{
    std::vector<Matrix> ms;
    for (std::size_t a = 0; a < q->arrows().size(); ++a) {
        const auto& ar = q->arrows()[a];
        auto m = Matrix::from_rows(f, maps.at(a), dims[ar.source]);
        if (m.rows() == 0 && dims[ar.source] == 0)
            m = Matrix(f, dims[ar.target], dims[ar.source]);
        ms.push_back(m);
    }
    return Representation(q, f, std::move(dims), std::move(ms));
}

inline QuiverPtr a2_quiver() { return Quiver::make({"1", "2"}, {{"a", "1", "2"}}); }
inline QuiverPtr a3_quiver() { return Quiver::make({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}}); }
// subspace orientation: three arms into the centre
inline QuiverPtr d4_quiver()
{
    return Quiver::make({"1", "2", "3", "4"}, {{"a", "1", "4"}, {"b", "2", "4"}, {"c", "3", "4"}});
}
inline QuiverPtr kronecker_quiver() { return Quiver::make({"1", "2"}, {{"x", "1", "2"}, {"y", "1", "2"}}); }

struct A2 {
    QuiverPtr q = a2_quiver();
    Field f;
    Representation S1, S2, P1;
    explicit A2(unsigned p = 2) : f(p)
    {
        S1 = simple_rep(q, f, 0);
        S2 = simple_rep(q, f, 1);
        P1 = projective_rep(q, f, 0);
    }
};

struct A3 {
    QuiverPtr q = a3_quiver();
    Field f{2};
    Representation S1 = simple_rep(q, f, 0), S2 = simple_rep(q, f, 1), S3 = simple_rep(q, f, 2);
    Representation P1 = projective_rep(q, f, 0), P2 = projective_rep(q, f, 1), P3 = projective_rep(q, f, 2);
};

}  // namespace fixtures
