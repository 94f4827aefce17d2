#pragma once

// Structured families with known homogeneous structure, used by the
// delta-method tests and the acceptance suite.

#include <vector>

#include "turan/delta.hpp"

namespace planted {

using turan::Edge;
using turan::Family;
using turan::VertexSet;

// Complete k-partite product with parts of size m (rank-k pattern).
inline Family complete_kpartite(int k, int m) {
    std::vector<Edge> edges;
    std::vector<int> idx(k, 0);
    while (true) {
        Edge e;
        for (int p = 0; p < k; ++p) e.insert(p * m + idx[p] + 1);
        edges.push_back(e);
        int p = k - 1;
        while (p >= 0 && idx[p] == m - 1) idx[p--] = 0;
        if (p < 0) break;
        ++idx[p];
    }
    return turan::make_family(k * m, k, std::move(edges));
}

// All edges {1} x X2 x ... x Xk with tails of size m: a type-1 family whose
// pattern is every proper index set through part 1.
inline Family type1_star_product(int k, int m) {
    std::vector<Edge> edges;
    std::vector<int> idx(k - 1, 0);
    while (true) {
        Edge e{1};
        for (int p = 0; p < k - 1; ++p) e.insert(1 + p * m + idx[p] + 1);
        edges.push_back(e);
        int p = k - 2;
        while (p >= 0 && idx[p] == m - 1) idx[p--] = 0;
        if (p < 0) break;
        ++idx[p];
    }
    return turan::make_family(1 + (k - 1) * m, k, std::move(edges));
}

// k = 5 with the first two coordinates linked diagonally. The pattern is
// 2^{tail} plus {1,2} joined with proper tail subsets: rank 4, type 2 with
// head {1,2}, and the tail triple is a kernel triple.
inline Family type2_diagonal_k5(int m) {
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i)
        for (int c = 0; c < m; ++c)
            for (int d = 0; d < m; ++d)
                for (int e = 0; e < m; ++e)
                    edges.push_back(Edge{i + 1, m + i + 1, 2 * m + c + 1, 3 * m + d + 1, 4 * m + e + 1});
    return turan::make_family(5 * m, 5, std::move(edges));
}

// k = 4 sum structure (last coordinate determined by the others). The
// pattern is every index set of size <= 2: rank 3, type 2, no kernel triple.
inline Family type2_sum_k4(int m) {
    std::vector<Edge> edges;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
                edges.push_back(Edge{a + 1, m + b + 1, 2 * m + c + 1, 3 * m + (a + b + c) % m + 1});
    return turan::make_family(4 * m, 4, std::move(edges));
}

}  // namespace planted
