#include "core/f2.hpp"

#include <algorithm>
#include <numeric>

namespace bhf {

int f2_rank(F2Matrix m) {
    int rank = 0;
    for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows(); ++r) {
            if (m.get(r, c)) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int i = 0; i < m.words_; ++i)
                std::swap(m.bits_[(size_t)pivot * m.words_ + i], m.bits_[(size_t)rank * m.words_ + i]);
        }
        for (int r = 0; r < m.rows(); ++r)
            if (r != rank && m.get(r, c)) m.xor_rows(r, rank);
        ++rank;
    }
    return rank;
}

int f2_rank(const std::vector<std::vector<int>>& sparse_rows, int cols) {
    if (cols == 0 || sparse_rows.empty()) return 0;
    std::vector<int> density(cols, 0);
    for (const auto& row : sparse_rows)
        for (int c : row) ++density[c];
    std::vector<int> col_order(cols);
    std::iota(col_order.begin(), col_order.end(), 0);
    std::stable_sort(col_order.begin(), col_order.end(),
                     [&](int a, int b) { return density[a] < density[b]; });
    std::vector<int> col_rank(cols);
    for (int i = 0; i < cols; ++i) col_rank[col_order[i]] = i;

    F2Matrix m((int)sparse_rows.size(), cols);
    for (int r = 0; r < (int)sparse_rows.size(); ++r)
        for (int c : sparse_rows[r]) m.set(r, col_rank[c]);
    return f2_rank(std::move(m));
}

} // namespace bhf
