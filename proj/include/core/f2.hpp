#pragma once

#include <cstdint>
#include <vector>

namespace bhf {

// Dense bitset matrix over F2, row-major.
class F2Matrix {
  public:
    F2Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_((size_t)rows * words_, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    void set(int r, int c) { bits_[(size_t)r * words_ + (c >> 6)] ^= (uint64_t)1 << (c & 63); }
    bool get(int r, int c) const { return (bits_[(size_t)r * words_ + (c >> 6)] >> (c & 63)) & 1; }
    void xor_rows(int dst, int src) {
        uint64_t* d = &bits_[(size_t)dst * words_];
        const uint64_t* s = &bits_[(size_t)src * words_];
        for (int i = 0; i < words_; ++i) d[i] ^= s[i];
    }

  private:
    int rows_, cols_, words_;
    std::vector<uint64_t> bits_;
    friend int f2_rank(F2Matrix m);
};

// Rank via bitset Gaussian elimination (takes a copy). Deterministic.
int f2_rank(F2Matrix m);

// Convenience: rows given as sorted column-index lists. Columns are processed
// in increasing fill order (ties by index), which keeps elimination cheap on
// the sparse matrices produced here.
int f2_rank(const std::vector<std::vector<int>>& sparse_rows, int cols);

} // namespace bhf
