#ifndef C0PDOM_BITROWS_HPP
#define C0PDOM_BITROWS_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace c0pdom {

// Square 0/1 matrix stored as packed 64-bit row words. Row-level AND/popcount
// is what the domination verifier and the oracle spend their time on.
class BitRows {
public:
    BitRows() = default;
    explicit BitRows(int n) : n_(n), words_(word_count(n)), bits_(static_cast<size_t>(n) * words_, 0) {}

    int size() const { return n_; }
    int words_per_row() const { return words_; }

    bool test(int i, int j) const {
        return (bits_[static_cast<size_t>(i) * words_ + (j >> 6)] >> (j & 63)) & 1u;
    }
    void set(int i, int j) { bits_[static_cast<size_t>(i) * words_ + (j >> 6)] |= uint64_t{1} << (j & 63); }
    void clear(int i, int j) { bits_[static_cast<size_t>(i) * words_ + (j >> 6)] &= ~(uint64_t{1} << (j & 63)); }

    const uint64_t* row(int i) const { return bits_.data() + static_cast<size_t>(i) * words_; }
    uint64_t* row(int i) { return bits_.data() + static_cast<size_t>(i) * words_; }

    int row_popcount(int i) const {
        const uint64_t* r = row(i);
        int c = 0;
        for (int w = 0; w < words_; ++w) c += std::popcount(r[w]);
        return c;
    }

    int row_and_popcount(int i, const uint64_t* mask) const {
        const uint64_t* r = row(i);
        int c = 0;
        for (int w = 0; w < words_; ++w) c += std::popcount(r[w] & mask[w]);
        return c;
    }

    bool operator==(const BitRows& o) const { return n_ == o.n_ && bits_ == o.bits_; }

    static int word_count(int n) { return (n + 63) / 64; }

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> bits_;
};

}  // namespace c0pdom

#endif
