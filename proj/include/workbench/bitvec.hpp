#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wb {

/// Fixed-width bit vector, LSB first (bit 0 is the least significant).
/// Width is carried explicitly; it is never inferred from leading zeros.
class BitVec {
public:
    BitVec() = default;

    BitVec(int width, uint64_t value) : width_(width), bits_(width, false) {
        if (width < 0) throw std::invalid_argument("BitVec: negative width");
        if (width < 64 && width >= 0 && (width == 0 ? value != 0 : (value >> width) != 0))
            throw std::invalid_argument("BitVec: value does not fit in width " +
                                        std::to_string(width));
        for (int i = 0; i < width && i < 64; ++i) bits_[i] = (value >> i) & 1;
    }

    static BitVec zeros(int width) { return BitVec(width, 0); }

    int width() const { return width_; }

    bool bit(int i) const {
        if (i < 0 || i >= width_) throw std::out_of_range("BitVec::bit");
        return bits_[i];
    }

    void set_bit(int i, bool b) {
        if (i < 0 || i >= width_) throw std::out_of_range("BitVec::set_bit");
        bits_[i] = b;
    }

    /// Integer value; requires width <= 64.
    uint64_t to_u64() const {
        if (width_ > 64) throw std::logic_error("BitVec::to_u64: width > 64");
        uint64_t v = 0;
        for (int i = 0; i < width_; ++i)
            if (bits_[i]) v |= uint64_t{1} << i;
        return v;
    }

    BitVec slice(int lo, int len) const {
        if (lo < 0 || len < 0 || lo + len > width_)
            throw std::out_of_range("BitVec::slice");
        BitVec out(len, 0);
        for (int i = 0; i < len; ++i) out.bits_[i] = bits_[lo + i];
        return out;
    }

    /// parts[0] lands in the least significant bits.
    static BitVec concat(std::span<const BitVec> parts) {
        int w = 0;
        for (const auto& p : parts) w += p.width_;
        BitVec out(w, 0);
        int at = 0;
        for (const auto& p : parts) {
            for (int i = 0; i < p.width_; ++i) out.bits_[at + i] = p.bits_[i];
            at += p.width_;
        }
        return out;
    }

    bool operator==(const BitVec& o) const {
        return width_ == o.width_ && bits_ == o.bits_;
    }
    bool operator!=(const BitVec& o) const { return !(*this == o); }

private:
    int width_ = 0;
    std::vector<bool> bits_;
};

}  // namespace wb
