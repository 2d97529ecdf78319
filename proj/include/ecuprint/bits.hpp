#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ecuprint {

// CAN bit polarity: 0 = dominant, 1 = recessive.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::vector<uint8_t> bits);

    // Accepts only '0' and '1'.
    static BitString parse(std::string_view text);

    void push_back(uint8_t bit);
    void append(const BitString& other);
    BitString slice(size_t offset, size_t length) const;

    uint8_t operator[](size_t i) const { return bits_[i]; }
    size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    std::string str() const;
    const std::vector<uint8_t>& raw() const { return bits_; }

    bool operator==(const BitString&) const = default;

private:
    std::vector<uint8_t> bits_;
};

size_t longest_run(const BitString& s);

// Inserts one opposite bit after every run of five identical bits. Inserted
// bits count toward the runs that follow them.
BitString stuff(const BitString& raw);

// Stuffed bit tagged with the raw index it carries; -1 marks an inserted
// stuff bit. Used by frame assembly to keep field offsets through stuffing.
struct AnnotatedBit {
    uint8_t bit;
    int32_t raw_index;
};
std::vector<AnnotatedBit> stuff_annotated(const BitString& raw);

// Inverse of stuff. A run of six identical bits is a stuffing violation, as
// is a stream that ends immediately after a five-run.
BitString destuff(const BitString& stuffed);

}  // namespace ecuprint
