#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ecuprint/bits.hpp"

namespace ecuprint {

inline constexpr int kBaseIdBits = 11;
inline constexpr int kExidBits = 18;

// 29-bit extended CAN identifier: 11-bit base identifier plus the 18-bit
// extension (EXID), MSB first in both fields.
struct ExtendedId {
    uint16_t base_id = 0;
    uint32_t exid = 0;

    uint32_t value() const { return (static_cast<uint32_t>(base_id) << kExidBits) | exid; }
    auto operator<=>(const ExtendedId&) const = default;
};

ExtendedId make_extended_id(uint32_t base_id, uint32_t exid);

// Validates an 18-bit EXID pattern. Conforming patterns have MSB 0, which
// pins the stuff-bit layout of the on-wire window; non-conforming patterns
// are accepted only with conforming = false.
uint32_t make_exid(const BitString& pattern, bool conforming = true);
uint32_t make_exid(std::string_view pattern, bool conforming = true);

// 18 bits, MSB first.
BitString exid_pattern(uint32_t exid);

// Extended-format data frame. dlc == data.size(); at most 8 bytes.
struct DataFrame {
    ExtendedId id;
    std::vector<uint8_t> data;

    bool operator==(const DataFrame&) const = default;
};

enum class FrameField {
    Sof,
    Identifier,
    Srr,
    Ide,
    Exid,
    Reserved,
    Dlc,
    Data,
    Crc,
    CrcDelim,
    AckSlot,
    AckDelim,
    Eof,
};

const char* frame_field_name(FrameField f);

// Window of one frame field over the on-wire bit string. Stuff bits belong
// to the window of the raw bit that triggered them.
struct FieldWindow {
    FrameField field;
    size_t offset;
    size_t length;
};

struct WireFrame {
    BitString bits;                   // stuffed SOF..CRC followed by the fixed-form tail
    std::vector<FieldWindow> fields;  // partition of bits, in frame order
    size_t stuffed_body_length = 0;   // bits [0, stuffed_body_length) are the stuffed segment

    const FieldWindow& window(FrameField f) const;
};

// CAN 15-bit CRC (x^15+x^14+x^10+x^8+x^7+x^4+x^3+1), register seeded with 0.
uint16_t crc15(const BitString& bits);

WireFrame frame_bits(const DataFrame& frame);

// Lossless bit-wise arbitration over the 29-bit identifier sequence,
// dominant (0) beating recessive (1). Equivalent to the numerically
// smallest identifier value.
ExtendedId arbitrate(const std::vector<ExtendedId>& contenders);

// One frame per record: identifier hex, exid binary, dlc, data hex
// ("-" when dlc is 0).
std::string format_frame_record(const DataFrame& frame);
DataFrame parse_frame_record(std::string_view line);

}  // namespace ecuprint
