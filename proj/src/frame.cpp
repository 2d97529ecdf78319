#include "ecuprint/frame.hpp"

#include <charconv>
#include <sstream>

#include "ecuprint/error.hpp"

namespace ecuprint {

namespace {

void append_uint(BitString& out, uint32_t value, int bits) {
    for (int i = bits - 1; i >= 0; --i) out.push_back(static_cast<uint8_t>((value >> i) & 1));
}

constexpr uint16_t kCrcPoly = 0x4599;  // x^15 implicit

}  // namespace

ExtendedId make_extended_id(uint32_t base_id, uint32_t exid) {
    if (base_id >= (1u << kBaseIdBits)) throw Error("make_extended_id: base identifier exceeds 11 bits");
    if (exid >= (1u << kExidBits)) throw Error("make_extended_id: exid exceeds 18 bits");
    return ExtendedId{static_cast<uint16_t>(base_id), exid};
}

uint32_t make_exid(const BitString& pattern, bool conforming) {
    if (pattern.size() != static_cast<size_t>(kExidBits))
        throw Error("make_exid: pattern must be exactly 18 bits");
    if (conforming && pattern[0] != 0)
        throw Error("make_exid: conforming pattern must have MSB 0");
    uint32_t value = 0;
    for (size_t i = 0; i < pattern.size(); ++i) value = (value << 1) | pattern[i];
    return value;
}

uint32_t make_exid(std::string_view pattern, bool conforming) {
    return make_exid(BitString::parse(pattern), conforming);
}

BitString exid_pattern(uint32_t exid) {
    if (exid >= (1u << kExidBits)) throw Error("exid_pattern: value exceeds 18 bits");
    BitString out;
    append_uint(out, exid, kExidBits);
    return out;
}

const char* frame_field_name(FrameField f) {
    switch (f) {
        case FrameField::Sof: return "sof";
        case FrameField::Identifier: return "identifier";
        case FrameField::Srr: return "srr";
        case FrameField::Ide: return "ide";
        case FrameField::Exid: return "exid";
        case FrameField::Reserved: return "reserved";
        case FrameField::Dlc: return "dlc";
        case FrameField::Data: return "data";
        case FrameField::Crc: return "crc";
        case FrameField::CrcDelim: return "crc_delim";
        case FrameField::AckSlot: return "ack_slot";
        case FrameField::AckDelim: return "ack_delim";
        case FrameField::Eof: return "eof";
    }
    return "?";
}

const FieldWindow& WireFrame::window(FrameField f) const {
    for (const FieldWindow& w : fields) {
        if (w.field == f) return w;
    }
    throw Error(std::string("WireFrame::window: no window for field ") + frame_field_name(f));
}

uint16_t crc15(const BitString& bits) {
    uint16_t crc = 0;
    for (size_t i = 0; i < bits.size(); ++i) {
        const uint16_t crcnxt = static_cast<uint16_t>(bits[i] ^ ((crc >> 14) & 1));
        crc = static_cast<uint16_t>((crc << 1) & 0x7fff);
        if (crcnxt) crc ^= kCrcPoly;
    }
    return crc;
}

WireFrame frame_bits(const DataFrame& frame) {
    if (frame.data.size() > 8) throw Error("frame_bits: data length exceeds 8 bytes");
    if (frame.id.base_id >= (1u << kBaseIdBits) || frame.id.exid >= (1u << kExidBits))
        throw Error("frame_bits: identifier out of range");

    // Unstuffed body, tracking which raw bit range each field covers.
    BitString raw;
    std::vector<std::pair<FrameField, size_t>> raw_field_end;  // end offset per field
    auto mark = [&](FrameField f) { raw_field_end.emplace_back(f, raw.size()); };

    raw.push_back(0);  // SOF is dominant
    mark(FrameField::Sof);
    append_uint(raw, frame.id.base_id, kBaseIdBits);
    mark(FrameField::Identifier);
    raw.push_back(1);  // SRR recessive
    mark(FrameField::Srr);
    raw.push_back(1);  // IDE recessive: extended format
    mark(FrameField::Ide);
    append_uint(raw, frame.id.exid, kExidBits);
    mark(FrameField::Exid);
    append_uint(raw, 0, 2);
    mark(FrameField::Reserved);
    append_uint(raw, static_cast<uint32_t>(frame.data.size()), 4);
    mark(FrameField::Dlc);
    for (uint8_t byte : frame.data) append_uint(raw, byte, 8);
    mark(FrameField::Data);
    append_uint(raw, crc15(raw), 15);
    mark(FrameField::Crc);

    auto field_of_raw = [&](size_t raw_index) {
        for (const auto& [f, end] : raw_field_end) {
            if (raw_index < end) return f;
        }
        return FrameField::Crc;
    };

    WireFrame wire;
    const std::vector<AnnotatedBit> stuffed = stuff_annotated(raw);
    wire.stuffed_body_length = stuffed.size();

    FrameField current = FrameField::Sof;
    size_t window_start = 0;
    for (size_t i = 0; i < stuffed.size(); ++i) {
        // Stuff bits stay in the window of the bit that triggered them.
        const FrameField f = stuffed[i].raw_index < 0
                                 ? current
                                 : field_of_raw(static_cast<size_t>(stuffed[i].raw_index));
        if (f != current) {
            wire.fields.push_back({current, window_start, i - window_start});
            current = f;
            window_start = i;
        }
        wire.bits.push_back(stuffed[i].bit);
    }
    wire.fields.push_back({current, window_start, stuffed.size() - window_start});

    // Data window is empty when dlc = 0; keep it in the partition.
    if (frame.data.empty()) {
        for (size_t i = 0; i < wire.fields.size(); ++i) {
            if (wire.fields[i].field == FrameField::Crc) {
                wire.fields.insert(wire.fields.begin() + i,
                                   FieldWindow{FrameField::Data, wire.fields[i].offset, 0});
                break;
            }
        }
    }

    // Fixed-form tail, excluded from stuffing. The transmitter leaves the
    // ACK slot recessive.
    auto tail = [&](FrameField f, std::initializer_list<uint8_t> bits) {
        const size_t start = wire.bits.size();
        for (uint8_t b : bits) wire.bits.push_back(b);
        wire.fields.push_back({f, start, bits.size()});
    };
    tail(FrameField::CrcDelim, {1});
    tail(FrameField::AckSlot, {1});
    tail(FrameField::AckDelim, {1});
    tail(FrameField::Eof, {1, 1, 1, 1, 1, 1, 1});

    return wire;
}

ExtendedId arbitrate(const std::vector<ExtendedId>& contenders) {
    if (contenders.empty()) throw Error("arbitrate: empty contention");
    std::vector<const ExtendedId*> survivors;
    survivors.reserve(contenders.size());
    for (const ExtendedId& c : contenders) survivors.push_back(&c);

    const int total_bits = kBaseIdBits + kExidBits;
    for (int pos = total_bits - 1; pos >= 0 && survivors.size() > 1; --pos) {
        bool any_dominant = false;
        for (const ExtendedId* c : survivors) {
            if (((c->value() >> pos) & 1) == 0) {
                any_dominant = true;
                break;
            }
        }
        if (!any_dominant) continue;
        std::vector<const ExtendedId*> next;
        for (const ExtendedId* c : survivors) {
            if (((c->value() >> pos) & 1) == 0) next.push_back(c);
        }
        survivors.swap(next);
    }
    return *survivors.front();
}

std::string format_frame_record(const DataFrame& frame) {
    std::ostringstream os;
    os << std::hex << std::uppercase << frame.id.base_id << ' ';
    os << exid_pattern(frame.id.exid).str() << ' ';
    os << std::dec << frame.data.size() << ' ';
    if (frame.data.empty()) {
        os << '-';
    } else {
        static const char* digits = "0123456789ABCDEF";
        for (uint8_t b : frame.data) {
            os << digits[b >> 4] << digits[b & 0xf];
        }
    }
    return os.str();
}

namespace {

uint32_t parse_hex(std::string_view s, const char* what) {
    uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value, 16);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw Error(std::string("parse_frame_record: bad ") + what + " '" + std::string(s) + "'");
    return value;
}

}  // namespace

DataFrame parse_frame_record(std::string_view line) {
    std::vector<std::string_view> tok;
    size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && line[pos] == ' ') ++pos;
        size_t end = pos;
        while (end < line.size() && line[end] != ' ') ++end;
        if (end > pos) tok.push_back(line.substr(pos, end - pos));
        pos = end;
    }
    if (tok.size() != 4) throw Error("parse_frame_record: expected 4 fields");

    DataFrame frame;
    frame.id = make_extended_id(parse_hex(tok[0], "identifier"),
                                make_exid(tok[1], /*conforming=*/false));
    uint32_t dlc = 0;
    const auto [ptr, ec] = std::from_chars(tok[2].data(), tok[2].data() + tok[2].size(), dlc);
    if (ec != std::errc() || ptr != tok[2].data() + tok[2].size() || dlc > 8)
        throw Error("parse_frame_record: bad dlc");
    if (dlc == 0) {
        if (tok[3] != "-") throw Error("parse_frame_record: dlc 0 requires data '-'");
        return frame;
    }
    if (tok[3].size() != 2 * dlc) throw Error("parse_frame_record: data length does not match dlc");
    frame.data.reserve(dlc);
    for (uint32_t i = 0; i < dlc; ++i)
        frame.data.push_back(static_cast<uint8_t>(parse_hex(tok[3].substr(2 * i, 2), "data byte")));
    return frame;
}

}  // namespace ecuprint
