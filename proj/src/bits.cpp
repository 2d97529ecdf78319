#include "ecuprint/bits.hpp"

#include "ecuprint/error.hpp"

namespace ecuprint {

BitString::BitString(std::vector<uint8_t> bits) : bits_(std::move(bits)) {
    for (uint8_t b : bits_) {
        if (b > 1) throw Error("BitString: symbols must be 0 or 1");
    }
}

BitString BitString::parse(std::string_view text) {
    BitString out;
    out.bits_.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') throw Error(std::string("BitString::parse: invalid symbol '") + c + "'");
        out.bits_.push_back(static_cast<uint8_t>(c - '0'));
    }
    return out;
}

void BitString::push_back(uint8_t bit) {
    if (bit > 1) throw Error("BitString: symbols must be 0 or 1");
    bits_.push_back(bit);
}

void BitString::append(const BitString& other) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

BitString BitString::slice(size_t offset, size_t length) const {
    if (offset + length > bits_.size()) throw Error("BitString::slice: range out of bounds");
    BitString out;
    out.bits_.assign(bits_.begin() + offset, bits_.begin() + offset + length);
    return out;
}

std::string BitString::str() const {
    std::string s;
    s.reserve(bits_.size());
    for (uint8_t b : bits_) s.push_back(static_cast<char>('0' + b));
    return s;
}

size_t longest_run(const BitString& s) {
    size_t best = 0, run = 0;
    uint8_t prev = 2;
    for (size_t i = 0; i < s.size(); ++i) {
        run = (s[i] == prev) ? run + 1 : 1;
        prev = s[i];
        if (run > best) best = run;
    }
    return best;
}

std::vector<AnnotatedBit> stuff_annotated(const BitString& raw) {
    if (raw.empty()) throw Error("stuff: input must be non-empty");
    std::vector<AnnotatedBit> out;
    out.reserve(raw.size() + raw.size() / 5 + 1);
    uint8_t prev = 2;
    size_t run = 0;
    for (size_t i = 0; i < raw.size(); ++i) {
        const uint8_t b = raw[i];
        run = (b == prev) ? run + 1 : 1;
        prev = b;
        out.push_back({b, static_cast<int32_t>(i)});
        if (run == 5) {
            const uint8_t opposite = static_cast<uint8_t>(1 - b);
            out.push_back({opposite, -1});
            prev = opposite;
            run = 1;
        }
    }
    return out;
}

BitString stuff(const BitString& raw) {
    BitString out;
    for (const AnnotatedBit& ab : stuff_annotated(raw)) out.push_back(ab.bit);
    return out;
}

BitString destuff(const BitString& stuffed) {
    BitString out;
    uint8_t prev = 2;
    size_t run = 0;
    bool expect_stuff = false;
    for (size_t i = 0; i < stuffed.size(); ++i) {
        const uint8_t b = stuffed[i];
        if (expect_stuff) {
            if (b == prev) throw Error("destuff: run of six identical bits (stuffing violation)");
            // the stuff bit is dropped but seeds the next run
            prev = b;
            run = 1;
            expect_stuff = false;
            continue;
        }
        run = (b == prev) ? run + 1 : 1;
        prev = b;
        out.push_back(b);
        if (run == 5) expect_stuff = true;
    }
    if (expect_stuff) throw Error("destuff: stream ends inside a five-run (missing stuff bit)");
    return out;
}

}  // namespace ecuprint
