#include "residue_lab/fpset.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace rlab {

FpSet::FpSet(u64 p) : p_(p), words_((p + 63) / 64, 0) {
    if (p == 0) fail(Err::TooSmall, "FpSet: modulus must be positive");
    if (p > (u64(1) << 31)) fail(Err::TooLarge, "FpSet: dense tables cap the modulus at 2^31");
}

FpSet FpSet::full(u64 p) {
    FpSet s(p);
    for (auto& w : s.words_) w = ~0ull;
    if (p % 64) s.words_.back() = (u64(1) << (p % 64)) - 1;
    s.card_ = p;
    return s;
}

FpSet FpSet::of(u64 p, std::initializer_list<u64> xs) {
    FpSet s(p);
    for (u64 x : xs) s.add(x % p);
    return s;
}

void FpSet::add(u64 x) {
    u64& w = words_[x >> 6];
    u64 bit = u64(1) << (x & 63);
    if (!(w & bit)) {
        w |= bit;
        ++card_;
    }
}

void FpSet::remove(u64 x) {
    u64& w = words_[x >> 6];
    u64 bit = u64(1) << (x & 63);
    if (w & bit) {
        w &= ~bit;
        --card_;
    }
}

std::vector<u64> FpSet::elements() const {
    std::vector<u64> out;
    out.reserve(card_);
    for_each([&](u64 x) { out.push_back(x); });
    return out;
}

bool FpSet::subset_of(const FpSet& other) const {
    for (size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

FpSet complement(const FpSet& a) {
    FpSet out = FpSet::full(a.modulus());
    a.for_each([&](u64 x) { out.remove(x); });
    return out;
}

FpSet set_union(const FpSet& a, const FpSet& b) {
    FpSet out = a;
    b.for_each([&](u64 x) { out.add(x); });
    return out;
}

FpSet set_intersection(const FpSet& a, const FpSet& b) {
    FpSet out(a.modulus());
    a.for_each([&](u64 x) {
        if (b.contains(x)) out.add(x);
    });
    return out;
}

FpSet set_difference(const FpSet& a, const FpSet& b) {
    FpSet out(a.modulus());
    a.for_each([&](u64 x) {
        if (!b.contains(x)) out.add(x);
    });
    return out;
}

FpSet shift(const FpSet& a, u64 s) {
    u64 p = a.modulus();
    s %= p;
    FpSet out(p);
    a.for_each([&](u64 x) { out.add(add_mod(x, s, p)); });
    return out;
}

FpSet dilate(const FpSet& a, u64 lambda) {
    u64 p = a.modulus();
    lambda %= p;
    if (lambda == 0) fail(Err::ZeroDilation, "dilate: lambda must be nonzero");
    FpSet out(p);
    a.for_each([&](u64 x) { out.add(mul_mod(x, lambda, p)); });
    return out;
}

FpSet invert_set(const FpSet& a) {
    u64 p = a.modulus();
    FpSet out(p);
    a.for_each([&](u64 x) {
        if (x != 0) out.add(inverse_mod(x, p));
    });
    return out;
}

FpSet sumset(const FpSet& a, const FpSet& b) {
    u64 p = a.modulus();
    FpSet out(p);
    auto bs = b.elements();
    // O(|A||B|) marking loop; stop once the result saturates F_p.
    a.for_each([&](u64 x) {
        if (out.is_full()) return;
        for (u64 y : bs) {
            out.add(add_mod(x, y, p));
            if (out.is_full()) return;
        }
    });
    return out;
}

FpSet difference_set(const FpSet& a, const FpSet& b) {
    u64 p = a.modulus();
    FpSet out(p);
    auto bs = b.elements();
    a.for_each([&](u64 x) {
        if (out.is_full()) return;
        for (u64 y : bs) out.add(sub_mod(x, y, p));
    });
    return out;
}

FpSet product_set(const FpSet& a, const FpSet& b) {
    u64 p = a.modulus();
    FpSet out(p);
    auto bs = b.elements();
    a.for_each([&](u64 x) {
        if (x == 0) return;
        for (u64 y : bs)
            if (y != 0) out.add(mul_mod(x, y, p));
    });
    return out;
}

FpSet ratio_set(const FpSet& a, const FpSet& b, bool drop_zero_denominator) {
    u64 p = a.modulus();
    if (b.contains(0) && !drop_zero_denominator)
        fail(Err::ZeroDenominator, "ratio_set: 0 in denominator set");
    FpSet out(p);
    std::vector<u64> inv;
    b.for_each([&](u64 y) {
        if (y != 0) inv.push_back(inverse_mod(y, p));
    });
    a.for_each([&](u64 x) {
        if (x == 0) {
            if (!inv.empty()) out.add(0);
            return;
        }
        for (u64 yi : inv) out.add(mul_mod(x, yi, p));
    });
    return out;
}

bool is_direct_sum(const FpSet& a, const FpSet& b) {
    u128 product = u128(a.size()) * b.size();
    if (product > a.modulus()) return false; // cannot fit without collisions
    return u128(sumset(a, b).size()) == product;
}

RunList runs(const FpSet& a) {
    u64 p = a.modulus();
    RunList out;
    if (a.empty()) return out;
    if (a.is_full()) {
        out.runs.push_back({0, p});
        return out;
    }
    u64 cut = 0;
    while (a.contains(cut)) ++cut; // exists: set is not full
    u64 run_start = 0, run_len = 0;
    for (u64 i = 1; i <= p; ++i) {
        u64 x = cut + i >= p ? cut + i - p : cut + i;
        if (i < p && a.contains(x)) {
            if (run_len == 0) run_start = x;
            ++run_len;
        } else if (run_len > 0) {
            out.runs.push_back({run_start, run_len});
            run_len = 0;
        }
    }
    return out;
}

FpSet interval_set(u64 p, u64 start, u64 length) {
    if (length > p) fail(Err::BadWindow, "interval_set: length exceeds modulus");
    FpSet out(p);
    u64 x = start % p;
    for (u64 i = 0; i < length; ++i) {
        out.add(x);
        x = x + 1 == p ? 0 : x + 1;
    }
    return out;
}

std::string format_set(const FpSet& a) {
    std::ostringstream os;
    os << "p=" << a.modulus() << "; {";
    bool first = true;
    a.for_each([&](u64 x) {
        if (!first) os << ",";
        os << x;
        first = false;
    });
    os << "}";
    return os.str();
}

namespace {

void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

u64 parse_u64(const std::string& s, size_t& i) {
    skip_ws(s, i);
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
        fail(Err::ConfigError, "set literal: expected integer at position " + std::to_string(i));
    u64 v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + (s[i] - '0');
        ++i;
    }
    return v;
}

void expect(const std::string& s, size_t& i, char c) {
    skip_ws(s, i);
    if (i >= s.size() || s[i] != c)
        fail(Err::ConfigError, std::string("set literal: expected '") + c + "'");
    ++i;
}

} // namespace

FpSet parse_set(const std::string& line) {
    size_t i = 0;
    skip_ws(line, i);
    expect(line, i, 'p');
    expect(line, i, '=');
    u64 p = parse_u64(line, i);
    expect(line, i, ';');
    expect(line, i, '{');
    FpSet out(p);
    skip_ws(line, i);
    if (i < line.size() && line[i] != '}') {
        while (true) {
            u64 x = parse_u64(line, i);
            if (x >= p) fail(Err::ConfigError, "set literal: element not below modulus");
            out.add(x);
            skip_ws(line, i);
            if (i < line.size() && line[i] == ',') {
                ++i;
                continue;
            }
            break;
        }
    }
    expect(line, i, '}');
    return out;
}

} // namespace rlab
