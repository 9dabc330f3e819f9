#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace domtorso {

/// Cardinal numbers as they occur in presentations: finite counts, the
/// countable infinity and the first uncountable one.
class Cardinal {
public:
    enum class Tag : std::uint8_t { Finite, Aleph0, Aleph1 };

    constexpr Cardinal() = default;

    static constexpr Cardinal finite(std::uint64_t n) { return Cardinal(Tag::Finite, n); }
    static constexpr Cardinal aleph0() { return Cardinal(Tag::Aleph0, 0); }
    static constexpr Cardinal aleph1() { return Cardinal(Tag::Aleph1, 0); }

    constexpr Tag tag() const { return tag_; }
    constexpr bool is_finite() const { return tag_ == Tag::Finite; }
    constexpr bool is_infinite() const { return tag_ != Tag::Finite; }
    /// Only meaningful for finite cardinals.
    constexpr std::uint64_t value() const { return n_; }

    friend constexpr bool operator==(const Cardinal&, const Cardinal&) = default;
    friend constexpr std::strong_ordering operator<=>(const Cardinal& a, const Cardinal& b)
    {
        if (auto c = a.tag_ <=> b.tag_; c != 0)
            return c;
        return a.n_ <=> b.n_;
    }

    friend Cardinal operator+(const Cardinal& a, const Cardinal& b);
    Cardinal& operator+=(const Cardinal& other) { return *this = *this + other; }

private:
    constexpr Cardinal(Tag t, std::uint64_t n)
        : tag_(t)
        , n_(n)
    {
    }

    Tag tag_ = Tag::Finite;
    std::uint64_t n_ = 0;
};

inline constexpr Cardinal max(const Cardinal& a, const Cardinal& b) { return a < b ? b : a; }

enum class CardinalOp { Sum, Max, Compare };

/// `cmp` yields Finite(0), Finite(1), Finite(2) for less, equal, greater.
Cardinal cardinal_arith(const Cardinal& a, const Cardinal& b, CardinalOp op);

/// "7", "aleph0", "aleph1".
std::string to_string(const Cardinal& c);

/// Inverse of to_string; throws domtorso::Error on bad input.
Cardinal parse_cardinal(std::string_view text);

} // namespace domtorso
