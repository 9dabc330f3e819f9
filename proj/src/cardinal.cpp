#include "domtorso/cardinal.hpp"

#include "domtorso/error.hpp"

#include <charconv>
#include <limits>

namespace domtorso {

Cardinal operator+(const Cardinal& a, const Cardinal& b)
{
    if (a.is_finite() && b.is_finite()) {
        if (a.value() > std::numeric_limits<std::uint64_t>::max() - b.value())
            throw Error("finite cardinal overflow");
        return Cardinal::finite(a.value() + b.value());
    }
    return max(a, b);
}

Cardinal cardinal_arith(const Cardinal& a, const Cardinal& b, CardinalOp op)
{
    switch (op) {
    case CardinalOp::Sum:
        return a + b;
    case CardinalOp::Max:
        return max(a, b);
    case CardinalOp::Compare:
        if (a < b)
            return Cardinal::finite(0);
        return a == b ? Cardinal::finite(1) : Cardinal::finite(2);
    }
    return a;
}

std::string to_string(const Cardinal& c)
{
    switch (c.tag()) {
    case Cardinal::Tag::Finite:
        return std::to_string(c.value());
    case Cardinal::Tag::Aleph0:
        return "aleph0";
    case Cardinal::Tag::Aleph1:
        return "aleph1";
    }
    return "?";
}

Cardinal parse_cardinal(std::string_view text)
{
    if (text == "aleph0")
        return Cardinal::aleph0();
    if (text == "aleph1")
        return Cardinal::aleph1();
    std::uint64_t n = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw Error("bad cardinal '" + std::string(text) + "'");
    return Cardinal::finite(n);
}

} // namespace domtorso
