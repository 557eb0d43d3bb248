#include "monocycle/rational.hpp"

#include <charconv>

#include "monocycle/errors.hpp"

namespace monocycle {

namespace {

std::int64_t parse_i64(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw BadParams("cannot parse rational '" + std::string(whole) + "'");
    return v;
}

} // namespace

Rational parse_rational(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto den = parse_i64(text.substr(slash + 1), text);
        if (den == 0) throw BadParams("zero denominator in '" + std::string(text) + "'");
        return {parse_i64(text.substr(0, slash), text), den};
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        const bool negative = !text.empty() && text.front() == '-';
        std::string_view int_part = text.substr(negative ? 1 : 0, dot - (negative ? 1 : 0));
        std::string_view frac = text.substr(dot + 1);
        if (frac.size() > 15) throw BadParams("too many decimal digits in '" + std::string(text) + "'");
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        const std::int64_t ip = int_part.empty() ? 0 : parse_i64(int_part, text);
        const std::int64_t fp = frac.empty() ? 0 : parse_i64(frac, text);
        Rational r(ip * scale + fp, scale);
        return negative ? -r : r;
    }
    return {parse_i64(text, text), 1};
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::int64_t floor(const Rational& r) {
    const auto q = r.numerator() / r.denominator();
    return (r.numerator() % r.denominator() != 0 && r.numerator() < 0) ? q - 1 : q;
}

std::int64_t ceil(const Rational& r) {
    const auto q = r.numerator() / r.denominator();
    return (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ? q + 1 : q;
}

} // namespace monocycle
