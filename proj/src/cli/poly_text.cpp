#include "edcert/cli/poly_text.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace edcert::cli {

namespace {

constexpr std::size_t max_exponent = 4096;

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    std::map<std::size_t, Rational> parse() {
        std::map<std::size_t, Rational> terms;
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = take() == '-' ? -1 : 1;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            auto [coeff, exponent] = term();
            terms[exponent] += sign < 0 ? -coeff : coeff;
            first = false;
            skip_ws();
        }
        return terms;
    }

private:
    std::pair<Rational, std::size_t> term() {
        Rational coeff = 1;
        bool have_coeff = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = number();
            have_coeff = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                take();
                skip_ws();
                if (at_end() || peek() != 'x') fail("expected 'x' after '*'");
            }
        }
        if (at_end() || peek() != 'x') {
            if (!have_coeff) fail("expected a coefficient or 'x'");
            return {coeff, 0};
        }
        take();
        skip_ws();
        std::size_t exponent = 1;
        if (!at_end() && peek() == '^') {
            take();
            skip_ws();
            const std::size_t at = pos_;
            const BigInt e = digits();
            if (e > static_cast<unsigned long>(max_exponent)) throw parse_error("exponent too large", at);
            exponent = e.get_ui();
        }
        return {coeff, exponent};
    }

    Rational number() {
        const BigInt num = digits();
        skip_ws();
        if (at_end() || peek() != '/') return Rational(num);
        take();
        skip_ws();
        const std::size_t at = pos_;
        const BigInt den = digits();
        if (den == 0) throw parse_error("zero denominator", at);
        return Rational(num, den);
    }

    BigInt digits() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char take() { return text_[pos_++]; }

    [[noreturn]] void fail(const std::string& what) const {
        std::string msg = what;
        if (!at_end()) msg += std::string(", found '") + text_[pos_] + "'";
        throw parse_error(msg, pos_);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto at = text.find(sep, start);
        out.push_back(text.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
        if (at == std::string_view::npos) return out;
        start = at + 1;
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

FormalPoly parse_poly(std::string_view text, std::optional<std::size_t> formal_degree) {
    const auto terms = PolyParser(text).parse();
    std::size_t actual = 0;
    for (const auto& [e, c] : terms) {
        if (!c.is_zero()) actual = std::max(actual, e);
    }
    if (formal_degree && *formal_degree < actual)
        throw std::invalid_argument("formal degree " + std::to_string(*formal_degree) +
                                    " is below the actual degree " + std::to_string(actual));
    std::vector<Rational> coeffs(formal_degree.value_or(actual) + 1);
    for (const auto& [e, c] : terms) {
        if (!c.is_zero()) coeffs[e] = c;
    }
    return FormalPoly(std::move(coeffs));
}

std::string format_poly(const FormalPoly& poly) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = poly.formal_degree() + 1; i-- > 0;) {
        const Rational& c = poly[i];
        if (c.is_zero()) continue;
        const Rational mag = c.abs();
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        if (i == 0 || mag != 1) os << mag.str();
        if (i >= 1) os << 'x';
        if (i >= 2) os << '^' << i;
        first = false;
    }
    if (first) os << '0';
    return os.str();
}

Mat2 parse_matrix(std::string_view text) {
    const auto rows = split(text, ';');
    if (rows.size() != 2) throw std::invalid_argument("matrix must look like \"a,b;c,d\"");
    std::vector<Rational> entries;
    for (auto row : rows) {
        const auto cells = split(row, ',');
        if (cells.size() != 2) throw std::invalid_argument("matrix must look like \"a,b;c,d\"");
        for (auto cell : cells) entries.push_back(Rational::parse(trim(cell)));
    }
    return Mat2(entries[0], entries[1], entries[2], entries[3]);
}

std::vector<BigInt> parse_int_list(std::string_view text) {
    std::vector<BigInt> out;
    for (auto item : split(text, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_bigint(item));
    }
    return out;
}

} // namespace edcert::cli
