#include "lscat/element_io.hpp"

#include <cctype>
#include <sstream>

#include "lscat/errors.hpp"

namespace lscat {

namespace {

class Parser {
public:
    Parser(std::string_view text, const AlgebraPtr& algebra) : text_(text), algebra_(algebra) {}

    Element parse() {
        Element result(algebra_);
        skip_space();
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            advance();
        }
        result += parse_term(negative);
        for (;;) {
            skip_space();
            if (at_end()) break;
            const char c = peek();
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            advance();
            result += parse_term(c == '-');
        }
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, 0, pos_ + 1); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    void advance() { ++pos_; }

    void skip_space() {
        while (!at_end()) {
            const char c = peek();
            if (c == '#') {
                while (!at_end() && peek() != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    bool next_is_digit() {
        skip_space();
        return std::isdigit(static_cast<unsigned char>(peek())) != 0;
    }

    bool next_is_letter() {
        skip_space();
        return std::isalpha(static_cast<unsigned char>(peek())) != 0;
    }

    mpz_class parse_uint() {
        skip_space();
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
        if (start == pos_) fail("expected an unsigned integer");
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    Rational parse_coeff() {
        mpz_class num = parse_uint();
        skip_space();
        if (peek() != '/') return Rational(num);
        advance();
        const std::size_t denom_pos = pos_;
        mpz_class den = parse_uint();
        if (den == 0) {
            pos_ = denom_pos;
            skip_space();
            fail("zero denominator");
        }
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    Element parse_factor() {
        skip_space();
        const std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) advance();
        const std::string name(text_.substr(start, pos_ - start));
        auto idx = algebra_->find(name);
        if (!idx) {
            pos_ = start;
            fail("unknown generator '" + name + "'");
        }
        int exponent = 1;
        skip_space();
        if (peek() == '^') {
            advance();
            const mpz_class e = parse_uint();
            if (!e.fits_sint_p()) fail("exponent too large");
            exponent = static_cast<int>(e.get_si());
        }
        if (algebra_->generator(*idx).is_odd() && exponent > 1) {
            pos_ = start;
            fail("odd generator '" + name + "' squared");
        }
        return Element(algebra_, Monomial::power(*algebra_, *idx, exponent));
    }

    Element parse_term(bool negative) {
        Rational coeff = 1;
        Element term = Element::scalar(algebra_, 1);
        bool need_factor = true;
        if (next_is_digit()) {
            coeff = parse_coeff();
            skip_space();
            if (peek() == '*') {
                advance();
            } else if (!next_is_letter()) {
                need_factor = false;
            }
        }
        if (need_factor) {
            if (!next_is_letter()) fail("expected a generator name");
            term = parse_factor();
            for (;;) {
                skip_space();
                if (peek() != '*') break;
                advance();
                if (!next_is_letter()) fail("expected a generator name");
                Element f = parse_factor();
                // Duplicate odd factors spread over the term ("y5*y5").
                for (const auto& [m, c] : f.terms())
                    for (const auto& [tm, tc] : term.terms())
                        for (std::size_t i = 0; i < m.exponents().size(); ++i)
                            if (m.exponent(i) && tm.exponent(i) && algebra_->generator(i).is_odd())
                                fail("odd generator '" + algebra_->generator(i).name + "' squared");
                term = term * f;
            }
        }
        if (negative) coeff = -coeff;
        return term * coeff;
    }

    std::string_view text_;
    const AlgebraPtr& algebra_;
    std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(std::string_view text, const AlgebraPtr& algebra) { return Parser(text, algebra).parse(); }

std::string format_monomial(const Algebra& algebra, const Monomial& m) {
    if (m.is_unit()) return "1";
    std::string out;
    for (std::size_t i = 0; i < m.exponents().size(); ++i) {
        const int e = m.exponent(i);
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += algebra.generator(i).name;
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out;
}

std::string format_element(const Element& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        const bool negative = sgn(c) < 0;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        const Rational magnitude = abs(c);
        if (m.is_unit()) {
            os << magnitude.get_str();
        } else {
            if (magnitude != 1) os << magnitude.get_str() << '*';
            os << format_monomial(*e.algebra(), m);
        }
    }
    return os.str();
}

}  // namespace lscat
