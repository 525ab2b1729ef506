#include "mme/instance_io.hpp"

#include <sstream>
#include <stdexcept>

#include "mme/errors.hpp"

namespace mme {

namespace {

struct Token {
    std::string text;
    std::size_t line;
    std::size_t col;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t line = 1, col = 1;
    std::string current;
    std::size_t tok_line = 0, tok_col = 0;
    bool in_comment = false;
    auto flush = [&] {
        if (!current.empty()) {
            tokens.push_back({current, tok_line, tok_col});
            current.clear();
        }
    };
    for (char c : text) {
        if (c == '\n') {
            flush();
            in_comment = false;
            ++line;
            col = 1;
            continue;
        }
        if (in_comment) {
            ++col;
            continue;
        }
        if (c == '#') {
            flush();
            in_comment = true;
            ++col;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            flush();
        } else {
            if (current.empty()) {
                tok_line = line;
                tok_col = col;
            }
            current += c;
        }
        ++col;
    }
    flush();
    return tokens;
}

class Cursor {
public:
    explicit Cursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    bool done() const { return pos_ >= tokens_.size(); }
    const Token& peek() const {
        if (done()) throw ParseError("unexpected end of input", last_line(), 1);
        return tokens_[pos_];
    }
    Token next() {
        Token t = peek();
        ++pos_;
        return t;
    }
    void expect_keyword(std::string_view kw) {
        Token t = next();
        if (t.text != kw)
            throw ParseError("expected '" + std::string(kw) + "', got '" +
                                 t.text + "'",
                             t.line, t.col);
    }
    std::size_t last_line() const {
        return tokens_.empty() ? 1 : tokens_.back().line;
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

std::size_t parse_size(const Token& t, std::string_view what) {
    try {
        BigInt v = BigInt::from_string(t.text);
        if (v.sign() < 0 || !v.fits_ulong()) throw std::invalid_argument("");
        return static_cast<std::size_t>(v.to_ulong());
    } catch (const std::invalid_argument&) {
        throw ParseError("bad " + std::string(what) + " value '" + t.text +
                             "'",
                         t.line, t.col);
    }
}

InstanceMode parse_mode(const Token& t) {
    if (t.text == "int") return InstanceMode::Int;
    if (t.text == "approx") return InstanceMode::Approx;
    if (t.text == "approx-complex") return InstanceMode::ApproxComplex;
    if (t.text == "rat") return InstanceMode::Rat;
    throw ParseError("unknown mode '" + t.text +
                         "' (want int, approx, approx-complex or rat)",
                     t.line, t.col);
}

BigInt parse_int_value(const Token& t) {
    try {
        return BigInt::from_string(t.text);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), t.line, t.col);
    }
}

// "a/2^k" dyadic, "p/q" rational, or plain integer
Rational parse_real_value(const Token& t, std::string_view text) {
    try {
        if (text.find("/2^") != std::string_view::npos)
            return Dyadic::from_string(text).value();
        return Rational::from_string(text);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), t.line, t.col);
    }
}

GaussianRational parse_complex_value(const Token& t) {
    auto comma = t.text.find(',');
    if (comma == std::string::npos ||
        t.text.find(',', comma + 1) != std::string::npos)
        throw ParseError("bad complex value '" + t.text +
                             "' (want re,im with no spaces)",
                         t.line, t.col);
    std::string_view text(t.text);
    return {parse_real_value(t, text.substr(0, comma)),
            parse_real_value(t, text.substr(comma + 1))};
}

}  // namespace

std::string_view to_string(InstanceMode mode) {
    switch (mode) {
        case InstanceMode::Int: return "int";
        case InstanceMode::Approx: return "approx";
        case InstanceMode::ApproxComplex: return "approx-complex";
        case InstanceMode::Rat: return "rat";
    }
    throw std::logic_error("bad mode");
}

InstanceFile parse_instance(std::string_view text) {
    Cursor cur(tokenize(text));
    InstanceFile inst;

    cur.expect_keyword("mme");
    inst.mode = parse_mode(cur.next());
    cur.expect_keyword("m");
    inst.m = parse_size(cur.next(), "m");
    cur.expect_keyword("d");
    inst.d = parse_size(cur.next(), "d");
    cur.expect_keyword("N");
    inst.n = parse_size(cur.next(), "N");

    while (!cur.done() && (cur.peek().text == "s" || cur.peek().text == "t")) {
        Token key = cur.next();
        Token val = cur.next();
        auto bits =
            static_cast<unsigned long>(parse_size(val, key.text));
        if (key.text == "s") {
            if (inst.s)
                throw ParseError("duplicate 's'", key.line, key.col);
            inst.s = bits;
        } else {
            if (inst.t)
                throw ParseError("duplicate 't'", key.line, key.col);
            inst.t = bits;
        }
    }
    const bool needs_s =
        inst.mode == InstanceMode::Int || inst.mode == InstanceMode::Rat;
    if (needs_s && !inst.s)
        throw ParseError("mode '" + std::string(to_string(inst.mode)) +
                             "' requires an 's' header",
                         cur.last_line(), 1);
    if (!needs_s && !inst.t)
        throw ParseError("mode '" + std::string(to_string(inst.mode)) +
                             "' requires a 't' header",
                         cur.last_line(), 1);

    if (inst.m == 0 || inst.d == 0)
        throw ParseError("m and d must be positive", cur.last_line(), 1);
    const std::size_t expected =
        DensePolynomial<int>::checked_size(inst.m, inst.d);

    cur.expect_keyword("coefficients");
    std::size_t got = 0;
    while (!cur.done() && cur.peek().text != "points") {
        Token t = cur.next();
        if (got == expected)
            throw ParseError("coefficient section has more than d^m = " +
                                 std::to_string(expected) + " values",
                             t.line, t.col);
        switch (inst.mode) {
            case InstanceMode::Int:
                inst.int_coeffs.push_back(parse_int_value(t));
                break;
            case InstanceMode::Rat:
            case InstanceMode::Approx:
                inst.rat_coeffs.push_back(parse_real_value(t, t.text));
                break;
            case InstanceMode::ApproxComplex:
                inst.complex_coeffs.push_back(parse_complex_value(t));
                break;
        }
        ++got;
    }
    if (got != expected)
        throw ParseError("coefficient section has " + std::to_string(got) +
                             " values; expected d^m = " +
                             std::to_string(expected),
                         cur.last_line(), 1);

    cur.expect_keyword("points");
    for (std::size_t i = 0; i < inst.n; ++i) {
        std::size_t point_line = 0;
        std::vector<BigInt> ints;
        std::vector<Rational> rats;
        std::vector<GaussianRational> cplx;
        for (std::size_t k = 0; k < inst.m; ++k) {
            Token t = cur.next();
            if (k == 0)
                point_line = t.line;
            else if (t.line != point_line)
                throw ParseError("point " + std::to_string(i + 1) + " needs " +
                                     std::to_string(inst.m) +
                                     " values on one line",
                                 t.line, t.col);
            switch (inst.mode) {
                case InstanceMode::Int:
                    ints.push_back(parse_int_value(t));
                    break;
                case InstanceMode::Rat:
                case InstanceMode::Approx:
                    rats.push_back(parse_real_value(t, t.text));
                    break;
                case InstanceMode::ApproxComplex:
                    cplx.push_back(parse_complex_value(t));
                    break;
            }
        }
        switch (inst.mode) {
            case InstanceMode::Int:
                inst.int_points.push_back(std::move(ints));
                break;
            case InstanceMode::Rat:
            case InstanceMode::Approx:
                inst.rat_points.push_back(std::move(rats));
                break;
            case InstanceMode::ApproxComplex:
                inst.complex_points.push_back(std::move(cplx));
                break;
        }
    }
    if (!cur.done()) {
        Token t = cur.next();
        throw ParseError("trailing input after " + std::to_string(inst.n) +
                             " points",
                         t.line, t.col);
    }
    return inst;
}

namespace {

std::string real_to_string(const Rational& x) { return x.to_string(); }

std::string complex_to_string(const GaussianRational& x) {
    return x.re.to_string() + "," + x.im.to_string();
}

template <class T, class Fmt>
void write_sections(std::ostringstream& out, const std::vector<T>& coeffs,
                    const std::vector<std::vector<T>>& points, std::size_t d,
                    Fmt fmt) {
    out << "coefficients\n";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        out << fmt(coeffs[i]);
        out << (((i + 1) % d == 0) ? '\n' : ' ');
    }
    out << "points\n";
    for (const auto& point : points) {
        for (std::size_t k = 0; k < point.size(); ++k) {
            if (k > 0) out << ' ';
            out << fmt(point[k]);
        }
        out << '\n';
    }
}

}  // namespace

std::string serialize_instance(const InstanceFile& inst) {
    std::ostringstream out;
    out << "mme " << to_string(inst.mode) << "\n";
    out << "m " << inst.m << "\n";
    out << "d " << inst.d << "\n";
    out << "N " << inst.n << "\n";
    if (inst.s) out << "s " << *inst.s << "\n";
    if (inst.t) out << "t " << *inst.t << "\n";
    switch (inst.mode) {
        case InstanceMode::Int:
            write_sections(out, inst.int_coeffs, inst.int_points, inst.d,
                           [](const BigInt& v) { return v.to_string(); });
            break;
        case InstanceMode::Rat:
        case InstanceMode::Approx:
            write_sections(out, inst.rat_coeffs, inst.rat_points, inst.d,
                           real_to_string);
            break;
        case InstanceMode::ApproxComplex:
            write_sections(out, inst.complex_coeffs, inst.complex_points,
                           inst.d, complex_to_string);
            break;
    }
    return out.str();
}

}  // namespace mme
