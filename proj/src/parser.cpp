#include <shortpoly/parser.hpp>

#include <cctype>
#include <fstream>
#include <ios>
#include <limits>
#include <sstream>
#include <vector>

namespace shortpoly {

ParseError::ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line)
                         + (column > 0 ? ", column " + std::to_string(column) : std::string())
                         + ": " + message),
      kind_(kind), line_(line), column_(column)
{
}

namespace {

class PolynomialParser {
public:
    PolynomialParser(const std::string& text, const Shape& shape, std::size_t line)
        : text_(text), shape_(shape), line_(line)
    {
    }

    QPolynomial parse()
    {
        QPolynomial poly(shape_);
        skip_ws();
        if (at_end()) {
            fail(ParseError::Kind::syntax, "empty polynomial");
        }
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = get() == '-';
        }
        parse_term(poly, negative);
        while (true) {
            skip_ws();
            if (at_end()) {
                break;
            }
            char c = peek();
            if (c != '+' && c != '-') {
                fail(ParseError::Kind::syntax, std::string("expected '+' or '-', found '") + c + "'");
            }
            get();
            parse_term(poly, c == '-');
        }
        if (poly.is_zero()) {
            error_pos_ = 0;
            fail(ParseError::Kind::zero_polynomial, "zero polynomial is not a valid generator");
        }
        return poly;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char get() { return text_[pos_++]; }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
        error_pos_ = pos_ + 1;
    }

    [[noreturn]] void fail(ParseError::Kind kind, const std::string& msg) const
    {
        throw ParseError(kind, line_, error_pos_, msg);
    }

    std::string digits()
    {
        skip_ws();
        std::string out;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            out += get();
        }
        if (out.empty()) {
            fail(ParseError::Kind::syntax, "expected a number");
        }
        return out;
    }

    std::uint64_t bounded(const std::string& ds, ParseError::Kind kind, const char* what)
    {
        if (ds.size() > 9 || std::stoull(ds) > max_degree) {
            fail(kind, std::string(what) + " " + ds + " exceeds " + std::to_string(max_degree));
        }
        return std::stoull(ds);
    }

    void parse_term(QPolynomial& poly, bool negative)
    {
        skip_ws();
        Rational coeff = 1;
        bool have_coeff = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string num = digits();
            std::string den = "1";
            skip_ws();
            if (!at_end() && peek() == '/') {
                get();
                den = digits();
            }
            mpz_class d(den, 10);
            if (d == 0) {
                fail(ParseError::Kind::syntax, "zero denominator");
            }
            coeff = Rational(mpz_class(num, 10), d);
            coeff.canonicalize();
            have_coeff = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                get();
                skip_ws();
                if (at_end() || peek() != 'x') {
                    fail(ParseError::Kind::syntax, "expected a variable after '*'");
                }
            }
        }
        Exponent e(shape_.variables());
        bool have_var = false;
        while (true) {
            skip_ws();
            if (at_end() || peek() != 'x') {
                break;
            }
            parse_power(e);
            have_var = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                get();
                skip_ws();
                if (at_end() || peek() != 'x') {
                    fail(ParseError::Kind::syntax, "expected a variable after '*'");
                }
                continue;
            }
            break;
        }
        if (!have_coeff && !have_var) {
            fail(ParseError::Kind::syntax, at_end() ? "unexpected end of input" : "expected a term");
        }
        poly.add_term(std::move(e), negative ? Rational(-coeff) : coeff);
    }

    void parse_power(Exponent& e)
    {
        std::size_t var_pos = pos_ + 1;
        get(); // 'x'
        std::size_t index = 0;
        skip_ws();
        if (!at_end() && peek() == '[') {
            get();
            auto r = digits();
            skip_ws();
            if (at_end() || peek() != ',') {
                fail(ParseError::Kind::syntax, "expected ',' in grid variable");
            }
            get();
            auto c = digits();
            skip_ws();
            if (at_end() || peek() != ']') {
                fail(ParseError::Kind::syntax, "expected ']' in grid variable");
            }
            get();
            if (!shape_.is_grid()) {
                throw ParseError(ParseError::Kind::unknown_variable, line_, var_pos,
                                 "grid variable x[" + r + "," + c + "] in a flat ring");
            }
            auto ri = r.size() > 9 ? 0 : std::stoull(r);
            auto ci = c.size() > 9 ? 0 : std::stoull(c);
            if (ri < 1 || ri > shape_.rows() || ci < 1 || ci > shape_.cols()) {
                throw ParseError(ParseError::Kind::unknown_variable, line_, var_pos,
                                 "unknown variable x[" + r + "," + c + "]");
            }
            index = (ri - 1) * shape_.cols() + (ci - 1);
        } else {
            auto k = digits();
            if (shape_.is_grid()) {
                throw ParseError(ParseError::Kind::unknown_variable, line_, var_pos,
                                 "flat variable x" + k + " in a grid ring");
            }
            auto ki = k.size() > 9 ? 0 : std::stoull(k);
            if (ki < 1 || ki > shape_.variables()) {
                throw ParseError(ParseError::Kind::unknown_variable, line_, var_pos, "unknown variable x" + k);
            }
            index = ki - 1;
        }
        std::uint64_t power = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            get();
            power = bounded(digits(), ParseError::Kind::exponent_overflow, "exponent");
            if (power == 0) {
                fail(ParseError::Kind::syntax, "exponent must be positive");
            }
        }
        std::uint64_t total = e[index] + power;
        if (e.degree() + power > max_degree) {
            fail(ParseError::Kind::exponent_overflow, "term degree exceeds " + std::to_string(max_degree));
        }
        e.set(index, static_cast<Exponent::entry_type>(total));
    }

    const std::string& text_;
    const Shape& shape_;
    std::size_t line_;
    std::size_t pos_ = 0;
    std::size_t error_pos_ = 1;
};

std::vector<std::string> split_words(const std::string& line)
{
    std::istringstream in(line);
    std::vector<std::string> words;
    std::string w;
    while (in >> w) {
        words.push_back(w);
    }
    return words;
}

std::size_t positive_size(const std::string& w, std::size_t line)
{
    if (w.empty() || w.size() > 6 || w.find_first_not_of("0123456789") != std::string::npos || std::stoul(w) == 0) {
        throw ParseError(ParseError::Kind::header, line, 0, "bad dimension '" + w + "' in shape header");
    }
    return std::stoul(w);
}

bool is_blank_or_comment(const std::string& line)
{
    auto first = line.find_first_not_of(" \t\r");
    return first == std::string::npos || line[first] == '#';
}

} // namespace

QPolynomial parse_polynomial(const std::string& text, const Shape& shape, std::size_t line)
{
    return PolynomialParser(text, shape, line).parse();
}

Shape parse_shape_header(const std::string& line, std::size_t line_number)
{
    auto words = split_words(line);
    if (words.size() == 3 && words[0] == "shape" && words[1] == "flat") {
        return Shape::flat(positive_size(words[2], line_number));
    }
    if (words.size() == 4 && words[0] == "shape" && words[1] == "grid") {
        return Shape::grid(positive_size(words[2], line_number), positive_size(words[3], line_number));
    }
    throw ParseError(ParseError::Kind::header, line_number, 0,
                     "expected 'shape flat <n>' or 'shape grid <m> <n>'");
}

QGenerators parse_ideal(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    std::size_t number = 0;
    std::optional<Shape> shape;
    std::vector<QPolynomial> gens;
    while (std::getline(in, line)) {
        ++number;
        if (is_blank_or_comment(line)) {
            continue;
        }
        if (!shape) {
            shape = parse_shape_header(line, number);
            continue;
        }
        auto poly = parse_polynomial(line, *shape, number);
        if (!poly.is_homogeneous()) {
            throw ParseError(ParseError::Kind::not_homogeneous, number, 0, "generator is not homogeneous");
        }
        gens.push_back(std::move(poly));
    }
    if (!shape) {
        throw ParseError(ParseError::Kind::header, number == 0 ? 1 : number, 0, "missing shape header");
    }
    return QGenerators(*shape, std::move(gens));
}

QGenerators read_ideal_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::ios_base::failure("cannot open ideal file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_ideal(buf.str());
}

std::string format_ideal(const QGenerators& gens)
{
    std::string out = gens.shape().header() + "\n";
    for (const auto& g : gens.generators()) {
        out += g.to_string() + "\n";
    }
    return out;
}

} // namespace shortpoly
