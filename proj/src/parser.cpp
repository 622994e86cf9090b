#include "gbd/parser.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "gbd/errors.hpp"

namespace gbd {

namespace {

struct Tok {
    enum Kind { Int, Ident, Plus, Minus, Star, Caret, End };
    Kind kind;
    std::string text;
    int line;
    int col;
};

std::vector<Tok> lex_expr(std::string_view s, int line, int col0) {
    std::vector<Tok> toks;
    std::size_t i = 0;
    auto col = [&] { return col0 + static_cast<int>(i); };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '+' || c == '-' || c == '*' || c == '^') {
            Tok::Kind k = c == '+' ? Tok::Plus : c == '-' ? Tok::Minus : c == '*' ? Tok::Star : Tok::Caret;
            toks.push_back({k, std::string(1, c), line, col()});
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            int start = col();
            std::string digits;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                digits += s[i++];
            toks.push_back({Tok::Int, digits, line, start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            int start = col();
            std::string name;
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                name += s[i++];
            toks.push_back({Tok::Ident, name, line, start});
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col());
    }
    toks.push_back({Tok::End, "", line, col0 + static_cast<int>(s.size())});
    return toks;
}

class ExprParser {
public:
    ExprParser(std::string_view text, int line, int col0, const RingContext& ring,
               const FieldSpec& field)
        : toks_(lex_expr(text, line, col0)), ring_(ring), field_(field) {}

    Polynomial parse() {
        Polynomial p;
        bool first = true;
        for (;;) {
            int sign = 1;
            while (cur().kind == Tok::Plus || cur().kind == Tok::Minus) {
                if (cur().kind == Tok::Minus)
                    sign = -sign;
                advance();
            }
            if (cur().kind == Tok::End) {
                if (first)
                    throw ParseError("empty polynomial", cur().line, cur().col);
                throw ParseError("trailing sign without a monomial", cur().line, cur().col);
            }
            auto [c, t] = parse_monomial();
            if (sign < 0)
                c = -c;
            p.add_term(c, t);
            first = false;
            if (cur().kind == Tok::End)
                return p;
            if (cur().kind != Tok::Plus && cur().kind != Tok::Minus)
                throw ParseError("expected '+' or '-' between monomials", cur().line, cur().col);
        }
    }

private:
    const Tok& cur() const { return toks_[pos_]; }
    void advance() { ++pos_; }

    std::pair<Coeff, Term> parse_monomial() {
        Coeff c = Coeff::integer(field_, 1);
        Term t = Term::identity(ring_.size());
        bool any = false;
        if (cur().kind == Tok::Int) {
            c = Coeff::from_digits(field_, cur().text, false);
            advance();
            any = true;
        }
        for (;;) {
            if (cur().kind == Tok::Star) {
                advance();
                if (cur().kind != Tok::Ident)
                    throw ParseError("expected variable after '*'", cur().line, cur().col);
            }
            if (cur().kind != Tok::Ident)
                break;
            auto idx = ring_.index_of(cur().text);
            if (!idx)
                throw ParseError("unknown variable '" + cur().text + "'", cur().line, cur().col);
            advance();
            std::uint32_t e = 1;
            if (cur().kind == Tok::Caret) {
                advance();
                if (cur().kind != Tok::Int)
                    throw ParseError("malformed exponent", cur().line, cur().col);
                try {
                    unsigned long v = std::stoul(cur().text);
                    if (v > 0xffffffffUL)
                        throw std::out_of_range("");
                    e = static_cast<std::uint32_t>(v);
                } catch (const std::exception&) {
                    throw ParseError("exponent out of range", cur().line, cur().col);
                }
                advance();
            }
            Term factor = Term::identity(ring_.size());
            factor.set(*idx, e);
            t = t * factor;
            any = true;
        }
        if (!any)
            throw ParseError("expected a monomial", cur().line, cur().col);
        if (cur().kind == Tok::Int)
            throw ParseError("integer coefficient only allowed at the front of a monomial",
                             cur().line, cur().col);
        return {c, t};
    }

    std::vector<Tok> toks_;
    std::size_t pos_ = 0;
    const RingContext& ring_;
    const FieldSpec& field_;
};

struct Line {
    std::string text;
    int number;
    int offset; // column of text[0] in the source line, 1-based
};

std::vector<Line> significant_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string line(text.substr(start, end == std::string_view::npos ? std::string_view::npos
                                                                          : end - start));
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        while (!line.empty() && (line.back() == '\r' || std::isspace(static_cast<unsigned char>(line.back()))))
            line.pop_back();
        std::size_t first = 0;
        while (first < line.size() && std::isspace(static_cast<unsigned char>(line[first])))
            ++first;
        if (first < line.size())
            out.push_back({line.substr(first), number, static_cast<int>(first) + 1});
        if (end == std::string_view::npos)
            break;
        start = end + 1;
    }
    return out;
}

std::vector<std::string> split_words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> words;
    std::string w;
    while (in >> w)
        words.push_back(w);
    return words;
}

} // namespace

Polynomial parse_poly_expr(std::string_view text, const RingContext& ring, const FieldSpec& field) {
    return ExprParser(text, 1, 1, ring, field).parse();
}

Ordering parse_order_spec(std::string_view text, const RingContext& ring) {
    auto words = split_words(std::string(text));
    if (words.empty())
        throw InvalidArgument("empty ordering spec");
    auto kind = order_kind_from(words[0]);
    if (!kind)
        throw InvalidArgument("unknown ordering kind '" + words[0] + "'");
    if (words.size() == 1)
        return Ordering(*kind, ring.size());
    std::vector<std::uint32_t> priority;
    for (std::size_t i = 1; i < words.size(); ++i) {
        auto idx = ring.index_of(words[i]);
        if (!idx)
            throw InvalidArgument("unknown variable '" + words[i] + "' in ordering");
        priority.push_back(static_cast<std::uint32_t>(*idx));
    }
    if (priority.size() != ring.size())
        throw InvalidArgument("ordering must list every ring variable exactly once");
    return Ordering(*kind, std::move(priority));
}

SystemFile parse_system(std::string_view text) {
    std::optional<RingContext> ring;
    std::optional<FieldSpec> field;
    std::optional<Ordering> order;
    std::vector<Polynomial> polys;

    for (const auto& line : significant_lines(text)) {
        auto space = line.text.find_first_of(" \t");
        std::string keyword = line.text.substr(0, space);
        std::string rest = space == std::string::npos ? "" : line.text.substr(space + 1);

        if (keyword == "ring") {
            if (ring)
                throw ParseError("duplicate ring declaration", line.number, 1);
            auto names = split_words(rest);
            if (names.empty())
                throw ParseError("ring declaration lists no variables", line.number, 1);
            for (const auto& n : names) {
                if (std::isdigit(static_cast<unsigned char>(n[0])))
                    throw ParseError("variable name may not start with a digit: '" + n + "'",
                                     line.number, 1);
                for (char c : n)
                    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                        throw ParseError("invalid variable name '" + n + "'", line.number, 1);
            }
            try {
                ring.emplace(names);
            } catch (const InvalidArgument& e) {
                throw ParseError(e.what(), line.number, 1);
            }
        } else if (keyword == "field") {
            if (!ring)
                throw ParseError("field declared before ring", line.number, 1);
            if (field)
                throw ParseError("duplicate field declaration", line.number, 1);
            if (!polys.empty() || order)
                throw ParseError("field must be declared before order and poly lines",
                                 line.number, 1);
            auto words = split_words(rest);
            if (words.size() == 1 && words[0] == "q") {
                field = FieldSpec::rationals();
            } else if (words.size() == 2 && words[0] == "gf") {
                unsigned long p = 0;
                try {
                    p = std::stoul(words[1]);
                } catch (const std::exception&) {
                    throw ParseError("bad GF modulus '" + words[1] + "'", line.number, 1);
                }
                if (p > 0x7fffffffUL || !is_prime(static_cast<std::uint32_t>(p)))
                    throw ParseError("GF modulus must be a prime below 2^31", line.number, 1);
                field = FieldSpec::gf(static_cast<std::uint32_t>(p));
            } else {
                throw ParseError("expected 'field q' or 'field gf <prime>'", line.number, 1);
            }
        } else if (keyword == "order") {
            if (!ring)
                throw ParseError("order declared before ring", line.number, 1);
            if (order)
                throw ParseError("duplicate order declaration", line.number, 1);
            if (!polys.empty())
                throw ParseError("order must be declared before poly lines", line.number, 1);
            try {
                order = parse_order_spec(rest, *ring);
            } catch (const InvalidArgument& e) {
                throw ParseError(e.what(), line.number, 1);
            }
        } else if (keyword == "poly") {
            if (!ring)
                throw ParseError("poly before ring declaration", line.number, 1);
            if (!order)
                throw ParseError("poly before order declaration", line.number, 1);
            int col0 = line.offset + static_cast<int>(line.text.size() - rest.size());
            FieldSpec f = field.value_or(FieldSpec::rationals());
            Polynomial p = ExprParser(rest, line.number, col0, *ring, f).parse();
            if (p.is_zero())
                throw ParseError("zero polynomial not admitted as system element",
                                 line.number, col0);
            polys.push_back(std::move(p));
        } else {
            throw ParseError("unknown directive '" + keyword + "'", line.number, 1);
        }
    }

    if (!ring)
        throw ParseError("missing ring declaration", 1, 1);
    if (!order)
        throw ParseError("missing order declaration", 1, 1);
    if (polys.empty())
        throw ParseError("system has no polynomials", 1, 1);

    SystemFile sys{*ring, field.value_or(FieldSpec::rationals()), *order, std::move(polys), {}};
    sys.labels.reserve(sys.polys.size());
    for (std::size_t i = 0; i < sys.polys.size(); ++i)
        sys.labels.push_back("g" + std::to_string(i + 1));
    validate_system(sys);
    return sys;
}

std::string serialize_system(const SystemFile& sys) {
    std::string out = "ring";
    for (const auto& n : sys.ring.names())
        out += " " + n;
    out += '\n';
    if (sys.field.kind == FieldSpec::Kind::prime)
        out += "field gf " + std::to_string(sys.field.p) + "\n";
    out += "order ";
    out += order_kind_name(sys.order.kind());
    for (auto i : sys.order.priority())
        out += " " + sys.ring.name(i);
    out += '\n';
    for (const auto& p : sys.polys)
        out += "poly " + p.to_string(sys.ring, sys.order) + "\n";
    return out;
}

} // namespace gbd
