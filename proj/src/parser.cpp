#include "coxalg/parser.hpp"

#include <fstream>
#include <sstream>

namespace coxalg {

namespace {

struct Token {
    enum class Kind { Int, Z, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    std::string text;
    int col;
};

class Lexer {
public:
    Lexer(const std::string& s, int line) : s_(s), line_(line) {}
    Token next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        int col = static_cast<int>(pos_) + 1;
        if (pos_ >= s_.size()) return {Token::Kind::End, "", col};
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return {Token::Kind::Int, s_.substr(start, pos_ - start), col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string word = s_.substr(start, pos_ - start);
            if (word == "z") return {Token::Kind::Z, word, col};
            return {Token::Kind::Ident, word, col};
        }
        ++pos_;
        switch (c) {
            case '+': return {Token::Kind::Plus, "+", col};
            case '-': return {Token::Kind::Minus, "-", col};
            case '*': return {Token::Kind::Star, "*", col};
            case '/': return {Token::Kind::Slash, "/", col};
            case '^': return {Token::Kind::Caret, "^", col};
            case '(': return {Token::Kind::LParen, "(", col};
            case ')': return {Token::Kind::RParen, ")", col};
        }
        throw parse_error(std::string("unexpected character '") + c + "'", line_, col);
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
    int line_;
};

// recursive descent over Poly values (constants are 0-variable cases)
class ExprParser {
public:
    ExprParser(const std::string& text, RingPtr ring, int line)
        : lex_(text, line), ring_(std::move(ring)), line_(line) {
        advance();
    }

    Poly parse() {
        Poly p = expression();
        expect(Token::Kind::End, "end of expression");
        return p;
    }

private:
    Lexer lex_;
    Token cur_{Token::Kind::End, "", 0};
    RingPtr ring_;
    int line_;

    void advance() { cur_ = lex_.next(); }
    void expect(Token::Kind k, const std::string& what) {
        if (cur_.kind != k) throw parse_error("expected " + what, line_, cur_.col);
    }

    Poly expression() {
        Poly p = term();
        while (cur_.kind == Token::Kind::Plus || cur_.kind == Token::Kind::Minus) {
            bool minus = cur_.kind == Token::Kind::Minus;
            advance();
            Poly q = term();
            p = minus ? p - q : p + q;
        }
        return p;
    }

    Poly term() {
        Poly p = factor();
        while (cur_.kind == Token::Kind::Star || cur_.kind == Token::Kind::Slash) {
            bool divide = cur_.kind == Token::Kind::Slash;
            int col = cur_.col;
            advance();
            Poly q = factor();
            if (divide) {
                if (!q.is_constant())
                    throw parse_error("division by a non-constant", line_, col);
                if (q.is_zero()) throw parse_error("division by zero", line_, col);
                CycNum inv = q.is_zero() ? CycNum(ring_->field())
                                         : q.terms()[0].c.inverse();
                p = p * inv;
            } else {
                p = p * q;
            }
        }
        return p;
    }

    Poly factor() {
        bool negate = false;
        while (cur_.kind == Token::Kind::Plus || cur_.kind == Token::Kind::Minus) {
            if (cur_.kind == Token::Kind::Minus) negate = !negate;
            advance();
        }
        Poly base = atom();
        if (cur_.kind == Token::Kind::Caret) {
            int col = cur_.col;
            advance();
            expect(Token::Kind::Int, "an integer exponent");
            long e = std::stol(cur_.text);
            advance();
            if (e < 0) throw parse_error("negative exponent", line_, col);
            base = base.pow(e);
        }
        return negate ? -base : base;
    }

    Poly atom() {
        switch (cur_.kind) {
            case Token::Kind::Int: {
                Poly p = Poly::rational_constant(ring_, BigRat(cur_.text));
                advance();
                return p;
            }
            case Token::Kind::Z: {
                advance();
                if (cur_.kind == Token::Kind::Caret) {
                    advance();
                    expect(Token::Kind::Int, "an integer exponent");
                    long e = std::stol(cur_.text);
                    advance();
                    return Poly::constant(ring_, CycNum::root_power(ring_->field(), e));
                }
                return Poly::constant(ring_, CycNum::root_power(ring_->field(), 1));
            }
            case Token::Kind::Ident: {
                int idx = ring_->var_index(cur_.text);
                if (idx < 0)
                    throw parse_error("unknown variable '" + cur_.text + "'", line_, cur_.col);
                advance();
                return Poly::variable(ring_, static_cast<std::size_t>(idx));
            }
            case Token::Kind::LParen: {
                advance();
                Poly p = expression();
                expect(Token::Kind::RParen, "')'");
                advance();
                return p;
            }
            default:
                throw parse_error("expected a value", line_, cur_.col);
        }
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool header_line(const std::string& line, std::string* key, std::string* value) {
    auto colon = line.find(':');
    if (colon == std::string::npos) return false;
    auto trim = [](std::string s) {
        std::size_t a = s.find_first_not_of(" \t");
        std::size_t b = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    *key = trim(line.substr(0, colon));
    *value = trim(line.substr(colon + 1));
    return !key->empty();
}

}  // namespace

Poly parse_poly_expression(const std::string& text, const RingPtr& ring, int line) {
    return ExprParser(text, ring, line).parse();
}

CycNum parse_cyc_expression(const std::string& text, const CyclotomicField& field, int line) {
    RingPtr r = PolyRing::make(field, {});
    Poly p = parse_poly_expression(text, r, line);
    if (p.is_zero()) return CycNum(field);
    return p.terms()[0].c;
}

GroupFile parse_group_text(const std::string& text) {
    GroupFile gf;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<std::vector<CycNum>> rows;
    bool in_generator = false;
    const CyclotomicField* field = nullptr;
    auto flush = [&](int at_line) {
        if (!in_generator) return;
        if (static_cast<int>(rows.size()) != gf.dim)
            throw parse_error("generator block has " + std::to_string(rows.size()) +
                                  " rows, expected " + std::to_string(gf.dim),
                              at_line, 1);
        gf.generators.push_back(FieldMatrix::from_rows(*field, rows));
        rows.clear();
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = line;
        auto hash = stripped.find('#');
        if (hash != std::string::npos) stripped = stripped.substr(0, hash);
        if (stripped.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::string key, value;
        if (!in_generator && gf.dim == 0 && header_line(stripped, &key, &value)) {
            if (key == "cyclotomic_order") gf.cyclotomic_order = std::stoi(value);
            else if (key == "dim") gf.dim = std::stoi(value);
            else gf.overrides[key] = value;
            continue;
        }
        if (header_line(stripped, &key, &value) && !in_generator) {
            gf.overrides[key] = value;
            continue;
        }
        if (stripped.find("generator") != std::string::npos &&
            stripped.find(',') == std::string::npos) {
            if (gf.dim == 0) throw parse_error("dim must be declared before generators", lineno, 1);
            flush(lineno);
            in_generator = true;
            field = &CyclotomicField::get(gf.cyclotomic_order);
            continue;
        }
        if (!in_generator) throw parse_error("unexpected content", lineno, 1);
        // one matrix row: comma-separated expressions
        std::vector<CycNum> row;
        std::string entry;
        int depth = 0;
        auto push_entry = [&](int col) {
            if (entry.find_first_not_of(" \t\r") == std::string::npos)
                throw parse_error("empty matrix entry", lineno, col);
            row.push_back(parse_cyc_expression(entry, *field, lineno));
            entry.clear();
        };
        for (std::size_t i = 0; i < stripped.size(); ++i) {
            char ch = stripped[i];
            if (ch == '(') ++depth;
            if (ch == ')') --depth;
            if (ch == ',' && depth == 0) {
                push_entry(static_cast<int>(i) + 1);
            } else {
                entry += ch;
            }
        }
        push_entry(static_cast<int>(stripped.size()));
        if (static_cast<int>(row.size()) != gf.dim)
            throw parse_error("row has " + std::to_string(row.size()) + " entries, expected " +
                                  std::to_string(gf.dim),
                              lineno, 1);
        rows.push_back(std::move(row));
        if (static_cast<int>(rows.size()) == gf.dim) {
            gf.generators.push_back(FieldMatrix::from_rows(*field, rows));
            rows.clear();
            in_generator = false;
        }
    }
    if (in_generator) flush(lineno);
    if (gf.generators.empty()) throw parse_error("no generators found", lineno, 1);
    return gf;
}

GroupFile parse_group_file(const std::string& path) { return parse_group_text(read_file(path)); }

std::string unparse_group_file(const GroupFile& gf) {
    std::ostringstream os;
    os << "cyclotomic_order: " << gf.cyclotomic_order << "\n";
    os << "dim: " << gf.dim << "\n";
    for (const auto& [k, v] : gf.overrides) os << k << ": " << v << "\n";
    for (const auto& g : gf.generators) {
        os << "generator\n";
        for (std::size_t i = 0; i < g.rows(); ++i) {
            for (std::size_t j = 0; j < g.cols(); ++j) {
                if (j) os << ", ";
                std::string s = g.at(i, j).str();
                // parenthesize sums so rows stay comma-separable
                if (s.find(' ') != std::string::npos) os << "(" << s << ")";
                else os << s;
            }
            os << "\n";
        }
    }
    return os.str();
}

PolyFile parse_poly_text(const std::string& text) {
    PolyFile pf;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::string key, value;
        if (!pf.ring && header_line(line, &key, &value)) {
            if (key == "cyclotomic_order") {
                pf.cyclotomic_order = std::stoi(value);
                continue;
            }
            if (key == "vars") {
                std::istringstream vs(value);
                std::string v;
                while (std::getline(vs, v, ',')) {
                    std::size_t a = v.find_first_not_of(" \t");
                    std::size_t b = v.find_last_not_of(" \t");
                    if (a != std::string::npos) pf.vars.push_back(v.substr(a, b - a + 1));
                }
                pf.ring = PolyRing::make(CyclotomicField::get(pf.cyclotomic_order), pf.vars);
                continue;
            }
        }
        if (!pf.ring) throw parse_error("vars header required before polynomials", lineno, 1);
        pf.polys.push_back(parse_poly_expression(line, pf.ring, lineno));
    }
    if (!pf.ring) throw parse_error("vars header missing", lineno, 1);
    return pf;
}

PolyFile parse_poly_file(const std::string& path) { return parse_poly_text(read_file(path)); }

std::string unparse_poly_file(const PolyFile& pf) {
    std::ostringstream os;
    os << "cyclotomic_order: " << pf.cyclotomic_order << "\n";
    os << "vars: ";
    for (std::size_t i = 0; i < pf.vars.size(); ++i) os << (i ? ", " : "") << pf.vars[i];
    os << "\n";
    for (const auto& p : pf.polys) os << p.str() << "\n";
    return os.str();
}

}  // namespace coxalg
