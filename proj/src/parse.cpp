#include "dgcalc/parse.hpp"

#include "dgcalc/error.hpp"
#include "dgcalc/workspace.hpp"

#include <cctype>
#include <cstring>
#include <sstream>

namespace dgcalc {

namespace {

struct Token {
    enum Kind { kInt, kIdent, kSym, kEnd } kind = kEnd;
    std::string text;
    int line = 1, col = 1;
};

class Lexer {
public:
    Lexer(const std::string& text, int line) : text_(text), line_(line) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }
    bool at_end() const { return tok_.kind == Token::kEnd; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(tok_.line, tok_.col, "syntax error: " + msg);
    }

    Token expect_ident(const std::string& what) {
        if (tok_.kind != Token::kIdent) fail("expected " + what);
        return take();
    }
    Token expect_sym(const std::string& s) {
        if (tok_.kind != Token::kSym || tok_.text != s) fail("expected '" + s + "'");
        return take();
    }
    Token expect_int(const std::string& what) {
        if (tok_.kind != Token::kInt) fail("expected " + what);
        return take();
    }

private:
    void advance() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
        tok_.line = line_;
        tok_.col = static_cast<int>(pos_) + 1;
        if (pos_ >= text_.size() || text_[pos_] == '#') {
            tok_.kind = Token::kEnd;
            tok_.text.clear();
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            tok_ = {Token::kInt, text_.substr(start, pos_ - start), line_, static_cast<int>(start) + 1};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            tok_ = {Token::kIdent, text_.substr(start, pos_ - start), line_, static_cast<int>(start) + 1};
            return;
        }
        // multi-char symbols first
        for (const char* sym : {"->", "<="}) {
            size_t n = std::strlen(sym);
            if (text_.compare(pos_, n, sym) == 0) {
                tok_ = {Token::kSym, sym, line_, static_cast<int>(pos_) + 1};
                pos_ += n;
                return;
            }
        }
        static const std::string singles = "+-*^/():=,";
        if (singles.find(c) != std::string::npos) {
            tok_ = {Token::kSym, std::string(1, c), line_, static_cast<int>(pos_) + 1};
            ++pos_;
            return;
        }
        throw ParseError(line_, static_cast<int>(pos_) + 1,
                         "syntax error: unexpected character '" + std::string(1, c) + "'");
    }

    const std::string& text_;
    int line_;
    size_t pos_ = 0;
    Token tok_;
};

class PolyParser {
public:
    PolyParser(Lexer& lx, const VarTablePtr& table) : lx_(lx), table_(table) {}

    GradedPolynomial parse() {
        GradedPolynomial p = expr();
        return p;
    }

private:
    GradedPolynomial expr() {
        int sign = 1;
        if (lx_.peek().kind == Token::kSym && (lx_.peek().text == "+" || lx_.peek().text == "-")) {
            if (lx_.take().text == "-") sign = -1;
        }
        GradedPolynomial p = term();
        if (sign < 0) p = -p;
        while (lx_.peek().kind == Token::kSym && (lx_.peek().text == "+" || lx_.peek().text == "-")) {
            bool minus = lx_.take().text == "-";
            GradedPolynomial q = term();
            p = minus ? p - q : p + q;
        }
        return p;
    }

    GradedPolynomial term() {
        GradedPolynomial p = factor();
        while (lx_.peek().kind == Token::kSym && lx_.peek().text == "*") {
            lx_.take();
            p = p * factor();
        }
        return p;
    }

    GradedPolynomial factor() {
        Token t = lx_.peek();
        bool is_var = t.kind == Token::kIdent;
        GradedPolynomial p = primary();
        if (lx_.peek().kind == Token::kSym && lx_.peek().text == "^") {
            Token caret = lx_.take();
            if (!is_var)
                throw ParseError(caret.line, caret.col,
                                 "syntax error: '^' applies to a single variable");
            Token e = lx_.expect_int("integer exponent");
            unsigned long long v = std::stoull(e.text);
            if (v > 1u << 20) throw ParseError(e.line, e.col, "syntax error: exponent too large");
            p = pow(p, static_cast<uint32_t>(v));
        }
        return p;
    }

    GradedPolynomial primary() {
        Token t = lx_.take();
        if (t.kind == Token::kInt) {
            BigInt num = BigInt::from_decimal(t.text);
            if (lx_.peek().kind == Token::kSym && lx_.peek().text == "/") {
                lx_.take();
                Token d = lx_.expect_int("denominator");
                BigInt den = BigInt::from_decimal(d.text);
                if (den.is_zero()) throw ParseError(d.line, d.col, "syntax error: zero denominator");
                return GradedPolynomial::constant(table_, Rational(num, den));
            }
            return GradedPolynomial::constant(table_, Rational(num, BigInt(1ll)));
        }
        if (t.kind == Token::kIdent) {
            auto idx = table_->find(t.text);
            if (!idx)
                throw ParseError(t.line, t.col, "unknown identifier '" + t.text + "'");
            return GradedPolynomial::variable(table_, *idx);
        }
        if (t.kind == Token::kSym && t.text == "(") {
            GradedPolynomial p = expr();
            lx_.expect_sym(")");
            return p;
        }
        if (t.kind == Token::kSym && t.text == "-") {
            // unary minus inside a factor position, e.g. `2*(-x)` is covered
            // by expr(); a bare `-x` after '(' lands here via expr already.
            throw ParseError(t.line, t.col, "syntax error: unexpected '-'");
        }
        throw ParseError(t.line, t.col, "syntax error: expected a number, variable or '('");
    }

    Lexer& lx_;
    const VarTablePtr& table_;
};

std::vector<std::pair<int, std::string>> logical_lines(const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in(text);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        out.emplace_back(n, line);
    }
    return out;
}

bool blank_line(const std::string& s) {
    for (char c : s) {
        if (c == '#') return true;
        if (c != ' ' && c != '\t' && c != '\r') return false;
    }
    return true;
}

int parse_signed_int(Lexer& lx, const std::string& what) {
    int sign = 1;
    if (lx.peek().kind == Token::kSym && lx.peek().text == "-") {
        lx.take();
        sign = -1;
    }
    Token t = lx.expect_int(what);
    return sign * std::stoi(t.text);
}

void expect_line_end(Lexer& lx) {
    if (!lx.at_end()) lx.fail("trailing input on line");
}

}  // namespace

GradedPolynomial parse_polynomial(const std::string& text, const VarTablePtr& table) {
    Lexer lx(text, 1);
    PolyParser pp(lx, table);
    GradedPolynomial p = pp.parse();
    if (!lx.at_end()) lx.fail("trailing input after expression");
    return p;
}

ParsedChart parse_chart_text(const std::string& text) {
    std::string name;
    std::vector<GradedVariable> vars;
    std::vector<std::tuple<int, std::string, std::string>> d_stmts;  // line, gen, expr-tail
    int header_line = 1;
    bool have_header = false;

    for (const auto& [lineno, raw] : logical_lines(text)) {
        if (blank_line(raw)) continue;
        Lexer lx(raw, lineno);
        Token kw = lx.expect_ident("a statement keyword");
        if (kw.text == "chart") {
            if (have_header) lx.fail("duplicate chart header");
            name = lx.expect_ident("chart name").text;
            have_header = true;
            header_line = lineno;
            expect_line_end(lx);
        } else if (kw.text == "base") {
            while (!lx.at_end()) vars.push_back({lx.expect_ident("base variable name").text, 0});
        } else if (kw.text == "gen") {
            Token id = lx.expect_ident("generator name");
            lx.expect_sym(":");
            int deg = parse_signed_int(lx, "generator degree");
            if (deg >= 0)
                throw ParseError(id.line, id.col,
                                 "degree violation: fiber generator '" + id.text + "' must have negative degree");
            vars.push_back({id.text, deg});
            expect_line_end(lx);
        } else if (kw.text == "d") {
            Token id = lx.expect_ident("generator name");
            lx.expect_sym("=");
            // keep the tail; parsed once the table is complete
            size_t eq = raw.find('=');
            d_stmts.emplace_back(lineno, id.text, raw.substr(eq + 1));
        } else {
            throw ParseError(kw.line, kw.col, "syntax error: unknown statement '" + kw.text + "'");
        }
    }
    if (!have_header) throw ParseError(1, 1, "syntax error: missing 'chart <name>' header");

    VarTablePtr table;
    try {
        table = make_table(vars);
    } catch (const DgError& e) {
        throw ParseError(header_line, 1, std::string("degree violation: ") + e.what());
    }
    std::vector<GradedPolynomial> values(table->size(), GradedPolynomial::zero(table));
    ParsedChart out{DgChart(name, table, Derivation(table, 1, values)), {}, header_line};
    for (const auto& [lineno, gen, tail] : d_stmts) {
        auto idx = table->find(gen);
        if (!idx) throw ParseError(lineno, 1, "unknown identifier '" + gen + "'");
        Lexer lx(tail, lineno);
        PolyParser pp(lx, table);
        values[*idx] = pp.parse();
        if (!lx.at_end()) lx.fail("trailing input after expression");
        if (out.d_lines.count(gen)) throw ParseError(lineno, 1, "syntax error: duplicate d-statement for '" + gen + "'");
        out.d_lines[gen] = lineno;
    }
    out.chart = DgChart(name, table, Derivation(table, 1, std::move(values)));
    return out;
}

DgChart parse_chart(const std::string& text) {
    ParsedChart parsed = parse_chart_text(text);
    Diagnostic ok = validate_chart(parsed.chart);
    if (!ok.ok) {
        // point at the most relevant d-line when one exists
        int line = parsed.header_line;
        CohomologicalCheck sq = is_cohomological(parsed.chart.d);
        if (!sq.ok && sq.generator && parsed.d_lines.count(*sq.generator))
            line = parsed.d_lines.at(*sq.generator);
        throw ParseError(line, 1, ok.message);
    }
    return parsed.chart;
}

DgMorphism parse_morphism(const std::string& text, const Workspace& ws) {
    DgMorphism m;
    bool have_header = false;
    std::vector<std::tuple<int, std::string, std::string>> sends;
    for (const auto& [lineno, raw] : logical_lines(text)) {
        if (blank_line(raw)) continue;
        Lexer lx(raw, lineno);
        Token kw = lx.expect_ident("a statement keyword");
        if (kw.text == "map") {
            if (have_header) lx.fail("duplicate map header");
            m.name = lx.expect_ident("map name").text;
            lx.expect_sym(":");
            std::string src = lx.expect_ident("source chart").text;
            lx.expect_sym("->");
            std::string tgt = lx.expect_ident("target chart").text;
            expect_line_end(lx);
            m.source = ws.chart(src);
            m.target = ws.chart(tgt);
            have_header = true;
        } else if (kw.text == "send") {
            if (!have_header) lx.fail("'send' before 'map' header");
            Token id = lx.expect_ident("target generator");
            lx.expect_sym("=");
            size_t eq = raw.find('=');
            sends.emplace_back(lineno, id.text, raw.substr(eq + 1));
        } else {
            throw ParseError(kw.line, kw.col, "syntax error: unknown statement '" + kw.text + "'");
        }
    }
    if (!have_header) throw ParseError(1, 1, "syntax error: missing 'map' header");
    m.images.assign(m.target->table->size(), GradedPolynomial::zero(m.source->table));
    for (const auto& [lineno, gen, tail] : sends) {
        auto idx = m.target->table->find(gen);
        if (!idx) throw ParseError(lineno, 1, "unknown identifier '" + gen + "' in target chart");
        Lexer lx(tail, lineno);
        PolyParser pp(lx, m.source->table);
        m.images[*idx] = pp.parse();
        if (!lx.at_end()) lx.fail("trailing input after expression");
    }
    return m;
}

std::vector<Point> parse_points(const std::string& text) {
    std::vector<Point> out;
    for (const auto& [lineno, raw] : logical_lines(text)) {
        if (blank_line(raw)) continue;
        Lexer lx(raw, lineno);
        Token kw = lx.expect_ident("'point'");
        if (kw.text != "point") lx.fail("expected 'point'");
        Point p;
        for (;;) {
            Token id = lx.expect_ident("variable name");
            lx.expect_sym("=");
            int sign = 1;
            if (lx.peek().kind == Token::kSym && lx.peek().text == "-") {
                lx.take();
                sign = -1;
            }
            Token num = lx.expect_int("rational value");
            BigInt n = BigInt::from_decimal(num.text);
            BigInt d(1ll);
            if (lx.peek().kind == Token::kSym && lx.peek().text == "/") {
                lx.take();
                d = BigInt::from_decimal(lx.expect_int("denominator").text);
            }
            if (sign < 0) n = -n;
            p[id.text] = Rational(n, d);
            if (lx.peek().kind == Token::kSym && lx.peek().text == ",") {
                lx.take();
                continue;
            }
            break;
        }
        expect_line_end(lx);
        out.push_back(std::move(p));
    }
    return out;
}

NamedSection parse_section(const std::string& text, const Workspace& ws) {
    NamedSection out;
    bool have_header = false;
    std::vector<std::tuple<int, std::string, std::string>> vals;
    for (const auto& [lineno, raw] : logical_lines(text)) {
        if (blank_line(raw)) continue;
        Lexer lx(raw, lineno);
        Token kw = lx.expect_ident("a statement keyword");
        if (kw.text == "section") {
            if (have_header) lx.fail("duplicate section header");
            out.name = lx.expect_ident("section name").text;
            Token over = lx.expect_ident("'over'");
            if (over.text != "over") lx.fail("expected 'over'");
            out.section.chart = ws.chart(lx.expect_ident("chart name").text);
            expect_line_end(lx);
            have_header = true;
        } else if (kw.text == "slot") {
            if (!have_header) lx.fail("'slot' before 'section' header");
            Token id = lx.expect_ident("slot name");
            lx.expect_sym(":");
            int deg = parse_signed_int(lx, "slot degree");
            if (deg > 0) throw ParseError(id.line, id.col, "degree violation: slot degree must be <= 0");
            out.section.slots.push_back(
                {id.text, deg, GradedPolynomial::zero(out.section.chart->table)});
            expect_line_end(lx);
        } else if (kw.text == "val") {
            if (!have_header) lx.fail("'val' before 'section' header");
            Token id = lx.expect_ident("slot name");
            lx.expect_sym("=");
            size_t eq = raw.find('=');
            vals.emplace_back(lineno, id.text, raw.substr(eq + 1));
        } else {
            throw ParseError(kw.line, kw.col, "syntax error: unknown statement '" + kw.text + "'");
        }
    }
    if (!have_header) throw ParseError(1, 1, "syntax error: missing 'section' header");
    for (const auto& [lineno, slot, tail] : vals) {
        bool found = false;
        for (auto& s : out.section.slots) {
            if (s.name == slot) {
                Lexer lx(tail, lineno);
                PolyParser pp(lx, out.section.chart->table);
                s.component = pp.parse();
                if (!lx.at_end()) lx.fail("trailing input after expression");
                found = true;
                break;
            }
        }
        if (!found) throw ParseError(lineno, 1, "unknown identifier '" + slot + "' (no such slot)");
    }
    return out;
}

CurvedLInfty parse_linfty(const std::string& text) {
    CurvedLInfty l;
    bool have_header = false;
    std::vector<std::tuple<int, std::string>> bracket_lines;
    for (const auto& [lineno, raw] : logical_lines(text)) {
        if (blank_line(raw)) continue;
        Lexer lx(raw, lineno);
        Token kw = lx.expect_ident("a statement keyword");
        if (kw.text == "linfty") {
            if (have_header) lx.fail("duplicate linfty header");
            l.name = lx.expect_ident("name").text;
            have_header = true;
            expect_line_end(lx);
        } else if (kw.text == "base") {
            while (!lx.at_end()) l.base.push_back({lx.expect_ident("base variable name").text, 0});
        } else if (kw.text == "elem") {
            Token id = lx.expect_ident("basis element name");
            lx.expect_sym(":");
            Token lv = lx.expect_int("positive level");
            l.basis.push_back({id.text, std::stoi(lv.text)});
            expect_line_end(lx);
        } else if (kw.text == "bracket") {
            bracket_lines.emplace_back(lineno, raw);
        } else {
            throw ParseError(kw.line, kw.col, "syntax error: unknown statement '" + kw.text + "'");
        }
    }
    if (!have_header) throw ParseError(1, 1, "syntax error: missing 'linfty' header");
    VarTablePtr base = l.base_table();
    for (const auto& [lineno, raw] : bracket_lines) {
        Lexer lx(raw, lineno);
        lx.expect_ident("'bracket'");
        Token out = lx.expect_ident("output basis element");
        lx.expect_sym("<=");
        std::vector<std::string> inputs;
        while (!(lx.peek().kind == Token::kSym && lx.peek().text == ":"))
            inputs.push_back(lx.expect_ident("input basis element").text);
        lx.expect_sym(":");
        std::string uncommented = raw.substr(0, raw.find('#'));
        size_t colon = uncommented.rfind(':');
        std::string tail = uncommented.substr(colon + 1);
        Lexer tlx(tail, lineno);
        PolyParser pp(tlx, base);
        GradedPolynomial coeff = pp.parse();
        if (!tlx.at_end()) tlx.fail("trailing input after expression");
        try {
            l.add_bracket(out.text, std::move(inputs), std::move(coeff));
        } catch (const DgError& e) {
            throw ParseError(lineno, 1, e.what());
        }
    }
    return l;
}

std::string print_polynomial(const GradedPolynomial& p) { return p.str(); }

std::string print_chart(const DgChart& c) {
    std::ostringstream os;
    os << "chart " << c.name << "\n";
    auto bases = c.table->base_indices();
    if (!bases.empty()) {
        os << "base";
        for (int i : bases) os << " " << c.table->var(i).name;
        os << "\n";
    }
    for (int level = 1; level <= c.amplitude(); ++level)
        for (int i : c.table->level_indices(level))
            os << "gen " << c.table->var(i).name << " : " << -level << "\n";
    for (int level = 1; level <= c.amplitude(); ++level)
        for (int i : c.table->level_indices(level))
            if (!c.d_value(i).is_zero())
                os << "d " << c.table->var(i).name << " = " << c.d_value(i).str() << "\n";
    return os.str();
}

std::string print_morphism(const DgMorphism& f) {
    std::ostringstream os;
    os << "map " << f.name << " : " << f.source->name << " -> " << f.target->name << "\n";
    for (int i = 0; i < f.target->table->size(); ++i)
        if (!f.images[i].is_zero())
            os << "send " << f.target->table->var(i).name << " = " << f.images[i].str() << "\n";
    return os.str();
}

std::string print_section(const std::string& name, const Section& s) {
    std::ostringstream os;
    os << "section " << name << " over " << s.chart->name << "\n";
    for (const auto& slot : s.slots) os << "slot " << slot.name << " : " << slot.degree << "\n";
    for (const auto& slot : s.slots)
        if (!slot.component.is_zero()) os << "val " << slot.name << " = " << slot.component.str() << "\n";
    return os.str();
}

std::string print_linfty(const CurvedLInfty& l) {
    std::ostringstream os;
    os << "linfty " << l.name << "\n";
    if (!l.base.empty()) {
        os << "base";
        VarTablePtr t = l.base_table();
        for (int i = 0; i < t->size(); ++i) os << " " << t->var(i).name;
        os << "\n";
    }
    for (const auto& e : l.basis) os << "elem " << e.name << " : " << e.level << "\n";
    for (const auto& [key, coeff] : l.brackets) {
        os << "bracket " << key.out << " <=";
        for (const auto& in : key.inputs) os << " " << in;
        os << " : " << coeff.str() << "\n";
    }
    return os.str();
}

std::string print_point(const Point& p) {
    std::ostringstream os;
    os << "point ";
    bool first = true;
    for (const auto& [name, value] : p) {
        if (!first) os << ", ";
        first = false;
        os << name << "=" << value.str();
    }
    os << "\n";
    return os.str();
}

}  // namespace dgcalc
