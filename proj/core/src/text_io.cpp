#include "holant/text_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "holant/errors.hpp"

namespace holant {

namespace {

std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace

std::string cyc8_to_string(const Cyc8& c) {
    std::ostringstream os;
    os << rat_str(c.coeff(0)) << " + " << rat_str(c.coeff(1)) << "*a + "
       << rat_str(c.coeff(2)) << "*a^2 + " << rat_str(c.coeff(3)) << "*a^3";
    return os.str();
}

std::string cyc8_with_approx(const Cyc8& c) {
    auto z = c.approx();
    std::ostringstream os;
    os << cyc8_to_string(c) << "  (~ " << z.real() << (z.imag() < 0 ? " - " : " + ")
       << (z.imag() < 0 ? -z.imag() : z.imag()) << "i)";
    return os.str();
}

namespace {

// Recursive-descent parser for the value grammar.
struct ValueParser {
    const std::string& s;
    std::size_t pos = 0;

    explicit ValueParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    Cyc8 parse_expr() {
        Cyc8 v = parse_term();
        while (true) {
            if (eat('+'))
                v += parse_term();
            else if (eat('-'))
                v -= parse_term();
            else
                return v;
        }
    }

    Cyc8 parse_term() {
        Cyc8 v = parse_factor();
        while (true) {
            if (eat('*')) {
                v *= parse_factor();
            } else if (eat('/')) {
                Cyc8 d = parse_factor();
                if (d.is_zero()) throw ParseError("division by zero in value");
                v /= d;
            } else {
                return v;
            }
        }
    }

    Cyc8 parse_factor() {
        int sign = 1;
        while (true) {
            if (eat('-'))
                sign = -sign;
            else if (eat('+'))
                ;
            else
                break;
        }
        Cyc8 v = parse_primary();
        if (eat('^')) {
            long e = parse_int();
            Cyc8 r(1);
            Cyc8 base = (e < 0) ? v.inverse() : v;
            long k = (e < 0) ? -e : e;
            for (long j = 0; j < k; ++j) r *= base;
            v = r;
        }
        return sign < 0 ? -v : v;
    }

    long parse_int() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = (s[pos++] == '-');
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected an integer exponent");
        long v = std::stol(s.substr(start, pos - start));
        return neg ? -v : v;
    }

    Cyc8 parse_primary() {
        skip_ws();
        if (pos >= s.size()) throw ParseError("unexpected end of value expression");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Cyc8 v = parse_expr();
            if (!eat(')')) throw ParseError("missing ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            return Cyc8(Rat(s.substr(start, pos - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            if (name == "a") return Cyc8::alpha();
            if (name == "i") return Cyc8::i();
            throw ValueOutsideRing(name);
        }
        throw ParseError(std::string("unexpected character '") + c + "' in value");
    }
};

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> parts;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) parts.push_back(tok);
    return parts;
}

bool skippable(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Cyc8 parse_cyc8(const std::string& text) {
    ValueParser p(text);
    Cyc8 v = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError("trailing input in value expression");
    return v;
}

Signature parse_signature_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    Signature f;
    bool have_header = false;
    while (std::getline(is, line)) {
        ++lineno;
        if (skippable(line)) continue;
        if (!have_header) {
            auto parts = split_ws(line);
            if (parts.size() != 4 || parts[0] != "sig" || parts[2] != "arity")
                throw ParseError(lineno, "expected header: sig NAME arity N");
            int n;
            try {
                n = std::stoi(parts[3]);
            } catch (...) {
                throw ParseError(lineno, "bad arity");
            }
            if (n < 0 || n > kMaxArity)
                throw ParseError(lineno, "arity must be between 0 and 64");
            f = Signature(n, parts[1]);
            have_header = true;
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError(lineno, "expected: BITSTRING : VALUE");
        std::string bits_part = line.substr(0, colon);
        std::string value_part = line.substr(colon + 1);
        auto bits_tokens = split_ws(bits_part);
        if (bits_tokens.size() != 1) throw ParseError(lineno, "expected one bitstring");
        const std::string& bits = bits_tokens[0];
        std::uint64_t x = 0;
        if (bits == "-" && f.arity() == 0) {
            // the empty assignment of an arity-0 signature
        } else {
            if (static_cast<int>(bits.size()) != f.arity())
                throw ParseError(lineno, "bitstring length differs from the arity");
            for (char c : bits) {
                if (c != '0' && c != '1') throw ParseError(lineno, "bitstring must be 0/1");
                x = (x << 1) | (c == '1' ? 1 : 0);
            }
        }
        if (!f.value(x).is_zero()) throw DuplicateEntry(lineno, bits);
        Cyc8 v;
        try {
            v = parse_cyc8(value_part);
        } catch (const ValueOutsideRing& e) {
            throw ValueOutsideRing(lineno, std::string(e.what()));
        } catch (const ParseError& e) {
            throw ParseError(lineno, e.what());
        }
        f.set(x, v);  // zero values are simply dropped
    }
    if (!have_header) throw ParseError("missing signature header");
    return f;
}

Signature load_signature_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open signature file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_signature_text(buf.str());
}

std::string signature_to_text(const Signature& f) {
    std::ostringstream os;
    os << "sig " << (f.name().empty() ? "unnamed" : f.name()) << " arity " << f.arity()
       << "\n";
    for (const auto& [x, v] : f.entries()) {
        std::string bits = f.arity() == 0 ? "-" : asn_to_string(x, f.arity());
        os << bits << " : " << cyc8_to_string(v) << "\n";
    }
    return os.str();
}

void save_signature_file(const Signature& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write signature file: " + path);
    out << signature_to_text(f);
}

GridDocument parse_grid_text(const std::string& text, const std::string& base_dir) {
    GridDocument doc;
    std::map<std::string, Signature> table;
    std::map<std::string, int> vertex_of;
    auto parse_port = [&](const std::string& tok, int lineno) {
        auto dot = tok.rfind('.');
        if (dot == std::string::npos) throw ParseError(lineno, "expected VERTEX.PORT");
        auto vit = vertex_of.find(tok.substr(0, dot));
        if (vit == vertex_of.end())
            throw ParseError(lineno, "unknown vertex: " + tok.substr(0, dot));
        try {
            return Port{vit->second, std::stoi(tok.substr(dot + 1))};
        } catch (const std::exception&) {
            throw ParseError(lineno, "bad port reference: " + tok);
        }
    };

    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (skippable(line)) continue;
        auto parts = split_ws(line);
        if (parts[0] == "use") {
            if (parts.size() != 3) throw ParseError(lineno, "expected: use NAME FILE");
            std::string path = parts[2];
            if (!base_dir.empty() && path.front() != '/') path = base_dir + "/" + path;
            table.emplace(parts[1], load_signature_file(path));
            doc.uses.emplace_back(parts[1], parts[2]);
        } else if (parts[0] == "vertex") {
            if (parts.size() != 4 || parts[2] != "=")
                throw ParseError(lineno, "expected: vertex V = NAME");
            auto it = table.find(parts[3]);
            if (it == table.end()) throw UnknownSignature(parts[3]);
            if (!vertex_of.emplace(parts[1], doc.grid.vertices.size()).second)
                throw ParseError(lineno, "vertex label reused: " + parts[1]);
            doc.grid.add_vertex(it->second.with_name(parts[3]));
            doc.vertex_labels.push_back(parts[1]);
            doc.vertex_names.push_back(parts[3]);
        } else if (parts[0] == "edge") {
            if (parts.size() != 3) throw ParseError(lineno, "expected: edge V1.P1 V2.P2");
            Port a = parse_port(parts[1], lineno);
            Port b = parse_port(parts[2], lineno);
            doc.grid.edges.push_back({a, b});
        } else if (parts[0] == "dangle") {
            if (parts.size() != 2) throw ParseError(lineno, "expected: dangle V.P");
            doc.grid.dangling.push_back(parse_port(parts[1], lineno));
        } else {
            throw ParseError(lineno, "unknown directive: " + parts[0]);
        }
    }
    validate_grid(doc.grid);
    return doc;
}

GridDocument load_grid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open grid file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string dir;
    auto slash = path.find_last_of('/');
    if (slash != std::string::npos) dir = path.substr(0, slash);
    return parse_grid_text(buf.str(), dir);
}

std::string grid_to_text(const GridDocument& doc) {
    std::ostringstream os;
    for (const auto& [name, file] : doc.uses) os << "use " << name << " " << file << "\n";
    auto label = [&](int v) {
        return static_cast<std::size_t>(v) < doc.vertex_labels.size()
                   ? doc.vertex_labels[v]
                   : std::to_string(v);
    };
    for (std::size_t v = 0; v < doc.grid.vertices.size(); ++v)
        os << "vertex " << label(static_cast<int>(v)) << " = " << doc.vertex_names[v]
           << "\n";
    for (const auto& [a, b] : doc.grid.edges)
        os << "edge " << label(a.vertex) << "." << a.port << " " << label(b.vertex) << "."
           << b.port << "\n";
    for (const Port& p : doc.grid.dangling)
        os << "dangle " << label(p.vertex) << "." << p.port << "\n";
    return os.str();
}

std::string verdict_to_text(const ClassVerdict& v) {
    std::ostringstream os;
    os << "VERDICT " << label_name(v) << "\n";
    for (const std::string& c : v.certificates) os << c << "\n";
    return os.str();
}

}  // namespace holant
