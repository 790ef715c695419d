#include "planept/io.hpp"

#include <fstream>
#include <sstream>

namespace planept {

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string strip_spaces(std::string s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(bool(in), "BadFixture", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace {

struct Lines {
    std::vector<std::pair<std::string, std::vector<std::string>>> rows;  // (key, tokens)
    FieldPtr field;
    bool declared_real = false;
};

Lines tokenize_fixture(const std::string& text) {
    Lines out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        require(key.back() == ':', "BadFixture", "expected 'key:' at '" + line + "'");
        key.pop_back();
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (key == "field") {
            require(toks.size() >= 1, "BadFixture", "field: needs a field spec");
            std::string spec;
            for (const auto& tok : toks) spec += tok;
            out.field = Field::make(FieldSpec::parse(spec));
        } else if (key == "realizable_over") {
            require(toks.size() == 1 && toks[0] == "R", "BadFixture",
                    "realizable_over supports only R");
            out.declared_real = true;
        } else {
            out.rows.emplace_back(key, std::move(toks));
        }
    }
    require(bool(out.field), "BadFixture", "fixture is missing its field: header");
    return out;
}

FieldElem parse_coord(const Field& f, const std::string& tok) { return f.parse(tok); }

} // namespace

FatPointScheme parse_scheme_text(const std::string& text) {
    Lines lx = tokenize_fixture(text);
    std::vector<FatPoint> pts;
    for (const auto& [key, toks] : lx.rows) {
        require(key == "point", "BadFixture", "unexpected row '" + key + ":' in a scheme fixture");
        require(toks.size() == 5 && toks[3] == "mult", "BadFixture",
                "point rows read: point: <x> <y> <z> mult <m>");
        ProjPoint p(lx.field, parse_coord(*lx.field, toks[0]), parse_coord(*lx.field, toks[1]),
                    parse_coord(*lx.field, toks[2]));
        pts.push_back({p, unsigned(std::stoul(toks[4]))});
    }
    return FatPointScheme(lx.field, std::move(pts));
}

LineArrangement parse_arrangement_text(const std::string& text) {
    Lines lx = tokenize_fixture(text);
    std::vector<ArrLine> lines;
    for (const auto& [key, toks] : lx.rows) {
        require(key == "line", "BadFixture", "unexpected row '" + key + ":' in an arrangement fixture");
        require(toks.size() == 3 || (toks.size() == 5 && toks[3] == "mult"), "BadFixture",
                "line rows read: line: <a> <b> <c> [mult <m>]");
        Poly3 form = Poly3::linear(lx.field, parse_coord(*lx.field, toks[0]),
                                   parse_coord(*lx.field, toks[1]), parse_coord(*lx.field, toks[2]));
        unsigned mult = toks.size() == 5 ? unsigned(std::stoul(toks[4])) : 1u;
        lines.push_back({form, mult});
    }
    return LineArrangement(lx.field, std::move(lines), lx.declared_real);
}

CurveSystem parse_system_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::optional<size_t> s;
    std::vector<DivisorClass> curves;
    std::vector<std::string> names;
    std::vector<std::vector<Rational>> gram;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        require(key.back() == ':', "BadFixture", "expected 'key:' at '" + line + "'");
        key.pop_back();
        if (key == "points") {
            size_t v;
            require(bool(ls >> v), "BadFixture", "points: needs a count");
            s = v;
        } else if (key == "curve") {
            require(bool(s), "BadFixture", "points: must precede curve rows");
            std::string name;
            require(bool(ls >> name), "BadFixture", "curve rows read: curve: <name> <divisor>");
            std::string rest;
            std::getline(ls, rest);
            names.push_back(name);
            curves.push_back(DivisorClass::parse(*s, rest));
        } else if (key == "gramrow") {
            std::vector<Rational> row;
            std::string tok;
            while (ls >> tok) row.push_back(parse_rational(tok));
            gram.push_back(std::move(row));
        } else {
            fail("BadFixture", "unexpected row '" + key + ":' in a curve system fixture");
        }
    }
    if (!gram.empty()) {
        require(curves.empty(), "BadFixture", "give either curve rows or a Gram matrix, not both");
        return CurveSystem(std::move(gram), std::move(names));
    }
    require(!curves.empty(), "BadFixture", "curve system fixture has no curves");
    return CurveSystem(*s, std::move(curves), std::move(names));
}

SchemeFixture read_scheme_fixture(const std::string& path) {
    std::string text = read_file(path);
    return SchemeFixture{parse_scheme_text(text), fnv1a_hex(text)};
}

ArrangementFixture read_arrangement_fixture(const std::string& path) {
    std::string text = read_file(path);
    return ArrangementFixture{parse_arrangement_text(text), fnv1a_hex(text)};
}

SystemFixture read_system_fixture(const std::string& path) {
    std::string text = read_file(path);
    return SystemFixture{parse_system_text(text), fnv1a_hex(text)};
}

std::string scheme_to_text(const FatPointScheme& Z) {
    std::ostringstream os;
    os << "field: " << Z.field().spec().str() << "\n";
    for (const auto& fp : Z.points())
        os << "point: " << strip_spaces(fp.p[0].str()) << " " << strip_spaces(fp.p[1].str()) << " "
           << strip_spaces(fp.p[2].str()) << " mult " << fp.mult << "\n";
    return os.str();
}

std::string arrangement_to_text(const LineArrangement& A) {
    std::ostringstream os;
    os << "field: " << A.field().spec().str() << "\n";
    if (A.declared_real()) os << "realizable_over: R\n";
    for (const auto& l : A.lines()) {
        os << "line: " << strip_spaces(l.form[0].str()) << " " << strip_spaces(l.form[1].str())
           << " " << strip_spaces(l.form[2].str());
        if (l.mult != 1) os << " mult " << l.mult;
        os << "\n";
    }
    return os.str();
}

void Report::add(const std::string& key, const std::string& value) { kv_.emplace_back(key, value); }

std::string Report::text() const {
    std::ostringstream os;
    for (const auto& [k, v] : kv_) os << k << ": " << v << "\n";
    return os.str();
}

} // namespace planept
