#include "planept/arrangements.hpp"

namespace planept {

// Coordinate tables for the two exceptional arrangements, kept as text so the
// entries can be eyeballed against their published sources.  The forms are
// parsed over the matching number field at load time.

namespace {

const char* const kKleinLines[] = {
    "x", "x+c*y-z", "-x+c*y-z", "x+c*y+z", "-x+y+c*z", "y+z", "c*x+y-z",
    "z", "c*x+y+z", "c*x-y-z", "-x+z", "-x-y+c*z", "-x+y", "c*x-y+z",
    "-x+c*y+z", "x+z", "-y+z", "x+y", "x-y+c*z", "x+y+c*z", "y"};

const char* const kWimanLines[] = {
    "y", "(-1+A)*x+A*y+z", "z", "(1-A)*x+A*y-z", "A*x+y+(-1+A)*z", "-A*x+y+(1-A)*z",
    "(-1+A)*x-B*y+(-A-A*B)*z", "(1-A)*x-B*y+(A+A*B)*z", "(1-A)*x+A*y+z",
    "A*x+y+(1-A)*z", "-x+(-1+A)*y+A*z", "(-1-A*B)*x+y+(-1-B)*z",
    "(1-A)*x+B*y+(-A-A*B)*z", "A*x+(B-A*B)*y+(-1-B)*z", "(-A-A*B)*x+(1-A)*y-B*z",
    "(-1+A)*x+A*y-z", "-A*x+y+(-1+A)*z", "x+(-1+A)*y-A*z", "(1+A*B)*x+y+(1+B)*z",
    "(-1+A)*x+B*y+(A+A*B)*z", "-A*x+(B-A*B)*y+(1+B)*z", "(A+A*B)*x+(1-A)*y+B*z",
    "(1+B)*x+(-1-A*B)*y+z", "x+(-1+A)*y+A*z", "x+(1-A)*y+A*z", "(-1-A*B)*x+y+(1+B)*z",
    "(-A-B)*x+(-1+A+A*B)*y", "-B*x+y+(-A+B-A*B)*z", "(-1-A*B)*x-y+(1+B)*z",
    "(-1-B)*x+A*y+(B-A*B)*z", "(-1-B)*x+(-1-A*B)*y-z", "(A+B)*x+(-1+A+A*B)*y",
    "B*x+y+(A-B+A*B)*z", "(1+B)*x+A*y+(-B+A*B)*z", "(-1+A+A*B)*x+(-A-B)*z", "x",
    "(-1-B)*x+A*y+(-B+A*B)*z", "(-A-B)*y+(-1+A+A*B)*z", "-B*x+y+(A-B+A*B)*z",
    "(1+B)*x-B*y+(1-A+B)*z", "x-A*B*y+(1-A+B-A*B)*z", "(-A-B)*y+(1-A-A*B)*z",
    "(1+B)*x+(1+A*B)*y-z", "(A+B)*x+(1+B-A*B)*z", "B*x+(-1+A-B)*y+(-1-B)*z"};

LineArrangement lines_from_table(FieldPtr f, const char* const* table, size_t n,
                                 const std::string& prologue_a, const std::string& prologue_b) {
    std::vector<ArrLine> lines;
    lines.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        std::string text = table[i];
        if (!prologue_a.empty()) {
            // substitute A and B textually: the table entries only use them as
            // standalone symbols, never as prefixes of longer names
            std::string out;
            for (size_t j = 0; j < text.size(); ++j) {
                if (text[j] == 'A')
                    out += "(" + prologue_a + ")";
                else if (text[j] == 'B')
                    out += "(" + prologue_b + ")";
                else
                    out += text[j];
            }
            text = out;
        }
        lines.push_back({Poly3::parse(f, text), 1});
    }
    return LineArrangement(std::move(f), std::move(lines));
}

} // namespace

LineArrangement klein_arrangement() {
    FieldPtr f = Field::make(FieldSpec::parse("Q[c]/(c^2+c+2)"));
    return lines_from_table(f, kKleinLines, sizeof(kKleinLines) / sizeof(kKleinLines[0]), "", "");
}

LineArrangement wiman_arrangement() {
    FieldPtr f = Field::make(FieldSpec::parse("Q[a]/(a^4-a^2+4)"));
    return lines_from_table(f, kWimanLines, sizeof(kWimanLines) / sizeof(kWimanLines[0]),
                            "(-1/4)*(a^3-3*a-2)", "(1/4)*(a^3+a-2)");
}

} // namespace planept
