#ifndef PLANEPT_IO_HPP
#define PLANEPT_IO_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "planept/arrangements.hpp"
#include "planept/fatpoints.hpp"
#include "planept/nslattice.hpp"

namespace planept {

// 64-bit FNV-1a, printed as 16 hex digits; used to echo fixture identities
std::string fnv1a_hex(const std::string& bytes);
std::string strip_spaces(std::string s);

// Fixture grammar (line oriented, '#' comments):
//   field: Q[w]/(w^2+w+1)
//   realizable_over: R            (optional, arrangements only)
//   point: <x> <y> <z> mult <m>   (schemes; coordinates are space-free expressions)
//   line: <a> <b> <c> [mult <m>]  (arrangements)
//   points: <s>                   (curve systems: lattice rank)
//   curve: <name> <divisor text>  (curve systems, e.g. "curve: H1 L - E1 - E2")
//   gramrow: <q> <q> ...          (curve systems given by an explicit Gram matrix)

struct SchemeFixture {
    FatPointScheme scheme;
    std::string checksum;
};

struct ArrangementFixture {
    LineArrangement arrangement;
    std::string checksum;
};

struct SystemFixture {
    CurveSystem system;
    std::string checksum;
};

FatPointScheme parse_scheme_text(const std::string& text);
LineArrangement parse_arrangement_text(const std::string& text);
CurveSystem parse_system_text(const std::string& text);

SchemeFixture read_scheme_fixture(const std::string& path);
ArrangementFixture read_arrangement_fixture(const std::string& path);
SystemFixture read_system_fixture(const std::string& path);

std::string scheme_to_text(const FatPointScheme& Z);
std::string arrangement_to_text(const LineArrangement& A);

std::string read_file(const std::string& path);  // errors: BadFixture

// ordered key/value report; identical inputs must print identical bytes
class Report {
public:
    void add(const std::string& key, const std::string& value);
    void add(const std::string& key, const Rational& value) {
        Rational c = value;
        c.canonicalize();
        add(key, rat_str(c));
    }
    void add(const std::string& key, unsigned long v) { add(key, std::to_string(v)); }
    const std::vector<std::pair<std::string, std::string>>& entries() const { return kv_; }
    std::string text() const;

private:
    std::vector<std::pair<std::string, std::string>> kv_;
};

} // namespace planept

#endif
