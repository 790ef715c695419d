#ifndef PLANEPT_TOOL_CONTEXT_HPP
#define PLANEPT_TOOL_CONTEXT_HPP

#include <iostream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "planept/io.hpp"

struct Ctx {
    bool json = false;
    bool approx = false;
    planept::Report report;
    int exit_code = 0;

    void emit() {
        if (json) {
            nlohmann::ordered_json j;
            for (const auto& [k, v] : report.entries()) j[k] = v;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << report.text();
        }
    }
    void add_rat(const std::string& key, const planept::Rational& v) {
        report.add(key, v);
        if (approx) {
            std::ostringstream os;
            os << v.get_d() << " (approximate, non-authoritative)";
            report.add(key + "-approx", os.str());
        }
    }
};

int run_repro(Ctx& ctx, const std::string& id, bool list, bool extended);

#endif
