// Extended tier: the slow checks kept out of default runs.  Expect a long
// wait on the Klein containment; the Wiman dual splitting is minutes.

#include <chrono>
#include <iostream>

#include "doctest.h"
#include "planept/nslattice.hpp"
#include "planept/unexpected.hpp"

using namespace planept;

namespace {
struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

FatPointScheme dual_scheme(const LineArrangement& A) {
    std::vector<FatPoint> pts;
    for (const auto& p : dual_points(A)) pts.push_back({p, 1});
    return FatPointScheme(A.field_ptr(), std::move(pts));
}
} // namespace

TEST_CASE("criterion 10a: Wiman dual points split as (19, 25)") {
    Stopwatch sw;
    SplittingType st = splitting_type(dual_scheme(wiman_arrangement()), 2, 1);
    REQUIRE(st.a == 19);
    REQUIRE(st.b == 25);
    std::cout << "ACCEPTANCE criterion 10a: PASS (" << sw.seconds() << " s)" << std::endl;
}

TEST_CASE("criterion 10b: Klein 49-point symbolic cube escapes the square") {
    Stopwatch sw;
    FatIdeal I(singular_scheme(klein_arrangement(), 2));
    REQUIRE(I.scheme().size() == 49);
    ContainmentVerdict v = I.containment(3, 2);
    REQUIRE(!v.contained);
    REQUIRE(v.witness_degree.has_value());
    REQUIRE(*v.witness_degree == 21);
    std::cout << "ACCEPTANCE criterion 10b: PASS (" << sw.seconds() << " s)" << std::endl;
}
