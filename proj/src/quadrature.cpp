#include "egfem/quadrature.hpp"

#include "egfem/errors.hpp"

namespace egfem {

namespace {

QuadRule make_rule_1() {
    QuadRule r;
    r.degree = 1;
    r.points = {{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}};
    r.weights = {1.0};
    return r;
}

// three-point orbit (1-2a, a, a)
void push_orbit3(QuadRule& r, double a, double w) {
    const double b = 1.0 - 2.0 * a;
    r.points.push_back({b, a, a});
    r.points.push_back({a, b, a});
    r.points.push_back({a, a, b});
    r.weights.insert(r.weights.end(), 3, w);
}

QuadRule make_rule_2() {
    QuadRule r;
    r.degree = 2;
    push_orbit3(r, 1.0 / 6.0, 1.0 / 3.0);
    return r;
}

QuadRule make_rule_4() {
    QuadRule r;
    r.degree = 4;
    push_orbit3(r, 0.445948490915965, 0.223381589678011);
    push_orbit3(r, 0.091576213509771, 0.109951743655322);
    return r;
}

QuadRule make_rule_5() {
    QuadRule r;
    r.degree = 5;
    r.points.push_back({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
    r.weights.push_back(0.225);
    push_orbit3(r, 0.470142064105115, 0.132394152788506);
    push_orbit3(r, 0.101286507323456, 0.125939180544827);
    return r;
}

} // namespace

const QuadRule& triangle_rule(int degree) {
    static const QuadRule r1 = make_rule_1();
    static const QuadRule r2 = make_rule_2();
    static const QuadRule r4 = make_rule_4();
    static const QuadRule r5 = make_rule_5();
    if (degree <= 1) return r1;
    if (degree <= 2) return r2;
    if (degree <= 4) return r4;
    if (degree <= 5) return r5;
    throw InvalidParameter("no triangle quadrature rule of degree " + std::to_string(degree));
}

} // namespace egfem
