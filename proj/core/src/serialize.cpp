#include "pureorder/serialize.hpp"

#include <sstream>

namespace pureorder {

namespace {

json zz(const ZZ& v)
{
    return v.get_str();
}

json zz(unsigned long v)
{
    return std::to_string(v);
}

json coeff_array(const std::vector<ZZ>& c)
{
    json a = json::array();
    for (const auto& v : c)
        a.push_back(zz(v));
    return a;
}

} // namespace

json to_json(const Factorization& f)
{
    json factors = json::array();
    for (const auto& [q, e] : f.factors)
        factors.push_back(json::array({zz(q), zz(e)}));
    return {{"sign", zz(ZZ(f.sign))},
            {"factors", factors},
            {"value", zz(f.value())}};
}

json to_json(const IntPoly& f)
{
    return coeff_array(f.c);
}

json to_json(const ModPoly& f)
{
    return {{"modulus", zz(f.q)}, {"coeffs", coeff_array(f.c)}};
}

json to_json(const AlgebraicElement& x)
{
    return {{"num", coeff_array(x.num)}, {"den", zz(x.den)}};
}

json to_json(const OrderLattice& o)
{
    json rows = json::array();
    for (std::size_t i = 0; i < o.basis.rows; i++) {
        json row = json::array();
        for (std::size_t j = 0; j < o.basis.cols; j++)
            row.push_back(zz(o.basis.at(i, j)));
        rows.push_back(row);
    }
    return {{"p", zz(static_cast<unsigned long>(o.degree()))},
            {"minpoly", to_json(o.minpoly)},
            {"denom", zz(o.denom)},
            {"basis", rows}};
}

json to_json(const PureField& f)
{
    json primes = json::array();
    for (std::size_t j = 0; j < f.num_primes(); j++)
        primes.push_back({{"q", zz(f.prime(j))},
                          {"e", zz(f.exponent(j))},
                          {"u", zz(f.u[j])},
                          {"v", zz(f.v[j])},
                          {"c", zz(f.c[j])}});
    return {{"p", zz(f.p)},
            {"a_input", zz(f.a_input)},
            {"a", zz(f.a)},
            {"scale", zz(f.scale)},
            {"generator_flipped", f.generator_flipped},
            {"wieferich", f.wieferich},
            {"primes", primes}};
}

json to_json(const DedekindReport& r)
{
    json j{{"q", zz(r.q)},
           {"t", to_json(r.t)},
           {"g", to_json(r.g)},
           {"h", to_json(r.h)},
           {"f", to_json(r.f)},
           {"gcd_fgh", to_json(r.gcd_fgh)},
           {"m", zz(r.m)},
           {"q_maximal", r.q_maximal}};
    if (r.u)
        j["u"] = to_json(*r.u);
    return j;
}

json to_json(const MaxOrderResult& r)
{
    json factors = json::array();
    for (const auto& f : r.factors)
        factors.push_back({{"name", f.name},
                           {"generator", to_json(f.gen)},
                           {"disc", zz(discriminant(f.lattice))}});
    json basis = json::array();
    for (const auto& b : r.basis)
        basis.push_back({{"name", b.name}, {"element", to_json(b.elem)}});
    return {{"field", to_json(r.field)},
            {"order", to_json(r.order)},
            {"factors", factors},
            {"basis", basis},
            {"disc", to_json(r.disc)},
            {"x_exponent", zz(r.x_exponent)}};
}

json to_json(const ChiReport& r)
{
    return {{"p", zz(r.p)},
            {"a", zz(r.a)},
            {"chi", to_json(r.chi)},
            {"chi_minus1", zz(r.chi_minus1)},
            {"congruence_ok", r.congruence_ok},
            {"p_maximal_zbetaprime", r.p_maximal_zbetaprime}};
}

json to_json(const StructureReport& r)
{
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass},
                          {"detail", c.detail}});
    return {{"p", zz(r.p)},
            {"a", zz(r.a)},
            {"k", zz(r.k)},
            {"checks", checks},
            {"pass", r.all_pass()}};
}

json to_json(const MonogeneityVerdict& v)
{
    const char* status = nullptr;
    switch (v.status) {
    case MonoStatus::Monogenic: status = "monogenic"; break;
    case MonoStatus::NotMonogenicWithinBound:
        status = "not_monogenic_within_bound";
        break;
    case MonoStatus::CriterionInapplicable:
        status = "criterion_inapplicable";
        break;
    }
    json j{{"status", status}, {"bound", zz(v.bound)}};
    if (!v.equation.empty())
        j["equation"] = v.equation;
    if (v.generator)
        j["generator"] = {{"name", v.generator->name},
                          {"element", to_json(v.generator->elem)}};
    json sols = json::array();
    for (const auto& [x, y] : v.solutions)
        sols.push_back(json::array({zz(x), zz(y)}));
    j["solutions"] = sols;
    return j;
}

json to_json(const AuditReport& r)
{
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass},
                          {"detail", c.detail}});
    return {{"field", r.field_id}, {"checks", checks}, {"pass", r.pass}};
}

std::string to_string(const Factorization& f)
{
    std::ostringstream os;
    if (f.sign < 0)
        os << "-";
    if (f.factors.empty()) {
        os << "1";
        return os.str();
    }
    bool first = true;
    for (const auto& [q, e] : f.factors) {
        if (!first)
            os << " * ";
        first = false;
        os << q.get_str();
        if (e > 1)
            os << "^" << e;
    }
    return os.str();
}

std::string radical_name(const PureField& f)
{
    std::ostringstream os;
    if (f.generator_flipped)
        os << "-";
    os << f.a.get_str() << "^(1/" << f.p << ")";
    return os.str();
}

} // namespace pureorder
