#include "pureorder/monogeneity.hpp"

#include <sstream>

#include "pureorder/dedekind.hpp"

namespace pureorder {

namespace {

bool exact_cube_root(const ZZ& x, ZZ& r)
{
    return mpz_root(r.get_mpz_t(), x.get_mpz_t(), 3) != 0;
}

// 0, 1, -1, 2, -2, ...
ZZ search_value(unsigned long step)
{
    const unsigned long half = (step + 1) / 2;
    return step % 2 ? ZZ(half) : ZZ(-static_cast<long>(half));
}

// solve for the cube term given the searched variable; returns the
// full solution pair when it exists
std::optional<std::pair<ZZ, ZZ>> solve_at(const ZZ& q1, const ZZ& q2,
                                          bool wieferich_branch, const ZZ& t2)
{
    if (!wieferich_branch) {
        // t1^3 q2 = 1 + t2^3 q1
        const ZZ num = 1 + t2 * t2 * t2 * q1;
        if (!mpz_divisible_p(num.get_mpz_t(), q2.get_mpz_t()))
            return std::nullopt;
        ZZ t1;
        if (!exact_cube_root(ZZ(num / q2), t1))
            return std::nullopt;
        return std::make_pair(t1, t2);
    }
    // (3 s1 - 2 s2 q1 q2)^3 q2 = 9 + s2^3 q1, then 3 s1 must split off
    const ZZ num = 9 + t2 * t2 * t2 * q1;
    if (!mpz_divisible_p(num.get_mpz_t(), q2.get_mpz_t()))
        return std::nullopt;
    ZZ w;
    if (!exact_cube_root(ZZ(num / q2), w))
        return std::nullopt;
    const ZZ three_s1 = w + 2 * t2 * q1 * q2;
    if (!mpz_divisible_ui_p(three_s1.get_mpz_t(), 3))
        return std::nullopt;
    return std::make_pair(ZZ(three_s1 / 3), t2);
}

std::string sign_term(const ZZ& coeff, const std::string& atom, bool lead)
{
    std::ostringstream os;
    if (coeff >= 0)
        os << (lead ? "" : " + ");
    else
        os << (lead ? "-" : " - ");
    const ZZ mag = abs(coeff);
    if (mag != 1)
        os << mag.get_str() << "*";
    os << atom;
    return os.str();
}

} // namespace

MonogeneityVerdict uniform_exponent_criterion(const PureField& field)
{
    MonogeneityVerdict v;
    v.bound = 0;
    for (std::size_t j = 1; j < field.num_primes(); j++)
        if (field.exponent(j) != field.exponent(0)) {
            v.status = MonoStatus::CriterionInapplicable;
            return v;
        }
    if (!dedekind_test(field.minpoly(), ZZ(field.p)).q_maximal) {
        v.status = MonoStatus::CriterionInapplicable;
        return v;
    }
    // all exponents share e, hence all primes share u; the merged
    // generator alpha^u / prod q_j^(v_j) generates the maximal order
    const auto classes = merged_generators(field);
    if (classes.size() != 1)
        throw ConsistencyError("uniform_exponent_criterion: expected a "
                               "single exponent class");
    const AlgebraicElement gen = classes[0].gen;
    const OrderLattice zg = order_from_element_powers(field.minpoly(), gen);
    if (zg != assemble_max_order(field).order)
        throw ConsistencyError("uniform_exponent_criterion: generator "
                               "verification failed");
    v.status = MonoStatus::Monogenic;
    v.generator = NamedElement{to_string(gen), gen};
    return v;
}

std::vector<std::pair<ZZ, ZZ>>
cubic_equation_solutions(const ZZ& q1, const ZZ& q2, bool wieferich_branch,
                         const ZZ& bound)
{
    std::vector<std::pair<ZZ, ZZ>> sols;
    for (unsigned long step = 0;; step++) {
        const ZZ t2 = search_value(step);
        if (abs(t2) > bound)
            break;
        if (auto s = solve_at(q1, q2, wieferich_branch, t2))
            sols.push_back(*s);
    }
    return sols;
}

MonogeneityVerdict cubic_mixed_search(const ZZ& q1, const ZZ& q2,
                                      const ZZ& bound,
                                      const FactorBudget& budget)
{
    if (q1 == q2 || !is_probable_prime(q1) || !is_probable_prime(q2))
        throw std::invalid_argument(
            "cubic_mixed_search: q1, q2 must be distinct primes");
    const PureField field = normalize_field(3, ZZ(q1 * q2 * q2), budget);
    const IntPoly minpoly = field.minpoly();
    const OrderLattice maximal = assemble_max_order(field).order;

    MonogeneityVerdict v;
    v.bound = bound;
    {
        std::ostringstream eq;
        if (!field.wieferich)
            eq << "t1^3*" << q2.get_str() << " - t2^3*" << q1.get_str()
               << " = 1";
        else
            eq << "(3*s1 - " << ZZ(2 * q1 * q2).get_str() << "*s2)^3*"
               << q2.get_str() << " - s2^3*" << q1.get_str() << " = 9";
        v.equation = eq.str();
    }

    for (unsigned long step = 0;; step++) {
        const ZZ t2 = search_value(step);
        if (abs(t2) > bound)
            break;
        const auto sol = solve_at(q1, q2, field.wieferich, t2);
        if (!sol)
            continue;
        const auto& [c1, c2] = *sol;

        AlgebraicElement gen = AlgebraicElement::zero(3);
        std::ostringstream name;
        if (!field.wieferich) {
            // eta = t1 alpha + t2 alpha^2/q2
            gen = add(scale(AlgebraicElement::alpha_power(3, 1), c1),
                      scale(AlgebraicElement::alpha_power(3, 2), c2, q2));
            name << sign_term(c1, "alpha", true)
                 << sign_term(c2, "alpha^2/" + q2.get_str(), false);
        } else {
            // theta = s1 alpha + s2 (alpha - a)^2 / (3 q2)
            AlgebraicElement beta2 = element_pow(
                sub(AlgebraicElement::alpha_power(3, 1),
                    AlgebraicElement::from_integer(3, field.a)),
                2, minpoly);
            gen = add(scale(AlgebraicElement::alpha_power(3, 1), c1),
                      scale(beta2, c2, ZZ(3 * q2)));
            name << sign_term(c1, "alpha", true)
                 << sign_term(c2,
                              "(alpha - " + field.a.get_str() + ")^2/" +
                                  ZZ(3 * q2).get_str(),
                              false);
        }
        if (order_from_element_powers(minpoly, gen) != maximal)
            throw ConsistencyError("cubic_mixed_search: equation solution "
                                   "does not generate the maximal order");
        v.status = MonoStatus::Monogenic;
        v.generator = NamedElement{name.str(), gen};
        v.solutions.push_back(*sol);
        return v;
    }
    v.status = MonoStatus::NotMonogenicWithinBound;
    return v;
}

} // namespace pureorder
