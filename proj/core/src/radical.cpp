#include "pureorder/radical.hpp"

#include <map>
#include <sstream>

namespace pureorder {

PureField normalize_field(unsigned p, const ZZ& a, const FactorBudget& budget)
{
    if (p < 3 || p % 2 == 0 || !is_probable_prime(ZZ(p)))
        throw DegreeNotOddPrime("normalize_field: degree must be an odd prime");
    if (a == 0 || a == 1 || a == -1)
        throw ReducibleDefiningPoly(
            "normalize_field: base must not be 0 or a unit");

    PureField f;
    f.p = p;
    f.a_input = a;
    try {
        auto [core, s] = pth_power_free(a, p, budget);
        f.a = abs(core);
        f.scale = s;
    } catch (const PerfectPower&) {
        throw ReducibleDefiningPoly(
            "normalize_field: base is a perfect p-th power, X^p - a splits");
    }
    f.generator_flipped = a < 0;
    f.fact = factorize(f.a, budget);

    const bool p_divides_a = mpz_divisible_ui_p(f.a.get_mpz_t(), p);
    f.wieferich = !p_divides_a && is_wieferich(ZZ(p), f.a);

    ZZ prime_product = 1;
    for (std::size_t j = 0; j < f.num_primes(); j++) {
        const unsigned e = f.exponent(j);
        // u = e^(-1) mod p lifted into [1, p-1]
        ZZ uz;
        if (!mpz_invert(uz.get_mpz_t(), ZZ(e).get_mpz_t(), ZZ(p).get_mpz_t()))
            throw ConsistencyError("normalize_field: exponent not invertible");
        const unsigned u = static_cast<unsigned>(uz.get_ui());
        const unsigned v = (e * u - 1) / p;
        f.u.push_back(u);
        f.v.push_back(v);
        // c_j = q_j * prod_{i != j} q_i^(e_i u_j)
        ZZ c = f.prime(j);
        for (std::size_t i = 0; i < f.num_primes(); i++) {
            if (i == j)
                continue;
            ZZ t;
            mpz_pow_ui(t.get_mpz_t(), f.prime(i).get_mpz_t(),
                       static_cast<unsigned long>(f.exponent(i)) * u);
            c *= t;
        }
        f.c.push_back(c);
        prime_product *= f.prime(j);
    }

    // structural cross-checks on the derived data
    ZZ g = 0;
    for (std::size_t j = 0; j < f.num_primes(); j++) {
        if ((static_cast<unsigned long>(f.exponent(j)) * f.u[j] -
             1) != static_cast<unsigned long>(p) * f.v[j])
            throw ConsistencyError("normalize_field: e*u - p*v != 1");
        if ((f.exponent(j) == 1) != (f.u[j] == 1 && f.v[j] == 0))
            throw ConsistencyError("normalize_field: trivial-exponent case");
        g = gcd(g, f.c[j]);
    }
    if (f.num_primes() && g != prime_product)
        throw ConsistencyError(
            "normalize_field: gcd of the c_j differs from prod q_j");
    return f;
}

std::vector<AlgebraicElement> gamma_generators(const PureField& field)
{
    const IntPoly t = field.minpoly();
    std::vector<AlgebraicElement> gens;
    for (std::size_t j = 0; j < field.num_primes(); j++) {
        ZZ den;
        mpz_pow_ui(den.get_mpz_t(), field.prime(j).get_mpz_t(), field.v[j]);
        AlgebraicElement g = scale(
            AlgebraicElement::alpha_power(field.p, field.u[j]), ZZ(1), den);
        if (element_pow(g, field.p, t) !=
            AlgebraicElement::from_integer(field.p, field.c[j]))
            throw ConsistencyError("gamma_generators: gamma^p != c");
        gens.push_back(std::move(g));
    }
    return gens;
}

std::vector<MergedClass> merged_generators(const PureField& field)
{
    std::map<unsigned, MergedClass> classes;
    for (std::size_t j = 0; j < field.num_primes(); j++) {
        auto& cl = classes[field.exponent(j)];
        cl.e = field.exponent(j);
        cl.u = field.u[j];
        cl.members.push_back(j);
    }
    std::vector<MergedClass> out;
    for (auto& [e, cl] : classes) {
        ZZ den = 1;
        for (std::size_t j : cl.members) {
            ZZ t;
            mpz_pow_ui(t.get_mpz_t(), field.prime(j).get_mpz_t(), field.v[j]);
            den *= t;
        }
        cl.gen = scale(AlgebraicElement::alpha_power(field.p, cl.u), ZZ(1),
                       den);
        out.push_back(std::move(cl));
    }
    return out;
}

AlgebraicElement beta_prime(const PureField& field)
{
    const IntPoly t = field.minpoly();
    AlgebraicElement beta = sub(AlgebraicElement::alpha_power(field.p, 1),
                                AlgebraicElement::from_integer(field.p, field.a));
    return scale(element_pow(beta, field.p - 1, t), ZZ(1), ZZ(field.p));
}

std::vector<std::vector<unsigned>> t_exponent_table(const PureField& field)
{
    std::vector<std::vector<unsigned>> t(field.p);
    for (unsigned k = 0; k < field.p; k++) {
        t[k].resize(field.num_primes());
        for (std::size_t j = 0; j < field.num_primes(); j++)
            t[k][j] = k * field.exponent(j) / field.p;
    }
    return t;
}

namespace {

ZZ t_denominator(const PureField& field,
                 const std::vector<unsigned>& trow)
{
    ZZ d = 1;
    for (std::size_t j = 0; j < field.num_primes(); j++) {
        ZZ t;
        mpz_pow_ui(t.get_mpz_t(), field.prime(j).get_mpz_t(), trow[j]);
        d *= t;
    }
    return d;
}

std::string power_name(unsigned k, const ZZ& den)
{
    std::ostringstream os;
    if (k == 0)
        os << "1";
    else if (k == 1)
        os << "alpha";
    else
        os << "alpha^" << k;
    if (den != 1)
        os << "/" << den.get_str();
    return os.str();
}

std::string beta_prime_name(const PureField& field, const ZZ& extra_den)
{
    std::ostringstream os;
    os << "(alpha - " << field.a.get_str() << ")^" << field.p - 1 << "/"
       << ZZ(ZZ(field.p) * extra_den).get_str();
    return os.str();
}

} // namespace

std::vector<NamedElement> integral_basis(const PureField& field)
{
    const auto t = t_exponent_table(field);
    const IntPoly minpoly = field.minpoly();
    std::vector<NamedElement> basis;
    const unsigned last = field.p - 1;
    for (unsigned k = 0; k < field.p; k++) {
        const ZZ den = t_denominator(field, t[k]);
        if (k == last && field.wieferich) {
            AlgebraicElement beta =
                sub(AlgebraicElement::alpha_power(field.p, 1),
                    AlgebraicElement::from_integer(field.p, field.a));
            AlgebraicElement el = scale(element_pow(beta, last, minpoly),
                                        ZZ(1), ZZ(field.p) * den);
            basis.push_back({beta_prime_name(field, den), std::move(el)});
        } else {
            AlgebraicElement el = scale(
                AlgebraicElement::alpha_power(field.p, k), ZZ(1), den);
            basis.push_back({power_name(k, den), std::move(el)});
        }
    }
    return basis;
}

Factorization disc_formula(const PureField& field)
{
    Factorization d;
    d.sign = ((field.p - 1) / 2) % 2 ? -1 : 1;
    const unsigned x = field.wieferich ? field.p - 2 : field.p;
    std::map<ZZ, unsigned> exps;
    exps[ZZ(field.p)] += x;
    for (std::size_t j = 0; j < field.num_primes(); j++)
        exps[field.prime(j)] += field.p - 1;
    for (const auto& [q, e] : exps)
        d.factors.emplace_back(q, e);
    return d;
}

std::vector<AlgebraicElement> beta_prime_alternatives(const PureField& field)
{
    if (!field.wieferich)
        throw NotWieferichCase(
            "beta_prime_alternatives: p is not Wieferich to base a");
    const IntPoly t = field.minpoly();
    const auto gammas = gamma_generators(field);
    std::vector<AlgebraicElement> alts;
    for (std::size_t j = 0; j < gammas.size(); j++) {
        AlgebraicElement d = sub(
            gammas[j], AlgebraicElement::from_integer(field.p, field.c[j]));
        alts.push_back(
            scale(element_pow(d, field.p - 1, t), ZZ(1), ZZ(field.p)));
    }
    return alts;
}

MaxOrderResult assemble_max_order(const PureField& field)
{
    const IntPoly minpoly = field.minpoly();
    MaxOrderResult res;
    res.field = field;
    res.x_exponent = field.wieferich ? field.p - 2 : field.p;

    const auto gammas = gamma_generators(field);
    OrderLattice acc = power_basis_order(minpoly);
    bool have = false;
    for (std::size_t j = 0; j < gammas.size(); j++) {
        OrderLattice zg = order_from_element_powers(minpoly, gammas[j]);
        std::ostringstream name;
        name << "Z[" << to_string(gammas[j]) << "]";
        res.factors.push_back({name.str(), gammas[j], zg});
        acc = have ? product_order(acc, zg) : std::move(zg);
        have = true;
    }
    if (field.wieferich) {
        const AlgebraicElement bp = beta_prime(field);
        OrderLattice zbp = order_from_element_powers(minpoly, bp);
        std::ostringstream name;
        name << "Z[" << beta_prime_name(field, ZZ(1)) << "]";
        // Z[beta'] alone need not be 3-maximal; the p-maximal factor
        // for p = 3 is Z[beta'] * Z[alpha]
        if (field.p == 3) {
            zbp = product_order(zbp, power_basis_order(minpoly));
            name << "*Z[alpha]";
        }
        res.factors.push_back({name.str(), bp, zbp});
        acc = product_order(acc, zbp);
    }
    res.order = std::move(acc);

    // the explicit basis must span exactly the assembled order
    res.basis = integral_basis(field);
    std::vector<AlgebraicElement> belems;
    for (const auto& ne : res.basis)
        belems.push_back(ne.elem);
    if (hnf_from_generators(minpoly, belems) != res.order)
        throw ConsistencyError("assemble_max_order: explicit basis does not "
                               "span the product order");

    // and the closed discriminant form must match the trace Gram
    res.disc = disc_formula(field);
    if (discriminant(res.order) != res.disc.value())
        throw ConsistencyError("assemble_max_order: closed discriminant form "
                               "differs from the Gram determinant");
    return res;
}

} // namespace pureorder
