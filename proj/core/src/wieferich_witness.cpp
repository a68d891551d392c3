#include "pureorder/wieferich_witness.hpp"

#include <sstream>

namespace pureorder {

CompanionMatrix companion_matrix(unsigned p, const ZZ& a)
{
    CompanionMatrix cm;
    cm.p = p;
    cm.a = a;
    cm.m = ZMat(p, p);
    ZZ ap;
    mpz_pow_ui(ap.get_mpz_t(), a.get_mpz_t(), p);
    cm.m.at(0, p - 1) = a - ap;
    for (unsigned i = 1; i < p; i++) {
        cm.m.at(i, i - 1) = 1;
        ZZ bin, apow;
        mpz_bin_uiui(bin.get_mpz_t(), p, i);
        mpz_pow_ui(apow.get_mpz_t(), a.get_mpz_t(), p - i);
        cm.m.at(i, p - 1) = -bin * apow;
    }
    return cm;
}

bool StructureReport::all_pass() const
{
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

namespace {

void require_wieferich(unsigned p, const ZZ& a, const char* who)
{
    if (a == 0 || mpz_divisible_ui_p(a.get_mpz_t(), p) ||
        !is_wieferich(ZZ(p), a))
        throw NotWieferich(std::string(who) +
                           ": p is not a Wieferich prime to base a");
}

[[noreturn]] void violation(unsigned p, const ZZ& a, unsigned k,
                            unsigned i, unsigned j, const std::string& what,
                            const ZZ& got)
{
    std::ostringstream os;
    os << "matrix_power_structure: entry (" << i << "," << j << ") of M^" << k
       << " for p=" << p << ", a=" << a.get_str() << " violates " << what
       << " (value " << got.get_str() << ")";
    throw CongruenceViolation(os.str());
}

ZZ binom_term(unsigned p, unsigned l, const ZZ& a)
{
    ZZ bin, apow;
    mpz_bin_uiui(bin.get_mpz_t(), p, l);
    mpz_pow_ui(apow.get_mpz_t(), a.get_mpz_t(), p - l);
    return -bin * apow;
}

bool congruent(const ZZ& x, const ZZ& y, const ZZ& mod)
{
    return mpz_divisible_p(ZZ(x - y).get_mpz_t(), mod.get_mpz_t());
}

} // namespace

StructureReport matrix_power_structure(unsigned p, const ZZ& a, unsigned k)
{
    if (k < 1 || k > p - 1)
        throw std::invalid_argument(
            "matrix_power_structure: k must lie in [1, p-1]");
    require_wieferich(p, a, "matrix_power_structure");

    const ZMat mk = pow(companion_matrix(p, a).m, k);
    auto entry = [&](unsigned i, unsigned j) -> const ZZ& {
        return mk.at(i - 1, j - 1);
    };
    const ZZ pz = p;
    const ZZ p2 = pz * pz;
    const ZZ p3 = p2 * pz;
    ZZ ap;
    mpz_pow_ui(ap.get_mpz_t(), a.get_mpz_t(), p);
    const ZZ m1 = a - ap;          // a - a^p
    const ZZ row1_div = pz * m1;   // divides the late first-row entries

    StructureReport rep;
    rep.p = p;
    rep.a = a;
    rep.k = k;
    unsigned n;

    // shifted identity block in the first p-k columns
    n = 0;
    for (unsigned i = 1; i <= p; i++)
        for (unsigned j = 1; j + k <= p; j++, n++) {
            const ZZ want = (i == j + k) ? 1 : 0;
            if (entry(i, j) != want)
                violation(p, a, k, i, j, "the shifted identity block",
                          entry(i, j));
        }
    rep.checks.push_back({"identity_block", true, std::to_string(n) + " entries"});

    // first row: the copied last column of M and divisibility by p(a - a^p)
    if (entry(1, p + 1 - k) != m1)
        violation(p, a, k, 1, p + 1 - k, "first-row value a - a^p",
                  entry(1, p + 1 - k));
    n = 1;
    for (unsigned j = (k >= 2 ? p + 2 - k : p + 1); j <= p; j++, n++)
        if (!mpz_divisible_p(entry(1, j).get_mpz_t(), row1_div.get_mpz_t()))
            violation(p, a, k, 1, j, "first-row divisibility by p(a - a^p)",
                      entry(1, j));
    rep.checks.push_back({"first_row", true, std::to_string(n) + " entries"});

    // vanishing region mod p^2
    n = 0;
    for (unsigned i = 2; i <= p; i++)
        for (unsigned j = (p + i > k ? p + i - k : 1); j <= p; j++, n++)
            if (!mpz_divisible_p(entry(i, j).get_mpz_t(), p2.get_mpz_t()))
                violation(p, a, k, i, j, "vanishing mod p^2", entry(i, j));
    rep.checks.push_back({"vanishing_mod_p2", true,
                          std::to_string(n) + " entries"});

    // binomial congruence region mod p^2
    n = 0;
    for (unsigned i = 2; i <= p; i++) {
        const unsigned jlo = p - k + 1;
        const unsigned jhi = std::min(p, p - k + i - 1);
        for (unsigned j = jlo; j <= jhi; j++, n++) {
            const unsigned l = i - (j - (p - k));
            if (!congruent(entry(i, j), binom_term(p, l, a), p2))
                violation(p, a, k, i, j, "the binomial congruence mod p^2",
                          entry(i, j));
        }
    }
    rep.checks.push_back({"binomial_region", true,
                          std::to_string(n) + " entries"});

    // the -p band mod p^2
    n = 0;
    for (unsigned i = 2; i <= std::min(k + 1, p); i++, n++) {
        const unsigned j = p + (i - 1) - k;
        if (!congruent(entry(i, j), ZZ(-pz), p2))
            violation(p, a, k, i, j, "the -p band mod p^2", entry(i, j));
    }
    rep.checks.push_back({"minus_p_band", true, std::to_string(n) + " entries"});

    // entry (2, p) stays nonzero mod p^3 for p >= 5, k >= 3
    if (p >= 5 && k >= 3) {
        const bool ok = !mpz_divisible_p(entry(2, p).get_mpz_t(), p3.get_mpz_t());
        if (!ok)
            violation(p, a, k, 2, p, "nonvanishing of (2, p) mod p^3",
                      entry(2, p));
        rep.checks.push_back({"entry_2p_mod_p3", true, "1 entry"});
    }

    // for k = p-1 the whole matrix has a known shape mod p^2
    if (k == p - 1) {
        n = 0;
        for (unsigned i = 1; i <= p; i++)
            for (unsigned j = 1; j <= p; j++, n++) {
                if (j == 1) {
                    const ZZ want = (i == p) ? 1 : 0;
                    if (entry(i, j) != want)
                        violation(p, a, k, i, j, "the first column shape",
                                  entry(i, j));
                    continue;
                }
                ZZ want;
                if (i == 1)
                    want = 0;
                else if (j > i)
                    want = 0;
                else if (j == i)
                    want = -pz;
                else
                    want = binom_term(p, i - j + 1, a);
                if (!congruent(entry(i, j), want, p2))
                    violation(p, a, k, i, j, "the full shape mod p^2",
                              entry(i, j));
            }
        rep.checks.push_back({"full_shape_mod_p2", true,
                              std::to_string(n) + " entries"});
    }
    return rep;
}

ChiReport chi_of_beta_prime(unsigned p, const ZZ& a)
{
    require_wieferich(p, a, "chi_of_beta_prime");
    ChiReport rep;
    rep.p = p;
    rep.a = a;

    const ZMat n = pow(companion_matrix(p, a).m, p - 1);
    const auto chi = charpoly_scaled(n, ZZ(p));
    if (!chi)
        throw NonIntegralCharPoly(
            "chi_of_beta_prime: characteristic polynomial of beta' is not "
            "integral");
    rep.chi = *chi;

    // chi == X (X+1)^(p-1) mod p
    const ZZ pz = p;
    ModPoly xp1(pz, {ZZ(1), ZZ(1)});
    ModPoly target = ModPoly::x(pz);
    for (unsigned i = 0; i + 1 < p; i++)
        target = mul(target, xp1);
    rep.congruence_ok = ModPoly::from_int_poly(rep.chi, pz) == target;

    rep.chi_minus1 = rep.chi.eval(ZZ(-1));
    rep.p_maximal_zbetaprime =
        !mpz_divisible_p(rep.chi_minus1.get_mpz_t(), ZZ(pz * pz).get_mpz_t());
    return rep;
}

PMaximalFactor p_maximal_factor(unsigned p, const ZZ& a)
{
    require_wieferich(p, a, "p_maximal_factor");
    const IntPoly minpoly = IntPoly::power_minus(p, a);
    const AlgebraicElement alpha = AlgebraicElement::alpha_power(p, 1);
    const AlgebraicElement beta =
        sub(alpha, AlgebraicElement::from_integer(p, a));
    const AlgebraicElement bp =
        scale(element_pow(beta, p - 1, minpoly), ZZ(1), ZZ(p));

    PMaximalFactor f;
    f.generators.push_back(bp);
    f.lattice = order_from_element_powers(minpoly, bp);
    if (p == 3) {
        f.generators.push_back(alpha);
        f.lattice =
            product_order(f.lattice, power_basis_order(minpoly));
    }
    f.verified = is_q_maximal(f.lattice, ZZ(p));
    return f;
}

} // namespace pureorder
