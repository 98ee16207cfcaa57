#include "zetaval/suites.hpp"

#include <array>
#include <atomic>
#include <functional>
#include <thread>

#include "zetaval/bernoulli.hpp"
#include "zetaval/congruence.hpp"
#include "zetaval/dirichlet.hpp"
#include "zetaval/errors.hpp"
#include "zetaval/lvalues.hpp"
#include "zetaval/padic.hpp"
#include "zetaval/sums.hpp"

namespace zetaval {

namespace {

constexpr std::array<std::string_view, 9> names{
    "hurwitz-integral", "proof-identities", "sums-oracle",  "lfunction-routes", "chi4",
    "parity-integral",  "prop-a1",          "euler-props", "bernoulli-props",
};

// Runs fn(0..count-1) on up to `jobs` threads and merges the partial reports
// in index order, so the output does not depend on scheduling.
VerificationReport gather(std::string suite, std::size_t count, unsigned jobs,
                          const std::function<VerificationReport(std::size_t)>& fn)
{
    std::vector<VerificationReport> parts(count);
    const unsigned workers = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            parts[i] = fn(i);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    parts[i] = fn(i);
                }
            });
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    VerificationReport report(std::move(suite));
    for (const auto& p : parts) {
        report.merge(p);
    }
    return report;
}

std::vector<Rational> offsets_or(const SuiteParams& params, std::vector<Rational> fallback)
{
    return params.a_set.empty() ? std::move(fallback) : params.a_set;
}

std::vector<RealCharacter> characters_or(const SuiteParams& params, std::initializer_list<std::uint64_t> fallback)
{
    std::vector<std::uint64_t> ids = params.primes.empty() ? std::vector<std::uint64_t>(fallback) : params.primes;
    std::vector<RealCharacter> out;
    out.reserve(ids.size());
    for (auto p : ids) {
        out.push_back(p == 4 ? chi4() : quadratic_character(p));
    }
    return out;
}

std::string nparam(std::size_t n)
{
    return "n=" + std::to_string(n);
}

// 200 equally spaced interior points i/201.
std::vector<Rational> interior_samples()
{
    std::vector<Rational> xs;
    xs.reserve(200);
    for (long i = 1; i <= 200; ++i) {
        xs.emplace_back(i, 201L);
    }
    return xs;
}

template <class S>
void check_character_routes(VerificationReport& report, const DirichletCharacter<S>& chi, std::size_t n)
{
    const std::string params = chi.label() + " " + nparam(n);
    const S closed = l_neg(chi, n);
    const Polynomial<S> s = s_n_chi(chi, n);
    report.check_true("S_{n,chi} is constant", params, s.is_constant(), s.to_string());
    report.check("L(-n,chi) = S_{n,chi}", params, closed, s.evaluate(Rational(0)));
    report.check("L(-n,chi) = int_0^1 S_{n,chi}", params, closed, l_neg_integral(chi, n));
    report.check("L(-n,chi) = k^n sum chi(r) zeta(-n,r/k)", params, closed, l_neg_hurwitz(chi, n));
}

} // namespace

std::span<const std::string_view> suite_names()
{
    return names;
}

std::vector<Rational> default_offset_grid()
{
    return {Rational(1),       Rational(1L, 2L), Rational(1L, 3L), Rational(2L, 3L),
            Rational(1L, 4L),  Rational(3L, 4L), Rational(1L, 5L), Rational(1L, 7L)};
}

VerificationReport suite_hurwitz_integral(const SuiteParams& params)
{
    const std::size_t n_max = params.n_max.value_or(30);
    const std::vector<Rational> offsets = offsets_or(params, default_offset_grid());
    VerificationReport report = gather("hurwitz-integral", n_max + 1, params.jobs, [&](std::size_t n) {
        VerificationReport part;
        for (const auto& a : offsets) {
            part.check("zeta(-n,a) = int S_{n,a}", nparam(n) + " a=" + a.to_string(), hurwitz_neg(n, a),
                       hurwitz_neg_integral(n, a));
        }
        part.check("zeta(-n) = int_0^1 S_n", nparam(n), riemann_neg(n), riemann_neg_integral(n));
        if (n >= 2 && n % 2 == 0) {
            part.check("zeta(-n) = 0 for even n", nparam(n), riemann_neg(n), Rational(0));
            part.check("int_0^1/2 S_n closed form", nparam(n), even_n_half_integral(n),
                       even_n_half_integral_closed_form(n));
        }
        return part;
    });

    // Odd values as signed areas of phi_k, which keeps one sign on (0,1).
    const std::vector<Rational> xs = interior_samples();
    for (std::size_t k = 0; k <= std::min<std::size_t>(10, n_max); ++k) {
        const RationalPolynomial phi = signed_area_integrand(k);
        bool positive = true;
        for (const auto& x : xs) {
            positive = positive && phi.evaluate(x).sign() > 0;
        }
        const std::string params_k = "k=" + std::to_string(k);
        report.check_true("phi_k > 0 on 200 interior samples", params_k, positive);
        const Rational sign = (k % 2 == 0) ? Rational(-1) : Rational(1);
        report.check("zeta(-2k-1) = (-1)^{k+1} int_0^1 phi_k", params_k, riemann_neg(2 * k + 1),
                     sign * phi.integrate(Rational(0), Rational(1)));
        report.check("zeta(-2k-1) = -B_{2k+2}/(2k+2)", params_k, riemann_neg(2 * k + 1),
                     -bernoulli_number(2 * k + 2) / Rational(static_cast<unsigned long>(2 * k + 2)));
    }
    return report;
}

VerificationReport suite_proof_identities(const SuiteParams& params)
{
    const std::size_t n_max = params.n_max.value_or(30);
    const std::vector<Rational> offsets = offsets_or(params, default_offset_grid());
    return gather("proof-identities", offsets.size(), params.jobs, [&](std::size_t i) {
        return verify_proof_identities(n_max, std::span<const Rational>(&offsets[i], 1));
    });
}

VerificationReport suite_sums_oracle(const SuiteParams& params)
{
    const std::size_t n_max = params.n_max.value_or(12);
    const std::vector<Rational> offsets = offsets_or(
        params, {Rational(1), Rational(1L, 2L), Rational(1L, 3L), Rational(1L, 4L), Rational(2L, 3L), Rational(3L, 4L)});
    VerificationReport report = gather("sums-oracle", n_max + 1, params.jobs, [&](std::size_t n) {
        VerificationReport part;
        for (const auto& a : offsets) {
            const PartialSumSpec spec(n, a);
            const RationalPolynomial closed = s_na(spec);
            const std::string pa = nparam(n) + " a=" + a.to_string();
            part.check("S_{n,a} closed form = recursive construction", pa, closed, s_na_recursive(spec));
            part.check_true("deg S_{n,a} = n+1", pa, closed.degree() == static_cast<int>(n + 1));
            Rational brute;
            for (long m = 2; m <= 12; ++m) {
                brute += (Rational(m - 2) + a).pow(static_cast<long>(n));
                part.check("S_{n,a}(M) = sum_{k=0}^{M-2} (k+a)^n", pa + " M=" + std::to_string(m),
                           closed.evaluate(Rational(m)), brute);
            }
        }
        return part;
    });
    const std::size_t sym_max = std::max<std::size_t>(40, n_max);
    // S_0(x) = x - 1, so the two boundary properties start at n = 1.
    const RationalPolynomial s0 = s_n(0);
    report.check("S_0(x) + S_0(1-x) = -1", nparam(0), s0 + s0.scale_argument(Rational(-1)).shift(Rational(-1)),
                 RationalPolynomial{Rational(-1)});
    report.check("S_0(0) = -1", nparam(0), s0.evaluate(Rational(0)), Rational(-1));
    report.check("S_0 closed form = telescoping construction", nparam(0), s0, s_n_telescoping(0));
    for (std::size_t n = 1; n <= sym_max; ++n) {
        const RationalPolynomial s = s_n(n);
        const RationalPolynomial reflected = s.scale_argument(Rational(-1)).shift(Rational(-1));
        const Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
        report.check("S_n(x) + (-1)^n S_n(1-x) = 0", nparam(n), s + reflected * sign, RationalPolynomial{});
        report.check("S_n(0) = S_n(1) = 0", nparam(n), s.evaluate(Rational(0)) + s.evaluate(Rational(1)).abs(),
                     Rational(0));
        report.check("S_n closed form = telescoping construction", nparam(n), s, s_n_telescoping(n));
        report.check("S_n(x+1) - S_n(x) = x^n", nparam(n), s.shift(Rational(1)) - s,
                     RationalPolynomial::monomial({}, n, Rational(1)));
    }
    return report;
}

VerificationReport suite_lfunction_routes(const SuiteParams& params)
{
    const std::size_t n_max = params.n_max.value_or(12);
    const std::vector<RealCharacter> chars = characters_or(params, {3, 4, 5, 7, 11});
    VerificationReport report = gather("lfunction-routes", chars.size(), params.jobs, [&](std::size_t i) {
        VerificationReport part;
        const RealCharacter& chi = chars[i];
        const auto k = static_cast<long>(chi.modulus());
        for (std::size_t n = 0; n <= n_max; ++n) {
            check_character_routes(part, chi, n);
            if (parity_matches(chi, n)) {
                part.check("L(-n,chi) = int_{-1/2}^{1/2} P_{n,chi}", chi.label() + " " + nparam(n), l_neg(chi, n),
                           l_neg_via_p(chi, n));
            }
            const RationalPolynomial p = p_n_chi(chi, n);
            part.check("P_{n,chi}(0) = 0", chi.label() + " " + nparam(n), p.evaluate(Rational(0)), Rational(0));
            Rational brute;
            for (long m = 1; m <= 6; ++m) {
                for (long r = (m - 1) * k + 1; r <= m * k; ++r) {
                    brute += chi(r) * Rational(r).pow(static_cast<long>(n));
                }
                part.check("P_{n,chi}(M) = sum_{r<=Mk} chi(r) r^n",
                           chi.label() + " " + nparam(n) + " M=" + std::to_string(m), p.evaluate(Rational(m)), brute);
            }
        }
        return part;
    });

    // Twisted values: three routes and the a = 1 reduction.
    const std::vector<RealCharacter> twisted_chars = characters_or(params, {3, 4, 5});
    const std::vector<Rational> offsets =
        offsets_or(params, {Rational(1), Rational(1L, 2L), Rational(1L, 3L), Rational(3L, 4L)});
    const std::size_t twisted_max = std::min<std::size_t>(n_max, 10);
    for (const auto& chi : twisted_chars) {
        if (!chi.is_primitive()) {
            continue;
        }
        for (std::size_t n = 0; n <= twisted_max; ++n) {
            for (const auto& a : offsets) {
                const std::string pa = chi.label() + " " + nparam(n) + " a=" + a.to_string();
                const Rational closed = twisted_l_neg(chi, n, a);
                report.check("L(-n,a,chi) closed form = Hurwitz sum", pa, closed, twisted_l_neg_hurwitz(chi, n, a));
                report.check("L(-n,a,chi) closed form = int_0^1 S_{n,a,chi}", pa, closed,
                             twisted_l_neg_integral(chi, n, a));
            }
            report.check("L(-n,1,chi) = L(-n,chi)", chi.label() + " " + nparam(n), twisted_l_neg(chi, n, Rational(1)),
                         l_neg(chi, n));
        }
    }

    // Non-real characters: quartic mod 5 and cubic mod 7.
    for (const auto& [p, m] : {std::pair<std::uint64_t, unsigned long>{5, 4}, {7, 3}, {13, 6}}) {
        const CyclotomicCharacter chi = power_residue_character(p, m);
        for (std::size_t n = 0; n <= std::min<std::size_t>(n_max, 8); ++n) {
            check_character_routes(report, chi, n);
            report.check("L(-n,1,chi) = L(-n,chi)", chi.label() + " " + nparam(n),
                         twisted_l_neg(chi, n, Rational(1)), l_neg(chi, n));
            report.check("L(-n,a,chi) closed form = Hurwitz sum", chi.label() + " " + nparam(n) + " a=1/3",
                         twisted_l_neg(chi, n, Rational(1L, 3L)), twisted_l_neg_hurwitz(chi, n, Rational(1L, 3L)));
        }
    }
    return report;
}

VerificationReport suite_chi4(const SuiteParams& params)
{
    const std::size_t n_max = params.n_max.value_or(12);
    VerificationReport report("chi4");
    const RealCharacter chi = chi4();
    for (std::size_t n = 1; n <= n_max; ++n) {
        const Rational l = l_neg(chi, n);
        report.check("first representation = L(-n,chi4)", nparam(n), chi4_first_rep(n), l);
        report.check("second representation = L(-n,chi4)", nparam(n), chi4_second_rep(n), l);
        report.check("L(-n,chi4) = E_{1,n}/2", nparam(n), chi4_euler_number_half(n), l);
        if (n % 2 == 0) {
            report.check("L(-n,chi4) = (4^{n+1}/2) zeta(-n,1/4)", nparam(n), chi4_scaled_hurwitz(n), l);
        }
    }
    report.check("second representation at n=0 = E_{1,0}/2", nparam(0), chi4_second_rep(0), chi4_euler_number_half(0));
    report.check("second representation at n=0", nparam(0), chi4_second_rep(0), Rational(1L, 2L));
    report.check("L(-2,chi4) worked example", nparam(2), chi4_first_rep(2), Rational(-1L, 2L));
    report.check("L(-2,chi4) worked example (closed form)", nparam(2), l_neg(chi, 2), Rational(-1L, 2L));

    const EulerParameter<Rational> one(Rational(1));
    for (std::size_t n = 0; n <= std::max<std::size_t>(20, n_max); ++n) {
        report.check("int_0^2 E_{1,n} = 2/(n+1)", nparam(n), euler_poly(one, n).integrate(Rational(0), Rational(2)),
                     Rational(2L, static_cast<long>(n + 1)));
    }
    for (std::size_t n = 0; n <= 12; ++n) {
        const RationalPolynomial b = bernoulli_poly(2 * n + 1);
        report.check("B_{2n+1}(3/4) = -B_{2n+1}(1/4)", nparam(n), b.evaluate(Rational(3L, 4L)),
                     -b.evaluate(Rational(1L, 4L)));
    }
    for (std::size_t k = 1; k <= 6; ++k) {
        const std::string pk = "k=" + std::to_string(k);
        report.check("Lerch c=1 at a=1/2: 2^n zeta(-n,1/2,-1) = L(-n,chi4)", pk,
                     lerch_special(one, k, Rational(1L, 2L)) * Rational(2).pow(static_cast<long>(k - 1)),
                     l_neg(chi, k - 1));
    }
    return report;
}

VerificationReport suite_parity_integral(const SuiteParams& params)
{
    const std::size_t n_max = params.n_max.value_or(12);
    const std::vector<RealCharacter> chars = characters_or(params, {3, 4, 5, 7, 11, 13, 17, 19, 23});
    return gather("parity-integral", chars.size(), params.jobs, [&](std::size_t i) {
        VerificationReport part;
        const RealCharacter& chi = chars[i];
        const Rational k(chi.modulus());
        for (std::size_t n = 0; n <= n_max + 1; ++n) {
            const std::string pn = chi.label() + " " + nparam(n);
            const RationalPolynomial b = generalized_bernoulli_poly(chi, n);
            if (!parity_matches(chi, n)) {
                part.check("B_{n,chi} = 0 for opposite parity", pn, b.evaluate(Rational(0)), Rational(0));
            } else {
                part.check("B_{n,chi}(k/2) = B_{n,chi}(-k/2)", pn, b.evaluate(k / Rational(2)),
                           b.evaluate(-k / Rational(2)));
                if (n <= n_max) {
                    part.check("int_{-1/2}^{1/2} P_{n,chi} = L(-n,chi)", pn, l_neg_via_p(chi, n), l_neg(chi, n));
                }
            }
            if (n >= 1) {
                RationalPolynomial rhs;
                for (long r = 1; r <= static_cast<long>(chi.modulus()); ++r) {
                    const RationalPolynomial lin{Rational(r), Rational(1)};
                    RationalPolynomial power{Rational(1)};
                    for (std::size_t e = 0; e + 1 < n; ++e) {
                        power *= lin;
                    }
                    rhs += power * chi(r);
                }
                part.check("B_{n,chi}(x+k) - B_{n,chi}(x) = n sum chi(r)(r+x)^{n-1}", pn, b.shift(k) - b,
                           rhs * Rational(static_cast<unsigned long>(n)));
            }
        }
        return part;
    });
}

VerificationReport suite_prop_a1(const SuiteParams& params)
{
    const std::size_t n_max = params.n_max.value_or(12);
    const std::vector<std::uint64_t> primes =
        params.primes.empty() ? std::vector<std::uint64_t>{3, 5, 7, 11, 13, 17, 19, 23} : params.primes;
    VerificationReport report = gather("prop-a1", primes.size(), params.jobs, [&](std::size_t i) {
        VerificationReport part;
        const std::uint64_t p = primes[i];
        for (const auto& v : check_prop_a1(p, n_max)) {
            part.check_true("Prop A.1 " + std::string(branch_name(v.branch)),
                            "p=" + std::to_string(p) + " " + nparam(v.n), v.holds, v.b_value.to_string());
        }
        const std::size_t half = (p - 1) / 2;
        const PropA1Verdict pole = check_prop_a1_at(p, half);
        part.check("vp(B_{(p-1)/2,chi}) = -1", "p=" + std::to_string(p), vp(pole.b_value, p).to_string(),
                   std::string("-1"));
        for (std::uint64_t r = 1; r <= 2 * (p - 1); ++r) {
            const std::uint64_t expected = r % (p - 1) == 0 ? p - 1 : 0;
            part.check("sum_{a<=p} a^r mod p", "p=" + std::to_string(p) + " r=" + std::to_string(r),
                       static_cast<long>(power_sum_mod_p(p, r)), static_cast<long>(expected));
        }
        for (std::size_t n = 0; n <= n_max; ++n) {
            part.check("sum chi(a) a^n = sum a^{n+(p-1)/2} (mod p)", "p=" + std::to_string(p) + " " + nparam(n),
                       static_cast<long>(twisted_power_sum_mod_p(p, n)),
                       static_cast<long>(power_sum_mod_p(p, n + (p - 1) / 2)));
        }
        return part;
    });
    for (std::uint64_t p : {3, 5, 7}) {
        for (std::size_t n = 0; n <= std::min<std::size_t>(n_max, 8); ++n) {
            report.merge(congruence_p2(p, n));
        }
    }
    return report;
}

VerificationReport suite_euler_props(const SuiteParams& params)
{
    const std::size_t n_max = params.n_max.value_or(40);
    VerificationReport report("euler-props");
    const std::vector<Rational> cs{Rational(1),       Rational(2),      Rational(1L, 3L),
                                   Rational(-1L, 2L), Rational(3L, 5L), Rational(-7L, 3L)};
    for (const auto& cv : cs) {
        const EulerParameter<Rational> c(cv);
        RationalPolynomial previous;
        for (std::size_t n = 0; n <= n_max; ++n) {
            const std::string pc = "c=" + cv.to_string() + " " + nparam(n);
            const RationalPolynomial e = euler_poly(c, n);
            report.check("E(t+1) + c E(t) = (1+c) t^n", pc, e.shift(Rational(1)) + e * cv,
                         RationalPolynomial::monomial({}, n, Rational(1) + cv));
            if (n == 0) {
                report.check("E_{c,0} = 1", pc, e, RationalPolynomial{Rational(1)});
            } else {
                report.check("E'_{c,n} = n E_{c,n-1}", pc, e.derivative(),
                             previous * Rational(static_cast<unsigned long>(n)));
            }
            report.check("E_{c,n} = 2^n E_{c,n}(1/2)", pc, euler_number(c, n),
                         e.evaluate(Rational(1L, 2L)) * Rational(2).pow(static_cast<long>(n)));
            previous = e;
        }
    }
    // c = 1 against the Bernoulli expression 2/(n+1) (B_{n+1}(x) - 2^{n+1} B_{n+1}(x/2)).
    const EulerParameter<Rational> one(Rational(1));
    for (std::size_t n = 0; n <= n_max; ++n) {
        const RationalPolynomial b = bernoulli_poly(n + 1);
        const RationalPolynomial classical =
            (b - b.scale_argument(Rational(1L, 2L)) * Rational(2).pow(static_cast<long>(n + 1))) *
            Rational(2L, static_cast<long>(n + 1));
        report.check("E_{1,n} = classical Euler polynomial", nparam(n), euler_poly(one, n), classical);
    }
    // A non-real parameter: c = zeta_3.
    const CyclotomicElement z3 = CyclotomicElement::generator(3);
    const EulerParameter<CyclotomicElement> cz(z3);
    for (std::size_t n = 0; n <= std::min<std::size_t>(n_max, 12); ++n) {
        const Polynomial<CyclotomicElement> e = euler_poly(cz, n);
        const CyclotomicElement one_plus_c = z3 + CyclotomicElement(3, Rational(1));
        report.check("E(t+1) + c E(t) = (1+c) t^n", "c=zeta3 " + nparam(n), e.shift(Rational(1)) + e * z3,
                     Polynomial<CyclotomicElement>::monomial(3, n, one_plus_c));
    }
    return report;
}

VerificationReport suite_bernoulli_props(const SuiteParams& params)
{
    const std::size_t n_max = params.n_max.value_or(40);
    VerificationReport report("bernoulli-props");
    BernoulliCache fresh;
    for (std::size_t n = 0; n <= n_max; ++n) {
        const std::string pn = nparam(n);
        const RationalPolynomial b = bernoulli_poly(n);
        report.check("cached B_n = freshly computed B_n", pn, bernoulli_number(n), fresh.get(n));
        report.check_true("B_n(x) monic of degree n", pn,
                          b.degree() == static_cast<int>(n) && b.coefficients().back() == Rational(1));
        if (n >= 1) {
            report.check("B_n(x+1) - B_n(x) = n x^{n-1}", pn, b.shift(Rational(1)) - b,
                         RationalPolynomial::monomial({}, n - 1, Rational(static_cast<unsigned long>(n))));
            report.check("B_n'(x) = n B_{n-1}(x)", pn, b.derivative(),
                         bernoulli_poly(n - 1) * Rational(static_cast<unsigned long>(n)));
        }
        const Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
        report.check("B_n(1-x) = (-1)^n B_n(x)", pn, b.scale_argument(Rational(-1)).shift(Rational(-1)), b * sign);
        report.check("B_n(1/2) = (2^{1-n} - 1) B_n", pn, b.evaluate(Rational(1L, 2L)),
                     (Rational(2).pow(1 - static_cast<long>(n)) - Rational(1)) * bernoulli_number(n));
        if (n >= 3 && n % 2 == 1) {
            report.check("B_n = 0 for odd n >= 3", pn, bernoulli_number(n), Rational(0));
            report.check("B_n(0) = 0", pn, b.evaluate(Rational(0)), Rational(0));
            report.check("B_n(1) = 0", pn, b.evaluate(Rational(1)), Rational(0));
            report.check("B_n(1/2) = 0", pn, b.evaluate(Rational(1L, 2L)), Rational(0));
        }
    }
    const std::array<Rational, 5> basel{Rational(1L, 6L), Rational(1L, 90L), Rational(1L, 945L), Rational(1L, 9450L),
                                        Rational(1L, 93555L)};
    for (std::size_t n = 1; n <= basel.size(); ++n) {
        const PiPower z = zeta_even_positive(n);
        report.check("zeta(2n) / pi^{2n}", nparam(n), z.coefficient, basel[n - 1]);
        report.check_true("zeta(2n) power", nparam(n), z.power == 2 * n);
    }
    return report;
}

VerificationReport run_suite(std::string_view name, const SuiteParams& params)
{
    if (name == "hurwitz-integral") {
        return suite_hurwitz_integral(params);
    }
    if (name == "proof-identities") {
        return suite_proof_identities(params);
    }
    if (name == "sums-oracle") {
        return suite_sums_oracle(params);
    }
    if (name == "lfunction-routes") {
        return suite_lfunction_routes(params);
    }
    if (name == "chi4") {
        return suite_chi4(params);
    }
    if (name == "parity-integral") {
        return suite_parity_integral(params);
    }
    if (name == "prop-a1") {
        return suite_prop_a1(params);
    }
    if (name == "euler-props") {
        return suite_euler_props(params);
    }
    if (name == "bernoulli-props") {
        return suite_bernoulli_props(params);
    }
    throw DomainError("unknown suite '" + std::string(name) + "'");
}

} // namespace zetaval
