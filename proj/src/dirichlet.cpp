#include "zetaval/dirichlet.hpp"

#include <charconv>

#include "zetaval/padic.hpp"

namespace zetaval {

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod)
{
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp != 0) {
        if ((exp & 1U) != 0) {
            result = static_cast<std::uint64_t>(static_cast<unsigned __int128>(result) * base % mod);
        }
        base = static_cast<std::uint64_t>(static_cast<unsigned __int128>(base) * base % mod);
        exp >>= 1U;
    }
    return result;
}

void require_odd_prime(std::uint64_t p, const char* what)
{
    if (p < 3 || !is_prime(p)) {
        throw DomainError(std::string(what) + ": " + std::to_string(p) + " is not an odd prime");
    }
}

unsigned long parse_positive(std::string_view text, std::string_view literal)
{
    unsigned long value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || value == 0) {
        throw DomainError("bad character literal '" + std::string(literal) + "'");
    }
    return value;
}

} // namespace

RealCharacter quadratic_character(std::uint64_t p)
{
    require_odd_prime(p, "quadratic character");
    std::vector<Rational> values(p);
    for (std::uint64_t a = 1; a <= p; ++a) {
        if (a == p) {
            values[a - 1] = Rational(0);
            continue;
        }
        values[a - 1] = pow_mod(a, (p - 1) / 2, p) == 1 ? Rational(1) : Rational(-1);
    }
    return RealCharacter::from_table(p, std::move(values), "kronecker:" + std::to_string(p));
}

RealCharacter chi4()
{
    return RealCharacter::from_table(4, {Rational(1), Rational(0), Rational(-1), Rational(0)}, "chi4");
}

RealCharacter trivial_character(unsigned long k)
{
    std::vector<Rational> values(k);
    for (unsigned long r = 1; r <= k; ++r) {
        values[r - 1] = std::gcd(r, k) == 1 ? Rational(1) : Rational(0);
    }
    return RealCharacter::from_table(k, std::move(values), "trivial:" + std::to_string(k));
}

RealCharacter character_from_table(unsigned long k, std::vector<Rational> values)
{
    return RealCharacter::from_table(k, std::move(values));
}

std::uint64_t primitive_root(std::uint64_t p)
{
    require_odd_prime(p, "primitive root");
    std::vector<std::uint64_t> factors;
    std::uint64_t rest = p - 1;
    for (std::uint64_t q = 2; q * q <= rest; ++q) {
        if (rest % q == 0) {
            factors.push_back(q);
            while (rest % q == 0) {
                rest /= q;
            }
        }
    }
    if (rest > 1) {
        factors.push_back(rest);
    }
    for (std::uint64_t g = 2; g < p; ++g) {
        bool generates = true;
        for (auto q : factors) {
            if (pow_mod(g, (p - 1) / q, p) == 1) {
                generates = false;
                break;
            }
        }
        if (generates) {
            return g;
        }
    }
    throw DomainError("no primitive root found");
}

CyclotomicCharacter power_residue_character(std::uint64_t p, unsigned long m)
{
    require_odd_prime(p, "power residue character");
    if (m == 0 || (p - 1) % m != 0) {
        throw DomainError("character order " + std::to_string(m) + " does not divide p - 1");
    }
    const std::uint64_t g = primitive_root(p);
    std::vector<CyclotomicElement> values(p, CyclotomicElement(m));
    std::uint64_t power = 1;
    for (std::uint64_t j = 0; j < p - 1; ++j) {
        values[power - 1] = CyclotomicElement::root_of_unity(m, static_cast<long>(j % m));
        power = power * g % p;
    }
    return CyclotomicCharacter::from_table(p, std::move(values),
                                           "power:" + std::to_string(p) + ":" + std::to_string(m));
}

RealCharacter parse_character(std::string_view literal)
{
    if (literal == "chi4") {
        return chi4();
    }
    const auto colon = literal.find(':');
    if (colon == std::string_view::npos) {
        throw DomainError("bad character literal '" + std::string(literal) + "'");
    }
    const std::string_view kind = literal.substr(0, colon);
    const std::string_view rest = literal.substr(colon + 1);
    if (kind == "kronecker") {
        return quadratic_character(parse_positive(rest, literal));
    }
    if (kind == "trivial") {
        return trivial_character(parse_positive(rest, literal));
    }
    if (kind == "table") {
        const auto second = rest.find(':');
        if (second == std::string_view::npos) {
            throw DomainError("bad character literal '" + std::string(literal) + "'");
        }
        const unsigned long k = parse_positive(rest.substr(0, second), literal);
        std::vector<Rational> values;
        std::string_view entries = rest.substr(second + 1);
        while (true) {
            const auto comma = entries.find(',');
            values.push_back(Rational::parse(entries.substr(0, comma)));
            if (comma == std::string_view::npos) {
                break;
            }
            entries.remove_prefix(comma + 1);
        }
        return RealCharacter::from_table(k, std::move(values), std::string(literal));
    }
    throw DomainError("unknown character kind '" + std::string(kind) + "'");
}

} // namespace zetaval
