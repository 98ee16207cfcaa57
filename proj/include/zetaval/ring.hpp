#ifndef ZETAVAL_RING_HPP
#define ZETAVAL_RING_HPP

#include <string>

#include "zetaval/cyclotomic.hpp"
#include "zetaval/rational.hpp"

namespace zetaval {

/// Per-scalar-type description of the ambient ring. A `context` identifies the
/// concrete ring (empty for Q, the order m for Q(zeta_m)) so that generic code
/// can build zeros and ones and detect mismatched operands.
template <class S>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    struct context {
        friend bool operator==(context, context) { return true; }
    };

    static context context_of(const Rational&) { return {}; }
    static Rational zero(context) { return Rational(); }
    static Rational one(context) { return Rational(1); }
    static Rational embed(context, const Rational& r) { return r; }
    static bool is_zero(const Rational& r) { return r.is_zero(); }
    static std::string name(context) { return "Q"; }
    static std::string render(const Rational& r) { return r.to_string(); }
    /// Whether render() may need parentheses inside a product.
    static bool compound(const Rational&) { return false; }
};

template <>
struct ring_traits<CyclotomicElement> {
    using context = unsigned long;

    static context context_of(const CyclotomicElement& c) { return c.order(); }
    static CyclotomicElement zero(context m) { return CyclotomicElement(m); }
    static CyclotomicElement one(context m) { return CyclotomicElement(m, Rational(1)); }
    static CyclotomicElement embed(context m, const Rational& r) { return CyclotomicElement(m, r); }
    static bool is_zero(const CyclotomicElement& c) { return c.is_zero(); }
    static std::string name(context m) { return "Q(zeta" + std::to_string(m) + ")"; }
    static std::string render(const CyclotomicElement& c) { return c.to_string(); }
    static bool compound(const CyclotomicElement& c) { return !c.is_rational(); }
};

template <class S>
using ring_context = typename ring_traits<S>::context;

/// Scalar rendering as used in text output.
inline std::string render(const Rational& r) { return r.to_string(); }
inline std::string render(const CyclotomicElement& c) { return c.to_string(); }

} // namespace zetaval

#endif
