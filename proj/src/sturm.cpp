#include "dompoly/sturm.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace dompoly {

namespace {

// Divide out the (positive) content, keeping coefficient signs. Distinct
// from primitive_part(), which also forces the leading sign positive and
// would corrupt sign-variation counts.
IntPolynomial strip_content(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    const BigInt c = p.content();
    std::vector<BigInt> out(p.coefficients());
    for (BigInt& v : out) v /= c;
    return IntPolynomial(std::move(out));
}

// Pseudo-remainder scaled so the implied multiplier lc(b)^e has a fixed
// even exponent e >= deg(a) - deg(b) + 1: the remainder then has the same
// sign pattern as the exact rational remainder.
IntPolynomial prem_even(const IntPolynomial& a, const IntPolynomial& b) {
    const int db = b.degree();
    IntPolynomial r = a;
    const BigInt lc_b = b.leading();
    int d = a.degree() - db;
    int e = d + 1;
    if (e % 2 != 0) ++e;
    int applied = 0;
    while (!r.is_zero() && r.degree() >= db) {
        const int shift = r.degree() - db;
        const BigInt lead_r = r.leading();
        r = r * IntPolynomial::constant(lc_b) -
            b.multiplied_by_x(static_cast<std::size_t>(shift)) * IntPolynomial::constant(lead_r);
        ++applied;
    }
    IntPolynomial scale = IntPolynomial::constant(1);
    for (; applied < e; ++applied) scale = scale * IntPolynomial::constant(lc_b);
    return r * scale;
}

int sign_variations(const std::vector<int>& signs) {
    int variations = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

}  // namespace

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial f = a.primitive_part();
    IntPolynomial g = b.primitive_part();
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        IntPolynomial r = prem_even(f, g);
        f = std::move(g);
        g = r.primitive_part();
    }
    return f.primitive_part();
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
    if (p.degree() == 0) return IntPolynomial::one();
    const IntPolynomial f = p.primitive_part();
    const IntPolynomial g = poly_gcd(f, f.derivative());
    IntPolynomial q;
    if (!f.divide_exact(g, q))
        throw std::logic_error("squarefree_part: gcd does not divide");
    return q.primitive_part();
}

std::vector<SquarefreeFactor> squarefree_decomposition(const IntPolynomial& p) {
    if (p.is_zero())
        throw std::invalid_argument("squarefree_decomposition: zero polynomial");
    std::vector<SquarefreeFactor> factors;
    if (p.degree() == 0) return factors;

    const IntPolynomial f = p.primitive_part();
    const IntPolynomial fp = f.derivative();
    IntPolynomial g = poly_gcd(f, fp);
    IntPolynomial c, d, tmp;
    if (!f.divide_exact(g, c)) throw std::logic_error("squarefree: division failed");
    if (!fp.divide_exact(g, tmp)) throw std::logic_error("squarefree: division failed");
    d = tmp - c.derivative();

    int multiplicity = 1;
    while (c.degree() > 0) {
        IntPolynomial a = poly_gcd(c, d);
        IntPolynomial c_next, d_next;
        if (!c.divide_exact(a, c_next)) throw std::logic_error("squarefree: division failed");
        if (!d.divide_exact(a, tmp)) throw std::logic_error("squarefree: division failed");
        d_next = tmp - c_next.derivative();
        if (a.degree() > 0) factors.push_back({a.primitive_part(), multiplicity});
        c = std::move(c_next);
        d = std::move(d_next);
        ++multiplicity;
    }
    return factors;
}

int sign_at(const IntPolynomial& p, const Rational& a) {
    if (p.is_zero()) return 0;
    const BigInt num = numerator_of(a);
    const BigInt den = denominator_of(a);  // normalized positive
    // Homogeneous Horner: sum_i c_i num^i den^(deg - i); same sign as p(a).
    BigInt acc = 0;
    BigInt den_pow = 1;
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * num + p.coeff(static_cast<std::size_t>(i)) * den_pow;
        den_pow *= den;
    }
    return sign_of(acc);
}

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("sturm_chain: zero polynomial");
    std::vector<IntPolynomial> chain;
    chain.push_back(strip_content(p));
    if (p.degree() == 0) return chain;
    chain.push_back(strip_content(p.derivative()));
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        const IntPolynomial& s0 = chain[chain.size() - 2];
        const IntPolynomial& s1 = chain.back();
        IntPolynomial r = strip_content(-prem_even(s0, s1));
        if (r.is_zero()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sturm_real_root_count(const IntPolynomial& p, const Rational& a, const Rational& b) {
    if (p.is_zero()) throw std::invalid_argument("sturm_real_root_count: zero polynomial");
    if (!(a < b)) throw std::invalid_argument("sturm_real_root_count: requires a < b");
    if (sign_at(p, a) == 0 || sign_at(p, b) == 0)
        throw std::invalid_argument("sturm_real_root_count: endpoint is a root");
    if (p.degree() < 1) return 0;
    const IntPolynomial q = squarefree_part(p);
    const std::vector<IntPolynomial> chain = sturm_chain(q);
    std::vector<int> at_a, at_b;
    at_a.reserve(chain.size());
    at_b.reserve(chain.size());
    for (const IntPolynomial& s : chain) {
        at_a.push_back(sign_at(s, a));
        at_b.push_back(sign_at(s, b));
    }
    return sign_variations(at_a) - sign_variations(at_b);
}

Rational cauchy_root_bound(const IntPolynomial& p) {
    if (p.is_zero() || p.degree() < 1)
        throw std::invalid_argument("cauchy_root_bound: needs degree >= 1");
    BigInt max_abs = 0;
    for (int i = 0; i < p.degree(); ++i) {
        BigInt v = p.coeff(static_cast<std::size_t>(i));
        if (v < 0) v = -v;
        if (v > max_abs) max_abs = v;
    }
    BigInt lead = p.leading();
    if (lead < 0) lead = -lead;
    return Rational(1) + Rational(max_abs, lead);
}

namespace {

// One root known strictly inside (lo, hi) with q nonzero at both ends;
// splits with Sturm counts until every piece holds at most one root.
int variations_at(const std::vector<IntPolynomial>& chain, const Rational& t) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const IntPolynomial& s : chain) signs.push_back(sign_at(s, t));
    return sign_variations(signs);
}

// The chain is prebuilt from q (squarefree), so each recursion step costs
// only chain evaluations, not chain reconstruction.
void bisect_isolate(const IntPolynomial& q, const std::vector<IntPolynomial>& chain,
                    Rational lo, Rational hi, int var_lo, int var_hi,
                    std::vector<RealRootInterval>& out, IntPolynomial& deflated,
                    std::vector<Rational>& exact_roots, bool& restarted) {
    const int count = var_lo - var_hi;
    if (restarted || count == 0) return;
    if (count == 1) {
        out.push_back({lo, hi});
        return;
    }
    Rational mid = (lo + hi) / 2;
    if (sign_at(q, mid) == 0) {
        // Exact rational root at the split point: deflate and restart the
        // whole isolation on the reduced polynomial.
        exact_roots.push_back(mid);
        const IntPolynomial linear{
            std::vector<BigInt>{-numerator_of(mid), denominator_of(mid)}};
        IntPolynomial reduced;
        if (!q.divide_exact(linear, reduced))
            throw std::logic_error("isolate_real_roots: deflation failed");
        deflated = reduced.primitive_part();
        restarted = true;
        return;
    }
    const int var_mid = variations_at(chain, mid);
    bisect_isolate(q, chain, lo, mid, var_lo, var_mid, out, deflated, exact_roots, restarted);
    bisect_isolate(q, chain, mid, hi, var_mid, var_hi, out, deflated, exact_roots, restarted);
}

}  // namespace

std::vector<RealRootInterval> isolate_real_roots(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    IntPolynomial q = squarefree_part(p);
    std::vector<Rational> exact_roots;
    std::vector<RealRootInterval> brackets;

    while (q.degree() >= 1) {
        brackets.clear();
        const Rational bound = cauchy_root_bound(q) + 1;
        const Rational lo = -bound;
        const Rational hi = bound;
        if (sign_at(q, lo) == 0 || sign_at(q, hi) == 0)
            throw std::logic_error("isolate_real_roots: root on outer bound");
        const std::vector<IntPolynomial> chain = sturm_chain(q);
        IntPolynomial deflated;
        bool restarted = false;
        bisect_isolate(q, chain, lo, hi, variations_at(chain, lo), variations_at(chain, hi),
                       brackets, deflated, exact_roots, restarted);
        if (!restarted) break;
        q = std::move(deflated);
    }
    if (q.degree() < 1) brackets.clear();

    // Shrink brackets so no recorded exact root sits inside one; the
    // bracketed root differs from every exact root (those were deflated),
    // so finitely many bisections separate them.
    for (RealRootInterval& iv : brackets) {
        for (const Rational& m : exact_roots) {
            while (iv.lo <= m && m <= iv.hi) {
                const Rational mid = (iv.lo + iv.hi) / 2;
                const int s = sign_at(q, mid);
                if (s == 0) throw std::logic_error("isolate_real_roots: unexpected root");
                if (s == sign_at(q, iv.lo)) iv.lo = mid;
                else iv.hi = mid;
            }
        }
    }

    std::vector<RealRootInterval> result;
    result.reserve(brackets.size() + exact_roots.size());
    for (const Rational& m : exact_roots) result.push_back({m, m});
    for (const RealRootInterval& iv : brackets) result.push_back(iv);
    std::sort(result.begin(), result.end(),
              [](const RealRootInterval& a, const RealRootInterval& b) { return a.lo < b.lo; });
    return result;
}

RealRootInterval refine_root_interval(const IntPolynomial& p, RealRootInterval iv,
                                      const Rational& width) {
    if (iv.lo == iv.hi) return iv;
    if (width <= 0) throw std::invalid_argument("refine_root_interval: width must be > 0");
    int s_lo = sign_at(p, iv.lo);
    const int s_hi = sign_at(p, iv.hi);
    if (s_lo == 0) return {iv.lo, iv.lo};
    if (s_hi == 0) return {iv.hi, iv.hi};
    if (s_lo == s_hi)
        throw std::invalid_argument("refine_root_interval: no sign change across interval");
    while (iv.hi - iv.lo > width) {
        const Rational mid = (iv.lo + iv.hi) / 2;
        const int s_mid = sign_at(p, mid);
        if (s_mid == 0) return {mid, mid};
        if (s_mid == s_lo) {
            iv.lo = mid;
        } else {
            iv.hi = mid;
        }
    }
    return iv;
}

}  // namespace dompoly
