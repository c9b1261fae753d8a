#include "rescalc/calculus.hpp"

#include "rescalc/errors.hpp"

namespace rescalc {

namespace {

void check_n(const Monomial& m, const Current& t)
{
    if (m.n() != t.n())
        throw DimensionMismatch("monomial and current over different dimensions");
}

} // namespace

Current mul_monomial(const Monomial& m, const Current& t)
{
    check_n(m, t);
    TermAccumulator acc(t.n());
    for_each_piece(t, [&](const FactorVector& f, const FormMonomial& mono, const Rational& c) {
        FormMonomial shifted = mono;
        for (int i = 0; i < t.n(); ++i)
            shifted.alpha[static_cast<std::size_t>(i)] += m[i];
        acc.add(f, std::move(shifted), c);
    });
    return std::move(acc).finish();
}

Current mul_polynomial(const Polynomial& phi, const Current& t)
{
    if (phi.n() != t.n())
        throw DimensionMismatch("polynomial and current over different dimensions");
    TermAccumulator acc(t.n());
    for (const auto& [m, c] : phi.terms())
        acc.add(mul_monomial(m, t), c);
    return std::move(acc).finish();
}

Current pv_mul(const Monomial& g, const Current& t)
{
    check_n(g, t);
    TermAccumulator acc(t.n());
    for_each_piece(t, [&](const FactorVector& f, const FormMonomial& mono, const Rational& c) {
        FactorVector out = f;
        for (int i = 0; i < t.n(); ++i) {
            const auto gi = g[i];
            if (gi == 0)
                continue;
            auto& slot = out[static_cast<std::size_t>(i)];
            switch (slot.kind) {
            case FactorKind::Res:
                return; // [1/sigma^a] dbar[1/sigma^b] = 0
            case FactorKind::PV:
                slot.exp += gi;
                break;
            case FactorKind::None:
                slot = Factor::pv(gi);
                break;
            }
        }
        acc.add(std::move(out), mono, c);
    });
    return std::move(acc).finish();
}

Current res_mul(const Monomial& g, const Current& t)
{
    return dbar(pv_mul(g, t)) - pv_mul(g, dbar(t));
}

Current arm_product(std::span<const Monomial> f, int q, const PolyCoeff& alpha)
{
    if (q < 0 || static_cast<std::size_t>(q) > f.size())
        throw PreconditionError("arm_product: q = " + std::to_string(q) + " outside [0, " + std::to_string(f.size()) + "]");
    Current t = Current::from_coeff(alpha);
    for (std::size_t k = f.size(); k-- > static_cast<std::size_t>(q);)
        t = pv_mul(f[k], t);
    for (std::size_t k = static_cast<std::size_t>(q); k-- > 0;)
        t = res_mul(f[k], t);
    return t;
}

Current coleff_herrera(int n, std::span<const Monomial> f)
{
    return arm_product(f, static_cast<int>(f.size()), PolyCoeff::scalar(n, 1));
}

int common_zero_codim(int n, std::span<const Monomial> f)
{
    check_dimension(n);
    for (const auto& m : f)
        if (m.n() != n)
            throw DimensionMismatch("monomial over wrong dimension");
    int best = n + 1;
    const VarMask cells = VarMask{1} << n;
    for (VarMask omega = 0; omega < cells; ++omega) {
        bool all_vanish = true;
        for (const auto& m : f)
            if ((m.support() & omega) == 0) {
                all_vanish = false;
                break;
            }
        if (all_vanish)
            best = std::min(best, popcount(omega));
    }
    return best;
}

bool is_monomial_complete_intersection(int n, std::span<const Monomial> f)
{
    return common_zero_codim(n, f) == static_cast<int>(f.size());
}

} // namespace rescalc
