#include "rescalc/constructible.hpp"

#include "rescalc/errors.hpp"

#include <algorithm>

namespace rescalc {

namespace {

void check_same(const OmegaSet& a, const OmegaSet& b)
{
    if (a.n() != b.n())
        throw DimensionMismatch("constructible sets over different dimensions");
}

VarMask mask_of(const std::vector<int>& indices, int n)
{
    VarMask m = 0;
    for (int i : indices) {
        if (i < 1 || i > n)
            throw PreconditionError("variable index " + std::to_string(i) + " outside [1, " + std::to_string(n) + "]");
        m |= VarMask{1} << (i - 1);
    }
    return m;
}

} // namespace

OmegaSet::OmegaSet(int n)
    : n_(n)
{
    check_dimension(n);
    bits_.resize(std::size_t{1} << n);
}

OmegaSet OmegaSet::full(int n)
{
    OmegaSet s(n);
    s.bits_.set();
    return s;
}

OmegaSet OmegaSet::cell(int n, VarMask omega)
{
    OmegaSet s(n);
    s.bits_.set(omega);
    return s;
}

std::vector<VarMask> OmegaSet::cells() const
{
    std::vector<VarMask> out;
    for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i))
        out.push_back(static_cast<VarMask>(i));
    return out;
}

OmegaSet OmegaSet::operator~() const
{
    OmegaSet s = *this;
    s.bits_.flip();
    return s;
}

OmegaSet OmegaSet::operator&(const OmegaSet& o) const
{
    check_same(*this, o);
    OmegaSet s = *this;
    s.bits_ &= o.bits_;
    return s;
}

OmegaSet OmegaSet::operator|(const OmegaSet& o) const
{
    check_same(*this, o);
    OmegaSet s = *this;
    s.bits_ |= o.bits_;
    return s;
}

OmegaSet OmegaSet::operator-(const OmegaSet& o) const
{
    check_same(*this, o);
    OmegaSet s = *this;
    s.bits_ -= o.bits_;
    return s;
}

SetExpr SetExpr::empty() { return SetExpr(Kind::Empty); }
SetExpr SetExpr::full() { return SetExpr(Kind::Full); }

SetExpr SetExpr::hyperplane(int index1)
{
    SetExpr e(Kind::Hyperplane);
    e.indices_ = {index1};
    return e;
}

SetExpr SetExpr::coord_variety(std::vector<int> indices1)
{
    SetExpr e(Kind::CoordVariety);
    e.indices_ = std::move(indices1);
    return e;
}

SetExpr SetExpr::cell(std::vector<int> indices1)
{
    SetExpr e(Kind::Cell);
    e.indices_ = std::move(indices1);
    return e;
}

SetExpr operator~(const SetExpr& a)
{
    SetExpr e(SetExpr::Kind::Complement);
    e.lhs_ = std::make_shared<const SetExpr>(a);
    return e;
}

SetExpr operator&(const SetExpr& a, const SetExpr& b) { return SetExpr::binary(SetExpr::Kind::Intersection, a, b); }
SetExpr operator|(const SetExpr& a, const SetExpr& b) { return SetExpr::binary(SetExpr::Kind::Union, a, b); }
SetExpr operator-(const SetExpr& a, const SetExpr& b) { return SetExpr::binary(SetExpr::Kind::Difference, a, b); }

SetExpr SetExpr::binary(Kind k, const SetExpr& a, const SetExpr& b)
{
    SetExpr e(k);
    e.lhs_ = std::make_shared<const SetExpr>(a);
    e.rhs_ = std::make_shared<const SetExpr>(b);
    return e;
}

OmegaSet coord_variety(int n, VarMask s)
{
    OmegaSet out(n);
    const VarMask all = (VarMask{1} << n) - 1;
    // supersets of s
    for (VarMask rest = all & ~s;; rest = (rest - 1) & (all & ~s)) {
        out.insert(s | rest);
        if (rest == 0)
            break;
    }
    return out;
}

OmegaSet omega_of(const SetExpr& e, int n)
{
    using K = SetExpr::Kind;
    switch (e.kind()) {
    case K::Empty:
        return OmegaSet(n);
    case K::Full:
        return OmegaSet::full(n);
    case K::Hyperplane:
    case K::CoordVariety:
        return coord_variety(n, mask_of(e.indices(), n));
    case K::Cell:
        return OmegaSet::cell(n, mask_of(e.indices(), n));
    case K::Complement:
        return ~omega_of(e.lhs(), n);
    case K::Intersection:
        return omega_of(e.lhs(), n) & omega_of(e.rhs(), n);
    case K::Union:
        return omega_of(e.lhs(), n) | omega_of(e.rhs(), n);
    case K::Difference:
        return omega_of(e.lhs(), n) - omega_of(e.rhs(), n);
    }
    throw PreconditionError("unknown set expression");
}

Current restrict(const OmegaSet& w, const Current& t)
{
    if (w.n() != t.n())
        throw DimensionMismatch("restriction set and current over different dimensions");
    TermAccumulator acc(t.n());
    for_each_piece(t, [&](const FactorVector& f, const FormMonomial& m, const Rational& c) {
        if (w.contains(residue_mask(f)))
            acc.add(f, m, c);
    });
    return std::move(acc).finish();
}

int min_cell_codim(const OmegaSet& w)
{
    if (w.empty())
        throw PreconditionError("min_cell_codim of the empty set");
    int best = w.n() + 1;
    for (VarMask c : w.cells())
        best = std::min(best, popcount(c));
    return best;
}

} // namespace rescalc
