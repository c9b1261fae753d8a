#pragma once

// Constructible sets in the Boolean algebra generated by the coordinate
// hyperplanes H_1..H_n. Such a set is a union of the cells
//
//     W_omega = { sigma_i = 0 for i in omega, sigma_j != 0 for j not in omega },
//
// so it is encoded exactly by the set Omega of cells it contains.

#include "rescalc/current.hpp"
#include "rescalc/monomial.hpp"

#include <boost/dynamic_bitset.hpp>

#include <memory>
#include <vector>

namespace rescalc {

class OmegaSet {
public:
    explicit OmegaSet(int n);
    static OmegaSet full(int n);
    static OmegaSet cell(int n, VarMask omega);

    int n() const { return n_; }
    bool contains(VarMask omega) const { return bits_.test(omega); }
    void insert(VarMask omega) { bits_.set(omega); }
    bool empty() const { return bits_.none(); }
    std::size_t size() const { return bits_.count(); }

    // Cells in ascending mask order.
    std::vector<VarMask> cells() const;

    OmegaSet operator~() const;
    OmegaSet operator&(const OmegaSet& o) const;
    OmegaSet operator|(const OmegaSet& o) const;
    OmegaSet operator-(const OmegaSet& o) const;

    bool operator==(const OmegaSet& o) const { return n_ == o.n_ && bits_ == o.bits_; }

private:
    int n_;
    boost::dynamic_bitset<> bits_;
};

class SetExpr {
public:
    enum class Kind { Empty, Full, Hyperplane, CoordVariety, Cell, Complement, Intersection, Union, Difference };

    static SetExpr empty();
    static SetExpr full();
    static SetExpr hyperplane(int index1);
    static SetExpr coord_variety(std::vector<int> indices1);
    static SetExpr cell(std::vector<int> indices1);

    friend SetExpr operator~(const SetExpr& a);
    friend SetExpr operator&(const SetExpr& a, const SetExpr& b);
    friend SetExpr operator|(const SetExpr& a, const SetExpr& b);
    friend SetExpr operator-(const SetExpr& a, const SetExpr& b);

    Kind kind() const { return kind_; }
    const std::vector<int>& indices() const { return indices_; }
    const SetExpr& lhs() const { return *lhs_; }
    const SetExpr& rhs() const { return *rhs_; }

private:
    SetExpr(Kind k) : kind_(k) {}
    static SetExpr binary(Kind k, const SetExpr& a, const SetExpr& b);

    Kind kind_;
    std::vector<int> indices_; // 1-based variable indices for leaves
    std::shared_ptr<const SetExpr> lhs_;
    std::shared_ptr<const SetExpr> rhs_;
};

// Throws PreconditionError for leaf indices outside [1, n].
OmegaSet omega_of(const SetExpr& e, int n);

// The cells of V(S) = { sigma_i = 0, i in S }.
OmegaSet coord_variety(int n, VarMask s);

// 1_W T: the terms of T whose residue signature is a cell of W.
Current restrict(const OmegaSet& w, const Current& t);

// Smallest |omega| over the cells of W; W must be nonempty.
int min_cell_codim(const OmegaSet& w);

} // namespace rescalc
