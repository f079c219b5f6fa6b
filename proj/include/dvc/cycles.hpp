#pragma once

#include "dvc/duval.hpp"
#include "dvc/poly.hpp"

#include <string>
#include <vector>

namespace dvc {

// Vertices are numbered 1..n.  A_n is the chain E1 - ... - En.  D_n is the
// chain E1 - ... - E(n-2) with E(n-1) and En both attached to E(n-2).  E_n is
// the chain E1 - ... - E(n-1) with En attached to E3.
class DynkinGraph {
public:
    explicit DynkinGraph(DuValType type);

    const DuValType& type() const { return type_; }
    int size() const { return n_; }
    int entry(int i, int j) const { return m_[i - 1][j - 1]; }  // intersection number Ei.Ej
    const std::vector<std::vector<int>>& matrix() const { return m_; }
    std::vector<int> neighbours(int i) const;

private:
    DuValType type_;
    int n_;
    std::vector<std::vector<int>> m_;
};

// Leading principal minors alternate in sign starting negative.
bool negative_definite(const DynkinGraph& g);
// Laufer's algorithm: the smallest positive cycle Z with Z.Ei <= 0 for all i.
std::vector<int> fundamental_cycle(const DynkinGraph& g);

struct CycleSolution {
    int meeting = 0;
    int E = 0;
    std::vector<Rational> coefficients;  // a_1..a_n
    bool integral = false;
    Rational d;  // coefficient of E
};

// Exact solution of Z.E = -1, Z.Ei = 0 (Ei != E) for Z = G + sum a_i E_i,
// where G meets the `meeting` vertex once.
CycleSolution solve_cycle(const DynkinGraph& g, int meeting, int E);
// Tries every vertex with coefficient 1 in the fundamental cycle and returns the
// unique integral solution; throws when there is none or more than one.
CycleSolution select_edge(const DynkinGraph& g, int meeting);
// Admissible meeting vertices for the family.
void check_meeting(const DynkinGraph& g, int meeting);

struct CurvePosition {
    enum class Kind { A, FDl, FDr, D4Symmetric, Ambiguous };
    Kind kind = Kind::A;
    int k = 0;  // A position (1 = edge)
    std::string label() const;  // "A:k=2", "FD_l", "FD_r", "D4-symmetric", "FD_l|FD_r"
    bool is_edge() const { return kind == Kind::A && k == 1; }
    friend bool operator==(const CurvePosition& a, const CurvePosition& b) { return a.kind == b.kind && a.k == b.k; }
};

// Inverts d = k (A_n), d = 2 (FD_l), d = n/2 or (n-1)/2 (FD_r).  For D5 both
// positions give d = 2 and the result is Ambiguous.
CurvePosition position_from_d(const DuValType& type, int d);

}  // namespace dvc
