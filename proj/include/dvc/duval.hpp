#pragma once

#include "dvc/change.hpp"
#include "dvc/poly.hpp"

#include <string>

namespace dvc {

struct DuValType {
    enum class Family { A, D, E, Smooth, NotDuVal, Undetermined };
    Family family = Family::Undetermined;
    int index = 0;  // n for A_n, D_n; 6, 7, 8 for E; the jet order for Undetermined

    static DuValType A(int n);
    static DuValType D(int n);
    static DuValType E(int n);
    static DuValType smooth() { return {Family::Smooth, 0}; }
    static DuValType not_duval() { return {Family::NotDuVal, 0}; }
    static DuValType undetermined(int order) { return {Family::Undetermined, order}; }

    bool is_duval() const { return family == Family::A || family == Family::D || family == Family::E; }
    std::string label() const;  // "A4", "D6", "E7", "smooth", "not-DuVal", "undetermined@12"
    static DuValType from_label(const std::string& s);

    friend bool operator==(const DuValType& a, const DuValType& b)
    {
        return a.family == b.family && a.index == b.index;
    }
};

struct DuValReport {
    DuValType type;
    int order = 0;
    bool order_sufficient = false;
    int quadratic_rank = 0;
    MultiPoly residual;  // the curve germ h with f ~ squares + h, in the input ring
};

// Du Val type of a surface germ g(u, v, w) at the origin from its jet of the given order.
DuValReport classify_duval_report(const Jet& g, int order);
DuValType classify_duval(const Jet& g, int order);

enum class CubicPattern { Zero, ThreeDistinct, DoubleAndSimple, Triple };

// Root pattern over C of the binary cubic form c in variables v, w, decided by
// exact gcd of the dehomogenized cubic with its derivative.
CubicPattern binary_cubic_pattern(const MultiPoly& c, int v, int w);

struct CubicLines {
    CubicPattern pattern;
    MultiPoly repeated;  // the double or triple linear factor (zero when none)
    MultiPoly simple;    // for DoubleAndSimple, the simple factor
};

// Same as binary_cubic_pattern, also returning the rational linear factors.
CubicLines binary_cubic_lines(const MultiPoly& c, int v, int w);

}  // namespace dvc
