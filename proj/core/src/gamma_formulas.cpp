#include "schatten/walk_weights.hpp"

#include <algorithm>
#include <array>
#include <cmath>

// Per-pattern weight formulas. Everything is expressed over the diagonal
// part (as the vector dv) and the off-diagonal part O of the input, with a
// small vocabulary: LD/RD scale rows/columns by a vector (products with a
// diagonal matrix), mask zeroes the diagonal (the "R" Hadamard masks),
// opN/dN are elementwise powers, rs is the row-sum vector, dprod(A, B) is
// diag(A*B) computed without the full product, and trp(A, B) = tr(A*B).
// Families for a given walk length share intermediates, so each one is a
// single straight-line function; the label order is the transcription
// order, and the oracle-equivalence tests pin every bucket individually.

namespace schatten {
namespace detail {
namespace {

using Mat = Matrix;
using Vec = Vector;

Mat mask(Mat x) {
    x.diagonal().setZero();
    return x;
}

Vec rs(const Mat& x) { return x.rowwise().sum(); }

Vec dg(const Mat& x) { return x.diagonal(); }

// diag(A*B) as a vector, O(d^2).
Vec dprod(const Mat& a, const Mat& b) { return a.cwiseProduct(b.transpose()).rowwise().sum(); }

// tr(A*B), O(d^2).
double trp(const Mat& a, const Mat& b) { return a.cwiseProduct(b.transpose()).sum(); }

Mat LD(const Vec& v, const Mat& x) { return v.asDiagonal() * x; }

Mat RD(const Mat& x, const Vec& v) { return x * v.asDiagonal(); }

// (i, j) -> v_j  (all rows equal v^T)
Mat rowrep(const Vec& v) { return v.transpose().replicate(v.size(), 1); }

// (i, j) -> v_i  (all columns equal v)
Mat colrep(const Vec& v) { return v.replicate(1, v.size()); }

struct Parts {
    Vec d1, d2, d3, d4, d5, d6, d7;
    Mat O, op2, op3, op4, op5, op6, op7;

    explicit Parts(const Mat& m) {
        d1 = m.diagonal();
        d2 = d1.cwiseProduct(d1);
        d3 = d2.cwiseProduct(d1);
        d4 = d3.cwiseProduct(d1);
        d5 = d4.cwiseProduct(d1);
        d6 = d5.cwiseProduct(d1);
        d7 = d6.cwiseProduct(d1);
        O = m;
        O.diagonal().setZero();
        op2 = O.cwiseProduct(O);
        op3 = op2.cwiseProduct(O);
        op4 = op3.cwiseProduct(O);
        op5 = op4.cwiseProduct(O);
        op6 = op5.cwiseProduct(O);
        op7 = op6.cwiseProduct(O);
    }
};

using Values = std::vector<std::pair<std::string, double>>;

Values gamma3(const Mat& m) {
    const Parts p(m);
    const Mat OO = p.O * p.O;
    Values out;
    out.emplace_back("A_1", p.d3.sum());
    out.emplace_back("A_2", 3.0 * p.d1.dot(dg(OO)));
    out.emplace_back("A_3", trp(OO, p.O));
    return out;
}

Values gamma4(const Mat& m) {
    const Parts p(m);
    const Mat OO = p.O * p.O;
    const Mat MM = m * m;
    const Mat op2op2 = p.op2 * p.op2;
    const double trO4 = OO.cwiseProduct(OO).sum();
    const double trM4 = MM.cwiseProduct(MM).sum();

    std::array<double, 8> b{};
    b[1] = p.d4.sum();
    b[2] = p.op4.sum();
    b[3] = 4.0 * dg(OO).dot(p.d2);
    b[4] = 2.0 * mask(op2op2).sum();
    b[5] = 2.0 * p.d1.dot(p.op2 * p.d1);
    b[6] = trO4 - (b[2] + b[4]);
    b[7] = trM4 - (b[1] + b[2] + b[3] + b[4] + b[5] + b[6]);

    Values out;
    for (int n = 1; n <= 7; ++n) out.emplace_back("B_" + std::to_string(n), b[n]);
    return out;
}

Values gamma5(const Mat& m) {
    const Parts p(m);
    const Mat OO = p.O * p.O;
    const Mat OOO = OO * p.O;
    const Mat MM = m * m;
    const Mat MMM = MM * m;
    const Mat op2op2 = p.op2 * p.op2;
    const Mat op2Dop2 = p.op2 * LD(p.d1, p.op2);
    const Mat ODO = p.O * LD(p.d1, p.O);
    const double trO5 = OOO.cwiseProduct(OO).sum();
    const double trM5 = MMM.cwiseProduct(MM).sum();

    std::array<double, 13> c{};
    c[1] = p.d5.sum();
    c[2] = 5.0 * p.d1.dot(rs(p.op4));
    c[3] = 5.0 * p.d3.dot(rs(p.op2));
    c[4] = 5.0 * trp(p.op3, OO);
    c[5] = 5.0 * p.d1.dot(p.op2 * p.d2);
    c[6] = 5.0 * mask(op2Dop2).sum();
    c[7] = 5.0 * mask(LD(p.d1, op2op2)).sum();
    c[8] = 5.0 * dg(OOO).dot(p.d2);
    c[9] = 5.0 * dg(OOO).dot(rs(p.op2)) - 10.0 * trp(p.op3, OO);
    c[10] = trO5 - c[4] - c[9];
    c[11] = 5.0 * p.d1.dot(rs(ODO.cwiseProduct(p.O)));
    c[12] = trM5;
    for (int n = 1; n <= 11; ++n) c[12] -= c[n];

    Values out;
    for (int n = 1; n <= 12; ++n) out.emplace_back("C_" + std::to_string(n), c[n]);
    return out;
}

Values gamma6(const Mat& m) {
    const Parts p(m);
    const Mat OO = p.O * p.O;
    const Mat OOO = OO * p.O;
    const Mat MM = m * m;
    const Mat MMM = MM * m;
    const Mat op2op2 = p.op2 * p.op2;
    const Mat op4op2 = p.op4 * p.op2;
    const Mat op2op4 = op4op2.transpose();
    const Mat op3O = p.op3 * p.O;
    const Mat op2op2op2 = op2op2 * p.op2;
    const Mat ODO = p.O * LD(p.d1, p.O);
    const Mat OD2O = p.O * LD(p.d2, p.O);
    const Mat op2Dop2 = p.op2 * LD(p.d1, p.op2);
    const Mat op2D2op2 = p.op2 * LD(p.d2, p.op2);
    const double trO6 = OOO.cwiseProduct(OOO).sum();
    const double trM6 = MMM.cwiseProduct(MMM).sum();
    // (O*O) . R . (O*O) - ((O.O)*(O.O)) . R, the recurring overlap corrector
    const Mat P = mask(OO.cwiseProduct(OO)) - mask(op2op2);

    std::array<double, 33> v{};
    v[1] = p.d6.sum();
    v[2] = p.op6.sum();
    v[3] = 6.0 * mask(op2op4).sum();
    v[4] = 6.0 * mask(RD(p.op2, p.d4)).sum();
    v[5] = 9.0 * mask(LD(p.d2, p.op4)).sum();
    v[6] = 3.0 * mask(LD(p.d2, RD(p.op2, p.d2))).sum();
    v[7] = 6.0 * mask(LD(p.d2, op2op2)).sum();
    v[8] = 9.0 * mask(op2D2op2).sum();
    v[9] = 6.0 * mask(LD(p.d3, RD(p.op2, p.d1))).sum();
    v[10] = 6.0 * mask(LD(p.d1, RD(p.op4, p.d1))).sum();
    v[11] = 3.0 * (rs(mask(op2op2)).cwiseProduct(rs(p.op2)) - rs(mask(op4op2)) -
                   dg(op2op2op2))
                      .sum();
    v[12] = 4.0 * trp(op2op2, p.op2);
    {
        const Vec s2 = rs(p.op2), s4 = rs(p.op4), s6 = rs(p.op6);
        v[13] = 2.0 * (s2.cwiseProduct(s2).cwiseProduct(s2) - s6 -
                       3.0 * (s4.cwiseProduct(s2) - s6))
                          .sum();
    }
    v[14] = 3.0 * mask(LD(p.d1, RD(op2op2, p.d1))).sum();
    v[15] = 12.0 * mask(LD(p.d1, op2Dop2)).sum();
    v[16] = 6.0 * (mask(op3O).cwiseProduct(OO).sum() - mask(op4op2).sum());
    v[17] = 6.0 * p.d3.dot(dg(OOO));
    v[18] = 24.0 * p.d1.dot(rs(p.op3.cwiseProduct(OO)));
    v[19] = 6.0 * p.d1.dot(dprod(op3O.transpose(), p.O));
    v[20] = 6.0 * (OO.cwiseProduct(mask(OD2O)).sum() - mask(op2D2op2).sum());
    v[21] = 12.0 * p.d1.dot(rs(OD2O.cwiseProduct(p.O)));
    v[22] = 6.0 * (rs(P).cwiseProduct(rs(p.op2)).sum() -
                   2.0 * (mask(op3O).cwiseProduct(OO).sum() - mask(op4op2).sum()) -
                   P.cwiseProduct(p.op2).sum());
    v[23] = 9.0 * P.cwiseProduct(p.op2).sum();
    v[24] = 12.0 * (dprod(ODO, p.O).cwiseProduct(rs(p.op2)) - dprod(p.op3, LD(p.d1, OO)) -
                    rs(p.op3.cwiseProduct(ODO)))
                       .sum();
    v[25] = 6.0 * (dg(OOO).cwiseProduct(p.op2 * p.d1) - 2.0 * dprod(p.op3, LD(p.d1, OO))).sum();
    v[26] = 12.0 * (dg(OOO).cwiseProduct(p.d1).cwiseProduct(rs(p.op2)) -
                    2.0 * dprod(p.op3, OO).cwiseProduct(p.d1))
                       .sum();
    v[27] = 3.0 * (dg(OOO).cwiseProduct(dg(OOO)) - 2.0 * dprod(op2op2, p.op2)).sum() -
            (4.0 / 3.0) * v[23];
    v[28] = trO6 - v[2] - v[3] - v[11] - v[12] - v[13] - v[16] - v[22] - v[23] - v[27];
    v[29] = 2.0 * p.d1.dot(dprod(ODO, LD(p.d1, p.O)));
    v[30] = 3.0 * (mask(ODO).cwiseProduct(mask(ODO)).sum() - mask(op2D2op2).sum());
    v[31] = 6.0 * (mask(RD(ODO, p.d1)).cwiseProduct(OO).sum() -
                   mask(RD(op2Dop2, p.d1)).sum());
    {
        // Algebraically: trM6 - trO6 - sum(D_1:D_26) + (the loopless terms
        // 2,3,11,12,13,16,22,23) - D_29 - D_30 - D_31. The add-backs cancel
        // symbolically, so only loop-pattern terms are subtracted; this
        // keeps the bucket exactly zero for zero-diagonal input.
        v[32] = trM6 - trO6 - v[29] - v[30] - v[31];
        for (int n : {1, 4, 5, 6, 7, 8, 9, 10, 14, 15, 17, 18, 19, 20, 21, 24, 25, 26})
            v[32] -= v[n];
    }

    Values out;
    for (int n = 1; n <= 32; ++n) out.emplace_back("D_" + std::to_string(n), v[n]);
    return out;
}

Values gamma7(const Mat& m) {
    const Parts p(m);
    const Mat OO = p.O * p.O;
    const Mat OOO = OO * p.O;
    const Mat O4 = OO * OO;
    const Mat MM = m * m;
    const Mat MMM = MM * m;
    const Mat M4 = MM * MM;
    const Mat op2op2 = p.op2 * p.op2;
    const Mat op4op2 = p.op4 * p.op2;
    const Mat op3O = p.op3 * p.O;
    const Mat Oop3 = op3O.transpose();
    const Mat op3op3 = p.op3 * p.op3;
    const Mat op5O = p.op5 * p.O;
    const Mat ODO = p.O * LD(p.d1, p.O);
    const Mat OD2O = p.O * LD(p.d2, p.O);
    const Mat OD3O = p.O * LD(p.d3, p.O);
    const Mat op2Dop2 = p.op2 * LD(p.d1, p.op2);
    const Mat op2D2op2 = p.op2 * LD(p.d2, p.op2);
    const Mat op2D3op2 = p.op2 * LD(p.d3, p.op2);
    const Mat op4Dop2 = p.op4 * LD(p.d1, p.op2);
    const Mat op3DO = p.op3 * LD(p.d1, p.O);
    const double trO7 = O4.cwiseProduct(OOO).sum();
    const double trM7 = M4.cwiseProduct(MMM).sum();
    const Vec rs2 = rs(p.op2), rs4 = rs(p.op4), rs6 = rs(p.op6);
    const Vec dOOO = dg(OOO);
    const Mat P = mask(OO.cwiseProduct(OO)) - mask(op2op2);
    const Vec Z1 = 0.5 * (rs2.cwiseProduct(rs2) - rs4);

    std::array<double, 70> v{};
    v[1] = p.d7.sum();
    v[2] = 7.0 * RD(p.op2, p.d5).sum();
    v[3] = 7.0 * mask(LD(p.d2, RD(p.op2, p.d3))).sum();
    v[4] = 14.0 * RD(p.op4, p.d3).sum();
    v[5] = 7.0 * RD(p.op6, p.d1).sum();
    v[6] = 7.0 * mask(LD(p.d1, RD(p.op2, p.d4))).sum();
    v[7] = 21.0 * mask(LD(p.d1, RD(p.op4, p.d2))).sum();
    v[8] = 7.0 * mask(RD(op2op2, p.d3)).sum();
    v[9] = 14.0 * mask(op2D3op2).sum();
    v[10] = 7.0 * mask(RD(op4op2, p.d1)).sum();
    v[11] = 21.0 * mask(op4Dop2).sum();
    v[12] = 14.0 * mask(LD(p.d1, op4op2)).sum();
    v[13] = 7.0 * trp(p.op5, OO);
    v[14] = 14.0 * op3O.cwiseProduct(p.op3).sum();
    v[15] = 7.0 * (rs(mask(op2op2)).cwiseProduct(p.op2 * p.d1) - rs(mask(op4Dop2)) -
                   dprod(op2Dop2, p.op2))
                      .sum();
    v[16] = 14.0 * ((rs(mask(op2op2)).cwiseProduct(rs2) - rs(mask(op4op2)) -
                     dprod(op2op2, p.op2))
                        .cwiseProduct(p.d1))
                       .sum();
    v[17] = 7.0 * ((rs2.cwiseProduct(rs2).cwiseProduct(rs2) - rs6 -
                    3.0 * (rs4.cwiseProduct(rs2) - rs6))
                       .cwiseProduct(p.d1))
                      .sum();
    v[18] = 14.0 * ((p.op2 * p.d1).cwiseProduct(Z1) - (p.op4 * p.d1).cwiseProduct(rs2) +
                    p.op6 * p.d1)
                       .sum();
    v[19] = 28.0 * (dprod(op2op2, p.op2).cwiseProduct(p.d1)).sum();
    v[20] = 21.0 * mask(LD(p.d1, op2D2op2)).sum();
    v[21] = 14.0 * mask(LD(p.d2, op2Dop2)).sum();
    v[22] = 7.0 * mask(LD(p.d1, RD(op2op2, p.d2))).sum();
    v[23] = 7.0 * dOOO.dot(p.d4);
    v[24] = 28.0 * (dprod(p.op3, OO).cwiseProduct(rs2) - dprod(p.op5, OO) -
                    dprod(op3O, p.op3))
                       .sum();
    {
        const Vec dOop3O = rs(Oop3.cwiseProduct(p.O));
        v[25] = 7.0 * (dOop3O.cwiseProduct(rs2) - 2.0 * dprod(op3op3, p.O)).sum();
        v[26] = 7.0 * dOop3O.dot(p.d2);
    }
    v[27] = 42.0 * dprod(p.op3, OO).dot(p.d2);
    v[28] = 7.0 * (dOOO.cwiseProduct(rs4) - 2.0 * dprod(p.op5, OO)).sum();
    v[29] = 7.0 * mask(LD(p.d1, RD(op2Dop2, p.d1))).sum();
    v[30] = 28.0 * rs(op3DO.transpose().cwiseProduct(p.O)).dot(p.d1);
    v[31] = 28.0 * p.d1.dot(p.op3.cwiseProduct(OO) * p.d1);
    v[32] = 14.0 * (rs(OD2O.cwiseProduct(p.O)).cwiseProduct(rs2) - dprod(p.op3, OD2O) -
                    dprod(p.op3, LD(p.d2, OO)))
                       .sum();
    v[33] = 14.0 * rs(ODO.cwiseProduct(p.O)).dot(p.d3);
    v[34] = 7.0 * p.d2.dot(rs(OD2O.cwiseProduct(p.O)));
    v[35] = 7.0 * (mask(OO).cwiseProduct(mask(OD3O)).sum() - mask(op2D3op2).sum());
    v[36] = 14.0 * (mask(op3O).cwiseProduct(ODO).sum() - mask(op4Dop2).sum());
    v[37] = 28.0 * (mask(op3DO).cwiseProduct(OO).sum() - mask(op4Dop2).sum());

    const Mat Z2 = mask(mask(OO) * p.O - p.O.cwiseProduct(rowrep(rs2) - p.op2));
    const Mat Z3 = mask(p.O.cwiseProduct(mask(OO)));
    const Mat Z4 = mask(p.O.cwiseProduct(mask(op5O)));
    const Mat Z6 = mask(p.op3.cwiseProduct(mask(OO)));
    const Mat Z7m = mask(p.O.cwiseProduct(mask(op3op3)));
    v[38] = 7.0 * (mask(op3O).cwiseProduct(Z2) - (mask(p.op4 * Z3) - Z4) -
                   (mask(Z6 * p.op2) - Z7m))
                      .sum();
    const double Z7 = 0.5 * (p.O.cwiseProduct(mask(op2op2)).cwiseProduct(mask(OO)) -
                             p.O.cwiseProduct(mask(op3op3)))
                                .sum();
    v[39] = 7.0 * (p.O.cwiseProduct(mask(OO))
                       .cwiseProduct(colrep(rs2) - p.op2)
                       .cwiseProduct(rowrep(rs2) - p.op2)
                       .sum() -
                   p.O.cwiseProduct(mask(op3O)).cwiseProduct(rowrep(rs2) - p.op2).sum() -
                   p.O.cwiseProduct(mask(Oop3)).cwiseProduct(colrep(rs2) - p.op2).sum() +
                   p.O.cwiseProduct(mask(op3op3)).sum()) -
            14.0 * Z7;
    v[40] = 21.0 * (p.d2.cwiseProduct(dOOO).cwiseProduct(rs2) -
                    2.0 * p.d2.cwiseProduct(dprod(p.op3, OO)))
                       .sum();
    v[41] = 7.0 * (dOOO.cwiseProduct(p.op2 * p.d2) - 2.0 * dprod(p.op3, LD(p.d2, OO))).sum();
    v[42] = 7.0 * ((dOOO.cwiseProduct(rs(mask(op2op2))) - 2.0 * dprod(op3op3, p.O)).sum() -
                   2.0 * (dprod(p.op3, OO).cwiseProduct(rs2) - dprod(p.op5, OO) -
                          dprod(op3O, p.op3))
                             .sum()) -
            28.0 * Z7;
    v[43] = 14.0 * (dOOO.cwiseProduct(Z1) -
                    2.0 * (dprod(p.op3, OO).cwiseProduct(rs2) - dprod(p.op5, OO) -
                           0.5 * dprod(op3O, p.op3)))
                       .sum();
    v[44] = 56.0 * Z7;

    const Mat Z8 = mask(p.O.cwiseProduct(mask(op3O)));
    const Mat Z9 = mask(p.O.cwiseProduct(mask(OO)));
    const Mat Z10 = mask(p.O.cwiseProduct(mask(Oop3)));
    const Mat Z11 = mask(OO).cwiseProduct(Z2) - (mask(p.op2 * Z3) - Z8) -
                    (mask(Z9 * p.op2) - Z10);
    v[45] = 14.0 * ((0.5 * rs(Z11).cwiseProduct(rs2)).sum() - (1.0 / 7.0) * v[38] -
                    p.op2.cwiseProduct(Z11).sum());
    v[46] = 21.0 * p.op2.cwiseProduct(Z11).sum();
    v[47] = 7.0 * rs(Z11).dot(p.d2);
    v[48] = 7.0 * p.d2.dot(rs(ODO.cwiseProduct(RD(p.O, p.d1))));
    v[49] = 14.0 * (p.d1.cwiseProduct(dOOO).cwiseProduct(p.op2 * p.d1) -
                    2.0 * p.d1.cwiseProduct(dprod(p.op3, LD(p.d1, OO))))
                       .sum();
    v[50] = 14.0 * (rs(OO.cwiseProduct(RD(p.O, p.d1))).cwiseProduct(p.op2 * p.d1) -
                    dprod(p.op3, LD(p.d1, ODO)) - dprod(p.op3, LD(p.d2, OO)))
                       .sum();
    v[51] = 28.0 * (p.d1.cwiseProduct(rs(ODO.cwiseProduct(p.O))).cwiseProduct(rs2) -
                    p.d1.cwiseProduct(dprod(p.op3, LD(p.d1, OO))) -
                    p.d1.cwiseProduct(rs(p.op3.cwiseProduct(ODO))))
                       .sum();
    v[52] = 7.0 * (rs(ODO.cwiseProduct(RD(p.O, p.d1))).cwiseProduct(rs2) -
                   2.0 * dprod(p.op3, LD(p.d1, ODO)))
                      .sum();
    v[53] = 14.0 * rs(mask(OO).cwiseProduct(mask(ODO)) - mask(op2Dop2)).dot(p.d2);
    v[54] = 7.0 * (mask(ODO).cwiseProduct(mask(OD2O)) - mask(op2D3op2)).sum();

    const double Z12 = 0.5 * P.cwiseProduct(RD(p.op2, p.d1)).sum();
    const double Z13 = (mask(op3DO).cwiseProduct(mask(OO)) - mask(op4Dop2)).sum();
    const double Z14 =
        0.5 * (mask(ODO).cwiseProduct(mask(OO)) - mask(op2Dop2)).cwiseProduct(p.op2).sum();
    const double Z15 = (mask(op3O).cwiseProduct(mask(ODO)) - mask(op4Dop2)).sum();
    v[55] = 14.0 * ((0.5 * rs(P).cwiseProduct(p.op2 * p.d1)).sum() - Z13 - Z12);
    v[56] = 28.0 * ((0.5 * rs(P).cwiseProduct(p.d1.cwiseProduct(rs2))).sum() - Z13 - Z12);
    v[57] = 14.0 * (rs(mask(ODO).cwiseProduct(mask(OO)) - mask(op2Dop2)).dot(rs2) - Z13 -
                    Z15 - 2.0 * Z14);
    v[58] = 14.0 * ((0.5 * (P * p.d1).cwiseProduct(rs2)).sum() - Z15 - Z12);
    v[59] = 84.0 * Z12;
    v[60] = 42.0 * Z14;

    const double Z26 = trO7 - v[13] - v[14] - v[24] - v[25] - v[28] - v[38] - v[39] -
                       (v[42] + v[43] + v[44] + v[45] + v[46]);

    const Mat Z16 = (1.0 / 6.0) * (mask(OO).cwiseProduct(mask(OO)).cwiseProduct(mask(OO)) -
                                   mask(op3op3) -
                                   3.0 * (mask(op2op2).cwiseProduct(mask(OO)) - mask(op3op3)));
    v[61] = 42.0 * Z16.cwiseProduct(p.O).sum();
    const double Z17 = (rs(0.5 * P).cwiseProduct(0.5 * dOOO)).sum();
    v[62] = 28.0 * (Z17 - (6.0 / 84.0) * v[61] - (2.0 / 42.0) * v[46] - (3.0 / 56.0) * v[44]);
    v[63] = Z26 - v[61] - v[62];
    v[64] = 7.0 * mask(LD(p.d1, RD(ODO, p.d1))).cwiseProduct(mask(OO)).sum() -
            7.0 * mask(LD(p.d1, RD(op2Dop2, p.d1))).sum();
    v[65] = 7.0 * p.d1.dot(Z11 * p.d1);
    const Vec Z18 = rs(P.cwiseProduct(p.op2));
    v[66] = 7.0 * ((dOOO.cwiseProduct(dOOO) - 2.0 * dprod(op2op2, p.op2) - 4.0 * Z18)
                       .cwiseProduct(p.d1))
                      .sum();
    const double Z20 =
        0.5 * (mask(OO).cwiseProduct(mask(ODO)) - op2Dop2).cwiseProduct(p.op2).sum();
    v[67] = 14.0 * ((dOOO.cwiseProduct(rs(OO.cwiseProduct(RD(p.O, p.d1)))) -
                     2.0 * dprod(op2op2, LD(p.d1, p.op2)))
                        .sum() -
                    2.0 * Z18.dot(p.d1) - 4.0 * Z20);
    const Mat X2 = LD(p.d1, RD(p.op2, p.d1));
    const Mat Z21 = mask(mask(RD(ODO, p.d1)) * p.O -
                         p.O.cwiseProduct(rowrep(rs(X2)) - X2));
    const Mat Z22 = mask(p.O.cwiseProduct(mask(ODO)));
    const Mat Z23 = mask(p.O.cwiseProduct(mask(LD(p.d1, op3DO))));
    const Mat Z24 = mask(p.O.cwiseProduct(mask(RD(op3DO.transpose(), p.d1))));
    v[68] = 7.0 * (mask(OO).cwiseProduct(Z21) - (mask(p.op2 * LD(p.d1, Z22)) - Z23) -
                   (mask(Z22 * LD(p.d1, p.op2)) - Z24))
                      .sum();
    {
        // Z_25 - Z_26 - sum(E_64:E_68) with the loopless add-backs of
        // Z_25/Z_26 cancelled symbolically (see D_32); subtracts only
        // loop-pattern terms so the bucket stays exact at zero diagonal.
        v[69] = trM7 - trO7 - (v[64] + v[65] + v[66] + v[67] + v[68]);
        static constexpr int loopless[] = {13, 14, 24, 25, 28, 38, 39, 42, 43, 44, 45, 46};
        for (int n = 1; n <= 60; ++n) {
            if (std::find(std::begin(loopless), std::end(loopless), n) == std::end(loopless))
                v[69] -= v[n];
        }
    }

    Values out;
    for (int n = 1; n <= 69; ++n) out.emplace_back("E_" + std::to_string(n), v[n]);
    return out;
}

} // namespace

std::vector<std::pair<std::string, double>> closed_form_values(const Mat& m, int k) {
    switch (k) {
        case 3: return gamma3(m);
        case 4: return gamma4(m);
        case 5: return gamma5(m);
        case 6: return gamma6(m);
        case 7: return gamma7(m);
        default: throw std::invalid_argument("closed_form_values: k must be in 3..7");
    }
}

} // namespace detail
} // namespace schatten
