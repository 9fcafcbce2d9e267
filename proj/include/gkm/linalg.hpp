#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gkm/poly.hpp"

namespace gkm {

using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;  // row major

QMat identity_matrix(int n);
QMat matmul(const QMat& a, const QMat& b);
QVec matvec(const QMat& a, const QVec& x);
bool is_zero(const QVec& v);

// fraction-free elimination; entries are integers after clearing, exact result
Q bareiss_det(QMat m);
int rank(QMat m);

// exact inverse by Gauss-Jordan; throws std::domain_error if singular
QMat inverse(QMat m);

// column-sparse square matrix
struct SparseMat {
    std::vector<std::vector<std::pair<int, Q>>> cols;

    static SparseMat from_dense(const QMat& m);
    int dim() const { return static_cast<int>(cols.size()); }
    QVec apply(const QVec& x) const;
};

// Incremental row echelon basis: keeps reduced rows keyed by pivot column
class EchelonBasis {
public:
    explicit EchelonBasis(int dim) : dim_(dim) {}
    // returns true when v is independent of the rows so far (and adds it)
    bool insert(QVec v);
    bool contains(QVec v) const;
    int rank() const { return static_cast<int>(rows_.size()); }
    int dim() const { return dim_; }

private:
    void reduce(QVec& v) const;
    int dim_;
    std::map<int, QVec> rows_;
};

// Sparse exact linear system  sum_j a_ij x_j = b_i
class SparseSystem {
public:
    using Row = std::map<int, Q>;

    explicit SparseSystem(int nvars) : nvars_(nvars) {}
    void add_equation(Row lhs, Q rhs);
    int nvars() const { return nvars_; }

    struct Solution {
        bool feasible = false;
        int nullity = 0;
        std::vector<Q> x;  // free variables set to zero
    };
    Solution solve() const;

private:
    int nvars_;
    std::vector<std::pair<Row, Q>> eqs_;
};

}  // namespace gkm
