#ifndef SCALECOMPLEX_HOMOLOGY_HPP
#define SCALECOMPLEX_HOMOLOGY_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "scalecomplex/complex.hpp"

namespace scx {

using Rational = mpq_class;

/// Column-major sparse matrix over Q. Each column holds (row, value) pairs
/// with strictly increasing rows and no stored zeros.
struct SparseMatrix {
    using Entry = std::pair<std::size_t, Rational>;
    using Column = std::vector<Entry>;

    std::size_t rows = 0;
    std::vector<Column> columns;

    std::size_t cols() const { return columns.size(); }

    static SparseMatrix from_dense(const std::vector<std::vector<long long>>& dense);
    std::vector<std::vector<Rational>> to_dense() const;
};

/// Matrix of the boundary map from n-faces to (n-1)-faces. Rows follow
/// faces_of_dim(n-1), columns follow faces_of_dim(n). The column of a face
/// {v_0 < ... < v_n} has entry (-1)^i at the row of the face omitting v_i.
struct BoundaryMatrix {
    struct Entry {
        std::uint32_t row;
        int sign;
    };

    int n = 0;
    std::vector<Scale> row_faces;
    std::vector<Scale> col_faces;
    std::vector<std::vector<Entry>> columns;

    std::size_t rows() const { return row_faces.size(); }
    std::size_t cols() const { return col_faces.size(); }
    int entry(std::size_t row, std::size_t col) const;
    SparseMatrix to_sparse() const;
};

/// A formal rational combination of faces of a single dimension. Zero
/// coefficients are never stored.
class Chain {
public:
    Chain() = default;
    explicit Chain(int dimension) : dimension_(dimension) {}

    int dimension() const { return dimension_; }
    const std::map<Scale, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(Scale face) const;

    /// Adds `coeff * face`; throws DomainError if |face| != dimension + 1.
    Chain& add(Scale face, const Rational& coeff);

    Chain operator+(const Chain& other) const;
    Chain operator-(const Chain& other) const;
    Chain operator*(const Rational& factor) const;
    bool operator==(const Chain&) const = default;

private:
    int dimension_ = -1;
    std::map<Scale, Rational> terms_;
};

/// Reduced Betti numbers; values[i] is the rank of reduced H_{i-1}.
struct BettiVector {
    std::vector<std::uint64_t> values;

    std::uint64_t at_dim(int d) const;
    /// Missing trailing entries count as zero.
    bool operator==(const BettiVector& other) const;
};

BoundaryMatrix boundary_matrix(const SimplicialComplex& k, int n);

/// Rank over Q by exact sparse elimination.
std::size_t rank_exact(const SparseMatrix& m);
std::size_t rank_exact(const BoundaryMatrix& m);

/// A basis of the right kernel, one dense vector of length cols() each.
std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix& m);

/// Reduced Betti numbers for dimensions -1..max_dimension. Ranks of the
/// individual boundary maps are computed concurrently.
BettiVector reduced_betti(const SimplicialComplex& k);

/// Component count of the 1-skeleton; throws DomainError for {∅}.
int connected_components(const SimplicialComplex& k);

Chain apply_boundary(const Chain& c, const SimplicialComplex& k);
bool is_cycle(const Chain& c, const SimplicialComplex& k);

/// Dimension of the span of the classes of `cycles` in H_d(k):
/// rank [cycles | ∂_{d+1}] - rank ∂_{d+1}.
std::size_t homology_rank_of_cycles(const std::vector<Chain>& cycles, const SimplicialComplex& k, int d);

/// "p/q" with q > 0.
std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& text);

} // namespace scx

#endif
