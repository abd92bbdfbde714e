#include "scalecomplex/homology.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <string>

#include "scalecomplex/errors.hpp"

namespace scx {

namespace {

using Column = SparseMatrix::Column;

// a + factor * b, both sorted by row.
Column axpy(const Column& a, const Rational& factor, const Column& b)
{
    Column out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, factor * b[j].second);
            ++j;
        } else {
            Rational v = a[i].second + factor * b[j].second;
            if (v != 0)
                out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

void check_chain_faces(const Chain& c, const SimplicialComplex& k)
{
    for (const auto& [face, coeff] : c.terms())
        if (!k.contains(face))
            throw DomainError("chain face " + format_scale_numeric(face) + " is not in the complex");
}

} // namespace

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<long long>>& dense)
{
    SparseMatrix m;
    m.rows = dense.size();
    const std::size_t ncols = dense.empty() ? 0 : dense.front().size();
    m.columns.resize(ncols);
    for (std::size_t r = 0; r < dense.size(); ++r) {
        if (dense[r].size() != ncols)
            throw DomainError("ragged dense matrix");
        for (std::size_t c = 0; c < ncols; ++c)
            if (dense[r][c] != 0)
                m.columns[c].emplace_back(r, Rational(static_cast<long>(dense[r][c])));
    }
    return m;
}

std::vector<std::vector<Rational>> SparseMatrix::to_dense() const
{
    std::vector<std::vector<Rational>> out(rows, std::vector<Rational>(cols()));
    for (std::size_t c = 0; c < cols(); ++c)
        for (const auto& [r, v] : columns[c])
            out[r][c] = v;
    return out;
}

int BoundaryMatrix::entry(std::size_t row, std::size_t col) const
{
    for (const auto& e : columns.at(col))
        if (e.row == row)
            return e.sign;
    return 0;
}

SparseMatrix BoundaryMatrix::to_sparse() const
{
    SparseMatrix m;
    m.rows = rows();
    m.columns.resize(cols());
    for (std::size_t c = 0; c < cols(); ++c) {
        auto& col = m.columns[c];
        for (const auto& e : columns[c])
            col.emplace_back(e.row, Rational(e.sign));
        std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return m;
}

Rational Chain::coefficient(Scale face) const
{
    auto it = terms_.find(face);
    return it == terms_.end() ? Rational(0) : it->second;
}

Chain& Chain::add(Scale face, const Rational& coeff)
{
    if (face.size() != dimension_ + 1)
        throw DomainError("face " + format_scale_numeric(face) + " does not have dimension " +
                          std::to_string(dimension_));
    if (coeff == 0)
        return *this;
    auto [it, inserted] = terms_.try_emplace(face, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
    return *this;
}

Chain Chain::operator+(const Chain& other) const
{
    if (other.dimension_ != dimension_ && !other.is_zero() && !is_zero())
        throw DomainError("cannot add chains of different dimensions");
    Chain out = is_zero() ? Chain(other.dimension_) : *this;
    for (const auto& [f, q] : other.terms_)
        out.add(f, q);
    return out;
}

Chain Chain::operator-(const Chain& other) const { return *this + other * Rational(-1); }

Chain Chain::operator*(const Rational& factor) const
{
    Chain out(dimension_);
    if (factor == 0)
        return out;
    for (const auto& [f, q] : terms_)
        out.terms_.emplace(f, q * factor);
    return out;
}

std::uint64_t BettiVector::at_dim(int d) const
{
    const auto i = static_cast<std::size_t>(d + 1);
    return d < -1 || i >= values.size() ? 0 : values[i];
}

bool BettiVector::operator==(const BettiVector& other) const
{
    const int top = static_cast<int>(std::max(values.size(), other.values.size())) - 2;
    for (int d = -1; d <= top; ++d)
        if (at_dim(d) != other.at_dim(d))
            return false;
    return true;
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& k, int n)
{
    if (n < 0 || n > k.max_dimension())
        throw DomainError("boundary operator index " + std::to_string(n) + " outside [0, " +
                          std::to_string(k.max_dimension()) + "]");
    BoundaryMatrix m;
    m.n = n;
    m.row_faces = k.faces_of_dim(n - 1);
    m.col_faces = k.faces_of_dim(n);
    m.columns.reserve(m.col_faces.size());
    for (Scale f : m.col_faces) {
        std::vector<BoundaryMatrix::Entry> col;
        int sign = 1;
        for (int v : f.members()) {
            col.push_back({static_cast<std::uint32_t>(k.index_of(f.without(v))), sign});
            sign = -sign;
        }
        m.columns.push_back(std::move(col));
    }
    return m;
}

std::size_t rank_exact(const SparseMatrix& m)
{
    // Column reduction keyed on the lowest nonzero row. Stored pivot columns
    // are scaled so that their lowest entry is 1.
    std::vector<std::ptrdiff_t> pivot_of_row(m.rows, -1);
    std::vector<Column> reduced;
    reduced.reserve(m.cols());
    for (const Column& original : m.columns) {
        Column col = original;
        while (!col.empty()) {
            const std::size_t low = col.back().first;
            const std::ptrdiff_t p = pivot_of_row[low];
            if (p < 0) {
                const Rational inv = 1 / col.back().second;
                for (auto& e : col)
                    e.second *= inv;
                pivot_of_row[low] = static_cast<std::ptrdiff_t>(reduced.size());
                reduced.push_back(std::move(col));
                break;
            }
            const Rational factor = -col.back().second;
            col = axpy(col, factor, reduced[static_cast<std::size_t>(p)]);
        }
    }
    return reduced.size();
}

std::size_t rank_exact(const BoundaryMatrix& m) { return rank_exact(m.to_sparse()); }

std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix& m)
{
    auto a = m.to_dense();
    const std::size_t ncols = m.cols();
    std::vector<std::ptrdiff_t> pivot_col_of_row;
    std::vector<bool> is_pivot_col(ncols, false);
    std::size_t row = 0;
    for (std::size_t c = 0; c < ncols && row < a.size(); ++c) {
        std::size_t sel = row;
        while (sel < a.size() && a[sel][c] == 0)
            ++sel;
        if (sel == a.size())
            continue;
        std::swap(a[row], a[sel]);
        const Rational inv = 1 / a[row][c];
        for (auto& x : a[row])
            x *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][c] == 0)
                continue;
            const Rational f = a[r][c];
            for (std::size_t j = c; j < ncols; ++j)
                a[r][j] -= f * a[row][j];
        }
        pivot_col_of_row.push_back(static_cast<std::ptrdiff_t>(c));
        is_pivot_col[c] = true;
        ++row;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot_col[free])
            continue;
        std::vector<Rational> v(ncols);
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
            v[static_cast<std::size_t>(pivot_col_of_row[r])] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

BettiVector reduced_betti(const SimplicialComplex& k)
{
    const int top = k.max_dimension();
    std::vector<std::future<std::size_t>> jobs;
    for (int n = 0; n <= top; ++n)
        jobs.push_back(std::async(std::launch::async, [&k, n] { return rank_exact(boundary_matrix(k, n)); }));
    // rank[d + 1] = rank ∂_d; ∂_{-1} and ∂_{top+1} are zero maps.
    std::vector<std::size_t> rank(static_cast<std::size_t>(top) + 3, 0);
    for (int n = 0; n <= top; ++n)
        rank[static_cast<std::size_t>(n) + 1] = jobs[static_cast<std::size_t>(n)].get();

    BettiVector b;
    for (int d = -1; d <= top; ++d) {
        const auto i = static_cast<std::size_t>(d + 1);
        b.values.push_back(k.faces_of_dim(d).size() - rank[i] - rank[i + 1]);
    }
    return b;
}

int connected_components(const SimplicialComplex& k)
{
    const auto verts = k.vertices();
    if (verts.empty())
        throw DomainError("complex has no vertices");
    std::vector<int> parent(static_cast<std::size_t>(k.ground_set_size()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    int components = static_cast<int>(verts.size());
    for (Scale e : k.faces_of_dim(1)) {
        const auto m = e.members();
        const int a = find(m[0]);
        const int b = find(m[1]);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --components;
        }
    }
    return components;
}

Chain apply_boundary(const Chain& c, const SimplicialComplex& k)
{
    if (c.dimension() < 0)
        throw DomainError("boundary of a (-1)-chain is undefined");
    check_chain_faces(c, k);
    Chain out(c.dimension() - 1);
    for (const auto& [face, coeff] : c.terms()) {
        int sign = 1;
        for (int v : face.members()) {
            out.add(face.without(v), coeff * sign);
            sign = -sign;
        }
    }
    return out;
}

bool is_cycle(const Chain& c, const SimplicialComplex& k) { return apply_boundary(c, k).is_zero(); }

std::size_t homology_rank_of_cycles(const std::vector<Chain>& cycles, const SimplicialComplex& k, int d)
{
    for (const Chain& c : cycles) {
        if (c.dimension() != d)
            throw DomainError("chain of dimension " + std::to_string(c.dimension()) + " given where " +
                              std::to_string(d) + " was expected");
        if (d >= 0 && !is_cycle(c, k))
            throw DomainError("chain is not a cycle");
        check_chain_faces(c, k);
    }

    SparseMatrix boundaries;
    boundaries.rows = k.faces_of_dim(d).size();
    if (d + 1 <= k.max_dimension())
        boundaries = boundary_matrix(k, d + 1).to_sparse();

    SparseMatrix combined;
    combined.rows = boundaries.rows;
    for (const Chain& c : cycles) {
        SparseMatrix::Column col;
        for (const auto& [face, coeff] : c.terms())
            col.emplace_back(k.index_of(face), coeff);
        std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        combined.columns.push_back(std::move(col));
    }
    for (const auto& col : boundaries.columns)
        combined.columns.push_back(col);
    return rank_exact(combined) - rank_exact(boundaries);
}

std::string rational_to_string(const Rational& q)
{
    Rational c = q;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational rational_from_string(const std::string& text)
{
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0)
        throw ParseError("malformed rational: " + text);
    if (q.get_den() == 0)
        throw ParseError("zero denominator: " + text);
    q.canonicalize();
    return q;
}

} // namespace scx
