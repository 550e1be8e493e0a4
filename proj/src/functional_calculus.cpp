#include "oplab/functional_calculus.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <string>

#include "oplab/json_io.hpp"
#include "oplab/linalg.hpp"

namespace oplab {

namespace {

// Identifies nodes within kNodeSnap of an earlier node; rejects the band up to
// kNodeConfluence.
std::vector<Complex> snap_nodes(const std::vector<Complex>& nodes)
{
    std::vector<Complex> out = nodes;
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const double gap = std::abs(out[i] - out[j]);
            if (gap == 0.0) {
                continue;
            }
            if (gap <= kNodeSnap) {
                out[i] = out[j];
            } else if (gap < kNodeConfluence) {
                throw Error(ErrorKind::NearConfluence,
                            "nodes " + std::to_string(j) + " and " + std::to_string(i) + " are " +
                                std::to_string(gap) + " apart");
            }
        }
    }
    return out;
}

// Hermite divided differences over subsets of a fixed node list, memoized by
// bitmask.
class SubsetDifferences
{
public:
    SubsetDifferences(const SchurFunction& f, std::vector<Complex> nodes)
        : f_(f), nodes_(std::move(nodes)), memo_(std::size_t{1} << nodes_.size()), known_(memo_.size(), false)
    {
    }

    Complex operator()(unsigned mask)
    {
        if (known_[mask]) {
            return memo_[mask];
        }
        // widest pair in the subset
        int a = -1;
        int b = -1;
        double widest = 0.0;
        int first = std::countr_zero(mask);
        for (int i = 0; i < static_cast<int>(nodes_.size()); ++i) {
            if (!(mask & (1u << i))) {
                continue;
            }
            for (int j = i + 1; j < static_cast<int>(nodes_.size()); ++j) {
                if (!(mask & (1u << j))) {
                    continue;
                }
                const double d = std::abs(nodes_[i] - nodes_[j]);
                if (d > widest) {
                    widest = d;
                    a = i;
                    b = j;
                }
            }
        }
        Complex value;
        if (a < 0) {
            const int order = std::popcount(mask) - 1;
            value = taylor_at(f_, nodes_[first], order)[order];
        } else {
            value = ((*this)(mask & ~(1u << b)) - (*this)(mask & ~(1u << a))) / (nodes_[a] - nodes_[b]);
        }
        memo_[mask] = value;
        known_[mask] = true;
        return value;
    }

private:
    const SchurFunction& f_;
    std::vector<Complex> nodes_;
    std::vector<Complex> memo_;
    std::vector<bool> known_;
};

void check_node_count(std::size_t n)
{
    if (n == 0 || n > kMaxNodes) {
        throw Error(ErrorKind::Size, "divided differences take 1 to 8 nodes, got " + std::to_string(n));
    }
}

void check_closed_disk(const std::vector<Complex>& nodes)
{
    for (Complex z : nodes) {
        if (!(std::abs(z) <= 1.0 + DiskPoint::kBoundarySnap)) {
            throw Error(ErrorKind::SpectrumDomain, "node outside the closed disk, modulus " + std::to_string(std::abs(z)));
        }
    }
}

} // namespace

DividedDifferenceTable divided_differences(const SchurFunction& f, const std::vector<Complex>& nodes)
{
    check_node_count(nodes.size());
    check_closed_disk(nodes);
    DividedDifferenceTable out;
    out.nodes = snap_nodes(nodes);
    SubsetDifferences dd(f, out.nodes);
    const std::size_t n = nodes.size();
    out.table.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k + j < n; ++k) {
            const unsigned mask = ((1u << (j + 1)) - 1u) << k;
            out.table[j].push_back(dd(mask));
        }
    }
    return out;
}

Complex divided_difference(const SchurFunction& f, const std::vector<Complex>& nodes)
{
    check_node_count(nodes.size());
    check_closed_disk(nodes);
    SubsetDifferences dd(f, snap_nodes(nodes));
    return dd((1u << nodes.size()) - 1u);
}

ComplexMatrix apply_to_triangular(const SchurFunction& f, const ComplexMatrix& t)
{
    if (!t.is_square() || !t.is_upper_triangular()) {
        throw Error(ErrorKind::NonTriangular, "path sum needs an upper-triangular matrix");
    }
    const std::size_t n = t.rows();
    check_node_count(n);
    const std::vector<Complex> diag = t.diagonal_entries();
    check_closed_disk(diag);
    SubsetDifferences dd(f, snap_nodes(diag));

    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        out(i, i) = dd(1u << i);
        for (std::size_t j = i + 1; j < n; ++j) {
            // interior vertices strictly between i and j
            const std::size_t inner = j - i - 1;
            Complex sum = 0.0;
            for (unsigned pick = 0; pick < (1u << inner); ++pick) {
                unsigned mask = (1u << i) | (1u << j);
                Complex weight = 1.0;
                std::size_t prev = i;
                for (std::size_t s = 0; s < inner; ++s) {
                    if (pick & (1u << s)) {
                        const std::size_t k = i + 1 + s;
                        weight *= t(prev, k);
                        mask |= 1u << k;
                        prev = k;
                    }
                }
                weight *= t(prev, j);
                if (weight != Complex(0.0)) {
                    sum += weight * dd(mask);
                }
            }
            out(i, j) = sum;
        }
    }
    return out;
}

ComplexMatrix apply_function(const SchurFunction& f, const ComplexMatrix& m)
{
    if (m.is_square() && m.is_upper_triangular()) {
        return apply_to_triangular(f, m);
    }
    const SchurDecomposition s = schur(m);
    ComplexMatrix t = s.t;
    for (std::size_t i = 0; i < t.rows(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            t(i, j) = 0.0;
        }
    }
    return s.q * apply_to_triangular(f, t) * s.q.adjoint();
}

ComplexMatrix poly_eval_tuple(const MultiSchurFunction& p, const std::vector<ComplexMatrix>& tuple)
{
    if (tuple.size() != p.n_vars()) {
        throw Error(ErrorKind::Size, "tuple length does not match the number of variables");
    }
    const std::size_t size = tuple.front().rows();
    for (const auto& t : tuple) {
        if (!t.is_square() || t.rows() != size) {
            throw Error(ErrorKind::Size, "tuple matrices must be square of one size");
        }
    }
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        for (std::size_t j = i + 1; j < tuple.size(); ++j) {
            const double c = operator_norm(tuple[i] * tuple[j] - tuple[j] * tuple[i]);
            if (c > kCommutatorTolerance) {
                throw Error(ErrorKind::Commutativity, "commutator norm " + std::to_string(c));
            }
        }
    }

    if (!p.is_polynomial()) {
        ComplexMatrix out = ComplexMatrix::identity(size);
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            out = out * apply_function(p.factors()[i], tuple[i]);
        }
        return out;
    }

    std::map<std::pair<std::size_t, int>, ComplexMatrix> powers;
    auto power = [&](std::size_t var, int e) -> const ComplexMatrix& {
        if (e > kMaxTupleDegree) {
            throw Error(ErrorKind::Size, "tuple degree above 32");
        }
        auto it = powers.find({var, e});
        if (it != powers.end()) {
            return it->second;
        }
        ComplexMatrix m = ComplexMatrix::identity(size);
        for (int k = 1; k <= e; ++k) {
            auto found = powers.find({var, k});
            if (found == powers.end()) {
                m = m * tuple[var];
                powers.emplace(std::pair{var, k}, m);
            } else {
                m = found->second;
            }
        }
        return powers.emplace(std::pair{var, e}, m).first->second;
    };

    ComplexMatrix out(size, size);
    for (const auto& [alpha, c] : p.coefficients()) {
        ComplexMatrix term = ComplexMatrix::identity(size);
        for (std::size_t v = 0; v < alpha.size(); ++v) {
            if (alpha[v] > 0) {
                term = term * power(v, alpha[v]);
            }
        }
        out += c * term;
    }
    return out;
}

InequalityReport von_neumann_check(const SchurFunction& f, const ComplexMatrix& t, double tolerance)
{
    const double norm = operator_norm(t);
    if (norm > 1.0 + tolerance) {
        throw Error(ErrorKind::NotContraction, "von Neumann check needs a contraction, norm " + std::to_string(norm));
    }
    const ComplexMatrix ft = apply_function(f, t);
    return make_report("von-neumann", operator_norm(ft), f.certified_sup_norm(), tolerance,
                       {{"function", to_json(f)}, {"matrix", matrix_to_json(t)}, {"matrix_norm", norm}});
}

InequalityReport von_neumann_check(const MultiSchurFunction& p, const std::vector<ComplexMatrix>& tuple,
                                   double tolerance)
{
    nlohmann::json norms = nlohmann::json::array();
    for (const auto& t : tuple) {
        if (t.rows() != 2 && t.rows() != 3) {
            throw Error(ErrorKind::Size, "tuple von Neumann check is limited to 2x2 and 3x3 matrices");
        }
        const double norm = operator_norm(t);
        if (norm > 1.0 + tolerance) {
            throw Error(ErrorKind::NotContraction, "tuple member has norm " + std::to_string(norm));
        }
        norms.push_back(norm);
    }
    const ComplexMatrix pt = poly_eval_tuple(p, tuple);
    return make_report("von-neumann-tuple", operator_norm(pt), p.certified_sup_norm(), tolerance,
                       {{"function", to_json(p)}, {"size", tuple.front().rows()}, {"matrix_norms", norms}});
}

} // namespace oplab
