#ifndef POTENTIA_HILBERT_OPERATORS_HPP
#define POTENTIA_HILBERT_OPERATORS_HPP

#include "potentia/hilbert/matrix.hpp"
#include "potentia/hilbert/state.hpp"

#include <vector>

namespace potentia::hilbert {

inline constexpr double kHermitianTol = 1e-9;

/// Observable: matrix validated Hermitian within 1e-9 at construction.
class HermitianOperator {
  public:
    static HermitianOperator create(CMatrix m);

    std::size_t dim() const { return matrix_.dim(); }
    const CMatrix& matrix() const { return matrix_; }

  private:
    explicit HermitianOperator(CMatrix m) : matrix_(std::move(m)) {}

    CMatrix matrix_;
};

/// Hermitian idempotent matrix (both within 1e-9).
class Projector {
  public:
    static Projector create(CMatrix m);

    std::size_t dim() const { return matrix_.dim(); }
    const CMatrix& matrix() const { return matrix_; }

    /// trace rounded to the nearest integer
    std::size_t rank() const;

  private:
    explicit Projector(CMatrix m) : matrix_(std::move(m)) {}

    CMatrix matrix_;
};

/// P = |v><v|.
Projector rank1_projector(const StateVector& v);

/// Born weight <psi|P|psi>, computed both directly and as Tr[P_psi P];
/// the two routes must agree within 1e-9 (checked on every call). The
/// returned value is clamped to [0, 1].
double born_weight(const StateVector& psi, const Projector& p);

/// Finite union of real intervals and isolated points. Normalized on
/// construction: intervals sorted and merged, points deduplicated and
/// absorbed into covering intervals.
class BorelSet {
  public:
    struct Interval {
        double lo;
        double hi;
        bool lo_closed;
        bool hi_closed;
    };

    BorelSet() = default;
    BorelSet(std::vector<Interval> intervals, std::vector<double> points);

    static BorelSet real_line();
    static BorelSet point(double x) { return BorelSet({}, {x}); }
    static BorelSet closed(double lo, double hi) { return BorelSet({{lo, hi, true, true}}, {}); }

    /// Membership with tolerance: within tol of an isolated point or a
    /// closed endpoint counts as inside; within tol of an open endpoint
    /// counts as outside.
    bool contains(double x, double tol = 1e-9) const;

    bool empty() const { return intervals_.empty() && points_.empty(); }
    const std::vector<Interval>& intervals() const { return intervals_; }
    const std::vector<double>& points() const { return points_; }

  private:
    std::vector<Interval> intervals_;
    std::vector<double> points_;
};

}  // namespace potentia::hilbert

#endif
