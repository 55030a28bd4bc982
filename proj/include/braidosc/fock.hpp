#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "braidosc/numeric.hpp"

namespace braidosc {

// Truncated Fock representations a|n> = a_n|n-1>, a*|n> = a*_{n+1}|n+1>,
// q^N|n> = q^n|n>, for the one-parameter oscillator families.
//
//   type1: aa* - Q1 a*a = q^{2N}   [n+1] = Q1 [n] + q^{2n}
//   type2: aa* - Q1 a*a = q^N      [n+1] = Q1 [n] + q^n
//   bm1  : type1 at Q1 = q^-2
//   bm2  : type2 at Q1 = q^-1

enum class FockFamily { Type1, Type2, BM1, BM2 };
enum class FockGauge { Exact, Hermitian };

inline const char* family_name(FockFamily f) {
    switch (f) {
        case FockFamily::Type1: return "type1";
        case FockFamily::Type2: return "type2";
        case FockFamily::BM1: return "bm1";
        case FockFamily::BM2: return "bm2";
    }
    return "?";
}

struct FockConfig {
    FockFamily family = FockFamily::Type1;
    int levels = 8;  // truncation L; states |0..L>
    Rat q = Rat(2);
    Rat Q1 = Rat(3);  // derived for bm1/bm2
    FockGauge gauge = FockGauge::Exact;

    void validate() const {
        if (levels < 1) throw DomainError("levels must be at least 1");
        if (q == 0) throw DomainError("q must be nonzero");
        if (effective_Q1() == 0) throw DomainError("Q1 must be nonzero");
    }

    Rat effective_Q1() const {
        switch (family) {
            case FockFamily::BM1: return Rat(1) / (q * q);
            case FockFamily::BM2: return Rat(1) / q;
            default: return Q1;
        }
    }

    bool second_type() const {
        return family == FockFamily::Type2 || family == FockFamily::BM2;
    }
};

namespace detail {

// q^{2n} for the first type, q^n for the second.
inline Rat step_weight(const FockConfig& cfg, int n) {
    return rat_pow(cfg.q, cfg.second_type() ? n : 2 * n);
}

}  // namespace detail

// Occupation number [n] = a*_n a_n, computed from the closed form
//   type1: (Q1^n - q^{2n}) / (Q1 - q^2)
//   type2: (Q1^n - q^n)   / (Q1 - q)
// and from the recursion [0] = 0, [n+1] = Q1 [n] + weight(n); the two
// routes must agree. When the denominator degenerates (Q1 = q^2 resp.
// Q1 = q) the closed form is a limit, n q^{2(n-1)} resp. n q^{n-1},
// returned only when explicitly requested.
inline Rat occupation(int n, const FockConfig& cfg, bool allow_degenerate_limit = false) {
    if (n < 0) throw DomainError("occupation index must be nonnegative");
    cfg.validate();
    Rat Q1 = cfg.effective_Q1();
    Rat base = cfg.second_type() ? cfg.q : cfg.q * cfg.q;
    if (Q1 == base) {
        if (!allow_degenerate_limit)
            throw DomainError(std::string("degenerate denominator for ") +
                              family_name(cfg.family) + ": Q1 equals " +
                              (cfg.second_type() ? "q" : "q^2"));
        return Rat(n) * rat_pow(base, n - 1);
    }
    Rat closed = (rat_pow(Q1, n) - rat_pow(base, n)) / (Q1 - base);
    Rat rec(0);
    for (int k = 0; k < n; ++k) rec = Q1 * rec + detail::step_weight(cfg, k);
    if (closed != rec)
        throw std::logic_error("closed form and recursion disagree");  // unreachable
    return closed;
}

// Exact gauge: a_n = [n], a*_n = 1. Hermitian gauge: a_n = a*_n = sqrt([n])
// in floating point, so a* is the numeric adjoint of a.
struct FockMatrices {
    int levels;
    std::vector<std::vector<Rat>> a, astar, qn;        // exact gauge
    std::vector<std::vector<double>> af, astarf, qnf;  // hermitian gauge
    FockGauge gauge;
};

inline FockMatrices build_matrices(const FockConfig& cfg) {
    cfg.validate();
    const int dim = cfg.levels + 1;
    FockMatrices out;
    out.levels = cfg.levels;
    out.gauge = cfg.gauge;
    auto zeros = [&] { return std::vector<std::vector<Rat>>(dim, std::vector<Rat>(dim, Rat(0))); };
    if (cfg.gauge == FockGauge::Exact) {
        out.a = zeros();
        out.astar = zeros();
        out.qn = zeros();
        for (int n = 0; n <= cfg.levels; ++n) {
            out.qn[n][n] = rat_pow(cfg.q, n);
            if (n >= 1) out.a[n - 1][n] = occupation(n, cfg);
            if (n + 1 <= cfg.levels) out.astar[n + 1][n] = Rat(1);  // a*|L> truncated to 0
        }
    } else {
        auto zerosd = [&] {
            return std::vector<std::vector<double>>(dim, std::vector<double>(dim, 0.0));
        };
        out.af = zerosd();
        out.astarf = zerosd();
        out.qnf = zerosd();
        double qd = numerator(cfg.q).convert_to<double>() / denominator(cfg.q).convert_to<double>();
        for (int n = 0; n <= cfg.levels; ++n) {
            out.qnf[n][n] = std::pow(qd, n);
            Rat occ = occupation(n, cfg);
            if (occ < 0) throw DomainError("negative occupation number in hermitian gauge");
            double root = std::sqrt(numerator(occ).convert_to<double>() /
                                    denominator(occ).convert_to<double>());
            if (n >= 1) {
                out.af[n - 1][n] = root;
                out.astarf[n][n - 1] = root;
            }
        }
    }
    return out;
}

namespace detail {

template <class T>
std::vector<std::vector<T>> mat_mul(const std::vector<std::vector<T>>& A,
                                    const std::vector<std::vector<T>>& B) {
    const std::size_t n = A.size();
    std::vector<std::vector<T>> C(n, std::vector<T>(n, T(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (A[i][k] == T(0)) continue;
            for (std::size_t j = 0; j < n; ++j) C[i][j] += A[i][k] * B[k][j];
        }
    return C;
}

}  // namespace detail

struct FockResidual {
    // Per defining relation: max |entry| over columns |0..L-1| (interior)
    // and over column |L| (the truncation artifact), per relation.
    double interior = 0.0;
    double boundary = 0.0;
    Rat interior_exact = Rat(0);
    Rat boundary_exact = Rat(0);
};

// Residuals of the three defining relations on the truncated space. Exact
// gauge: exactly zero on interior states. Hermitian gauge: relative
// residual below 1e-12 for moderate truncations.
inline FockResidual relation_residual(const FockConfig& cfg) {
    FockMatrices m = build_matrices(cfg);
    const int dim = cfg.levels + 1;
    FockResidual out;
    if (cfg.gauge == FockGauge::Exact) {
        using M = std::vector<std::vector<Rat>>;
        Rat Q1 = cfg.effective_Q1();
        M aas = detail::mat_mul(m.a, m.astar);
        M asa = detail::mat_mul(m.astar, m.a);
        M aqn = detail::mat_mul(m.a, m.qn);
        M qna = detail::mat_mul(m.qn, m.a);
        M qnas = detail::mat_mul(m.qn, m.astar);
        M asqn = detail::mat_mul(m.astar, m.qn);
        auto scan = [&](auto entry) {
            for (int j = 0; j < dim; ++j)
                for (int i = 0; i < dim; ++i) {
                    Rat v = entry(i, j);
                    if (v < 0) v = -v;
                    Rat& slot = (j < dim - 1) ? out.interior_exact : out.boundary_exact;
                    if (v > slot) slot = v;
                }
        };
        scan([&](int i, int j) {
            Rat rhs = cfg.second_type() ? m.qn[i][j] : detail::mat_mul(m.qn, m.qn)[i][j];
            return aas[i][j] - Q1 * asa[i][j] - rhs;
        });
        scan([&](int i, int j) { return aqn[i][j] - cfg.q * qna[i][j]; });
        scan([&](int i, int j) { return qnas[i][j] - cfg.q * asqn[i][j]; });
        out.interior = out.interior_exact.convert_to<double>();
        out.boundary = out.boundary_exact.convert_to<double>();
    } else {
        using M = std::vector<std::vector<double>>;
        double Q1 = cfg.effective_Q1().convert_to<double>();
        double qd = Rat(cfg.q).convert_to<double>();
        M aas = detail::mat_mul(m.af, m.astarf);
        M asa = detail::mat_mul(m.astarf, m.af);
        M qq = detail::mat_mul(m.qnf, m.qnf);
        M aqn = detail::mat_mul(m.af, m.qnf);
        M qna = detail::mat_mul(m.qnf, m.af);
        M qnas = detail::mat_mul(m.qnf, m.astarf);
        M asqn = detail::mat_mul(m.astarf, m.qnf);
        double scale = 0.0;
        for (int j = 0; j < dim; ++j)
            for (int i = 0; i < dim; ++i)
                scale = std::max(scale, std::abs(cfg.second_type() ? m.qnf[i][j] : qq[i][j]) +
                                            std::abs(Q1 * asa[i][j]));
        auto scan = [&](auto entry) {
            for (int j = 0; j < dim; ++j)
                for (int i = 0; i < dim; ++i) {
                    double v = std::abs(entry(i, j)) / scale;
                    double& slot = (j < dim - 1) ? out.interior : out.boundary;
                    slot = std::max(slot, v);
                }
        };
        scan([&](int i, int j) {
            double rhs = cfg.second_type() ? m.qnf[i][j] : qq[i][j];
            return aas[i][j] - Q1 * asa[i][j] - rhs;
        });
        scan([&](int i, int j) { return aqn[i][j] - qd * qna[i][j]; });
        scan([&](int i, int j) { return qnas[i][j] - qd * asqn[i][j]; });
    }
    return out;
}

}  // namespace braidosc
