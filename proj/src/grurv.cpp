#include "randurv/grurv.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "randurv/decompose.hpp"
#include "randurv/error.hpp"
#include "randurv/rrr.hpp"

namespace randurv {

namespace {

void validate_chain(const FactorChain& chain) {
    if (chain.entries.empty()) {
        throw std::invalid_argument("grurv: empty factor chain");
    }
    const std::size_t n = chain.entries[0].matrix.rows();
    if (n == 0) {
        throw std::invalid_argument("grurv: factors must be nonempty");
    }
    for (std::size_t i = 0; i < chain.entries.size(); ++i) {
        const FactorChain::Entry& e = chain.entries[i];
        if (e.matrix.rows() != n || e.matrix.cols() != n) {
            std::ostringstream msg;
            msg << "grurv: factor " << i + 1 << " is not " << n << "x" << n;
            throw std::invalid_argument(msg.str());
        }
        if (e.exponent != 1 && e.exponent != -1) {
            std::ostringstream msg;
            msg << "grurv: factor " << i + 1 << " has exponent " << e.exponent
                << ", expected +1 or -1";
            throw std::invalid_argument(msg.str());
        }
        if (!e.matrix.all_finite()) {
            std::ostringstream msg;
            msg << "grurv: factor " << i + 1 << " has non-finite entries";
            throw std::invalid_argument(msg.str());
        }
    }
}

// An inverted factor must be numerically invertible for the implicit product
// to mean anything; checked once, when the factor is first used.
void check_invertible(const Matrix& a, std::size_t factor_index) {
    const std::vector<double> sv = jacobi_svd_values(a);
    const double eps = std::numeric_limits<double>::epsilon();
    if (!(sv.back() > static_cast<double>(a.rows()) * eps * sv.front())) {
        std::ostringstream msg;
        msg << "grurv: inverted factor " << factor_index << " is numerically singular";
        throw SingularError(msg.str(), factor_index);
    }
}

}  // namespace

GrurvResult grurv(const FactorChain& chain, SeededRng& rng) {
    validate_chain(chain);
    const std::size_t k = chain.entries.size();

    GrurvResult out;
    out.r_list.resize(k);
    out.exponents.resize(k);
    for (std::size_t i = 0; i < k; ++i) out.exponents[i] = chain.entries[i].exponent;

    // Last factor: sketch with the Haar sample.  For an inverted factor,
    // A^T = U L V gives A^{-1} = U L^{-T} V, so L^T serves as its R.
    const FactorChain::Entry& last = chain.entries[k - 1];
    if (last.exponent == 1) {
        RurvResult f = rurv(last.matrix, rng);
        out.u_current = std::move(f.u);
        out.r_list[k - 1] = std::move(f.r);
        out.v = std::move(f.v);
    } else {
        check_invertible(last.matrix, k);
        RulvResult f = rulv(transpose(last.matrix), rng);
        out.u_current = std::move(f.u);
        out.r_list[k - 1] = transpose(f.l);
        out.v = std::move(f.v);
    }

    // Remaining factors, right to left.  With M_part = U R_stack V already in
    // hand: A U = Q R makes A M_part = Q (R R_stack) V, while U^T A = R Q
    // makes A^{-1} M_part = Q^T (R^{-1} R_stack) V.
    for (std::size_t ii = k - 1; ii-- > 0;) {
        const FactorChain::Entry& e = chain.entries[ii];
        if (e.exponent == 1) {
            QrFactors f = householder_qr(gemm(e.matrix, out.u_current));
            out.u_current = std::move(f.q);
            out.r_list[ii] = std::move(f.r);
        } else {
            check_invertible(e.matrix, ii + 1);
            RqFactors f = rq_decompose(gemm(transpose(out.u_current), e.matrix));
            out.u_current = transpose(f.q);
            out.r_list[ii] = std::move(f.r);
        }
    }
    return out;
}

Matrix assemble_r(const GrurvResult& result) {
    const std::size_t k = result.r_list.size();
    if (k == 0 || result.exponents.size() != k) {
        throw std::invalid_argument("assemble_r: malformed result");
    }
    const std::size_t n = result.r_list[0].rows();

    Matrix p = Matrix::identity(n);
    for (std::size_t i = 0; i < k; ++i) {
        if (result.exponents[i] == 1) {
            p = gemm(p, result.r_list[i]);
        } else {
            try {
                p = right_solve_upper_triangular(p, result.r_list[i]);
            } catch (const SingularError&) {
                std::ostringstream msg;
                msg << "assemble_r: triangular factor " << i + 1 << " is singular";
                throw SingularError(msg.str(), i + 1);
            }
        }
    }
    for (std::size_t i = 1; i < n; ++i) {
        double* row = p.row(i);
        for (std::size_t j = 0; j < i; ++j) row[j] = 0.0;
    }
    return p;
}

TrialRecord implicit_rank_metrics(const std::vector<double>& sigma, const GrurvResult& result,
                                  std::size_t r, const Matrix* product) {
    Matrix assembled = assemble_r(result);
    RurvResult view{result.u_current, std::move(assembled), result.v};
    TrialRecord rec = rank_reveal_core(sigma, view, r);
    if (product != nullptr) {
        rec.backward_error = backward_error(*product, view.u, view.r, view.v);
    }
    return rec;
}

}  // namespace randurv
