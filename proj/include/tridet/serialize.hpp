#pragma once

// JSON views of the library types (nlohmann::json). Rationals are rendered
// as strings ("num/den" or plain integers) so values survive round trips
// exactly; callers wanting floating approximations pass digits > 0 where an
// *_approx helper exists.

#include "tridet/detrep.hpp"
#include "tridet/hankel.hpp"
#include "tridet/matrix.hpp"
#include "tridet/parse.hpp"
#include "tridet/poly.hpp"
#include "tridet/rational.hpp"
#include "tridet/srems.hpp"
#include "tridet/tridiag.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace tridet {

using nlohmann::json;

inline json rat_json(const Rat& x) { return to_string(x); }

inline json rat_list_json(const std::vector<Rat>& xs) {
    json a = json::array();
    for (const Rat& x : xs) a.push_back(rat_json(x));
    return a;
}

// Polynomials serialize as arrays of rational strings, ascending degree.
inline json poly_json(const Poly& p) { return rat_list_json(p.coeffs()); }

inline json matrix_json(const DenseMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rat_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

namespace srems {

inline json to_json(const Sequence& s) {
    json j;
    j["alphas"] = rat_list_json(s.alphas);
    j["epsilons"] = s.epsilons;
    j["beta_sqs"] = rat_list_json(s.beta_sqs);
    json polys = json::array();
    for (const Poly& p : s.polys) polys.push_back(poly_to_string(p));
    j["polys"] = polys;
    if (s.breakdown) {
        j["breakdown"] = *s.breakdown;
    } else {
        j["breakdown"] = nullptr;
        j["nu"] = s.nu;
    }
    return j;
}

}  // namespace srems

namespace tridiag {

// Entries are listed in storage order: index 0 is the bottom-right corner of
// the matrix, the last entry the top-left ("display" order is the reverse).
inline json to_json(const Rep& r) {
    json j;
    j["n"] = r.n();
    j["order"] = "bottom-up";
    j["alphas"] = rat_list_json(r.alphas);
    json cs = json::array();
    for (const Coupling& c : r.couplings) cs.push_back({{"eps", c.eps}, {"beta_sq", rat_json(c.beta_sq)}});
    j["couplings"] = cs;
    return j;
}

inline json to_json(const Surd& v) {
    json j;
    j["order"] = "bottom-up";
    j["diag"] = rat_list_json(v.diag);
    json rads = json::array();
    json signs = json::array();
    for (const Surd::Off& o : v.offdiag) {
        rads.push_back(rat_json(o.radicand));
        signs.push_back(o.sign);
    }
    j["offdiag_radicands"] = rads;
    j["offdiag_signs"] = signs;
    j["J"] = v.J;  // top-down
    j["sgnJ"] = sgn(v.J);
    return j;
}

}  // namespace tridiag

namespace hankel {

inline json to_json(const Seq& h) {
    json j;
    j["n"] = h.n;
    j["s"] = rat_list_json(h.s);
    return j;
}

}  // namespace hankel

namespace detrep {

inline json to_json(const Rep& r) {
    const int n = static_cast<int>(r.diag.size());
    json j;
    j["p"] = poly_json(r.p);
    j["order"] = "bottom-up";
    j["diag"] = rat_list_json(r.diag);
    json rads = json::array();
    json couplings = json::array();
    for (int k = 1; k < n; ++k) {
        const tridiag::Surd::Off& o = r.offdiag[k - 1];
        rads.push_back(rat_json(o.radicand));
        // theta_k = J[n-1-k] read top-down; eps_k = theta_k * theta_{k-1}
        const int eps = r.J[n - 1 - k] * r.J[n - k];
        couplings.push_back({{"eps", o.radicand == 0 ? 1 : eps}, {"beta_sq", rat_json(o.radicand)}});
    }
    j["offdiag_radicands"] = rads;
    j["couplings"] = couplings;
    j["J"] = r.J;  // top-down
    j["sgnJ"] = r.sgn_J();
    return j;
}

inline json to_json(const std::vector<ScanRow>& rows) {
    json a = json::array();
    for (const ScanRow& row : rows) {
        json j;
        j["q"] = poly_to_string(row.q);
        j["D"] = rat_list_json(row.D);
        j["breakdown"] = row.breakdown ? json(*row.breakdown) : json(nullptr);
        a.push_back(j);
    }
    return a;
}

}  // namespace detrep

// Decimal renderings (digits significant figures) alongside nothing else;
// used by the CLI's --approx flag.
inline json approx_json(const std::vector<Rat>& xs, int digits = 12) {
    json a = json::array();
    for (const Rat& x : xs) a.push_back(to_decimal(x, digits));
    return a;
}

}  // namespace tridet
