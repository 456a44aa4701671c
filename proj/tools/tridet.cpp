// tridet: exact real-root counting and tridiagonal determinantal
// representations of univariate polynomials over the rationals.
//
// Subcommands:
//   count p        distinct real roots by two independent routes
//   srems p q      signed remainder sequence data
//   tridiag p q    tridiagonal representation + sqrt/signature view
//   hankel p q     Hankel moment matrix, LDL^T, signature
//   taq r p        Tarski query sum_{p(x)=0} sign(r(x))
//   detrep p       representation p = det(J) det(xJ - Td) with sgn(J) = #roots
//   dual p q       the dual partner polynomial and the involution check
//   verify p q     algebraic identity suite (pass/fail per identity)
//
// Flags: --json (single JSON document on stdout), --approx (12 significant
// digits alongside exact values), --seed N (detrep). Exit codes: 0 ok,
// 1 math error (breakdown / zero pivot / repeated roots), 2 usage error.

#include "tridet/detrep.hpp"
#include "tridet/errors.hpp"
#include "tridet/hankel.hpp"
#include "tridet/matrix.hpp"
#include "tridet/parse.hpp"
#include "tridet/poly.hpp"
#include "tridet/rational.hpp"
#include "tridet/serialize.hpp"
#include "tridet/srems.hpp"
#include "tridet/tridiag.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace tridet;

struct Options {
    bool json = false;
    bool approx = false;
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// input handling
// ---------------------------------------------------------------------------

Poly read_poly(const std::string& text) { return parse_poly(text); }

// Scales to monic (dividing by the leading coefficient keeps the roots) and
// says so on stderr; zero input is passed through for the library to reject.
Poly monicize(const Poly& p, const char* name) {
    if (p.is_zero() || p.is_monic()) return p;
    const Poly m = monic(p);
    std::cerr << "note: " << name << " scaled to monic: " << poly_to_string(m) << "\n";
    return m;
}

// ---------------------------------------------------------------------------
// error reporting
// ---------------------------------------------------------------------------

json error_object(const std::exception& e, const std::string& type) {
    json err;
    err["type"] = type;
    err["message"] = e.what();
    if (auto* zp = dynamic_cast<const ZeroPivot*>(&e)) err["index"] = zp->index;
    if (auto* db = dynamic_cast<const DegreeBreakdown*>(&e)) err["index"] = db->index;
    if (auto* pe = dynamic_cast<const ParseError*>(&e)) err["offset"] = pe->offset;
    return {{"error", err}};
}

std::string classify(const MathError& e) {
    if (dynamic_cast<const ZeroPivot*>(&e)) return "zero_pivot";
    if (dynamic_cast<const DegreeBreakdown*>(&e)) return "degree_breakdown";
    if (dynamic_cast<const NotSquarefree*>(&e)) return "not_squarefree";
    if (dynamic_cast<const RetryExhausted*>(&e)) return "retry_exhausted";
    return "math_error";
}

int report_math_error(const MathError& e, const Options& opt, json extra = json::object()) {
    std::cerr << "error: " << e.what() << "\n";
    if (opt.json) {
        json j = error_object(e, classify(e));
        j.update(extra);
        emit(j);
    }
    return 1;
}

int report_usage_error(const std::exception& e, const Options& opt, const std::string& type) {
    std::cerr << "error: " << e.what() << "\n";
    if (opt.json) emit(error_object(e, type));
    return 2;
}

// ---------------------------------------------------------------------------
// text rendering
// ---------------------------------------------------------------------------

void print_grid(const std::vector<std::vector<std::string>>& cells) {
    if (cells.empty()) return;
    std::vector<size_t> width(cells[0].size(), 0);
    for (const auto& row : cells)
        for (size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
    for (const auto& row : cells) {
        std::cout << "[";
        for (size_t j = 0; j < row.size(); ++j)
            std::cout << " " << std::setw(static_cast<int>(width[j])) << row[j];
        std::cout << " ]\n";
    }
}

std::vector<std::vector<std::string>> matrix_cells(const DenseMat& m) {
    std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) cells[i][j] = to_string(m(i, j));
    return cells;
}

std::string surd_cell(const tridiag::Surd::Off& o) {
    if (o.radicand == 0) return "0";
    std::string s = o.sign < 0 ? "-sqrt(" : "sqrt(";
    return s + to_string(o.radicand) + ")";
}

// The symmetric tridiagonal in conventional top-down reading order; storage
// is bottom-up, so display row 0 shows the last stored entries.
std::vector<std::vector<std::string>> surd_cells(const std::vector<Rat>& diag,
                                                 const std::vector<tridiag::Surd::Off>& off) {
    const int n = static_cast<int>(diag.size());
    std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n, "0"));
    for (int i = 0; i < n; ++i) cells[i][i] = to_string(diag[n - 1 - i]);
    for (int i = 0; i + 1 < n; ++i) {
        const std::string s = surd_cell(off[n - 2 - i]);
        cells[i][i + 1] = s;
        cells[i + 1][i] = s;
    }
    return cells;
}

template <typename T>
void print_list(const char* label, const std::vector<T>& xs) {
    std::cout << label << ":";
    for (const T& x : xs) {
        if constexpr (std::is_same_v<T, Rat>)
            std::cout << " " << to_string(x);
        else
            std::cout << " " << x;
    }
    std::cout << "\n";
}

std::string signed_sqrt_approx(const tridiag::Surd::Off& o, int digits = 12) {
    if (o.radicand == 0) return "0";
    const std::string root = sqrt_decimal(o.radicand, digits);
    return o.sign < 0 ? "-" + root : root;
}

// ---------------------------------------------------------------------------
// subcommands
// ---------------------------------------------------------------------------

int run_count(const std::string& p_text, const Options& opt) {
    const Poly p = monicize(read_poly(p_text), "p");
    try {
        const int sturm = srems::sturm_count(p);
        const int sylvester = hankel::signature(hankel::newton_sums(p));
        if (sturm != sylvester) {
            std::cerr << "defect: sturm(" << sturm << ") != sylvester(" << sylvester
                      << ") for p = " << poly_to_string(p) << "\n";
            std::abort();
        }
        if (opt.json) {
            emit({{"p", poly_to_string(p)}, {"sturm", sturm}, {"sylvester", sylvester}});
        } else {
            std::cout << "sturm: " << sturm << "\nsylvester: " << sylvester << "\n";
        }
        return 0;
    } catch (const MathError& e) {
        // Both primary routes need a regular sequence; the classical Sturm
        // chain still counts the distinct real roots, so report it in-band.
        const Rat b = cauchy_bound(p);
        const int classical = srems::classical_sturm_query(p, -b, b);
        json extra = {{"classical_count", classical}};
        const int rc = report_math_error(e, opt, extra);
        if (!opt.json) std::cerr << "classical count: " << classical << "\n";
        return rc;
    }
}

int run_srems(const std::string& p_text, const std::string& q_text, const Options& opt) {
    const Poly p = monicize(read_poly(p_text), "p");
    const Poly q = monicize(read_poly(q_text), "q");
    const srems::Sequence seq = srems::compute(p, q);
    if (opt.json) {
        json j = srems::to_json(seq);
        if (opt.approx) {
            j["alphas_approx"] = approx_json(seq.alphas);
            j["beta_sqs_approx"] = approx_json(seq.beta_sqs);
        }
        if (seq.breakdown) {
            json wrapped = {{"error", json{{"type", "degree_breakdown"},
                                           {"message", "remainder sequence broke down"},
                                           {"index", *seq.breakdown}}},
                            {"sequence", j}};
            emit(wrapped);
        } else {
            emit(j);
        }
    } else {
        for (size_t k = 0; k < seq.polys.size(); ++k)
            std::cout << "p" << k << " = " << poly_to_string(seq.polys[k]) << "\n";
        print_list("alphas", seq.alphas);
        print_list("epsilons", seq.epsilons);
        print_list("beta_sqs", seq.beta_sqs);
        if (seq.breakdown) {
            std::cout << "breakdown: " << *seq.breakdown << "\n";
        } else {
            print_list("nu", seq.nu);
        }
    }
    if (seq.breakdown) {
        std::cerr << "error: remainder sequence broke down at index " << *seq.breakdown << "\n";
        return 1;
    }
    return 0;
}

int run_tridiag(const std::string& p_text, const std::string& q_text, const Options& opt) {
    const Poly p = monicize(read_poly(p_text), "p");
    const Poly q = monicize(read_poly(q_text), "q");
    const srems::Sequence seq = srems::compute(p, q);
    const tridiag::Rep rep = tridiag::from_srems(seq);  // throws on breakdown
    const tridiag::Surd v = tridiag::surd_view(rep);
    if (opt.json) {
        json j = {{"rep", tridiag::to_json(rep)}, {"surd", tridiag::to_json(v)}};
        if (opt.approx) {
            j["surd"]["diag_approx"] = approx_json(v.diag);
            json off = json::array();
            for (const auto& o : v.offdiag) off.push_back(signed_sqrt_approx(o));
            j["surd"]["offdiag_approx"] = off;
        }
        emit(j);
    } else {
        std::cout << "Td (symmetric, top-down):\n";
        print_grid(surd_cells(v.diag, v.offdiag));
        print_list("J (top-down)", v.J);
        std::cout << "sgn(J): " << tridiag::sgn(v.J) << "\n";
        print_list("alphas (bottom-up)", rep.alphas);
        std::cout << "couplings (bottom-up):";
        for (const auto& c : rep.couplings)
            std::cout << " (" << (c.eps > 0 ? "+1" : "-1") << ", " << to_string(c.beta_sq) << ")";
        std::cout << "\n";
    }
    return 0;
}

int run_hankel(const std::string& p_text, const std::string& q_text, const Options& opt) {
    const Poly p = monicize(read_poly(p_text), "p");
    const Poly q = read_poly(q_text);  // any degree < deg p, not necessarily monic
    const hankel::Seq seq = hankel::series_expand(p, q);
    const DenseMat h = seq.matrix();
    try {
        const UnitLDL ldl = ldlt_decompose(h);
        int sig = 0;
        for (const Rat& d : ldl.D) sig += sign(d);
        if (opt.json) {
            json j = {{"hankel", hankel::to_json(seq)},
                      {"matrix", matrix_json(h)},
                      {"L", matrix_json(ldl.L)},
                      {"D", rat_list_json(ldl.D)},
                      {"signature", sig}};
            if (opt.approx) {
                j["s_approx"] = approx_json(seq.s);
                j["D_approx"] = approx_json(ldl.D);
            }
            emit(j);
        } else {
            std::cout << "H:\n";
            print_grid(matrix_cells(h));
            std::cout << "L:\n";
            print_grid(matrix_cells(ldl.L));
            print_list("D", ldl.D);
            std::cout << "signature: " << sig << "\n";
        }
        return 0;
    } catch (const ZeroPivot& e) {
        const PartialLDL part = ldlt_partial(h);
        json extra = {{"partial_D", rat_list_json(part.D)}};
        const int rc = report_math_error(e, opt, extra);
        if (!opt.json) {
            std::cout << "H:\n";
            print_grid(matrix_cells(h));
            print_list("partial D", part.D);
        }
        return rc;
    }
}

int run_taq(const std::string& r_text, const std::string& p_text, const Options& opt) {
    const Poly r = read_poly(r_text);  // kept verbatim: the query depends on r itself
    const Poly p = monicize(read_poly(p_text), "p");
    const int value = srems::tarski_query(r, p);
    if (opt.json) {
        emit({{"r", poly_to_string(r)}, {"p", poly_to_string(p)}, {"taq", value}});
    } else {
        std::cout << "taq: " << value << "\n";
    }
    return 0;
}

int run_detrep(const std::string& p_text, int seed, const Options& opt) {
    const Poly p = monicize(read_poly(p_text), "p");
    const detrep::Rep rep = detrep::build(p, seed);
    if (opt.json) {
        json j = detrep::to_json(rep);
        j["char_poly"] = poly_to_string(detrep::rep_char_poly(rep));
        if (opt.approx) {
            j["diag_approx"] = approx_json(rep.diag);
            json off = json::array();
            for (const auto& o : rep.offdiag) off.push_back(signed_sqrt_approx(o));
            j["offdiag_approx"] = off;
        }
        emit(j);
    } else {
        std::cout << "Td (symmetric, top-down):\n";
        print_grid(surd_cells(rep.diag, rep.offdiag));
        print_list("J (top-down)", rep.J);
        std::cout << "sgn(J): " << rep.sgn_J() << "\n";
        std::cout << "char poly: " << poly_to_string(detrep::rep_char_poly(rep)) << "\n";
    }
    return 0;
}

int run_dual(const std::string& p_text, const std::string& q_text, const Options& opt) {
    const Poly p = monicize(read_poly(p_text), "p");
    const Poly q = monicize(read_poly(q_text), "q");
    const Poly qt = hankel::dual_partner(p, q);
    const bool holds = tridiag::duality_check(p, q);
    if (opt.json) {
        emit({{"p", poly_to_string(p)},
              {"q", poly_to_string(q)},
              {"q_tilde", poly_to_string(qt)},
              {"duality_holds", holds}});
    } else {
        std::cout << "q~ = " << poly_to_string(qt) << "\n";
        std::cout << "duality: " << (holds ? "pass" : "FAIL") << "\n";
    }
    return holds ? 0 : 1;
}

int run_verify(const std::string& p_text, const std::string& q_text, const Options& opt) {
    const Poly p = monicize(read_poly(p_text), "p");
    const Poly q = monicize(read_poly(q_text), "q");
    if (q.degree() != p.degree() - 1)
        throw std::invalid_argument("verify: deg q = deg p - 1 required");

    struct Row {
        const char* name;
        std::string status;  // "pass" | "fail" | "skip: ..."
    };
    std::vector<Row> rows;
    auto check = [&](const char* name, auto&& fn) {
        try {
            rows.push_back({name, fn() ? "pass" : "fail"});
        } catch (const MathError& e) {
            rows.push_back({name, std::string("skip: ") + e.what()});
        }
    };

    check("intertwining", [&] { return hankel::intertwining_check(hankel::series_expand(p, q), p); });
    check("barnett", [&] { return hankel::barnett_check(p, q); });
    check("pencil_determinant", [&] { return hankel::pencil_identity_check(p, q); });
    check("duality", [&] { return tridiag::duality_check(p, q); });
    check("signature_chain", [&] {
        const srems::Sequence seq = srems::compute(p, q);
        if (seq.breakdown) throw DegreeBreakdown(*seq.breakdown);
        return srems::pmv(seq.nu) == hankel::signature(hankel::series_expand(p, q));
    });

    bool any_fail = false;
    for (const Row& r : rows) any_fail |= (r.status == "fail");
    if (opt.json) {
        json j;
        for (const Row& r : rows) j[r.name] = r.status;
        j["all_pass"] = !any_fail;
        emit(j);
    } else {
        for (const Row& r : rows) std::cout << r.name << ": " << r.status << "\n";
        std::cout << (any_fail ? "FAIL" : "OK") << "\n";
    }
    return any_fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact real-root counts and tridiagonal determinantal representations"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_flag("--json", opt.json, "emit a single JSON document on stdout");
    app.add_flag("--approx", opt.approx, "add 12-significant-digit decimal renderings");

    std::string p_text, q_text, r_text;
    int seed = 0;

    CLI::App* c_count = app.add_subcommand("count", "count distinct real roots two ways");
    c_count->add_option("p", p_text, "polynomial")->required();

    CLI::App* c_srems = app.add_subcommand("srems", "signed remainder sequence of (p, q)");
    c_srems->add_option("p", p_text, "monic polynomial")->required();
    c_srems->add_option("q", q_text, "monic polynomial of degree deg p - 1")->required();

    CLI::App* c_tridiag = app.add_subcommand("tridiag", "tridiagonal representation from (p, q)");
    c_tridiag->add_option("p", p_text, "monic polynomial")->required();
    c_tridiag->add_option("q", q_text, "monic polynomial of degree deg p - 1")->required();

    CLI::App* c_hankel = app.add_subcommand("hankel", "Hankel matrix of q/p with LDL^T");
    c_hankel->add_option("p", p_text, "monic polynomial")->required();
    c_hankel->add_option("q", q_text, "polynomial of degree < deg p")->required();

    CLI::App* c_taq = app.add_subcommand("taq", "Tarski query: sum of sign(r) over roots of p");
    c_taq->add_option("r", r_text, "query polynomial")->required();
    c_taq->add_option("p", p_text, "squarefree polynomial")->required();

    CLI::App* c_detrep = app.add_subcommand("detrep", "determinantal representation of p");
    c_detrep->add_option("p", p_text, "polynomial")->required();
    c_detrep->add_option("--seed", seed, "construction seed (default 0)");

    CLI::App* c_dual = app.add_subcommand("dual", "dual partner polynomial of (p, q)");
    c_dual->add_option("p", p_text, "monic polynomial")->required();
    c_dual->add_option("q", q_text, "monic polynomial of degree deg p - 1")->required();

    CLI::App* c_verify = app.add_subcommand("verify", "run the algebraic identity suite on (p, q)");
    c_verify->add_option("p", p_text, "monic polynomial")->required();
    c_verify->add_option("q", q_text, "monic polynomial of degree deg p - 1")->required();

    int rc = 0;
    c_count->callback([&] { rc = run_count(p_text, opt); });
    c_srems->callback([&] { rc = run_srems(p_text, q_text, opt); });
    c_tridiag->callback([&] { rc = run_tridiag(p_text, q_text, opt); });
    c_hankel->callback([&] { rc = run_hankel(p_text, q_text, opt); });
    c_taq->callback([&] { rc = run_taq(r_text, p_text, opt); });
    c_detrep->callback([&] { rc = run_detrep(p_text, seed, opt); });
    c_dual->callback([&] { rc = run_dual(p_text, q_text, opt); });
    c_verify->callback([&] { rc = run_verify(p_text, q_text, opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const tridet::ParseError& e) {
        return report_usage_error(e, opt, "parse_error");
    } catch (const tridet::MathError& e) {
        return report_math_error(e, opt);
    } catch (const std::invalid_argument& e) {
        return report_usage_error(e, opt, "usage");
    }
    return rc;
}
