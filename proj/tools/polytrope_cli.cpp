// polytrope: Kleene stars, volume / Ehrhart / h* polynomials of polytropes,
// brute-force verification and batch processing.

#include <omp.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "polytrope/cohomology.hpp"
#include "polytrope/ehrhart.hpp"
#include "polytrope/errors.hpp"
#include "polytrope/io.hpp"
#include "polytrope/oracle.hpp"
#include "polytrope/subdivision.hpp"
#include "polytrope/tropical.hpp"

using json = nlohmann::ordered_json;
using namespace polytrope;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitNegativeCycle = 2;
constexpr int kExitNotKleene = 3;
constexpr int kExitResourceCap = 4;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

WeightMatrix matrix_from_json(const json& rows) {
    if (!rows.is_array() || rows.empty())
        throw DomainError("matrix JSON must be a nonempty 2-D array");
    int n = static_cast<int>(rows.size());
    std::vector<long long> entries;
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw DomainError("matrix JSON rows must all have length n");
        for (const auto& v : row) {
            if (!v.is_number_integer())
                throw DomainError("matrix entries must be integers");
            entries.push_back(v.get<long long>());
        }
    }
    return WeightMatrix(n, std::move(entries));
}

// Text: n lines of n integers (n inferred). JSON: 2-D integer array.
WeightMatrix parse_matrix(const std::string& text) {
    size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
    if (i < text.size() && text[i] == '[')
        return matrix_from_json(json::parse(text));
    std::istringstream in(text);
    std::vector<long long> values;
    long long v;
    while (in >> v) values.push_back(v);
    if (!in.eof()) throw DomainError("matrix contains a non-integer token");
    int n = 0;
    while (static_cast<long long>(n) * n < static_cast<long long>(values.size()))
        ++n;
    if (static_cast<long long>(n) * n != static_cast<long long>(values.size()))
        throw DomainError("matrix must contain n*n integers");
    return WeightMatrix(n, std::move(values));
}

std::string render_matrix_text(const WeightMatrix& W) {
    std::string out;
    for (int i = 1; i <= W.n; ++i) {
        for (int j = 1; j <= W.n; ++j)
            out += (j > 1 ? " " : "") + std::to_string(W.at(i, j));
        out += "\n";
    }
    return out;
}

json matrix_to_json(const WeightMatrix& W) {
    json rows = json::array();
    for (int i = 1; i <= W.n; ++i) {
        json row = json::array();
        for (int j = 1; j <= W.n; ++j) row.push_back(W.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json poly_to_json(const QPoly& p) {
    json terms = json::array();
    for (auto& [m, c] : p.terms) {
        json exp = json::object();
        for (auto& [v, k] : m.e) {
            auto [i, j] = p.vars.pair_of(v);
            exp[std::to_string(i) + std::to_string(j)] = k;
        }
        terms.push_back(json{{"exp", std::move(exp)}, {"coef", to_string(c)}});
    }
    return terms;
}

json univariate_to_json(const Univariate& u) {
    json coeffs = json::array();
    for (auto& c : u) coeffs.push_back(to_string(c));
    return coeffs;
}

// "79/2*t^2 + 23/2*t + 1", highest degree first.
std::string render_univariate(const Univariate& u) {
    if (u.empty()) return "0";
    std::string out;
    for (size_t d = u.size(); d-- > 0;) {
        if (is_zero(u[d])) continue;
        Rational abs = u[d] < 0 ? Rational(-u[d]) : u[d];
        std::string body;
        if (d == 0)
            body = to_string(abs);
        else {
            body = abs == 1 ? "t" : to_string(abs) + "*t";
            if (d > 1) body += "^" + std::to_string(d);
        }
        if (out.empty())
            out = (u[d] < 0 ? "-" : "") + body;
        else
            out += (u[d] < 0 ? " - " : " + ") + body;
    }
    return out.empty() ? "0" : out;
}

struct Options {
    std::string input = "-";
    std::string format = "text";
    bool star = false;
    bool normalized = false;
    bool euclidean = false;
    bool univariate = false;
    bool evaluate = false;
    int dilate = 1;
    long long cap = kDefaultEnumerationCap;
    int threads = 0;
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("input", opt.input, "matrix file, or '-' for stdin");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--cap", opt.cap, "enumeration cap (lattice points)");
    cmd->add_option("--threads", opt.threads, "OpenMP thread count");
}

void add_poly_flags(CLI::App* cmd, Options& opt) {
    cmd->add_flag("--star", opt.star, "replace input by its Kleene star");
    cmd->add_flag("--normalized", opt.normalized, "normalized volume only");
    cmd->add_flag("--euclidean", opt.euclidean, "Euclidean volume only");
    auto* uni = cmd->add_flag("--univariate", opt.univariate,
                              "substitute a_ij -> t*c_ij");
    cmd->add_flag("--evaluate", opt.evaluate, "numeric output at the weights")
        ->excludes(uni);
    cmd->add_option("--dilate", opt.dilate, "dilation factor for --evaluate");
}

WeightMatrix load_matrix(const Options& opt) {
    return parse_matrix(read_input(opt.input));
}

// Auto-star when requested, otherwise insist the input is already a star.
WeightMatrix prepare(const Options& opt, const WeightMatrix& W) {
    if (opt.star) return kleene_star(W);
    require_kleene(W);
    return W;
}

void print_tie_warning(const VolumePolynomial& V) {
    if (V.tie_flag)
        std::cerr << "warning: boundary weight (tie in the weight order); "
                     "refined-order initial ideal used\n";
}

int cmd_kleene(const Options& opt) {
    WeightMatrix W = load_matrix(opt);
    WeightMatrix star = kleene_star(W);
    bool fixed = star == W;
    if (opt.format == "json") {
        json out{{"kleene_star", matrix_to_json(star)},
                 {"already_kleene", fixed}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << render_matrix_text(star);
        if (fixed) std::cout << "already a Kleene star\n";
    }
    return kExitOk;
}

int cmd_volume(const Options& opt) {
    WeightMatrix W = prepare(opt, load_matrix(opt));
    VolumePolynomial V = volume_polynomial(W);
    print_tie_warning(V);
    bool both = opt.normalized == opt.euclidean;  // neither flag: show both
    json out = json::object();
    if (opt.evaluate) {
        Rational norm = evaluate_at_weights(V.normalized, W);
        Rational euc = evaluate_at_weights(V.euclidean, W);
        if (opt.format == "json") {
            if (both || opt.normalized) out["normalized"] = to_string(norm);
            if (both || opt.euclidean) out["euclidean"] = to_string(euc);
        } else if (both) {
            std::cout << to_string(norm) << " (normalized), " << to_string(euc)
                      << " (euclidean)\n";
        } else {
            std::cout << to_string(opt.normalized ? norm : euc) << "\n";
        }
    } else if (opt.univariate) {
        Univariate norm = substitute_dilation(V.normalized, W);
        Univariate euc = substitute_dilation(V.euclidean, W);
        if (opt.format == "json") {
            if (both || opt.normalized) out["normalized"] = univariate_to_json(norm);
            if (both || opt.euclidean) out["euclidean"] = univariate_to_json(euc);
        } else {
            if (both || opt.normalized)
                std::cout << (both ? "normalized: " : "")
                          << render_univariate(norm) << "\n";
            if (both || opt.euclidean)
                std::cout << (both ? "euclidean: " : "") << render_univariate(euc)
                          << "\n";
        }
    } else {
        if (opt.format == "json") {
            if (both || opt.normalized) out["normalized"] = poly_to_json(V.normalized);
            if (both || opt.euclidean) out["euclidean"] = poly_to_json(V.euclidean);
        } else {
            if (both || opt.normalized)
                std::cout << (both ? "normalized: " : "") << render(V.normalized)
                          << "\n";
            if (both || opt.euclidean)
                std::cout << (both ? "euclidean: " : "") << render(V.euclidean)
                          << "\n";
        }
    }
    if (opt.format == "json") std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_ehrhart(const Options& opt) {
    WeightMatrix W = prepare(opt, load_matrix(opt));
    VolumePolynomial V = volume_polynomial(W);
    print_tie_warning(V);
    EhrhartPolynomial ehr = todd_apply(V.euclidean, W.n - 1);
    if (opt.evaluate) {
        Univariate uni = substitute_dilation(ehr.multivariate, W);
        Rational count = uni_eval(uni, Rational(opt.dilate));
        if (opt.format == "json")
            std::cout << json{{"dilate", opt.dilate},
                              {"count", to_string(count)}}
                             .dump(2)
                      << "\n";
        else
            std::cout << to_string(count) << "\n";
    } else if (opt.univariate) {
        Univariate uni = substitute_dilation(ehr.multivariate, W);
        if (opt.format == "json")
            std::cout << json{{"ehrhart", univariate_to_json(uni)}}.dump(2)
                      << "\n";
        else
            std::cout << render_univariate(uni) << "\n";
    } else {
        if (opt.format == "json")
            std::cout << json{{"ehrhart", poly_to_json(ehr.multivariate)}}.dump(2)
                      << "\n";
        else
            std::cout << render(ehr.multivariate) << "\n";
    }
    return kExitOk;
}

int cmd_hstar(const Options& opt) {
    WeightMatrix W = prepare(opt, load_matrix(opt));
    VolumePolynomial V = volume_polynomial(W);
    print_tie_warning(V);
    HStarPolynomial h = hstar_transform(todd_apply(V.euclidean, W.n - 1));
    if (opt.evaluate) {
        Univariate u = hstar_at_weights(h, W);
        u.resize(W.n, Rational(0));  // full h*-vector, h*_0..h*_{n-1}
        if (opt.format == "json") {
            std::cout << json{{"hstar", univariate_to_json(u)}}.dump(2) << "\n";
        } else {
            for (size_t i = 0; i < u.size(); ++i)
                std::cout << (i ? " " : "") << to_string(u[i]);
            std::cout << "\n";
        }
    } else if (opt.univariate) {
        Univariate u = hstar_at_weights(h, W);
        if (opt.format == "json")
            std::cout << json{{"hstar", univariate_to_json(u)}}.dump(2) << "\n";
        else
            std::cout << render_univariate(u) << "\n";
    } else {
        if (opt.format == "json") {
            json coeffs = json::array();
            for (const APoly& c : h.coefficients) coeffs.push_back(poly_to_json(c));
            std::cout << json{{"hstar", std::move(coeffs)}}.dump(2) << "\n";
        } else {
            for (size_t i = 0; i < h.coefficients.size(); ++i)
                std::cout << "t^" << i << ": " << render(h.coefficients[i])
                          << "\n";
        }
    }
    return kExitOk;
}

struct VerifyOutcome {
    std::vector<std::pair<std::string, bool>> checks;
    bool pass() const {
        for (auto& [name, ok] : checks)
            if (!ok) return false;
        return true;
    }
};

VerifyOutcome run_verify(const WeightMatrix& W, bool full, long long cap) {
    VerifyOutcome out;
    auto check = [&](const std::string& name, bool ok) {
        out.checks.push_back({name, ok});
    };

    VolumePolynomial V = volume_polynomial(W);
    EhrhartPolynomial ehr = todd_apply(V.euclidean, W.n - 1);
    HStarPolynomial h = hstar_transform(ehr);
    Univariate uni_ehr = substitute_dilation(ehr.multivariate, W);
    Univariate uni_h = hstar_at_weights(h, W);

    check("volume agreement",
          evaluate_at_weights(V.normalized, W) ==
              Rational(normalized_volume_bruteforce(W, cap)));
    check("count agreement at k=1",
          uni_eval(uni_ehr, Rational(1)) ==
              to_rational(count_lattice_points(W, 1, cap)));
    std::vector<Integer> hb = hstar_bruteforce(W, cap);
    Univariate hb_uni;
    for (auto& x : hb) hb_uni.push_back(Rational(x));
    uni_trim(hb_uni);
    check("h* agreement", uni_h == hb_uni);

    if (full) {
        bool dilates = true;
        for (int k = 2; k <= 4; ++k)
            dilates = dilates && uni_eval(uni_ehr, Rational(k)) ==
                                     to_rational(count_lattice_points(W, k, cap));
        check("count agreement at k<=4", dilates);

        // Binomial-basis identity: ehr(k) = sum_i h*_i C(k + d - i, d).
        int d = W.n - 1;
        bool binom = true;
        for (int k = 0; k <= d; ++k) {
            Rational lhs = uni_eval(uni_ehr, Rational(k));
            Rational rhs = 0;
            for (int i = 0; i <= d && i < static_cast<int>(uni_h.size()); ++i)
                rhs += uni_h[i] * Rational(binomial(k + d - i, d));
            binom = binom && lhs == rhs;
        }
        check("binomial-basis identity", binom);

        bool nonneg = true;
        for (auto& c : uni_h) nonneg = nonneg && is_integer(c) && c >= 0;
        check("h* nonnegative integers", nonneg);

        if (W.n == 4) {
            CentralSubdivision S = central_subdivision(W);
            CoefficientReport rep = verify_coefficients_3d(V, S);
            for (auto& f : rep.failures) std::cerr << "  " << f << "\n";
            check("3d coefficient correspondence", rep.pass);
        }
        if (W.n == 5) {
            CentralSubdivision S = central_subdivision(W);
            CoefficientReport rep = verify_coefficients_4d(
                V, S.is_triangulation ? &S : nullptr);
            for (auto& f : rep.failures) std::cerr << "  " << f << "\n";
            check("4d coefficient properties", rep.pass);
        }
    }
    return out;
}

int cmd_verify(const Options& opt, const std::string& depth) {
    WeightMatrix W = prepare(opt, load_matrix(opt));
    VerifyOutcome out = run_verify(W, depth == "full", opt.cap);
    if (opt.format == "json") {
        json checks = json::array();
        for (auto& [name, ok] : out.checks)
            checks.push_back(json{{"check", name}, {"pass", ok}});
        std::cout << json{{"checks", std::move(checks)},
                          {"pass", out.pass()}}
                         .dump(2)
                  << "\n";
    } else {
        for (auto& [name, ok] : out.checks)
            std::cout << (ok ? "PASS" : "FAIL") << " " << name << "\n";
        std::cout << (out.pass() ? "PASS" : "FAIL") << " ("
                  << out.checks.size() << " checks)\n";
    }
    return out.pass() ? kExitOk : kExitVerifyFail;
}

// Batch input: JSON array of 2-D integer arrays, or text blocks of n lines of
// n integers separated by blank lines.
std::vector<std::string> split_batch(const std::string& text) {
    size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
    std::vector<std::string> records;
    if (i < text.size() && text[i] == '[') {
        json arr = json::parse(text);
        if (!arr.is_array()) throw DomainError("batch JSON must be an array");
        for (const auto& m : arr) records.push_back(m.dump());
        return records;
    }
    std::istringstream in(text);
    std::string line, block;
    auto flush = [&] {
        if (block.find_first_not_of(" \t\n") != std::string::npos)
            records.push_back(block);
        block.clear();
    };
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t") == std::string::npos)
            flush();
        else
            block += line + "\n";
    }
    flush();
    return records;
}

int cmd_batch(const Options& opt) {
    std::vector<std::string> records = split_batch(read_input(opt.input));
    json out = json::array();
    for (size_t idx = 0; idx < records.size(); ++idx) {
        json rec{{"index", idx}};
        try {
            WeightMatrix W = prepare(opt, parse_matrix(records[idx]));
            VolumePolynomial V = volume_polynomial(W);
            EhrhartPolynomial ehr = todd_apply(V.euclidean, W.n - 1);
            HStarPolynomial h = hstar_transform(ehr);
            rec["matrix"] = matrix_to_json(W);
            rec["tie"] = V.tie_flag;
            rec["volume"] = poly_to_json(V.normalized);
            rec["ehrhart"] = poly_to_json(ehr.multivariate);
            rec["hstar"] = univariate_to_json(hstar_at_weights(h, W));
            rec["verify"] = run_verify(W, false, opt.cap).pass() ? "pass"
                                                                 : "fail";
        } catch (const std::exception& e) {
            rec["error"] = e.what();
        }
        out.push_back(std::move(rec));
    }
    if (opt.format == "json") {
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& rec : out) {
            std::cout << "record " << rec["index"].get<size_t>() << ": ";
            if (rec.contains("error"))
                std::cout << "error: " << rec["error"].get<std::string>();
            else
                std::cout << "verify " << rec["verify"].get<std::string>();
            std::cout << "\n";
            if (rec.contains("volume"))
                std::cout << "  volume: " << rec["volume"].dump() << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact polytrope volume, Ehrhart and h* computations"};
    app.require_subcommand(1);

    Options opt;
    std::string depth = "quick";

    auto* kleene = app.add_subcommand("kleene", "all-pairs shortest paths");
    add_common(kleene, opt);

    auto* volume = app.add_subcommand("volume", "multivariate volume polynomial");
    add_common(volume, opt);
    add_poly_flags(volume, opt);

    auto* ehrhart = app.add_subcommand("ehrhart", "Ehrhart polynomial");
    add_common(ehrhart, opt);
    add_poly_flags(ehrhart, opt);

    auto* hstar = app.add_subcommand("hstar", "h*-polynomial");
    add_common(hstar, opt);
    add_poly_flags(hstar, opt);

    auto* verify = app.add_subcommand("verify", "cross-check against the oracle");
    add_common(verify, opt);
    verify->add_flag("--star", opt.star, "replace input by its Kleene star");
    verify->add_option("--depth", depth, "verification depth")
        ->check(CLI::IsMember({"quick", "full"}));

    auto* batch = app.add_subcommand("batch", "process a file of matrices");
    add_common(batch, opt);
    batch->add_flag("--star", opt.star, "replace inputs by their Kleene stars");

    CLI11_PARSE(app, argc, argv);
    if (opt.threads > 0) omp_set_num_threads(opt.threads);

    try {
        if (kleene->parsed()) return cmd_kleene(opt);
        if (volume->parsed()) return cmd_volume(opt);
        if (ehrhart->parsed()) return cmd_ehrhart(opt);
        if (hstar->parsed()) return cmd_hstar(opt);
        if (verify->parsed()) return cmd_verify(opt, depth);
        if (batch->parsed()) return cmd_batch(opt);
    } catch (const NegativeCycleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNegativeCycle;
    } catch (const NotKleeneError& e) {
        std::cerr << "error: " << e.what() << " (use --star)\n";
        return kExitNotKleene;
    } catch (const ResourceCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitOk;
}
