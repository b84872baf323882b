#include "symmsum/cli.hpp"

#include "symmsum/conjectures.hpp"
#include "symmsum/errors.hpp"
#include "symmsum/identities.hpp"
#include "symmsum/matrix_io.hpp"
#include "symmsum/symm.hpp"
#include "symmsum/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <thread>

namespace symmsum::cli {

using nlohmann::json;

namespace {

std::string fmt(const Rational& x) { return to_string(x); }
std::string fmt(double x) { return format_double(x); }

json value_json(const Rational& x) { return to_string(x); }
json value_json(double x) { return x; }

template <typename T>
std::string join(const std::vector<T>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) s += ' ';
        s += fmt(values[i]);
    }
    return s;
}

template <typename T>
json values_json(const std::vector<T>& values) {
    json arr = json::array();
    for (const auto& v : values) arr.push_back(value_json(v));
    return arr;
}

int default_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Brings matrices read from files into one ring: exact unless any is float.
struct RingSet {
    std::vector<Matrix<Rational>> exact;
    std::vector<Matrix<double>> floating;
    bool is_exact() const { return floating.empty(); }
};

RingSet load_matrices(const std::vector<std::string>& paths) {
    std::vector<AnyMatrix> raw;
    for (const auto& p : paths) raw.push_back(read_matrix_file(p));
    const bool any_float = std::any_of(raw.begin(), raw.end(), [](const AnyMatrix& m) {
        return std::holds_alternative<Matrix<double>>(m);
    });
    RingSet set;
    for (const auto& m : raw) {
        if (any_float) {
            set.floating.push_back(to_float(m));
        } else {
            set.exact.push_back(std::get<Matrix<Rational>>(m));
        }
    }
    return set;
}

template <typename F>
auto with_ring(const RingSet& set, F&& f) {
    return set.is_exact() ? f(set.exact) : f(set.floating);
}

void maybe_write(const Command& cmd, const json& j) {
    if (!cmd.out_path.empty()) write_json_file(cmd.out_path, j);
}

int run_symm(const Command& cmd, std::ostream& out) {
    const auto set = load_matrices({cmd.input});
    return with_ring(set, [&](const auto& ms) {
        const auto& a = ms.front();
        using T = typename std::decay_t<decltype(a)>::value_type;
        std::vector<T> values;
        if (cmd.k) {
            if (*cmd.k > a.rows()) {
                throw input_error("k = " + std::to_string(*cmd.k) + " exceeds n = " + std::to_string(a.rows()));
            }
            values.push_back(cmd.method == "minors" ? symm_minors(a, *cmd.k) : symm_all(a)[*cmd.k]);
        } else if (cmd.method == "minors") {
            for (std::size_t k = 0; k <= a.rows(); ++k) values.push_back(symm_minors(a, k));
        } else {
            values = symm_all(a).values;
        }
        out << join(values) << '\n';
        maybe_write(cmd, json{{"values", values_json(values)}});
        return kSuccess;
    });
}

int run_charpoly(const Command& cmd, std::ostream& out) {
    const auto set = load_matrices({cmd.input});
    return with_ring(set, [&](const auto& ms) {
        const auto c = charpoly_coeffs(ms.front());
        out << join(c) << '\n';
        maybe_write(cmd, json{{"coefficients", values_json(c)}, {"order", "ascending"}});
        return kSuccess;
    });
}

int run_reconstruct(const Command& cmd, std::ostream& out) {
    if (!cmd.tau) throw input_error("reconstruct: --tau is required");
    const auto set = load_matrices(cmd.inputs);
    return with_ring(set, [&](const auto& ms) {
        using M = typename std::decay_t<decltype(ms)>::value_type;
        using T = typename M::value_type;
        const MatrixTuple<T> tuple(ms);
        const T rebuilt = reconstruct_symm(tuple, *cmd.tau);
        M sum(tuple.dimension(), tuple.dimension());
        for (const auto& m : ms) sum += m;
        const T direct = symm_k(sum, *cmd.tau);
        out << "reconstructed " << fmt(rebuilt) << '\n' << "direct " << fmt(direct) << '\n';
        maybe_write(cmd, json{{"tau", *cmd.tau}, {"reconstructed", value_json(rebuilt)}, {"direct", value_json(direct)}});
        if constexpr (ring_traits<T>::exact) {
            return rebuilt == direct ? kSuccess : kMathFailure;
        }
        return kSuccess;
    });
}

int run_closed_form(const Command& cmd, std::ostream& out) {
    std::vector<std::string> paths{cmd.a_path, cmd.b_path};
    if (cmd.target == "s3x3") {
        if (cmd.c_path.empty()) throw input_error("closed-form s3x3 needs --c");
        paths.push_back(cmd.c_path);
    }
    const auto set = load_matrices(paths);
    return with_ring(set, [&](const auto& ms) {
        using M = typename std::decay_t<decltype(ms)>::value_type;
        using T = typename M::value_type;
        T closed;
        T direct;
        if (cmd.target == "s2") {
            closed = s2_of_sum(ms[0], ms[1]);
            direct = symm_k(M(ms[0] + ms[1]), 2);
        } else if (cmd.target == "s3") {
            closed = s3_of_sum(ms[0], ms[1]);
            direct = symm_k(M(ms[0] + ms[1]), 3);
        } else if (cmd.target == "s4") {
            closed = s4_of_sum(ms[0], ms[1]);
            direct = symm_k(M(ms[0] + ms[1]), 4);
        } else {
            closed = s3_of_sum3(ms[0], ms[1], ms[2]);
            direct = symm_k(M(ms[0] + ms[1] + ms[2]), 3);
        }
        out << "closed-form " << fmt(closed) << '\n' << "direct " << fmt(direct) << '\n';
        maybe_write(cmd, json{{"identity", cmd.target}, {"closed_form", value_json(closed)}, {"direct", value_json(direct)}});
        if constexpr (ring_traits<T>::exact) {
            return closed == direct ? kSuccess : kMathFailure;
        }
        return kSuccess;
    });
}

int run_witness(const Command& cmd, std::ostream& out) {
    const std::size_t n = cmd.n.value_or(1);
    const Rational x = parse_rational(cmd.x.value_or("0"));
    const auto w = optimality_witness(n, x, cmd.threads);
    const Rational expected(n % 2 == 0 ? 1 : -1);
    out << "witness n=" << n << " x=" << fmt(x) << " residual " << fmt(w.residual.value) << " expected "
        << fmt(expected) << '\n';
    json tuple = json::array();
    for (const auto& m : w.tuple.members()) tuple.push_back(matrix_to_json(m));
    maybe_write(cmd, json{{"n", n},
                          {"x", fmt(x)},
                          {"base", matrix_to_json(w.base)},
                          {"tuple", std::move(tuple)},
                          {"residual", fmt(w.residual.value)}});
    return w.residual.value == expected ? kSuccess : kMathFailure;
}

int run_bmv(const Command& cmd, std::ostream& out) {
    const auto set = load_matrices({cmd.a_path, cmd.b_path});
    return with_ring(set, [&](const auto& ms) {
        const auto c = bmv_coeffs(ms[0], ms[1], cmd.m);
        out << join(c) << '\n';
        maybe_write(cmd, json{{"m", cmd.m}, {"coefficients", values_json(c)}});
        return kSuccess;
    });
}

int run_scan(const Command& cmd, std::ostream& out) {
    ScanConfig cfg;
    cfg.r = cmd.r.value_or(2);
    cfg.m = cmd.m;
    cfg.ks = cmd.ks;
    if (cfg.ks.empty()) {
        for (std::size_t k = 1; k <= cfg.r; ++k) cfg.ks.push_back(k);
    }
    cfg.trials = cmd.trials;
    cfg.seed = cmd.seed;
    cfg.tolerance = cmd.tolerance;
    cfg.ring = parse_scan_ring(cmd.ring);
    cfg.threads = cmd.threads;
    const ScanReport report = scan(cfg);

    out << "positivity-scan r=" << cfg.r << " m=" << cfg.m << " trials=" << cfg.trials << " seed=" << cfg.seed
        << " ring=" << to_string(cfg.ring) << " tolerance=" << fmt(cfg.tolerance) << '\n';
    for (const auto& s : report.per_k) {
        out << "k=" << s.k << " min_coeff=" << fmt(s.min_coeff) << " argmin_trial=" << s.argmin_trial
            << " digest=" << s.argmin_digest << '\n';
    }
    for (const auto& v : report.violations) {
        out << "violation trial=" << v.trial << " k=" << v.k << " index=" << v.index << " value=" << fmt(v.value)
            << " exact=" << v.exact << '\n';
    }
    out << "violations=" << report.violations.size() << " escalations=" << report.escalations << '\n';
    out << "elapsed_seconds=" << fmt(report.elapsed_seconds) << '\n';
    maybe_write(cmd, scan_report_to_json(report));
    return report.violations.empty() ? kSuccess : kMathFailure;
}

int run_verify(const Command& cmd, std::ostream& out) {
    std::vector<VerifyResult> results;
    if (cmd.target == "all") {
        const std::uint64_t trials = cmd.trials_set ? cmd.trials : (cmd.quick ? 25 : 100);
        results = verify_all(trials, cmd.seed, cmd.threads);
    } else {
        VerifyOptions o;
        o.n = cmd.n.value_or(3);
        o.tuple_size = cmd.tuple_size;
        o.tau = cmd.tau;
        o.trials = cmd.trials;
        o.seed = cmd.seed;
        o.threads = cmd.threads;
        if (cmd.x) o.xs.push_back(parse_rational(*cmd.x));
        if (cmd.target == "optimality") {
            const auto xs = o.xs.empty() ? std::vector<Rational>{Rational(0)} : o.xs;
            for (const auto& x : xs) {
                const auto w = optimality_witness(o.n, x, o.threads);
                out << "optimality n=" << o.n << " x=" << fmt(x) << " residual " << fmt(w.residual.value) << '\n';
            }
            o.xs = xs;
        }
        results = verify_identity(cmd.target, o);
    }
    bool ok = true;
    for (const auto& r : results) {
        out << r.summary() << '\n';
        for (const auto& f : r.failures) {
            out << "  trial " << f.trial << (f.tau ? " tau=" + std::to_string(*f.tau) : std::string()) << ": "
                << f.value << '\n';
        }
        ok = ok && r.ok();
    }
    out << (ok ? "all identities hold" : "IDENTITY FAILURE") << " (seed=" << cmd.seed << ")\n";
    maybe_write(cmd, verify_results_to_json(results));
    return ok ? kSuccess : kMathFailure;
}

} // namespace

ParseOutcome parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Command cmd;
    cmd.threads = default_threads();

    CLI::App app{"Elementary symmetric functions of matrix sums: exact identity checks and BMV/positivity scans",
                 "symmsum"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", cmd.seed, "RNG seed (echoed in all output)");
        sub->add_option("--threads", cmd.threads, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--out", cmd.out_path, "write a JSON result to this path");
    };

    auto* symm = app.add_subcommand("symm", "elementary symmetric functions S_0..S_n of a matrix");
    symm->add_option("--input", cmd.input, "matrix JSON file")->required();
    symm->add_option("--k", cmd.k, "only S_k");
    symm->add_option("--method", cmd.method, "newton (trace recurrence) or minors (principal minor sums)")
        ->check(CLI::IsMember({"newton", "minors"}));
    add_common(symm);

    auto* charpoly = app.add_subcommand("charpoly", "coefficients of det(tI - A), ascending degree");
    charpoly->add_option("--input", cmd.input, "matrix JSON file")->required();
    add_common(charpoly);

    auto* verify = app.add_subcommand("verify", "randomized exact verification of an identity");
    std::vector<std::string> identities = verify_identity_names();
    identities.push_back("all");
    verify->add_option("identity", cmd.target, "which identity")->required()->check(CLI::IsMember(identities));
    verify->add_option("--n", cmd.n, "matrix dimension");
    verify->add_option("--N", cmd.tuple_size, "tuple length");
    verify->add_option("--tau", cmd.tau, "order of the symmetric function / submatrix size");
    verify->add_option("--x", cmd.x, "optimality witness parameter (integer or p/q)");
    verify->add_option("--trials", cmd.trials, "random instances per identity")->each([&](const std::string&) {
        cmd.trials_set = true;
    });
    verify->add_flag("--quick", cmd.quick, "with 'all': 25 trials per identity");
    verify->add_option("--tolerance", cmd.tolerance, "unused by exact checks; accepted for uniformity");
    add_common(verify);

    auto* reconstruct = app.add_subcommand("reconstruct", "S_tau of a sum rebuilt from sub-sums");
    reconstruct->add_option("--inputs", cmd.inputs, "matrix JSON files A_1 .. A_N")->required();
    reconstruct->add_option("--tau", cmd.tau, "order tau (N >= tau + 1)")->required();
    add_common(reconstruct);

    auto* closed = app.add_subcommand("closed-form", "closed forms for S_2, S_3, S_4 of sums");
    closed->add_option("which", cmd.target, "s2 | s3 | s3x3 | s4")
        ->required()
        ->check(CLI::IsMember({"s2", "s3", "s3x3", "s4"}));
    closed->add_option("--a", cmd.a_path, "first matrix")->required();
    closed->add_option("--b", cmd.b_path, "second matrix")->required();
    closed->add_option("--c", cmd.c_path, "third matrix (s3x3)");
    add_common(closed);

    auto* witness = app.add_subcommand("witness", "tight counterexample for N = n");
    witness->add_option("--n", cmd.n, "dimension")->required();
    witness->add_option("--x", cmd.x, "base parameter x (integer or p/q)");
    add_common(witness);

    auto* bmv = app.add_subcommand("bmv", "coefficients of Tr((A + tB)^m), ascending degree");
    bmv->add_option("--a", cmd.a_path, "matrix A")->required();
    bmv->add_option("--b", cmd.b_path, "matrix B")->required();
    bmv->add_option("--m", cmd.m, "power m")->required();
    add_common(bmv);

    auto* pscan = app.add_subcommand("positivity-scan", "random PSD scan of S_k((A + tB)^m) coefficients");
    pscan->add_option("--r", cmd.r, "matrix dimension")->required();
    pscan->add_option("--m", cmd.m, "power m")->required();
    pscan->add_option("--k", cmd.ks, "orders k, comma separated (default 1..r)")->delimiter(',');
    pscan->add_option("--trials", cmd.trials, "number of random pairs");
    pscan->add_option("--tolerance", cmd.tolerance, "relative violation threshold")->check(CLI::NonNegativeNumber);
    pscan->add_option("--ring", cmd.ring, "symmetric or hermitian")->check(CLI::IsMember({"symmetric", "hermitian"}));
    add_common(pscan);

    std::vector<const char*> argv{"symmsum"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = &app;
        for (const auto* sub : app.get_subcommands()) target = sub;
        out << target->help();
        return {std::nullopt, kSuccess};
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return {std::nullopt, kSuccess};
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return {std::nullopt, kUsageError};
    }
    cmd.name = app.get_subcommands().front()->get_name();
    return {cmd, kSuccess};
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
    try {
        if (cmd.name == "symm") return run_symm(cmd, out);
        if (cmd.name == "charpoly") return run_charpoly(cmd, out);
        if (cmd.name == "verify") return run_verify(cmd, out);
        if (cmd.name == "reconstruct") return run_reconstruct(cmd, out);
        if (cmd.name == "closed-form") return run_closed_form(cmd, out);
        if (cmd.name == "witness") return run_witness(cmd, out);
        if (cmd.name == "bmv") return run_bmv(cmd, out);
        if (cmd.name == "positivity-scan") return run_scan(cmd, out);
        err << "error: unknown command '" << cmd.name << "'\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const ParseOutcome parsed = parse_args(args, out, err);
    if (!parsed.command) return parsed.exit_code;
    return run(*parsed.command, out, err);
}

} // namespace symmsum::cli
